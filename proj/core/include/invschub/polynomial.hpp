#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "invschub/permutation.hpp"

namespace invschub {

using BigInt = mpz_class;

constexpr int kMaxVariables = 32;

// Exponent vector of x_1 ... x_32.  Ordering is lexicographic on (e_1, e_2, ...).
class Monomial {
 public:
  Monomial() { e_.fill(0); }
  static Monomial from_exponents(const std::vector<int>& exps);
  static Monomial variable(int i);

  // 1-based variable index.
  int exponent(int i) const { return (i >= 1 && i <= kMaxVariables) ? e_[i - 1] : 0; }
  void set_exponent(int i, int e);
  int degree() const;
  // Largest i with a nonzero exponent, 0 for the constant monomial.
  int num_variables() const;
  std::vector<int> exponents() const;

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e_ <=> b.e_; }

 private:
  std::array<std::uint8_t, kMaxVariables> e_;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT: implicit constants read naturally in formulas
  static Polynomial constant(const BigInt& c);
  static Polynomial variable(int i);
  static Polynomial monomial(const std::vector<int>& exps, const BigInt& c = 1);
  static Polynomial monomial(const Monomial& m, const BigInt& c = 1);

  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const BigInt& c);

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  int num_variables() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const BigInt& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
  friend Polynomial operator*(const BigInt& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // "x1^2 + x1*x2", terms in decreasing lex order.
  std::string to_string() const;
  // (exponent vector, coefficient) pairs in increasing lex order.
  std::vector<std::pair<std::vector<int>, BigInt>> machine_terms() const;

 private:
  std::map<Monomial, BigInt> terms_;
};

Polynomial pow(const Polynomial& f, int k);

// x_i -> x_{sigma(i)}; sigma must lie in S_infinity.
Polynomial act(const Permutation& sigma, const Polynomial& f);
Polynomial swap_adjacent(int i, const Polynomial& f);

Polynomial divided_difference(int i, const Polynomial& f);
Polynomial isobaric(int i, const Polynomial& f);

enum class OperatorKind { divided, isobaric };
// Applies op_{a1} op_{a2} ... op_{ak} to f, rightmost first.
Polynomial apply_word(OperatorKind kind, const Word& word, const Polynomial& f);
// Uses one reduced word of w.
Polynomial op_word(OperatorKind kind, const Permutation& w, const Polynomial& f);

struct Term {
  BigInt coeff;  // zero for lt(0)
  Monomial mono;
};
// Lexicographically least exponent vector with nonzero coefficient.
Term least_term(const Polynomial& f);

// Exact quotient f / (x_i - x_j); throws InvariantViolation if inexact.
Polynomial divide_by_difference(const Polynomial& f, int i, int j);
// Delta_n = prod_{i<j<=n} (x_i - x_j).
Polynomial vandermonde(int n);
// x^{delta_n} = x_1^{n-1} ... x_{n-1}.
Polynomial x_delta(int n);
// Sets x_i = 0 for i > n.
Polynomial truncate(const Polynomial& f, int n);
bool is_symmetric(const Polynomial& f, int n);

}  // namespace invschub
