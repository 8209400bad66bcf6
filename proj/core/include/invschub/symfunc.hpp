#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "invschub/partition.hpp"
#include "invschub/polynomial.hpp"

namespace invschub {

// rho_n of a homogeneous symmetric function.
class TruncatedSymFun {
 public:
  TruncatedSymFun() = default;
  // Throws PreconditionError unless poly is symmetric in x_1..x_width, homogeneous of the
  // given degree, and free of other variables.
  TruncatedSymFun(Polynomial poly, int width, int degree);

  const Polynomial& poly() const { return poly_; }
  int width() const { return width_; }
  int degree() const { return degree_; }
  TruncatedSymFun retruncate(int n) const;

  // Equal at the common width after re-truncation.
  friend bool operator==(const TruncatedSymFun& a, const TruncatedSymFun& b);

 private:
  Polynomial poly_;
  int width_ = 0;
  int degree_ = 0;
};

// Coefficients of the monomial symmetric functions m_nu, nu a partition of degree.
struct MonomialVector {
  int degree = 0;
  std::map<Partition, BigInt> coeffs;

  void add(const Partition& nu, const BigInt& c);
  MonomialVector& operator+=(const MonomialVector& o);
  MonomialVector& operator-=(const MonomialVector& o);
  MonomialVector scaled(const BigInt& c) const;
  BigInt coefficient(const Partition& nu) const;
  friend bool operator==(const MonomialVector&, const MonomialVector&) = default;
};

enum class Basis { schur, schurP, schurQ };
std::string basis_name(Basis b);

struct SymFunExpansion {
  Basis basis = Basis::schurP;
  std::map<Partition, BigInt> coeffs;

  void add(const Partition& lambda, const BigInt& c);
  BigInt coefficient(const Partition& lambda) const;
  // Decreasing lexicographic order, a linear extension of decreasing dominance.
  std::vector<std::pair<Partition, BigInt>> sorted_terms() const;
  std::string to_text() const;
  std::string to_json() const;
  friend bool operator==(const SymFunExpansion&, const SymFunExpansion&) = default;
};

// Generating functions of tableaux with entries <= n.
TruncatedSymFun schur_to_monomials(const Partition& lambda, int n);
TruncatedSymFun schurP_to_monomials(const StrictPartition& lambda, int n);
TruncatedSymFun skew_schur(const Partition& lambda, const Partition& mu, int n);
// f_{len,S} in n variables: sum over i_1 <= ... <= i_len with i_j < i_{j+1} for j in S.
Polynomial fundamental_quasisymmetric(int len, const std::set<int>& s, int n);

// Width-free monomial coefficients by strip-adding recursions.
MonomialVector schur_monomial_vector(const Partition& lambda);
MonomialVector schurP_monomial_vector(const StrictPartition& lambda);
MonomialVector skew_schur_monomial_vector(const Partition& lambda, const Partition& mu);
MonomialVector fundamental_monomial_vector(int len, const std::set<int>& s);

// Requires width >= degree.
MonomialVector monomial_vector(const TruncatedSymFun& f);
TruncatedSymFun to_truncation(const MonomialVector& v, int width);
MonomialVector to_monomial_vector(const SymFunExpansion& e);

// Unitriangular solves; NotInSpan on a nonzero residual.
SymFunExpansion expand_in_schurP(const MonomialVector& v);
SymFunExpansion expand_in_schurP(const TruncatedSymFun& f, int degree);
SymFunExpansion expand_in_schur(const MonomialVector& v);
SymFunExpansion schurP_to_schur(const SymFunExpansion& e);

// P-expansion to Q-expansion for G = 2^kappa F; Falsification if not integral.
SymFunExpansion schurQ_scale(const SymFunExpansion& e, int kappa);

// Skew shapes as explicit position sets (row, column).
using CellSet = std::set<std::pair<int, int>>;
CellSet skew_cells(const Partition& lambda, const Partition& mu);
// True when b arises from a by permuting rows and columns.
bool cells_equivalent(const CellSet& a, const CellSet& b);

}  // namespace invschub
