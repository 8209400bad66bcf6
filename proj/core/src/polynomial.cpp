#include "invschub/polynomial.hpp"

#include <sstream>

#include "invschub/error.hpp"

namespace invschub {

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] != 0) m.set_exponent(static_cast<int>(i) + 1, exps[i]);
  }
  return m;
}

Monomial Monomial::variable(int i) {
  Monomial m;
  m.set_exponent(i, 1);
  return m;
}

void Monomial::set_exponent(int i, int e) {
  if (i < 1 || i > kMaxVariables) throw PreconditionError("variable index out of range");
  if (e < 0 || e > 255) throw PreconditionError("exponent out of range");
  e_[i - 1] = static_cast<std::uint8_t>(e);
}

int Monomial::degree() const {
  int d = 0;
  for (auto x : e_) d += x;
  return d;
}

int Monomial::num_variables() const {
  for (int i = kMaxVariables; i >= 1; --i)
    if (e_[i - 1]) return i;
  return 0;
}

std::vector<int> Monomial::exponents() const {
  std::vector<int> v(e_.begin(), e_.begin() + num_variables());
  return v;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (int i = 0; i < kMaxVariables; ++i) {
    int e = e_[i] + o.e_[i];
    if (e > 255) throw PreconditionError("exponent overflow");
    m.e_[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace(Monomial(), BigInt(c));
}

Polynomial Polynomial::constant(const BigInt& c) {
  Polynomial p;
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(int i) { return monomial(Monomial::variable(i)); }

Polynomial Polynomial::monomial(const std::vector<int>& exps, const BigInt& c) {
  return monomial(Monomial::from_exponents(exps), c);
}

Polynomial Polynomial::monomial(const Monomial& m, const BigInt& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

BigInt Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d >= 0 && m.degree() != d) return false;
    d = m.degree();
  }
  return true;
}

int Polynomial::num_variables() const {
  int n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.num_variables());
  return n;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, v] : p.terms_) v = -v;
  return p;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = m.num_variables() == 0;
    bool wrote = false;
    if (a != 1 || is_const) {
      os << a.get_str();
      wrote = true;
    }
    for (int i = 1; i <= m.num_variables(); ++i) {
      int e = m.exponent(i);
      if (!e) continue;
      if (wrote) os << '*';
      os << 'x' << i;
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

std::vector<std::pair<std::vector<int>, BigInt>> Polynomial::machine_terms() const {
  std::vector<std::pair<std::vector<int>, BigInt>> out;
  for (const auto& [m, c] : terms_) out.emplace_back(m.exponents(), c);
  return out;
}

Polynomial pow(const Polynomial& f, int k) {
  Polynomial out = 1;
  for (int i = 0; i < k; ++i) out *= f;
  return out;
}

Polynomial act(const Permutation& sigma, const Polynomial& f) {
  if (!sigma.in_s_infinity()) throw PreconditionError("variable action needs sigma in S_infinity");
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    Monomial r;
    for (int i = 1; i <= m.num_variables(); ++i) {
      int e = m.exponent(i);
      if (e) r.set_exponent(sigma(i), e);
    }
    out.add_term(r, c);
  }
  return out;
}

Polynomial swap_adjacent(int i, const Polynomial& f) {
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    Monomial r = m;
    r.set_exponent(i, m.exponent(i + 1));
    r.set_exponent(i + 1, m.exponent(i));
    out.add_term(r, c);
  }
  return out;
}

Polynomial divided_difference(int i, const Polynomial& f) {
  if (i < 1) throw PreconditionError("divided difference index must be positive");
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    int p = m.exponent(i), q = m.exponent(i + 1);
    if (p == q) continue;
    // (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p) / (x_i - x_{i+1})
    int hi = std::max(p, q), lo = std::min(p, q);
    BigInt sign = p > q ? BigInt(c) : BigInt(-c);
    for (int k = 0; k < hi - lo; ++k) {
      Monomial r = m;
      r.set_exponent(i, hi - 1 - k);
      r.set_exponent(i + 1, lo + k);
      out.add_term(r, sign);
    }
  }
  return out;
}

Polynomial isobaric(int i, const Polynomial& f) {
  Polynomial out = divided_difference(i, Polynomial::variable(i) * f);
#ifndef NDEBUG
  Polynomial alt = f + Polynomial::variable(i + 1) * divided_difference(i, f);
  INVSCHUB_CHECK(alt == out, "isobaric formulas disagree");
#endif
  return out;
}

Polynomial apply_word(OperatorKind kind, const Word& word, const Polynomial& f) {
  Polynomial out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out = kind == OperatorKind::divided ? divided_difference(*it, out) : isobaric(*it, out);
    if (out.is_zero()) break;
  }
  return out;
}

Polynomial op_word(OperatorKind kind, const Permutation& w, const Polynomial& f) {
  if (!w.in_s_infinity()) throw PreconditionError("operator word needs w in S_infinity");
  return apply_word(kind, reduced_word(w), f);
}

Term least_term(const Polynomial& f) {
  if (f.is_zero()) return {BigInt(0), Monomial()};
  const auto& [m, c] = *f.terms().begin();
  return {c, m};
}

Polynomial divide_by_difference(const Polynomial& f, int i, int j) {
  if (i == j) throw PreconditionError("division by zero polynomial");
  // Peel off the highest power of x_i: c x_i^d = (x_i - x_j) c x_i^{d-1} + x_j c x_i^{d-1}.
  std::map<int, Polynomial> levels;
  int top = 0;
  for (const auto& [m, c] : f.terms()) {
    int d = m.exponent(i);
    levels[d].add_term(m, c);
    top = std::max(top, d);
  }
  Polynomial q;
  Polynomial xj = Polynomial::variable(j);
  for (int d = top; d >= 1; --d) {
    auto it = levels.find(d);
    if (it == levels.end() || it->second.is_zero()) continue;
    Polynomial lowered;
    for (const auto& [m, c] : it->second.terms()) {
      Monomial r = m;
      r.set_exponent(i, d - 1);
      lowered.add_term(r, c);
    }
    q += lowered;
    levels[d - 1] += xj * lowered;
  }
  if (!levels[0].is_zero()) throw InvariantViolation("inexact division by x_i - x_j");
  return q;
}

Polynomial vandermonde(int n) {
  Polynomial out = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out *= Polynomial::variable(i) - Polynomial::variable(j);
  return out;
}

Polynomial x_delta(int n) {
  std::vector<int> e;
  for (int i = 1; i < n; ++i) e.push_back(n - i);
  return Polynomial::monomial(e);
}

Polynomial truncate(const Polynomial& f, int n) {
  Polynomial out;
  for (const auto& [m, c] : f.terms())
    if (m.num_variables() <= n) out.add_term(m, c);
  return out;
}

bool is_symmetric(const Polynomial& f, int n) {
  for (int i = 1; i < n; ++i)
    if (swap_adjacent(i, f) != f) return false;
  return true;
}

}  // namespace invschub
