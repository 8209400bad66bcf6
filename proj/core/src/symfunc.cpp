#include "invschub/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "invschub/error.hpp"

namespace invschub {

TruncatedSymFun::TruncatedSymFun(Polynomial poly, int width, int degree)
    : poly_(std::move(poly)), width_(width), degree_(degree) {
  if (width < 0) throw PreconditionError("negative truncation width");
  if (poly_.num_variables() > width) throw PreconditionError("polynomial uses variables beyond the width");
  for (const auto& [m, c] : poly_.terms())
    if (m.degree() != degree) throw PreconditionError("polynomial is not homogeneous of the stated degree");
  if (!is_symmetric(poly_, width)) throw PreconditionError("polynomial is not symmetric");
}

TruncatedSymFun TruncatedSymFun::retruncate(int n) const {
  if (n > width_) throw PreconditionError("cannot widen a truncation");
  return TruncatedSymFun(truncate(poly_, n), n, degree_);
}

bool operator==(const TruncatedSymFun& a, const TruncatedSymFun& b) {
  int n = std::min(a.width_, b.width_);
  if (a.degree_ != b.degree_ && !(a.poly_.is_zero() && b.poly_.is_zero())) return false;
  return truncate(a.poly_, n) == truncate(b.poly_, n);
}

void MonomialVector::add(const Partition& nu, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

MonomialVector& MonomialVector::operator+=(const MonomialVector& o) {
  for (const auto& [nu, c] : o.coeffs) add(nu, c);
  return *this;
}

MonomialVector& MonomialVector::operator-=(const MonomialVector& o) {
  for (const auto& [nu, c] : o.coeffs) add(nu, -c);
  return *this;
}

MonomialVector MonomialVector::scaled(const BigInt& c) const {
  MonomialVector out;
  out.degree = degree;
  if (c == 0) return out;
  for (const auto& [nu, v] : coeffs) out.coeffs.emplace(nu, v * c);
  return out;
}

BigInt MonomialVector::coefficient(const Partition& nu) const {
  auto it = coeffs.find(nu);
  return it == coeffs.end() ? BigInt(0) : it->second;
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::schur: return "Schur";
    case Basis::schurP: return "SchurP";
    case Basis::schurQ: return "SchurQ";
  }
  return "?";
}

void SymFunExpansion::add(const Partition& lambda, const BigInt& c) {
  if (c == 0) return;
  if (basis != Basis::schur && !lambda.is_strict())
    throw PreconditionError("Schur P/Q index must be strict");
  auto [it, inserted] = coeffs.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

BigInt SymFunExpansion::coefficient(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<Partition, BigInt>> SymFunExpansion::sorted_terms() const {
  std::vector<std::pair<Partition, BigInt>> out(coeffs.rbegin(), coeffs.rend());
  return out;
}

std::string SymFunExpansion::to_text() const {
  if (coeffs.empty()) return "0";
  const char* sym = basis == Basis::schur ? "s" : basis == Basis::schurP ? "P" : "Q";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : sorted_terms()) {
    BigInt a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (a != 1) os << a.get_str() << '*';
    os << sym << to_string(lambda);
  }
  return os.str();
}

std::string SymFunExpansion::to_json() const {
  std::ostringstream os;
  os << "{\"version\":1,\"basis\":\"" << basis_name(basis) << "\",\"terms\":[";
  bool first = true;
  for (const auto& [lambda, c] : sorted_terms()) {
    os << (first ? "" : ",") << "{\"shape\":[";
    for (int i = 0; i < lambda.length(); ++i) os << (i ? "," : "") << lambda[i];
    os << "],\"coeff\":" << c.get_str() << '}';
    first = false;
  }
  os << "]}";
  return os.str();
}

namespace {

struct FillCell {
  int left = -1;   // index of constraining cell to the left, if inside the filled region
  int above = -1;  // index of constraining cell above
  bool diagonal = false;
};

// Enumerates fillings cell by cell; values are 1..max_value and weight(v) gives the variable.
Polynomial enumerate_fillings(const std::vector<FillCell>& cells, int max_value,
                              const std::function<bool(const FillCell&, int, int, int)>& ok,
                              const std::function<int(int)>& variable_of) {
  Polynomial out;
  std::vector<int> vals(cells.size(), 0);
  std::vector<int> expo(kMaxVariables + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      Monomial m;
      for (int i = 1; i <= kMaxVariables; ++i)
        if (expo[i]) m.set_exponent(i, expo[i]);
      out.add_term(m, 1);
      return;
    }
    const FillCell& c = cells[k];
    int lo = 1;
    if (c.left >= 0) lo = std::max(lo, vals[c.left]);
    if (c.above >= 0) lo = std::max(lo, vals[c.above]);
    for (int v = lo; v <= max_value; ++v) {
      int l = c.left >= 0 ? vals[c.left] : 0;
      int a = c.above >= 0 ? vals[c.above] : 0;
      if (!ok(c, v, l, a)) continue;
      vals[k] = v;
      ++expo[variable_of(v)];
      rec(k + 1);
      --expo[variable_of(v)];
    }
  };
  rec(0);
  return out;
}

std::vector<FillCell> skew_fill_cells(const Partition& lambda, const Partition& mu) {
  std::vector<FillCell> cells;
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = mu[i]; j < lambda[i]; ++j) {
      FillCell c;
      auto l = index.find({i, j - 1});
      if (l != index.end()) c.left = l->second;
      auto a = index.find({i - 1, j});
      if (a != index.end()) c.above = a->second;
      index[{i, j}] = static_cast<int>(cells.size());
      cells.push_back(c);
    }
  }
  return cells;
}

}  // namespace

TruncatedSymFun skew_schur(const Partition& lambda, const Partition& mu, int n) {
  if (!lambda.contains(mu)) throw PreconditionError("skew shape needs mu inside lambda");
  auto cells = skew_fill_cells(lambda, mu);
  auto ok = [](const FillCell& c, int v, int, int a) { return !(c.above >= 0 && v <= a); };
  Polynomial p = enumerate_fillings(cells, n, ok, [](int v) { return v; });
  return TruncatedSymFun(std::move(p), n, lambda.size() - mu.size());
}

TruncatedSymFun schur_to_monomials(const Partition& lambda, int n) { return skew_schur(lambda, {}, n); }

TruncatedSymFun schurP_to_monomials(const StrictPartition& lambda, int n) {
  // Encode k' as 2k-1 and k as 2k, so the order -1 < 1 < -2 < 2 < ... is numeric.
  std::vector<FillCell> cells;
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = i; j < i + lambda[i]; ++j) {
      FillCell c;
      c.diagonal = i == j;
      auto l = index.find({i, j - 1});
      if (l != index.end()) c.left = l->second;
      auto a = index.find({i - 1, j});
      if (a != index.end()) c.above = a->second;
      index[{i, j}] = static_cast<int>(cells.size());
      cells.push_back(c);
    }
  }
  auto ok = [](const FillCell& c, int v, int l, int a) {
    bool marked = v % 2 == 1;
    if (c.diagonal && marked) return false;
    if (c.left >= 0 && l == v && marked) return false;
    if (c.above >= 0 && a == v && !marked) return false;
    return true;
  };
  Polynomial p = enumerate_fillings(cells, 2 * n, ok, [](int v) { return (v + 1) / 2; });
  return TruncatedSymFun(std::move(p), n, lambda.size());
}

Polynomial fundamental_quasisymmetric(int len, const std::set<int>& s, int n) {
  Polynomial out;
  std::vector<int> seq(len);
  std::function<void(int, int)> rec = [&](int k, int lo) {
    if (k == len) {
      Monomial m;
      for (int v : seq) m.set_exponent(v, m.exponent(v) + 1);
      out.add_term(m, 1);
      return;
    }
    int start = (k > 0 && s.count(k)) ? lo + 1 : lo;
    for (int v = std::max(start, 1); v <= n; ++v) {
      seq[k] = v;
      rec(k + 1, v);
    }
  };
  rec(0, 1);
  return out;
}

namespace {

using Shape = std::vector<int>;

void gen_horizontal_strips(const Shape& cur, const Shape& outer, int remaining, std::size_t row,
                           Shape& next, std::vector<Shape>& out) {
  if (row == outer.size()) {
    if (remaining == 0) out.push_back(next);
    return;
  }
  int base = row < cur.size() ? cur[row] : 0;
  int cap = outer[row];
  if (row > 0) cap = std::min(cap, row - 1 < cur.size() ? cur[row - 1] : 0);
  for (int v = base; v <= cap && v - base <= remaining; ++v) {
    next[row] = v;
    gen_horizontal_strips(cur, outer, remaining - (v - base), row + 1, next, out);
  }
}

Shape padded(const Partition& p, std::size_t len) {
  Shape s(len, 0);
  for (int i = 0; i < p.length() && static_cast<std::size_t>(i) < len; ++i) s[i] = p[i];
  return s;
}

// Number of SSYT of shape outer / cur with content comp[k..].
BigInt count_ssyt(const Shape& cur, const Shape& outer, const std::vector<int>& comp, std::size_t k,
                  std::map<std::pair<Shape, std::size_t>, BigInt>& memo) {
  if (k == comp.size()) return cur == outer ? BigInt(1) : BigInt(0);
  auto key = std::make_pair(cur, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<Shape> nexts;
  Shape next = cur;
  gen_horizontal_strips(cur, outer, comp[k], 0, next, nexts);
  BigInt total = 0;
  for (const Shape& s : nexts) total += count_ssyt(s, outer, comp, k + 1, memo);
  memo.emplace(key, total);
  return total;
}

// Valid markings of the shifted strip outer/cur filled with one letter.
long count_markings(const Shape& cur, const Shape& next) {
  std::vector<std::pair<int, int>> cells;
  std::set<std::pair<int, int>> in_strip;
  for (std::size_t i = 0; i < next.size(); ++i) {
    for (int j = static_cast<int>(i) + cur[i]; j < static_cast<int>(i) + next[i]; ++j) {
      cells.emplace_back(static_cast<int>(i), j);
      in_strip.insert({static_cast<int>(i), j});
    }
  }
  // An unmarked cell directly above another strip cell is never allowed.
  std::map<std::pair<int, int>, bool> marked;
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [i, j] = cells[k];
    for (int mk = 0; mk < 2; ++mk) {
      bool m = mk == 1;
      if (m && i == j) continue;
      if (in_strip.count({i, j - 1})) {
        // Only the first strip cell of a row may be marked; nothing follows an unmarked cell but unmarked.
        if (m) continue;
      }
      if (in_strip.count({i - 1, j}) && !marked[{i - 1, j}]) continue;
      marked[{i, j}] = m;
      rec(k + 1);
    }
    marked.erase({i, j});
  };
  rec(0);
  return count;
}

void gen_shifted_extensions(const Shape& cur, const Shape& outer, int remaining, std::size_t row,
                            Shape& next, std::vector<Shape>& out) {
  if (row == outer.size()) {
    if (remaining == 0) out.push_back(next);
    return;
  }
  int base = cur[row];
  int cap = outer[row];
  if (row > 0 && next[row - 1] > 0) cap = std::min(cap, next[row - 1] - 1);
  if (row > 0 && next[row - 1] == 0) cap = 0;
  for (int v = base; v <= cap && v - base <= remaining; ++v) {
    next[row] = v;
    gen_shifted_extensions(cur, outer, remaining - (v - base), row + 1, next, out);
  }
  next[row] = cur[row];
}

BigInt count_ssmt(const Shape& cur, const Shape& outer, const std::vector<int>& comp, std::size_t k,
                  std::map<std::pair<Shape, std::size_t>, BigInt>& memo) {
  if (k == comp.size()) return cur == outer ? BigInt(1) : BigInt(0);
  auto key = std::make_pair(cur, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<Shape> nexts;
  Shape next = cur;
  gen_shifted_extensions(cur, outer, comp[k], 0, next, nexts);
  BigInt total = 0;
  for (const Shape& s : nexts) {
    long w = count_markings(cur, s);
    if (w) total += BigInt(w) * count_ssmt(s, outer, comp, k + 1, memo);
  }
  memo.emplace(key, total);
  return total;
}

std::mutex g_cache_mutex;
std::map<Partition, MonomialVector> g_schur_cache;
std::map<StrictPartition, MonomialVector> g_schurP_cache;

}  // namespace

MonomialVector skew_schur_monomial_vector(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) throw PreconditionError("skew shape needs mu inside lambda");
  MonomialVector out;
  out.degree = lambda.size() - mu.size();
  std::size_t rows = lambda.length();
  Shape outer = padded(lambda, rows), inner = padded(mu, rows);
  std::map<std::pair<Shape, std::size_t>, BigInt> memo;
  for (const Partition& nu : partitions(out.degree)) {
    memo.clear();
    out.add(nu, count_ssyt(inner, outer, nu.parts(), 0, memo));
  }
  return out;
}

MonomialVector schur_monomial_vector(const Partition& lambda) {
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_schur_cache.find(lambda);
    if (it != g_schur_cache.end()) return it->second;
  }
  MonomialVector v = skew_schur_monomial_vector(lambda, {});
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_schur_cache.emplace(lambda, v);
  return v;
}

MonomialVector schurP_monomial_vector(const StrictPartition& lambda) {
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_schurP_cache.find(lambda);
    if (it != g_schurP_cache.end()) return it->second;
  }
  MonomialVector out;
  out.degree = lambda.size();
  std::size_t rows = lambda.length();
  Shape outer = padded(lambda.as_partition(), rows), inner(rows, 0);
  std::map<std::pair<Shape, std::size_t>, BigInt> memo;
  for (const Partition& nu : partitions(out.degree)) {
    memo.clear();
    out.add(nu, count_ssmt(inner, outer, nu.parts(), 0, memo));
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_schurP_cache.emplace(lambda, out);
  return out;
}

MonomialVector fundamental_monomial_vector(int len, const std::set<int>& s) {
  MonomialVector out;
  out.degree = len;
  for (const Partition& nu : partitions(len)) {
    std::set<int> sums;
    int acc = 0;
    for (int p : nu.parts()) sums.insert(acc += p);
    bool ok = std::includes(sums.begin(), sums.end(), s.begin(), s.end());
    if (ok) out.add(nu, 1);
  }
  return out;
}

MonomialVector monomial_vector(const TruncatedSymFun& f) {
  if (f.width() < f.degree())
    throw PreconditionError("monomial extraction needs width >= degree");
  MonomialVector out;
  out.degree = f.degree();
  for (const Partition& nu : partitions(f.degree()))
    out.add(nu, f.poly().coefficient(Monomial::from_exponents(nu.parts())));
  return out;
}

TruncatedSymFun to_truncation(const MonomialVector& v, int width) {
  Polynomial p;
  for (const auto& [nu, c] : v.coeffs) {
    if (nu.length() > width) continue;
    std::vector<int> e(width, 0);
    for (int i = 0; i < nu.length(); ++i) e[i] = nu[i];
    std::sort(e.begin(), e.end());
    do {
      p.add_term(Monomial::from_exponents(e), c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return TruncatedSymFun(std::move(p), width, v.degree);
}

MonomialVector to_monomial_vector(const SymFunExpansion& e) {
  MonomialVector out;
  bool have_degree = false;
  for (const auto& [lambda, c] : e.coeffs) {
    MonomialVector b;
    if (e.basis == Basis::schur) {
      b = schur_monomial_vector(lambda);
    } else {
      b = schurP_monomial_vector(StrictPartition(lambda.parts()));
      if (e.basis == Basis::schurQ) b = b.scaled(BigInt(1) << lambda.length());
    }
    if (have_degree && b.degree != out.degree) throw PreconditionError("inhomogeneous expansion");
    out.degree = b.degree;
    have_degree = true;
    out += b.scaled(c);
  }
  return out;
}

namespace {

SymFunExpansion triangular_solve(const MonomialVector& v, Basis basis) {
  SymFunExpansion out;
  out.basis = basis;
  MonomialVector r = v;
  for (const Partition& nu : partitions(v.degree)) {
    BigInt c = r.coefficient(nu);
    if (c == 0) continue;
    MonomialVector b;
    if (basis == Basis::schur) {
      b = schur_monomial_vector(nu);
    } else {
      if (!nu.is_strict())
        throw NotInSpan("residual has leading monomial m" + to_string(nu) +
                        " with non-strict index; not in the Schur P span");
      b = schurP_monomial_vector(StrictPartition(nu.parts()));
    }
    // Unitriangularity: leading coefficient 1 and nothing lex-above nu.
    INVSCHUB_CHECK(b.coefficient(nu) == 1 && b.coeffs.rbegin()->first == nu,
                   "basis is not unitriangular at " + to_string(nu));
    r -= b.scaled(c);
    out.add(nu, c);
  }
  if (!r.coeffs.empty()) throw NotInSpan("nonzero residual after triangular solve");
  return out;
}

}  // namespace

SymFunExpansion expand_in_schurP(const MonomialVector& v) { return triangular_solve(v, Basis::schurP); }

SymFunExpansion expand_in_schurP(const TruncatedSymFun& f, int degree) {
  if (f.degree() != degree && !f.poly().is_zero()) throw PreconditionError("degree mismatch");
  return expand_in_schurP(monomial_vector(f));
}

SymFunExpansion expand_in_schur(const MonomialVector& v) { return triangular_solve(v, Basis::schur); }

SymFunExpansion schurP_to_schur(const SymFunExpansion& e) { return expand_in_schur(to_monomial_vector(e)); }

SymFunExpansion schurQ_scale(const SymFunExpansion& e, int kappa) {
  if (e.basis != Basis::schurP) throw PreconditionError("schurQ_scale expects a Schur P expansion");
  SymFunExpansion out;
  out.basis = Basis::schurQ;
  for (const auto& [lambda, c] : e.coeffs) {
    int shift = kappa - lambda.length();
    BigInt q;
    if (shift >= 0) {
      q = c << shift;
    } else {
      BigInt d = BigInt(1) << -shift;
      if (c % d != 0)
        throw Falsification("Q-expansion coefficient of " + to_string(lambda) + " is not integral");
      q = c / d;
    }
    out.add(lambda, q);
  }
  return out;
}

CellSet skew_cells(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) throw PreconditionError("skew shape needs mu inside lambda");
  CellSet cells;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = mu[i]; j < lambda[i]; ++j) cells.insert({i + 1, j + 1});
  return cells;
}

bool cells_equivalent(const CellSet& a, const CellSet& b) {
  if (a.size() != b.size()) return false;
  std::map<int, std::set<int>> ra, rb;
  for (auto [r, c] : a) ra[r].insert(c);
  for (auto [r, c] : b) rb[r].insert(c);
  if (ra.size() != rb.size()) return false;
  std::vector<int> rows_a, rows_b;
  for (auto& kv : ra) rows_a.push_back(kv.first);
  for (auto& kv : rb) rows_b.push_back(kv.first);
  // Column signatures of b: the sorted set of row positions occupied.
  std::map<int, std::vector<int>> cols_b;
  for (std::size_t k = 0; k < rows_b.size(); ++k)
    for (int c : rb[rows_b[k]]) cols_b[c].push_back(static_cast<int>(k));
  std::multiset<std::vector<int>> sig_b;
  for (auto& [c, rows] : cols_b) sig_b.insert(rows);

  std::vector<int> assign(rows_a.size(), -1);
  std::vector<bool> used(rows_b.size(), false);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == rows_a.size()) {
      std::map<int, std::vector<int>> cols_a;
      for (std::size_t t = 0; t < rows_a.size(); ++t)
        for (int c : ra[rows_a[t]]) cols_a[c].push_back(assign[t]);
      std::multiset<std::vector<int>> sig_a;
      for (auto& [c, rows] : cols_a) {
        std::sort(rows.begin(), rows.end());
        sig_a.insert(rows);
      }
      return sig_a == sig_b;
    }
    for (std::size_t t = 0; t < rows_b.size(); ++t) {
      if (used[t] || rb[rows_b[t]].size() != ra[rows_a[k]].size()) continue;
      used[t] = true;
      assign[k] = static_cast<int>(t);
      if (rec(k + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return rec(0);
}

}  // namespace invschub
