#include "invschub/schubert.hpp"

#include <deque>
#include <functional>
#include <map>
#include <limits>
#include <mutex>
#include <optional>
#include <set>

#include "invschub/error.hpp"

namespace invschub {

namespace {

std::mutex g_schubert_mutex;
std::map<Permutation, Polynomial> g_schubert_cache;

std::mutex g_inv_mutex;
std::map<Involution, Polynomial> g_inv_cache;

Polynomial x_pair(int i, int j) {
  return i == j ? Polynomial::variable(i) : Polynomial::variable(i) + Polynomial::variable(j);
}

Polynomial pi_longest(int n, const Polynomial& f) {
  return apply_word(OperatorKind::isobaric, reduced_word(Permutation::longest(n)), f);
}

int positive_offset(const Permutation& w) {
  if (w.is_identity()) return 0;
  int lo = w.min_support();
  return lo < 1 ? 1 - lo : 0;
}

}  // namespace

Polynomial schubert_poly_at(const Permutation& w, int n) {
  if (!w.in_s_infinity()) throw PreconditionError("Schubert polynomial needs w in S_infinity");
  if (!w.is_identity() && n < w.max_support()) throw PreconditionError("n below the support of w");
  if (n < 1) n = 1;
  Permutation v = w.inverse() * Permutation::longest(n);
  return apply_word(OperatorKind::divided, reduced_word(v), x_delta(n));
}

Polynomial schubert_poly(const Permutation& w) {
  if (!w.in_s_infinity()) throw PreconditionError("Schubert polynomial needs w in S_infinity");
  if (w.is_identity()) return 1;
  {
    std::lock_guard<std::mutex> lock(g_schubert_mutex);
    auto it = g_schubert_cache.find(w);
    if (it != g_schubert_cache.end()) return it->second;
  }
  int n = w.max_support();
  Polynomial p = schubert_poly_at(w, n);
#ifndef NDEBUG
  INVSCHUB_CHECK(p == schubert_poly_at(w, n + 1), "Schubert polynomial depends on n");
#endif
  std::lock_guard<std::mutex> lock(g_schubert_mutex);
  g_schubert_cache.emplace(w, p);
  return p;
}

Polynomial dominant_inv_schubert(const Involution& y) {
  if (!y.perm().in_s_infinity()) throw PreconditionError("involution must lie in I_infinity");
  if (!is_dominant(y)) throw PreconditionError("involution is not dominant (contains 132)");
  Polynomial p = 1;
  for (auto [i, j] : inv_diagram(y)) p *= x_pair(i, j);
  return p;
}

namespace {

Polynomial inv_by_atoms(const Involution& y) {
  Polynomial p;
  for (const Permutation& w : atoms(y, 1 << 20)) p += schubert_poly(w);
  return p;
}

bool cached_inv(const Involution& y, Polynomial& out) {
  std::lock_guard<std::mutex> lock(g_inv_mutex);
  auto it = g_inv_cache.find(y);
  if (it == g_inv_cache.end()) return false;
  out = it->second;
  return true;
}

void store_inv(const Involution& y, const Polynomial& p) {
  std::lock_guard<std::mutex> lock(g_inv_mutex);
  g_inv_cache.emplace(y, p);
}

constexpr std::size_t kSearchCap = 20000;

// Climbs y -> s o y o s along ascents until a dominant or cached involution appears,
// then applies divided differences back down the path.
Polynomial inv_by_recursion(const Involution& y) {
  Polynomial found;
  if (cached_inv(y, found)) return found;
  int n = std::max(2, y.is_identity() ? 1 : y.perm().max_support());

  std::map<Involution, std::pair<Involution, int>> parent;  // ancestor -> (child, i)
  std::deque<Involution> queue{y};
  std::optional<Involution> target;
  bool from_cache = false;
  while (!queue.empty()) {
    Involution z = queue.front();
    queue.pop_front();
    if (cached_inv(z, found)) {
      target = z;
      from_cache = true;
      break;
    }
    if (is_dominant(z)) {
      target = z;
      break;
    }
    if (parent.size() > kSearchCap) {
      // Fall back to a single chain; w_n is dominant and above everything in I_n.
      queue.clear();
      Involution c = z;
      while (!is_dominant(c)) {
        int i = 1;
        while (c(i) > c(i + 1)) ++i;
        Involution up = demazure_conjugate(c, i);
        parent.emplace(up, std::make_pair(c, i));
        c = up;
      }
      target = c;
      break;
    }
    for (int i = 1; i < n; ++i) {
      if (z(i) > z(i + 1)) continue;
      Involution up = demazure_conjugate(z, i);
      if (up == y || parent.count(up)) continue;
      parent.emplace(up, std::make_pair(z, i));
      queue.push_back(up);
    }
  }
  INVSCHUB_CHECK(target.has_value(), "no dominant ancestor found");
  Polynomial p = from_cache ? found : dominant_inv_schubert(*target);
  Involution cur = *target;
  while (cur != y) {
    auto [child, i] = parent.at(cur);
    p = divided_difference(i, p);
    cur = child;
    store_inv(cur, p);
  }
  store_inv(y, p);
  return p;
}

}  // namespace

Polynomial inv_schubert_poly(const Involution& y, InvMethod method) {
  if (!y.perm().in_s_infinity()) throw PreconditionError("involution must lie in I_infinity");
  return method == InvMethod::atom_sum ? inv_by_atoms(y) : inv_by_recursion(y);
}

namespace {

// Words whose letters split into strictly decreasing runs of sizes nu_1, nu_2, ...; the runs
// are peeled from the right, so each peeled run is increasing.
template <class T>
class RunCounter {
 public:
  using Descents = std::function<std::set<int>(const T&)>;
  using Pred = std::function<T(const T&, int)>;
  RunCounter(Descents des, Pred pred) : des_(std::move(des)), pred_(std::move(pred)) {}

  BigInt count(const T& z, const std::vector<int>& nu) {
    memo_.clear();
    nu_ = nu;
    return blocks(z, static_cast<int>(nu.size()));
  }

 private:
  BigInt blocks(const T& z, int k) {
    if (k == 0) return z == T() ? BigInt(1) : BigInt(0);
    auto key = std::make_pair(z, k);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    BigInt total = peel(z, nu_[k - 1], std::numeric_limits<int>::min(), k);
    memo_.emplace(key, total);
    return total;
  }

  BigInt peel(const T& z, int remaining, int min_letter, int k) {
    if (remaining == 0) return blocks(z, k - 1);
    BigInt total = 0;
    for (int d : des_(z))
      if (d >= min_letter) total += peel(pred_(z, d), remaining - 1, d + 1, k);
    return total;
  }

  Descents des_;
  Pred pred_;
  std::vector<int> nu_;
  std::map<std::pair<T, int>, BigInt> memo_;
};

}  // namespace

MonomialVector stanley_monomial_vector(const Permutation& w) {
  RunCounter<Permutation> rc([](const Permutation& v) { return right_descents(v); },
                             [](const Permutation& v, int d) { return v * Permutation::simple(d); });
  MonomialVector out;
  out.degree = length(w);
  for (const Partition& nu : partitions(out.degree)) out.add(nu, rc.count(w, nu.parts()));
  return out;
}

MonomialVector inv_stanley_monomial_vector(const Involution& y) {
  RunCounter<Involution> rc([](const Involution& v) { return right_descents(v.perm()); },
                            [](const Involution& v, int d) { return descent_predecessor(v, d); });
  MonomialVector out;
  out.degree = inv_length(y);
  for (const Partition& nu : partitions(out.degree)) out.add(nu, rc.count(y, nu.parts()));
  return out;
}

TruncatedSymFun stable_F(const Permutation& w, int n, StableRoute route) {
  if (n < 1) throw PreconditionError("width must be positive");
  int d = length(w);
  if (w.is_identity()) return TruncatedSymFun(1, n, 0);
  Permutation v = shift(w, positive_offset(w));
  int np = std::max(n, v.max_support());
  Polynomial p;
  switch (route) {
    case StableRoute::pi: p = pi_longest(np, schubert_poly(v)); break;
    case StableRoute::shift: p = truncate(schubert_poly(shift(v, np)), np); break;
    case StableRoute::words: p = to_truncation(stanley_monomial_vector(v), np).poly(); break;
  }
  return TruncatedSymFun(truncate(p, n), n, d);
}

TruncatedSymFun stable_Fhat(const Involution& y, int n, StableRoute route) {
  if (n < 1) throw PreconditionError("width must be positive");
  int d = inv_length(y);
  if (y.is_identity()) return TruncatedSymFun(1, n, 0);
  Involution v(shift(y.perm(), positive_offset(y.perm())));
  int np = std::max(n, v.perm().max_support());
  Polynomial p;
  switch (route) {
    case StableRoute::pi: p = pi_longest(np, inv_schubert_poly(v)); break;
    case StableRoute::shift:
      p = truncate(inv_schubert_poly(Involution(shift(v.perm(), np))), np);
      break;
    case StableRoute::words: p = to_truncation(inv_stanley_monomial_vector(v), np).poly(); break;
  }
  return TruncatedSymFun(truncate(p, n), n, d);
}

TruncatedSymFun stable_P(const StrictPartition& lambda, int n, PRoute route) {
  if (n < 1) throw PreconditionError("width must be positive");
  if (route == PRoute::tableau) return schurP_to_monomials(lambda, n);
  int r = lambda.length();
  int np = std::max(n, r);
  // x^{delta_n} x^lambda G_{r,n} with the denominators cleared.
  Polynomial seed = 1;
  std::vector<int> e(np, 0);
  for (int i = 1; i <= np; ++i) e[i - 1] = i <= r ? lambda[i - 1] : np - i;
  seed = Polynomial::monomial(e);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= np - i; ++j) seed *= x_pair(i, i + j);
  Polynomial p = apply_word(OperatorKind::divided, reduced_word(Permutation::longest(np)), seed);
  return TruncatedSymFun(truncate(p, n), n, lambda.size());
}

}  // namespace invschub
