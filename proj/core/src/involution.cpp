#include "invschub/involution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "invschub/error.hpp"
#include "invschub/notation.hpp"

namespace invschub {

Involution::Involution(Permutation p) : perm_(std::move(p)) {
  for (const auto& [k, v] : perm_.support_map()) {
    if (perm_(v) != k) throw PreconditionError("permutation is not an involution");
  }
}

Involution Involution::from_cycles(const std::vector<std::pair<int, int>>& cs) {
  std::map<int, int> m;
  for (auto [a, b] : cs) {
    if (a == b) continue;
    if (m.count(a) || m.count(b)) throw PreconditionError("cycles overlap");
    m[a] = b;
    m[b] = a;
  }
  return Involution(Permutation(std::move(m)));
}

Involution Involution::longest(int n) { return Involution(Permutation::longest(n)); }

std::vector<Cycle> cycles(const Involution& y) {
  std::vector<Cycle> out;
  for (const auto& [k, v] : y.perm().support_map())
    if (k < v) out.emplace_back(k, v);
  return out;
}

std::vector<Cycle> cycles(const Involution& y, int lo, int hi) {
  std::vector<Cycle> out;
  for (const auto& [k, v] : y.perm().support_map())
    if (k < v) out.emplace_back(k, v);
  for (int i = lo; i <= hi; ++i)
    if (y(i) == i) out.emplace_back(i, i);
  std::sort(out.begin(), out.end());
  return out;
}

int kappa(const Involution& y) { return static_cast<int>(y.perm().support_map().size() / 2); }

int inv_length(const Involution& y) {
  int total = length(y.perm()) + kappa(y);
  INVSCHUB_CHECK(total % 2 == 0, "length + kappa is odd");
  return total / 2;
}

Involution demazure_conjugate(const Involution& y, int i) {
  int a = y(i), b = y(i + 1);
  if (a > b) return y;
  Permutation s = Permutation::simple(i);
  if (a == i && b == i + 1) return Involution(y.perm() * s);
  return Involution(s * y.perm() * s);
}

Involution descent_predecessor(const Involution& y, int i) {
  if (!(y(i) > y(i + 1))) throw PreconditionError("not a right descent");
  Permutation s = Permutation::simple(i);
  if (y(i) == i + 1) return Involution(y.perm() * s);
  return Involution(s * y.perm() * s);
}

namespace {

const std::vector<Word>& words_memo(const Involution& y, std::map<Involution, std::vector<Word>>& memo) {
  auto it = memo.find(y);
  if (it != memo.end()) return it->second;
  std::vector<Word> out;
  if (y.is_identity()) {
    out.push_back({});
  } else {
    for (int i : right_descents(y.perm())) {
      for (Word u : words_memo(descent_predecessor(y, i), memo)) {
        u.push_back(i);
        out.push_back(std::move(u));
      }
    }
  }
  return memo.emplace(y, std::move(out)).first->second;
}

const std::set<Permutation>& atoms_memo(const Involution& y,
                                        std::map<Involution, std::set<Permutation>>& memo) {
  auto it = memo.find(y);
  if (it != memo.end()) return it->second;
  std::set<Permutation> out;
  if (y.is_identity()) {
    out.insert(Permutation());
  } else {
    for (int i : right_descents(y.perm())) {
      for (const Permutation& v : atoms_memo(descent_predecessor(y, i), memo)) {
        if (v(i) < v(i + 1)) out.insert(v * Permutation::simple(i));
      }
    }
  }
  return memo.emplace(y, std::move(out)).first->second;
}

std::uint64_t count_memo(const Involution& y, std::map<Involution, std::uint64_t>& memo) {
  if (y.is_identity()) return 1;
  auto it = memo.find(y);
  if (it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (int i : right_descents(y.perm())) total += count_memo(descent_predecessor(y, i), memo);
  memo.emplace(y, total);
  return total;
}

void check_guard(const Involution& y, int guard, const char* what) {
  int len = inv_length(y);
  if (len > guard)
    throw GuardExceeded(std::string(what) + " refused: involution length " + std::to_string(len) +
                        " exceeds guard " + std::to_string(guard));
}

}  // namespace

std::vector<Word> involution_words(const Involution& y, int guard) {
  check_guard(y, guard, "involution word enumeration");
  std::map<Involution, std::vector<Word>> memo;
  std::vector<Word> out = words_memo(y, memo);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> atoms(const Involution& y, int guard) {
  check_guard(y, guard, "atom enumeration");
  std::map<Involution, std::set<Permutation>> memo;
  const auto& s = atoms_memo(y, memo);
  std::vector<Permutation> out(s.begin(), s.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::uint64_t count_involution_words(const Involution& y) {
  std::map<Involution, std::uint64_t> memo;
  return count_memo(y, memo);
}

Involution involution_of_word(const Word& a) {
  Involution z;
  for (int i : a) z = demazure_conjugate(z, i);
  return z;
}

bool is_involution_word(const Word& a) {
  Involution z;
  for (int i : a) {
    if (z(i) > z(i + 1)) return false;
    z = demazure_conjugate(z, i);
  }
  return true;
}

Permutation min_atom(const Involution& y) {
  if (y.is_identity()) return {};
  int lo = y.perm().min_support();
  int n_shift = lo < 1 ? 1 - lo : 0;
  Permutation yp = shift(y.perm(), n_shift);
  int m = yp.max_support();
  std::vector<int> seq;
  for (int a = 1; a <= m; ++a) {
    int b = yp(a);
    if (b < a) continue;
    seq.push_back(b);
    if (a != b) seq.push_back(a);
  }
  Permutation alpha = Permutation::from_one_line(seq).inverse();
  return shift(alpha, -n_shift);
}

std::vector<Cycle> visible_inversions(const Involution& y) {
  std::vector<Cycle> out;
  if (y.is_identity()) return out;
  int lo = y.perm().min_support(), hi = y.perm().max_support();
  for (int i = lo; i <= hi; ++i)
    for (int j = i + 1; j <= hi; ++j)
      if (y(j) <= std::min(i, y(i))) out.emplace_back(i, j);
  return out;
}

std::set<int> visible_descents(const Involution& y) {
  std::set<int> out;
  if (y.is_identity()) return out;
  for (int i = y.perm().min_support(); i < y.perm().max_support(); ++i)
    if (y(i + 1) <= std::min(i, y(i))) out.insert(i);
  return out;
}

std::optional<Cycle> max_visible_inversion(const Involution& y) {
  if (y.is_identity()) return std::nullopt;
  int lo = y.perm().min_support(), hi = y.perm().max_support();
  for (int i = hi; i >= lo; --i)
    for (int j = hi; j > i; --j)
      if (y(j) <= std::min(i, y(i))) return Cycle{i, j};
  INVSCHUB_CHECK(false, "nontrivial involution without visible inversion");
  return std::nullopt;
}

namespace {
void require_positive(const Involution& y) {
  if (!y.perm().in_s_infinity()) throw PreconditionError("involution must lie in I_infinity");
}
}  // namespace

std::vector<std::pair<int, int>> inv_diagram(const Involution& y) {
  require_positive(y);
  std::vector<std::pair<int, int>> out;
  if (y.is_identity()) return out;
  int m = y.perm().max_support();
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= i; ++j)
      if (i < y(j) && j < y(i)) out.emplace_back(i, j);
  return out;
}

std::vector<int> inv_code(const Involution& y) {
  std::vector<int> c;
  for (auto [i, j] : inv_diagram(y)) {
    if (static_cast<int>(c.size()) < i) c.resize(i, 0);
    ++c[i - 1];
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

StrictPartition shape_mu(const Involution& y) {
  if (y.is_identity()) return {};
  int lo = y.perm().min_support();
  Involution yp = lo < 1 ? Involution(shift(y.perm(), 1 - lo)) : y;
  Partition p = Partition::sorted_from(inv_code(yp)).transpose();
  if (!p.is_strict())
    throw Falsification("shape mu(y) is not strict for y = " + format_cycles(y.perm()));
  return StrictPartition(p.parts());
}

std::optional<IGrassmannianData> i_grassmannian_data(const Involution& y) {
  auto des = visible_descents(y);
  if (des.empty()) {
    INVSCHUB_CHECK(y.is_identity(), "nontrivial involution with no visible descent");
    return IGrassmannianData{};
  }
  if (des.size() > 1) return std::nullopt;
  IGrassmannianData d;
  d.n = *des.begin();
  auto cs = cycles(y);
  std::sort(cs.begin(), cs.end(), [](const Cycle& a, const Cycle& b) { return a.second < b.second; });
  for (std::size_t k = 0; k < cs.size(); ++k) {
    INVSCHUB_CHECK(cs[k].second == d.n + static_cast<int>(k) + 1 && cs[k].first <= d.n,
                   "I-Grassmannian involution with unexpected cycle structure");
    d.phi.push_back(cs[k].first);
  }
  INVSCHUB_CHECK(std::is_sorted(d.phi.begin(), d.phi.end()), "phi not increasing");
  return d;
}

bool is_i_grassmannian(const Involution& y) { return visible_descents(y).size() <= 1; }

Involution i_grassmannian_involution(const std::vector<int>& phi, int n) {
  std::vector<std::pair<int, int>> cs;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    if (phi[k] > n || (k > 0 && phi[k] <= phi[k - 1]))
      throw PreconditionError("phi must be strictly increasing and bounded by n");
    cs.emplace_back(phi[k], n + static_cast<int>(k) + 1);
  }
  return Involution::from_cycles(cs);
}

StrictPartition i_grassmannian_shape(const IGrassmannianData& d) {
  std::vector<int> parts;
  for (int p : d.phi) parts.push_back(d.n + 1 - p);
  return StrictPartition(parts);
}

Involution y_mu_n(const Partition& mu, int n) {
  if (n < 1 || !staircase(n + 1).strictly_contains(mu))
    throw PreconditionError("mu must be strictly contained in delta_{n+1}");
  Partition mt = mu.transpose();
  std::vector<int> b(n);
  std::vector<bool> used(2 * n + 1, false);
  for (int i = 1; i <= n; ++i) {
    b[i - 1] = n + i - mt[i - 1];
    used[b[i - 1]] = true;
  }
  std::vector<std::pair<int, int>> cs;
  int k = 0;
  for (int a = 1; a <= 2 * n; ++a) {
    if (used[a]) continue;
    cs.emplace_back(a, b[k++]);
  }
  return Involution::from_cycles(cs);
}

bool is_dominant(const Involution& y) { return is_dominant(y.perm()); }

std::vector<Involution> all_involutions(int n) {
  std::vector<Involution> out;
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used(n + 1, false);
  std::function<void(int)> rec = [&](int i) {
    while (i <= n && used[i]) ++i;
    if (i > n) {
      out.push_back(Involution::from_cycles(cur));
      return;
    }
    used[i] = true;
    rec(i + 1);
    for (int j = i + 1; j <= n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.emplace_back(i, j);
      rec(i + 1);
      cur.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace invschub
