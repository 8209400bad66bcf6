#include "invschub/vexillary.hpp"

#include <algorithm>
#include <functional>

#include "invschub/error.hpp"
#include "invschub/transition.hpp"

namespace invschub {

namespace {

std::vector<NamedPattern> make_list(const std::vector<std::vector<std::pair<int, int>>>& specs) {
  std::vector<NamedPattern> out;
  for (const auto& cs : specs) {
    Involution p = Involution::from_cycles(cs);
    out.push_back({p, p.perm().max_support()});
  }
  return out;
}

}  // namespace

const std::vector<NamedPattern>& eleven_p_patterns() {
  static const std::vector<NamedPattern> list = make_list({
      {{1, 2}, {3, 5}},
      {{1, 3}, {4, 5}},
      {{1, 4}, {3, 6}},
      {{1, 4}, {2, 3}, {5, 6}},
      {{1, 2}, {3, 6}, {4, 5}},
      {{1, 2}, {3, 4}, {5, 6}},
      {{1, 5}, {2, 4}, {3, 7}},
      {{1, 5}, {3, 7}, {4, 6}},
      {{1, 6}, {2, 5}, {3, 8}, {4, 7}},
      {{1, 6}, {2, 4}, {3, 8}, {5, 7}},
      {{1, 3}, {2, 5}, {4, 7}, {6, 8}},
  });
  return list;
}

const std::vector<NamedPattern>& five_q_patterns() {
  static const std::vector<NamedPattern> list = make_list({
      {{1, 2}, {3, 4}},
      {{1, 4}, {3, 6}},
      {{1, 5}, {3, 7}, {4, 6}},
      {{1, 5}, {2, 4}, {3, 7}},
      {{1, 6}, {2, 5}, {3, 8}, {4, 7}},
  });
  return list;
}

const std::vector<NamedPattern>& two_321_patterns() {
  static const std::vector<NamedPattern> list = make_list({
      {{1, 2}, {3, 4}, {5, 6}},
      {{1, 3}, {2, 5}, {4, 7}, {6, 8}},
  });
  return list;
}

std::optional<std::vector<int>> contains_inv_pattern(const Involution& z, const Involution& p, int m) {
  if (m < 0) m = p.is_identity() ? 0 : p.perm().max_support();
  if (!p.is_identity() && (p.perm().min_support() < 1 || p.perm().max_support() > m))
    throw PreconditionError("pattern must lie in I_m");
  if (m == 0) return std::vector<int>{};
  Permutation target = p.perm();

  // Orbits inside the support window; fixed points outside it are interchangeable, so only
  // how many are taken below and above matters.
  std::vector<std::vector<int>> orbits;
  int lo = 1, hi = 0;
  if (!z.is_identity()) {
    lo = z.perm().min_support();
    hi = z.perm().max_support();
    for (int i = lo; i <= hi; ++i) {
      if (z(i) == i)
        orbits.push_back({i});
      else if (i < z(i))
        orbits.push_back({i, z(i)});
    }
  }
  std::vector<int> chosen;
  std::optional<std::vector<int>> hit;
  std::function<bool(std::size_t, int)> rec = [&](std::size_t k, int size) -> bool {
    if (size > m) return false;
    if (k == orbits.size()) {
      int extra = m - size;
      for (int below = 0; below <= extra; ++below) {
        std::vector<int> e = chosen;
        for (int t = 1; t <= below; ++t) e.push_back(lo - t);
        for (int t = 1; t <= extra - below; ++t) e.push_back(hi + t);
        std::sort(e.begin(), e.end());
        if (standardize(z.perm(), e) == target) {
          hit = e;
          return true;
        }
      }
      return false;
    }
    if (rec(k + 1, size)) return true;
    for (int v : orbits[k]) chosen.push_back(v);
    bool found = rec(k + 1, size + static_cast<int>(orbits[k].size()));
    for (std::size_t t = 0; t < orbits[k].size(); ++t) chosen.pop_back();
    return found;
  };
  rec(0, 0);
  return hit;
}

std::optional<PatternHit> first_pattern_hit(const Involution& z, const std::vector<NamedPattern>& list) {
  for (const auto& np : list) {
    if (auto e = contains_inv_pattern(z, np.pattern, np.size)) return PatternHit{np.pattern, *e};
  }
  return std::nullopt;
}

namespace {
bool single_unit_term(const SymFunExpansion& e) {
  return e.coeffs.size() == 1 && e.coeffs.begin()->second == 1;
}
}  // namespace

bool is_p_vexillary(const Involution& z, VexMethod method) {
  switch (method) {
    case VexMethod::patterns: return !first_pattern_hit(z, eleven_p_patterns()).has_value();
    case VexMethod::direct: return single_unit_term(expand_Fhat(z));
    case VexMethod::vexillary: break;
  }
  throw PreconditionError("P-vexillarity has no 2143 criterion");
}

bool is_q_vexillary(const Involution& z, VexMethod method) {
  switch (method) {
    case VexMethod::patterns: return !first_pattern_hit(z, five_q_patterns()).has_value();
    case VexMethod::direct: return single_unit_term(expand_Ghat(z));
    case VexMethod::vexillary: return !contains_2143(z.perm());
  }
  return false;
}

bool contains_2143(const Permutation& w) { return contains_pattern(w, {2, 1, 4, 3}); }

}  // namespace invschub
