#include "invschub/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "invschub/error.hpp"

namespace invschub {

Permutation::Permutation(std::map<int, int> support_map) {
  std::set<int> values;
  for (auto it = support_map.begin(); it != support_map.end();) {
    if (it->first == it->second) {
      it = support_map.erase(it);
      continue;
    }
    values.insert(it->second);
    ++it;
  }
  if (values.size() != support_map.size())
    throw PreconditionError("permutation map is not injective");
  for (const auto& [k, v] : support_map) {
    if (!support_map.count(v))
      throw PreconditionError("permutation map does not close up on its support");
  }
  map_ = std::move(support_map);
}

Permutation Permutation::simple(int i) { return transposition(i, i + 1); }

Permutation Permutation::transposition(int a, int b) {
  if (a == b) return {};
  Permutation p;
  p.map_[a] = b;
  p.map_[b] = a;
  return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& one_line) {
  std::map<int, int> m;
  for (std::size_t k = 0; k < one_line.size(); ++k) m[static_cast<int>(k) + 1] = one_line[k];
  std::vector<int> sorted = one_line;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k) + 1)
      throw PreconditionError("one-line notation is not a permutation of [n]");
  }
  return Permutation(std::move(m));
}

Permutation Permutation::from_word(const Word& word) {
  Permutation w;
  for (int a : word) w = w * simple(a);
  return w;
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(std::max(n, 0));
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return from_one_line(v);
}

Permutation Permutation::inverse() const {
  Permutation p;
  for (const auto& [k, v] : map_) p.map_[v] = k;
  return p;
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  s.reserve(map_.size());
  for (const auto& kv : map_) s.push_back(kv.first);
  return s;
}

int Permutation::min_support() const {
  if (map_.empty()) throw PreconditionError("identity has empty support");
  return map_.begin()->first;
}

int Permutation::max_support() const {
  if (map_.empty()) throw PreconditionError("identity has empty support");
  return map_.rbegin()->first;
}

bool Permutation::in_s_infinity() const { return map_.empty() || map_.begin()->first >= 1; }

std::vector<int> Permutation::one_line(int n) const {
  if (!map_.empty() && (map_.begin()->first < 1 || map_.rbegin()->first > n))
    throw PreconditionError("permutation is not supported on [n]");
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = (*this)(i);
  return v;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  std::map<int, int> m;
  for (const auto& [k, val] : v.support_map()) m[k] = u(val);
  for (const auto& [k, val] : u.support_map()) {
    if (!v.support_map().count(k)) m[k] = val;
  }
  return Permutation(std::move(m));
}

int length(const Permutation& w) {
  if (w.is_identity()) return 0;
  int lo = w.min_support(), hi = w.max_support();
  int count = 0;
  for (int i = lo; i <= hi; ++i)
    for (int j = i + 1; j <= hi; ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

std::vector<std::pair<int, int>> inversions(const Permutation& w) {
  std::vector<std::pair<int, int>> out;
  if (w.is_identity()) return out;
  int lo = w.min_support(), hi = w.max_support();
  for (int i = lo; i <= hi; ++i)
    for (int j = i + 1; j <= hi; ++j)
      if (w(i) > w(j)) out.emplace_back(i, j);
  return out;
}

std::set<int> right_descents(const Permutation& w) {
  std::set<int> d;
  if (w.is_identity()) return d;
  for (int i = w.min_support(); i < w.max_support(); ++i)
    if (w(i) > w(i + 1)) d.insert(i);
  return d;
}

std::set<int> left_descents(const Permutation& w) { return right_descents(w.inverse()); }

Permutation demazure_right(const Permutation& u, int i) {
  if (u(i) < u(i + 1)) return u * Permutation::simple(i);
  return u;
}

Permutation demazure_product(const Permutation& u, const Permutation& v) {
  Permutation out = u;
  for (int a : reduced_word(v)) out = demazure_right(out, a);
  return out;
}

Word reduced_word(const Permutation& w) {
  Word word;
  Permutation cur = w;
  while (!cur.is_identity()) {
    int a = *left_descents(cur).begin();
    word.push_back(a);
    cur = Permutation::simple(a) * cur;
  }
  return word;
}

namespace {

const std::vector<Word>& reduced_words_memo(const Permutation& w,
                                            std::map<Permutation, std::vector<Word>>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  std::vector<Word> out;
  if (w.is_identity()) {
    out.push_back({});
  } else {
    for (int i : right_descents(w)) {
      for (Word u : reduced_words_memo(w * Permutation::simple(i), memo)) {
        u.push_back(i);
        out.push_back(std::move(u));
      }
    }
  }
  return memo.emplace(w, std::move(out)).first->second;
}

std::uint64_t count_memo(const Permutation& w, std::map<Permutation, std::uint64_t>& memo) {
  if (w.is_identity()) return 1;
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (int i : right_descents(w)) total += count_memo(w * Permutation::simple(i), memo);
  memo.emplace(w, total);
  return total;
}

}  // namespace

std::vector<Word> reduced_words(const Permutation& w, int guard) {
  int len = length(w);
  if (len > guard)
    throw GuardExceeded("reduced word enumeration refused: length " + std::to_string(len) +
                        " exceeds guard " + std::to_string(guard));
  std::map<Permutation, std::vector<Word>> memo;
  std::vector<Word> out = reduced_words_memo(w, memo);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_reduced_words(const Permutation& w) {
  std::map<Permutation, std::uint64_t> memo;
  return count_memo(w, memo);
}

std::vector<BruhatCover> bruhat_covers_up(const Permutation& w) {
  if (w.is_identity())
    throw PreconditionError("the identity has infinitely many covers; pass a window");
  return bruhat_covers_up(w, w.min_support() - 1, w.max_support() + 1);
}

std::vector<BruhatCover> bruhat_covers_up(const Permutation& w, int lo, int hi) {
  std::vector<BruhatCover> out;
  for (int a = lo; a <= hi; ++a) {
    for (int b = a + 1; b <= hi; ++b) {
      int wa = w(a), wb = w(b);
      if (wa > wb) continue;
      bool blocked = false;
      for (int c = a + 1; c < b && !blocked; ++c) {
        int wc = w(c);
        blocked = wa < wc && wc < wb;
      }
      if (!blocked) out.push_back({w * Permutation::transposition(a, b), a, b});
    }
  }
  return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.is_identity()) return true;
  if (v.is_identity()) return false;
  int lo = std::min(u.min_support(), v.min_support());
  int hi = std::max(u.max_support(), v.max_support());
  // Rank criterion: #{a <= i : u(a) >= j} <= same for v.
  for (int i = lo; i <= hi; ++i) {
    for (int j = lo; j <= hi; ++j) {
      int cu = 0, cv = 0;
      for (int a = lo; a <= i; ++a) {
        if (u(a) >= j) ++cu;
        if (v(a) >= j) ++cv;
      }
      if (cu > cv) return false;
    }
  }
  return true;
}

Permutation shift(const Permutation& w, int n) {
  std::map<int, int> m;
  for (const auto& [k, v] : w.support_map()) m[k + n] = v + n;
  return Permutation(std::move(m));
}

Permutation standardize(const Permutation& w, const std::vector<int>& e) {
  std::vector<int> dom = e;
  std::sort(dom.begin(), dom.end());
  dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
  std::vector<int> img;
  img.reserve(dom.size());
  for (int x : dom) img.push_back(w(x));
  std::vector<int> sorted_img = img;
  std::sort(sorted_img.begin(), sorted_img.end());
  std::vector<int> one_line;
  one_line.reserve(dom.size());
  for (int v : img) {
    auto pos = std::lower_bound(sorted_img.begin(), sorted_img.end(), v) - sorted_img.begin();
    one_line.push_back(static_cast<int>(pos) + 1);
  }
  return Permutation::from_one_line(one_line);
}

std::vector<int> lehmer_code(const Permutation& w) {
  if (!w.in_s_infinity()) throw PreconditionError("Lehmer code needs w in S_infinity");
  std::vector<int> c;
  if (w.is_identity()) return c;
  int n = w.max_support();
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++count;
    c.push_back(count);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

namespace {

bool contains_rec(const std::vector<int>& vals, const std::vector<int>& pattern, std::size_t start,
                  std::vector<int>& chosen) {
  if (chosen.size() == pattern.size()) return true;
  for (std::size_t i = start; i < vals.size(); ++i) {
    bool ok = true;
    std::size_t k = chosen.size();
    for (std::size_t t = 0; t < k && ok; ++t) {
      bool lt_pat = pattern[t] < pattern[k];
      bool lt_val = chosen[t] < vals[i];
      ok = lt_pat == lt_val;
    }
    if (!ok) continue;
    chosen.push_back(vals[i]);
    if (contains_rec(vals, pattern, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& w, const std::vector<int>& pattern) {
  if (pattern.empty()) return true;
  // Fixed points beyond the window are interchangeable; m of them on each side suffice.
  int lo = w.is_identity() ? 1 : w.min_support();
  int hi = w.is_identity() ? 0 : w.max_support();
  int m = static_cast<int>(pattern.size());
  std::vector<int> vals;
  for (int i = lo - m; i <= hi + m; ++i) vals.push_back(w(i));
  std::vector<int> chosen;
  return contains_rec(vals, pattern, 0, chosen);
}

bool is_dominant(const Permutation& w) {
  // Positions are positive here: a fixed point below the support would always start a 132.
  if (w.is_identity()) return true;
  if (!w.in_s_infinity()) throw PreconditionError("dominance is defined for S_infinity");
  std::vector<int> v = w.one_line(w.max_support());
  int n = static_cast<int>(v.size());
  for (int j = 1; j < n; ++j) {
    int low = *std::min_element(v.begin(), v.begin() + j);
    for (int k = j + 1; k < n; ++k)
      if (low < v[k] && v[k] < v[j]) return false;
  }
  return true;
}

bool is_grassmannian(const Permutation& w) { return right_descents(w).size() <= 1; }

bool lex_less(const Permutation& u, const Permutation& v) {
  std::set<int> pts;
  for (const auto& kv : u.support_map()) pts.insert(kv.first);
  for (const auto& kv : v.support_map()) pts.insert(kv.first);
  for (int i : pts) {
    if (u(i) != v(i)) return u(i) < v(i);
  }
  return false;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace invschub
