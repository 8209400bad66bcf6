#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace invschub {

// A word (a1,...,ak) stands for the product s_{a1} s_{a2} ... s_{ak}.
using Word = std::vector<int>;

// Bijection of the integers moving finitely many points.  Only the moved
// points are stored, so the identity is the empty map.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::map<int, int> support_map);

  static Permutation simple(int i);
  static Permutation transposition(int a, int b);
  // one_line[k] is the image of k+1.
  static Permutation from_one_line(const std::vector<int>& one_line);
  static Permutation from_word(const Word& word);
  // The reverse permutation w_n of [n].
  static Permutation longest(int n);

  int operator()(int i) const {
    auto it = map_.find(i);
    return it == map_.end() ? i : it->second;
  }

  Permutation inverse() const;
  bool is_identity() const { return map_.empty(); }
  const std::map<int, int>& support_map() const { return map_; }
  std::vector<int> support() const;
  int min_support() const;
  int max_support() const;
  // True when every moved point is positive.
  bool in_s_infinity() const;
  std::vector<int> one_line(int n) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.map_ <=> b.map_;
  }

 private:
  std::map<int, int> map_;
};

// i -> u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

int length(const Permutation& w);
std::vector<std::pair<int, int>> inversions(const Permutation& w);
// Right descents: i with w(i) > w(i+1).  Left descents are those of w^{-1}.
std::set<int> right_descents(const Permutation& w);
std::set<int> left_descents(const Permutation& w);

// u o s_i in the 0-Hecke monoid.
Permutation demazure_right(const Permutation& u, int i);
Permutation demazure_product(const Permutation& u, const Permutation& v);

// Lexicographically least reduced word.
Word reduced_word(const Permutation& w);
// Throws GuardExceeded when length(w) > guard.
std::vector<Word> reduced_words(const Permutation& w, int guard = 16);
std::uint64_t count_reduced_words(const Permutation& w);

struct BruhatCover {
  Permutation upper;  // w(a,b)
  int a;
  int b;
  friend bool operator==(const BruhatCover&, const BruhatCover&) = default;
};
// Scans transpositions with both ends in [min(support)-1, max(support)+1].
// The identity has infinitely many covers; it throws PreconditionError.
std::vector<BruhatCover> bruhat_covers_up(const Permutation& w);
std::vector<BruhatCover> bruhat_covers_up(const Permutation& w, int lo, int hi);
bool bruhat_leq(const Permutation& u, const Permutation& v);

// i -> w(i-N)+N.
Permutation shift(const Permutation& w, int n);
// [w]_E as an element of S_|E|.
Permutation standardize(const Permutation& w, const std::vector<int>& e);

// Lehmer code c_i = #{j > i : w(j) < w(i)} for w in S_infinity, trailing zeros trimmed.
std::vector<int> lehmer_code(const Permutation& w);
// Classical pattern containment; pattern given in one-line notation.
bool contains_pattern(const Permutation& w, const std::vector<int>& pattern);
// Dominant means 132-avoiding as a permutation of the positive integers; needs S_infinity.
bool is_dominant(const Permutation& w);
bool is_grassmannian(const Permutation& w);

// Compares one-line notations as sequences indexed by all of Z.
bool lex_less(const Permutation& u, const Permutation& v);

// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace invschub
