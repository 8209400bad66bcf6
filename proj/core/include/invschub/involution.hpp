#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "invschub/partition.hpp"
#include "invschub/permutation.hpp"

namespace invschub {

class Involution {
 public:
  Involution() = default;
  // Throws PreconditionError unless p*p is the identity.
  explicit Involution(Permutation p);
  static Involution from_cycles(const std::vector<std::pair<int, int>>& cycles);
  // The reverse permutation w_n.
  static Involution longest(int n);

  const Permutation& perm() const { return perm_; }
  int operator()(int i) const { return perm_(i); }
  bool is_identity() const { return perm_.is_identity(); }

  friend bool operator==(const Involution&, const Involution&) = default;
  friend auto operator<=>(const Involution& a, const Involution& b) { return a.perm_ <=> b.perm_; }

 private:
  Permutation perm_;
};

using Cycle = std::pair<int, int>;

// Nontrivial cycles (a,b), a<b, sorted by a.
std::vector<Cycle> cycles(const Involution& y);
// Cycles including fixed points (a,a) for a in [lo,hi], sorted by a.
std::vector<Cycle> cycles(const Involution& y, int lo, int hi);
int kappa(const Involution& y);
// (length + kappa) / 2.
int inv_length(const Involution& y);

// s_i o y o s_i.
Involution demazure_conjugate(const Involution& y, int i);
// For i a right descent of y, the unique z with s_i o z o s_i = y and inv_length one less.
Involution descent_predecessor(const Involution& y, int i);

// Both throw GuardExceeded when inv_length(y) > guard.
std::vector<Word> involution_words(const Involution& y, int guard = 12);
std::vector<Permutation> atoms(const Involution& y, int guard = 12);
std::uint64_t count_involution_words(const Involution& y);
// True when a is an involution word, i.e. each letter raises inv_length.
bool is_involution_word(const Word& a);
// The involution reached by a word under s o z o s, whether or not the word is reduced.
Involution involution_of_word(const Word& a);

Permutation min_atom(const Involution& y);

// Pairs i<j with y(j) <= min(i, y(i)), sorted lexicographically.
std::vector<Cycle> visible_inversions(const Involution& y);
std::set<int> visible_descents(const Involution& y);
std::optional<Cycle> max_visible_inversion(const Involution& y);

// These require y in I_infinity.
std::vector<std::pair<int, int>> inv_diagram(const Involution& y);
std::vector<int> inv_code(const Involution& y);
StrictPartition shape_mu(const Involution& y);

struct IGrassmannianData {
  std::vector<int> phi;  // phi_1 < ... < phi_r <= n
  int n = 0;             // 0 for the identity
};
std::optional<IGrassmannianData> i_grassmannian_data(const Involution& y);
bool is_i_grassmannian(const Involution& y);
// (phi_1, n+1)...(phi_r, n+r).
Involution i_grassmannian_involution(const std::vector<int>& phi, int n);
StrictPartition i_grassmannian_shape(const IGrassmannianData& d);

// Requires mu strictly contained in delta_{n+1}.
Involution y_mu_n(const Partition& mu, int n);

bool is_dominant(const Involution& y);

// I_n, i.e. involutions of [n], in the order of Permutation::operator<.
std::vector<Involution> all_involutions(int n);

}  // namespace invschub
