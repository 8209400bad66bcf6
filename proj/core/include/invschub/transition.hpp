#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "invschub/involution.hpp"
#include "invschub/partition.hpp"
#include "invschub/permutation.hpp"
#include "invschub/symfunc.hpp"

namespace invschub {

// Requires i < j.  Identity on inputs matching no nontrivial covering rule.
Involution tau(int i, int j, const Involution& y);

struct EtaResult {
  Involution y;
  int q = 0;
  int r = 0;
};
// (q,r) is the maximal visible inversion of z; PreconditionError for the identity.
EtaResult eta(const Involution& z);

enum class Sign { plus, minus };
// Involutions tau_{rj}(y), j > r (plus) or tau_{ir}(y), i < r (minus), one step higher; sorted.
std::vector<Involution> phi_hat(Sign sign, const Involution& y, int r);
// The same sets with an explicit scan window [lo, hi] for the free index.
std::vector<Involution> phi_hat_window(Sign sign, const Involution& y, int r, int lo, int hi);
// Classical analogues w(r,j) and w(i,r) with length one more.
std::vector<Permutation> phi_classical(Sign sign, const Permutation& w, int r);

// x_(p,q) S-hat_y against the signed sum of S-hat over phi_hat(+,y,q) and phi_hat(-,y,p).
bool transition_identity_check(const Involution& y, int p, int q);
// x_r S_w = sum over phi(+,w,r) minus sum over phi(-,w,r), for w in S_infinity.
bool classical_transition_check(const Permutation& w, int r);

struct LSTreeNode {
  Permutation element;
  // Involution tree: (q, r, p) with (q,r) the maximal visible inversion and p = eta(z)(q).
  // Classical tree: (r, s, 0) with (r,s) the lexicographically maximal inversion.
  std::optional<std::array<int, 3>> label;
  std::vector<LSTreeNode> children;

  bool is_leaf() const { return children.empty(); }
  std::size_t node_count() const;
  void collect_leaves(std::vector<const LSTreeNode*>& out) const;
};

LSTreeNode inv_ls_tree(const Involution& z, int jobs = 1);
LSTreeNode classical_ls_tree(const Permutation& w);

SymFunExpansion expand_Fhat(const Involution& z, int jobs = 1);
// Q-expansion via schurQ_scale, checked against the per-leaf weights 2^{kappa(z)-kappa(v)}.
SymFunExpansion expand_Ghat(const Involution& z, int jobs = 1);
SymFunExpansion expand_F(const Permutation& w);

struct TriangularityReport {
  bool mu_strict = false;
  Partition mu;
  SymFunExpansion p_expansion;
  SymFunExpansion s_expansion;
  bool leaves_dominated = false;  // every P-shape <= mu
  bool leading_once = false;      // P_mu has coefficient 1
  bool schur_window = false;      // Schur support in [mu^T, mu], ends with coefficient 1
  bool ok() const { return mu_strict && leaves_dominated && leading_once && schur_window; }
  std::string to_text() const;
};
TriangularityReport triangularity_certificate(const Involution& z);

// Indented text, one node per line.  involution selects cycle notation.
std::string tree_to_text(const LSTreeNode& root, bool involution);
// "digraph"-style edge list: node lines then "a -> b" lines.
std::string tree_to_edges(const LSTreeNode& root, bool involution);

}  // namespace invschub
