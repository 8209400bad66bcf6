#include "invschub/transition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "invschub/error.hpp"
#include "invschub/notation.hpp"
#include "invschub/parallel.hpp"
#include "invschub/schubert.hpp"

namespace invschub {

namespace {

using Matching = std::vector<int>;  // 1-based images, index 0 unused

bool is_matching(const Matching& m, std::initializer_list<std::pair<int, int>> cs) {
  Matching want(m.size());
  for (std::size_t k = 1; k < m.size(); ++k) want[k] = static_cast<int>(k);
  for (auto [a, b] : cs) {
    want[a] = b;
    want[b] = a;
  }
  return want == m;
}

bool pair_in(int a, int b, std::initializer_list<std::pair<int, int>> ps) {
  for (auto [x, y] : ps)
    if (x == a && y == b) return true;
  return false;
}

// The covering rules on a standardized set A = [n], n = |A| in {2,3,4}.
std::optional<std::vector<std::pair<int, int>>> covering_rule(const Matching& m, int a, int b) {
  int n = static_cast<int>(m.size()) - 1;
  if (n == 2) {
    if (is_matching(m, {})) return std::vector<std::pair<int, int>>{{1, 2}};
  } else if (n == 3) {
    if (is_matching(m, {{1, 2}}) && pair_in(a, b, {{2, 3}, {1, 3}}))
      return std::vector<std::pair<int, int>>{{1, 3}};
    if (is_matching(m, {{2, 3}}) && pair_in(a, b, {{1, 2}, {1, 3}}))
      return std::vector<std::pair<int, int>>{{1, 3}};
  } else if (n == 4) {
    if (is_matching(m, {{1, 2}, {3, 4}})) {
      if (pair_in(a, b, {{2, 3}})) return std::vector<std::pair<int, int>>{{1, 3}, {2, 4}};
      if (pair_in(a, b, {{1, 3}, {2, 4}, {1, 4}})) return std::vector<std::pair<int, int>>{{1, 4}};
    }
    if (is_matching(m, {{1, 3}, {2, 4}}) && pair_in(a, b, {{1, 2}, {3, 4}, {1, 4}}))
      return std::vector<std::pair<int, int>>{{1, 4}, {2, 3}};
  }
  return std::nullopt;
}

bool lex_less_pair(const Cycle& a, const Cycle& b) { return a < b; }

}  // namespace

Involution tau(int i, int j, const Involution& y) {
  if (i >= j) throw PreconditionError("tau needs i < j");
  std::set<int> as{i, j, y(i), y(j)};
  std::vector<int> e(as.begin(), as.end());
  auto idx = [&](int v) {
    return static_cast<int>(std::lower_bound(e.begin(), e.end(), v) - e.begin()) + 1;
  };
  Matching m(e.size() + 1, 0);
  for (std::size_t k = 0; k < e.size(); ++k) m[k + 1] = idx(y(e[k]));
  auto rule = covering_rule(m, idx(i), idx(j));
  if (!rule) return y;
  std::map<int, int> out = y.perm().support_map();
  for (int v : e) out.erase(v);
  for (auto [a, b] : *rule) {
    out[e[a - 1]] = e[b - 1];
    out[e[b - 1]] = e[a - 1];
  }
  return Involution(Permutation(std::move(out)));
}

EtaResult eta(const Involution& z) {
  auto mv = max_visible_inversion(z);
  if (!mv) throw PreconditionError("eta is undefined for the identity");
  auto [q, r] = *mv;
  Permutation t = Permutation::transposition(q, r);
  Involution y = z(q) == r ? Involution(z.perm() * t) : Involution(t * z.perm() * t);
  INVSCHUB_CHECK(inv_length(y) + 1 == inv_length(z), "eta does not lower the length by one");
  INVSCHUB_CHECK(tau(q, r, y) == z, "z != tau_qr(eta(z))");
  INVSCHUB_CHECK(y(q) <= q && y(q) < z(q) && z(q) <= y(r), "eta inequalities fail");
  return {y, q, r};
}

std::vector<Involution> phi_hat_window(Sign sign, const Involution& y, int r, int lo, int hi) {
  std::set<Involution> out;
  int target = inv_length(y) + 1;
  if (sign == Sign::plus) {
    for (int j = r + 1; j <= hi; ++j) {
      Involution z = tau(r, j, y);
      if (inv_length(z) == target) out.insert(z);
    }
  } else {
    for (int i = lo; i < r; ++i) {
      Involution z = tau(i, r, y);
      if (inv_length(z) == target) out.insert(z);
    }
  }
  return {out.begin(), out.end()};
}

namespace {
std::pair<int, int> scan_window(const Permutation& w, int r) {
  int lo = r, hi = r;
  if (!w.is_identity()) {
    lo = std::min(lo, w.min_support());
    hi = std::max(hi, w.max_support());
  }
  return {lo - 1, hi + 1};
}
}  // namespace

std::vector<Involution> phi_hat(Sign sign, const Involution& y, int r) {
  auto [lo, hi] = scan_window(y.perm(), r);
  return phi_hat_window(sign, y, r, lo, hi);
}

std::vector<Permutation> phi_classical(Sign sign, const Permutation& w, int r) {
  auto [lo, hi] = scan_window(w, r);
  int target = length(w) + 1;
  std::set<Permutation> out;
  if (sign == Sign::plus) {
    for (int j = r + 1; j <= hi; ++j) {
      Permutation v = w * Permutation::transposition(r, j);
      if (length(v) == target) out.insert(v);
    }
  } else {
    for (int i = lo; i < r; ++i) {
      Permutation v = w * Permutation::transposition(i, r);
      if (length(v) == target) out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

bool transition_identity_check(const Involution& y, int p, int q) {
  if (p < 1 || p > q || y(p) != q) throw PreconditionError("(p,q) must be a cycle of y in P x P");
  if (!y.perm().in_s_infinity()) throw PreconditionError("involution must lie in I_infinity");
  Polynomial xpq = p == q ? Polynomial::variable(p) : Polynomial::variable(p) + Polynomial::variable(q);
  Polynomial lhs = xpq * inv_schubert_poly(y);
  Polynomial rhs;
  for (const Involution& z : phi_hat(Sign::plus, y, q))
    if (z.perm().in_s_infinity()) rhs += inv_schubert_poly(z);
  for (const Involution& z : phi_hat(Sign::minus, y, p))
    if (z.perm().in_s_infinity()) rhs -= inv_schubert_poly(z);
  return lhs == rhs;
}

bool classical_transition_check(const Permutation& w, int r) {
  if (r < 1 || !w.in_s_infinity()) throw PreconditionError("need w in S_infinity and r >= 1");
  Polynomial lhs = Polynomial::variable(r) * schubert_poly(w);
  Polynomial rhs;
  for (const Permutation& v : phi_classical(Sign::plus, w, r))
    if (v.in_s_infinity()) rhs += schubert_poly(v);
  for (const Permutation& v : phi_classical(Sign::minus, w, r))
    if (v.in_s_infinity()) rhs -= schubert_poly(v);
  return lhs == rhs;
}

std::size_t LSTreeNode::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

void LSTreeNode::collect_leaves(std::vector<const LSTreeNode*>& out) const {
  if (children.empty()) {
    out.push_back(this);
    return;
  }
  for (const auto& c : children) c.collect_leaves(out);
}

namespace {

constexpr std::size_t kMaxTreeNodes = 1u << 22;

// Depth-first with an explicit stack.  Each frame owns its node; children are attached
// when a frame is popped.
LSTreeNode build_inv_tree(const Involution& root) {
  int len = inv_length(root);
  LSTreeNode top;
  top.element = root.perm();
  struct Frame {
    LSTreeNode* node;
    std::optional<Cycle> cert;  // maximal visible inversion of the parent
  };
  std::vector<Frame> stack{{&top, std::nullopt}};
  std::size_t count = 0;
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (++count > kMaxTreeNodes) throw GuardExceeded("involution transition tree too large");
    Involution z(f.node->element);
    INVSCHUB_CHECK(inv_length(z) == len, "tree vertex with a different involution length");
    auto mv = max_visible_inversion(z);
    if (f.cert) {
      INVSCHUB_CHECK(mv && lex_less_pair(*mv, *f.cert),
                     "maximal visible inversion did not decrease along a tree edge");
    }
    if (is_i_grassmannian(z)) continue;
    EtaResult e = eta(z);
    int p = e.y(e.q);
    f.node->label = std::array<int, 3>{e.q, e.r, p};
    for (const Involution& v : phi_hat(Sign::minus, e.y, p)) {
      LSTreeNode child;
      child.element = v.perm();
      f.node->children.push_back(std::move(child));
    }
    INVSCHUB_CHECK(!f.node->children.empty(), "non-I-Grassmannian vertex without children");
    for (auto it = f.node->children.rbegin(); it != f.node->children.rend(); ++it)
      stack.push_back({&*it, mv});
  }
  return top;
}

int max_inversion_r(const Permutation& w, int& s_out) {
  int lo = w.min_support(), hi = w.max_support();
  for (int r = hi; r >= lo; --r)
    for (int s = hi; s > r; --s)
      if (w(r) > w(s)) {
        s_out = s;
        return r;
      }
  INVSCHUB_CHECK(false, "nonidentity permutation without inversions");
  return 0;
}

bool grassmannian_z(const Permutation& w) {
  if (w.is_identity()) return true;
  int d = 0;
  for (int i = w.min_support(); i < w.max_support(); ++i)
    if (w(i) > w(i + 1)) ++d;
  return d <= 1;
}

LSTreeNode build_classical_tree(const Permutation& root) {
  int len = length(root);
  LSTreeNode top;
  top.element = root;
  std::vector<LSTreeNode*> stack{&top};
  std::size_t count = 0;
  while (!stack.empty()) {
    LSTreeNode* node = stack.back();
    stack.pop_back();
    if (++count > kMaxTreeNodes) throw GuardExceeded("transition tree too large");
    const Permutation& w = node->element;
    INVSCHUB_CHECK(length(w) == len, "tree vertex with a different length");
    if (grassmannian_z(w)) continue;
    int s = 0;
    int r = max_inversion_r(w, s);
    node->label = std::array<int, 3>{r, s, 0};
    Permutation v = w * Permutation::transposition(r, s);
    for (const Permutation& c : phi_classical(Sign::minus, v, r)) {
      LSTreeNode child;
      child.element = c;
      node->children.push_back(std::move(child));
    }
    INVSCHUB_CHECK(!node->children.empty(), "non-Grassmannian vertex without children");
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) stack.push_back(&*it);
  }
  return top;
}

Partition grassmannian_shape(const Permutation& w) {
  if (w.is_identity()) return {};
  std::vector<int> code;
  int lo = w.min_support(), hi = w.max_support();
  for (int i = lo; i <= hi; ++i) {
    int c = 0;
    for (int j = i + 1; j <= hi; ++j)
      if (w(j) < w(i)) ++c;
    code.push_back(c);
  }
  return Partition::sorted_from(code);
}

}  // namespace

LSTreeNode inv_ls_tree(const Involution& z, int jobs) {
  if (jobs <= 1 || is_i_grassmannian(z)) return build_inv_tree(z);
  // Expand the root by hand, then the subtrees in parallel.
  LSTreeNode top;
  top.element = z.perm();
  EtaResult e = eta(z);
  int p = e.y(e.q);
  top.label = std::array<int, 3>{e.q, e.r, p};
  auto kids = phi_hat(Sign::minus, e.y, p);
  top.children = parallel_map(kids, [](const Involution& v) { return build_inv_tree(v); }, jobs);
  return top;
}

LSTreeNode classical_ls_tree(const Permutation& w) { return build_classical_tree(w); }

SymFunExpansion expand_Fhat(const Involution& z, int jobs) {
  LSTreeNode tree = inv_ls_tree(z, jobs);
  std::vector<const LSTreeNode*> leaves;
  tree.collect_leaves(leaves);
  SymFunExpansion out;
  out.basis = Basis::schurP;
  for (const LSTreeNode* leaf : leaves) {
    Involution v(leaf->element);
    auto data = i_grassmannian_data(v);
    INVSCHUB_CHECK(data.has_value(), "leaf is not I-Grassmannian");
    StrictPartition mu = i_grassmannian_shape(*data);
    out.add(mu.as_partition(), 1);
  }
  return out;
}

SymFunExpansion expand_Ghat(const Involution& z, int jobs) {
  SymFunExpansion scaled = schurQ_scale(expand_Fhat(z, jobs), kappa(z));
  LSTreeNode tree = inv_ls_tree(z, jobs);
  std::vector<const LSTreeNode*> leaves;
  tree.collect_leaves(leaves);
  SymFunExpansion per_leaf;
  per_leaf.basis = Basis::schurQ;
  for (const LSTreeNode* leaf : leaves) {
    Involution v(leaf->element);
    int shift = kappa(z) - kappa(v);
    if (shift < 0) throw Falsification("leaf with more cycles than the root: " + format_cycles(v.perm()));
    // G-hat of an I-Grassmannian leaf is the single Q-function of its shape.
    per_leaf.add(i_grassmannian_shape(*i_grassmannian_data(v)).as_partition(), BigInt(1) << shift);
  }
  INVSCHUB_CHECK(per_leaf == scaled, "Q-expansion routes disagree");
  return scaled;
}

SymFunExpansion expand_F(const Permutation& w) {
  LSTreeNode tree = classical_ls_tree(w);
  std::vector<const LSTreeNode*> leaves;
  tree.collect_leaves(leaves);
  SymFunExpansion out;
  out.basis = Basis::schur;
  for (const LSTreeNode* leaf : leaves) out.add(grassmannian_shape(leaf->element), 1);
  return out;
}

TriangularityReport triangularity_certificate(const Involution& z) {
  TriangularityReport rep;
  Involution v = z;
  if (!z.is_identity() && z.perm().min_support() < 1) v = Involution(shift(z.perm(), 1 - z.perm().min_support()));
  try {
    rep.mu = shape_mu(v).as_partition();
    rep.mu_strict = true;
  } catch (const Falsification&) {
    rep.mu = Partition::sorted_from(inv_code(v)).transpose();
    rep.mu_strict = false;
  }
  rep.p_expansion = expand_Fhat(z);
  rep.leaves_dominated = true;
  for (const auto& [lambda, c] : rep.p_expansion.coeffs)
    if (c <= 0 || !dominance_leq(lambda, rep.mu)) rep.leaves_dominated = false;
  rep.leading_once = rep.p_expansion.coefficient(rep.mu) == 1;
  rep.s_expansion = schurP_to_schur(rep.p_expansion);
  Partition mt = rep.mu.transpose();
  bool window = dominance_leq(mt, rep.mu);
  for (const auto& [lambda, c] : rep.s_expansion.coeffs)
    if (c <= 0 || !dominance_leq(mt, lambda) || !dominance_leq(lambda, rep.mu)) window = false;
  if (mt == rep.mu) {
    window = window && rep.s_expansion.coeffs.size() == 1 && rep.s_expansion.coefficient(rep.mu) == 1;
  } else {
    window = window && rep.s_expansion.coefficient(rep.mu) == 1 && rep.s_expansion.coefficient(mt) == 1;
  }
  rep.schur_window = window;
  return rep;
}

std::string TriangularityReport::to_text() const {
  std::ostringstream os;
  os << "mu = " << to_string(mu) << (mu_strict ? " (strict)" : " (NOT strict)") << '\n';
  os << "P-expansion: " << p_expansion.to_text() << '\n';
  os << "s-expansion: " << s_expansion.to_text() << '\n';
  os << "leaf shapes dominated by mu: " << (leaves_dominated ? "yes" : "no") << '\n';
  os << "coefficient of P_mu is 1: " << (leading_once ? "yes" : "no") << '\n';
  os << "Schur support in [mu^T, mu]: " << (schur_window ? "yes" : "no") << '\n';
  os << "certificate: " << (ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

namespace {

// One-line names are padded to the root's window so siblings line up with each other.
std::string node_name(const LSTreeNode& n, bool involution, int width) {
  if (involution || !n.element.in_s_infinity()) return format_cycles(n.element);
  if (n.element.is_identity()) return format_one_line(n.element, width);
  return format_one_line(n.element, std::max(width, n.element.max_support()));
}

int root_width(const LSTreeNode& root) {
  return root.element.is_identity() ? 1 : std::max(1, root.element.max_support());
}

std::string node_note(const LSTreeNode& n, bool involution) {
  std::ostringstream os;
  if (n.label) {
    const auto& l = *n.label;
    if (involution)
      os << "  [q=" << l[0] << " r=" << l[1] << " p=" << l[2] << ']';
    else
      os << "  [r=" << l[0] << " s=" << l[1] << ']';
  } else if (involution) {
    auto d = i_grassmannian_data(Involution(n.element));
    os << "  leaf P" << to_string(i_grassmannian_shape(*d));
  } else {
    os << "  leaf s" << to_string(grassmannian_shape(n.element));
  }
  return os.str();
}

}  // namespace

std::string tree_to_text(const LSTreeNode& root, bool involution) {
  std::ostringstream os;
  int width = root_width(root);
  std::function<void(const LSTreeNode&, int)> rec = [&](const LSTreeNode& n, int depth) {
    os << std::string(2 * depth, ' ') << node_name(n, involution, width) << node_note(n, involution) << '\n';
    for (const auto& c : n.children) rec(c, depth + 1);
  };
  rec(root, 0);
  return os.str();
}

std::string tree_to_edges(const LSTreeNode& root, bool involution) {
  std::ostringstream nodes, edges;
  int next = 0;
  int width = root_width(root);
  std::function<void(const LSTreeNode&)> rec = [&](const LSTreeNode& n) {
    int id = next++;
    nodes << 'n' << id << " \"" << node_name(n, involution, width) << '"' << node_note(n, involution) << '\n';
    for (const auto& c : n.children) {
      edges << 'n' << id << " -> n" << next << '\n';
      rec(c);
    }
  };
  rec(root);
  return nodes.str() + edges.str();
}

}  // namespace invschub
