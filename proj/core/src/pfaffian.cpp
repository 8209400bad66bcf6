#include "invschub/pfaffian.hpp"

#include <functional>

#include "invschub/error.hpp"
#include "invschub/involution.hpp"
#include "invschub/schubert.hpp"
#include "invschub/symfunc.hpp"

namespace invschub {

SkewSymMatrix::SkewSymMatrix(int n) : n_(n) {
  if (n < 0) throw PreconditionError("matrix size must be nonnegative");
  upper_.resize(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
}

std::size_t SkewSymMatrix::index(int i, int j) const {
  // Row-major packing of the strict upper triangle.
  std::size_t r = i - 1;
  return r * (2 * n_ - r - 1) / 2 + (j - i - 1);
}

Polynomial SkewSymMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw PreconditionError("matrix index out of range");
  if (i == j) return 0;
  if (i < j) return upper_[index(i, j)];
  return -upper_[index(j, i)];
}

void SkewSymMatrix::set(int i, int j, Polynomial v) {
  if (!(1 <= i && i < j && j <= n_)) throw PreconditionError("set needs 1 <= i < j <= n");
  upper_[index(i, j)] = std::move(v);
}

Polynomial pfaffian_definitional(const SkewSymMatrix& a) {
  int n = a.size();
  if (n % 2 == 1) return 0;
  if (n == 0) return 1;
  Polynomial total;
  std::vector<int> z(n + 1, 0);
  std::function<void()> rec = [&] {
    int i = 1;
    while (i <= n && z[i] != 0) ++i;
    if (i > n) {
      std::vector<std::pair<int, int>> cs;
      Polynomial term = 1;
      for (int k = 1; k <= n; ++k) {
        if (z[k] < k) {
          cs.emplace_back(z[k], k);
          term *= a.at(z[k], k);
        }
      }
      int s = inv_length(Involution::from_cycles(cs)) + n / 2;
      if (s % 2) total -= term;
      else total += term;
      return;
    }
    for (int j = i + 1; j <= n; ++j) {
      if (z[j] != 0) continue;
      z[i] = j;
      z[j] = i;
      rec();
      z[i] = z[j] = 0;
    }
  };
  rec();
  return total;
}

namespace {

Polynomial pf_rec(const SkewSymMatrix& a, const std::vector<int>& idx) {
  int m = static_cast<int>(idx.size());
  if (m == 0) return 1;
  if (m % 2 == 1) return 0;
  int last = idx.back();
  Polynomial total;
  for (int k = 0; k < m - 1; ++k) {
    Polynomial e = a.at(idx[k], last);
    if (e.is_zero()) continue;
    std::vector<int> rest;
    for (int t = 0; t < m - 1; ++t)
      if (t != k) rest.push_back(idx[t]);
    Polynomial sub = e * pf_rec(a, rest);
    // Position k (0-based) in a block of size m: sign (-1)^{k+m}.
    if ((k + m) % 2) total -= sub;
    else total += sub;
  }
  return total;
}

Polynomial det_rec(const SkewSymMatrix& a, std::vector<int>& cols, int row) {
  if (row > a.size()) return 1;
  Polynomial total;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    Polynomial e = a.at(row, cols[k]);
    if (e.is_zero()) continue;
    int c = cols[k];
    cols.erase(cols.begin() + static_cast<long>(k));
    Polynomial sub = e * det_rec(a, cols, row + 1);
    cols.insert(cols.begin() + static_cast<long>(k), c);
    if (k % 2) total -= sub;
    else total += sub;
  }
  return total;
}

}  // namespace

Polynomial pfaffian_recursive(const SkewSymMatrix& a) {
  std::vector<int> idx;
  for (int i = 1; i <= a.size(); ++i) idx.push_back(i);
  return pf_rec(a, idx);
}

Polynomial pfaffian(const SkewSymMatrix& a) {
  return a.size() <= 8 ? pfaffian_definitional(a) : pfaffian_recursive(a);
}

Polynomial determinant(const SkewSymMatrix& a) {
  std::vector<int> cols;
  for (int i = 1; i <= a.size(); ++i) cols.push_back(i);
  return det_rec(a, cols, 1);
}

int ell_plus(const std::vector<int>& phi) {
  int l = 0;
  for (int i = 0; i < static_cast<int>(phi.size()); ++i)
    if (phi[i] != 0) l = i + 1;
  return l % 2 ? l + 1 : l;
}

namespace {

void check_phi(const std::vector<int>& phi, int n) {
  if (phi.empty()) throw PreconditionError("phi must be nonempty");
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] < 1 || phi[i] > n) throw PreconditionError("phi entries must lie in [1, n]");
    if (i > 0 && phi[i] <= phi[i - 1]) throw PreconditionError("phi must be strictly increasing");
  }
}

}  // namespace

Polynomial igrass_schubert(const std::vector<int>& phi, int n) {
  std::vector<int> nz;
  for (int v : phi)
    if (v != 0) nz.push_back(v);
  if (nz.empty()) return 1;
  check_phi(nz, n);
  return inv_schubert_poly(i_grassmannian_involution(nz, n));
}

SkewSymMatrix pfaffian_schubert_matrix(const std::vector<int>& phi, int n) {
  check_phi(phi, n);
  int m = ell_plus(phi);
  std::vector<int> padded = phi;
  padded.resize(m, 0);
  SkewSymMatrix a(m);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      std::vector<int> pair{padded[i - 1]};
      if (padded[j - 1] != 0) pair.push_back(padded[j - 1]);
      a.set(i, j, igrass_schubert(pair, n));
    }
  return a;
}

bool verify_pfaffian_theorem(const std::vector<int>& phi, int n) {
  return igrass_schubert(phi, n) == pfaffian(pfaffian_schubert_matrix(phi, n));
}

std::vector<std::vector<int>> all_phi(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> phi;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) phi.push_back(i + 1);
    out.push_back(phi);
  }
  return out;
}

bool pfaffian_derivative_check(const std::vector<int>& phi, int n, int p) {
  check_phi(phi, n);
  if (p < 1 || p >= n) throw PreconditionError("p must lie in [1, n-1]");
  Polynomial lhs = divided_difference(p, pfaffian(pfaffian_schubert_matrix(phi, n)));
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] != p) continue;
    bool blocked = i + 1 < phi.size() && phi[i + 1] == p + 1;
    if (blocked) break;
    std::vector<int> up = phi;
    up[i] = p + 1;
    return lhs == pfaffian(pfaffian_schubert_matrix(up, n));
  }
  return lhs.is_zero();
}

bool schurP_pfaffian_check(const StrictPartition& lambda, int width) {
  Polynomial direct = schurP_to_monomials(lambda, width).poly();
  if (lambda.empty()) return direct == 1;
  int m = ell_plus(lambda.parts());
  SkewSymMatrix a(m);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      std::vector<int> parts{lambda[i - 1]};
      if (lambda[j - 1] != 0) parts.push_back(lambda[j - 1]);
      a.set(i, j, schurP_to_monomials(StrictPartition(parts), width).poly());
    }
  return truncate(pfaffian(a), width) == direct;
}

}  // namespace invschub
