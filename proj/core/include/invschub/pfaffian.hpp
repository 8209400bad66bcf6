#pragma once

#include <vector>

#include "invschub/partition.hpp"
#include "invschub/polynomial.hpp"

namespace invschub {

// Skew-symmetric matrix stored by its entries above the diagonal; indices are 1-based.
class SkewSymMatrix {
 public:
  explicit SkewSymMatrix(int n = 0);
  int size() const { return n_; }
  // Entry (i,j); zero on the diagonal and negated below it.
  Polynomial at(int i, int j) const;
  void set(int i, int j, Polynomial v);  // requires i < j

 private:
  int n_;
  std::vector<Polynomial> upper_;
  std::size_t index(int i, int j) const;
};

// Signed sum over fixed-point-free involutions of [n].
Polynomial pfaffian_definitional(const SkewSymMatrix& a);
// Expansion along the last row.
Polynomial pfaffian_recursive(const SkewSymMatrix& a);
// Definitional sum up to n = 8, recursion beyond.
Polynomial pfaffian(const SkewSymMatrix& a);
// Cofactor expansion of the full matrix.
Polynomial determinant(const SkewSymMatrix& a);

// l(phi) rounded up to the next even number.
int ell_plus(const std::vector<int>& phi);
// The I-Grassmannian involution Schubert polynomial for (phi_1,n+1)...(phi_r,n+r).
Polynomial igrass_schubert(const std::vector<int>& phi, int n);
// Entries S-hat[phi_i, phi_j; n], padded with a zero part when r is odd.
SkewSymMatrix pfaffian_schubert_matrix(const std::vector<int>& phi, int n);
bool verify_pfaffian_theorem(const std::vector<int>& phi, int n);
// Every phi with 0 < phi_1 < ... < phi_r <= n, r >= 1.
std::vector<std::vector<int>> all_phi(int n);

// d_p pf M[phi;n] against pf M[phi+e_i;n] (p = phi_i, p+1 not in phi) or zero.
bool pfaffian_derivative_check(const std::vector<int>& phi, int n, int p);

// P_lambda against pf [P_{lambda_i lambda_j}] in width variables.
bool schurP_pfaffian_check(const StrictPartition& lambda, int width);

}  // namespace invschub
