#include "doctest.h"
#include "gen.hpp"
#include "invschub/error.hpp"
#include "invschub/pfaffian.hpp"
#include "invschub/schubert.hpp"
#include "invschub/symfunc.hpp"

using namespace invschub;

namespace {
Polynomial x(int i) { return Polynomial::variable(i); }

// Generic matrix with a_ij = x_{index(i,j)}.
SkewSymMatrix generic(int n) {
  SkewSymMatrix a(n);
  int k = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) a.set(i, j, x(k++));
  return a;
}

SkewSymMatrix random_matrix(int n) {
  SkewSymMatrix a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) a.set(i, j, Polynomial(gen::uniform(-4, 4)));
  return a;
}
}  // namespace

TEST_SUITE("pfaffian") {
  TEST_CASE("small Pfaffians") {
    SkewSymMatrix a2 = generic(2);
    CHECK(pfaffian(a2) == a2.at(1, 2));
    CHECK(pfaffian(a2) == -a2.at(2, 1));
    SkewSymMatrix a = generic(4);
    Polynomial expect = a.at(2, 1) * a.at(4, 3) - a.at(3, 1) * a.at(4, 2) + a.at(4, 1) * a.at(3, 2);
    CHECK(pfaffian(a) == expect);
    CHECK(pfaffian(generic(3)).is_zero());
    CHECK(a.at(2, 2).is_zero());
    CHECK_THROWS_AS(a.set(2, 1, Polynomial(1)), PreconditionError);
  }

  TEST_CASE("all-ones matrices") {
    for (int n = 2; n <= 8; n += 2) {
      SkewSymMatrix a(n);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) a.set(i, j, Polynomial(1));
      CHECK(pfaffian(a) == Polynomial(1));
    }
  }

  TEST_CASE("square of the Pfaffian is the determinant") {
    for (int trial = 0; trial < 30; ++trial) {
      int n = gen::uniform(1, 6);
      SkewSymMatrix a = random_matrix(n);
      Polynomial pf = pfaffian(a);
      CHECK(pf * pf == determinant(a));
    }
    SkewSymMatrix g = generic(4);
    CHECK(pfaffian(g) * pfaffian(g) == determinant(g));
  }

  TEST_CASE("definitional sum and recursion agree") {
    for (int n = 1; n <= 8; ++n) {
      SkewSymMatrix g = generic(n);
      CHECK(pfaffian_definitional(g) == pfaffian_recursive(g));
    }
    SkewSymMatrix big = random_matrix(10);
    CHECK(pfaffian(big) == pfaffian_definitional(big));
  }

  TEST_CASE("Schubert matrices") {
    CHECK(ell_plus({2, 3}) == 2);
    CHECK(ell_plus({1, 2, 3}) == 4);
    for (int n = 1; n <= 4; ++n) {
      SkewSymMatrix m = pfaffian_schubert_matrix({1}, n);
      CHECK(m.size() == 2);
      Polynomial d = x(1);
      for (int k = 2; k <= n; ++k) d *= x(1) + x(k);
      CHECK(m.at(1, 2) == d);
      CHECK(pfaffian(m) == d);
    }
    SkewSymMatrix m = pfaffian_schubert_matrix({1, 2, 3}, 3);
    CHECK(m.size() == 4);
    CHECK(m.at(1, 4) == igrass_schubert({1}, 3));
    CHECK(m.at(1, 2) == igrass_schubert({1, 2}, 3));
    CHECK_THROWS_AS(pfaffian_schubert_matrix({2, 2}, 3), PreconditionError);
    CHECK_THROWS_AS(pfaffian_schubert_matrix({1, 4}, 3), PreconditionError);
  }

  TEST_CASE("Pfaffian formula") {
    Polynomial expect = x(1) * x(2) * x(3) * (x(1) + x(2)) * (x(1) + x(3)) * (x(2) + x(3));
    CHECK(pfaffian(pfaffian_schubert_matrix({1, 2, 3}, 3)) == expect);
    CHECK(verify_pfaffian_theorem({1, 2, 3}, 3));
    CHECK(verify_pfaffian_theorem({1}, 1));
    CHECK(igrass_schubert({1}, 1) == x(1));
    for (int n = 1; n <= 4; ++n)
      for (const auto& phi : all_phi(n)) CHECK(verify_pfaffian_theorem(phi, n));
    CHECK(all_phi(3).size() == 7);
  }

  TEST_CASE("derivative rule") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& phi : all_phi(n))
        for (int p = 1; p < n; ++p) CHECK(pfaffian_derivative_check(phi, n, p));
  }

  TEST_CASE("least terms of two-cycle entries") {
    for (int n = 2; n <= 5; ++n)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          std::vector<int> e(n, 0);
          for (int k = i; k <= n; ++k) ++e[k - 1];
          for (int k = j; k <= n; ++k) ++e[k - 1];
          Term t = least_term(igrass_schubert({i, j}, n));
          CHECK(t.coeff == 1);
          CHECK(t.mono == Monomial::from_exponents(e));
        }
  }

  TEST_CASE("Schur P Pfaffians") {
    auto p = [](std::vector<int> v) { return schurP_to_monomials(StrictPartition(v), 6).poly(); };
    CHECK(p({3, 2, 1}) == p({3, 2}) * p({1}) - p({3, 1}) * p({2}) + p({2, 1}) * p({3}));
    for (int k = 1; k <= 4; ++k) CHECK(schurP_pfaffian_check(StrictPartition({k}), 4));
    for (int k = 1; k <= 7; ++k)
      for (const auto& lam : strict_partitions(k)) CHECK(schurP_pfaffian_check(lam, k));
  }
}
