#include "doctest.h"
#include "gen.hpp"
#include "invschub/error.hpp"
#include "invschub/involution.hpp"
#include "invschub/notation.hpp"
#include "invschub/schubert.hpp"
#include "invschub/symfunc.hpp"

using namespace invschub;

namespace {
Polynomial x(int i) { return Polynomial::variable(i); }
Involution cyc(const char* s) { return Involution(parse_cycles(s)); }
Partition P(std::vector<int> v) { return Partition(v); }

SymFunExpansion expansion(Basis b, std::vector<std::pair<std::vector<int>, int>> terms) {
  SymFunExpansion e;
  e.basis = b;
  for (auto& [shape, c] : terms) e.add(Partition(shape), c);
  return e;
}

// Monomial sums such as sum_{i<j} x_i^a x_j^b in n variables.
Polynomial pair_sum(int a, int b, int n) {
  Polynomial out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out += pow(x(i), a) * pow(x(j), b);
  return out;
}
}  // namespace

TEST_SUITE("symfunc") {
  TEST_CASE("partitions") {
    CHECK(P({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
    CHECK_THROWS_AS(P({1, 3}), PreconditionError);
    CHECK_THROWS_AS(StrictPartition({2, 2}), PreconditionError);
    CHECK(P({3, 1}).transpose() == P({2, 1, 1}));
    CHECK(staircase(4) == P({3, 2, 1}));
    CHECK(partitions(5).size() == 7);
    CHECK(strict_partitions(8).size() == 6);
    CHECK(partitions(4).front() == P({4}));
    CHECK(P({2, 2}).is_rectangle());
    CHECK(P({3, 2}).strictly_contains(P({2, 1})));
    CHECK_FALSE(P({3, 2}).strictly_contains(P({3})));
    CHECK(to_string(P({3, 1})) == "(3,1)");
  }

  TEST_CASE("dominance") {
    CHECK(dominance_leq(P({1, 1, 1}), P({3})));
    CHECK(dominance_leq(P({2, 2}), P({3, 1})));
    CHECK_FALSE(dominance_leq(P({3, 1}), P({2, 2})));
    CHECK_FALSE(dominance_leq(P({2}), P({3})));
    for (int n = 1; n <= 8; ++n)
      for (const auto& a : partitions(n))
        for (const auto& b : partitions(n))
          CHECK(dominance_leq(a, b) == dominance_leq(b.transpose(), a.transpose()));
  }

  TEST_CASE("Schur truncations") {
    for (int n = 1; n <= 4; ++n) {
      CHECK(schur_to_monomials(P({1, 1}), n).poly() == pair_sum(1, 1, n));
      CHECK(schur_to_monomials(Partition{}, n).poly() == Polynomial(1));
      Polynomial e;
      for (int k = 1; k <= n; ++k) e += x(k);
      CHECK(schur_to_monomials(P({2}), n).poly() + schur_to_monomials(P({1, 1}), n).poly() == e * e);
    }
  }

  TEST_CASE("Schur P truncations") {
    for (int n = 1; n <= 5; ++n) {
      Polynomial triple;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) triple += x(i) * x(j) * x(k);
      Polynomial expect = triple * BigInt(2) + pair_sum(2, 1, n) + pair_sum(1, 2, n);
      CHECK(schurP_to_monomials(StrictPartition({2, 1}), n).poly() == expect);
      CHECK(schurP_to_monomials(StrictPartition{}, n).poly() == Polynomial(1));
    }
  }

  TEST_CASE("monomial vectors match truncations") {
    for (int k = 1; k <= 6; ++k) {
      for (const auto& lam : partitions(k))
        CHECK(to_truncation(schur_monomial_vector(lam), k) == schur_to_monomials(lam, k));
      for (const auto& lam : strict_partitions(k))
        CHECK(to_truncation(schurP_monomial_vector(lam), k) == schurP_to_monomials(lam, k));
    }
  }

  TEST_CASE("Schur P expansion") {
    auto e = expand_in_schurP(stable_Fhat(cyc("(2,4)(5,7)"), 4), 4);
    CHECK(e == expansion(Basis::schurP, {{{3, 1}, 2}, {{4}, 1}}));
    for (int k = 1; k <= 6; ++k)
      for (const auto& lam : strict_partitions(k))
        CHECK(expand_in_schurP(schurP_to_monomials(lam, k), k) ==
              expansion(Basis::schurP, {{lam.parts(), 1}}));
    auto w5 = expand_in_schurP(stable_Fhat(Involution::longest(5), 6), 6);
    CHECK(w5 == expansion(Basis::schurP, {{{4, 2}, 1}}));
    CHECK_THROWS_AS(expand_in_schurP(schur_to_monomials(P({1, 1}), 2), 2), NotInSpan);
  }

  TEST_CASE("P functions expand in Schur functions unitriangularly") {
    for (int k = 1; k <= 7; ++k)
      for (const auto& lam : strict_partitions(k)) {
        SymFunExpansion s = expand_in_schur(schurP_monomial_vector(lam));
        CHECK(s.coefficient(lam.as_partition()) == 1);
        for (const auto& [nu, c] : s.coeffs) {
          CHECK(c > 0);
          CHECK(dominance_leq(nu, lam.as_partition()));
        }
        CHECK(s == schurP_to_schur(expansion(Basis::schurP, {{lam.parts(), 1}})));
      }
  }

  TEST_CASE("skew Schur functions") {
    CHECK(skew_schur(P({3, 1}), P({3, 1}), 3).poly() == Polynomial(1));
    CHECK(skew_schur(staircase(3), Partition{}, 4) == schur_to_monomials(P({2, 1}), 4));
    CHECK_THROWS_AS(skew_schur(P({2}), P({3}), 3), PreconditionError);
    // s_{(2,1)/(1)} = s_2 + s_11 = h_1^2.
    Polynomial e = x(1) + x(2) + x(3);
    CHECK(skew_schur(P({2, 1}), P({1}), 3).poly() == e * e);
  }

  TEST_CASE("skew staircases give involution Stanley functions") {
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= n * (n + 1) / 2; ++k)
        for (const Partition& mu : partitions(k)) {
          if (!staircase(n + 1).strictly_contains(mu)) continue;
          Involution y = y_mu_n(mu, n);
          int d = inv_length(y);
          CHECK(skew_schur(staircase(n + 1), mu, d) == stable_Fhat(y, d));
          CHECK(skew_schur_monomial_vector(staircase(n + 1), mu) == inv_stanley_monomial_vector(y));
        }
  }

  TEST_CASE("equivalent skew shapes") {
    CHECK(cells_equivalent(skew_cells(P({2, 1}), Partition{}), CellSet{{1, 1}, {1, 2}, {2, 1}}));
    CHECK(cells_equivalent(CellSet{{1, 2}, {2, 1}}, CellSet{{1, 1}, {2, 2}}));
    CHECK_FALSE(cells_equivalent(CellSet{{1, 1}, {1, 2}}, CellSet{{1, 1}, {2, 1}}));
    // Row and column permutation invariance of the skew Schur function.
    CHECK(cells_equivalent(skew_cells(P({3, 1}), P({1})), skew_cells(P({3, 2}), P({2}))));
    CHECK(skew_schur(P({3, 1}), P({1}), 3) == skew_schur(P({3, 2}), P({2}), 3));
  }

  TEST_CASE("Schur Q rescaling") {
    auto p1 = expansion(Basis::schurP, {{{1}, 1}});
    CHECK(schurQ_scale(p1, 1) == expansion(Basis::schurQ, {{{1}, 1}}));
    CHECK(schurQ_scale(expansion(Basis::schurP, {{{2}, 1}}), 1) == expansion(Basis::schurQ, {{{2}, 1}}));
    auto z = expansion(Basis::schurP, {{{3, 1}, 2}, {{4}, 1}});
    CHECK(schurQ_scale(z, 2) == expansion(Basis::schurQ, {{{3, 1}, 2}, {{4}, 2}}));
    CHECK_THROWS_AS(schurQ_scale(expansion(Basis::schurP, {{{2, 1}, 1}}), 1), Falsification);
  }

  TEST_CASE("fundamental quasisymmetric functions are independent") {
    // Their monomial vectors at degree n over subsets of [n-1] have full rank.
    for (int n = 1; n <= 5; ++n) {
      std::vector<Polynomial> fs;
      for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::set<int> s;
        for (int b = 0; b < n - 1; ++b)
          if (mask >> b & 1) s.insert(b + 1);
        fs.push_back(fundamental_quasisymmetric(n, s, n));
      }
      // The coefficient of x_1^{c_1}...x_k^{c_k} for the composition of S isolates f_S.
      for (std::size_t a = 0; a < fs.size(); ++a) {
        std::vector<int> comp;
        int last = 0;
        for (int b = 0; b < n - 1; ++b)
          if (a >> b & 1) comp.push_back(b + 1 - last), last = b + 1;
        comp.push_back(n - last);
        Monomial m = Monomial::from_exponents(comp);
        for (std::size_t b = 0; b < fs.size(); ++b) {
          BigInt c = fs[b].coefficient(m);
          // f_T contains x^comp(S) iff T is contained in S.
          CHECK(c == ((b & ~a) == 0 ? 1 : 0));
        }
      }
    }
  }

  TEST_CASE("serialization") {
    auto e = expansion(Basis::schurP, {{{4}, 1}, {{3, 1}, 2}});
    CHECK(e.to_json() == R"({"version":1,"basis":"SchurP","terms":[{"shape":[4],"coeff":1},{"shape":[3,1],"coeff":2}]})");
    CHECK(e.sorted_terms().front().first == P({4}));
  }
}
