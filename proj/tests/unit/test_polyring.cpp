#include "doctest.h"
#include "gen.hpp"
#include "invschub/error.hpp"
#include "invschub/polynomial.hpp"

using namespace invschub;

namespace {
const Polynomial x1 = Polynomial::variable(1);
const Polynomial x2 = Polynomial::variable(2);
const Polynomial x3 = Polynomial::variable(3);
const Permutation s1 = Permutation::simple(1);

// Antisymmetrizer over S_n, used as the oracle for d_{w_n}.
Polynomial antisymmetrize(const Polynomial& f, int n) {
  Polynomial out;
  for (const Permutation& s : all_permutations(n)) {
    Polynomial t = act(s, f);
    out += (length(s) % 2 ? -t : t);
  }
  return out;
}
}  // namespace

TEST_SUITE("polyring") {
  TEST_CASE("ring operations") {
    CHECK((x1 + x2) * (x1 - x2) == pow(x1, 2) - pow(x2, 2));
    CHECK((x1 * Polynomial(0)).is_zero());
    CHECK(x1 * x1 == Polynomial::monomial({2}));
    CHECK((x1 - x1).is_zero());
    CHECK((x1 + x2).degree() == 1);
    CHECK(Polynomial().degree() == -1);
    CHECK((x1 * x3 + x2).num_variables() == 3);
    CHECK_FALSE((x1 * x2 + x3).is_homogeneous());
    CHECK((x1 * x2 + x3 * x3).is_homogeneous());
    CHECK((pow(x1, 2) * BigInt(3) + x1 * x2).to_string() == "3*x1^2 + x1*x2");
  }

  TEST_CASE("arbitrary precision coefficients") {
    Polynomial f = pow(x1 + x2, 80);
    BigInt c = f.coefficient(Monomial::from_exponents({40, 40}));
    CHECK(c.get_str() == "107507208733336176461620");
  }

  TEST_CASE("action of permutations") {
    CHECK(act(s1, x1) == x2);
    CHECK(act(s1, x1 + x2) == x1 + x2);
    for (int trial = 0; trial < 50; ++trial) {
      Permutation s = gen::permutation(4);
      Polynomial f = gen::polynomial(4, 3, 4), g = gen::polynomial(4, 3, 4);
      CHECK(act(s, f * g) == act(s, f) * act(s, g));
      CHECK(swap_adjacent(2, f) == act(Permutation::simple(2), f));
    }
  }

  TEST_CASE("divided differences") {
    CHECK(divided_difference(1, x1) == Polynomial(1));
    CHECK(divided_difference(1, x1 * x2).is_zero());
    CHECK(divided_difference(1, pow(x1, 2)) == x1 + x2);
    CHECK(divide_by_difference(pow(x1, 2) - pow(x3, 2), 1, 3) == x1 + x3);
    CHECK_THROWS_AS(divide_by_difference(x1, 1, 2), InvariantViolation);
  }

  TEST_CASE("isobaric differences") {
    CHECK(isobaric(1, x1) == x1 + x2);
    CHECK(isobaric(1, Polynomial(1)) == Polynomial(1));
    for (int trial = 0; trial < 50; ++trial) {
      Polynomial f = gen::polynomial(4, 4, 5);
      CHECK(isobaric(1, isobaric(1, f)) == isobaric(1, f));
      CHECK(isobaric(2, f) == divided_difference(2, Polynomial::variable(2) * f));
    }
  }

  TEST_CASE("operator words on w_n") {
    for (int n = 1; n <= 4; ++n) {
      Permutation wn = Permutation::longest(n);
      CHECK(op_word(OperatorKind::divided, wn, x_delta(n)) == Polynomial(1));
      for (int trial = 0; trial < 10; ++trial) {
        Polynomial f = gen::polynomial(n, 3, 4);
        CHECK(op_word(OperatorKind::isobaric, wn, f) ==
              op_word(OperatorKind::divided, wn, x_delta(n) * f));
        Polynomial anti = antisymmetrize(f, n);
        CHECK(op_word(OperatorKind::divided, wn, f) * vandermonde(n) == anti);
      }
    }
    CHECK(apply_word(OperatorKind::divided, {1, 2}, pow(x1, 2)) == divided_difference(1, divided_difference(2, pow(x1, 2))));
  }

  TEST_CASE("least term") {
    CHECK(least_term(Polynomial()).coeff == 0);
    Term t = least_term(x2 + x1 * x2);
    CHECK(t.coeff == 1);
    CHECK(t.mono == Monomial::from_exponents({0, 1}));
  }

  TEST_CASE("nil-Coxeter and 0-Hecke relations") {
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial f = gen::polynomial(5, 5, 6);
      for (int i = 1; i <= 3; ++i) {
        CHECK(divided_difference(i, divided_difference(i, f)).is_zero());
        CHECK(divided_difference(i, divided_difference(i + 1, divided_difference(i, f))) ==
              divided_difference(i + 1, divided_difference(i, divided_difference(i + 1, f))));
        CHECK(isobaric(i, isobaric(i + 1, isobaric(i, f))) == isobaric(i + 1, isobaric(i, isobaric(i + 1, f))));
      }
      CHECK(divided_difference(1, divided_difference(3, f)) == divided_difference(3, divided_difference(1, f)));
    }
  }

  TEST_CASE("Leibniz rule") {
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial f = gen::polynomial(4, 3, 4), g = gen::polynomial(4, 3, 4);
      int i = gen::uniform(1, 3);
      CHECK(divided_difference(i, f * g) ==
            divided_difference(i, f) * g + swap_adjacent(i, f) * divided_difference(i, g));
    }
  }

  TEST_CASE("isobaric chain on partially symmetric input") {
    // If d_i f = 0 for a < i < b then pi_{b-1}...pi_a f = d_{b-1}...d_a (x_a^{b-a} f).
    for (int trial = 0; trial < 20; ++trial) {
      int a = 1, b = 4;
      // Symmetric in x2,x3,x4 by construction.
      Polynomial g = gen::polynomial(1, 3, 2);
      Polynomial e = x2 + x3 + Polynomial::variable(4);
      Polynomial p = x2 * x3 * Polynomial::variable(4);
      Polynomial f = g * pow(e, gen::uniform(0, 2)) * pow(p, gen::uniform(0, 1)) + pow(x1, 2) * e;
      Word w;
      for (int i = b - 1; i >= a; --i) w.push_back(i);
      CHECK(apply_word(OperatorKind::isobaric, w, f) ==
            apply_word(OperatorKind::divided, w, pow(x1, b - a) * f));
    }
  }

  TEST_CASE("truncation and symmetry") {
    CHECK(truncate(x1 + x2 + x3, 2) == x1 + x2);
    CHECK(is_symmetric(x1 * x2 + x1 * x3 + x2 * x3, 3));
    CHECK_FALSE(is_symmetric(x1, 2));
    CHECK(x_delta(3) == pow(x1, 2) * x2);
    CHECK(vandermonde(2) == x1 - x2);
  }

  TEST_CASE("machine terms") {
    auto mt = (x1 + pow(x2, 2) * BigInt(2)).machine_terms();
    REQUIRE(mt.size() == 2);
    CHECK(mt[0].first == std::vector<int>{0, 2});
    CHECK(mt[0].second == 2);
  }
}
