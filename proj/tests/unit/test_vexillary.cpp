#include "doctest.h"
#include "gen.hpp"
#include "invschub/involution.hpp"
#include "invschub/notation.hpp"
#include "invschub/transition.hpp"
#include "invschub/vexillary.hpp"

using namespace invschub;

namespace {
Involution cyc(const char* s) { return Involution(parse_cycles(s)); }

bool is_321_avoiding(const Involution& z) { return !contains_pattern(z.perm(), {3, 2, 1}); }
}  // namespace

TEST_SUITE("vexillary") {
  TEST_CASE("pattern lists") {
    CHECK(eleven_p_patterns().size() == 11);
    CHECK(five_q_patterns().size() == 5);
    CHECK(two_321_patterns().size() == 2);
    for (const auto& p : eleven_p_patterns()) CHECK_FALSE(is_p_vexillary(p.pattern, VexMethod::direct));
    for (const auto& p : five_q_patterns()) CHECK_FALSE(is_q_vexillary(p.pattern, VexMethod::direct));
  }

  TEST_CASE("containment") {
    CHECK(contains_inv_pattern(cyc("(2,4)(5,7)"), Involution{}).has_value());
    auto w = contains_inv_pattern(cyc("(1,2)(3,4)(5,6)"), cyc("(1,2)(3,4)(5,6)"));
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK_FALSE(contains_inv_pattern(cyc("(1,2)"), cyc("(1,2)(3,4)")).has_value());
    // Fixed points outside the support are available to patterns.
    CHECK(contains_inv_pattern(cyc("(2,3)"), cyc("(2,3)"), 3).has_value());
    CHECK(contains_inv_pattern(cyc("(1,2)"), Involution{}, 3).has_value());
  }

  TEST_CASE("rectangles avoid three disjoint arcs") {
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= n * (n + 1) / 2; ++k)
        for (const Partition& mu : partitions(k))
          if (mu.is_rectangle() && staircase(n + 1).strictly_contains(mu))
            CHECK_FALSE(contains_inv_pattern(y_mu_n(mu, n), cyc("(1,2)(3,4)(5,6)")).has_value());
  }

  TEST_CASE("P-vexillary") {
    std::vector<int> v = {1, 2, 4, 10, 24, 63, 159, 423};
    for (int n = 1; n <= 8; ++n) {
      int c = 0;
      for (const Involution& y : all_involutions(n)) c += is_p_vexillary(y);
      CHECK(c == v[n - 1]);
      CHECK(is_p_vexillary(Involution::longest(n)));
    }
    CHECK_FALSE(is_p_vexillary(cyc("(1,2)(3,5)")));
    CHECK_FALSE(is_p_vexillary(cyc("(1,2)(3,5)"), VexMethod::direct));
    CHECK_THROWS(is_p_vexillary(cyc("(1,2)"), VexMethod::vexillary));
  }

  TEST_CASE("P-vexillary routes agree on I6") {
    for (const Involution& y : all_involutions(6))
      CHECK(is_p_vexillary(y, VexMethod::patterns) == is_p_vexillary(y, VexMethod::direct));
  }

  TEST_CASE("random involutions of I10 against the direct route") {
    for (int trial = 0; trial < 25; ++trial) {
      Involution y = gen::involution(10);
      if (inv_length(y) > 14) continue;
      CHECK(is_p_vexillary(y, VexMethod::patterns) == is_p_vexillary(y, VexMethod::direct));
    }
  }

  TEST_CASE("321-avoiding involutions need only two patterns on I7") {
    for (const Involution& y : all_involutions(7)) {
      if (!is_321_avoiding(y)) continue;
      CHECK(is_p_vexillary(y) == !first_pattern_hit(y, two_321_patterns()).has_value());
    }
  }

  TEST_CASE("Q-vexillary") {
    CHECK_FALSE(is_q_vexillary(cyc("(1,2)(3,4)")));
    CHECK_FALSE(is_q_vexillary(cyc("(1,2)(3,4)"), VexMethod::patterns));
    CHECK_FALSE(is_q_vexillary(cyc("(1,2)(3,4)"), VexMethod::direct));
    for (int n = 1; n <= 7; ++n) CHECK(is_q_vexillary(Involution::longest(n), VexMethod::direct));
    for (const Involution& y : all_involutions(6)) {
      bool q = is_q_vexillary(y);
      CHECK(q == is_q_vexillary(y, VexMethod::patterns));
      CHECK(q == is_q_vexillary(y, VexMethod::direct));
      if (q) CHECK(is_p_vexillary(y));
    }
  }

  TEST_CASE("2143") {
    CHECK(contains_2143(Permutation::from_one_line({2, 1, 4, 3})));
    CHECK_FALSE(contains_2143(Permutation::longest(5)));
    // Shifting cannot change 2143 containment.
    for (int trial = 0; trial < 50; ++trial) {
      Permutation w = gen::permutation(6);
      CHECK(contains_2143(w) == contains_2143(shift(w, gen::uniform(-3, 3))));
    }
  }

  TEST_CASE("witnesses") {
    auto hit = first_pattern_hit(cyc("(1,2)(3,5)"), eleven_p_patterns());
    REQUIRE(hit.has_value());
    CHECK(standardize(cyc("(1,2)(3,5)").perm(), hit->witness) == hit->pattern.perm());
  }
}
