#include <map>
#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "invschub/error.hpp"
#include "invschub/insertion.hpp"
#include "invschub/involution.hpp"
#include "invschub/notation.hpp"
#include "invschub/schubert.hpp"
#include "invschub/symfunc.hpp"
#include "invschub/transition.hpp"

using namespace invschub;

namespace {
using Rows = std::vector<std::vector<int>>;
using SetRows = std::vector<std::vector<std::vector<int>>>;

ShiftedTableau T(Rows r) { return ShiftedTableau{std::move(r)}; }
SetValuedShiftedTableau S(SetRows r) { return SetValuedShiftedTableau{std::move(r)}; }

const Word kTraceWord = {5, 4, 1, 3, 4, 5, 2, 1, 2};

const std::vector<ShiftedTableau> kTraceP = {
    T({{5}}),
    T({{4, 5}}),
    T({{1, 4, 5}}),
    T({{1, 3, 5}, {4}}),
    T({{1, 3, 4}, {4, 5}}),
    T({{1, 3, 4, 5}, {4, 5}}),
    T({{1, 2, 4, 5}, {3, 5}}),
    T({{1, 2, 3, 4, 5}, {3, 5}}),
    T({{1, 2, 3, 4, 5}, {3, 5}}),
};

const std::vector<SetValuedShiftedTableau> kTraceQ = {
    S({{{1}}}),
    S({{{1}, {-2}}}),
    S({{{1}, {-2}, {-3}}}),
    S({{{1}, {-2}, {-3}}, {{4}}}),
    S({{{1}, {-2}, {-3}}, {{4}, {5}}}),
    S({{{1}, {-2}, {-3}, {6}}, {{4}, {5}}}),
    S({{{1}, {-2}, {-3}, {6, -7}}, {{4}, {5}}}),
    S({{{1}, {-2}, {-3}, {6, -7}, {-8}}, {{4}, {5}}}),
    S({{{1}, {-2}, {-3}, {6, -7}, {-8}}, {{4}, {5, -9}}}),
};

// v^{-1} o v for v the Demazure product of the letters.
Permutation hecke_square(const Word& a) {
  Permutation v;
  for (int x : a) v = demazure_product(v, Permutation::simple(x));
  return demazure_product(v.inverse(), v);
}

Polynomial fundamental_of_descents(int len, const std::set<int>& des, int n) {
  std::set<int> strict;
  for (int i = 1; i < len; ++i)
    if (!des.count(i)) strict.insert(i);
  return fundamental_quasisymmetric(len, strict, n);
}
}  // namespace

TEST_SUITE("insertion") {
  TEST_CASE("bump") {
    auto a = bump(7, 0, {3, 5});
    CHECK(a.q == 0);
    CHECK(a.dir == 0);
    CHECK(a.m == std::vector<int>{3, 5, 7});
    auto b = bump(5, 0, {3, 5});
    CHECK(b.q == 0);
    CHECK(b.m == std::vector<int>{3, 5});
    CHECK(b.equal_last);
    auto c = bump(4, 0, {3, 5});
    CHECK(c.q == 5);
    CHECK(c.dir == 0);
    CHECK(c.m == std::vector<int>{3, 4});
    auto d = bump(2, 0, {3, 5});
    CHECK(d.q == 3);
    CHECK(d.dir == 1);
    CHECK(d.m == std::vector<int>{2, 5});
    auto e = bump(3, 0, {3, 5});
    CHECK(e.q == 5);
    CHECK(e.dir == 1);
    CHECK(e.m == std::vector<int>{3, 5});
    auto f = bump(4, 1, {});
    CHECK(f.q == 0);
    CHECK(f.m == std::vector<int>{4});
  }

  TEST_CASE("insert") {
    auto a = insert(3, ShiftedTableau{});
    CHECK(a.j == 1);
    CHECK(a.dir == 0);
    CHECK(a.p == T({{3}}));
    auto b = insert(4, T({{5}}));
    CHECK(b.p == T({{4, 5}}));
    CHECK(b.dir == 1);
    CHECK(insert(2, kTraceP[5]).p == kTraceP[6]);
  }

  TEST_CASE("shifted Hecke insertion trace") {
    SHResult r = shifted_hecke_insert(kTraceWord);
    REQUIRE(r.trace.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
      CAPTURE(i);
      CHECK(r.trace[i].letter == kTraceWord[i]);
      CHECK(r.trace[i].p == kTraceP[i]);
      CHECK(r.trace[i].q == kTraceQ[i]);
    }
    CHECK(r.p == kTraceP.back());
    CHECK(r.q == kTraceQ.back());
    CHECK(r.q.is_standard(9));
    CHECK(shifted_hecke_insert({}).p.empty());
    CHECK(shifted_hecke_insert({}).q.rows.empty());
  }

  TEST_CASE("descents") {
    CHECK(word_descents(kTraceWord) == std::set<int>{1, 2, 6, 7});
    CHECK(tableau_descents(kTraceQ.back()) == std::set<int>{1, 2, 6, 7});
    CHECK(word_descents({}).empty());
    for (int len = 0; len <= 6; ++len)
      for (const Word& a : gen::all_words(len, 4)) CHECK(word_descents(a) == tableau_descents(shifted_hecke_insert(a).q));
  }

  TEST_CASE("reading words") {
    CHECK(reading_word(kTraceP.back()) == Word{3, 5, 1, 2, 3, 4, 5});
    CHECK(reading_word(T({{4}})) == Word{4});
    auto inc = increasing_tableaux(StrictPartition({3, 1}), 5);
    CHECK_FALSE(inc.empty());
    for (const auto& p : inc) {
      CHECK(p.is_increasing());
      CHECK(shifted_hecke_insert(reading_word(p)).p == p);
    }
  }

  TEST_CASE("shifted Hecke insertion is a bijection on short words over [3]") {
    for (int n = 0; n <= 5; ++n) {
      std::set<std::pair<ShiftedTableau, SetValuedShiftedTableau>> images;
      std::size_t words = 0;
      for (const Word& a : gen::all_words(n, 3)) {
        SHResult r = shifted_hecke_insert(a);
        CHECK_FALSE(r.rejected);
        CHECK(r.p.is_increasing());
        CHECK(r.q.is_standard(n));
        CHECK(r.p.shape() == r.q.shape());
        images.insert({r.p, r.q});
        ++words;
      }
      CHECK(images.size() == words);
      std::size_t pairs = 0;
      for (int k = 0; k <= 6; ++k)
        for (const auto& lam : k ? strict_partitions(k) : std::vector<StrictPartition>{StrictPartition{}}) {
          std::size_t inc = increasing_tableaux(lam, 3).size();
          if (inc) pairs += inc * standard_set_valued_tableaux(lam, n).size();
        }
      CHECK(pairs == words);
    }
  }

  TEST_CASE("equal insertion tableaux imply weak K-Knuth equivalence") {
    std::map<ShiftedTableau, std::vector<Word>> classes;
    for (int n = 0; n <= 4; ++n)
      for (const Word& a : gen::all_words(n, 3)) classes[shifted_hecke_insert(a).p].push_back(a);
    for (const auto& [p, ws] : classes)
      for (std::size_t k = 1; k < ws.size(); ++k) CHECK(weak_k_knuth_equivalent(ws[0], ws[k]));
  }

  TEST_CASE("weak K-Knuth moves") {
    CHECK(weak_k_knuth_equivalent({1, 3}, {3, 1}));
    CHECK(weak_k_knuth_equivalent({1, 1}, {1}));
    CHECK(weak_k_knuth_equivalent({2, 1, 3}, {2, 3, 1}));
    auto s = weak_k_knuth_search({1, 2}, {1}, 4);
    CHECK(s.outcome != KnuthOutcome::equivalent);
    CHECK(weak_k_knuth_search({1, 2}, {1}, 3, 5).outcome == KnuthOutcome::state_limit);
    // Moves preserve v^{-1} o v.
    for (int trial = 0; trial < 200; ++trial) {
      Word a = gen::word(gen::uniform(1, 6), 4);
      for (const Word& b : k_knuth_neighbours(a, true, 8)) CHECK(hecke_square(a) == hecke_square(b));
    }
  }

  TEST_CASE("involution Coxeter-Knuth insertion") {
    ICKResult r = involution_ck_insert({3, 5, 4, 1, 2, 3});
    CHECK(r.y == Involution(parse_one_line("456123")));
    CHECK(r.p == T({{1, 2, 3}, {3, 4}, {5}}));
    CHECK(r.q == T({{1, 2, -4}, {3, -5}, {6}}));
    ICKResult e = involution_ck_insert({});
    CHECK(e.p.empty());
    CHECK(e.q.empty());
    CHECK_THROWS_AS(involution_ck_insert({1, 1}), PreconditionError);
  }

  TEST_CASE("involution Coxeter-Knuth insertion is injective on involution words") {
    for (int n = 2; n <= 5; ++n) {
      std::set<std::pair<ShiftedTableau, ShiftedTableau>> seen;
      auto words = involution_words(Involution::longest(n));
      for (const Word& a : words) {
        ICKResult r = involution_ck_insert(a);
        CHECK(is_involution_word(reading_word(r.p)));
        CHECK(involution_of_word(reading_word(r.p)) == Involution::longest(n));
        seen.insert({r.p, r.q});
      }
      CHECK(seen.size() == words.size());
    }
    CHECK(involution_words(Involution::longest(4)).size() == 8);
  }

  TEST_CASE("beta coefficients") {
    SymFunExpansion z;
    z.basis = Basis::schurP;
    z.add(Partition({3, 1}), 2);
    z.add(Partition({4}), 1);
    CHECK(beta_coefficients(Involution(parse_cycles("(2,4)(5,7)"))) == z);
    for (int n = 1; n <= 6; ++n) CHECK(beta_coefficients(Involution::longest(n)) == expand_Fhat(Involution::longest(n)));
    CHECK(beta_coefficients(Involution{}).coefficient(Partition{}) == 1);
    CHECK_THROWS_AS(beta_coefficients(Involution::longest(7), 8), GuardExceeded);
  }

  TEST_CASE("words, tableaux and trees agree on I5") {
    for (const Involution& y : all_involutions(5)) {
      SymFunExpansion b = beta_coefficients(y);
      CHECK(b == expand_Fhat(y));
      int d = inv_length(y);
      if (d == 0) continue;
      Polynomial words;
      for (const Word& a : involution_words(y)) words += fundamental_of_descents(d, word_descents(a), d);
      CHECK(words == to_truncation(to_monomial_vector(b), d).poly());
    }
  }

  TEST_CASE("P functions from standard marked tableaux") {
    for (auto parts : std::vector<std::vector<int>>{{2, 1}, {3, 1}, {3}, {3, 2}}) {
      StrictPartition lam(parts);
      int n = lam.size();
      Polynomial sum;
      for (const auto& t : standard_set_valued_tableaux(lam, n))
        if (t.all_singletons()) sum += fundamental_of_descents(n, tableau_descents(t), n);
      CHECK(sum == schurP_to_monomials(lam, n).poly());
    }
  }

  TEST_CASE("Coxeter-Knuth classes match insertion tableaux") {
    CHECK(conjecture_ck_search(5, 4).empty());
    CHECK(conjecture_ck_search(1, 3).empty());
  }

  TEST_CASE("text format") {
    CHECK(to_text(T({{1, 2}, {3}})) == "1 2\n  3\n");
    CHECK(to_text(kTraceQ[6]).find("{6,7'}") != std::string::npos);
    CHECK(marked_order_key(-1) < marked_order_key(1));
    CHECK(marked_order_key(1) < marked_order_key(-2));
  }
}
