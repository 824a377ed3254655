#include <doctest.h>

#include "ramsey/cycles.hpp"
#include "ramsey/ramsey_numbers.hpp"
#include "test_util.hpp"

using namespace ramsey;
using namespace ramsey::testutil;

namespace {

bool witness_clean(const MultiColouredGraph& g, const CycleTriple& t) {
  struct Want {
    Colour colour;
    int length;
  };
  for (Want want : {Want{Colour::red, t.n_red}, Want{Colour::blue, t.n_blue},
                    Want{Colour::green, t.n_green}}) {
    if (want.length > g.vertex_count()) continue;
    if (find_cycle_exact(g.slice(want.colour), want.length)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parity floors") {
  CHECK(even_floor(Rat(11, 2)) == 4);
  CHECK(odd_floor(Rat(11, 2)) == 5);
  CHECK(even_floor(Rat(6)) == 6);
  CHECK(odd_floor(Rat(6)) == 5);
  CHECK(even_floor(Rat(7)) == 6);
  CHECK(odd_floor(Rat(7)) == 7);
  CHECK_THROWS_AS(even_floor(Rat(1)), PreconditionError);
  CHECK_THROWS_AS(odd_floor(Rat(1, 2)), PreconditionError);
}

TEST_CASE("theorem A values") {
  CHECK(theorem_A_value({4, 4, 3, ParityProfile::even_even_odd}) == 9);
  CHECK(theorem_A_value({6, 4, 11, ParityProfile::even_even_odd}) == 14);
  CHECK_THROWS_AS(theorem_A_value({4, 6, 3, ParityProfile::even_even_odd}),
                  PreconditionError);  // n_red < n_blue
  CHECK_THROWS_AS(theorem_A_value({5, 4, 3, ParityProfile::even_even_odd}),
                  PreconditionError);  // parity
}

TEST_CASE("theorem C values") {
  CHECK(theorem_C_value({4, 3, 3, ParityProfile::even_odd_odd}) == 13);
  CHECK(theorem_C_value({4, 5, 3, ParityProfile::even_odd_odd}) == 13);
  CHECK(theorem_C_value({4, 7, 9, ParityProfile::even_odd_odd}) == 19);
  CHECK_THROWS_AS(theorem_C_value({4, 4, 3, ParityProfile::even_odd_odd}),
                  PreconditionError);
}

TEST_CASE("certify_lower_bound at the spec's example triples") {
  auto a = certify_lower_bound({4, 4, 3, ParityProfile::even_even_odd});
  CHECK(a.N == 8);
  REQUIRE(a.witness.has_value());
  CHECK(a.witness->vertex_count() == 8);
  CHECK(witness_clean(*a.witness, {4, 4, 3, ParityProfile::even_even_odd}));

  auto b = certify_lower_bound({6, 4, 11, ParityProfile::even_even_odd});
  CHECK(b.N == 13);
  CHECK(b.witness->vertex_count() == 13);

  auto c = certify_lower_bound({4, 4, 5, ParityProfile::even_even_odd});
  CHECK(c.N == 8);
}

TEST_CASE("search finds the (4,4,3) witness at N = 5 and N = 8") {
  SearchOptions options;
  auto at5 =
      search_ramsey({4, 4, 3, ParityProfile::even_even_odd}, 5, options);
  REQUIRE(at5.witness.has_value());
  CHECK(witness_clean(*at5.witness, {4, 4, 3, ParityProfile::even_even_odd}));

  auto at8 =
      search_ramsey({4, 4, 3, ParityProfile::even_even_odd}, 8, options);
  REQUIRE(at8.witness.has_value());
  CHECK(witness_clean(*at8.witness, {4, 4, 3, ParityProfile::even_even_odd}));
  CHECK(at8.stats.nodes > 0);
}

TEST_CASE("witness at N restricts to a witness at N-1") {
  auto outcome = search_ramsey({4, 4, 3, ParityProfile::even_even_odd}, 8);
  REQUIRE(outcome.witness.has_value());
  std::vector<int> first7 = iota_vec(0, 7);
  MultiColouredGraph restricted = outcome.witness->induced(first7);
  CHECK(witness_clean(restricted, {4, 4, 3, ParityProfile::even_even_odd}));
}

TEST_CASE("search on (3,3,3) at N = 5 finds a witness") {
  auto outcome = search_ramsey({3, 3, 3, ParityProfile::free_profile}, 5);
  REQUIRE(outcome.witness.has_value());
  CHECK(
      witness_clean(*outcome.witness, {3, 3, 3, ParityProfile::free_profile}));
}

TEST_CASE("search with and without symmetry breaking agree at N <= 6") {
  for (int n_red = 3; n_red <= 5; ++n_red) {
    for (int n_blue = 3; n_blue <= 5; ++n_blue) {
      for (int n_green = 3; n_green <= 5; ++n_green) {
        for (int N = 4; N <= 6; ++N) {
          CycleTriple t{n_red, n_blue, n_green, ParityProfile::free_profile};
          SearchOptions with, without;
          without.symmetry_breaking = false;
          auto a = search_ramsey(t, N, with);
          auto b = search_ramsey(t, N, without);
          CHECK(a.witness.has_value() == b.witness.has_value());
          if (a.witness) {
            CHECK(witness_clean(*a.witness, t));
            CHECK(witness_clean(*b.witness, t));
          }
        }
      }
    }
  }
}

TEST_CASE("threaded search agrees with single-threaded") {
  CycleTriple t{4, 4, 3, ParityProfile::even_even_odd};
  SearchOptions st, mt;
  mt.threads = 4;
  auto a = search_ramsey(t, 7, st);
  auto b = search_ramsey(t, 7, mt);
  CHECK(a.witness.has_value() == b.witness.has_value());
  if (a.witness && b.witness) {
    CHECK(*a.witness == *b.witness);  // deterministic merge
  }
}

TEST_CASE("budget errors are distinct from exhaustion") {
  SearchOptions options;
  options.node_budget = 10;
  CHECK_THROWS_AS(
      search_ramsey({3, 3, 3, ParityProfile::free_profile}, 6, options),
      BudgetError);
}

TEST_CASE("theorem B side conditions") {
  Parameters p;
  p.alpha1 = p.alpha2 = p.alpha3 = Rat(1);
  p.eta = Rat(1, 10000);
  auto report = theorem_B_side_conditions(p);
  CHECK(report.c == Rat(3));
  CHECK(report.structures_H_permitted);
  CHECK(!report.structures_K_permitted);  // 1 < 2 - 10/100

  Parameters q = p;
  q.alpha3 = Rat(2);
  auto report2 = theorem_B_side_conditions(q);
  CHECK(report2.c == Rat(3));
  CHECK(report2.structures_H_permitted);  // 2 <= 2 + 14/100
  CHECK(report2.structures_K_permitted);  // 2 >= 2 - 10/100

  Parameters bad = p;
  bad.alpha2 = Rat(2);
  CHECK_THROWS_AS(theorem_B_side_conditions(bad), PreconditionError);
}

TEST_CASE("search stats name their prunes") {
  auto outcome = search_ramsey({4, 4, 3, ParityProfile::even_even_odd}, 6);
  std::string text = outcome.stats.format();
  CHECK(text.find("nodes=") != std::string::npos);
  CHECK(outcome.stats.prunes.count("cycle_red") +
            outcome.stats.prunes.count("cycle_blue") +
            outcome.stats.prunes.count("cycle_green") >
        0);
}
