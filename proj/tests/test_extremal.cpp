#include <doctest.h>

#include "ramsey/cycles.hpp"
#include "ramsey/extremal.hpp"
#include "test_util.hpp"

using namespace ramsey;
using namespace ramsey::testutil;

namespace {

bool slice_has_cycle(const MultiColouredGraph& g, Colour c, int len) {
  if (len > g.vertex_count()) return false;
  return find_cycle_exact(g.slice(c), len).has_value();
}

long long complete_edge_count(int n) {
  return static_cast<long long>(n) * (n - 1) / 2;
}

}  // namespace

TEST_CASE("construction 1 sizes and class layout") {
  MultiColouredGraph g = build_construction_1({4, 4, 3}, FillPolicy::all_red);
  CHECK(g.vertex_count() == 8);  // parts 3, 3, 1, 1
  CHECK(g.edge_count() == complete_edge_count(8));
  // V1 = {0,1,2} red clique; V1-V3 = {0,1,2}x{6} blue.
  CHECK(g.colours(0, 1) == ColourSet(Colour::red));
  CHECK(g.colours(0, 6) == ColourSet(Colour::blue));
  CHECK(g.colours(0, 3) == ColourSet(Colour::green));

  CHECK_THROWS_AS(build_construction_1({4, 2, 3}, FillPolicy::all_red),
                  PreconditionError);
  CHECK_THROWS_AS(build_construction_1({5, 4, 3}, FillPolicy::all_red),
                  PreconditionError);
}

TEST_CASE("construction 2 sizes and class layout") {
  MultiColouredGraph g = build_construction_2({4, 4, 3});
  CHECK(g.vertex_count() == 4);  // parts 1, 1, 2
  CHECK(g.edge_count() == complete_edge_count(4));

  MultiColouredGraph h = build_construction_2({6, 6, 7});
  CHECK(h.vertex_count() == 10);  // 3 + 3 + 7 - 3
  CHECK(!slice_has_cycle(h, Colour::red, 6));
  CHECK(!slice_has_cycle(h, Colour::blue, 6));
  CHECK(!slice_has_cycle(h, Colour::green, 7));
}

TEST_CASE("constructions avoid the forbidden cycles") {
  MultiColouredGraph g1 = build_construction_1({4, 4, 3}, FillPolicy::all_red);
  CHECK(!slice_has_cycle(g1, Colour::red, 4));
  CHECK(!slice_has_cycle(g1, Colour::blue, 4));
  CHECK(!slice_has_cycle(g1, Colour::green, 3));

  MultiColouredGraph g2 = build_construction_2({4, 4, 3});
  CHECK(!slice_has_cycle(g2, Colour::red, 4));
  CHECK(!slice_has_cycle(g2, Colour::blue, 4));
  CHECK(!slice_has_cycle(g2, Colour::green, 3));
}

TEST_CASE("lower-bound invariant sweep at reduced scale") {
  // The full sweep is acceptance criterion 1; here a representative slice
  // with all policies, n_red >= n_blue.
  for (int n_red : {4, 6, 8}) {
    for (int n_blue = 4; n_blue <= n_red; n_blue += 2) {
      for (int n_green : {3, 5}) {
        LowerBoundSpec spec{n_red, n_blue, n_green};
        for (FillPolicy policy : {FillPolicy::all_red, FillPolicy::all_blue,
                                  FillPolicy::alternating}) {
          MultiColouredGraph g = build_construction_1(spec, policy);
          CHECK(g.vertex_count() == 2 * n_red + n_blue - 4);
          CHECK(g.edge_count() == complete_edge_count(g.vertex_count()));
          CHECK(!slice_has_cycle(g, Colour::red, n_red));
          CHECK(!slice_has_cycle(g, Colour::blue, n_blue));
          CHECK(!slice_has_cycle(g, Colour::green, n_green));
        }
        MultiColouredGraph g2 = build_construction_2(spec);
        CHECK(g2.vertex_count() == n_red / 2 + n_blue / 2 + n_green - 3);
        CHECK(g2.edge_count() == complete_edge_count(g2.vertex_count()));
        CHECK(!slice_has_cycle(g2, Colour::red, n_red));
        CHECK(!slice_has_cycle(g2, Colour::blue, n_blue));
        CHECK(!slice_has_cycle(g2, Colour::green, n_green));
      }
    }
  }
}

TEST_CASE("gen_H plants a verifiable witness") {
  HParams params{6, 3, Rat(0), Rat(0), Colour::red, Colour::blue};
  auto [g, w] = gen_H(params, 1);
  CHECK(g.vertex_count() == 9);
  CHECK(verify_witness(g, w).ok);
  // X1 all-red clique, X1-X2 all blue.
  CHECK(g.colours(0, 1) == ColourSet(Colour::red));
  CHECK(g.colours(0, 6) == ColourSet(Colour::blue));

  CHECK_THROWS_AS(gen_H({0, 3, Rat(0), Rat(0), Colour::red, Colour::blue}, 1),
                  PreconditionError);
  CHECK_THROWS_AS(gen_H({3, 3, Rat(0), Rat(0), Colour::red, Colour::red}, 1),
                  PreconditionError);
}

TEST_CASE("gen_K plants a verifiable witness") {
  KParams params{2, 2, 3, Rat(0)};
  auto [g, w] = gen_K(params, 1);
  CHECK(g.vertex_count() == 7);
  CHECK(verify_witness(g, w).ok);
  // X1-X3 red, X2-X3 blue, X3 internal green.
  CHECK(g.colours(0, 4) == ColourSet(Colour::red));
  CHECK(g.colours(2, 4) == ColourSet(Colour::blue));
  CHECK(g.colours(4, 5) == ColourSet(Colour::green));
}

TEST_CASE("gen_Kstar plants a verifiable witness") {
  KstarParams params{2, 2, 2, 2, 4, Rat(0)};
  auto [g, w] = gen_Kstar(params, 1);
  CHECK(g.vertex_count() == 8);
  CHECK(verify_witness(g, w).ok);
  CHECK(g.colours(0, 4) == ColourSet(Colour::red));    // X1-Y1
  CHECK(g.colours(2, 6) == ColourSet(Colour::red));    // X2-Y2
  CHECK(g.colours(0, 6) == ColourSet(Colour::blue));   // X1-Y2
  CHECK(g.colours(0, 2) == ColourSet(Colour::green));  // X1-X2
  CHECK(g.colours(4, 6) == ColourSet(Colour::green));  // Y1-Y2

  // z above y1+y2 grows the Y parts.
  auto [g2, w2] = gen_Kstar({2, 2, 2, 2, 6, Rat(0)}, 1);
  CHECK(w2.parts[2].size() + w2.parts[3].size() >= 6);
  CHECK(verify_witness(g2, w2).ok);
}

TEST_CASE("generators are seed-deterministic and respect budgets") {
  HParams params{8, 5, Rat(2), Rat(1, 4), Colour::red, Colour::blue};
  auto [g1, w1] = gen_H(params, 42);
  auto [g2, w2] = gen_H(params, 42);
  CHECK(g1 == g2);
  auto [g3, w3] = gen_H(params, 43);
  CHECK(verify_witness(g1, w1).ok);
  CHECK(verify_witness(g3, w3).ok);

  KParams kp{4, 4, 4, Rat(2)};
  auto [gk, wk] = gen_K(kp, 7);
  CHECK(verify_witness(gk, wk).ok);
  CHECK(gen_K(kp, 7).first == gk);

  KstarParams ks{3, 3, 3, 3, 6, Rat(2)};
  auto [gks, wks] = gen_Kstar(ks, 9);
  CHECK(verify_witness(gks, wks).ok);
}
