#include <doctest.h>

#include <random>

#include "ramsey/graph.hpp"
#include "test_util.hpp"

using namespace ramsey;
using namespace ramsey::testutil;

TEST_CASE("parse and canonical format round-trip") {
  MultiColouredGraph g = MultiColouredGraph::parse("3\n0 1 r\n1 2 rg\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.colours(0, 1) == ColourSet(Colour::red));
  ColourSet rg;
  rg.add(Colour::red);
  rg.add(Colour::green);
  CHECK(g.colours(1, 2) == rg);
  CHECK(!g.has_edge(0, 2));
  CHECK(g.format() == "3\n0 1 r\n1 2 rg\n");
  CHECK(MultiColouredGraph::parse(g.format()) == g);
}

TEST_CASE("parse normalizes colour order and tolerates comments") {
  MultiColouredGraph g =
      MultiColouredGraph::parse("# comment\n4\n\n0 1 gr  # trailing\n2 3 b\n");
  CHECK(g.format() == "4\n0 1 rg\n2 3 b\n");
}

TEST_CASE("parse error taxonomy") {
  auto kind_of = [](const std::string& text) {
    try {
      MultiColouredGraph::parse(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    return ParseError::Kind::bad_line;  // unreachable for these inputs
  };
  CHECK(kind_of("x\n") == ParseError::Kind::bad_header);
  CHECK(kind_of("3\n0 0 r\n") == ParseError::Kind::loop);
  CHECK(kind_of("3\n0 7 r\n") == ParseError::Kind::bad_vertex);
  CHECK(kind_of("3\n1 0 r\n") == ParseError::Kind::pair_order);
  CHECK(kind_of("3\n0 1 r\n0 1 b\n") == ParseError::Kind::duplicate_pair);
  CHECK(kind_of("3\n0 1 q\n") == ParseError::Kind::bad_colour);
  CHECK(kind_of("3\n0 1 rr\n") == ParseError::Kind::bad_colour);
  CHECK_THROWS_AS(MultiColouredGraph::parse("3\n0 1\n"), ParseError);
}

TEST_CASE("almost-complete predicate") {
  MultiColouredGraph k5 = complete(5);
  CHECK(is_almost_complete(k5, Rat(0)));
  std::vector<MultiColouredGraph::Edge> edges;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      if (!(u == 0 && v == 1)) edges.push_back({u, v, ColourSet(Colour::red)});
    }
  }
  MultiColouredGraph k5_minus(5, edges);
  CHECK(!is_almost_complete(k5_minus, Rat(0)));
  CHECK(is_almost_complete(k5_minus, Rat(1)));
}

TEST_CASE("almost-complete is monotone in a") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    MultiColouredGraph g = random_graph(8, 0.6, rng);
    for (int a = 0; a < 7; ++a) {
      if (is_almost_complete(g, Rat(a))) {
        CHECK(is_almost_complete(g, Rat(a + 1)));
      }
    }
  }
}

TEST_CASE("bipartite almost-complete: K33 minus a perfect matching") {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 6; ++v) {
      if (v - 3 != u) edges.push_back({u, v});
    }
  }
  MultiColouredGraph g = simple(6, edges);
  auto U = iota_vec(0, 3), W = iota_vec(3, 3);
  CHECK(is_almost_complete_bipartite(g, U, W, Rat(1)));
  CHECK(!is_almost_complete_bipartite(g, U, W, Rat(0)));
  std::vector<int> overlap{0, 1, 3};
  CHECK_THROWS_AS(
      is_almost_complete_bipartite(g, U, overlap, Rat(1)),
      PreconditionError);
}

TEST_CASE("fraction-complete predicate") {
  CHECK(is_fraction_complete(complete(4), Rat(0)));
  CHECK(!is_fraction_complete(cycle_graph(6), Rat(1, 2)));
  // K6 minus a perfect matching: degree 4 >= 0.8 * 5.
  std::vector<MultiColouredGraph::Edge> edges;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (v != u + 3) edges.push_back({u, v, ColourSet(Colour::red)});
    }
  }
  MultiColouredGraph g(6, edges);
  CHECK(is_fraction_complete(g, Rat(1, 5)));
}

TEST_CASE("sparse predicate") {
  MultiColouredGraph empty5(5, {});
  CHECK(is_sparse(empty5, Rat(1, 10)));
  MultiColouredGraph one_edge = simple(5, {{0, 1}});
  CHECK(!is_sparse(one_edge, Rat(1, 5)));  // 1 > 0.2 * 4
  CHECK(!is_sparse(complete(5), Rat(99, 100)));
  CHECK_THROWS_AS(is_sparse(empty5, Rat(0)), PreconditionError);
}

TEST_CASE("density is exact") {
  MultiColouredGraph k22 = complete_bipartite(2, 2);
  auto A = iota_vec(0, 2), B = iota_vec(2, 2);
  CHECK(density(k22, Colour::red, A, B) == Rat(1));
  CHECK(density(k22, Colour::blue, A, B) == Rat(0));
  MultiColouredGraph g = simple(5, {{0, 2}, {0, 3}, {1, 4}});
  std::vector<int> A2{0, 1}, B2{2, 3, 4};
  CHECK(density(g, Colour::red, A2, B2) == Rat(1, 2));
  CHECK_THROWS_AS(density(g, Colour::red, A2, std::vector<int>{1, 3}),
                  PreconditionError);
}

TEST_CASE("density matches brute force on random instances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    MultiColouredGraph g = random_multicoloured(10, rng);
    std::vector<int> A, B;
    for (int v = 0; v < 10; ++v) {
      if (rng() % 3 == 0) {
        A.push_back(v);
      } else if (rng() % 2 == 0) {
        B.push_back(v);
      }
    }
    if (A.empty() || B.empty()) continue;
    for (Colour c : kColours) {
      long long count = 0;
      for (int a : A) {
        for (int b : B) {
          if (g.has_edge(a, b, c)) ++count;
        }
      }
      CHECK(density(g, c, A, B) ==
            Rat(count, static_cast<long long>(A.size() * B.size())));
    }
  }
}

TEST_CASE("slice edge sets union to the whole edge set") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    MultiColouredGraph g = random_multicoloured(9, rng);
    for (int u = 0; u < 9; ++u) {
      for (int v = u + 1; v < 9; ++v) {
        bool any = false;
        for (Colour c : kColours) {
          if (g.slice(c).has_edge(u, v)) any = true;
        }
        CHECK(any == g.has_edge(u, v));
      }
    }
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("0.005") == Rat(1, 200));
  CHECK(parse_rational("1/200") == Rat(1, 200));
  CHECK(parse_rational("3") == Rat(3));
  CHECK(parse_rational("-0.5") == Rat(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(format_rational(Rat(1, 200)) == "1/200");
  CHECK(format_rational(Rat(4, 2)) == "2");
}

TEST_CASE("scaled sqrt comparisons") {
  // 3 <= 2*sqrt(9/4) = 3 and 3 >= it too.
  CHECK(le_scaled_sqrt(Rat(3), Rat(2), Rat(9, 4)));
  CHECK(ge_scaled_sqrt(Rat(3), Rat(2), Rat(9, 4)));
  // 5 > 2*sqrt(4) = 4.
  CHECK(!le_scaled_sqrt(Rat(5), Rat(2), Rat(4)));
  CHECK(ge_scaled_sqrt(Rat(5), Rat(2), Rat(4)));
  CHECK(le_scaled_sqrt(Rat(-1), Rat(2), Rat(4)));
}
