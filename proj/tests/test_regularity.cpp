#include <doctest.h>

#include <random>

#include "ramsey/regularity.hpp"
#include "test_util.hpp"

using namespace ramsey;
using namespace ramsey::testutil;

namespace {

ColourSlice red(const MultiColouredGraph& g) { return g.slice(Colour::red); }

// Straightforward re-enumeration of all subset pairs meeting the size
// floors; returns the maximum deviation as an exact rational.
Rat oracle_worst_deviation(const ColourSlice& g, const std::vector<int>& A,
                           const std::vector<int>& B, const Rat& eps) {
  long long total = 0;
  for (int a : A) {
    for (int b : B) {
      if (g.has_edge(a, b)) ++total;
    }
  }
  Rat base(total, static_cast<long long>(A.size()) * B.size());
  Rat worst(0);
  for (uint32_t am = 1; am < (1u << A.size()); ++am) {
    std::vector<int> sub_a;
    for (size_t i = 0; i < A.size(); ++i) {
      if (am & (1u << i)) sub_a.push_back(A[i]);
    }
    if (Rat(static_cast<long long>(sub_a.size())) <
        eps * Rat(static_cast<long long>(A.size()))) {
      continue;
    }
    for (uint32_t bm = 1; bm < (1u << B.size()); ++bm) {
      std::vector<int> sub_b;
      for (size_t i = 0; i < B.size(); ++i) {
        if (bm & (1u << i)) sub_b.push_back(B[i]);
      }
      if (Rat(static_cast<long long>(sub_b.size())) <
          eps * Rat(static_cast<long long>(B.size()))) {
        continue;
      }
      long long e = 0;
      for (int a : sub_a) {
        for (int b : sub_b) {
          if (g.has_edge(a, b)) ++e;
        }
      }
      Rat d(e, static_cast<long long>(sub_a.size()) * sub_b.size());
      Rat dev = d > base ? d - base : base - d;
      if (dev > worst) worst = dev;
    }
  }
  return worst;
}

MultiColouredGraph blowup_base(int cluster, bool with_triangle) {
  // Clusters A = [0,c), B = [c,2c), C = [2c,3c); red complete between
  // A-B, and also A-C, B-C when the triangle is requested.
  int k = with_triangle ? 3 : 2;
  std::vector<MultiColouredGraph::Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      for (int u = i * cluster; u < (i + 1) * cluster; ++u) {
        for (int v = j * cluster; v < (j + 1) * cluster; ++v) {
          edges.push_back({u, v, ColourSet(Colour::red)});
        }
      }
    }
  }
  return MultiColouredGraph(k * cluster, edges);
}

ClusterPartition even_partition(int k, int cluster) {
  ClusterPartition partition;
  for (int i = 0; i < k; ++i) {
    partition.classes.push_back(iota_vec(i * cluster, cluster));
  }
  return partition;
}

}  // namespace

TEST_CASE("partition parse/format round-trip and validation") {
  ClusterPartition p = ClusterPartition::parse("2\n0\n1 2\n3 4\n");
  CHECK(p.v0 == std::vector<int>{0});
  CHECK(p.classes.size() == 2);
  CHECK(p.format() == "2\n0\n1 2\n3 4\n");
  p.validate(5);
  CHECK_THROWS_AS(p.validate(6), PreconditionError);  // vertex 5 uncovered

  ClusterPartition empty_v0 = ClusterPartition::parse("1\n\n0 1\n");
  CHECK(empty_v0.v0.empty());
  empty_v0.validate(2);

  CHECK_THROWS_AS(ClusterPartition::parse("x\n"), ParseError);
  CHECK_THROWS_AS(ClusterPartition::parse("2\n\n0 1\n"), ParseError);
  auto unequal = ClusterPartition::parse("2\n\n0 1\n2\n");
  CHECK_THROWS_AS(unequal.validate(3), PreconditionError);
}

TEST_CASE("check_regular_pair on complete and half-empty pairs") {
  MultiColouredGraph g = complete_bipartite(6, 6);
  auto A = iota_vec(0, 6), B = iota_vec(6, 6);
  auto check = check_regular_pair(red(g), A, B, Rat(1, 4));
  CHECK(check.regular);
  CHECK(!check.tentative);
  CHECK(check.base_density == Rat(1));
  CHECK(check.worst_deviation == Rat(0));

  // Half of A fully joined, the other half empty: deviation 1/2.
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 3; ++u) {
    for (int v = 6; v < 12; ++v) edges.push_back({u, v});
  }
  MultiColouredGraph half = simple(12, edges);
  auto irregular = check_regular_pair(red(half), A, B, Rat(2, 5));
  CHECK(!irregular.regular);
  CHECK(irregular.worst_deviation == Rat(1, 2));
  CHECK(!irregular.worst_A.empty());

  MultiColouredGraph big = complete_bipartite(20, 6);
  CHECK_THROWS_AS(check_regular_pair(red(big), iota_vec(0, 20),
                                     iota_vec(20, 6), Rat(1, 4)),
                  SizeCapError);
}

TEST_CASE("check_regular_pair matches the subset-pair oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    int na = 3 + static_cast<int>(rng() % 4);
    int nb = 3 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < na; ++u) {
      for (int v = na; v < na + nb; ++v) {
        if (rng() % 3 != 0) edges.push_back({u, v});
      }
    }
    MultiColouredGraph g = simple(na + nb, edges);
    auto A = iota_vec(0, na), B = iota_vec(na, nb);
    Rat eps(1, 2 + static_cast<int>(rng() % 4));
    auto check = check_regular_pair(red(g), A, B, eps);
    CHECK(check.worst_deviation == oracle_worst_deviation(red(g), A, B, eps));
    CHECK(check.regular == (check.worst_deviation < eps));
  }
}

TEST_CASE("heuristic regularity mode is one-sided") {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 10; ++u) {
    for (int v = 20; v < 40; ++v) {
      edges.push_back({u, v});  // half of A fully joined
    }
  }
  MultiColouredGraph g = simple(40, edges);
  auto check = check_regular_pair(red(g), iota_vec(0, 20), iota_vec(20, 20),
                                  Rat(1, 4), /*heuristic=*/true, 7);
  CHECK(!check.regular);
  CHECK(!check.tentative);  // an irregularity witness is conclusive

  MultiColouredGraph full = complete_bipartite(20, 20);
  auto ok = check_regular_pair(red(full), iota_vec(0, 20), iota_vec(20, 20),
                               Rat(1, 4), true, 7);
  CHECK(ok.regular);
  CHECK(ok.tentative);
}

TEST_CASE("build_reduced_graph densities are exact") {
  // 3-coloured K12 in 4 classes of 3: colour by class-pair index.
  int n = 12;
  std::vector<MultiColouredGraph::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int cu = u / 3, cv = v / 3;
      Colour colour = kColours[(cu + cv) % 3];
      edges.push_back({u, v, ColourSet(colour)});
    }
  }
  MultiColouredGraph g(n, edges);
  ClusterPartition partition = even_partition(4, 3);
  ReducedGraph reduced =
      build_reduced_graph(g, partition, Rat(1, 3), Rat(1, 3));
  CHECK(reduced.graph.vertex_count() == 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Colour expect = kColours[(i + j) % 3];
      for (Colour c : kColours) {
        Rat want = (c == expect) ? Rat(1) : Rat(0);
        CHECK(reduced.densities[colour_index(c)][i][j] == want);
      }
    }
  }

  // All-green base: reduced graph is all-green complete.
  MultiColouredGraph green = complete(12, Colour::green);
  ReducedGraph rg = build_reduced_graph(green, partition, Rat(1, 3),
                                        Rat(1, 3));
  CHECK(rg.graph.edge_count() == 6);
  for (const auto& e : rg.graph.edges()) {
    CHECK(e.colours == ColourSet(Colour::green));
  }

  CHECK_THROWS_AS(
      build_reduced_graph(green, partition, Rat(1, 3), Rat(11, 10)),
      PreconditionError);
}

TEST_CASE("build_reduced_graph rejects oversized V0") {
  MultiColouredGraph g = complete(13, Colour::green);
  ClusterPartition partition = even_partition(4, 3);
  partition.v0 = {12};
  // |V0| = 1 > eps * 13 for eps = 1/20.
  CHECK_THROWS_AS(build_reduced_graph(g, partition, Rat(1, 20), Rat(1, 3)),
                  PreconditionError);
  auto reduced = build_reduced_graph(g, partition, Rat(1, 3), Rat(1, 3));
  CHECK(reduced.graph.vertex_count() == 4);
}

TEST_CASE("regular_pair_path on a complete pair") {
  MultiColouredGraph g = complete_bipartite(700, 700);
  auto V1 = iota_vec(0, 700), V2 = iota_vec(700, 700);
  auto path = regular_pair_path(red(g), V1, V2, Rat(1, 601), 5, 0, 700);
  CHECK(path.vertices.size() == 12);
  CHECK(validate_path(red(g), path, 0, 700));

  auto longer = regular_pair_path(red(g), V1, V2, Rat(1, 601), 642, 3, 705);
  CHECK(longer.edge_length() == 2 * 642 + 1);
  CHECK(validate_path(red(g), longer, 3, 705));

  // ell beyond k - 2 sqrt(eps) k.
  CHECK_THROWS_AS(regular_pair_path(red(g), V1, V2, Rat(1, 601), 643, 0, 700),
                  PreconditionError);
  // eps outside the lemma's range.
  CHECK_THROWS_AS(regular_pair_path(red(g), V1, V2, Rat(1, 100), 5, 0, 700),
                  PreconditionError);
}

TEST_CASE("regular_pair_path on seeded random dense pairs") {
  std::mt19937_64 rng(5150);
  int runs = 0;
  for (int trial = 0; trial < 200 && runs < 25; ++trial) {
    int k = 601 + static_cast<int>(rng() % 60);
    std::vector<MultiColouredGraph::Edge> edges;
    for (int u = 0; u < k; ++u) {
      for (int v = k; v < 2 * k; ++v) {
        if (rng() % 100 == 0) continue;  // 1% deletions
        edges.push_back({u, v, ColourSet(Colour::red)});
      }
    }
    MultiColouredGraph g(2 * k, edges);
    auto V1 = iota_vec(0, k), V2 = iota_vec(k, k);
    long long ell = 1 + static_cast<long long>(rng() % (k - 60));
    int v1 = static_cast<int>(rng() % k);
    int v2 = k + static_cast<int>(rng() % k);
    if (!ge_scaled_sqrt(Rat(k - ell), Rat(2 * k), Rat(1, 601))) continue;
    long long d1 = red(g).degree(v1), d2 = red(g).degree(v2);
    if (!ge_scaled_sqrt(Rat(d1), Rat(2 * k, 3), Rat(1, 601)) ||
        !ge_scaled_sqrt(Rat(d2), Rat(2 * k, 3), Rat(1, 601))) {
      continue;
    }
    ++runs;
    auto path = regular_pair_path(red(g), V1, V2, Rat(1, 601), ell, v1, v2);
    CHECK(path.edge_length() == 2 * ell + 1);
    CHECK(validate_path(red(g), path, v1, v2));
  }
  CHECK(runs >= 25);
}

TEST_CASE("blow_up_cycle on a single matched pair") {
  MultiColouredGraph base = blowup_base(50, false);
  ClusterPartition partition = even_partition(2, 50);
  ReducedGraph reduced =
      build_reduced_graph(base, partition, Rat(1, 601), Rat(1, 3), true);
  REQUIRE(reduced.graph.has_edge(0, 1, Colour::red));
  ConnectedMatching matching{Colour::red, {{0, 1}}, {0, 1}, false};
  auto cycle = blow_up_cycle(base, reduced, matching, 40, false);
  CHECK(validate_cycle(base.slice(Colour::red), cycle, 40));
  CHECK_THROWS_AS(blow_up_cycle(base, reduced, matching, 41, true),
                  PreconditionError);  // odd target, bipartite component
}

TEST_CASE("blow_up_cycle through a reduced triangle, both parities") {
  MultiColouredGraph base = blowup_base(50, true);
  ClusterPartition partition = even_partition(3, 50);
  ReducedGraph reduced =
      build_reduced_graph(base, partition, Rat(1, 601), Rat(1, 3), true);
  ConnectedMatching matching{Colour::red, {{0, 1}}, {0, 1, 2}, true};
  auto even_cycle = blow_up_cycle(base, reduced, matching, 40, false);
  CHECK(validate_cycle(base.slice(Colour::red), even_cycle, 40));
  auto odd_cycle = blow_up_cycle(base, reduced, matching, 31, true);
  CHECK(validate_cycle(base.slice(Colour::red), odd_cycle, 31));
  // Beyond the padding budget (max even length is about 2*45 + 2).
  CHECK_THROWS_AS(blow_up_cycle(base, reduced, matching, 120, false),
                  BudgetError);
}
