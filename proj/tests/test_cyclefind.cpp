#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "ramsey/cycles.hpp"
#include "ramsey/extremal.hpp"
#include "test_util.hpp"

using namespace ramsey;
using namespace ramsey::testutil;

namespace {

// Independent oracle: enumerates vertex subsets and cyclic orders outright.
bool oracle_has_exact_cycle(const ColourSlice& g, int length) {
  int n = g.vertex_count();
  std::vector<int> chosen;
  std::function<bool(int)> pick = [&](int from) {
    if (static_cast<int>(chosen.size()) == length) {
      std::vector<int> rest(chosen.begin() + 1, chosen.end());
      std::sort(rest.begin(), rest.end());
      do {
        bool ok = g.has_edge(chosen[0], rest.front()) &&
                  g.has_edge(chosen[0], rest.back());
        for (size_t i = 0; ok && i + 1 < rest.size(); ++i) {
          ok = g.has_edge(rest[i], rest[i + 1]);
        }
        if (ok) return true;
      } while (std::next_permutation(rest.begin(), rest.end()));
      return false;
    }
    for (int v = from; v < n; ++v) {
      chosen.push_back(v);
      if (pick(v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return pick(0);
}

ColourSlice red(const MultiColouredGraph& g) { return g.slice(Colour::red); }

}  // namespace

TEST_CASE("find_cycle_exact on C5") {
  MultiColouredGraph c5 = cycle_graph(5);
  auto five = find_cycle_exact(red(c5), 5);
  REQUIRE(five.has_value());
  CHECK(validate_cycle(red(c5), *five, 5));
  CHECK(!find_cycle_exact(red(c5), 4).has_value());
  CHECK(!find_cycle_exact(red(c5), 3).has_value());
  CHECK_THROWS_AS(find_cycle_exact(red(c5), 2), PreconditionError);
  CHECK_THROWS_AS(find_cycle_exact(red(c5), 6), PreconditionError);
}

TEST_CASE("find_cycle_exact on construction 1 red slice") {
  // n_red = n_blue = 4, n_green = 3: the red graph is two triangles plus
  // the singleton classes, so no red C4 exists.
  MultiColouredGraph g = build_construction_1({4, 4, 3}, FillPolicy::all_red);
  REQUIRE(g.vertex_count() == 8);
  CHECK(!find_cycle_exact(red(g), 4).has_value());
  CHECK(find_cycle_exact(red(g), 3).has_value());
}

TEST_CASE("find_cycle_exact agrees with permutation enumeration") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);  // up to 8 vertices
    MultiColouredGraph g = random_multicoloured(n, rng);
    for (Colour c : kColours) {
      ColourSlice slice = g.slice(c);
      for (int len = 3; len <= n; ++len) {
        auto found = find_cycle_exact(slice, len);
        bool expected = oracle_has_exact_cycle(slice, len);
        CHECK(found.has_value() == expected);
        if (found) CHECK(validate_cycle(slice, *found, len));
      }
    }
  }
}

TEST_CASE("find_cycle_exact exercises the large-component DFS path") {
  // 22 vertices forces the pruned DFS (the subset DP caps at 20).
  MultiColouredGraph g = complete_bipartite(11, 11);
  auto c = find_cycle_exact(red(g), 22);
  REQUIRE(c.has_value());
  CHECK(validate_cycle(red(g), *c, 22));
  CHECK(!find_cycle_exact(red(g), 21).has_value());  // odd in bipartite
  MultiColouredGraph k22 = complete(22, Colour::blue);
  for (int len : {3, 13, 22}) {
    auto found = find_cycle_exact(k22.slice(Colour::blue), len);
    REQUIRE(found.has_value());
    CHECK(validate_cycle(k22.slice(Colour::blue), *found, len));
  }
}

TEST_CASE("find_cycle_exact size cap") {
  MultiColouredGraph big(40, {});
  CHECK_THROWS_AS(find_cycle_exact(big.slice(Colour::red), 3), SizeCapError);
}

TEST_CASE("dirac_hamiltonian") {
  auto k4 = complete(4);
  CHECK(validate_cycle(red(k4), dirac_hamiltonian(red(k4)), 4));
  auto k33 = complete_bipartite(3, 3);
  CHECK(validate_cycle(red(k33), dirac_hamiltonian(red(k33)), 6));
  auto c5 = cycle_graph(5);
  CHECK_THROWS_AS(dirac_hamiltonian(red(c5)), PreconditionError);
}

TEST_CASE("almost_complete_cycle spectrum") {
  auto k6 = complete(6);
  CHECK(validate_cycle(red(k6), almost_complete_cycle(red(k6), 0, 4), 4));
  CHECK_THROWS_AS(almost_complete_cycle(red(k6), 0, 7), PreconditionError);
  // K6 minus a perfect matching is 1-almost-complete: all m in [4, 6].
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (v != u + 3) edges.push_back({u, v});
    }
  }
  auto g = simple(6, edges);
  for (int m = 4; m <= 6; ++m) {
    CHECK(validate_cycle(red(g), almost_complete_cycle(red(g), 1, m), m));
  }
  CHECK_THROWS_AS(almost_complete_cycle(red(g), 0, 3), PreconditionError);
}

TEST_CASE("dirac_path_between") {
  auto k5 = complete(5);
  auto path = dirac_path_between(red(k5), 0, 3);
  CHECK(validate_path(red(k5), path, 0, 3));
  CHECK(path.vertices.size() == 5);
  // K6 minus a perfect matching has degree 4 = 6/2 + 1.
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (v != u + 3) edges.push_back({u, v});
    }
  }
  auto g = simple(6, edges);
  auto p2 = dirac_path_between(red(g), 0, 1);
  CHECK(validate_path(red(g), p2, 0, 1));
  CHECK(p2.vertices.size() == 6);
  CHECK_THROWS_AS(dirac_path_between(red(cycle_graph(6)), 0, 2),
                  PreconditionError);
  CHECK_THROWS_AS(dirac_path_between(red(k5), 2, 2), PreconditionError);
}

TEST_CASE("moon_moser_hamiltonian") {
  auto k44 = complete_bipartite(4, 4);
  auto X = iota_vec(0, 4), Y = iota_vec(4, 4);
  CHECK(validate_cycle(red(k44), moon_moser_hamiltonian(red(k44), X, Y), 8));

  // K33 minus a perfect matching is exactly a 6-cycle.
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 6; ++v) {
      if (v - 3 != u) edges.push_back({u, v});
    }
  }
  auto c6 = simple(6, edges);
  auto X3 = iota_vec(0, 3), Y3 = iota_vec(3, 3);
  CHECK(validate_cycle(red(c6), moon_moser_hamiltonian(red(c6), X3, Y3), 6));

  // Strip most of vertex 0's edges: a cross non-edge with low degree sum.
  auto sparse = simple(6, {{0, 3}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4},
                           {2, 5}});
  CHECK_THROWS_AS(moon_moser_hamiltonian(red(sparse), X3, Y3),
                  PreconditionError);
  CHECK_THROWS_AS(
      moon_moser_hamiltonian(red(k44), iota_vec(0, 4), iota_vec(4, 3)),
      PreconditionError);
}

TEST_CASE("balanced_bipartite_cycle") {
  auto k57 = complete_bipartite(5, 7);
  auto X = iota_vec(0, 5), Y = iota_vec(5, 7);
  CHECK(validate_cycle(red(k57),
                       balanced_bipartite_cycle(red(k57), X, Y, 0, 8), 8));
  CHECK_THROWS_AS(balanced_bipartite_cycle(red(k57), X, Y, 0, 7),
                  PreconditionError);
  // K55 minus a perfect matching, a=1, m=6.
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 5; ++u) {
    for (int v = 5; v < 10; ++v) {
      if (v - 5 != u) edges.push_back({u, v});
    }
  }
  auto g = simple(10, edges);
  auto X5 = iota_vec(0, 5), Y5 = iota_vec(5, 5);
  CHECK(validate_cycle(red(g),
                       balanced_bipartite_cycle(red(g), X5, Y5, 1, 6), 6));
}

TEST_CASE("unbalanced_bipartite_spanning_path") {
  // X1 = {0,1,2}, X2 = {3}, 3 adjacent to all of X1.
  auto star = simple(4, {{0, 3}, {1, 3}, {2, 3}});
  auto path = unbalanced_bipartite_spanning_path(
      red(star), iota_vec(0, 3), std::vector<int>{3}, 0, 1);
  CHECK(path.vertices == std::vector<int>{0, 3, 1});

  auto k53 = complete_bipartite(5, 3);
  auto X1 = iota_vec(0, 5), X2 = iota_vec(5, 3);
  auto p2 = unbalanced_bipartite_spanning_path(red(k53), X1, X2, 0, 4);
  CHECK(validate_path(red(k53), p2, 0, 4));
  for (int w : X2) {
    CHECK(std::find(p2.vertices.begin(), p2.vertices.end(), w) !=
          p2.vertices.end());
  }

  auto k43 = complete_bipartite(4, 3);
  CHECK_THROWS_AS(
      unbalanced_bipartite_spanning_path(red(k43), iota_vec(0, 4),
                                         iota_vec(4, 3), 0, 1),
      PreconditionError);  // |X1| = |X2| + 1
}

TEST_CASE("chvatal_hamiltonian") {
  // K4 minus an edge: degrees 2,2,3,3 satisfy Chvatal.
  auto g = simple(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(validate_cycle(red(g), chvatal_hamiltonian(red(g)), 4));
  auto k5 = complete(5);
  CHECK(validate_cycle(red(k5), chvatal_hamiltonian(red(k5)), 5));
  auto star = simple(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(chvatal_hamiltonian(red(star)), PreconditionError);
}

TEST_CASE("erdos_gallai_long_cycle") {
  auto k5 = complete(5);
  auto c = erdos_gallai_long_cycle(red(k5), 4);
  CHECK(c.length() >= 4);
  CHECK(validate_cycle(red(k5), c));
  CHECK_THROWS_AS(erdos_gallai_long_cycle(red(cycle_graph(6)), 4),
                  PreconditionError);
  auto k4 = complete(4);
  auto tri = erdos_gallai_long_cycle(red(k4), 3);
  CHECK(tri.length() >= 3);
}

TEST_CASE("hypothesis-satisfying random instances always certify") {
  std::mt19937_64 rng(2026);
  int dirac_runs = 0, chv_runs = 0, eg_runs = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 3 + static_cast<int>(rng() % 38);
    double p = 0.5 + 0.5 * (rng() % 100) / 100.0;
    MultiColouredGraph g = random_graph(n, p, rng);
    ColourSlice slice = red(g);
    bool dirac_ok = true;
    for (int v = 0; v < n; ++v) {
      if (2 * slice.degree(v) < n) dirac_ok = false;
    }
    if (dirac_ok) {
      ++dirac_runs;
      CHECK(validate_cycle(slice, dirac_hamiltonian(slice), n));
    }
    std::vector<int> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = slice.degree(v);
    std::sort(degs.begin(), degs.end());
    bool chv_ok = n >= 3;
    for (int k = 1; 2 * k <= n && chv_ok; ++k) {
      if (degs[k - 1] <= k && degs[n - k - 1] < n - k) chv_ok = false;
    }
    if (chv_ok) {
      ++chv_runs;
      CHECK(validate_cycle(slice, chvatal_hamiltonian(slice), n));
    }
    int m = 3 + static_cast<int>(rng() % std::max(1, n - 2));
    long long e = slice.edge_count();
    if (m <= n && 2 * e >= static_cast<long long>(m - 1) * (n - 1) + 2) {
      ++eg_runs;
      auto cyc = erdos_gallai_long_cycle(slice, m);
      CHECK(cyc.length() >= m);
      CHECK(validate_cycle(slice, cyc));
    }
  }
  // The generator must actually exercise the lemmas.
  CHECK(dirac_runs > 50);
  CHECK(chv_runs > 50);
  CHECK(eg_runs > 100);
}

TEST_CASE("hypothesis-violating instances are refused") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + static_cast<int>(rng() % 20);
    MultiColouredGraph g = random_graph(n, 0.3, rng);
    ColourSlice slice = red(g);
    bool dirac_ok = true;
    for (int v = 0; v < n; ++v) {
      if (2 * slice.degree(v) < n) dirac_ok = false;
    }
    if (!dirac_ok) {
      CHECK_THROWS_AS(dirac_hamiltonian(slice), PreconditionError);
    }
  }
}
