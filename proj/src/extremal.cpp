#include "ramsey/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ramsey {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

// Edge-list builder for complete colourings assembled part by part.
struct Painter {
  int n;
  std::vector<std::vector<ColourSet>> cell;

  explicit Painter(int n_vertices)
      : n(n_vertices), cell(n_vertices, std::vector<ColourSet>(n_vertices)) {}

  void paint(int u, int v, Colour c) { cell[u][v] = cell[v][u] = ColourSet(c); }

  void paint_within(const std::vector<int>& part, Colour c) {
    for (size_t i = 0; i < part.size(); ++i) {
      for (size_t j = i + 1; j < part.size(); ++j) {
        paint(part[i], part[j], c);
      }
    }
  }

  void paint_across(const std::vector<int>& a, const std::vector<int>& b,
                    Colour c) {
    for (int u : a) {
      for (int v : b) paint(u, v, c);
    }
  }

  void erase(int u, int v) { cell[u][v] = cell[v][u] = ColourSet(); }

  MultiColouredGraph graph() const {
    std::vector<MultiColouredGraph::Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!cell[u][v].empty()) edges.push_back({u, v, cell[u][v]});
      }
    }
    return MultiColouredGraph(n, edges);
  }
};

std::vector<int> range_block(int start, int size) {
  std::vector<int> out(size);
  std::iota(out.begin(), out.end(), start);
  return out;
}

void fill_small_class(Painter& painter, const std::vector<int>& part,
                      FillPolicy policy) {
  for (size_t i = 0; i < part.size(); ++i) {
    for (size_t j = i + 1; j < part.size(); ++j) {
      Colour c = Colour::red;
      switch (policy) {
        case FillPolicy::all_red:
          c = Colour::red;
          break;
        case FillPolicy::all_blue:
          c = Colour::blue;
          break;
        case FillPolicy::alternating:
          c = ((part[i] + part[j]) % 2 == 0) ? Colour::red : Colour::blue;
          break;
      }
      painter.paint(part[i], part[j], c);
    }
  }
}

void assert_complete(const MultiColouredGraph& g, const char* who) {
  long long n = g.vertex_count();
  if (g.edge_count() != n * (n - 1) / 2) {
    throw InternalError(std::string(who) +
                        ": construction is not a complete colouring");
  }
}

StructureWitness checked_witness(const MultiColouredGraph& g,
                                 StructureWitness w, const char* who) {
  WitnessReport report = verify_witness(g, w);
  if (!report.ok) {
    throw InternalError(std::string(who) +
                        ": planted witness failed verification: " +
                        report.detail);
  }
  return w;
}

}  // namespace

void LowerBoundSpec::validate() const {
  if (n_red < 4 || n_red % 2 != 0) {
    throw PreconditionError("n_red must be even and >= 4");
  }
  if (n_blue < 4 || n_blue % 2 != 0) {
    throw PreconditionError("n_blue must be even and >= 4");
  }
  if (n_green < 3 || n_green % 2 != 1) {
    throw PreconditionError("n_green must be odd and >= 3");
  }
}

const char* fill_policy_name(FillPolicy p) {
  switch (p) {
    case FillPolicy::all_red:
      return "all-red";
    case FillPolicy::all_blue:
      return "all-blue";
    case FillPolicy::alternating:
      return "alternating";
  }
  return "?";
}

MultiColouredGraph build_construction_1(const LowerBoundSpec& spec,
                                        FillPolicy policy) {
  spec.validate();
  int big = spec.n_red - 1;
  int small = spec.n_blue / 2 - 1;
  require(big >= 1 && small >= 1,
          "construction 1: class sizes underflow at these lengths");
  int n = 2 * big + 2 * small;
  std::vector<int> v1 = range_block(0, big);
  std::vector<int> v2 = range_block(big, big);
  std::vector<int> v3 = range_block(2 * big, small);
  std::vector<int> v4 = range_block(2 * big + small, small);
  Painter painter(n);
  painter.paint_within(v1, Colour::red);
  painter.paint_within(v2, Colour::red);
  painter.paint_across(v1, v3, Colour::blue);
  painter.paint_across(v2, v4, Colour::blue);
  std::vector<int> left = v1, right = v2;
  left.insert(left.end(), v3.begin(), v3.end());
  right.insert(right.end(), v4.begin(), v4.end());
  painter.paint_across(left, right, Colour::green);
  fill_small_class(painter, v3, policy);
  fill_small_class(painter, v4, policy);
  MultiColouredGraph g = painter.graph();
  assert_complete(g, "build_construction_1");
  return g;
}

MultiColouredGraph build_construction_2(const LowerBoundSpec& spec) {
  spec.validate();
  int s1 = spec.n_red / 2 - 1;
  int s2 = spec.n_blue / 2 - 1;
  int s3 = spec.n_green - 1;
  require(s1 >= 1 && s2 >= 1 && s3 >= 1,
          "construction 2: class sizes underflow at these lengths");
  int n = s1 + s2 + s3;
  std::vector<int> v1 = range_block(0, s1);
  std::vector<int> v2 = range_block(s1, s2);
  std::vector<int> v3 = range_block(s1 + s2, s3);
  Painter painter(n);
  painter.paint_within(v1, Colour::red);
  painter.paint_across(v1, v3, Colour::red);
  painter.paint_within(v2, Colour::blue);
  painter.paint_across(v2, v3, Colour::blue);
  painter.paint_across(v1, v2, Colour::green);
  painter.paint_within(v3, Colour::green);
  MultiColouredGraph g = painter.graph();
  assert_complete(g, "build_construction_2");
  return g;
}

namespace {

// Seeded perturbation helpers. Deletions respect the a-almost-complete
// budget per endpoint; recolourings respect per-vertex sparsity and
// completeness slack. Budgets are consumed at most half-way so the planted
// witness keeps strict headroom.
struct Perturber {
  std::mt19937_64 rng;
  explicit Perturber(uint64_t seed) : rng(seed) {}

  int pick(int bound) {
    return static_cast<int>(rng() % static_cast<uint64_t>(bound));
  }

  // Deletes up to `rounds` random present edges, never dropping a vertex
  // below (N-1) - floor(budget/2) in whole-graph degree.
  void delete_edges(Painter& painter, const Rat& budget, int rounds) {
    long long per_vertex = floor_rat(budget / 2);
    if (per_vertex <= 0 || painter.n < 2) return;
    std::vector<long long> deleted(painter.n, 0);
    for (int t = 0; t < rounds; ++t) {
      int u = pick(painter.n);
      int v = pick(painter.n);
      if (u == v || painter.cell[u][v].empty()) continue;
      if (deleted[u] >= per_vertex || deleted[v] >= per_vertex) continue;
      painter.erase(u, v);
      ++deleted[u];
      ++deleted[v];
    }
  }
};

}  // namespace

std::pair<MultiColouredGraph, StructureWitness> gen_H(const HParams& params,
                                                      uint64_t seed) {
  require(params.x1 >= 1 && params.x2 >= 1, "gen_H: x1, x2 must be positive");
  require(params.gamma1 != params.gamma2,
          "gen_H: gamma1 and gamma2 must differ");
  require(params.c1 >= 0 && params.c2 >= 0 && params.c2 < Rat(1, 2),
          "gen_H: need c1 >= 0 and 0 <= c2 < 1/2");
  int n = static_cast<int>(params.x1 + params.x2);
  std::vector<int> x1 = range_block(0, static_cast<int>(params.x1));
  std::vector<int> x2 =
      range_block(static_cast<int>(params.x1), static_cast<int>(params.x2));
  Painter painter(n);
  painter.paint_within(x1, params.gamma1);
  painter.paint_across(x1, x2, params.gamma2);
  painter.paint_within(x2, params.gamma2);
  Perturber perturber(seed);
  // Perturbations consume at most half of each per-vertex slack, and a
  // deletion or recolouring in a constrained zone charges the c2 budget of
  // that zone as well as the global c1 budget.
  long long cap_global = floor_rat(params.c1 / 2);
  long long cap_cross_u = std::min(cap_global,
                                   floor_rat(params.c2 * Rat(params.x2) / 2));
  long long cap_cross_v = std::min(cap_global,
                                   floor_rat(params.c2 * Rat(params.x1) / 2));
  long long cap_inside_x1 =
      std::min(cap_global, floor_rat(params.c2 * Rat(params.x1 - 1) / 2));
  std::vector<long long> spent_global(n, 0), spent_cross(n, 0),
      spent_x1(n, 0);
  auto in_x1 = [&](int v) { return v < static_cast<int>(params.x1); };
  // Off-pattern recolourings of cross edges back to gamma1.
  int flip_attempts = n * 2;
  for (int t = 0; t < flip_attempts; ++t) {
    int u = x1[perturber.pick(static_cast<int>(x1.size()))];
    int v = x2[perturber.pick(static_cast<int>(x2.size()))];
    if (spent_cross[u] >= cap_cross_u || spent_cross[v] >= cap_cross_v) {
      continue;
    }
    if (painter.cell[u][v] != ColourSet(params.gamma2)) continue;
    painter.paint(u, v, params.gamma1);
    ++spent_cross[u];
    ++spent_cross[v];
  }
  // Random deletions.
  int delete_attempts = n * 2;
  for (int t = 0; t < delete_attempts; ++t) {
    int u = perturber.pick(n);
    int v = perturber.pick(n);
    if (u == v || painter.cell[u][v].empty()) continue;
    if (spent_global[u] >= cap_global || spent_global[v] >= cap_global) {
      continue;
    }
    if (in_x1(u) && in_x1(v)) {
      if (spent_x1[u] >= cap_inside_x1 || spent_x1[v] >= cap_inside_x1) {
        continue;
      }
      ++spent_x1[u];
      ++spent_x1[v];
    } else if (in_x1(u) != in_x1(v)) {
      int a = in_x1(u) ? u : v;  // X1-side endpoint
      int b = in_x1(u) ? v : u;
      if (spent_cross[a] >= cap_cross_u || spent_cross[b] >= cap_cross_v) {
        continue;
      }
      ++spent_cross[a];
      ++spent_cross[b];
    }
    painter.erase(u, v);
    ++spent_global[u];
    ++spent_global[v];
  }
  MultiColouredGraph g = painter.graph();
  StructureWitness w{StructureClass::H, {x1, x2}, params};
  return {g, checked_witness(g, std::move(w), "gen_H")};
}

std::pair<MultiColouredGraph, StructureWitness> gen_K(const KParams& params,
                                                      uint64_t seed) {
  require(params.x1 >= 1 && params.x2 >= 1 && params.x3 >= 1,
          "gen_K: x1, x2, x3 must be positive");
  require(params.c >= 0, "gen_K: c must be >= 0");
  int n = static_cast<int>(params.x1 + params.x2 + params.x3);
  std::vector<int> x1 = range_block(0, static_cast<int>(params.x1));
  std::vector<int> x2 =
      range_block(static_cast<int>(params.x1), static_cast<int>(params.x2));
  std::vector<int> x3 = range_block(
      static_cast<int>(params.x1 + params.x2), static_cast<int>(params.x3));
  Painter painter(n);
  // The constrained zones, plus the construction-2 pattern on the free ones.
  painter.paint_across(x1, x3, Colour::red);
  painter.paint_across(x2, x3, Colour::blue);
  painter.paint_within(x3, Colour::green);
  painter.paint_within(x1, Colour::red);
  painter.paint_within(x2, Colour::blue);
  painter.paint_across(x1, x2, Colour::green);
  Perturber perturber(seed);
  perturber.delete_edges(painter, params.c, n);
  MultiColouredGraph g = painter.graph();
  StructureWitness w{StructureClass::K, {x1, x2, x3}, params};
  return {g, checked_witness(g, std::move(w), "gen_K")};
}

std::pair<MultiColouredGraph, StructureWitness> gen_Kstar(
    const KstarParams& params, uint64_t seed) {
  require(params.x1 >= 1 && params.x2 >= 1 && params.y1 >= 1 && params.y2 >= 1,
          "gen_Kstar: part floors must be positive");
  require(params.c >= 0, "gen_Kstar: c must be >= 0");
  // Grow the Y parts evenly if the floors alone do not reach z.
  long long y1 = params.y1, y2 = params.y2;
  while (y1 + y2 < params.z) {
    if (y1 <= y2) {
      ++y1;
    } else {
      ++y2;
    }
  }
  int n = static_cast<int>(params.x1 + params.x2 + y1 + y2);
  std::vector<int> x1 = range_block(0, static_cast<int>(params.x1));
  std::vector<int> x2 =
      range_block(static_cast<int>(params.x1), static_cast<int>(params.x2));
  std::vector<int> py1 = range_block(static_cast<int>(params.x1 + params.x2),
                                     static_cast<int>(y1));
  std::vector<int> py2 = range_block(
      static_cast<int>(params.x1 + params.x2 + y1), static_cast<int>(y2));
  Painter painter(n);
  painter.paint_across(x1, py1, Colour::red);
  painter.paint_across(x2, py2, Colour::red);
  painter.paint_across(x1, py2, Colour::blue);
  painter.paint_across(x2, py1, Colour::blue);
  painter.paint_across(x1, x2, Colour::green);
  painter.paint_across(py1, py2, Colour::green);
  // Part interiors are unconstrained by the definition.
  painter.paint_within(x1, Colour::green);
  painter.paint_within(x2, Colour::green);
  painter.paint_within(py1, Colour::green);
  painter.paint_within(py2, Colour::green);
  Perturber perturber(seed);
  perturber.delete_edges(painter, params.c, n);
  MultiColouredGraph g = painter.graph();
  StructureWitness w{StructureClass::Kstar, {x1, x2, py1, py2}, params};
  return {g, checked_witness(g, std::move(w), "gen_Kstar")};
}

}  // namespace ramsey
