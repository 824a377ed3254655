#include "ramsey/stability.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ramsey {

namespace {

constexpr int kExhaustiveCap = 12;

int part_count(StructureClass c) {
  switch (c) {
    case StructureClass::H:
      return 2;
    case StructureClass::K:
      return 3;
    case StructureClass::Kstar:
      return 4;
  }
  return 0;
}

// Exclusive-colour zones as (part_a, part_b, colour, clause); part_b == -1
// means within part_a.
struct Zone {
  int a;
  int b;
  Colour colour;
  Clause clause;
};

std::vector<Zone> zones_for(StructureClass c) {
  switch (c) {
    case StructureClass::H:
      return {};
    case StructureClass::K:
      return {{0, 2, Colour::red, Clause::excl_red_x1x3},
              {1, 2, Colour::blue, Clause::excl_blue_x2x3},
              {2, -1, Colour::green, Clause::excl_green_x3}};
    case StructureClass::Kstar:
      return {{0, 2, Colour::red, Clause::excl_red_x1y1},
              {1, 3, Colour::red, Clause::excl_red_x2y2},
              {0, 3, Colour::blue, Clause::excl_blue_x1y2},
              {1, 2, Colour::blue, Clause::excl_blue_x2y1},
              {0, 1, Colour::green, Clause::excl_green_x1x2},
              {2, 3, Colour::green, Clause::excl_green_y1y2}};
  }
  return {};
}

bool zone_edge_ok(const MultiColouredGraph& g, int u, int v, Colour colour) {
  ColourSet set = g.colours(u, v);
  return set.empty() || set == ColourSet(colour);
}

// The class definitions use c2-sparse with c2 = 0 at the boundary (no
// off-colour edges at all); the public predicate keeps its open-interval
// contract, so zero is handled here.
bool sparse_induced_tolerant(const ColourSlice& g,
                             std::span<const int> vertices, const Rat& c) {
  if (c == Rat(0)) {
    for (size_t i = 0; i < vertices.size(); ++i) {
      for (size_t j = i + 1; j < vertices.size(); ++j) {
        if (g.has_edge(vertices[i], vertices[j])) return false;
      }
    }
    return true;
  }
  if (c >= 1) return true;
  return is_sparse_induced(g, vertices, c);
}

bool sparse_bipartite_tolerant(const ColourSlice& g, std::span<const int> U,
                               std::span<const int> W, const Rat& c) {
  if (c == Rat(0)) {
    for (int u : U) {
      for (int w : W) {
        if (g.has_edge(u, w)) return false;
      }
    }
    return true;
  }
  if (c >= 1) return true;
  return is_sparse_bipartite(g, U, W, c);
}

const Rat& almost_complete_budget(const ClassParams& p) {
  if (std::holds_alternative<HParams>(p)) return std::get<HParams>(p).c1;
  if (std::holds_alternative<KParams>(p)) return std::get<KParams>(p).c;
  return std::get<KstarParams>(p).c;
}

std::vector<long long> size_floors(const ClassParams& p) {
  if (std::holds_alternative<HParams>(p)) {
    const auto& h = std::get<HParams>(p);
    return {h.x1, h.x2};
  }
  if (std::holds_alternative<KParams>(p)) {
    const auto& k = std::get<KParams>(p);
    return {k.x1, k.x2, k.x3};
  }
  const auto& ks = std::get<KstarParams>(p);
  return {ks.x1, ks.x2, ks.y1, ks.y2};
}

std::vector<Clause> size_clauses(StructureClass c) {
  switch (c) {
    case StructureClass::H:
      return {Clause::size_x1, Clause::size_x2};
    case StructureClass::K:
      return {Clause::size_x1, Clause::size_x2, Clause::size_x3};
    case StructureClass::Kstar:
      return {Clause::size_x1, Clause::size_x2, Clause::size_y1,
              Clause::size_y2};
  }
  return {};
}

}  // namespace

const char* structure_class_name(StructureClass c) {
  switch (c) {
    case StructureClass::H:
      return "H";
    case StructureClass::K:
      return "K";
    case StructureClass::Kstar:
      return "Kstar";
  }
  return "?";
}

StructureClass params_class(const ClassParams& p) {
  if (std::holds_alternative<HParams>(p)) return StructureClass::H;
  if (std::holds_alternative<KParams>(p)) return StructureClass::K;
  return StructureClass::Kstar;
}

const char* clause_name(Clause c) {
  switch (c) {
    case Clause::partition:
      return "partition";
    case Clause::size_x1:
      return "size_x1";
    case Clause::size_x2:
      return "size_x2";
    case Clause::size_x3:
      return "size_x3";
    case Clause::size_y1:
      return "size_y1";
    case Clause::size_y2:
      return "size_y2";
    case Clause::size_z:
      return "size_z";
    case Clause::almost_complete:
      return "almost_complete";
    case Clause::g1_x1_complete:
      return "g1_x1_complete";
    case Clause::g2_x1_sparse:
      return "g2_x1_sparse";
    case Clause::g2_cross_complete:
      return "g2_cross_complete";
    case Clause::g1_cross_sparse:
      return "g1_cross_sparse";
    case Clause::excl_red_x1x3:
      return "excl_red_x1x3";
    case Clause::excl_blue_x2x3:
      return "excl_blue_x2x3";
    case Clause::excl_green_x3:
      return "excl_green_x3";
    case Clause::excl_red_x1y1:
      return "excl_red_x1y1";
    case Clause::excl_red_x2y2:
      return "excl_red_x2y2";
    case Clause::excl_blue_x1y2:
      return "excl_blue_x1y2";
    case Clause::excl_blue_x2y1:
      return "excl_blue_x2y1";
    case Clause::excl_green_x1x2:
      return "excl_green_x1x2";
    case Clause::excl_green_y1y2:
      return "excl_green_y1y2";
  }
  return "?";
}

WitnessReport verify_witness(const MultiColouredGraph& g,
                             const StructureWitness& w) {
  WitnessReport report;
  auto add = [&](Clause c, const std::string& text) {
    report.ok = false;
    report.violations.push_back(c);
    if (!report.detail.empty()) report.detail += "; ";
    report.detail += text;
  };

  int n = g.vertex_count();
  int expected_parts = part_count(w.class_tag);
  if (params_class(w.params) != w.class_tag ||
      static_cast<int>(w.parts.size()) != expected_parts) {
    add(Clause::partition, "wrong number of parts for class");
    return report;
  }
  std::vector<int> owner(n, -1);
  bool partition_ok = true;
  for (size_t p = 0; p < w.parts.size(); ++p) {
    for (int v : w.parts[p]) {
      if (v < 0 || v >= n || owner[v] != -1) {
        partition_ok = false;
        break;
      }
      owner[v] = static_cast<int>(p);
    }
  }
  for (int v = 0; v < n && partition_ok; ++v) {
    if (owner[v] == -1) partition_ok = false;
  }
  if (!partition_ok) {
    add(Clause::partition, "parts do not partition the vertex set");
    return report;
  }

  // Size floors.
  std::vector<long long> floors = size_floors(w.params);
  std::vector<Clause> clauses = size_clauses(w.class_tag);
  for (size_t i = 0; i < floors.size(); ++i) {
    if (static_cast<long long>(w.parts[i].size()) < floors[i]) {
      add(clauses[i], std::string(clause_name(clauses[i])) + " below floor");
    }
  }
  if (w.class_tag == StructureClass::Kstar) {
    const auto& ks = std::get<KstarParams>(w.params);
    if (static_cast<long long>(w.parts[2].size() + w.parts[3].size()) < ks.z) {
      add(Clause::size_z, "|Y1|+|Y2| below z");
    }
  }

  // Almost completeness of the whole graph.
  if (!is_almost_complete(g, almost_complete_budget(w.params))) {
    add(Clause::almost_complete, "graph is not c-almost-complete");
  }

  if (w.class_tag == StructureClass::H) {
    const auto& h = std::get<HParams>(w.params);
    ColourSlice g1 = g.slice(h.gamma1);
    ColourSlice g2 = g.slice(h.gamma2);
    // Degree clauses over an empty part hold vacuously.
    if (!is_fraction_complete_induced(g1, w.parts[0], h.c2)) {
      add(Clause::g1_x1_complete, "gamma1 slice on X1 not (1-c2)-complete");
    }
    if (!sparse_induced_tolerant(g2, w.parts[0], h.c2)) {
      add(Clause::g2_x1_sparse, "gamma2 slice on X1 not c2-sparse");
    }
    if (!w.parts[0].empty() && !w.parts[1].empty()) {
      if (!is_fraction_complete_bipartite(g2, w.parts[0], w.parts[1], h.c2)) {
        add(Clause::g2_cross_complete,
            "gamma2 slice across X1-X2 not (1-c2)-complete");
      }
      if (!sparse_bipartite_tolerant(g1, w.parts[0], w.parts[1], h.c2)) {
        add(Clause::g1_cross_sparse,
            "gamma1 slice across X1-X2 not c2-sparse");
      }
    }
  } else {
    for (const Zone& zone : zones_for(w.class_tag)) {
      bool ok = true;
      const auto& part_a = w.parts[zone.a];
      if (zone.b < 0) {
        for (size_t i = 0; i < part_a.size() && ok; ++i) {
          for (size_t j = i + 1; j < part_a.size(); ++j) {
            if (!zone_edge_ok(g, part_a[i], part_a[j], zone.colour)) {
              ok = false;
              break;
            }
          }
        }
      } else {
        const auto& part_b = w.parts[zone.b];
        for (int u : part_a) {
          if (!ok) break;
          for (int v : part_b) {
            if (!zone_edge_ok(g, u, v, zone.colour)) {
              ok = false;
              break;
            }
          }
        }
      }
      if (!ok) {
        add(zone.clause, std::string(clause_name(zone.clause)) + " violated");
      }
    }
  }
  return report;
}

namespace {

StructureWitness witness_from_labels(const MultiColouredGraph& g,
                                     const ClassParams& params,
                                     const std::vector<int>& label) {
  StructureWitness w;
  w.class_tag = params_class(params);
  w.params = params;
  w.parts.assign(part_count(w.class_tag), {});
  for (int v = 0; v < g.vertex_count(); ++v) {
    w.parts[label[v]].push_back(v);
  }
  return w;
}

// Exhaustive search for K / K*: assign labels in vertex order; the
// exclusive-colour zone clauses are pairwise, so they prune as soon as both
// endpoints are labelled. Size floors prune on remaining capacity. The
// first full assignment found is the lexicographically least.
struct ZoneSearch {
  const MultiColouredGraph& g;
  const ClassParams& params;
  int parts;
  std::vector<long long> floors;
  long long z_floor = 0;  // K* only: |Y1|+|Y2| >= z
  // zone_colour[a][b]: required exclusive colour between labels a and b,
  // or no constraint.
  std::vector<std::vector<std::optional<Colour>>> zone_colour;
  std::vector<int> label;
  std::vector<long long> count;
  std::optional<std::vector<int>> found;

  ZoneSearch(const MultiColouredGraph& graph, const ClassParams& p)
      : g(graph), params(p) {
    parts = part_count(params_class(params));
    floors = size_floors(params);
    if (std::holds_alternative<KstarParams>(params)) {
      z_floor = std::get<KstarParams>(params).z;
    }
    zone_colour.assign(parts, std::vector<std::optional<Colour>>(parts));
    for (const Zone& zone : zones_for(params_class(params))) {
      int b = zone.b < 0 ? zone.a : zone.b;
      zone_colour[zone.a][b] = zone.colour;
      zone_colour[b][zone.a] = zone.colour;
    }
    label.assign(g.vertex_count(), -1);
    count.assign(parts, 0);
  }

  bool compatible(int v, int lab) const {
    for (int u = 0; u < v; ++u) {
      auto need = zone_colour[label[u]][lab];
      if (need && !zone_edge_ok(g, u, v, *need)) return false;
    }
    return true;
  }

  bool capacity_ok(int next_vertex) const {
    long long left = g.vertex_count() - next_vertex;
    long long deficit = 0;
    for (int p = 0; p < parts; ++p) {
      deficit += std::max<long long>(0, floors[p] - count[p]);
    }
    if (parts == 4) {
      // Filling the Y floors may still leave |Y1|+|Y2| short of z.
      long long y_after_floors = std::max(count[2], floors[2]) +
                                 std::max(count[3], floors[3]);
      deficit += std::max<long long>(0, z_floor - y_after_floors);
    }
    return deficit <= left;
  }

  bool dfs(int v) {
    if (v == g.vertex_count()) {
      for (int p = 0; p < parts; ++p) {
        if (count[p] < floors[p]) return false;
      }
      if (parts == 4 && count[2] + count[3] < z_floor) return false;
      found = label;
      return true;
    }
    if (!capacity_ok(v)) return false;
    for (int lab = 0; lab < parts; ++lab) {
      if (!compatible(v, lab)) continue;
      label[v] = lab;
      ++count[lab];
      if (dfs(v + 1)) return true;
      --count[lab];
      label[v] = -1;
    }
    return false;
  }
};

std::optional<StructureWitness> detect_exhaustive(const MultiColouredGraph& g,
                                                  const ClassParams& params) {
  // A partition-independent clause: fail fast.
  if (!is_almost_complete(g, almost_complete_budget(params))) {
    return std::nullopt;
  }
  if (std::holds_alternative<HParams>(params)) {
    // 2^n subsets; n <= 12 keeps this trivial. Iterate in lexicographic
    // label order (vertex 0 outermost) and return the first verified split.
    int n = g.vertex_count();
    std::vector<int> label(n, 0);
    for (uint32_t code = 0; code < (uint32_t{1} << n); ++code) {
      // label[0] in the most significant position keeps the sweep in
      // lexicographic label order.
      for (int v = 0; v < n; ++v) {
        label[v] = (code >> (n - 1 - v)) & 1u;
      }
      StructureWitness w = witness_from_labels(g, params, label);
      if (verify_witness(g, w).ok) return w;
    }
    return std::nullopt;
  }
  ZoneSearch search(g, params);
  if (!search.dfs(0)) return std::nullopt;
  StructureWitness w = witness_from_labels(g, params, *search.found);
  if (!verify_witness(g, w).ok) {
    throw InternalError("detect_structure: unsound exhaustive witness");
  }
  return w;
}

// For n beyond the exhaustive cap: a budgeted run of the pruned search
// (complete unless the budget trips) followed by a greedy refinement pass
// seeded from monochromatic degree profiles. Sound either way; incomplete.
struct BudgetedZoneSearch : ZoneSearch {
  long long budget;
  BudgetedZoneSearch(const MultiColouredGraph& graph, const ClassParams& p,
                     long long node_budget)
      : ZoneSearch(graph, p), budget(node_budget) {}

  bool dfs_budgeted(int v, bool& exhausted_budget) {
    if (--budget <= 0) {
      exhausted_budget = true;
      return false;
    }
    if (v == g.vertex_count()) {
      for (int p = 0; p < parts; ++p) {
        if (count[p] < floors[p]) return false;
      }
      if (parts == 4 && count[2] + count[3] < z_floor) return false;
      found = label;
      return true;
    }
    if (!capacity_ok(v)) return false;
    for (int lab = 0; lab < parts; ++lab) {
      if (!compatible(v, lab)) continue;
      label[v] = lab;
      ++count[lab];
      if (dfs_budgeted(v + 1, exhausted_budget)) return true;
      --count[lab];
      label[v] = -1;
      if (exhausted_budget) return false;
    }
    return false;
  }
};

// Number of zone-clause edge violations plus size deficits: a finer
// objective than whole clauses for local moves.
long long label_penalty(const MultiColouredGraph& g, const ClassParams& params,
                        const std::vector<int>& label) {
  StructureWitness w = witness_from_labels(g, params, label);
  WitnessReport rep = verify_witness(g, w);
  if (rep.ok) return 0;
  long long penalty = 0;
  StructureClass tag = params_class(params);
  if (tag == StructureClass::H) {
    penalty = static_cast<long long>(rep.violations.size());
  } else {
    std::vector<std::vector<std::optional<Colour>>> need(
        part_count(tag), std::vector<std::optional<Colour>>(part_count(tag)));
    for (const Zone& zone : zones_for(tag)) {
      int b = zone.b < 0 ? zone.a : zone.b;
      need[zone.a][b] = zone.colour;
      need[b][zone.a] = zone.colour;
    }
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        auto req = need[label[u]][label[v]];
        if (req && !zone_edge_ok(g, u, v, *req)) ++penalty;
      }
    }
    std::vector<long long> floors = size_floors(params);
    std::vector<long long> counts(part_count(tag), 0);
    for (int v = 0; v < n; ++v) ++counts[label[v]];
    for (size_t p = 0; p < floors.size(); ++p) {
      penalty += std::max<long long>(0, floors[p] - counts[p]);
    }
    if (tag == StructureClass::Kstar) {
      penalty += std::max<long long>(
          0, std::get<KstarParams>(params).z - counts[2] - counts[3]);
    }
  }
  return penalty;
}

std::optional<StructureWitness> detect_heuristic(const MultiColouredGraph& g,
                                                 const ClassParams& params) {
  if (!is_almost_complete(g, almost_complete_budget(params))) {
    return std::nullopt;
  }
  StructureClass tag = params_class(params);
  if (tag != StructureClass::H) {
    BudgetedZoneSearch search(g, params, 5'000'000);
    bool out_of_budget = false;
    if (search.dfs_budgeted(0, out_of_budget)) {
      StructureWitness w = witness_from_labels(g, params, *search.found);
      if (!verify_witness(g, w).ok) {
        throw InternalError("detect_structure: unsound budgeted witness");
      }
      return w;
    }
    if (!out_of_budget) return std::nullopt;  // genuinely exhausted
  }
  // Greedy refinement: seed labels from monochromatic degree profiles,
  // then steepest-descent single-vertex moves on the penalty.
  int n = g.vertex_count();
  int parts = part_count(tag);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  for (int restart = 0; restart < 20; ++restart) {
    std::vector<int> label(n, 0);
    if (restart == 0 && tag == StructureClass::H) {
      const auto& h = std::get<HParams>(params);
      for (int v = 0; v < n; ++v) {
        label[v] =
            g.degree(v, h.gamma1) >= g.degree(v, h.gamma2) ? 0 : 1;
      }
    } else if (restart == 0) {
      // Greedy pairwise seeding in vertex order.
      std::vector<std::vector<std::optional<Colour>>> need(
          parts, std::vector<std::optional<Colour>>(parts));
      for (const Zone& zone : zones_for(tag)) {
        int b = zone.b < 0 ? zone.a : zone.b;
        need[zone.a][b] = zone.colour;
        need[b][zone.a] = zone.colour;
      }
      for (int v = 0; v < n; ++v) {
        int best_lab = 0;
        long long best_bad = -1;
        for (int lab = 0; lab < parts; ++lab) {
          long long bad = 0;
          for (int u = 0; u < v; ++u) {
            auto req = need[label[u]][lab];
            if (req && !zone_edge_ok(g, u, v, *req)) ++bad;
          }
          if (best_bad < 0 || bad < best_bad) {
            best_bad = bad;
            best_lab = lab;
          }
        }
        label[v] = best_lab;
      }
    } else {
      for (int v = 0; v < n; ++v) {
        label[v] = static_cast<int>(rng() % parts);
      }
    }
    long long penalty = label_penalty(g, params, label);
    for (int round = 0; round < 400 && penalty > 0; ++round) {
      long long best = penalty;
      int best_v = -1, best_lab = -1;
      for (int v = 0; v < n; ++v) {
        int old = label[v];
        for (int lab = 0; lab < parts; ++lab) {
          if (lab == old) continue;
          label[v] = lab;
          long long trial = label_penalty(g, params, label);
          if (trial < best) {
            best = trial;
            best_v = v;
            best_lab = lab;
          }
        }
        label[v] = old;
      }
      if (best_v < 0) break;
      label[best_v] = best_lab;
      penalty = best;
    }
    if (penalty == 0) {
      StructureWitness w = witness_from_labels(g, params, label);
      if (verify_witness(g, w).ok) return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<StructureWitness> detect_structure(const MultiColouredGraph& g,
                                                 const ClassParams& params) {
  if (g.vertex_count() <= kExhaustiveCap) {
    return detect_exhaustive(g, params);
  }
  return detect_heuristic(g, params);
}

TheoremBClasses theorem_b_class_parameters(const Rat& alpha1,
                                           const Rat& alpha2,
                                           const Rat& alpha3, const Rat& eta,
                                           long long k) {
  if (!(alpha1 >= alpha2)) {
    throw PreconditionError("theorem B classes: alpha1 >= alpha2 required");
  }
  if (!(eta > 0)) {
    throw PreconditionError("theorem B classes: eta > 0 required");
  }
  auto approx = [](const Rat& x) {
    return static_cast<double>(x.numerator()) /
           static_cast<double>(x.denominator());
  };
  double e = approx(eta);
  double e2 = std::sqrt(e);
  double e4 = e * e * e * e;
  double e32 = std::pow(e, 1.0 / 32.0);
  double a1 = approx(alpha1), a2 = approx(alpha2), a3 = approx(alpha3);
  auto floor_scaled = [&](double coeff) {
    return static_cast<long long>(std::floor(coeff * static_cast<double>(k)));
  };
  auto dyadic = [](double x) {
    // Round up so budgets are never understated.
    long long num = static_cast<long long>(std::ceil(x * (1 << 20)));
    return Rat(num, 1 << 20);
  };
  TheoremBClasses out;
  out.h1 = {std::max<long long>(0, floor_scaled(a1 - 2 * e32)),
            std::max<long long>(0, floor_scaled(a2 / 2 - 2 * e32)),
            dyadic(3 * e4 * static_cast<double>(k)), dyadic(e32), Colour::red,
            Colour::blue};
  out.h2 = {std::max<long long>(0, floor_scaled(a2 - 2 * e32)),
            std::max<long long>(0, floor_scaled(a1 / 2 - 2 * e32)),
            dyadic(3 * e4 * static_cast<double>(k)), dyadic(e32), Colour::blue,
            Colour::red};
  out.k = {std::max<long long>(0, floor_scaled(a1 / 2 - 14000 * e2)),
           std::max<long long>(0, floor_scaled(a2 / 2 - 14000 * e2)),
           std::max<long long>(0, floor_scaled(a3 - 68000 * e2)),
           dyadic(4 * e4 * static_cast<double>(k))};
  out.kstar1 = {std::max<long long>(0, floor_scaled(a1 / 2 - 97 * e2)),
                std::max<long long>(0, floor_scaled(a1 / 2 - 97 * e2)),
                std::max<long long>(0, floor_scaled(a1 / 2 + 102 * e2)),
                std::max<long long>(0, floor_scaled(a1 / 2 + 102 * e2)),
                std::max<long long>(0, floor_scaled(a3 - 10 * e2)),
                dyadic(4 * e4 * static_cast<double>(k))};
  out.kstar2 = {std::max<long long>(0, floor_scaled(a1 / 2 - 97 * e2)),
                std::max<long long>(0, floor_scaled(a2 / 2 - 97 * e2)),
                std::max<long long>(0, floor_scaled(3 * a3 / 4 - 140 * e2)),
                std::max<long long>(0, floor_scaled(100 * e2)),
                std::max<long long>(0, floor_scaled(a3 - 10 * e2)),
                dyadic(4 * e4 * static_cast<double>(k))};
  return out;
}

}  // namespace ramsey
