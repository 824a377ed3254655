#include "ramsey/matchings.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <algorithm>
#include <numeric>
#include <queue>

#include "ramsey/cycles.hpp"

namespace ramsey {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

void check_parts_valid(int n, std::span<const int> X, std::span<const int> Y) {
  if (X.empty() || Y.empty()) {
    throw PreconditionError("bipartite parts must be non-empty");
  }
  std::vector<char> seen(n, 0);
  for (std::span<const int> part : {X, Y}) {
    for (int v : part) {
      if (v < 0 || v >= n) {
        throw PreconditionError("part vertex out of range: " +
                                std::to_string(v));
      }
      if (seen[v]) {
        throw PreconditionError("parts overlap at vertex " +
                                std::to_string(v));
      }
      seen[v] = 1;
    }
  }
}

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

// Maximum matching of the subgraph induced on `vertices`, as global-id
// edge pairs. Non-bipartite components need blossom handling; Boost's
// verified Edmonds implementation provides it.
std::vector<std::pair<int, int>> max_matching_within(
    const ColourSlice& g, const std::vector<int>& vertices) {
  int m = static_cast<int>(vertices.size());
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < m; ++i) local[vertices[i]] = i;
  BoostGraph bg(m);
  for (int i = 0; i < m; ++i) {
    for (int nb : g.neighbours(vertices[i])) {
      int j = local[nb];
      if (j > i) boost::add_edge(i, j, bg);
    }
  }
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(m);
  if (!boost::checked_edmonds_maximum_cardinality_matching(bg, &mate[0])) {
    throw InternalError("maximum matching failed optimality verification");
  }
  std::vector<std::pair<int, int>> edges;
  auto null_v = boost::graph_traits<BoostGraph>::null_vertex();
  for (int i = 0; i < m; ++i) {
    if (mate[i] != null_v && static_cast<int>(mate[i]) > i) {
      int u = vertices[i];
      int v = vertices[static_cast<int>(mate[i])];
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Components of the bipartite view (cross edges only) between V1 and V2.
struct CrossView {
  std::vector<int> verts;                   // V1 then V2, global ids
  std::vector<std::vector<int>> adj;        // local
  int n1 = 0;
  int n() const { return static_cast<int>(verts.size()); }
};

CrossView make_cross(const ColourSlice& g, std::span<const int> V1,
                     std::span<const int> V2) {
  CrossView cv;
  cv.verts.assign(V1.begin(), V1.end());
  cv.verts.insert(cv.verts.end(), V2.begin(), V2.end());
  cv.n1 = static_cast<int>(V1.size());
  cv.adj.assign(cv.n(), {});
  for (int i = 0; i < cv.n1; ++i) {
    for (int j = cv.n1; j < cv.n(); ++j) {
      if (g.has_edge(cv.verts[i], cv.verts[j])) {
        cv.adj[i].push_back(j);
        cv.adj[j].push_back(i);
      }
    }
  }
  return cv;
}

std::vector<std::vector<int>> cross_components(const CrossView& cv) {
  std::vector<char> seen(cv.n(), 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < cv.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int u : cv.adj[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
          queue.push(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

ConnectedMatching checked_matching(const ColourSlice& g, ConnectedMatching m,
                                   const char* who) {
  if (!validate_connected_matching(g, m)) {
    throw InternalError(std::string(who) + ": matching failed validation");
  }
  return m;
}

}  // namespace

std::vector<Component> components(const ColourSlice& g) {
  int n = g.vertex_count();
  std::vector<int> colour(n, -1);  // BFS 2-colouring per component
  std::vector<Component> out;
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    Component comp;
    comp.vertices.push_back(s);
    colour[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int u : g.neighbours(v)) {
        if (colour[u] == -1) {
          colour[u] = colour[v] ^ 1;
          comp.vertices.push_back(u);
          queue.push(u);
        } else if (colour[u] == colour[v]) {
          comp.bipartite = false;
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool validate_connected_matching(const ColourSlice& g,
                                 const ConnectedMatching& m) {
  if (m.colour != g.colour()) return false;
  std::vector<char> in_comp(g.vertex_count(), 0);
  for (int v : m.component) {
    if (v < 0 || v >= g.vertex_count() || in_comp[v]) return false;
    in_comp[v] = 1;
  }
  std::vector<char> matched(g.vertex_count(), 0);
  for (auto [u, v] : m.edges) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) {
      return false;
    }
    if (u == v || !g.has_edge(u, v)) return false;
    if (matched[u] || matched[v]) return false;
    matched[u] = matched[v] = 1;
    if (!in_comp[u] || !in_comp[v]) return false;
  }
  return true;
}

std::optional<ConnectedMatching> max_connected_matching(const ColourSlice& g,
                                                        bool require_odd) {
  std::vector<Component> comps = components(g);
  const Component* best_comp = nullptr;
  std::vector<std::pair<int, int>> best_edges;
  bool first = true;
  for (const Component& comp : comps) {
    if (require_odd && comp.bipartite) continue;
    auto edges = max_matching_within(g, comp.vertices);
    if (first || edges.size() > best_edges.size()) {
      best_comp = &comp;
      best_edges = std::move(edges);
      first = false;
    }
  }
  if (!best_comp) return std::nullopt;
  ConnectedMatching m{g.colour(), std::move(best_edges), best_comp->vertices,
                      best_comp->odd()};
  return checked_matching(g, std::move(m), "max_connected_matching");
}

ConnectedMatching avg_degree_connected_matching(const ColourSlice& g, int m) {
  int n = g.vertex_count();
  require(m >= 3 && m <= n, "avg-degree matching: need 3 <= m <= n");
  long long twice_edges = 2 * g.edge_count();
  require(Rat(twice_edges, n) >= Rat(m),
          "avg-degree matching: average degree below m");
  // A cycle of even length L yields L matched vertices by alternation, an
  // odd one only L-1, so odd m asks Erdos-Gallai for length m+1.
  int want = (m % 2 == 0) ? m : m + 1;
  CycleCertificate cycle = erdos_gallai_long_cycle(g, want);
  std::vector<std::pair<int, int>> edges;
  int len = cycle.length();
  for (int i = 0; i + 1 < len; i += 2) {
    int u = cycle.vertices[i], v = cycle.vertices[i + 1];
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(edges.begin(), edges.end());
  // The cycle is connected, so it lies inside one component of g.
  for (const Component& comp : components(g)) {
    if (std::binary_search(comp.vertices.begin(), comp.vertices.end(),
                           cycle.vertices[0])) {
      ConnectedMatching result{g.colour(), std::move(edges), comp.vertices,
                               comp.odd()};
      if (result.matched_vertices() < m) {
        throw InternalError("avg-degree matching: size below m");
      }
      return checked_matching(g, std::move(result),
                              "avg_degree_connected_matching");
    }
  }
  throw InternalError("avg-degree matching: cycle component not found");
}

ConnectedMatching dense_bipartite_connected_matching(const ColourSlice& g,
                                                     std::span<const int> V1,
                                                     std::span<const int> V2,
                                                     const Rat& eps) {
  check_parts_valid(g.vertex_count(), V1, V2);
  require(V1.size() >= V2.size(), "dense bipartite matching: |V1| >= |V2|");
  require(eps > 0 && eps < Rat(1, 100),
          "dense bipartite matching: need 0 < eps < 0.01");
  CrossView cv = make_cross(g, V1, V2);
  long long cross_edges = 0;
  for (int i = 0; i < cv.n1; ++i) {
    cross_edges += static_cast<long long>(cv.adj[i].size());
  }
  long long v1 = static_cast<long long>(V1.size());
  long long v2 = static_cast<long long>(V2.size());
  require(Rat(cross_edges) >= (Rat(1) - eps) * Rat(v1 * v2),
          "dense bipartite matching: edge count below (1-eps)|V1||V2|");
  // Bound 2(1-3 eps)|V2| rounded up to the next even integer; matched
  // vertex counts are even, so this loses nothing.
  long long bound = 2 * ceil_rat((Rat(1) - 3 * eps) * Rat(v2));
  std::vector<std::pair<int, int>> best_edges;
  std::vector<int> best_comp;
  for (const auto& comp_local : cross_components(cv)) {
    std::vector<int> comp_global;
    comp_global.reserve(comp_local.size());
    for (int v : comp_local) comp_global.push_back(cv.verts[v]);
    std::sort(comp_global.begin(), comp_global.end());
    // Matching within the cross view only.
    std::vector<std::pair<int, int>> edges;
    {
      int msize = static_cast<int>(comp_local.size());
      std::vector<int> idx(cv.n(), -1);
      for (int i = 0; i < msize; ++i) idx[comp_local[i]] = i;
      BoostGraph bg(msize);
      for (int i = 0; i < msize; ++i) {
        for (int nb : cv.adj[comp_local[i]]) {
          int j = idx[nb];
          if (j > i) boost::add_edge(i, j, bg);
        }
      }
      std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(
          msize);
      if (!boost::checked_edmonds_maximum_cardinality_matching(bg, &mate[0])) {
        throw InternalError("maximum matching failed optimality verification");
      }
      auto null_v = boost::graph_traits<BoostGraph>::null_vertex();
      for (int i = 0; i < msize; ++i) {
        if (mate[i] != null_v && static_cast<int>(mate[i]) > i) {
          int u = cv.verts[comp_local[i]];
          int v = cv.verts[comp_local[static_cast<int>(mate[i])]];
          edges.push_back({std::min(u, v), std::max(u, v)});
        }
      }
      std::sort(edges.begin(), edges.end());
    }
    if (edges.size() > best_edges.size() || best_comp.empty()) {
      best_edges = std::move(edges);
      best_comp = std::move(comp_global);
    }
  }
  if (2 * static_cast<long long>(best_edges.size()) < bound) {
    throw InternalError("dense bipartite matching: bound not met");
  }
  bool comp_odd = false;  // cross view is bipartite by construction
  ConnectedMatching result{g.colour(), std::move(best_edges),
                           std::move(best_comp), comp_odd};
  return checked_matching(g, std::move(result),
                          "dense_bipartite_connected_matching");
}

ConnectedMatching almost_complete_bipartite_connected_matching(
    const ColourSlice& g, std::span<const int> V1, std::span<const int> V2,
    long long a, long long ell) {
  check_parts_valid(g.vertex_count(), V1, V2);
  require(a >= 0 && ell > 0,
          "almost-complete bipartite matching: a >= 0 and ell > 0");
  require(static_cast<long long>(V1.size()) >=
                  static_cast<long long>(V2.size()) &&
              static_cast<long long>(V2.size()) >= ell,
          "almost-complete bipartite matching: need |V1| >= |V2| >= ell");
  require(2 * a < ell, "almost-complete bipartite matching: need a/ell < 0.5");
  require(is_almost_complete_bipartite(g, V1, V2, Rat(a)),
          "almost-complete bipartite matching: not a-almost-complete");
  // Greedy augmentation: any unmatched V2 vertex has at least |V1|-a
  // neighbours, and fewer than |V2|-a <= |V1|-a of them are matched.
  CrossView cv = make_cross(g, V1, V2);
  std::vector<char> used(cv.n(), 0);
  std::vector<std::pair<int, int>> edges;
  long long target = static_cast<long long>(V2.size()) - a;
  for (int j = cv.n1; j < cv.n() && static_cast<long long>(edges.size()) <
                                        static_cast<long long>(target);
       ++j) {
    if (used[j]) continue;
    for (int i : cv.adj[j]) {
      if (!used[i]) {
        used[i] = used[j] = 1;
        int u = cv.verts[i], v = cv.verts[j];
        edges.push_back({std::min(u, v), std::max(u, v)});
        break;
      }
    }
  }
  if (2 * static_cast<long long>(edges.size()) <
      2 * static_cast<long long>(V2.size()) - 2 * a) {
    throw InternalError("almost-complete bipartite matching: greedy fell short");
  }
  std::sort(edges.begin(), edges.end());
  // a/ell < 1/2 makes the bipartite view connected: one component.
  std::vector<int> comp(cv.verts);
  std::sort(comp.begin(), comp.end());
  auto comps = cross_components(cv);
  if (comps.size() != 1) {
    throw InternalError("almost-complete bipartite matching: disconnected");
  }
  ConnectedMatching result{g.colour(), std::move(edges), std::move(comp),
                           false};
  return checked_matching(g, std::move(result),
                          "almost_complete_bipartite_connected_matching");
}

namespace {

// Largest component per colour with deterministic ties: red before blue
// before green, then lowest vertex id.
std::pair<Colour, std::vector<int>> largest_component_two_coloured(
    const MultiColouredGraph& g) {
  std::pair<Colour, std::vector<int>> best{Colour::red, {}};
  bool have = false;
  for (Colour c : {Colour::red, Colour::blue}) {
    for (const Component& comp : components(g.slice(c))) {
      if (!have || comp.vertices.size() > best.second.size()) {
        best = {c, comp.vertices};
        have = true;
      }
    }
  }
  return best;
}

void check_two_coloured(const MultiColouredGraph& g, const char* who) {
  for (const auto& e : g.edges()) {
    if (e.colours.contains(Colour::green)) {
      throw PreconditionError(std::string(who) +
                              ": graph must use only red and blue");
    }
  }
}

}  // namespace

std::pair<Colour, std::vector<int>> largest_mono_component(
    const MultiColouredGraph& g, const Rat& eta) {
  check_two_coloured(g, "largest_mono_component");
  require(eta > 0 && eta < Rat(1, 3),
          "largest_mono_component: need 0 < eta < 1/3");
  long long K = g.vertex_count();
  require(Rat(K) >= 1 / eta, "largest_mono_component: need K >= 1/eta");
  require(is_fraction_complete(g, eta),
          "largest_mono_component: graph is not (1-eta)-complete");
  auto best = largest_component_two_coloured(g);
  if (Rat(static_cast<long long>(best.second.size())) <
      (Rat(1) - 3 * eta) * Rat(K)) {
    throw InternalError("largest_mono_component: bound (1-3 eta)K not met");
  }
  return best;
}

HoleOutcome hole_component_dichotomy(const MultiColouredGraph& g,
                                     std::span<const int> W, const Rat& eta) {
  check_two_coloured(g, "hole_component_dichotomy");
  require(eta > 0 && eta < Rat(1, 20),
          "hole_component_dichotomy: need 0 < eta < 1/20");
  long long K = g.vertex_count();
  require(Rat(K) >= 1 / eta, "hole_component_dichotomy: need K >= 1/eta");
  std::vector<char> in_w(K, 0);
  for (int v : W) {
    if (v < 0 || v >= K) {
      throw PreconditionError("hole_component_dichotomy: W out of range");
    }
    if (in_w[v]) {
      throw PreconditionError("hole_component_dichotomy: repeated W vertex");
    }
    in_w[v] = 1;
  }
  long long w_size = static_cast<long long>(W.size());
  long long rest_size = K - w_size;
  require(ge_scaled_sqrt(Rat(w_size), Rat(4) * Rat(K), eta),
          "hole_component_dichotomy: |W| below 4 sqrt(eta) K");
  require(ge_scaled_sqrt(Rat(rest_size), Rat(4) * Rat(K), eta),
          "hole_component_dichotomy: |V\\W| below 4 sqrt(eta) K");
  // g must look like a (1-eta)-complete graph with the inside of W deleted:
  // no W-internal edges, and degrees counted as if they were present.
  for (int v : W) {
    for (int u : g.neighbours(v)) {
      if (in_w[u]) {
        throw PreconditionError(
            "hole_component_dichotomy: edge inside W present");
      }
    }
  }
  Rat degree_floor = (Rat(1) - eta) * Rat(K - 1);
  for (int v = 0; v < K; ++v) {
    long long restored = in_w[v] ? (w_size - 1) : 0;
    require(Rat(g.degree(v) + restored) >= degree_floor,
            "hole_component_dichotomy: underlying graph not (1-eta)-complete");
  }
  HoleOutcome outcome;
  auto best = largest_component_two_coloured(g);
  long long f = static_cast<long long>(best.second.size());
  // |F| >= (1 - 2 sqrt(eta)) K  <=>  K - |F| <= 2 sqrt(eta) K
  if (le_scaled_sqrt(Rat(K - f), Rat(2) * Rat(K), eta)) {
    outcome.component = std::move(best);
    return outcome;
  }
  int w_r = -1, w_b = -1;
  std::vector<int> w_sorted(W.begin(), W.end());
  std::sort(w_sorted.begin(), w_sorted.end());
  for (int v : w_sorted) {
    long long non_red = 0, non_blue = 0;
    for (int u = 0; u < K; ++u) {
      if (u == v || in_w[u]) continue;
      ColourSet set = g.colours(v, u);
      if (!set.contains(Colour::red)) ++non_red;
      if (!set.contains(Colour::blue)) ++non_blue;
    }
    if (w_r < 0 && le_scaled_sqrt(Rat(non_red), Rat(3) * Rat(K), eta)) {
      w_r = v;
    }
    if (w_b < 0 && le_scaled_sqrt(Rat(non_blue), Rat(3) * Rat(K), eta)) {
      w_b = v;
    }
  }
  if (w_r < 0 || w_b < 0) {
    throw InternalError("hole_component_dichotomy: neither outcome holds");
  }
  outcome.witnesses = {w_r, w_b};
  return outcome;
}

}  // namespace ramsey
