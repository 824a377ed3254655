#include "ramsey/cycles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "ramsey/matchings.hpp"

namespace ramsey {

namespace {

constexpr int kExactCycleCap = 32;  // completeness cap for find_cycle_exact
constexpr int kDpCap = 20;          // subset-DP component size cap

// Local adjacency view in 0..n-1 with a global id map. Used for induced and
// bipartite-cross restrictions so every algorithm below works in local ids.
struct AdjView {
  std::vector<int> ids;                 // local -> global
  std::vector<std::vector<int>> adj;    // sorted neighbour lists
  std::vector<std::vector<char>> mat;   // adjacency matrix
  int n() const { return static_cast<int>(ids.size()); }
  bool edge(int u, int v) const { return mat[u][v] != 0; }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

AdjView make_view(const ColourSlice& g, std::span<const int> vertices) {
  AdjView view;
  view.ids.assign(vertices.begin(), vertices.end());
  int m = view.n();
  view.adj.assign(m, {});
  view.mat.assign(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (g.has_edge(view.ids[i], view.ids[j])) {
        view.mat[i][j] = view.mat[j][i] = 1;
        view.adj[i].push_back(j);
        view.adj[j].push_back(i);
      }
    }
  }
  return view;
}

AdjView make_full_view(const ColourSlice& g) {
  std::vector<int> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return make_view(g, all);
}

// Cross edges only: X first, then Y, edges within a part dropped.
AdjView make_cross_view(const ColourSlice& g, std::span<const int> X,
                        std::span<const int> Y) {
  AdjView view;
  view.ids.assign(X.begin(), X.end());
  view.ids.insert(view.ids.end(), Y.begin(), Y.end());
  int m = view.n();
  int nx = static_cast<int>(X.size());
  view.adj.assign(m, {});
  view.mat.assign(m, std::vector<char>(m, 0));
  for (int i = 0; i < nx; ++i) {
    for (int j = nx; j < m; ++j) {
      if (g.has_edge(view.ids[i], view.ids[j])) {
        view.mat[i][j] = view.mat[j][i] = 1;
        view.adj[i].push_back(j);
        view.adj[j].push_back(i);
      }
    }
  }
  return view;
}

std::vector<int> to_global(const AdjView& view, const std::vector<int>& local) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(view.ids[v]);
  return out;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

void check_vertex(const ColourSlice& g, int v, const char* role) {
  if (v < 0 || v >= g.vertex_count()) {
    throw PreconditionError(std::string(role) + " vertex out of range: " +
                            std::to_string(v));
  }
}

void check_parts_valid(const ColourSlice& g, std::span<const int> X,
                       std::span<const int> Y) {
  if (X.empty() || Y.empty()) {
    throw PreconditionError("bipartite parts must be non-empty");
  }
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::span<const int> part : {X, Y}) {
    for (int v : part) {
      check_vertex(g, v, "part");
      if (seen[v]) {
        throw PreconditionError("parts overlap at vertex " +
                                std::to_string(v));
      }
      seen[v] = 1;
    }
  }
}

CycleCertificate checked_cycle(const ColourSlice& g, std::vector<int> vertices,
                               std::optional<int> required_length,
                               const char* who) {
  CycleCertificate cert{std::move(vertices)};
  if (!validate_cycle(g, cert, required_length)) {
    throw InternalError(std::string(who) +
                        ": constructed cycle failed validation");
  }
  return cert;
}

PathCertificate checked_path(const ColourSlice& g, std::vector<int> vertices,
                             int from, int to, const char* who) {
  PathCertificate cert{std::move(vertices)};
  if (!validate_path(g, cert, from, to)) {
    throw InternalError(std::string(who) +
                        ": constructed path failed validation");
  }
  return cert;
}

// --- exact-length cycle search ---------------------------------------------

// Subset DP over one component (local ids, n <= kDpCap). Finds a cycle on
// exactly `length` vertices whose lowest local id is the DP start; complete.
std::optional<std::vector<int>> dp_exact_cycle(const AdjView& view,
                                               int length) {
  int m = view.n();
  std::vector<uint32_t> adjmask(m, 0);
  for (int v = 0; v < m; ++v) {
    for (int u : view.adj[v]) adjmask[v] |= uint32_t{1} << u;
  }
  std::vector<uint32_t> dp(size_t{1} << m);
  for (int s = 0; s + length <= m; ++s) {
    uint32_t allowed = ~uint32_t{0} << s;
    if (m < 32) allowed &= (uint32_t{1} << m) - 1;
    std::fill(dp.begin(), dp.end(), 0);
    uint32_t sbit = uint32_t{1} << s;
    dp[sbit] = sbit;
    // Subsets grow monotonically as integers, so one ascending sweep covers
    // every reachable state.
    for (uint32_t set = sbit; set < (uint32_t{1} << m); ++set) {
      uint32_t ends = dp[set];
      if (!ends || !(set & sbit)) continue;
      int used = std::popcount(set);
      if (used == length) {
        uint32_t closers = ends;
        while (closers) {
          int v = std::countr_zero(closers);
          closers &= closers - 1;
          if (!(adjmask[v] & sbit)) continue;
          // Reconstruct the path backwards through the DP table.
          std::vector<int> path;
          uint32_t cur_set = set;
          int cur = v;
          while (true) {
            path.push_back(cur);
            if (cur == s && cur_set == sbit) break;
            uint32_t prev_set = cur_set & ~(uint32_t{1} << cur);
            uint32_t cands = dp[prev_set] & adjmask[cur];
            cur_set = prev_set;
            cur = std::countr_zero(cands);
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        continue;
      }
      uint32_t frontier = 0;
      uint32_t es = ends;
      while (es) {
        int v = std::countr_zero(es);
        es &= es - 1;
        frontier |= adjmask[v];
      }
      frontier &= allowed & ~set;
      while (frontier) {
        int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        uint32_t next = set | (uint32_t{1} << u);
        if (std::popcount(next) <= length &&
            (dp[next] & (uint32_t{1} << u)) == 0 &&
            (adjmask[u] & dp[set])) {
          dp[next] |= uint32_t{1} << u;
        }
      }
    }
  }
  return std::nullopt;
}

// Pruned DFS for components larger than the DP cap (n <= 32). Sound and
// complete; the prunes below only cut branches that provably cannot close
// a cycle of the requested exact length.
struct ExactCycleDfs {
  const AdjView& view;
  int length;
  std::vector<uint32_t> adjmask;
  std::vector<int> path;
  uint32_t visited = 0;
  uint32_t allowed = 0;
  int start = 0;

  explicit ExactCycleDfs(const AdjView& v, int len) : view(v), length(len) {
    adjmask.assign(view.n(), 0);
    for (int a = 0; a < view.n(); ++a) {
      for (int b : view.adj[a]) adjmask[a] |= uint32_t{1} << b;
    }
  }

  uint32_t flood(int from, uint32_t usable) const {
    uint32_t region = uint32_t{1} << from;
    while (true) {
      uint32_t next = region;
      uint32_t scan = region;
      while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        next |= adjmask[v] & usable;
      }
      if (next == region) return region;
      region = next;
    }
  }

  // Two-colours the subgraph induced by `region`; returns false when it
  // contains an odd cycle. side0/side1 receive the classes.
  bool two_colour_region(uint32_t region, uint32_t& side0,
                         uint32_t& side1) const {
    side0 = side1 = 0;
    uint32_t rest = region;
    while (rest) {
      int root = std::countr_zero(rest);
      uint32_t frontier = uint32_t{1} << root;
      side0 |= frontier;
      uint32_t comp = frontier;
      bool parity = false;
      while (frontier) {
        uint32_t next = 0;
        uint32_t scan = frontier;
        while (scan) {
          int v = std::countr_zero(scan);
          scan &= scan - 1;
          next |= adjmask[v] & region;
        }
        next &= ~comp;
        comp |= next;
        if (parity) {
          side0 |= next;
        } else {
          side1 |= next;
        }
        parity = !parity;
        frontier = next;
      }
      rest &= ~comp;
    }
    // Verify properness.
    uint32_t scan = region & side0;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      if (adjmask[v] & side0 & region) return false;
    }
    scan = region & side1;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      if (adjmask[v] & side1 & region) return false;
    }
    return true;
  }

  bool prune(int v, int remaining) const {
    uint32_t usable = allowed & ~visited;
    uint32_t region = flood(v, usable);
    uint32_t fresh = region & ~(uint32_t{1} << v);
    if (std::popcount(fresh) < remaining) return true;
    uint32_t targets = adjmask[start] & fresh;
    if (!targets) return true;
    // Exact-length paths in a bipartite region are parity-constrained and
    // capacity-constrained per side.
    uint32_t side_v, side_other;
    if (two_colour_region(region, side_v, side_other)) {
      if (!(side_v & (uint32_t{1} << v))) std::swap(side_v, side_other);
      int need_other = (remaining + 1) / 2;
      int need_same = remaining / 2;
      if (std::popcount(side_other & fresh) < need_other) return true;
      if (std::popcount(side_v & fresh) < need_same) return true;
      uint32_t final_side = (remaining % 2 == 1) ? side_other : side_v;
      if (!(targets & final_side)) return true;
    }
    // The closing vertex must be reachable within `remaining` steps.
    uint32_t reached = uint32_t{1} << v;
    for (int step = 0; step < remaining; ++step) {
      uint32_t next = 0;
      uint32_t scan = reached;
      while (scan) {
        int w = std::countr_zero(scan);
        scan &= scan - 1;
        next |= adjmask[w] & usable;
      }
      if (next & targets) return false;
      uint32_t grown = reached | next;
      if (grown == reached) return true;
      reached = grown;
    }
    return true;
  }

  bool dfs(int v, int depth) {
    if (depth == length) {
      return (adjmask[v] & (uint32_t{1} << start)) != 0;
    }
    int remaining = length - depth;
    if (prune(v, remaining)) return false;
    uint32_t cands = adjmask[v] & allowed & ~visited;
    while (cands) {
      int u = std::countr_zero(cands);
      cands &= cands - 1;
      visited |= uint32_t{1} << u;
      path.push_back(u);
      if (dfs(u, depth + 1)) return true;
      path.pop_back();
      visited &= ~(uint32_t{1} << u);
    }
    return false;
  }

  std::optional<std::vector<int>> run() {
    int m = view.n();
    for (start = 0; start + length <= m; ++start) {
      allowed = ~uint32_t{0} << start;
      if (m < 32) allowed &= (uint32_t{1} << m) - 1;
      visited = uint32_t{1} << start;
      path.assign(1, start);
      if (dfs(start, 1)) return path;
    }
    return std::nullopt;
  }
};

std::optional<std::vector<int>> exact_cycle_in_component(const AdjView& comp,
                                                         int length) {
  if (comp.n() <= kDpCap) return dp_exact_cycle(comp, length);
  ExactCycleDfs dfs(comp, length);
  return dfs.run();
}

// --- rotation-extension machinery ------------------------------------------

// Extends the path greedily at both ends, then closes it into a cycle on its
// vertex set via the crossing argument. Requires d(head)+d(tail) >= |path|
// once the path is maximal, which all callers guarantee.
struct RotationBuilder {
  const AdjView& view;
  std::vector<char> on_path;

  explicit RotationBuilder(const AdjView& v)
      : view(v), on_path(v.n(), 0) {}

  void extend(std::vector<int>& path) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int u : view.adj[path.back()]) {
        if (!on_path[u]) {
          path.push_back(u);
          on_path[u] = 1;
          grew = true;
          break;
        }
      }
      for (int u : view.adj[path.front()]) {
        if (!on_path[u]) {
          path.insert(path.begin(), u);
          on_path[u] = 1;
          grew = true;
          break;
        }
      }
    }
  }

  // Maximal path -> cycle on the same vertex set.
  std::vector<int> close(const std::vector<int>& path) const {
    int head = path.front();
    int tail = path.back();
    if (view.edge(head, tail)) return path;
    int len = static_cast<int>(path.size());
    for (int i = 0; i + 1 < len; ++i) {
      if (view.edge(path[i], tail) && view.edge(path[i + 1], head)) {
        std::vector<int> cycle(path.begin(), path.begin() + i + 1);
        for (int j = len - 1; j > i; --j) cycle.push_back(path[j]);
        return cycle;
      }
    }
    throw InternalError("rotation closure: no crossing pair");
  }

  std::vector<int> hamiltonian_cycle() {
    int n = view.n();
    std::vector<int> path{0};
    on_path.assign(n, 0);
    on_path[0] = 1;
    while (true) {
      extend(path);
      std::vector<int> cycle = close(path);
      if (static_cast<int>(cycle.size()) == n) return cycle;
      // Absorb a vertex adjacent to the cycle; the graph is connected.
      int attach_pos = -1, outside = -1;
      for (int pos = 0; pos < static_cast<int>(cycle.size()) && outside < 0;
           ++pos) {
        for (int u : view.adj[cycle[pos]]) {
          if (!on_path[u]) {
            attach_pos = pos;
            outside = u;
            break;
          }
        }
      }
      if (outside < 0) {
        throw InternalError("rotation-extension: graph not connected");
      }
      std::vector<int> next{outside};
      for (int k = 0; k < static_cast<int>(cycle.size()); ++k) {
        next.push_back(cycle[(attach_pos + k) % cycle.size()]);
      }
      on_path[outside] = 1;
      path = std::move(next);
    }
  }
};

std::vector<int> dirac_cycle_local(const AdjView& view) {
  RotationBuilder builder(view);
  return builder.hamiltonian_cycle();
}

// --- Bondy-Chvatal closure and unwinding -----------------------------------

// Cycle in G+edges -> cycle in G, removing recorded closure edges in reverse
// order with the crossing swap. `mat` is mutated down to G.
std::vector<int> unwind_closure(std::vector<std::vector<char>>& mat,
                                std::vector<int> cycle,
                                std::vector<std::pair<int, int>> added) {
  int n = static_cast<int>(cycle.size());
  while (!added.empty()) {
    auto [a, b] = added.back();
    added.pop_back();
    mat[a][b] = mat[b][a] = 0;
    // Locate a-b on the cycle, if used.
    int pos = -1;
    for (int i = 0; i < n; ++i) {
      int u = cycle[i], v = cycle[(i + 1) % n];
      if ((u == a && v == b) || (u == b && v == a)) {
        pos = i;
        break;
      }
    }
    if (pos < 0) continue;
    // Rotate so the removed edge is the wrap-around pair: path p0..p_{n-1}
    // from one endpoint to the other.
    std::vector<int> path(n);
    for (int i = 0; i < n; ++i) path[i] = cycle[(pos + 1 + i) % n];
    int x = path[0], y = path[n - 1];
    bool swapped = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (mat[path[i]][y] && mat[path[i + 1]][x]) {
        std::vector<int> next(path.begin(), path.begin() + i + 1);
        for (int j = n - 1; j > i; --j) next.push_back(path[j]);
        cycle = std::move(next);
        swapped = true;
        break;
      }
    }
    if (!swapped) {
      throw InternalError("closure unwind: no crossing pair");
    }
  }
  return cycle;
}

}  // namespace

bool validate_cycle(const ColourSlice& g, const CycleCertificate& cert,
                    std::optional<int> required_length) {
  int len = cert.length();
  if (len < 3) return false;
  if (required_length && len != *required_length) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v : cert.vertices) {
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < len; ++i) {
    if (!g.has_edge(cert.vertices[i], cert.vertices[(i + 1) % len])) {
      return false;
    }
  }
  return true;
}

bool validate_path(const ColourSlice& g, const PathCertificate& cert,
                   std::optional<int> from, std::optional<int> to) {
  if (cert.vertices.empty()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v : cert.vertices) {
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  for (size_t i = 0; i + 1 < cert.vertices.size(); ++i) {
    if (!g.has_edge(cert.vertices[i], cert.vertices[i + 1])) return false;
  }
  if (from && cert.vertices.front() != *from) return false;
  if (to && cert.vertices.back() != *to) return false;
  return true;
}

std::optional<CycleCertificate> find_cycle_exact(const ColourSlice& g,
                                                 int length) {
  int n = g.vertex_count();
  if (n > kExactCycleCap) {
    throw SizeCapError("find_cycle_exact is exhaustive only up to " +
                       std::to_string(kExactCycleCap) + " vertices (got " +
                       std::to_string(n) + ")");
  }
  require(length >= 3 && length <= n,
          "cycle length must satisfy 3 <= length <= n");
  for (const Component& comp : components(g)) {
    if (static_cast<int>(comp.vertices.size()) < length) continue;
    if (comp.bipartite && length % 2 == 1) continue;
    AdjView view = make_view(g, comp.vertices);
    if (auto local = exact_cycle_in_component(view, length)) {
      return checked_cycle(g, to_global(view, *local), length,
                           "find_cycle_exact");
    }
  }
  return std::nullopt;
}

CycleCertificate dirac_hamiltonian(const ColourSlice& g) {
  int n = g.vertex_count();
  require(n >= 3, "Dirac: n >= 3 required");
  for (int v = 0; v < n; ++v) {
    require(2 * g.degree(v) >= n, "Dirac: minimum degree below n/2");
  }
  AdjView view = make_full_view(g);
  return checked_cycle(g, to_global(view, dirac_cycle_local(view)), n,
                       "dirac_hamiltonian");
}

CycleCertificate almost_complete_cycle(const ColourSlice& g, long long a,
                                       int m) {
  int n = g.vertex_count();
  require(a >= 0, "almost_complete_cycle: a >= 0 required");
  require(2 * a + 2 <= m && m <= n,
          "almost_complete_cycle: need 2a+2 <= m <= n");
  require(is_almost_complete(g, Rat(a)),
          "almost_complete_cycle: graph is not a-almost-complete");
  std::vector<int> chosen(m);
  std::iota(chosen.begin(), chosen.end(), 0);
  AdjView view = make_view(g, chosen);
  return checked_cycle(g, to_global(view, dirac_cycle_local(view)), m,
                       "almost_complete_cycle");
}

PathCertificate dirac_path_between(const ColourSlice& g, int u, int v) {
  int n = g.vertex_count();
  require(n >= 4, "dirac_path_between: n >= 4 required");
  check_vertex(g, u, "endpoint");
  check_vertex(g, v, "endpoint");
  require(u != v, "dirac_path_between: endpoints must differ");
  for (int w = 0; w < n; ++w) {
    require(2 * g.degree(w) >= n + 2,
            "dirac_path_between: minimum degree below n/2 + 1");
  }
  // Hamiltonian cycle of G - v, cut at u, then rotate the far end into
  // the neighbourhood of v.
  std::vector<int> rest;
  rest.reserve(n - 1);
  for (int w = 0; w < n; ++w) {
    if (w != v) rest.push_back(w);
  }
  AdjView view = make_view(g, rest);
  std::vector<int> cycle = dirac_cycle_local(view);
  int u_local = -1;
  for (int i = 0; i < view.n(); ++i) {
    if (view.ids[cycle[i]] == u) {
      u_local = i;
      break;
    }
  }
  std::vector<int> path(view.n());
  for (int i = 0; i < view.n(); ++i) {
    path[i] = cycle[(u_local + i) % cycle.size()];
  }
  auto adjacent_to_v = [&](int local) {
    return g.has_edge(view.ids[local], v);
  };
  std::vector<int> global;
  if (adjacent_to_v(path.back())) {
    global = to_global(view, path);
  } else {
    int len = static_cast<int>(path.size());
    int tail = path.back();
    int cut = -1;
    for (int i = 0; i + 1 < len; ++i) {
      if (view.edge(path[i], tail) && adjacent_to_v(path[i + 1])) {
        cut = i;
        break;
      }
    }
    if (cut < 0) {
      throw InternalError("dirac_path_between: no rotation reaches N(v)");
    }
    std::vector<int> rotated(path.begin(), path.begin() + cut + 1);
    for (int j = len - 1; j > cut; --j) rotated.push_back(path[j]);
    global = to_global(view, rotated);
  }
  global.push_back(v);
  return checked_path(g, std::move(global), u, v, "dirac_path_between");
}

CycleCertificate moon_moser_hamiltonian(const ColourSlice& g,
                                        std::span<const int> X,
                                        std::span<const int> Y) {
  check_parts_valid(g, X, Y);
  require(X.size() == Y.size(), "Moon-Moser: parts must be balanced");
  require(X.size() >= 2, "Moon-Moser: need |X| = |Y| >= 2");
  AdjView view = make_cross_view(g, X, Y);
  int nx = static_cast<int>(X.size());
  int n = view.n();
  for (int i = 0; i < nx; ++i) {
    for (int j = nx; j < n; ++j) {
      if (!view.edge(i, j)) {
        require(2 * (view.degree(i) + view.degree(j)) >= n + 2,
                "Moon-Moser: non-edge with degree sum below n/2 + 1");
      }
    }
  }
  // Every cross non-edge is addable outright, so the closure is the
  // complete bipartite graph; unwind the additions afterwards.
  std::vector<std::pair<int, int>> added;
  auto mat = view.mat;
  for (int i = 0; i < nx; ++i) {
    for (int j = nx; j < n; ++j) {
      if (!mat[i][j]) {
        mat[i][j] = mat[j][i] = 1;
        added.push_back({i, j});
      }
    }
  }
  std::vector<int> cycle;
  for (int i = 0; i < nx; ++i) {
    cycle.push_back(i);
    cycle.push_back(nx + i);
  }
  cycle = unwind_closure(mat, std::move(cycle), std::move(added));
  return checked_cycle(g, to_global(view, cycle), n,
                       "moon_moser_hamiltonian");
}

CycleCertificate balanced_bipartite_cycle(const ColourSlice& g,
                                          std::span<const int> X,
                                          std::span<const int> Y, long long a,
                                          int m) {
  check_parts_valid(g, X, Y);
  require(a >= 0, "balanced_bipartite_cycle: a >= 0 required");
  require(m % 2 == 0, "balanced_bipartite_cycle: m must be even");
  long long cap = 2 * std::min(X.size(), Y.size());
  require(4 * a + 2 <= m && m <= cap,
          "balanced_bipartite_cycle: need 4a+2 <= m <= 2 min(|X|,|Y|)");
  require(is_almost_complete_bipartite(g, X, Y, Rat(a)),
          "balanced_bipartite_cycle: graph is not a-almost-complete");
  std::vector<int> xs(X.begin(), X.begin() + m / 2);
  std::vector<int> ys(Y.begin(), Y.begin() + m / 2);
  return moon_moser_hamiltonian(g, xs, ys);
}

PathCertificate unbalanced_bipartite_spanning_path(const ColourSlice& g,
                                                   std::span<const int> X1,
                                                   std::span<const int> X2,
                                                   int x1, int x2) {
  check_parts_valid(g, X1, X2);
  int n = static_cast<int>(X1.size() + X2.size());
  require(n >= 4, "spanning path: n >= 4 required");
  require(X1.size() > X2.size() + 1, "spanning path: need |X1| > |X2| + 1");
  AdjView view = make_cross_view(g, X1, X2);
  int n1 = static_cast<int>(X1.size());
  auto local_of = [&](int global) {
    for (int i = 0; i < view.n(); ++i) {
      if (view.ids[i] == global) return i;
    }
    return -1;
  };
  int p1 = local_of(x1), p2 = local_of(x2);
  require(p1 >= 0 && p1 < n1 && p2 >= 0 && p2 < n1 && p1 != p2,
          "spanning path: x1, x2 must be distinct vertices of X1");
  for (int j = n1; j < view.n(); ++j) {
    require(2 * view.degree(j) >= n + 2,
            "spanning path: X2 degree below n/2 + 1");
  }
  if (X2.size() == 1) {
    // Degenerate case: the single X2 vertex must see both endpoints.
    require(view.edge(p1, n1) && view.edge(p2, n1),
            "spanning path: X2 vertex misses an endpoint");
    return checked_path(g, {x1, view.ids[n1], x2}, x1, x2,
                        "unbalanced_bipartite_spanning_path");
  }
  require(view.degree(p2) >= 2, "spanning path: d(x2) >= 2 required");
  require(view.degree(p1) >= 1, "spanning path: d(x1) >= 1 required");
  int w_first = -1;
  for (int j = n1; j < view.n(); ++j) {
    if (view.edge(p1, j)) {
      w_first = j;
      break;
    }
  }
  int w_last = -1;
  for (int j = n1; j < view.n(); ++j) {
    if (j != w_first && view.edge(p2, j)) {
      w_last = j;
      break;
    }
  }
  if (w_first < 0 || w_last < 0) {
    throw InternalError("spanning path: endpoint attachment missing");
  }
  std::vector<int> order{w_first};
  for (int j = n1; j < view.n(); ++j) {
    if (j != w_first && j != w_last) order.push_back(j);
  }
  order.push_back(w_last);
  std::vector<char> used(view.n(), 0);
  used[p1] = used[p2] = 1;
  std::vector<int> path{p1, w_first};
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    int link = -1;
    for (int c = 0; c < n1; ++c) {
      if (!used[c] && view.edge(order[i], c) && view.edge(order[i + 1], c)) {
        link = c;
        break;
      }
    }
    if (link < 0) {
      throw InternalError("spanning path: common neighbour missing");
    }
    used[link] = 1;
    path.push_back(link);
    path.push_back(order[i + 1]);
  }
  path.push_back(p2);
  return checked_path(g, to_global(view, path), x1, x2,
                      "unbalanced_bipartite_spanning_path");
}

CycleCertificate chvatal_hamiltonian(const ColourSlice& g) {
  int n = g.vertex_count();
  require(n >= 3, "Chvatal: n >= 3 required");
  std::vector<int> degs(n);
  for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
  std::vector<int> sorted = degs;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 1; 2 * k <= n; ++k) {
    if (sorted[k - 1] <= k) {
      require(sorted[n - k - 1] >= n - k,
              "Chvatal: degree condition fails at k=" + std::to_string(k));
    }
  }
  AdjView view = make_full_view(g);
  auto mat = view.mat;
  std::vector<int> deg = degs;
  std::vector<std::pair<int, int>> added;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!mat[u][v] && deg[u] + deg[v] >= n) {
          mat[u][v] = mat[v][u] = 1;
          ++deg[u];
          ++deg[v];
          added.push_back({u, v});
          changed = true;
        }
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!mat[u][v]) {
        throw InternalError("Chvatal: closure is not complete");
      }
    }
  }
  std::vector<int> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  cycle = unwind_closure(mat, std::move(cycle), std::move(added));
  return checked_cycle(g, to_global(view, cycle), n, "chvatal_hamiltonian");
}

namespace {

// Long-cycle DFS with early exit: returns the first cycle of length >= want
// found. Neighbour order prefers high remaining degree, which reaches long
// cycles quickly in the dense graphs the Erdos-Gallai bound produces.
struct LongCycleDfs {
  const AdjView& view;
  int want;
  std::vector<int> path;
  std::vector<int> pos_on_path;
  std::vector<char> visited;
  std::vector<int> result;

  LongCycleDfs(const AdjView& v, int w)
      : view(v), want(w), pos_on_path(v.n(), -1), visited(v.n(), 0) {}

  bool dfs(int v) {
    for (int u : view.adj[v]) {
      if (visited[u]) {
        int at = pos_on_path[u];
        if (at >= 0 && static_cast<int>(path.size()) - at >= want) {
          result.assign(path.begin() + at, path.end());
          return true;
        }
      }
    }
    std::vector<int> cands;
    for (int u : view.adj[v]) {
      if (!visited[u]) cands.push_back(u);
    }
    std::sort(cands.begin(), cands.end(), [&](int a, int b) {
      if (view.degree(a) != view.degree(b)) {
        return view.degree(a) > view.degree(b);
      }
      return a < b;
    });
    for (int u : cands) {
      visited[u] = 1;
      pos_on_path[u] = static_cast<int>(path.size());
      path.push_back(u);
      if (dfs(u)) return true;
      path.pop_back();
      pos_on_path[u] = -1;
      visited[u] = 0;
    }
    return false;
  }

  std::optional<std::vector<int>> run() {
    for (int s = 0; s < view.n(); ++s) {
      std::fill(visited.begin(), visited.end(), 0);
      std::fill(pos_on_path.begin(), pos_on_path.end(), -1);
      path.assign(1, s);
      visited[s] = 1;
      pos_on_path[s] = 0;
      if (dfs(s)) return result;
    }
    return std::nullopt;
  }
};

}  // namespace

CycleCertificate erdos_gallai_long_cycle(const ColourSlice& g, int m) {
  int n = g.vertex_count();
  require(m >= 3 && m <= n, "Erdos-Gallai: need 3 <= m <= n");
  long long edges = g.edge_count();
  require(2 * edges >= static_cast<long long>(m - 1) * (n - 1) + 2,
          "Erdos-Gallai: edge count below (m-1)(n-1)/2 + 1");
  // Peel vertices of degree <= (m-1)/2; the edge bound survives each
  // deletion, so the remainder has minimum degree >= m/2 and still contains
  // the promised cycle.
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  bool peeled = true;
  while (peeled) {
    peeled = false;
    for (int v = 0; v < n; ++v) {
      if (alive[v] && 2 * deg[v] <= m - 1) {
        alive[v] = 0;
        for (int u : g.neighbours(v)) {
          if (alive[u]) --deg[u];
        }
        peeled = true;
      }
    }
  }
  std::vector<int> core;
  for (int v = 0; v < n; ++v) {
    if (alive[v]) core.push_back(v);
  }
  if (static_cast<int>(core.size()) < m) {
    throw InternalError("Erdos-Gallai: core shrank below m");
  }
  AdjView view = make_view(g, core);
  LongCycleDfs search(view, m);
  auto local = search.run();
  if (!local) {
    throw InternalError("Erdos-Gallai: no cycle of length >= m found");
  }
  CycleCertificate cert{to_global(view, *local)};
  if (!validate_cycle(g, cert) || cert.length() < m) {
    throw InternalError("erdos_gallai_long_cycle: certificate invalid");
  }
  return cert;
}

}  // namespace ramsey
