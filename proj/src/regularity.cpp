#include "ramsey/regularity.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

namespace ramsey {

namespace {

constexpr int kRegularityCap = 12;

void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

// Smallest non-negative integer t with t*t >= x.
long long ceil_sqrt_rat(const Rat& x) {
  if (x <= 0) return 0;
  double approx = std::sqrt(static_cast<double>(x.numerator()) /
                            static_cast<double>(x.denominator()));
  long long t = std::max<long long>(0, static_cast<long long>(approx) - 2);
  while (Rat(t) * Rat(t) < x) ++t;
  return t;
}

struct Frac {
  long long num = 0;  // non-negative
  long long den = 1;
};

bool frac_less(const Frac& a, const Frac& b) {
  return a.num * b.den < b.num * a.den;
}

std::vector<int> mask_to_vertices(uint32_t mask, std::span<const int> pool) {
  std::vector<int> out;
  while (mask) {
    int i = std::countr_zero(mask);
    mask &= mask - 1;
    out.push_back(pool[i]);
  }
  return out;
}

}  // namespace

void ClusterPartition::validate(int n_vertices) const {
  std::vector<char> seen(n_vertices, 0);
  auto visit = [&](int v, const char* where) {
    if (v < 0 || v >= n_vertices) {
      throw PreconditionError(std::string("partition: vertex out of range in ") +
                              where + ": " + std::to_string(v));
    }
    if (seen[v]) {
      throw PreconditionError("partition: vertex repeated: " +
                              std::to_string(v));
    }
    seen[v] = 1;
  };
  for (int v : v0) visit(v, "V0");
  size_t size = classes.empty() ? 0 : classes[0].size();
  for (const auto& cls : classes) {
    if (cls.empty() || cls.size() != size) {
      throw PreconditionError("partition: classes must be equal-size and "
                              "non-empty");
    }
    for (int v : cls) visit(v, "class");
  }
  for (int v = 0; v < n_vertices; ++v) {
    if (!seen[v]) {
      throw PreconditionError("partition: vertex not covered: " +
                              std::to_string(v));
    }
  }
}

ClusterPartition ClusterPartition::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(ParseError::Kind::bad_header, "partition: empty input");
  }
  int k = 0;
  try {
    size_t pos = 0;
    k = std::stoi(line, &pos);
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos != line.size() || k < 0) throw std::invalid_argument(line);
  } catch (const std::exception&) {
    throw ParseError(ParseError::Kind::bad_header,
                     "partition: expected class count, got '" + line + "'");
  }
  ClusterPartition partition;
  auto parse_ids = [](const std::string& s, const char* where) {
    std::istringstream fields(s);
    std::vector<int> ids;
    std::string tok;
    while (fields >> tok) {
      try {
        size_t pos = 0;
        ids.push_back(std::stoi(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(ParseError::Kind::bad_line,
                         std::string("partition: bad vertex id in ") + where +
                             ": '" + tok + "'");
      }
    }
    return ids;
  };
  if (!std::getline(in, line)) {
    throw ParseError(ParseError::Kind::bad_line,
                     "partition: missing V0 line");
  }
  partition.v0 = parse_ids(line, "V0");
  for (int i = 0; i < k; ++i) {
    if (!std::getline(in, line)) {
      throw ParseError(ParseError::Kind::bad_line,
                       "partition: missing class line " + std::to_string(i + 1));
    }
    partition.classes.push_back(parse_ids(line, "class"));
    if (partition.classes.back().empty()) {
      throw ParseError(ParseError::Kind::bad_line,
                       "partition: class " + std::to_string(i + 1) + " empty");
    }
  }
  return partition;
}

std::string ClusterPartition::format() const {
  std::string out = std::to_string(classes.size()) + "\n";
  for (size_t i = 0; i < v0.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v0[i]);
  }
  out += '\n';
  for (const auto& cls : classes) {
    for (size_t i = 0; i < cls.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cls[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

struct PairCounts {
  std::vector<uint32_t> nbr;  // for each a in A, mask of neighbours in B
  long long total = 0;
};

PairCounts cross_counts(const ColourSlice& g, std::span<const int> A,
                        std::span<const int> B) {
  PairCounts pc;
  pc.nbr.assign(A.size(), 0);
  for (size_t i = 0; i < A.size(); ++i) {
    for (size_t j = 0; j < B.size(); ++j) {
      if (g.has_edge(A[i], B[j])) {
        pc.nbr[i] |= uint32_t{1} << j;
        ++pc.total;
      }
    }
  }
  return pc;
}

void check_disjoint_parts(const ColourSlice& g, std::span<const int> A,
                          std::span<const int> B) {
  if (A.empty() || B.empty()) {
    throw PreconditionError("regular pair: parts must be non-empty");
  }
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::span<const int> part : {A, B}) {
    for (int v : part) {
      if (v < 0 || v >= g.vertex_count()) {
        throw PreconditionError("regular pair: vertex out of range");
      }
      if (seen[v]) {
        throw PreconditionError("regular pair: parts overlap");
      }
      seen[v] = 1;
    }
  }
}

}  // namespace

RegularityCheck check_regular_pair(const ColourSlice& g,
                                   std::span<const int> A,
                                   std::span<const int> B, const Rat& eps,
                                   bool heuristic, uint64_t seed) {
  check_disjoint_parts(g, A, B);
  require(eps > 0 && eps < 1, "regular pair: need 0 < eps < 1");
  int na = static_cast<int>(A.size());
  int nb = static_cast<int>(B.size());
  PairCounts pc = cross_counts(g, A, B);
  long long base_den = static_cast<long long>(na) * nb;
  RegularityCheck out;
  out.base_density = Rat(pc.total, base_den);

  // |A'| >= eps |A|  <=>  |A'| * eps.den >= eps.num * |A|
  auto size_ok = [&](int size, int whole) {
    return Rat(size) >= eps * Rat(whole);
  };
  int min_a = 1, min_b = 1;
  while (!size_ok(min_a, na)) ++min_a;
  while (!size_ok(min_b, nb)) ++min_b;

  // Deviation of (A', B') as |e * na*nb - total * a*b| / (a*b*na*nb),
  // kept in raw 64-bit fractions to stay cheap in the 16M-pair sweep.
  auto deviation = [&](long long e, int a, int b) {
    long long num = e * base_den - pc.total * a * b;
    if (num < 0) num = -num;
    return Frac{num, static_cast<long long>(a) * b * base_den};
  };

  if (!heuristic) {
    if (na > kRegularityCap || nb > kRegularityCap) {
      throw SizeCapError(
          "check_regular_pair: exhaustive mode caps |A|,|B| at " +
          std::to_string(kRegularityCap) + "; request heuristic mode");
    }
    Frac best{0, 1};
    uint32_t best_amask = 0, best_bmask = 0;
    std::vector<long long> esum(size_t{1} << nb);
    bool first = true;
    // Pass order (A' outer) makes the first strict maximum the
    // lexicographically least (A', B') witness.
    for (uint32_t amask = 1; amask < (uint32_t{1} << na); ++amask) {
      int asize = std::popcount(amask);
      if (asize < min_a) continue;
      // Per-B-column counts for this A', then subset sums over B masks.
      std::vector<int> bcount(nb, 0);
      for (uint32_t rest = amask; rest;) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        uint32_t row = pc.nbr[i];
        while (row) {
          int j = std::countr_zero(row);
          row &= row - 1;
          ++bcount[j];
        }
      }
      std::vector<long long>& sums = esum;
      sums[0] = 0;
      for (uint32_t bmask = 1; bmask < (uint32_t{1} << nb); ++bmask) {
        int j = std::countr_zero(bmask);
        sums[bmask] = sums[bmask & (bmask - 1)] + bcount[j];
        int bsize = std::popcount(bmask);
        if (bsize < min_b) continue;
        Frac dev = deviation(sums[bmask], asize, bsize);
        if (first || frac_less(best, dev)) {
          best = dev;
          best_amask = amask;
          best_bmask = bmask;
          first = false;
        }
      }
    }
    out.worst_deviation = Rat(best.num, best.den);
    out.worst_A = mask_to_vertices(best_amask, A);
    out.worst_B = mask_to_vertices(best_bmask, B);
    out.regular = out.worst_deviation < eps;
    out.tentative = false;
    return out;
  }

  // Heuristic mode: seeded subset sampling. Sound for "irregular" (the
  // witness deviation is exact), tentative for "regular".
  std::mt19937_64 rng(seed);
  Frac best{0, 1};
  std::vector<int> best_a, best_b;
  bool first = true;
  const int samples = 20000;
  for (int t = 0; t < samples; ++t) {
    int asize = min_a + static_cast<int>(rng() % (na - min_a + 1));
    int bsize = min_b + static_cast<int>(rng() % (nb - min_b + 1));
    std::vector<int> aidx(na), bidx(nb);
    std::iota(aidx.begin(), aidx.end(), 0);
    std::iota(bidx.begin(), bidx.end(), 0);
    std::shuffle(aidx.begin(), aidx.end(), rng);
    std::shuffle(bidx.begin(), bidx.end(), rng);
    aidx.resize(asize);
    bidx.resize(bsize);
    long long e = 0;
    for (int i : aidx) {
      for (int j : bidx) {
        if (pc.nbr[i] & (uint32_t{1} << j)) ++e;
      }
    }
    Frac dev = deviation(e, asize, bsize);
    if (first || frac_less(best, dev)) {
      best = dev;
      best_a.clear();
      best_b.clear();
      for (int i : aidx) best_a.push_back(A[i]);
      for (int j : bidx) best_b.push_back(B[j]);
      std::sort(best_a.begin(), best_a.end());
      std::sort(best_b.begin(), best_b.end());
      first = false;
    }
  }
  out.worst_deviation = Rat(best.num, best.den);
  out.worst_A = std::move(best_a);
  out.worst_B = std::move(best_b);
  out.regular = out.worst_deviation < eps;
  out.tentative = out.regular;  // an irregularity witness is conclusive
  return out;
}

ReducedGraph build_reduced_graph(const MultiColouredGraph& g,
                                 const ClusterPartition& partition,
                                 const Rat& eps, const Rat& xi,
                                 bool heuristic) {
  partition.validate(g.vertex_count());
  require(eps > 0 && eps < 1, "reduced graph: need 0 < eps < 1");
  require(xi > 0 && xi <= 1, "reduced graph: need 0 < xi <= 1");
  long long n = g.vertex_count();
  require(Rat(static_cast<long long>(partition.v0.size())) <= eps * Rat(n),
          "reduced graph: |V0| exceeds eps |V|");
  int K = partition.class_count();
  require(K >= 1, "reduced graph: need at least one class");

  ReducedGraph out;
  out.partition = partition;
  out.eps = eps;
  out.xi = xi;
  for (auto& d : out.densities) {
    d.assign(K, std::vector<Rat>(K, Rat(0)));
  }
  out.regular_pairs.assign(K, std::vector<char>(K, 0));
  std::vector<MultiColouredGraph::Edge> edges;
  for (int i = 0; i < K; ++i) {
    for (int j = i + 1; j < K; ++j) {
      bool all_regular = true;
      ColourSet set;
      for (Colour c : kColours) {
        ColourSlice slice = g.slice(c);
        RegularityCheck check =
            check_regular_pair(slice, partition.classes[i],
                               partition.classes[j], eps, heuristic);
        out.tentative = out.tentative || check.tentative;
        out.densities[colour_index(c)][i][j] = check.base_density;
        out.densities[colour_index(c)][j][i] = check.base_density;
        if (!check.regular) all_regular = false;
        if (check.base_density >= xi) set.add(c);
      }
      if (all_regular) {
        out.regular_pairs[i][j] = out.regular_pairs[j][i] = 1;
        if (!set.empty()) edges.push_back({i, j, set});
      }
    }
  }
  out.graph = MultiColouredGraph(K, edges);
  return out;
}

namespace {

// Exact-length alternating path search inside one (dense) pair. Positions
// 0, 2, 4, ... lie in side1, odd positions in side2; target length is in
// edges and must be odd. `fixed_end`, when set, pins the final vertex.
struct PairPathDfs {
  const ColourSlice& g;
  long long budget = 10'000'000;
  std::vector<int> side1, side2;  // available vertices (global ids)
  std::vector<char>& used;        // indexed by global id
  long long edge_len;
  std::optional<int> fixed_end;

  PairPathDfs(const ColourSlice& slice, std::vector<int> s1,
              std::vector<int> s2, std::vector<char>& used_flags,
              long long len, std::optional<int> end)
      : g(slice),
        side1(std::move(s1)),
        side2(std::move(s2)),
        used(used_flags),
        edge_len(len),
        fixed_end(end) {}

  bool dfs(int current, long long depth, std::vector<int>& path) {
    if (depth == edge_len) return true;
    if (--budget <= 0) {
      throw BudgetError("pair path: search budget exceeded");
    }
    bool to_side2 = (depth % 2 == 0);
    const std::vector<int>& pool = to_side2 ? side2 : side1;
    // The final position sits in side2; when pinned, the step onto it is
    // forced and the step before it must see the pinned vertex.
    if (fixed_end && depth == edge_len - 1) {
      int end = *fixed_end;
      if (used[end] || !g.has_edge(current, end)) return false;
      used[end] = 1;
      path.push_back(end);
      if (dfs(end, depth + 1, path)) return true;
      path.pop_back();
      used[end] = 0;
      return false;
    }
    for (int v : pool) {
      if (used[v] || !g.has_edge(current, v)) continue;
      if (fixed_end && v == *fixed_end) continue;
      used[v] = 1;
      path.push_back(v);
      if (dfs(v, depth + 1, path)) return true;
      path.pop_back();
      used[v] = 0;
    }
    return false;
  }
};

// Vertices ordered by degree within the pair (descending), so the greedy
// first choice is a typical vertex.
std::vector<int> by_pair_degree(const ColourSlice& g, std::span<const int> own,
                                std::span<const int> other) {
  std::vector<std::pair<int, int>> scored;
  scored.reserve(own.size());
  for (int v : own) {
    int d = 0;
    for (int w : other) {
      if (g.has_edge(v, w)) ++d;
    }
    scored.push_back({-d, v});
  }
  std::sort(scored.begin(), scored.end());
  std::vector<int> out;
  out.reserve(scored.size());
  for (auto& [negd, v] : scored) out.push_back(v);
  return out;
}

}  // namespace

PathCertificate regular_pair_path(const ColourSlice& g,
                                  std::span<const int> V1,
                                  std::span<const int> V2, const Rat& eps,
                                  long long ell, int v_prime, int v_dprime) {
  check_disjoint_parts(g, V1, V2);
  require(eps > 0 && eps < Rat(1, 600),
          "regular pair path: need 0 < eps < 1/600");
  long long k = static_cast<long long>(std::min(V1.size(), V2.size()));
  require(eps * Rat(k) >= 1, "regular pair path: need k >= 1/eps");
  bool in1 = std::find(V1.begin(), V1.end(), v_prime) != V1.end();
  bool in2 = std::find(V2.begin(), V2.end(), v_dprime) != V2.end();
  require(in1 && in2,
          "regular pair path: endpoints must lie in V1 and V2 respectively");
  long long v1 = static_cast<long long>(V1.size());
  long long v2 = static_cast<long long>(V2.size());
  long long cross = 0;
  std::vector<long long> deg(g.vertex_count(), 0);
  for (int a : V1) {
    for (int b : V2) {
      if (g.has_edge(a, b)) {
        ++cross;
        ++deg[a];
        ++deg[b];
      }
    }
  }
  require(ge_scaled_sqrt(Rat(cross), Rat(v1 * v2), eps),
          "regular pair path: edge count below sqrt(eps)|V1||V2|");
  require(ell >= 1, "regular pair path: ell >= 1 required");
  require(ell <= k && ge_scaled_sqrt(Rat(k - ell), Rat(2 * k), eps),
          "regular pair path: ell exceeds k - 2 sqrt(eps) k");
  for (int endpoint : {v_prime, v_dprime}) {
    require(ge_scaled_sqrt(Rat(deg[endpoint]), Rat(2 * k, 3), eps),
            "regular pair path: endpoint degree below (2/3) sqrt(eps) k");
  }
  std::vector<int> side1 = by_pair_degree(g, V1, V2);
  std::vector<int> side2 = by_pair_degree(g, V2, V1);
  std::vector<char> used(g.vertex_count(), 0);
  used[v_prime] = 1;
  std::vector<int> path{v_prime};
  PairPathDfs dfs(g, std::move(side1), std::move(side2), used, 2 * ell + 1,
                  v_dprime);
  if (!dfs.dfs(v_prime, 0, path)) {
    throw InternalError("regular pair path: construction failed despite "
                        "hypotheses");
  }
  PathCertificate cert{std::move(path)};
  if (!validate_path(g, cert, v_prime, v_dprime) ||
      cert.edge_length() != 2 * ell + 1) {
    throw InternalError("regular pair path: certificate invalid");
  }
  return cert;
}

// --- blow-up ----------------------------------------------------------------

namespace {

// Walks of a required parity in the reduced colour slice, via BFS on
// (cluster, parity) states. Cluster revisits are allowed: each visit
// consumes a fresh base vertex.
std::optional<std::vector<int>> parity_walk(const ColourSlice& reduced,
                                            int from, int to, int parity) {
  int n = reduced.vertex_count();
  std::vector<std::array<int, 2>> prev(n, {-2, -2});
  std::queue<std::pair<int, int>> queue;
  prev[from][0] = -1;
  queue.push({from, 0});
  while (!queue.empty()) {
    auto [v, p] = queue.front();
    queue.pop();
    for (int u : reduced.neighbours(v)) {
      int q = p ^ 1;
      if (prev[u][q] == -2) {
        prev[u][q] = v;
        queue.push({u, q});
      }
    }
  }
  if (prev[to][parity] == -2) return std::nullopt;
  std::vector<int> walk;
  int v = to, p = parity;
  while (v != -1) {
    walk.push_back(v);
    int pv = prev[v][p];
    if (pv == -1) break;
    v = pv;
    p ^= 1;
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

struct RouteSegment {
  bool pair = false;       // pair traversal vs connector step
  int pair_index = -1;     // which matching edge
  std::vector<int> walk;   // connector: cluster walk, first element implicit
};

}  // namespace

CycleCertificate blow_up_cycle(const MultiColouredGraph& base,
                               const ReducedGraph& reduced,
                               const ConnectedMatching& matching,
                               long long target_len, bool odd_target) {
  require(!matching.edges.empty(), "blow-up: matching must be non-empty");
  require(target_len >= 3, "blow-up: target length must be >= 3");
  require((target_len % 2 == 1) == odd_target,
          "blow-up: target length parity disagrees with requested parity");
  Colour colour = matching.colour;
  ColourSlice rslice = reduced.graph.slice(colour);
  int K = reduced.graph.vertex_count();

  // The matching must live inside one component of the reduced slice.
  for (auto [a, b] : matching.edges) {
    require(a >= 0 && b >= 0 && a < K && b < K && rslice.has_edge(a, b),
            "blow-up: matching edge missing from reduced colour slice");
  }
  std::vector<Component> comps = components(rslice);
  const Component* home = nullptr;
  for (const Component& comp : comps) {
    if (std::binary_search(comp.vertices.begin(), comp.vertices.end(),
                           matching.edges[0].first)) {
      home = &comp;
      break;
    }
  }
  if (!home) throw InternalError("blow-up: component lookup failed");
  for (auto [a, b] : matching.edges) {
    require(std::binary_search(home->vertices.begin(), home->vertices.end(),
                               a) &&
                std::binary_search(home->vertices.begin(),
                                   home->vertices.end(), b),
            "blow-up: matching spans several components");
  }
  if (odd_target) {
    require(home->odd(),
            "blow-up: odd target needs an odd (non-bipartite) component");
  }

  int s = static_cast<int>(matching.edges.size());
  require(s <= 16, "blow-up: more than 16 matching edges unsupported");

  // Pick orientations and connector parities so that the fixed part of the
  // length (s pair traversals plus connectors) matches the target parity
  // and the padding window covers the target.
  struct Plan {
    std::vector<int> entry, exit;
    std::vector<std::vector<int>> connectors;  // cluster walks, incl. ends
    std::vector<long long> caps;               // per-pair max ell
    long long fixed = 0;                       // s + connector edges
    long long max_total = 0;
  };
  std::optional<Plan> plan;
  for (uint32_t orient = 0; orient < (uint32_t{1} << s) && !plan; ++orient) {
    Plan trial;
    trial.entry.resize(s);
    trial.exit.resize(s);
    for (int t = 0; t < s; ++t) {
      int a = matching.edges[t].first, b = matching.edges[t].second;
      if (orient & (uint32_t{1} << t)) std::swap(a, b);
      trial.entry[t] = a;
      trial.exit[t] = b;
    }
    long long connector_edges = 0;
    bool ok = true;
    std::vector<std::vector<int>> walks(s);
    for (int t = 0; t < s && ok; ++t) {
      int from = trial.exit[t];
      int to = trial.entry[(t + 1) % s];
      auto even_walk = parity_walk(rslice, from, to, 0);
      auto odd_walk = parity_walk(rslice, from, to, 1);
      // Prefer the shorter one; the parity fix below may swap the last.
      std::optional<std::vector<int>> pick;
      if (even_walk && odd_walk) {
        pick = (even_walk->size() <= odd_walk->size()) ? even_walk : odd_walk;
      } else {
        pick = even_walk ? even_walk : odd_walk;
      }
      if (!pick) {
        ok = false;
        continue;
      }
      walks[t] = *pick;
      connector_edges += static_cast<long long>(walks[t].size()) - 1;
    }
    if (!ok) continue;
    trial.fixed = s + connector_edges;
    if ((trial.fixed % 2) != (target_len % 2)) {
      // Swap one connector to the opposite parity, cheapest first.
      long long best_extra = -1;
      int best_t = -1;
      std::vector<int> best_walk;
      for (int t = 0; t < s; ++t) {
        int from = trial.exit[t];
        int to = trial.entry[(t + 1) % s];
        int have = static_cast<int>(walks[t].size()) - 1;
        auto other = parity_walk(rslice, from, to, (have & 1) ^ 1);
        if (!other) continue;
        long long extra = static_cast<long long>(other->size()) - 1 - have;
        if (best_t < 0 || extra < best_extra) {
          best_t = t;
          best_extra = extra;
          best_walk = *other;
        }
      }
      if (best_t < 0) continue;  // bipartite component; parity unfixable
      connector_edges += best_extra;
      walks[best_t] = std::move(best_walk);
      trial.fixed = s + connector_edges;
    }
    trial.connectors = std::move(walks);
    // Cluster visits by connectors (interior and endpoints beyond the
    // pair traversals) consume base vertices.
    std::vector<long long> visits(K, 0);
    for (int t = 0; t < s; ++t) {
      const auto& walk = trial.connectors[t];
      // walk[0] is the pair exit (already counted by the traversal); the
      // last element is the next pair's entry (counted there).
      for (size_t i = 1; i + 1 < walk.size(); ++i) ++visits[walk[i]];
    }
    long long cluster_size = reduced.partition.class_size();
    trial.caps.resize(s);
    bool feasible = true;
    for (int t = 0; t < s; ++t) {
      // Usable vertices per side after connector visits; ell is also capped
      // by the sqrt(eps) shrink of the longpath bound.
      long long m = cluster_size - std::max(visits[trial.entry[t]],
                                            visits[trial.exit[t]]);
      long long shrink = ceil_sqrt_rat(Rat(4) * reduced.eps * Rat(m) * Rat(m));
      long long cap = std::min(m - shrink, m - 1);
      if (cap < 1) {
        feasible = false;
        break;
      }
      trial.caps[t] = cap;
    }
    if (!feasible) continue;
    long long min_total = trial.fixed + 2 * s;  // every ell at least 1
    long long max_total = trial.fixed;
    for (int t = 0; t < s; ++t) max_total += 2 * trial.caps[t];
    trial.max_total = max_total;
    if (target_len < min_total || target_len > max_total) continue;
    plan = std::move(trial);
  }
  if (!plan) {
    throw BudgetError(
        "blow-up: no orientation reaches the target length at this parity "
        "within the padding budget");
  }

  // Distribute the padding.
  long long pad = (target_len - plan->fixed) / 2;  // sum of ells
  std::vector<long long> ells(s, 1);
  pad -= s;
  for (int t = 0; t < s && pad > 0; ++t) {
    long long take = std::min(pad, plan->caps[t] - 1);
    ells[t] += take;
    pad -= take;
  }
  if (pad != 0) {
    throw InternalError("blow-up: padding distribution failed");
  }

  // Materialize. Flatten the route into cluster slots and fill them with a
  // backtracking sweep; the wrap edge closes on the start vertex.
  ColourSlice bslice = base.slice(colour);
  std::vector<int> slot_cluster;
  for (int t = 0; t < s; ++t) {
    // Pair traversal: entry, then alternating 2 ell + 1 further vertices.
    if (t == 0) slot_cluster.push_back(plan->entry[0]);
    for (long long i = 0; i < 2 * ells[t] + 1; ++i) {
      slot_cluster.push_back((i % 2 == 0) ? plan->exit[t] : plan->entry[t]);
    }
    const auto& walk = plan->connectors[t];
    for (size_t i = 1; i < walk.size(); ++i) {
      if (t == s - 1 && i == walk.size() - 1) break;  // closes on the start
      slot_cluster.push_back(walk[i]);
    }
  }
  if (static_cast<long long>(slot_cluster.size()) != target_len) {
    throw InternalError("blow-up: slot count mismatch: " +
                        std::to_string(slot_cluster.size()) + " vs " +
                        std::to_string(target_len));
  }

  std::vector<char> used(base.vertex_count(), 0);
  std::vector<int> chosen;
  chosen.reserve(slot_cluster.size());
  long long nodes = 0;
  const long long node_budget = 4'000'000;
  auto cluster_pool = [&](int cluster) -> const std::vector<int>& {
    return reduced.partition.classes[cluster];
  };
  std::function<bool(size_t)> fill = [&](size_t slot) -> bool {
    if (slot == slot_cluster.size()) {
      return bslice.has_edge(chosen.back(), chosen.front());
    }
    if (++nodes > node_budget) {
      throw BudgetError("blow-up: materialization budget exceeded");
    }
    for (int v : cluster_pool(slot_cluster[slot])) {
      if (used[v]) continue;
      if (!chosen.empty() && !bslice.has_edge(chosen.back(), v)) continue;
      used[v] = 1;
      chosen.push_back(v);
      if (fill(slot + 1)) return true;
      chosen.pop_back();
      used[v] = 0;
    }
    return false;
  };
  if (!fill(0)) {
    throw BudgetError("blow-up: could not realize the route in the base "
                      "graph");
  }
  CycleCertificate cert{std::move(chosen)};
  if (!validate_cycle(bslice, cert, static_cast<int>(target_len))) {
    throw InternalError("blow-up: certificate invalid");
  }
  return cert;
}

}  // namespace ramsey
