#include "ramsey/decompose.hpp"

#include <algorithm>
#include <queue>

#include "ramsey/matchings.hpp"

namespace ramsey {

namespace {

long long edges_within(const ColourSlice& g, const std::vector<char>& member) {
  long long twice = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!member[v]) continue;
    for (int u : g.neighbours(v)) {
      if (member[u]) ++twice;
    }
  }
  return twice / 2;
}

}  // namespace

const char* decomp_violation_name(DecompViolation v) {
  switch (v) {
    case DecompViolation::not_partition:
      return "not_partition";
    case DecompViolation::prime_not_bipartite:
      return "prime_not_bipartite";
    case DecompViolation::dprime_even_component:
      return "dprime_even_component";
    case DecompViolation::edge_bound:
      return "edge_bound";
    case DecompViolation::cross_edges:
      return "cross_edges";
  }
  return "?";
}

Decomposition decompose(const ColourSlice& g, int m) {
  int n = g.vertex_count();
  if (m < 3 || m > n) {
    throw PreconditionError("decompose: need 3 <= m <= n");
  }
  Decomposition d;
  d.m = m;
  for (const Component& comp : components(g)) {
    if (comp.bipartite) {
      d.v_prime.insert(d.v_prime.end(), comp.vertices.begin(),
                       comp.vertices.end());
      continue;
    }
    // Precondition: no odd component carries a matching on >= m vertices.
    MultiColouredGraph sub = g.base().induced(comp.vertices);
    auto matching = max_connected_matching(sub.slice(g.colour()), false);
    if (matching && matching->matched_vertices() >= m) {
      throw PreconditionError(
          "decompose: an odd component contains a matching on >= m vertices");
    }
    d.v_dprime.insert(d.v_dprime.end(), comp.vertices.begin(),
                      comp.vertices.end());
  }
  std::sort(d.v_prime.begin(), d.v_prime.end());
  std::sort(d.v_dprime.begin(), d.v_dprime.end());
  std::vector<char> member(n, 0);
  for (int v : d.v_dprime) member[v] = 1;
  long long e = edges_within(g, member);
  // (iii): e(G[V'']) <= m |V''| / 2.
  if (2 * e > static_cast<long long>(m) *
                  static_cast<long long>(d.v_dprime.size())) {
    throw InternalError(
        "decompose: edge bound (iii) violated: e(G[V'']) = " +
        std::to_string(e) + " > m|V''|/2 with m = " + std::to_string(m) +
        ", |V''| = " + std::to_string(d.v_dprime.size()));
  }
  return d;
}

DecompositionReport verify_decomposition(const ColourSlice& g,
                                         const Decomposition& d) {
  DecompositionReport report;
  int n = g.vertex_count();
  std::vector<int> owner(n, 0);  // 0 unseen, 1 V', 2 V''
  bool partition_ok = true;
  for (int v : d.v_prime) {
    if (v < 0 || v >= n || owner[v] != 0) {
      partition_ok = false;
      break;
    }
    owner[v] = 1;
  }
  if (partition_ok) {
    for (int v : d.v_dprime) {
      if (v < 0 || v >= n || owner[v] != 0) {
        partition_ok = false;
        break;
      }
      owner[v] = 2;
    }
  }
  if (partition_ok) {
    for (int v = 0; v < n; ++v) {
      if (owner[v] == 0) {
        partition_ok = false;
        break;
      }
    }
  }
  if (!partition_ok) {
    report.ok = false;
    report.violations.push_back(DecompViolation::not_partition);
    report.detail = "parts do not partition the vertex set";
    return report;
  }

  auto add = [&](DecompViolation v, const std::string& text) {
    report.ok = false;
    report.violations.push_back(v);
    if (!report.detail.empty()) report.detail += "; ";
    report.detail += text;
  };

  // (iv) no edges between V' and V''.
  bool cross = false;
  for (int v = 0; v < n && !cross; ++v) {
    if (owner[v] != 1) continue;
    for (int u : g.neighbours(v)) {
      if (owner[u] == 2) {
        cross = true;
        break;
      }
    }
  }
  if (cross) add(DecompViolation::cross_edges, "(iv) V'-V'' edge present");

  // (i) G[V'] bipartite: 2-colour within V'.
  {
    std::vector<int> colour(n, -1);
    bool bip = true;
    for (int s = 0; s < n && bip; ++s) {
      if (owner[s] != 1 || colour[s] != -1) continue;
      colour[s] = 0;
      std::queue<int> queue;
      queue.push(s);
      while (!queue.empty() && bip) {
        int v = queue.front();
        queue.pop();
        for (int u : g.neighbours(v)) {
          if (owner[u] != 1) continue;
          if (colour[u] == -1) {
            colour[u] = colour[v] ^ 1;
            queue.push(u);
          } else if (colour[u] == colour[v]) {
            bip = false;
            break;
          }
        }
      }
    }
    if (!bip) add(DecompViolation::prime_not_bipartite, "(i) G[V'] has an odd cycle");
  }

  // (ii) every component of G[V''] odd.
  if (!d.v_dprime.empty()) {
    MultiColouredGraph sub = g.base().induced(d.v_dprime);
    for (const Component& comp : components(sub.slice(g.colour()))) {
      if (comp.bipartite) {
        add(DecompViolation::dprime_even_component,
            "(ii) bipartite component inside V''");
        break;
      }
    }
  }

  // (iii) edge bound.
  std::vector<char> member(n, 0);
  for (int v : d.v_dprime) member[v] = 1;
  long long e = edges_within(g, member);
  if (2 * e > static_cast<long long>(d.m) *
                  static_cast<long long>(d.v_dprime.size())) {
    add(DecompViolation::edge_bound,
        "(iii) e(G[V'']) = " + std::to_string(e) + " exceeds m|V''|/2");
  }
  return report;
}

}  // namespace ramsey
