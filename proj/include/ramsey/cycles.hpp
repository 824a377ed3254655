#ifndef RAMSEY_CYCLES_HPP
#define RAMSEY_CYCLES_HPP

#include <optional>
#include <span>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// An explicit cycle: distinct vertices in traversal order; consecutive pairs
// and the wrap-around pair are edges of the slice it certifies.
struct CycleCertificate {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

// An explicit endpoint-to-endpoint path: distinct vertices, consecutive
// pairs are edges.
struct PathCertificate {
  std::vector<int> vertices;
  int edge_length() const { return static_cast<int>(vertices.size()) - 1; }
};

bool validate_cycle(const ColourSlice& g, const CycleCertificate& cert,
                    std::optional<int> required_length = std::nullopt);
bool validate_path(const ColourSlice& g, const PathCertificate& cert,
                   std::optional<int> from = std::nullopt,
                   std::optional<int> to = std::nullopt);

// Exhaustive exact-length cycle search. Complete; capped at 32 vertices so
// that the completeness claim stays honest (the lower-bound constructions
// and the search engine never exceed it). Small components go through a
// subset DP, larger ones through a pruned DFS.
std::optional<CycleCertificate> find_cycle_exact(const ColourSlice& g,
                                                 int length);

// Hamiltonian cycle under the minimum-degree condition delta >= n/2,
// built by rotation-extension. Throws PreconditionError when the
// hypothesis fails; never guesses.
CycleCertificate dirac_hamiltonian(const ColourSlice& g);

// Cycle of exactly m vertices in an a-almost-complete graph,
// 2a+2 <= m <= n (restriction to m vertices plus dirac_hamiltonian;
// almost-completeness is hereditary).
CycleCertificate almost_complete_cycle(const ColourSlice& g, long long a,
                                       int m);

// Hamiltonian u-v path when n >= 4 and delta >= n/2 + 1.
PathCertificate dirac_path_between(const ColourSlice& g, int u, int v);

// Hamiltonian cycle of a balanced bipartite graph under the Moon-Moser
// condition: d(x)+d(y) >= n/2 + 1 for every cross non-edge. Only cross
// edges between the given parts are used.
CycleCertificate moon_moser_hamiltonian(const ColourSlice& g,
                                        std::span<const int> X,
                                        std::span<const int> Y);

// Cycle on m vertices (m even, 4a+2 <= m <= 2 min(|X|,|Y|)) in an
// a-almost-complete bipartite graph.
CycleCertificate balanced_bipartite_cycle(const ColourSlice& g,
                                          std::span<const int> X,
                                          std::span<const int> Y, long long a,
                                          int m);

// Path from x1 to x2 (both in the larger side X1) visiting every vertex of
// X2, for |X1| > |X2|+1 with every X2-degree >= n/2 + 1 and d(x2) >= 2.
// Built greedily through common neighbours. Requires d(x1) >= 1, which the
// statement tacitly assumes.
PathCertificate unbalanced_bipartite_spanning_path(const ColourSlice& g,
                                                   std::span<const int> X1,
                                                   std::span<const int> X2,
                                                   int x1, int x2);

// Hamiltonian cycle under Chvatal's degree-sequence condition
// (d_k <= k <= n/2 implies d_{n-k} >= n-k), via the Bondy-Chvatal closure:
// the condition forces the n-closure to be complete, and each closure edge
// unwinds with a crossing swap.
CycleCertificate chvatal_hamiltonian(const ColourSlice& g);

// Cycle of length >= m when e(g) >= (m-1)(n-1)/2 + 1 (Erdos-Gallai),
// found by long-cycle DFS after peeling low-degree vertices.
CycleCertificate erdos_gallai_long_cycle(const ColourSlice& g, int m);

}  // namespace ramsey

#endif
