#ifndef RAMSEY_MATCHINGS_HPP
#define RAMSEY_MATCHINGS_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// One connected component of a colour slice, tagged by BFS 2-colouring.
// A component is "odd" (non-bipartite) when it contains an odd cycle.
struct Component {
  std::vector<int> vertices;  // ascending
  bool bipartite = true;
  bool odd() const { return !bipartite; }
};

// Components in ascending order of their lowest vertex.
std::vector<Component> components(const ColourSlice& g);

// A matching whose edges all lie in one connected component of a colour
// slice; odd when that component contains an odd cycle. For the bipartite
// lemmas the component is taken within the bipartite view that was searched.
struct ConnectedMatching {
  Colour colour;
  std::vector<std::pair<int, int>> edges;  // pairwise disjoint
  std::vector<int> component;              // ascending
  bool odd = false;

  int matched_vertices() const { return 2 * static_cast<int>(edges.size()); }
};

// True iff edges are disjoint, lie in the slice, and all matched vertices
// belong to `component`.
bool validate_connected_matching(const ColourSlice& g,
                                 const ConnectedMatching& m);

// Maximum matching over all components (restricted to non-bipartite ones
// when require_odd), ties broken by lowest-indexed component. Returns
// nullopt only when require_odd is set and no component is odd. An empty
// matching in the first component is a valid result.
std::optional<ConnectedMatching> max_connected_matching(const ColourSlice& g,
                                                        bool require_odd);

// Connected matching on >= m vertices when the average degree is >= m
// (alternate edges of an Erdos-Gallai long cycle; the cycle length is
// bumped to m+1 for odd m so the alternating matching still reaches m).
ConnectedMatching avg_degree_connected_matching(const ColourSlice& g, int m);

// Connected matching on >= 2(1-3 eps)|V2| vertices (rounded up to the next
// even integer) in a bipartite graph with |V1| >= |V2| and at least
// (1-eps)|V1||V2| cross edges, 0 < eps < 0.01.
ConnectedMatching dense_bipartite_connected_matching(const ColourSlice& g,
                                                     std::span<const int> V1,
                                                     std::span<const int> V2,
                                                     const Rat& eps);

// Connected matching on >= 2|V2| - 2a vertices in an a-almost-complete
// bipartite graph with |V1| >= |V2| >= ell and a/ell < 1/2, built by the
// greedy augmentation from the proof.
ConnectedMatching almost_complete_bipartite_connected_matching(
    const ColourSlice& g, std::span<const int> V1, std::span<const int> V2,
    long long a, long long ell);

// Largest monochromatic component of a two-coloured (1-eta)-complete graph
// on K >= 1/eta vertices, 0 < eta < 1/3; guaranteed size >= (1-3 eta)K.
// Ties: red before blue, then lowest vertex id.
std::pair<Colour, std::vector<int>> largest_mono_component(
    const MultiColouredGraph& g, const Rat& eta);

// Outcome of the hole dichotomy: either a monochromatic component F with
// |F| >= (1-2 sqrt(eta))K, or vertices w_r, w_b in W having red (resp.
// blue) edges to all but at most 3 sqrt(eta) K vertices of V \ W.
struct HoleOutcome {
  std::optional<std::pair<Colour, std::vector<int>>> component;
  std::optional<std::pair<int, int>> witnesses;  // (w_r, w_b)
};

HoleOutcome hole_component_dichotomy(const MultiColouredGraph& g,
                                     std::span<const int> W, const Rat& eta);

}  // namespace ramsey

#endif
