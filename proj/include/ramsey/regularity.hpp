#ifndef RAMSEY_REGULARITY_HPP
#define RAMSEY_REGULARITY_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/cycles.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/matchings.hpp"

namespace ramsey {

// A regularity-style partition: an exceptional class V0 plus equal-size
// classes V1..VK. Discovery is out of scope; partitions are inputs.
struct ClusterPartition {
  std::vector<int> v0;
  std::vector<std::vector<int>> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
  int class_size() const {
    return classes.empty() ? 0 : static_cast<int>(classes[0].size());
  }

  // Disjointness, equal sizes, full cover of 0..n-1.
  void validate(int n_vertices) const;

  // Text format: line 1 = K; line 2 = the V0 ids (possibly empty); lines
  // 3..K+2 = the classes.
  static ClusterPartition parse(std::string_view text);
  std::string format() const;
};

struct RegularityCheck {
  bool regular = false;
  bool tentative = false;  // heuristic mode cannot certify regularity
  Rat base_density;
  Rat worst_deviation;
  std::vector<int> worst_A, worst_B;  // the maximizing subset pair
};

// Exhaustively tests |d(A',B') - d(A,B)| < eps over all A' of size
// >= eps|A| and B' of size >= eps|B|; returns the deviation-maximizing
// pair (lexicographically least among ties). Exhaustive mode caps |A|,|B|
// at 12; heuristic mode samples subsets and is one-sided: an "irregular"
// verdict carries a witness, a "regular" verdict is tentative.
RegularityCheck check_regular_pair(const ColourSlice& g,
                                   std::span<const int> A,
                                   std::span<const int> B, const Rat& eps,
                                   bool heuristic = false,
                                   uint64_t seed = 1);

// The multicoloured reduced graph of a partition: vertices are classes,
// an edge joins a pair that is simultaneously eps-regular in all three
// colour slices, coloured with every colour of density >= xi there.
// `graph` keeps only regular pairs that meet xi in at least one colour
// (edge colour sets must be non-empty); `regular_pairs` records
// regularity in full.
struct ReducedGraph {
  ClusterPartition partition;
  Rat eps, xi;
  MultiColouredGraph graph;
  std::array<std::vector<std::vector<Rat>>, 3> densities;  // by colour index
  std::vector<std::vector<char>> regular_pairs;
  bool tentative = false;  // any pair decided heuristically

  ReducedGraph() : graph(0, std::span<const MultiColouredGraph::Edge>{}) {}
};

ReducedGraph build_reduced_graph(const MultiColouredGraph& g,
                                 const ClusterPartition& partition,
                                 const Rat& eps, const Rat& xi,
                                 bool heuristic = false);

// Path of length exactly 2*ell + 1 between v_prime (in V1) and v_dprime
// (in V2) inside a dense eps-regular pair, with k = min(|V1|, |V2|):
// requires eps < 1/600, k >= 1/eps, e >= sqrt(eps)|V1||V2|,
// 1 <= ell <= k - 2 sqrt(eps) k and endpoint degrees >= (2/3) sqrt(eps) k.
PathCertificate regular_pair_path(const ColourSlice& g,
                                  std::span<const int> V1,
                                  std::span<const int> V2, const Rat& eps,
                                  long long ell, int v_prime, int v_dprime);

// Blows a monochromatic connected matching of the reduced graph up into a
// cycle of exactly target_len in the base colour slice: connector walks in
// the reduced component join consecutive matching edges (parity-adjustable
// when the component is odd), and long paths inside each matched pair pad
// the length. Per matched pair the padding budget is
// 2*(m - ceil(2 sqrt(eps) m)) + 2 vertices where m is the free cluster
// size; connector slack comes off the visited clusters.
CycleCertificate blow_up_cycle(const MultiColouredGraph& base,
                               const ReducedGraph& reduced,
                               const ConnectedMatching& matching,
                               long long target_len, bool odd_target);

}  // namespace ramsey

#endif
