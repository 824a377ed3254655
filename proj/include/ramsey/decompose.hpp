#ifndef RAMSEY_DECOMPOSE_HPP
#define RAMSEY_DECOMPOSE_HPP

#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Figaj-Luczak decomposition of a graph with no large odd connected
// matching: V' spans the bipartite components, V'' the odd ones, with
// (i) G[V'] bipartite, (ii) every component of G[V''] odd,
// (iii) e(G[V'']) <= m |V''| / 2, (iv) no V'-V'' edges.
struct Decomposition {
  std::vector<int> v_prime;
  std::vector<int> v_dprime;
  int m = 0;
};

enum class DecompViolation {
  not_partition,        // parts do not partition the vertex set
  prime_not_bipartite,  // (i)
  dprime_even_component,  // (ii)
  edge_bound,           // (iii)
  cross_edges,          // (iv)
};

const char* decomp_violation_name(DecompViolation v);

struct DecompositionReport {
  bool ok = true;
  std::vector<DecompViolation> violations;
  std::string detail;
};

// Splits whole components: bipartite ones into V', odd ones into V''.
// Preconditions: 3 <= m <= n and no odd component contains a matching on
// >= m vertices. Property (iii) is re-verified on the result; a failure is
// reported as a loud diagnostic rather than a silently wrong partition.
Decomposition decompose(const ColourSlice& g, int m);

// Checks all four properties, independently of how d was produced.
DecompositionReport verify_decomposition(const ColourSlice& g,
                                         const Decomposition& d);

}  // namespace ramsey

#endif
