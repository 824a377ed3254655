#ifndef RAMSEY_EXTREMAL_HPP
#define RAMSEY_EXTREMAL_HPP

#include <cstdint>
#include <utility>

#include "ramsey/graph.hpp"
#include "ramsey/stability.hpp"

namespace ramsey {

// Cycle lengths with the parities already resolved: the two even lengths
// and the odd one the colouring must avoid.
struct LowerBoundSpec {
  int n_red;    // even, >= 4
  int n_blue;   // even, >= 4
  int n_green;  // odd, >= 3

  void validate() const;
};

// How the edges inside V3 and V4 of construction 1 are coloured; the text
// allows any mix of red and blue, so the invariant suite runs all three.
enum class FillPolicy { all_red, all_blue, alternating };

const char* fill_policy_name(FillPolicy p);

// Construction 1: complete graph on 2 n_red + n_blue - 4 vertices in four
// classes |V1| = |V2| = n_red - 1, |V3| = |V4| = n_blue/2 - 1; V1, V2
// internally red, V1-V3 and V2-V4 blue, (V1 u V3)-(V2 u V4) green, V3 and
// V4 internally red or blue per policy. Avoids red C_{n_red}, blue
// C_{n_blue} and green C_{n_green} whenever n_red >= n_blue.
MultiColouredGraph build_construction_1(const LowerBoundSpec& spec,
                                        FillPolicy policy);

// Construction 2: complete graph on n_red/2 + n_blue/2 + n_green - 3
// vertices in three classes |V1| = n_red/2 - 1, |V2| = n_blue/2 - 1,
// |V3| = n_green - 1; V1 and V1-V3 red, V2 and V2-V3 blue, V1-V2 and V3
// green.
MultiColouredGraph build_construction_2(const LowerBoundSpec& spec);

// Class-instance generators used as test fixtures: the planted pattern is
// maximally dense; positive c budgets admit seeded random deletions and
// off-pattern recolourings that stay strictly inside the class. The
// returned witness always re-verifies.
std::pair<MultiColouredGraph, StructureWitness> gen_H(const HParams& params,
                                                      uint64_t seed);
std::pair<MultiColouredGraph, StructureWitness> gen_K(const KParams& params,
                                                      uint64_t seed);
std::pair<MultiColouredGraph, StructureWitness> gen_Kstar(
    const KstarParams& params, uint64_t seed);

}  // namespace ramsey

#endif
