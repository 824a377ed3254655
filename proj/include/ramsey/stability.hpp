#ifndef RAMSEY_STABILITY_HPP
#define RAMSEY_STABILITY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class StructureClass { H, K, Kstar };

const char* structure_class_name(StructureClass c);

// Class H(x1, x2, c1, c2, gamma1, gamma2): V = X1 u X2, the graph is
// c1-almost-complete, the gamma1 slice on X1 is (1-c2)-complete while the
// gamma2 slice there is c2-sparse, and across X1-X2 the roles swap.
struct HParams {
  long long x1 = 0, x2 = 0;
  Rat c1, c2;
  Colour gamma1 = Colour::red, gamma2 = Colour::blue;
};

// Class K(x1, x2, x3, c): V = X1 u X2 u X3, c-almost-complete, with
// X1-X3 edges exclusively red, X2-X3 exclusively blue, X3-internal edges
// exclusively green.
struct KParams {
  long long x1 = 0, x2 = 0, x3 = 0;
  Rat c;
};

// Class K*(x1, x2, y1, y2, z, c): V = X1 u X2 u Y1 u Y2, c-almost-complete,
// X1-Y1 and X2-Y2 exclusively red, X1-Y2 and X2-Y1 exclusively blue,
// X1-X2 and Y1-Y2 exclusively green, |Y1|+|Y2| >= z.
struct KstarParams {
  long long x1 = 0, x2 = 0, y1 = 0, y2 = 0, z = 0;
  Rat c;
};

using ClassParams = std::variant<HParams, KParams, KstarParams>;

StructureClass params_class(const ClassParams& p);

// A labelled vertex partition certifying class membership. Part order is
// fixed: [X1, X2] for H, [X1, X2, X3] for K, [X1, X2, Y1, Y2] for K*.
struct StructureWitness {
  StructureClass class_tag = StructureClass::H;
  std::vector<std::vector<int>> parts;
  ClassParams params;
};

// One clause of the relevant definition, for violation reports.
enum class Clause {
  partition,         // parts must partition the vertex set
  size_x1,
  size_x2,
  size_x3,
  size_y1,
  size_y2,
  size_z,
  almost_complete,
  g1_x1_complete,    // H (iii)(a) first half
  g2_x1_sparse,      // H (iii)(a) second half
  g2_cross_complete, // H (iii)(b) first half
  g1_cross_sparse,   // H (iii)(b) second half
  excl_red_x1x3,
  excl_blue_x2x3,
  excl_green_x3,
  excl_red_x1y1,
  excl_red_x2y2,
  excl_blue_x1y2,
  excl_blue_x2y1,
  excl_green_x1x2,
  excl_green_y1y2,
};

const char* clause_name(Clause c);

struct WitnessReport {
  bool ok = true;
  std::vector<Clause> violations;
  std::string detail;
};

// Checks every clause of the definition matching the witness's class.
// "Exclusively coloured" means the colour set of every present edge in the
// zone equals exactly that colour; missing edges are allowed (the
// c-almost-complete budget polices them).
WitnessReport verify_witness(const MultiColouredGraph& g,
                             const StructureWitness& w);

// Finds a witness partition or reports none. Exhaustive (complete) for
// n <= 12 via labelled-partition search with incremental pruning, returning
// the lexicographically least witness (part labels in part order, vertex
// 0 first). For larger n, a greedy local-search heuristic that is sound
// (returns only verified witnesses) but incomplete.
std::optional<StructureWitness> detect_structure(const MultiColouredGraph& g,
                                                 const ClassParams& params);

// Theorem B's class instantiations computed from (alpha1, alpha2, alpha3,
// eta, k). The exponents eta^(1/2) and eta^(1/32) are irrational, so the
// tuples below are dyadic approximations with floors rounded down (weaker
// floors, never stronger); membership checks themselves stay exact.
struct TheoremBClasses {
  HParams h1, h2;
  KParams k;
  KstarParams kstar1, kstar2;
};

TheoremBClasses theorem_b_class_parameters(const Rat& alpha1,
                                           const Rat& alpha2,
                                           const Rat& alpha3, const Rat& eta,
                                           long long k);

}  // namespace ramsey

#endif
