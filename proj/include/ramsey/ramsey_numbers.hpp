#ifndef RAMSEY_RAMSEY_NUMBERS_HPP
#define RAMSEY_RAMSEY_NUMBERS_HPP

#include <map>
#include <optional>
#include <string>

#include "ramsey/extremal.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Largest even / odd integer not greater than x.
long long even_floor(const Rat& x);  // requires x >= 2
long long odd_floor(const Rat& x);   // requires x >= 1

enum class ParityProfile { even_even_odd, even_odd_odd, free_profile };

// Forbidden cycle lengths per colour with an optional declared profile.
struct CycleTriple {
  int n_red = 3;
  int n_blue = 3;
  int n_green = 3;
  ParityProfile profile = ParityProfile::free_profile;

  void validate() const;
};

// max{2 n_red + n_blue - 3, n_red/2 + n_blue/2 + n_green - 2};
// profile (even, even, odd) with n_red >= n_blue.
long long theorem_A_value(const CycleTriple& t);

// max{4 n_red, n_red + 2 n_blue, n_red + 2 n_green} - 3;
// profile (even, odd, odd).
long long theorem_C_value(const CycleTriple& t);

struct SearchStats {
  long long nodes = 0;
  std::map<std::string, long long> prunes;

  void merge(const SearchStats& other);
  std::string format() const;  // flat key=value lines
};

struct SearchOutcome {
  int N = 0;
  std::optional<MultiColouredGraph> witness;  // present iff a witness exists
  bool exhausted = false;
  SearchStats stats;
};

// Builds both lower-bound constructions (all V3/V4 policies), verifies the
// absence of the three forbidden cycles exhaustively and returns the larger
// verified witness; N = theorem_A_value - 1. A verification failure is a
// bug and throws InternalError.
SearchOutcome certify_lower_bound(const CycleTriple& t);

struct SearchOptions {
  long long node_budget = 1'000'000'000;
  int threads = 1;
  bool symmetry_breaking = true;
};

// Backtracking over the edges of K_N in vertex-extension order with
// incremental monochromatic-cycle pruning through each new edge.
// Symmetry breaking (optional): the colour of edge (0,1) is pinned to red
// when red's length ties another colour's and an all-third-colour witness
// is impossible, plus a canonical-row constraint on vertex 0 (the first
// blue precedes the first green). A full enumeration proves R <= N
// ("exhausted"); a witness proves R > N. Throws BudgetError when the node
// budget runs out.
SearchOutcome search_ramsey(const CycleTriple& t, int N,
                            const SearchOptions& options = {});

struct Parameters {
  Rat alpha1, alpha2, alpha3;
  Rat eta;
  long long k = 0;
  long long n = 0;
};

// Informational evaluation of Theorem B's side conditions:
// c = max{2 a1 + a2, a1/2 + a2/2 + a3}, the K-window
// [(c - eta)k, (c - eta/2)k], and which outcomes the side conditions
// permit: (iv) only if a3 <= (3/2)a1 + (1/2)a2 + 14 sqrt(eta), (v)/(vi)
// only if a3 >= (3/2)a1 + (1/2)a2 - 10 sqrt(eta).
struct SideConditionReport {
  Rat c;
  Rat window_lo, window_hi;  // in units of k
  bool structures_H_permitted = false;   // outcome (iv)
  bool structures_K_permitted = false;   // outcomes (v) and (vi)
  std::string text;
};

SideConditionReport theorem_B_side_conditions(const Parameters& p);

}  // namespace ramsey

#endif
