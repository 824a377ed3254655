#ifndef RAMSEY_GRAPH_HPP
#define RAMSEY_GRAPH_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

// The three colours, in the fixed canonicalization order red < blue < green.
enum class Colour : int { red = 1, blue = 2, green = 3 };

constexpr std::array<Colour, 3> kColours = {Colour::red, Colour::blue,
                                            Colour::green};

char colour_letter(Colour c);               // 'r', 'b', 'g'
const char* colour_name(Colour c);          // "red", "blue", "green"
Colour colour_from_letter(char ch);         // throws ParseError
int colour_index(Colour c);                 // 0, 1, 2

// A non-empty subset of {red, blue, green} once attached to an edge.
class ColourSet {
 public:
  ColourSet() = default;
  explicit ColourSet(Colour c) { add(c); }

  static ColourSet parse(std::string_view letters);  // e.g. "rg"

  void add(Colour c) { bits_ |= bit(c); }
  bool contains(Colour c) const { return bits_ & bit(c); }
  bool empty() const { return bits_ == 0; }
  int size() const;
  bool singleton() const { return size() == 1; }
  Colour only() const;  // requires singleton()

  std::string letters() const;  // canonical "r" < "b" < "g" order

  friend bool operator==(ColourSet a, ColourSet b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(ColourSet a, ColourSet b) { return !(a == b); }

 private:
  static uint8_t bit(Colour c) {
    return static_cast<uint8_t>(1u << colour_index(c));
  }
  uint8_t bits_ = 0;
};

class ColourSlice;

// The universal carrier: a vertex count plus a symmetric map from unordered
// vertex pairs to non-empty colour sets. A missing pair is a missing edge.
// Simple coloured graphs are the special case of singleton colour sets.
// Instances are immutable after construction and freely shareable between
// threads.
class MultiColouredGraph {
 public:
  struct Edge {
    int u, v;  // u < v
    ColourSet colours;
  };

  MultiColouredGraph(int n_vertices, std::span<const Edge> edges);
  MultiColouredGraph(int n_vertices, std::initializer_list<Edge> edges);

  // Text format: line 1 is the vertex count; each following non-empty line
  // is "u v C" with 0 <= u < v < N and C a non-empty string over {r,b,g}.
  // '#' starts a comment. format() writes pairs lexicographically with
  // colour letters in r < b < g order, so read/write round-trips exactly.
  static MultiColouredGraph parse(std::string_view text);
  std::string format() const;

  int vertex_count() const { return n_; }
  ColourSet colours(int u, int v) const;
  bool has_edge(int u, int v) const { return !colours(u, v).empty(); }
  bool has_edge(int u, int v, Colour c) const {
    return colours(u, v).contains(c);
  }
  long long edge_count() const { return edge_count_; }

  // Degree / adjacency over present edges of any colour.
  int degree(int v) const { return static_cast<int>(adj_any_[v].size()); }
  const std::vector<int>& neighbours(int v) const { return adj_any_[v]; }

  int degree(int v, Colour c) const {
    return static_cast<int>(adj_[colour_index(c)][v].size());
  }
  const std::vector<int>& neighbours(int v, Colour c) const {
    return adj_[colour_index(c)][v];
  }

  ColourSlice slice(Colour c) const;

  // Present edges in lexicographic pair order.
  std::vector<Edge> edges() const;

  // Induced subgraph on the given vertices; vertex i of the result is
  // vertices[i].
  MultiColouredGraph induced(std::span<const int> vertices) const;

  friend bool operator==(const MultiColouredGraph& a,
                         const MultiColouredGraph& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  void check_pair(int u, int v) const;
  size_t cell_index(int u, int v) const;  // u < v
  void build_adjacency();

  int n_ = 0;
  long long edge_count_ = 0;
  std::vector<uint8_t> cells_;  // upper-triangular colour masks
  std::array<std::vector<std::vector<int>>, 3> adj_;
  std::vector<std::vector<int>> adj_any_;
};

// The spanning subgraph G_r: same vertex set, exactly the edges whose colour
// set contains the given colour. A cheap view; keeps the base graph alive by
// reference (callers keep the graph in scope).
class ColourSlice {
 public:
  ColourSlice(const MultiColouredGraph& base, Colour colour)
      : base_(&base), colour_(colour) {}

  const MultiColouredGraph& base() const { return *base_; }
  Colour colour() const { return colour_; }

  int vertex_count() const { return base_->vertex_count(); }
  bool has_edge(int u, int v) const { return base_->has_edge(u, v, colour_); }
  int degree(int v) const { return base_->degree(v, colour_); }
  const std::vector<int>& neighbours(int v) const {
    return base_->neighbours(v, colour_);
  }
  long long edge_count() const;

 private:
  const MultiColouredGraph* base_;
  Colour colour_;
};

// --- Density / completeness / sparsity predicates -------------------------
//
// Each predicate has a whole-graph form and a bipartite form over two given
// parts (degrees counted into the opposite part only). Thresholds are exact
// rationals. The bipartite forms reject overlapping or out-of-range parts.

// min degree >= (N-1) - a
bool is_almost_complete(const MultiColouredGraph& g, const Rat& a);
bool is_almost_complete(const ColourSlice& g, const Rat& a);
bool is_almost_complete_bipartite(const MultiColouredGraph& g,
                                  std::span<const int> U,
                                  std::span<const int> W, const Rat& a);
bool is_almost_complete_bipartite(const ColourSlice& g, std::span<const int> U,
                                  std::span<const int> W, const Rat& a);

// min degree >= (1-c)(N-1), 0 <= c <= 1
bool is_fraction_complete(const MultiColouredGraph& g, const Rat& c);
bool is_fraction_complete(const ColourSlice& g, const Rat& c);
bool is_fraction_complete_bipartite(const MultiColouredGraph& g,
                                    std::span<const int> U,
                                    std::span<const int> W, const Rat& c);
bool is_fraction_complete_bipartite(const ColourSlice& g,
                                    std::span<const int> U,
                                    std::span<const int> W, const Rat& c);

// max degree <= c(N-1), 0 < c < 1
bool is_sparse(const MultiColouredGraph& g, const Rat& c);
bool is_sparse(const ColourSlice& g, const Rat& c);
bool is_sparse_bipartite(const MultiColouredGraph& g, std::span<const int> U,
                         std::span<const int> W, const Rat& c);
bool is_sparse_bipartite(const ColourSlice& g, std::span<const int> U,
                         std::span<const int> W, const Rat& c);

// Exact edge density e(A,B)/|A||B| of one colour between disjoint non-empty
// vertex sets.
Rat density(const MultiColouredGraph& g, Colour colour, std::span<const int> A,
            std::span<const int> B);

// Induced variants used by the structure-class definitions: the subgraph of
// one colour slice induced on `vertices` (or between two parts).
int degree_within(const ColourSlice& g, int v, std::span<const int> vertices);
bool is_fraction_complete_induced(const ColourSlice& g,
                                  std::span<const int> vertices, const Rat& c);
bool is_sparse_induced(const ColourSlice& g, std::span<const int> vertices,
                       const Rat& c);

}  // namespace ramsey

#endif
