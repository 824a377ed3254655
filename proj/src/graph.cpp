#include "ramsey/graph.hpp"

#include <algorithm>
#include <sstream>

namespace ramsey {

char colour_letter(Colour c) {
  switch (c) {
    case Colour::red:
      return 'r';
    case Colour::blue:
      return 'b';
    case Colour::green:
      return 'g';
  }
  return '?';
}

const char* colour_name(Colour c) {
  switch (c) {
    case Colour::red:
      return "red";
    case Colour::blue:
      return "blue";
    case Colour::green:
      return "green";
  }
  return "?";
}

Colour colour_from_letter(char ch) {
  switch (ch) {
    case 'r':
      return Colour::red;
    case 'b':
      return Colour::blue;
    case 'g':
      return Colour::green;
    default:
      throw ParseError(ParseError::Kind::bad_colour,
                       std::string("bad colour letter '") + ch + "'");
  }
}

int colour_index(Colour c) { return static_cast<int>(c) - 1; }

ColourSet ColourSet::parse(std::string_view letters) {
  ColourSet set;
  for (char ch : letters) {
    Colour c = colour_from_letter(ch);
    if (set.contains(c)) {
      throw ParseError(ParseError::Kind::bad_colour,
                       std::string("repeated colour letter '") + ch + "'");
    }
    set.add(c);
  }
  if (set.empty()) {
    throw ParseError(ParseError::Kind::empty_colours, "empty colour set");
  }
  return set;
}

int ColourSet::size() const {
  int count = 0;
  for (Colour c : kColours) {
    if (contains(c)) ++count;
  }
  return count;
}

Colour ColourSet::only() const {
  for (Colour c : kColours) {
    if (contains(c)) return c;
  }
  throw InternalError("ColourSet::only on empty set");
}

std::string ColourSet::letters() const {
  std::string out;
  for (Colour c : kColours) {
    if (contains(c)) out += colour_letter(c);
  }
  return out;
}

MultiColouredGraph::MultiColouredGraph(int n_vertices,
                                       std::span<const Edge> edges) {
  if (n_vertices < 0) {
    throw ParseError(ParseError::Kind::bad_header, "negative vertex count");
  }
  n_ = n_vertices;
  cells_.assign(static_cast<size_t>(n_) * (n_ > 0 ? n_ - 1 : 0) / 2, 0);
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw ParseError(ParseError::Kind::loop,
                       "loop at vertex " + std::to_string(e.u));
    }
    int u = std::min(e.u, e.v);
    int v = std::max(e.u, e.v);
    check_pair(u, v);
    if (e.colours.empty()) {
      throw ParseError(ParseError::Kind::empty_colours,
                       "empty colour set on edge " + std::to_string(u) + " " +
                           std::to_string(v));
    }
    size_t idx = cell_index(u, v);
    if (cells_[idx] != 0) {
      throw ParseError(ParseError::Kind::duplicate_pair,
                       "duplicate pair " + std::to_string(u) + " " +
                           std::to_string(v));
    }
    uint8_t mask = 0;
    for (Colour c : kColours) {
      if (e.colours.contains(c)) mask |= uint8_t{1} << colour_index(c);
    }
    cells_[idx] = mask;
    ++edge_count_;
  }
  build_adjacency();
}

MultiColouredGraph::MultiColouredGraph(int n_vertices,
                                       std::initializer_list<Edge> edges)
    : MultiColouredGraph(n_vertices,
                         std::span<const Edge>(edges.begin(), edges.size())) {}

void MultiColouredGraph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw ParseError(ParseError::Kind::bad_vertex,
                     "vertex out of range in pair " + std::to_string(u) + " " +
                         std::to_string(v));
  }
}

size_t MultiColouredGraph::cell_index(int u, int v) const {
  // u < v; row-major over the strict upper triangle.
  return static_cast<size_t>(u) * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

void MultiColouredGraph::build_adjacency() {
  for (auto& per_colour : adj_) {
    per_colour.assign(n_, {});
  }
  adj_any_.assign(n_, {});
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      uint8_t mask = cells_[cell_index(u, v)];
      if (mask == 0) continue;
      adj_any_[u].push_back(v);
      adj_any_[v].push_back(u);
      for (Colour c : kColours) {
        if (mask & (uint8_t{1} << colour_index(c))) {
          adj_[colour_index(c)][u].push_back(v);
          adj_[colour_index(c)][v].push_back(u);
        }
      }
    }
  }
}

MultiColouredGraph MultiColouredGraph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank or comment-only line
    if (n < 0) {
      try {
        size_t pos = 0;
        n = std::stoi(first, &pos);
        if (pos != first.size() || n < 0) throw std::invalid_argument(first);
      } catch (const std::exception&) {
        throw ParseError(ParseError::Kind::bad_header,
                         "line " + std::to_string(line_no) +
                             ": expected vertex count, got '" + first + "'");
      }
      std::string extra;
      if (fields >> extra) {
        throw ParseError(ParseError::Kind::bad_header,
                         "line " + std::to_string(line_no) +
                             ": trailing content after vertex count");
      }
      continue;
    }
    std::string second, third, extra;
    if (!(fields >> second >> third) || (fields >> extra)) {
      throw ParseError(ParseError::Kind::bad_line,
                       "line " + std::to_string(line_no) +
                           ": expected 'u v C', got '" + line + "'");
    }
    int u, v;
    try {
      size_t p1 = 0, p2 = 0;
      u = std::stoi(first, &p1);
      v = std::stoi(second, &p2);
      if (p1 != first.size() || p2 != second.size()) {
        throw std::invalid_argument(line);
      }
    } catch (const std::exception&) {
      throw ParseError(ParseError::Kind::bad_line,
                       "line " + std::to_string(line_no) +
                           ": bad vertex ids in '" + line + "'");
    }
    if (u == v) {
      throw ParseError(ParseError::Kind::loop,
                       "line " + std::to_string(line_no) + ": loop at vertex " +
                           std::to_string(u));
    }
    if (u < 0 || v >= n || v < 0 || u >= n) {
      throw ParseError(ParseError::Kind::bad_vertex,
                       "line " + std::to_string(line_no) +
                           ": vertex out of range in '" + line + "'");
    }
    if (u > v) {
      throw ParseError(ParseError::Kind::pair_order,
                       "line " + std::to_string(line_no) +
                           ": pairs must satisfy u < v");
    }
    edges.push_back({u, v, ColourSet::parse(third)});
  }
  if (n < 0) {
    throw ParseError(ParseError::Kind::bad_header, "missing vertex count");
  }
  return MultiColouredGraph(n, edges);
}

std::string MultiColouredGraph::format() const {
  std::string out = std::to_string(n_) + "\n";
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      uint8_t mask = cells_[cell_index(u, v)];
      if (mask == 0) continue;
      out += std::to_string(u);
      out += ' ';
      out += std::to_string(v);
      out += ' ';
      out += colours(u, v).letters();
      out += '\n';
    }
  }
  return out;
}

ColourSet MultiColouredGraph::colours(int u, int v) const {
  check_pair(u, v);
  if (u == v) return {};
  if (u > v) std::swap(u, v);
  uint8_t mask = cells_[cell_index(u, v)];
  ColourSet set;
  for (Colour c : kColours) {
    if (mask & (uint8_t{1} << colour_index(c))) set.add(c);
  }
  return set;
}

ColourSlice MultiColouredGraph::slice(Colour c) const {
  return ColourSlice(*this, c);
}

std::vector<MultiColouredGraph::Edge> MultiColouredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      ColourSet set = colours(u, v);
      if (!set.empty()) out.push_back({u, v, set});
    }
  }
  return out;
}

MultiColouredGraph MultiColouredGraph::induced(
    std::span<const int> vertices) const {
  std::vector<int> index(n_, -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= n_) {
      throw PreconditionError("induced: vertex out of range: " +
                              std::to_string(v));
    }
    if (index[v] != -1) {
      throw PreconditionError("induced: repeated vertex " + std::to_string(v));
    }
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> sub;
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      ColourSet set = colours(vertices[i], vertices[j]);
      if (set.empty()) continue;
      int a = static_cast<int>(i), b = static_cast<int>(j);
      if (a > b) std::swap(a, b);
      sub.push_back({a, b, set});
    }
  }
  return MultiColouredGraph(static_cast<int>(vertices.size()), sub);
}

long long ColourSlice::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < vertex_count(); ++v) twice += degree(v);
  return twice / 2;
}

// --- predicates ------------------------------------------------------------

namespace {

template <typename View>
int min_degree(const View& g) {
  int best = g.vertex_count() - 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    best = std::min(best, g.degree(v));
  }
  return best;
}

template <typename View>
int max_degree(const View& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    best = std::max(best, g.degree(v));
  }
  return best;
}

template <typename View>
void check_parts(const View& g, std::span<const int> U,
                 std::span<const int> W) {
  std::vector<char> seen(g.vertex_count(), 0);
  if (U.empty() || W.empty()) {
    throw PreconditionError("bipartite parts must be non-empty");
  }
  for (std::span<const int> part : {U, W}) {
    for (int v : part) {
      if (v < 0 || v >= g.vertex_count()) {
        throw PreconditionError("part vertex out of range: " +
                                std::to_string(v));
      }
      if (seen[v]) {
        throw PreconditionError("parts overlap at vertex " +
                                std::to_string(v));
      }
      seen[v] = 1;
    }
  }
}

template <typename View>
int cross_degree(const View& g, int v, std::span<const int> other) {
  int d = 0;
  for (int w : other) {
    if (g.has_edge(v, w)) ++d;
  }
  return d;
}

// min over u in U of deg(u, W), paired with the symmetric direction.
template <typename View, typename Pred>
bool bipartite_degree_predicate(const View& g, std::span<const int> U,
                                std::span<const int> W, Pred pred) {
  check_parts(g, U, W);
  for (int u : U) {
    if (!pred(cross_degree(g, u, W), static_cast<long long>(W.size()))) {
      return false;
    }
  }
  for (int w : W) {
    if (!pred(cross_degree(g, w, U), static_cast<long long>(U.size()))) {
      return false;
    }
  }
  return true;
}

}  // namespace

template <typename View>
static bool almost_complete_impl(const View& g, const Rat& a) {
  if (a < 0) throw PreconditionError("almost-complete: a must be >= 0");
  if (g.vertex_count() == 0) return true;
  return Rat(min_degree(g)) >= Rat(g.vertex_count() - 1) - a;
}

bool is_almost_complete(const MultiColouredGraph& g, const Rat& a) {
  return almost_complete_impl(g, a);
}
bool is_almost_complete(const ColourSlice& g, const Rat& a) {
  return almost_complete_impl(g, a);
}

template <typename View>
static bool almost_complete_bip_impl(const View& g, std::span<const int> U,
                                     std::span<const int> W, const Rat& a) {
  if (a < 0) throw PreconditionError("almost-complete: a must be >= 0");
  return bipartite_degree_predicate(
      g, U, W,
      [&](int deg, long long other) { return Rat(deg) >= Rat(other) - a; });
}

bool is_almost_complete_bipartite(const MultiColouredGraph& g,
                                  std::span<const int> U,
                                  std::span<const int> W, const Rat& a) {
  return almost_complete_bip_impl(g, U, W, a);
}
bool is_almost_complete_bipartite(const ColourSlice& g, std::span<const int> U,
                                  std::span<const int> W, const Rat& a) {
  return almost_complete_bip_impl(g, U, W, a);
}

template <typename View>
static bool fraction_complete_impl(const View& g, const Rat& c) {
  if (c < 0 || c > 1) {
    throw PreconditionError("fraction-complete: c must be in [0,1]");
  }
  if (g.vertex_count() == 0) return true;
  return Rat(min_degree(g)) >= (Rat(1) - c) * Rat(g.vertex_count() - 1);
}

bool is_fraction_complete(const MultiColouredGraph& g, const Rat& c) {
  return fraction_complete_impl(g, c);
}
bool is_fraction_complete(const ColourSlice& g, const Rat& c) {
  return fraction_complete_impl(g, c);
}

template <typename View>
static bool fraction_complete_bip_impl(const View& g, std::span<const int> U,
                                       std::span<const int> W, const Rat& c) {
  if (c < 0 || c > 1) {
    throw PreconditionError("fraction-complete: c must be in [0,1]");
  }
  return bipartite_degree_predicate(g, U, W, [&](int deg, long long other) {
    return Rat(deg) >= (Rat(1) - c) * Rat(other);
  });
}

bool is_fraction_complete_bipartite(const MultiColouredGraph& g,
                                    std::span<const int> U,
                                    std::span<const int> W, const Rat& c) {
  return fraction_complete_bip_impl(g, U, W, c);
}
bool is_fraction_complete_bipartite(const ColourSlice& g,
                                    std::span<const int> U,
                                    std::span<const int> W, const Rat& c) {
  return fraction_complete_bip_impl(g, U, W, c);
}

template <typename View>
static bool sparse_impl(const View& g, const Rat& c) {
  if (c <= 0 || c >= 1) throw PreconditionError("sparse: c must be in (0,1)");
  if (g.vertex_count() == 0) return true;
  return Rat(max_degree(g)) <= c * Rat(g.vertex_count() - 1);
}

bool is_sparse(const MultiColouredGraph& g, const Rat& c) {
  return sparse_impl(g, c);
}
bool is_sparse(const ColourSlice& g, const Rat& c) { return sparse_impl(g, c); }

template <typename View>
static bool sparse_bip_impl(const View& g, std::span<const int> U,
                            std::span<const int> W, const Rat& c) {
  if (c <= 0 || c >= 1) throw PreconditionError("sparse: c must be in (0,1)");
  return bipartite_degree_predicate(g, U, W, [&](int deg, long long other) {
    return Rat(deg) <= c * Rat(other);
  });
}

bool is_sparse_bipartite(const MultiColouredGraph& g, std::span<const int> U,
                         std::span<const int> W, const Rat& c) {
  return sparse_bip_impl(g, U, W, c);
}
bool is_sparse_bipartite(const ColourSlice& g, std::span<const int> U,
                         std::span<const int> W, const Rat& c) {
  return sparse_bip_impl(g, U, W, c);
}

Rat density(const MultiColouredGraph& g, Colour colour, std::span<const int> A,
            std::span<const int> B) {
  ColourSlice s = g.slice(colour);
  check_parts(s, A, B);
  long long count = 0;
  for (int a : A) {
    for (int b : B) {
      if (s.has_edge(a, b)) ++count;
    }
  }
  return Rat(count, static_cast<long long>(A.size()) *
                        static_cast<long long>(B.size()));
}

int degree_within(const ColourSlice& g, int v, std::span<const int> vertices) {
  int d = 0;
  for (int w : vertices) {
    if (w != v && g.has_edge(v, w)) ++d;
  }
  return d;
}

bool is_fraction_complete_induced(const ColourSlice& g,
                                  std::span<const int> vertices, const Rat& c) {
  if (c < 0 || c > 1) {
    throw PreconditionError("fraction-complete: c must be in [0,1]");
  }
  if (vertices.size() <= 1) return true;
  Rat bound = (Rat(1) - c) * Rat(static_cast<long long>(vertices.size()) - 1);
  for (int v : vertices) {
    if (Rat(degree_within(g, v, vertices)) < bound) return false;
  }
  return true;
}

bool is_sparse_induced(const ColourSlice& g, std::span<const int> vertices,
                       const Rat& c) {
  if (c <= 0 || c >= 1) throw PreconditionError("sparse: c must be in (0,1)");
  if (vertices.size() <= 1) return true;
  Rat bound = c * Rat(static_cast<long long>(vertices.size()) - 1);
  for (int v : vertices) {
    if (Rat(degree_within(g, v, vertices)) > bound) return false;
  }
  return true;
}

}  // namespace ramsey
