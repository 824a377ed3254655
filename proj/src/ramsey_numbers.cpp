#include "ramsey/ramsey_numbers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "ramsey/cycles.hpp"

namespace ramsey {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

bool is_even(int x) { return x % 2 == 0; }

}  // namespace

long long even_floor(const Rat& x) {
  require(x >= 2, "even_floor: x >= 2 required");
  return 2 * floor_rat(x / 2);
}

long long odd_floor(const Rat& x) {
  require(x >= 1, "odd_floor: x >= 1 required");
  return 2 * floor_rat((x - 1) / 2) + 1;
}

void CycleTriple::validate() const {
  require(n_red >= 3 && n_blue >= 3 && n_green >= 3,
          "cycle lengths must be >= 3");
  switch (profile) {
    case ParityProfile::even_even_odd:
      require(is_even(n_red) && is_even(n_blue) && !is_even(n_green),
              "profile (even, even, odd) violated");
      break;
    case ParityProfile::even_odd_odd:
      require(is_even(n_red) && !is_even(n_blue) && !is_even(n_green),
              "profile (even, odd, odd) violated");
      break;
    case ParityProfile::free_profile:
      break;
  }
}

long long theorem_A_value(const CycleTriple& t) {
  CycleTriple check = t;
  check.profile = ParityProfile::even_even_odd;
  check.validate();
  require(t.n_red >= t.n_blue, "theorem A: n_red >= n_blue required");
  long long first = 2LL * t.n_red + t.n_blue - 3;
  long long second = t.n_red / 2 + t.n_blue / 2 + t.n_green - 2;
  return std::max(first, second);
}

long long theorem_C_value(const CycleTriple& t) {
  CycleTriple check = t;
  check.profile = ParityProfile::even_odd_odd;
  check.validate();
  long long a = 4LL * t.n_red;
  long long b = t.n_red + 2LL * t.n_blue;
  long long c = t.n_red + 2LL * t.n_green;
  return std::max({a, b, c}) - 3;
}

void SearchStats::merge(const SearchStats& other) {
  nodes += other.nodes;
  for (const auto& [key, value] : other.prunes) {
    prunes[key] += value;
  }
}

std::string SearchStats::format() const {
  std::string out = "nodes=" + std::to_string(nodes) + "\n";
  for (const auto& [key, value] : prunes) {
    out += "prune." + key + "=" + std::to_string(value) + "\n";
  }
  return out;
}

namespace {

// Exhaustive absence check of all three forbidden cycles.
bool verify_no_forbidden_cycles(const MultiColouredGraph& g,
                                const CycleTriple& t) {
  struct Want {
    Colour colour;
    int length;
  };
  for (Want want : {Want{Colour::red, t.n_red}, Want{Colour::blue, t.n_blue},
                    Want{Colour::green, t.n_green}}) {
    if (want.length > g.vertex_count()) continue;
    if (find_cycle_exact(g.slice(want.colour), want.length)) return false;
  }
  return true;
}

}  // namespace

SearchOutcome certify_lower_bound(const CycleTriple& t) {
  CycleTriple triple = t;
  triple.profile = ParityProfile::even_even_odd;
  triple.validate();
  require(t.n_red >= t.n_blue, "certify_lower_bound: n_red >= n_blue");
  LowerBoundSpec spec{t.n_red, t.n_blue, t.n_green};
  SearchOutcome outcome;
  outcome.N = static_cast<int>(theorem_A_value(triple)) - 1;
  std::optional<MultiColouredGraph> best;
  for (FillPolicy policy : {FillPolicy::all_red, FillPolicy::all_blue,
                            FillPolicy::alternating}) {
    MultiColouredGraph g = build_construction_1(spec, policy);
    if (!verify_no_forbidden_cycles(g, triple)) {
      throw InternalError(std::string("certify_lower_bound: construction 1 (") +
                          fill_policy_name(policy) +
                          ") contains a forbidden cycle");
    }
    if (!best || g.vertex_count() > best->vertex_count()) best = std::move(g);
  }
  {
    MultiColouredGraph g = build_construction_2(spec);
    if (!verify_no_forbidden_cycles(g, triple)) {
      throw InternalError(
          "certify_lower_bound: construction 2 contains a forbidden cycle");
    }
    if (!best || g.vertex_count() > best->vertex_count()) best = std::move(g);
  }
  if (best->vertex_count() != outcome.N) {
    throw InternalError("certify_lower_bound: witness size " +
                        std::to_string(best->vertex_count()) +
                        " does not match theorem_A_value - 1 = " +
                        std::to_string(outcome.N));
  }
  outcome.witness = std::move(best);
  outcome.exhausted = false;
  return outcome;
}

// --- search engine ----------------------------------------------------------

namespace {

struct EdgeSlot {
  int u, v;  // u < v
};

// Edges of K_N in vertex-extension order: vertex v joins with edges
// (0,v), (1,v), ..., (v-1,v). Partial assignments are complete on a vertex
// prefix, so exact-length cycle pruning through the newest edge is exact.
std::vector<EdgeSlot> edge_order(int n) {
  std::vector<EdgeSlot> order;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) order.push_back({u, v});
  }
  return order;
}

struct SearchContext {
  CycleTriple triple;
  int n;
  std::vector<EdgeSlot> order;
  bool fix_first_edge_red = false;
  bool row0_canonical = false;
  std::array<int, 3> forbidden{};  // cycle length per colour index

  SearchContext(const CycleTriple& t, int N, bool symmetry)
      : triple(t), n(N), order(edge_order(N)) {
    forbidden = {t.n_red, t.n_blue, t.n_green};
    if (symmetry) {
      row0_canonical = true;
      // Pinning (0,1) to red is a colour swap plus a vertex relabelling,
      // valid only when red's length ties another colour's and a witness
      // all in the remaining colour is impossible (N >= its length).
      if (t.n_red == t.n_blue && t.n_red == t.n_green) {
        fix_first_edge_red = N >= 2;
      } else if (t.n_red == t.n_blue) {
        fix_first_edge_red = N >= t.n_green;
      } else if (t.n_red == t.n_green) {
        fix_first_edge_red = N >= t.n_blue;
      }
    }
  }
};

class RamseySearch {
 public:
  RamseySearch(const SearchContext& ctx, std::atomic<long long>& nodes_used,
               long long budget)
      : ctx_(ctx), nodes_used_(nodes_used), budget_(budget) {
    for (auto& rows : adj_) rows.assign(ctx.n, 0);
    colour_.assign(ctx.order.size(), -1);
  }

  SearchStats& stats() { return stats_; }

  // Runs the subtree under the given prefix assignment (values for edge
  // slots [0, prefix.size())). Returns the witness if one exists in the
  // subtree, nullopt if exhausted. Throws BudgetError on budget exhaustion.
  std::optional<MultiColouredGraph> run(const std::vector<int>& prefix) {
    for (size_t i = 0; i < prefix.size(); ++i) {
      apply(static_cast<int>(i), prefix[i]);
    }
    std::optional<MultiColouredGraph> result;
    if (dfs(static_cast<int>(prefix.size()), result)) return result;
    return std::nullopt;
  }

  // Enumerates all prefix assignments of the first `depth` edges that pass
  // the prune checks (used to split work across threads).
  void enumerate_prefixes(int depth, std::vector<int>& partial,
                          std::vector<std::vector<int>>& out) {
    if (static_cast<int>(partial.size()) == depth) {
      out.push_back(partial);
      return;
    }
    int slot = static_cast<int>(partial.size());
    for (int ci = 0; ci < 3; ++ci) {
      if (!admissible(slot, ci)) continue;
      apply(slot, ci);
      partial.push_back(ci);
      enumerate_prefixes(depth, partial, out);
      partial.pop_back();
      undo(slot, ci);
    }
  }

 private:
  bool admissible(int slot, int ci) {
    const EdgeSlot& e = ctx_.order[slot];
    if (ctx_.fix_first_edge_red && slot == 0 && ci != 0) {
      ++stats_.prunes["symmetry_colour_fix"];
      return false;
    }
    if (ctx_.row0_canonical && e.u == 0 && ci == 1) {
      // First blue in row 0 may not follow a green with no blue before it.
      bool green_seen = false, blue_seen = false;
      for (int slot2 = 0; slot2 < slot; ++slot2) {
        if (ctx_.order[slot2].u != 0) continue;
        if (colour_[slot2] == 2) green_seen = true;
        if (colour_[slot2] == 1) blue_seen = true;
      }
      if (green_seen && !blue_seen) {
        ++stats_.prunes["symmetry_row0"];
        return false;
      }
    }
    if (completes_cycle(e, ci)) {
      ++stats_.prunes[std::string("cycle_") + colour_name(kColours[ci])];
      return false;
    }
    return true;
  }

  // Exact-length monochromatic cycle through the new edge (u,v): a simple
  // path u -> v of forbidden-length-minus-one edges in colour ci.
  bool completes_cycle(const EdgeSlot& e, int ci) {
    int length = ctx_.forbidden[ci];
    if (length > ctx_.n) return false;
    const std::vector<uint16_t>& rows = adj_[ci];
    // DFS from v back to u with exactly length-1 edges, avoiding edge uv
    // (it is not in rows yet).
    uint16_t visited = static_cast<uint16_t>((1u << e.u) | (1u << e.v));
    return path_dfs(rows, e.v, e.u, length - 1, visited);
  }

  bool path_dfs(const std::vector<uint16_t>& rows, int from, int target,
                int steps, uint16_t visited) {
    if (steps == 1) return (rows[from] >> target) & 1;
    uint16_t cands = rows[from] & static_cast<uint16_t>(~visited);
    while (cands) {
      int w = std::countr_zero(static_cast<unsigned>(cands));
      cands &= static_cast<uint16_t>(cands - 1);
      if (w == target) continue;
      if (path_dfs(rows, w, target, steps - 1,
                   static_cast<uint16_t>(visited | (1u << w)))) {
        return true;
      }
    }
    return false;
  }

  void apply(int slot, int ci) {
    const EdgeSlot& e = ctx_.order[slot];
    colour_[slot] = ci;
    adj_[ci][e.u] |= static_cast<uint16_t>(1u << e.v);
    adj_[ci][e.v] |= static_cast<uint16_t>(1u << e.u);
  }

  void undo(int slot, int ci) {
    const EdgeSlot& e = ctx_.order[slot];
    colour_[slot] = -1;
    adj_[ci][e.u] &= static_cast<uint16_t>(~(1u << e.v));
    adj_[ci][e.v] &= static_cast<uint16_t>(~(1u << e.u));
  }

  MultiColouredGraph snapshot() const {
    std::vector<MultiColouredGraph::Edge> edges;
    for (size_t i = 0; i < ctx_.order.size(); ++i) {
      edges.push_back({ctx_.order[i].u, ctx_.order[i].v,
                       ColourSet(kColours[colour_[i]])});
    }
    return MultiColouredGraph(ctx_.n, edges);
  }

  bool dfs(int slot, std::optional<MultiColouredGraph>& result) {
    if (slot == static_cast<int>(ctx_.order.size())) {
      result = snapshot();
      return true;
    }
    if (++stats_.nodes % 4096 == 0) {
      long long used =
          nodes_used_.fetch_add(4096, std::memory_order_relaxed) + 4096;
      if (used > budget_) {
        throw BudgetError("search_ramsey: node budget exceeded");
      }
    }
    for (int ci = 0; ci < 3; ++ci) {
      if (!admissible(slot, ci)) continue;
      apply(slot, ci);
      if (dfs(slot + 1, result)) return true;
      undo(slot, ci);
    }
    return false;
  }

  const SearchContext& ctx_;
  std::atomic<long long>& nodes_used_;
  long long budget_;
  std::array<std::vector<uint16_t>, 3> adj_;
  std::vector<int> colour_;
  SearchStats stats_;
};

}  // namespace

SearchOutcome search_ramsey(const CycleTriple& t, int N,
                            const SearchOptions& options) {
  t.validate();
  require(N >= 2, "search_ramsey: N >= 2 required");
  require(N <= 16, "search_ramsey: edge masks support N <= 16");
  require(options.threads >= 1, "search_ramsey: threads >= 1");
  SearchContext ctx(t, N, options.symmetry_breaking);
  SearchOutcome outcome;
  outcome.N = N;
  std::atomic<long long> nodes_used{0};

  if (options.threads == 1) {
    RamseySearch search(ctx, nodes_used, options.node_budget);
    auto witness = search.run({});
    outcome.stats = search.stats();
    if (witness) {
      outcome.witness = std::move(witness);
    } else {
      outcome.exhausted = true;
    }
  } else {
    // Split at a fixed prefix depth; every branch is searched to the end,
    // so the outcome (and the merged stats) do not depend on scheduling.
    int split_depth = 1;
    size_t want = static_cast<size_t>(options.threads) * 8;
    std::vector<std::vector<int>> prefixes;
    while (split_depth < static_cast<int>(ctx.order.size())) {
      prefixes.clear();
      RamseySearch seed(ctx, nodes_used, options.node_budget);
      std::vector<int> partial;
      seed.enumerate_prefixes(split_depth, partial, prefixes);
      if (prefixes.size() >= want || prefixes.empty()) break;
      ++split_depth;
    }
    if (prefixes.empty()) {
      outcome.exhausted = true;
      return outcome;
    }
    std::vector<std::optional<MultiColouredGraph>> results(prefixes.size());
    std::vector<SearchStats> stats(prefixes.size());
    std::atomic<size_t> next{0};
    std::mutex error_mutex;
    std::optional<std::string> budget_error;
    auto worker = [&]() {
      while (true) {
        size_t index = next.fetch_add(1);
        if (index >= prefixes.size()) return;
        try {
          RamseySearch search(ctx, nodes_used, options.node_budget);
          results[index] = search.run(prefixes[index]);
          stats[index] = search.stats();
        } catch (const BudgetError& err) {
          std::lock_guard<std::mutex> lock(error_mutex);
          budget_error = err.what();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < options.threads; ++i) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
    if (budget_error) throw BudgetError(*budget_error);
    for (size_t i = 0; i < prefixes.size(); ++i) {
      outcome.stats.merge(stats[i]);
      if (!outcome.witness && results[i]) {
        outcome.witness = std::move(results[i]);
      }
    }
    outcome.exhausted = !outcome.witness.has_value();
  }

  if (outcome.witness) {
    // Independent re-verification of the witness.
    if (!verify_no_forbidden_cycles(*outcome.witness, t)) {
      throw InternalError("search_ramsey: witness failed re-verification");
    }
  }
  return outcome;
}

SideConditionReport theorem_B_side_conditions(const Parameters& p) {
  require(p.alpha1 > 0 && p.alpha2 > 0 && p.alpha3 > 0,
          "side conditions: alphas must be positive");
  require(p.alpha1 >= p.alpha2, "side conditions: alpha1 >= alpha2 required");
  require(p.eta > 0, "side conditions: eta must be positive");
  SideConditionReport report;
  Rat first = 2 * p.alpha1 + p.alpha2;
  Rat second = p.alpha1 / 2 + p.alpha2 / 2 + p.alpha3;
  report.c = std::max(first, second);
  report.window_lo = report.c - p.eta;
  report.window_hi = report.c - p.eta / 2;
  Rat threshold = Rat(3, 2) * p.alpha1 + Rat(1, 2) * p.alpha2;
  // (iv) only if a3 <= threshold + 14 sqrt(eta).
  report.structures_H_permitted =
      le_scaled_sqrt(p.alpha3 - threshold, Rat(14), p.eta);
  // (v)/(vi) only if a3 >= threshold - 10 sqrt(eta).
  report.structures_K_permitted =
      le_scaled_sqrt(threshold - p.alpha3, Rat(10), p.eta);
  report.text =
      "c = " + format_rational(report.c) + "\n" +
      "K window: [" + format_rational(report.window_lo) + " k, " +
      format_rational(report.window_hi) + " k]\n" +
      std::string("outcome (iv) permitted: ") +
      (report.structures_H_permitted ? "yes" : "no") + "\n" +
      std::string("outcomes (v)/(vi) permitted: ") +
      (report.structures_K_permitted ? "yes" : "no") + "\n";
  return report;
}

}  // namespace ramsey
