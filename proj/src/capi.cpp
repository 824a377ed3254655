#include "ramsey/capi.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "ramsey/cycles.hpp"
#include "ramsey/decompose.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/matchings.hpp"
#include "ramsey/ramsey_numbers.hpp"
#include "ramsey/regularity.hpp"
#include "ramsey/stability.hpp"

using json = nlohmann::json;

struct rx_graph {
  ramsey::MultiColouredGraph g;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int32_t* dup_ints(const std::vector<int>& v) {
  int32_t* out = new int32_t[v.empty() ? 1 : v.size()];
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

// Runs the body, translating the library's error taxonomy to status codes.
template <typename Fn>
rx_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const ramsey::ParseError& e) {
    t_last_error = e.what();
    return RX_PARSE;
  } catch (const ramsey::PreconditionError& e) {
    t_last_error = e.what();
    return RX_PRECONDITION;
  } catch (const ramsey::SizeCapError& e) {
    t_last_error = e.what();
    return RX_CAP;
  } catch (const ramsey::BudgetError& e) {
    t_last_error = e.what();
    return RX_BUDGET;
  } catch (const ramsey::InternalError& e) {
    t_last_error = e.what();
    return RX_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return RX_INTERNAL;
  }
}

rx_status need(bool ok, const char* what) {
  if (!ok) {
    t_last_error = what;
    return RX_BAD_ARG;
  }
  return RX_OK;
}

bool colour_ok(int colour) { return colour >= 1 && colour <= 3; }

ramsey::Colour to_colour(int colour) {
  return static_cast<ramsey::Colour>(colour);
}

json matching_json(const ramsey::ConnectedMatching& m) {
  json edges = json::array();
  for (auto [u, v] : m.edges) edges.push_back({u, v});
  return json{{"colour", ramsey::colour_name(m.colour)},
              {"edges", edges},
              {"component", m.component},
              {"odd", m.odd},
              {"matched_vertices", m.matched_vertices()}};
}

json witness_json_of(const ramsey::StructureWitness& w) {
  return json{{"class", ramsey::structure_class_name(w.class_tag)},
              {"parts", w.parts}};
}

ramsey::ClassParams parse_class_params(const std::string& tag,
                                       const std::string& params_text) {
  json p = json::parse(params_text);
  auto rat = [&](const char* key) {
    if (p.contains(key) && p[key].is_number_integer()) {
      return ramsey::Rat(p[key].get<long long>());
    }
    return ramsey::parse_rational(p.at(key).get<std::string>());
  };
  auto num = [&](const char* key) { return p.at(key).get<long long>(); };
  if (tag == "H") {
    ramsey::HParams h;
    h.x1 = num("x1");
    h.x2 = num("x2");
    h.c1 = rat("c1");
    h.c2 = rat("c2");
    h.gamma1 = to_colour(p.value("gamma1", 1));
    h.gamma2 = to_colour(p.value("gamma2", 2));
    return h;
  }
  if (tag == "K") {
    ramsey::KParams k;
    k.x1 = num("x1");
    k.x2 = num("x2");
    k.x3 = num("x3");
    k.c = rat("c");
    return k;
  }
  if (tag == "Kstar") {
    ramsey::KstarParams ks;
    ks.x1 = num("x1");
    ks.x2 = num("x2");
    ks.y1 = num("y1");
    ks.y2 = num("y2");
    ks.z = num("z");
    ks.c = rat("c");
    return ks;
  }
  throw ramsey::PreconditionError("unknown structure class '" + tag + "'");
}

}  // namespace

extern "C" {

const char* rx_last_error(void) { return t_last_error.c_str(); }

void rx_string_free(char* text) { delete[] text; }
void rx_ints_free(int32_t* data) { delete[] data; }
void rx_graph_free(rx_graph* graph) { delete graph; }

rx_status rx_graph_parse(const char* text, rx_graph** out) {
  if (rx_status s = need(text && out, "null argument")) return s;
  return guarded([&] {
    *out = new rx_graph{ramsey::MultiColouredGraph::parse(text)};
    return RX_OK;
  });
}

rx_status rx_graph_format(const rx_graph* graph, char** out) {
  if (rx_status s = need(graph && out, "null argument")) return s;
  return guarded([&] {
    *out = dup_string(graph->g.format());
    return RX_OK;
  });
}

int32_t rx_graph_vertex_count(const rx_graph* graph) {
  return graph ? graph->g.vertex_count() : -1;
}

rx_status rx_construct_lb1(int32_t n_red, int32_t n_blue, int32_t n_green,
                           const char* policy, rx_graph** out) {
  if (rx_status s = need(policy && out, "null argument")) return s;
  return guarded([&] {
    std::string p = policy;
    ramsey::FillPolicy fill;
    if (p == "all-red") {
      fill = ramsey::FillPolicy::all_red;
    } else if (p == "all-blue") {
      fill = ramsey::FillPolicy::all_blue;
    } else if (p == "alternating") {
      fill = ramsey::FillPolicy::alternating;
    } else {
      t_last_error = "unknown policy '" + p + "'";
      return RX_BAD_ARG;
    }
    ramsey::LowerBoundSpec spec{n_red, n_blue, n_green};
    *out = new rx_graph{ramsey::build_construction_1(spec, fill)};
    return RX_OK;
  });
}

rx_status rx_construct_lb2(int32_t n_red, int32_t n_blue, int32_t n_green,
                           rx_graph** out) {
  if (rx_status s = need(out != nullptr, "null argument")) return s;
  return guarded([&] {
    ramsey::LowerBoundSpec spec{n_red, n_blue, n_green};
    *out = new rx_graph{ramsey::build_construction_2(spec)};
    return RX_OK;
  });
}

rx_status rx_gen_h(int64_t x1, int64_t x2, const char* c1, const char* c2,
                   int gamma1, int gamma2, uint64_t seed, rx_graph** out,
                   char** witness_json) {
  if (rx_status s = need(c1 && c2 && out && witness_json, "null argument")) {
    return s;
  }
  if (rx_status s = need(colour_ok(gamma1) && colour_ok(gamma2),
                         "colour must be 1, 2 or 3")) {
    return s;
  }
  return guarded([&] {
    ramsey::HParams params{x1, x2, ramsey::parse_rational(c1),
                           ramsey::parse_rational(c2), to_colour(gamma1),
                           to_colour(gamma2)};
    auto [g, w] = ramsey::gen_H(params, seed);
    *out = new rx_graph{std::move(g)};
    *witness_json = dup_string(witness_json_of(w).dump());
    return RX_OK;
  });
}

rx_status rx_gen_k(int64_t x1, int64_t x2, int64_t x3, const char* c,
                   uint64_t seed, rx_graph** out, char** witness_json) {
  if (rx_status s = need(c && out && witness_json, "null argument")) return s;
  return guarded([&] {
    ramsey::KParams params{x1, x2, x3, ramsey::parse_rational(c)};
    auto [g, w] = ramsey::gen_K(params, seed);
    *out = new rx_graph{std::move(g)};
    *witness_json = dup_string(witness_json_of(w).dump());
    return RX_OK;
  });
}

rx_status rx_gen_kstar(int64_t x1, int64_t x2, int64_t y1, int64_t y2,
                       int64_t z, const char* c, uint64_t seed, rx_graph** out,
                       char** witness_json) {
  if (rx_status s = need(c && out && witness_json, "null argument")) return s;
  return guarded([&] {
    ramsey::KstarParams params{x1, x2, y1, y2, z, ramsey::parse_rational(c)};
    auto [g, w] = ramsey::gen_Kstar(params, seed);
    *out = new rx_graph{std::move(g)};
    *witness_json = dup_string(witness_json_of(w).dump());
    return RX_OK;
  });
}

rx_status rx_find_cycle(const rx_graph* graph, int colour, int32_t length,
                        int32_t** vertices, size_t* length_out) {
  if (rx_status s =
          need(graph && vertices && length_out, "null argument")) {
    return s;
  }
  if (rx_status s = need(colour_ok(colour), "colour must be 1, 2 or 3")) {
    return s;
  }
  return guarded([&] {
    auto found =
        ramsey::find_cycle_exact(graph->g.slice(to_colour(colour)), length);
    if (!found) {
      t_last_error = "no cycle of the requested length";
      return RX_NOT_FOUND;
    }
    *vertices = dup_ints(found->vertices);
    *length_out = found->vertices.size();
    return RX_OK;
  });
}

rx_status rx_verify_no_cycles(const rx_graph* graph, int32_t red_len,
                              int32_t blue_len, int32_t green_len,
                              char** report_json) {
  if (rx_status s = need(graph && report_json, "null argument")) return s;
  return guarded([&] {
    json violations = json::array();
    struct Want {
      ramsey::Colour colour;
      int32_t length;
    };
    for (Want want : {Want{ramsey::Colour::red, red_len},
                      Want{ramsey::Colour::blue, blue_len},
                      Want{ramsey::Colour::green, green_len}}) {
      if (want.length == 0) continue;
      if (want.length > graph->g.vertex_count()) continue;
      auto found =
          ramsey::find_cycle_exact(graph->g.slice(want.colour), want.length);
      if (found) {
        violations.push_back({{"colour", ramsey::colour_name(want.colour)},
                              {"length", want.length},
                              {"vertices", found->vertices}});
      }
    }
    json report{{"clean", violations.empty()}, {"violations", violations}};
    *report_json = dup_string(report.dump());
    return RX_OK;
  });
}

rx_status rx_components(const rx_graph* graph, int colour, char** out) {
  if (rx_status s = need(graph && out, "null argument")) return s;
  if (rx_status s = need(colour_ok(colour), "colour must be 1, 2 or 3")) {
    return s;
  }
  return guarded([&] {
    json comps = json::array();
    for (const auto& comp :
         ramsey::components(graph->g.slice(to_colour(colour)))) {
      comps.push_back({{"vertices", comp.vertices},
                       {"bipartite", comp.bipartite},
                       {"odd", comp.odd()}});
    }
    *out = dup_string(json{{"components", comps}}.dump());
    return RX_OK;
  });
}

rx_status rx_max_connected_matching(const rx_graph* graph, int colour,
                                    int require_odd, char** out) {
  if (rx_status s = need(graph && out, "null argument")) return s;
  if (rx_status s = need(colour_ok(colour), "colour must be 1, 2 or 3")) {
    return s;
  }
  return guarded([&] {
    auto m = ramsey::max_connected_matching(graph->g.slice(to_colour(colour)),
                                            require_odd != 0);
    if (!m) {
      t_last_error = "no odd component";
      return RX_NOT_FOUND;
    }
    *out = dup_string(matching_json(*m).dump());
    return RX_OK;
  });
}

rx_status rx_decompose(const rx_graph* graph, int colour, int32_t m,
                       char** out) {
  if (rx_status s = need(graph && out, "null argument")) return s;
  if (rx_status s = need(colour_ok(colour), "colour must be 1, 2 or 3")) {
    return s;
  }
  return guarded([&] {
    ramsey::Decomposition d =
        ramsey::decompose(graph->g.slice(to_colour(colour)), m);
    json result{{"v_prime", d.v_prime}, {"v_dprime", d.v_dprime}, {"m", d.m}};
    *out = dup_string(result.dump());
    return RX_OK;
  });
}

rx_status rx_detect(const rx_graph* graph, const char* class_tag,
                    const char* params_json, char** witness_json) {
  if (rx_status s = need(graph && class_tag && params_json && witness_json,
                         "null argument")) {
    return s;
  }
  return guarded([&] {
    ramsey::ClassParams params = parse_class_params(class_tag, params_json);
    auto witness = ramsey::detect_structure(graph->g, params);
    if (!witness) {
      t_last_error = "no witness partition found";
      return RX_NOT_FOUND;
    }
    *witness_json = dup_string(witness_json_of(*witness).dump());
    return RX_OK;
  });
}

rx_status rx_reduce(const rx_graph* graph, const char* partition_text,
                    const char* eps, const char* xi, int heuristic,
                    char** out) {
  if (rx_status s =
          need(graph && partition_text && eps && xi && out, "null argument")) {
    return s;
  }
  return guarded([&] {
    ramsey::ClusterPartition partition =
        ramsey::ClusterPartition::parse(partition_text);
    ramsey::ReducedGraph reduced = ramsey::build_reduced_graph(
        graph->g, partition, ramsey::parse_rational(eps),
        ramsey::parse_rational(xi), heuristic != 0);
    int K = reduced.graph.vertex_count();
    json densities = json::object();
    for (ramsey::Colour c : ramsey::kColours) {
      json rows = json::array();
      for (int i = 0; i < K; ++i) {
        json row = json::array();
        for (int j = 0; j < K; ++j) {
          row.push_back(ramsey::format_rational(
              reduced.densities[ramsey::colour_index(c)][i][j]));
        }
        rows.push_back(row);
      }
      densities[ramsey::colour_name(c)] = rows;
    }
    json regular = json::array();
    for (int i = 0; i < K; ++i) {
      json row = json::array();
      for (int j = 0; j < K; ++j) {
        row.push_back(reduced.regular_pairs[i][j] != 0);
      }
      regular.push_back(row);
    }
    json result{{"reduced_graph", reduced.graph.format()},
                {"densities", densities},
                {"regular_pairs", regular},
                {"tentative", reduced.tentative}};
    *out = dup_string(result.dump());
    return RX_OK;
  });
}

rx_status rx_blow_up(const rx_graph* graph, const char* partition_text,
                     const char* eps, const char* xi, int colour,
                     const int32_t* matching_pairs, size_t n_pairs,
                     int64_t target_len, int odd_target, int32_t** vertices,
                     size_t* length_out) {
  if (rx_status s = need(graph && partition_text && eps && xi &&
                             matching_pairs && vertices && length_out,
                         "null argument")) {
    return s;
  }
  if (rx_status s = need(colour_ok(colour), "colour must be 1, 2 or 3")) {
    return s;
  }
  return guarded([&] {
    ramsey::ClusterPartition partition =
        ramsey::ClusterPartition::parse(partition_text);
    ramsey::ReducedGraph reduced = ramsey::build_reduced_graph(
        graph->g, partition, ramsey::parse_rational(eps),
        ramsey::parse_rational(xi),
        /*heuristic=*/partition.class_size() > 12);
    ramsey::Colour c = to_colour(colour);
    ramsey::ConnectedMatching matching;
    matching.colour = c;
    for (size_t i = 0; i < n_pairs; ++i) {
      matching.edges.push_back(
          {matching_pairs[2 * i], matching_pairs[2 * i + 1]});
    }
    // Fill in the component containing the matching.
    auto comps = ramsey::components(reduced.graph.slice(c));
    for (const auto& comp : comps) {
      bool contains = !matching.edges.empty() &&
                      std::binary_search(comp.vertices.begin(),
                                         comp.vertices.end(),
                                         matching.edges[0].first);
      if (contains) {
        matching.component = comp.vertices;
        matching.odd = comp.odd();
        break;
      }
    }
    ramsey::CycleCertificate cycle = ramsey::blow_up_cycle(
        graph->g, reduced, matching, target_len, odd_target != 0);
    *vertices = dup_ints(cycle.vertices);
    *length_out = cycle.vertices.size();
    return RX_OK;
  });
}

rx_status rx_even_floor(const char* x, int64_t* out) {
  if (rx_status s = need(x && out, "null argument")) return s;
  return guarded([&] {
    *out = ramsey::even_floor(ramsey::parse_rational(x));
    return RX_OK;
  });
}

rx_status rx_odd_floor(const char* x, int64_t* out) {
  if (rx_status s = need(x && out, "null argument")) return s;
  return guarded([&] {
    *out = ramsey::odd_floor(ramsey::parse_rational(x));
    return RX_OK;
  });
}

rx_status rx_formula_a(int32_t n_red, int32_t n_blue, int32_t n_green,
                       int64_t* out) {
  if (rx_status s = need(out != nullptr, "null argument")) return s;
  return guarded([&] {
    ramsey::CycleTriple t{n_red, n_blue, n_green,
                          ramsey::ParityProfile::even_even_odd};
    *out = ramsey::theorem_A_value(t);
    return RX_OK;
  });
}

rx_status rx_formula_c(int32_t n_red, int32_t n_blue, int32_t n_green,
                       int64_t* out) {
  if (rx_status s = need(out != nullptr, "null argument")) return s;
  return guarded([&] {
    ramsey::CycleTriple t{n_red, n_blue, n_green,
                          ramsey::ParityProfile::even_odd_odd};
    *out = ramsey::theorem_C_value(t);
    return RX_OK;
  });
}

rx_status rx_certify_lower_bound(int32_t n_red, int32_t n_blue,
                                 int32_t n_green, rx_graph** witness,
                                 int32_t* witness_order) {
  if (rx_status s = need(witness && witness_order, "null argument")) return s;
  return guarded([&] {
    ramsey::CycleTriple t{n_red, n_blue, n_green,
                          ramsey::ParityProfile::even_even_odd};
    ramsey::SearchOutcome outcome = ramsey::certify_lower_bound(t);
    *witness_order = outcome.N;
    *witness = new rx_graph{std::move(*outcome.witness)};
    return RX_OK;
  });
}

rx_status rx_search_ramsey(int32_t n_red, int32_t n_blue, int32_t n_green,
                           const char* profile, int32_t n_vertices,
                           int64_t node_budget, int32_t threads,
                           int use_symmetry, rx_graph** witness,
                           int* exhausted, char** stats_text) {
  if (rx_status s = need(profile && witness && exhausted && stats_text,
                         "null argument")) {
    return s;
  }
  return guarded([&] {
    std::string p = profile;
    ramsey::ParityProfile parity;
    if (p == "eeo") {
      parity = ramsey::ParityProfile::even_even_odd;
    } else if (p == "eoo") {
      parity = ramsey::ParityProfile::even_odd_odd;
    } else if (p == "free") {
      parity = ramsey::ParityProfile::free_profile;
    } else {
      t_last_error = "unknown profile '" + p + "' (want eeo, eoo or free)";
      return RX_BAD_ARG;
    }
    ramsey::CycleTriple t{n_red, n_blue, n_green, parity};
    ramsey::SearchOptions options;
    if (node_budget > 0) options.node_budget = node_budget;
    options.threads = threads > 0 ? threads : 1;
    options.symmetry_breaking = use_symmetry != 0;
    ramsey::SearchOutcome outcome = ramsey::search_ramsey(t, n_vertices,
                                                          options);
    *exhausted = outcome.exhausted ? 1 : 0;
    *witness = outcome.witness
                   ? new rx_graph{std::move(*outcome.witness)}
                   : nullptr;
    *stats_text = dup_string(outcome.stats.format());
    return RX_OK;
  });
}

rx_status rx_side_conditions(const char* alpha1, const char* alpha2,
                             const char* alpha3, const char* eta, int64_t k,
                             char** text) {
  if (rx_status s =
          need(alpha1 && alpha2 && alpha3 && eta && text, "null argument")) {
    return s;
  }
  return guarded([&] {
    ramsey::Parameters params;
    params.alpha1 = ramsey::parse_rational(alpha1);
    params.alpha2 = ramsey::parse_rational(alpha2);
    params.alpha3 = ramsey::parse_rational(alpha3);
    params.eta = ramsey::parse_rational(eta);
    params.k = k;
    ramsey::SideConditionReport report =
        ramsey::theorem_B_side_conditions(params);
    std::string out = report.text;
    if (k > 0) {
      out += "K window at k=" + std::to_string(k) + ": [" +
             std::to_string(ramsey::ceil_rat(report.window_lo * ramsey::Rat(k))) +
             ", " +
             std::to_string(ramsey::floor_rat(report.window_hi * ramsey::Rat(k))) +
             "]\n";
    }
    *text = dup_string(out);
    return RX_OK;
  });
}

}  // extern "C"
