// Command-line front end for the ramsey shared library. Talks to the core
// exclusively through the C API in ramsey/capi.h.
//
// Exit codes: 0 success, 1 domain outcome (not found / precondition /
// budget), 2 usage or input errors.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/capi.h"

using json = nlohmann::json;

namespace {

struct GraphDeleter {
  void operator()(rx_graph* g) const { rx_graph_free(g); }
};
using GraphPtr = std::unique_ptr<rx_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { rx_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct IntsDeleter {
  void operator()(int32_t* p) const { rx_ints_free(p); }
};
using IntsPtr = std::unique_ptr<int32_t, IntsDeleter>;

[[noreturn]] void fail(rx_status status) {
  std::cerr << "error: " << rx_last_error() << "\n";
  switch (status) {
    case RX_NOT_FOUND:
    case RX_PRECONDITION:
    case RX_BUDGET:
      std::exit(1);
    case RX_INTERNAL:
      std::cerr << "INTERNAL ERROR: this indicates a bug in the library\n";
      std::exit(1);
    default:
      std::exit(2);
  }
}

void check(rx_status status) {
  if (status != RX_OK) fail(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(2);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    std::exit(2);
  }
  out << content;
}

GraphPtr load_graph(const std::string& path) {
  std::string text = read_file(path);
  rx_graph* g = nullptr;
  check(rx_graph_parse(text.c_str(), &g));
  return GraphPtr(g);
}

std::string format_graph(const rx_graph* g) {
  char* text = nullptr;
  check(rx_graph_format(g, &text));
  StringPtr guard(text);
  return std::string(text);
}

int parse_colour(const std::string& s) {
  if (s == "r" || s == "red") return 1;
  if (s == "b" || s == "blue") return 2;
  if (s == "g" || s == "green") return 3;
  std::cerr << "error: unknown colour '" << s << "'\n";
  std::exit(2);
}

const char* colour_word(int c) {
  switch (c) {
    case 1:
      return "red";
    case 2:
      return "blue";
    case 3:
      return "green";
  }
  return "?";
}

uint64_t effective_seed(uint64_t flag_seed) {
  if (const char* env = std::getenv("RAMSEY_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return flag_seed;
}

json vertices_json(const int32_t* data, size_t count) {
  json arr = json::array();
  for (size_t i = 0; i < count; ++i) arr.push_back(data[i]);
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for mixed-parity cycle Ramsey numbers: extremal "
               "colourings, exhaustive search, connected matchings, "
               "structure detection and blow-up machinery"};
  app.require_subcommand(1);

  // ---- construct -----------------------------------------------------------
  auto* construct = app.add_subcommand("construct",
                                       "Build extremal colourings and "
                                       "structure-class fixtures");
  construct->require_subcommand(1);

  struct {
    int red = 4, blue = 4, green = 3;
    std::string policy = "all-red";
    std::string out;
    bool as_json = false;
  } lb;
  auto add_lb_flags = [&](CLI::App* cmd, bool with_policy) {
    cmd->add_option("--red", lb.red, "red cycle length (even)")->required();
    cmd->add_option("--blue", lb.blue, "blue cycle length (even)")->required();
    cmd->add_option("--green", lb.green, "green cycle length (odd)")
        ->required();
    if (with_policy) {
      cmd->add_option("--policy", lb.policy,
                      "V3/V4 interior: all-red, all-blue or alternating");
    }
    cmd->add_option("-o,--out", lb.out, "output file (default stdout)");
    cmd->add_flag("--json", lb.as_json, "machine-readable output");
  };
  auto* lb1 = construct->add_subcommand("lb1", "first lower-bound colouring");
  add_lb_flags(lb1, true);
  auto* lb2 = construct->add_subcommand("lb2", "second lower-bound colouring");
  add_lb_flags(lb2, false);

  struct {
    int64_t x1 = 2, x2 = 2, x3 = 2, y1 = 2, y2 = 2, z = 0;
    std::string c = "0", c1 = "0", c2 = "0";
    std::string gamma1 = "r", gamma2 = "b";
    uint64_t seed = 1;
    std::string out, witness_out;
    bool as_json = false;
  } gen;
  auto* genh = construct->add_subcommand("genH", "class H fixture");
  genh->add_option("--x1", gen.x1)->required();
  genh->add_option("--x2", gen.x2)->required();
  genh->add_option("--c1", gen.c1, "almost-complete budget (rational)");
  genh->add_option("--c2", gen.c2, "sparsity/completeness slack (rational)");
  genh->add_option("--gamma1", gen.gamma1, "first colour (r|b|g)");
  genh->add_option("--gamma2", gen.gamma2, "second colour (r|b|g)");
  auto* genk = construct->add_subcommand("genK", "class K fixture");
  genk->add_option("--x1", gen.x1)->required();
  genk->add_option("--x2", gen.x2)->required();
  genk->add_option("--x3", gen.x3)->required();
  genk->add_option("--c", gen.c, "almost-complete budget (rational)");
  auto* genks = construct->add_subcommand("genKstar", "class K* fixture");
  genks->add_option("--x1", gen.x1)->required();
  genks->add_option("--x2", gen.x2)->required();
  genks->add_option("--y1", gen.y1)->required();
  genks->add_option("--y2", gen.y2)->required();
  genks->add_option("--z", gen.z, "floor for |Y1|+|Y2|");
  genks->add_option("--c", gen.c, "almost-complete budget (rational)");
  for (CLI::App* cmd : {genh, genk, genks}) {
    cmd->add_option("--seed", gen.seed, "generator seed");
    cmd->add_option("-o,--out", gen.out, "output file (default stdout)");
    cmd->add_option("--witness-out", gen.witness_out,
                    "write the planted witness JSON here");
    cmd->add_flag("--json", gen.as_json, "machine-readable output");
  }

  // ---- verify --------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "Check a colouring for forbidden monochromatic cycles");
  struct {
    std::string graph;
    std::string forbid;
    bool as_json = false;
  } ver;
  verify->add_option("--graph", ver.graph, "graph file")->required();
  verify->add_option("--forbid", ver.forbid,
                     "lengths per colour, e.g. r:4,b:4,g:3 (subset allowed)")
      ->required();
  verify->add_flag("--json", ver.as_json, "machine-readable output");

  // ---- search --------------------------------------------------------------
  auto* search = app.add_subcommand("search", "Exhaustive Ramsey search");
  search->require_subcommand(1);
  auto* search_ramsey = search->add_subcommand(
      "ramsey", "search three-colourings of K_N avoiding the given cycles");
  struct {
    int red = 4, blue = 4, green = 3;
    std::string profile = "free";
    int n = 0;
    int64_t budget = 1'000'000'000;
    int threads = 1;
    bool no_symmetry = false;
    std::string out;
    bool as_json = false;
  } sr;
  search_ramsey->add_option("--red", sr.red)->required();
  search_ramsey->add_option("--blue", sr.blue)->required();
  search_ramsey->add_option("--green", sr.green)->required();
  search_ramsey->add_option("--profile", sr.profile, "eeo, eoo or free");
  search_ramsey->add_option("-N,--n", sr.n, "order of the complete graph")
      ->required();
  search_ramsey->add_option("--budget", sr.budget, "node budget");
  search_ramsey->add_option("--threads", sr.threads,
                            "worker threads (stats totals stay deterministic "
                            "for a fixed thread count)");
  search_ramsey->add_flag("--no-symmetry", sr.no_symmetry,
                          "disable symmetry breaking");
  search_ramsey->add_option("-o,--out", sr.out, "write a found witness here");
  search_ramsey->add_flag("--json", sr.as_json, "machine-readable output");

  // ---- find ----------------------------------------------------------------
  auto* find = app.add_subcommand("find",
                                  "Search a colour slice for cycles, "
                                  "matchings or components");
  find->require_subcommand(1);
  struct {
    std::string graph;
    std::string colour = "r";
    int length = 3;
    bool odd = false;
    bool as_json = false;
  } fnd;
  auto* find_cycle = find->add_subcommand("cycle", "exact-length cycle");
  find_cycle->add_option("--graph", fnd.graph)->required();
  find_cycle->add_option("--colour", fnd.colour)->required();
  find_cycle->add_option("--length", fnd.length)->required();
  find_cycle->add_flag("--json", fnd.as_json);
  auto* find_matching =
      find->add_subcommand("matching", "maximum connected matching");
  find_matching->add_option("--graph", fnd.graph)->required();
  find_matching->add_option("--colour", fnd.colour)->required();
  find_matching->add_flag("--odd", fnd.odd,
                          "restrict to odd (non-bipartite) components");
  find_matching->add_flag("--json", fnd.as_json);
  auto* find_component = find->add_subcommand("component", "components");
  find_component->add_option("--graph", fnd.graph)->required();
  find_component->add_option("--colour", fnd.colour)->required();
  find_component->add_flag("--json", fnd.as_json);

  // ---- decompose -----------------------------------------------------------
  auto* decompose = app.add_subcommand(
      "decompose", "Bipartite/odd component decomposition of a colour slice");
  struct {
    std::string graph;
    std::string colour = "g";
    int m = 3;
    bool as_json = false;
  } dec;
  decompose->add_option("--graph", dec.graph)->required();
  decompose->add_option("--colour", dec.colour)->required();
  decompose->add_option("--m", dec.m, "matching threshold")->required();
  decompose->add_flag("--json", dec.as_json);

  // ---- detect --------------------------------------------------------------
  auto* detect = app.add_subcommand("detect",
                                    "Decide membership in a structure class");
  detect->require_subcommand(1);
  struct {
    std::string graph;
    int64_t x1 = 1, x2 = 1, x3 = 1, y1 = 1, y2 = 1, z = 0;
    std::string c = "0", c1 = "0", c2 = "0";
    std::string gamma1 = "r", gamma2 = "b";
    bool as_json = false;
  } det;
  auto* det_h = detect->add_subcommand("H");
  det_h->add_option("--graph", det.graph)->required();
  det_h->add_option("--x1", det.x1)->required();
  det_h->add_option("--x2", det.x2)->required();
  det_h->add_option("--c1", det.c1);
  det_h->add_option("--c2", det.c2);
  det_h->add_option("--gamma1", det.gamma1);
  det_h->add_option("--gamma2", det.gamma2);
  auto* det_k = detect->add_subcommand("K");
  det_k->add_option("--graph", det.graph)->required();
  det_k->add_option("--x1", det.x1)->required();
  det_k->add_option("--x2", det.x2)->required();
  det_k->add_option("--x3", det.x3)->required();
  det_k->add_option("--c", det.c);
  auto* det_ks = detect->add_subcommand("Kstar");
  det_ks->add_option("--graph", det.graph)->required();
  det_ks->add_option("--x1", det.x1)->required();
  det_ks->add_option("--x2", det.x2)->required();
  det_ks->add_option("--y1", det.y1)->required();
  det_ks->add_option("--y2", det.y2)->required();
  det_ks->add_option("--z", det.z);
  det_ks->add_option("--c", det.c);
  for (CLI::App* cmd : {det_h, det_k, det_ks}) {
    cmd->add_flag("--json", det.as_json);
  }

  // ---- reduce --------------------------------------------------------------
  auto* reduce = app.add_subcommand(
      "reduce", "Multicoloured reduced graph of a supplied partition");
  struct {
    std::string graph, partition;
    std::string eps, xi;
    bool heuristic = false;
    std::string out;
    bool as_json = false;
  } red;
  reduce->add_option("--graph", red.graph)->required();
  reduce->add_option("--partition", red.partition, "partition file")
      ->required();
  reduce->add_option("--eps", red.eps, "regularity tolerance (rational)")
      ->required();
  reduce->add_option("--xi", red.xi, "density threshold (rational)")
      ->required();
  reduce->add_flag("--heuristic", red.heuristic,
                   "sampled regularity checks beyond the exhaustive cap");
  reduce->add_option("-o,--out", red.out, "output file (default stdout)");
  reduce->add_flag("--json", red.as_json);

  // ---- blowup --------------------------------------------------------------
  auto* blowup = app.add_subcommand(
      "blowup", "Blow a reduced-graph connected matching up into a cycle");
  struct {
    std::string graph, partition;
    std::string eps, xi;
    std::string colour = "r";
    std::string matching;
    int64_t target = 0;
    std::string parity = "even";
    bool as_json = false;
  } blw;
  blowup->add_option("--graph", blw.graph)->required();
  blowup->add_option("--partition", blw.partition)->required();
  blowup->add_option("--eps", blw.eps)->required();
  blowup->add_option("--xi", blw.xi)->required();
  blowup->add_option("--colour", blw.colour)->required();
  blowup->add_option("--matching", blw.matching,
                     "cluster pairs, e.g. 0-1,2-3")
      ->required();
  blowup->add_option("--target", blw.target, "cycle length")->required();
  blowup->add_option("--parity", blw.parity, "even or odd")->required();
  blowup->add_flag("--json", blw.as_json);

  // ---- formula -------------------------------------------------------------
  auto* formula = app.add_subcommand("formula",
                                     "Closed-form Ramsey values");
  formula->require_subcommand(1);
  struct {
    int red = 4, blue = 4, green = 3;
    bool as_json = false;
  } frm;
  auto* formula_a = formula->add_subcommand("A", "max{2n+m-3, n/2+m/2+l-2}");
  auto* formula_c = formula->add_subcommand("C",
                                            "max{4n, n+2m, n+2l} - 3");
  for (CLI::App* cmd : {formula_a, formula_c}) {
    cmd->add_option("--red", frm.red)->required();
    cmd->add_option("--blue", frm.blue)->required();
    cmd->add_option("--green", frm.green)->required();
    cmd->add_flag("--json", frm.as_json);
  }

  CLI11_PARSE(app, argc, argv);

  // ---- dispatch ------------------------------------------------------------
  if (lb1->parsed() || lb2->parsed()) {
    rx_graph* out = nullptr;
    if (lb1->parsed()) {
      check(rx_construct_lb1(lb.red, lb.blue, lb.green, lb.policy.c_str(),
                             &out));
    } else {
      check(rx_construct_lb2(lb.red, lb.blue, lb.green, &out));
    }
    GraphPtr guard(out);
    std::string text = format_graph(out);
    if (lb.as_json) {
      json j{{"vertices", rx_graph_vertex_count(out)}, {"graph", text}};
      write_output(lb.out, j.dump() + "\n");
    } else {
      write_output(lb.out, text);
    }
    return 0;
  }

  if (genh->parsed() || genk->parsed() || genks->parsed()) {
    rx_graph* out = nullptr;
    char* witness = nullptr;
    uint64_t seed = effective_seed(gen.seed);
    if (genh->parsed()) {
      check(rx_gen_h(gen.x1, gen.x2, gen.c1.c_str(), gen.c2.c_str(),
                     parse_colour(gen.gamma1), parse_colour(gen.gamma2), seed,
                     &out, &witness));
    } else if (genk->parsed()) {
      check(rx_gen_k(gen.x1, gen.x2, gen.x3, gen.c.c_str(), seed, &out,
                     &witness));
    } else {
      check(rx_gen_kstar(gen.x1, gen.x2, gen.y1, gen.y2, gen.z, gen.c.c_str(),
                         seed, &out, &witness));
    }
    GraphPtr graph_guard(out);
    StringPtr witness_guard(witness);
    std::string text = format_graph(out);
    if (!gen.witness_out.empty()) {
      write_output(gen.witness_out, std::string(witness) + "\n");
    }
    if (gen.as_json) {
      json j{{"vertices", rx_graph_vertex_count(out)},
             {"graph", text},
             {"witness", json::parse(witness)}};
      write_output(gen.out, j.dump() + "\n");
    } else {
      write_output(gen.out, text);
    }
    return 0;
  }

  if (verify->parsed()) {
    GraphPtr g = load_graph(ver.graph);
    int lens[4] = {0, 0, 0, 0};
    std::stringstream spec(ver.forbid);
    std::string item;
    while (std::getline(spec, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) {
        std::cerr << "error: bad --forbid item '" << item << "'\n";
        return 2;
      }
      int colour = parse_colour(item.substr(0, colon));
      lens[colour] = std::atoi(item.c_str() + colon + 1);
      if (lens[colour] < 3) {
        std::cerr << "error: bad cycle length in '" << item << "'\n";
        return 2;
      }
    }
    char* report_text = nullptr;
    check(rx_verify_no_cycles(g.get(), lens[1], lens[2], lens[3],
                              &report_text));
    StringPtr guard(report_text);
    json report = json::parse(report_text);
    if (ver.as_json) {
      std::cout << report.dump() << "\n";
    } else if (report["clean"].get<bool>()) {
      std::cout << "no forbidden cycles\n";
    } else {
      for (const auto& violation : report["violations"]) {
        std::cout << violation["colour"].get<std::string>() << " cycle of length "
                  << violation["length"] << ":";
        for (const auto& v : violation["vertices"]) std::cout << " " << v;
        std::cout << "\n";
      }
    }
    return report["clean"].get<bool>() ? 0 : 1;
  }

  if (search_ramsey->parsed()) {
    rx_graph* witness = nullptr;
    int exhausted = 0;
    char* stats = nullptr;
    check(rx_search_ramsey(sr.red, sr.blue, sr.green, sr.profile.c_str(),
                           sr.n, sr.budget, sr.threads, sr.no_symmetry ? 0 : 1,
                           &witness, &exhausted, &stats));
    GraphPtr witness_guard(witness);
    StringPtr stats_guard(stats);
    if (sr.as_json) {
      json j{{"n", sr.n},
             {"outcome", witness ? "witness" : "exhausted"},
             {"stats", stats}};
      if (witness) j["witness"] = format_graph(witness);
      std::cout << j.dump() << "\n";
    } else {
      if (witness) {
        std::cout << "witness found on " << sr.n
                  << " vertices (proves R > " << sr.n << ")\n";
      } else {
        std::cout << "exhausted: no witness on " << sr.n
                  << " vertices (proves R <= " << sr.n << ")\n";
      }
      std::cout << stats;
    }
    if (witness && !sr.out.empty()) {
      write_output(sr.out, format_graph(witness));
    }
    return 0;
  }

  if (find_cycle->parsed()) {
    GraphPtr g = load_graph(fnd.graph);
    int32_t* vertices = nullptr;
    size_t count = 0;
    rx_status status = rx_find_cycle(g.get(), parse_colour(fnd.colour),
                                     fnd.length, &vertices, &count);
    if (status == RX_NOT_FOUND) {
      if (fnd.as_json) {
        std::cout << json{{"found", false}}.dump() << "\n";
      } else {
        std::cout << "no " << colour_word(parse_colour(fnd.colour))
                  << " cycle of length " << fnd.length << "\n";
      }
      return 1;
    }
    check(status);
    IntsPtr guard(vertices);
    if (fnd.as_json) {
      std::cout << json{{"found", true},
                        {"vertices", vertices_json(vertices, count)}}
                       .dump()
                << "\n";
    } else {
      std::cout << "cycle:";
      for (size_t i = 0; i < count; ++i) std::cout << " " << vertices[i];
      std::cout << "\n";
    }
    return 0;
  }

  if (find_matching->parsed()) {
    GraphPtr g = load_graph(fnd.graph);
    char* text = nullptr;
    rx_status status = rx_max_connected_matching(
        g.get(), parse_colour(fnd.colour), fnd.odd ? 1 : 0, &text);
    if (status == RX_NOT_FOUND) {
      if (fnd.as_json) {
        std::cout << json{{"found", false}, {"reason", "no odd component"}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "no odd component\n";
      }
      return 1;
    }
    check(status);
    StringPtr guard(text);
    if (fnd.as_json) {
      std::cout << text << "\n";
    } else {
      json m = json::parse(text);
      std::cout << "connected matching with " << m["edges"].size()
                << " edges (" << m["matched_vertices"] << " vertices, "
                << (m["odd"].get<bool>() ? "odd" : "even") << " component):";
      for (const auto& e : m["edges"]) {
        std::cout << " " << e[0] << "-" << e[1];
      }
      std::cout << "\n";
    }
    return 0;
  }

  if (find_component->parsed()) {
    GraphPtr g = load_graph(fnd.graph);
    char* text = nullptr;
    check(rx_components(g.get(), parse_colour(fnd.colour), &text));
    StringPtr guard(text);
    if (fnd.as_json) {
      std::cout << text << "\n";
    } else {
      json comps = json::parse(text);
      for (const auto& comp : comps["components"]) {
        std::cout << (comp["bipartite"].get<bool>() ? "bipartite" : "odd")
                  << " component:";
        for (const auto& v : comp["vertices"]) std::cout << " " << v;
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (decompose->parsed()) {
    GraphPtr g = load_graph(dec.graph);
    char* text = nullptr;
    check(rx_decompose(g.get(), parse_colour(dec.colour), dec.m, &text));
    StringPtr guard(text);
    if (dec.as_json) {
      std::cout << text << "\n";
    } else {
      json d = json::parse(text);
      std::cout << "V':";
      for (const auto& v : d["v_prime"]) std::cout << " " << v;
      std::cout << "\nV'':";
      for (const auto& v : d["v_dprime"]) std::cout << " " << v;
      std::cout << "\n";
    }
    return 0;
  }

  if (det_h->parsed() || det_k->parsed() || det_ks->parsed()) {
    GraphPtr g = load_graph(det.graph);
    json params;
    const char* tag = "H";
    if (det_h->parsed()) {
      params = {{"x1", det.x1},     {"x2", det.x2},
                {"c1", det.c1},     {"c2", det.c2},
                {"gamma1", parse_colour(det.gamma1)},
                {"gamma2", parse_colour(det.gamma2)}};
    } else if (det_k->parsed()) {
      tag = "K";
      params = {{"x1", det.x1}, {"x2", det.x2}, {"x3", det.x3}, {"c", det.c}};
    } else {
      tag = "Kstar";
      params = {{"x1", det.x1}, {"x2", det.x2}, {"y1", det.y1},
                {"y2", det.y2}, {"z", det.z},   {"c", det.c}};
    }
    char* witness = nullptr;
    rx_status status =
        rx_detect(g.get(), tag, params.dump().c_str(), &witness);
    if (status == RX_NOT_FOUND) {
      if (det.as_json) {
        std::cout << json{{"found", false}}.dump() << "\n";
      } else {
        std::cout << "no witness partition\n";
      }
      return 1;
    }
    check(status);
    StringPtr guard(witness);
    if (det.as_json) {
      std::cout << witness << "\n";
    } else {
      json w = json::parse(witness);
      std::cout << "witness for class " << w["class"].get<std::string>()
                << ":\n";
      for (size_t i = 0; i < w["parts"].size(); ++i) {
        std::cout << "  part " << i + 1 << ":";
        for (const auto& v : w["parts"][i]) std::cout << " " << v;
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (reduce->parsed()) {
    GraphPtr g = load_graph(red.graph);
    std::string partition = read_file(red.partition);
    char* text = nullptr;
    check(rx_reduce(g.get(), partition.c_str(), red.eps.c_str(),
                    red.xi.c_str(), red.heuristic ? 1 : 0, &text));
    StringPtr guard(text);
    if (red.as_json) {
      write_output(red.out, std::string(text) + "\n");
    } else {
      json r = json::parse(text);
      std::string out = r["reduced_graph"].get<std::string>();
      if (r["tentative"].get<bool>()) {
        out += "# regularity verdicts are tentative (heuristic mode)\n";
      }
      write_output(red.out, out);
    }
    return 0;
  }

  if (blowup->parsed()) {
    GraphPtr g = load_graph(blw.graph);
    std::string partition = read_file(blw.partition);
    std::vector<int32_t> pairs;
    std::stringstream items(blw.matching);
    std::string item;
    while (std::getline(items, item, ',')) {
      auto dash = item.find('-');
      if (dash == std::string::npos) {
        std::cerr << "error: bad --matching item '" << item << "'\n";
        return 2;
      }
      pairs.push_back(std::atoi(item.substr(0, dash).c_str()));
      pairs.push_back(std::atoi(item.c_str() + dash + 1));
    }
    if (pairs.empty()) {
      std::cerr << "error: empty --matching\n";
      return 2;
    }
    if (blw.parity != "even" && blw.parity != "odd") {
      std::cerr << "error: --parity must be even or odd\n";
      return 2;
    }
    int32_t* vertices = nullptr;
    size_t count = 0;
    check(rx_blow_up(g.get(), partition.c_str(), blw.eps.c_str(),
                     blw.xi.c_str(), parse_colour(blw.colour), pairs.data(),
                     pairs.size() / 2, blw.target,
                     blw.parity == "odd" ? 1 : 0, &vertices, &count));
    IntsPtr guard(vertices);
    if (blw.as_json) {
      std::cout << json{{"vertices", vertices_json(vertices, count)}}.dump()
                << "\n";
    } else {
      std::cout << "cycle:";
      for (size_t i = 0; i < count; ++i) std::cout << " " << vertices[i];
      std::cout << "\n";
    }
    return 0;
  }

  if (formula_a->parsed() || formula_c->parsed()) {
    int64_t value = 0;
    if (formula_a->parsed()) {
      check(rx_formula_a(frm.red, frm.blue, frm.green, &value));
    } else {
      check(rx_formula_c(frm.red, frm.blue, frm.green, &value));
    }
    if (frm.as_json) {
      std::cout << json{{"value", value}}.dump() << "\n";
    } else {
      std::cout << value << "\n";
    }
    return 0;
  }

  std::cerr << "error: no subcommand\n";
  return 2;
}
