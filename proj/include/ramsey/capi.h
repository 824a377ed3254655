#ifndef RAMSEY_CAPI_H
#define RAMSEY_CAPI_H

/*
 * C API of the ramsey shared library. All functions return an rx_status;
 * outputs are written through pointers. Strings and index arrays returned
 * by the library are owned by the caller and released with rx_string_free
 * / rx_ints_free. Graphs are opaque handles released with rx_graph_free.
 *
 * Colours are 1 = red, 2 = blue, 3 = green throughout. Rational parameters
 * are passed as strings ("1/200", "0.005", "3"). Structured results are
 * JSON text.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RX_API __declspec(dllexport)
#else
#define RX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rx_status {
  RX_OK = 0,
  RX_NOT_FOUND = 1,    /* domain negative: no such cycle/witness/component */
  RX_PRECONDITION = 2, /* a stated hypothesis or parameter range failed */
  RX_PARSE = 3,        /* malformed input text */
  RX_BUDGET = 4,       /* bounded search ran out of nodes */
  RX_CAP = 5,          /* exhaustive mode requested beyond its size cap */
  RX_BAD_ARG = 6,      /* null pointer or unknown enum value */
  RX_INTERNAL = 7      /* a guaranteed construction failed: a bug */
} rx_status;

typedef struct rx_graph rx_graph;

/* Thread-local message describing the most recent failure. */
RX_API const char* rx_last_error(void);

RX_API void rx_string_free(char* text);
RX_API void rx_ints_free(int32_t* data);
RX_API void rx_graph_free(rx_graph* graph);

/* --- graph I/O --- */

RX_API rx_status rx_graph_parse(const char* text, rx_graph** out);
RX_API rx_status rx_graph_format(const rx_graph* graph, char** out);
RX_API int32_t rx_graph_vertex_count(const rx_graph* graph);

/* --- extremal constructions and class generators --- */

/* policy: "all-red", "all-blue" or "alternating". */
RX_API rx_status rx_construct_lb1(int32_t n_red, int32_t n_blue,
                                  int32_t n_green, const char* policy,
                                  rx_graph** out);
RX_API rx_status rx_construct_lb2(int32_t n_red, int32_t n_blue,
                                  int32_t n_green, rx_graph** out);

/* witness_json receives {"class": ..., "parts": [[...], ...]}. */
RX_API rx_status rx_gen_h(int64_t x1, int64_t x2, const char* c1,
                          const char* c2, int gamma1, int gamma2,
                          uint64_t seed, rx_graph** out, char** witness_json);
RX_API rx_status rx_gen_k(int64_t x1, int64_t x2, int64_t x3, const char* c,
                          uint64_t seed, rx_graph** out, char** witness_json);
RX_API rx_status rx_gen_kstar(int64_t x1, int64_t x2, int64_t y1, int64_t y2,
                              int64_t z, const char* c, uint64_t seed,
                              rx_graph** out, char** witness_json);

/* --- cycle search and verification --- */

/* RX_OK: cycle written to the two output slots. RX_NOT_FOUND: none. */
RX_API rx_status rx_find_cycle(const rx_graph* graph, int colour,
                               int32_t length, int32_t** vertices,
                               size_t* length_out);

/* Forbidden lengths per colour; 0 skips a colour. Always RX_OK on a
 * completed check; report_json = {"clean": bool, "violations": [...]}. */
RX_API rx_status rx_verify_no_cycles(const rx_graph* graph, int32_t red_len,
                                     int32_t blue_len, int32_t green_len,
                                     char** report_json);

/* --- components and matchings --- */

RX_API rx_status rx_components(const rx_graph* graph, int colour,
                               char** json);

/* RX_NOT_FOUND when require_odd is set and no component is odd. */
RX_API rx_status rx_max_connected_matching(const rx_graph* graph, int colour,
                                           int require_odd, char** json);

/* --- decomposition --- */

RX_API rx_status rx_decompose(const rx_graph* graph, int colour, int32_t m,
                              char** json);

/* --- structure detection --- */

/* class_tag: "H", "K" or "Kstar". params_json carries the class
 * parameters, e.g. {"x1":2,"x2":2,"x3":3,"c":"0"} for K;
 * H adds "c1","c2","gamma1","gamma2"; Kstar has x1,x2,y1,y2,z,c. */
RX_API rx_status rx_detect(const rx_graph* graph, const char* class_tag,
                           const char* params_json, char** witness_json);

/* --- regularity / blow-up --- */

RX_API rx_status rx_reduce(const rx_graph* graph, const char* partition_text,
                           const char* eps, const char* xi, int heuristic,
                           char** json);

/* matching_pairs: 2*n_pairs cluster indices (a0,b0,a1,b1,...). */
RX_API rx_status rx_blow_up(const rx_graph* graph,
                            const char* partition_text, const char* eps,
                            const char* xi, int colour,
                            const int32_t* matching_pairs, size_t n_pairs,
                            int64_t target_len, int odd_target,
                            int32_t** vertices, size_t* length_out);

/* --- formulas and search --- */

RX_API rx_status rx_even_floor(const char* x, int64_t* out);
RX_API rx_status rx_odd_floor(const char* x, int64_t* out);
RX_API rx_status rx_formula_a(int32_t n_red, int32_t n_blue, int32_t n_green,
                              int64_t* out);
RX_API rx_status rx_formula_c(int32_t n_red, int32_t n_blue, int32_t n_green,
                              int64_t* out);

RX_API rx_status rx_certify_lower_bound(int32_t n_red, int32_t n_blue,
                                        int32_t n_green, rx_graph** witness,
                                        int32_t* witness_order);

/* profile: "eeo", "eoo" or "free". On RX_OK, *exhausted tells whether the
 * search ruled out every colouring (witness == NULL) or found one. */
RX_API rx_status rx_search_ramsey(int32_t n_red, int32_t n_blue,
                                  int32_t n_green, const char* profile,
                                  int32_t n_vertices, int64_t node_budget,
                                  int32_t threads, int use_symmetry,
                                  rx_graph** witness, int* exhausted,
                                  char** stats_text);

RX_API rx_status rx_side_conditions(const char* alpha1, const char* alpha2,
                                    const char* alpha3, const char* eta,
                                    int64_t k, char** text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RAMSEY_CAPI_H */
