#ifndef SZCACT_H
#define SZCACT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/*
 * C interface to the cactus index library.  Graphs are opaque handles;
 * every function returns a status code and reports details through
 * szc_last_error(), which is thread local.  Strings returned through
 * char** out-parameters are heap allocated and must be released with
 * szc_string_free().
 */

typedef struct szc_graph szc_graph;

typedef enum szc_status {
  SZC_OK = 0,
  SZC_ERR_INVALID = 1,
  SZC_ERR_PARSE = 2,
  SZC_ERR_DISCONNECTED = 3,
  SZC_ERR_NOT_CACTUS = 4,
  SZC_ERR_INFEASIBLE = 5,
  SZC_ERR_TOO_LARGE = 6,
  SZC_ERR_VERIFICATION = 7,
  SZC_ERR_INTERNAL = 8
} szc_status;

const char* szc_status_name(szc_status status);

/* Message for the most recent failure on this thread; never NULL. */
const char* szc_last_error(void);

void szc_graph_free(szc_graph* g);
void szc_string_free(char* s);

/* endpoints holds edge_count (u, v) pairs, 2 * edge_count values total. */
szc_status szc_graph_build(int32_t order, const int32_t* endpoints,
                           int32_t edge_count, szc_graph** out);
szc_status szc_graph_copy(const szc_graph* g, szc_graph** out);
int32_t szc_graph_order(const szc_graph* g);
int32_t szc_graph_size(const szc_graph* g);
/* Fills 2 * szc_graph_size(g) values, lexicographically sorted pairs. */
szc_status szc_graph_edges(const szc_graph* g, int32_t* endpoints);

szc_status szc_parse_graph6(const char* line, szc_graph** out);
szc_status szc_parse_edge_list(const char* text, szc_graph** out);
szc_status szc_write_graph6(const szc_graph* g, char** out);
szc_status szc_write_edge_list(const szc_graph* g, char** out);

typedef struct szc_indices {
  int64_t wiener;
  int64_t szeged;
  int64_t edge_szeged;
  int64_t edge_vertex_szeged_x2; /* twice the edge-vertex value; exact */
} szc_indices;

szc_status szc_compute_indices(const szc_graph* g, szc_indices* out);
szc_status szc_index_report_json(const szc_graph* g, char** out);
szc_status szc_index_report_csv(const szc_graph* g, char** out);

szc_status szc_is_cactus(const szc_graph* g, int32_t* out);

/* Bundle of k triangles plus pendants at one hub: the extremal graph. */
szc_status szc_bundle_graph(int32_t n, int32_t k, szc_graph** out);
szc_status szc_extremal_bounds(int32_t n, int32_t k, int64_t* sz_e_min,
                               int64_t* sz_ev_x2_min, int32_t* proved);

szc_status szc_canonical_graph6(const szc_graph* g, char** out);
szc_status szc_is_isomorphic(const szc_graph* a, const szc_graph* b,
                             int32_t* out);

/* Runs the full rewrite sequence; the trace is a JSON array of steps. */
szc_status szc_normalize(const szc_graph* g, szc_graph** out_graph,
                         char** out_trace_json);

szc_status szc_count_cacti(int32_t n, int32_t k, int32_t ceiling,
                           int64_t* out);
/* Newline-terminated graph6 lines, one per isomorphism class. */
szc_status szc_enumerate_graph6(int32_t n, int32_t k, int32_t ceiling,
                                char** out);

szc_status szc_verify_csv_header(char** out);
/* out_pass: 1 verified, 0 failed, 2 outside the proved range (n < 5). */
szc_status szc_verify_row_csv(int32_t n, int32_t k, int32_t ceiling,
                              char** out_row, int32_t* out_pass);
/* Rows for 5 <= n <= n_max, 1 <= k <= (n-1)/2 capped by k_max (k_max < 0
 * means no cap).  threads = 0 picks SZCACT_THREADS or the hardware count. */
szc_status szc_sweep_csv(int32_t n_max, int32_t k_max, int32_t ceiling,
                         int32_t threads, char** out_table,
                         int32_t* out_all_pass);

#ifdef __cplusplus
}
#endif

#endif
