/*
 * C interface to the edgedepth library: depth and projective dimension of
 * powers of edge ideals of graphs, with closed-form formulas and an exact
 * lcm-lattice Betti-number oracle.
 *
 * All functions return EDEP_OK on success; on failure edep_last_error()
 * holds a thread-local message.  Handles are freed with the matching
 * *_free function; strings returned through char** with edep_string_free.
 */
#ifndef EDGEDEPTH_H
#define EDGEDEPTH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct edep_graph edep_graph;

typedef enum edep_status {
    EDEP_OK = 0,
    EDEP_ERR_INVALID_ARGUMENT = 1,
    EDEP_ERR_PRECONDITION = 2,
    EDEP_ERR_BUDGET_EXCEEDED = 3,
    EDEP_ERR_UNSUPPORTED_FAMILY = 4,
    EDEP_ERR_PARSE = 5,
    EDEP_ERR_INTERNAL = 6
} edep_status;

const char* edep_last_error(void);

/* Oracle resource caps; exceeding any cap fails the call with
 * EDEP_ERR_BUDGET_EXCEEDED rather than approximating. */
typedef struct edep_caps {
    long max_generators;
    long max_lattice;
    long max_faces;
    int threads; /* 0 = hardware concurrency */
} edep_caps;

void edep_caps_init(edep_caps* caps);
/* Apply key = value config text (same keys the CLI accepts) on top of the
 * current values of caps. */
edep_status edep_caps_from_config(const char* config_text, edep_caps* caps);

/* -------- graphs -------- */

/* Spec strings: path:N, cycle:N, star:a1,a2,..., cat3:d1,d2,d3, file:PATH */
edep_status edep_graph_parse(const char* spec, edep_graph** out);
edep_status edep_graph_path(int n, edep_graph** out);
edep_status edep_graph_cycle(int n, edep_graph** out);
edep_status edep_graph_starlike(const long* branch_lengths, int k, edep_graph** out);
edep_status edep_graph_caterpillar3(int d1, int d2, int d3, int allow_bare_path,
                                    edep_graph** out);
/* endpoints_uv holds u1,v1,u2,v2,...; vertices are 1-indexed */
edep_status edep_graph_from_edges(int n_vertices, const int* endpoints_uv, int n_edges,
                                  edep_graph** out);
void edep_graph_free(edep_graph* g);

int edep_graph_n_vertices(const edep_graph* g);
int edep_graph_n_edges(const edep_graph* g);
/* fills endpoints_uv with 2 * n_edges entries, edges in canonical order */
edep_status edep_graph_edges(const edep_graph* g, int* endpoints_uv);
edep_status edep_graph_is_tree(const edep_graph* g, int* out);
edep_status edep_graph_is_weakly_chordal(const edep_graph* g, int max_n, int* out);

/* -------- closed-form depth formulas -------- */

/* Dispatches on the recognized family (edgeless, path, cycle, starlike,
 * 3-spine caterpillar; arbitrary trees at power 1).  Unrecognized inputs
 * fail with EDEP_ERR_UNSUPPORTED_FAMILY. */
edep_status edep_formula_depth(const edep_graph* g, long power, long* out_depth);

/* values must hold t_max entries (power 1..t_max).  stable_value and
 * stable_index receive the limit depth and the stabilization index when
 * the family provides them. */
edep_status edep_formula_profile(const edep_graph* g, long t_max, long* values,
                                 long* stable_value, long* stable_index);

edep_status edep_q_tree(const edep_graph* g, long* out);
/* index of depth stability: trees and cycles of length >= 5 */
edep_status edep_dstab(const edep_graph* g, long* out);

/* -------- exact oracle -------- */

edep_status edep_oracle_depth(const edep_graph* g, long power, const edep_caps* caps,
                              long* out_depth, long* out_pd);
/* Full multigraded Betti table of S/I(G)^power as a JSON document. */
edep_status edep_oracle_betti_json(const edep_graph* g, long power, const edep_caps* caps,
                                   char** out_json);

/* -------- colon combinatorics -------- */

/* factors_uv holds the endpoints of t-1 edges of g (u1,v1,...).  The colon
 * graph's edges are the even-connected pairs; square_vertices (buffer of at
 * least n_vertices ints) receives vertices whose square lies in the colon. */
edep_status edep_colon_graph(const edep_graph* g, const int* factors_uv, int n_factors,
                             edep_graph** out_graph, int* square_vertices, int* n_squares);
/* Cross-check against the monomial-side colon; out_agrees is 1 on equality. */
edep_status edep_colon_verify(const edep_graph* g, const int* factors_uv, int n_factors,
                              int* out_agrees);

/* -------- projective dimension -------- */

edep_status edep_pd_kimura(const edep_graph* g, int max_n, long* out_pd);

/* -------- verification sweeps -------- */

/* family: paths | cycles | starlike | caterpillars | trees | kimura | colon.
 * config_text: key = value lines (bounds and caps).  The report is a JSON
 * document with schema 1; exit code 0 = all agree, 1 = disagreement,
 * 3 = budget-exceeded cases only. */
edep_status edep_verify(const char* family, const char* config_text, char** out_json,
                        int* out_exit_code);

void edep_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
