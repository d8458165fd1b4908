/*
 * Copyright 2026 The qwalk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the qwalk library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every function returning qw_status leaves a description of the last
 * failure in qw_last_error() (per thread). Strings returned through char**
 * are owned by the caller and released with qw_string_free. */

#ifndef QWALK_QWALK_H_
#define QWALK_QWALK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QW_API __declspec(dllexport)
#else
#define QW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qw_graph qw_graph;
typedef struct qw_map qw_map;
typedef struct qw_walk qw_walk;
typedef struct qw_spectrum qw_spectrum;

typedef enum qw_status {
  QW_OK = 0,
  QW_ERR_INTERNAL = 1,
  QW_ERR_PARSE = 2,        /* malformed input text */
  QW_ERR_PRECONDITION = 3, /* valid input violating a documented constraint */
  QW_ERR_UNSUPPORTED = 4,
  QW_ERR_ARGUMENT = 5      /* NULL handle or output pointer */
} qw_status;

typedef enum qw_walk_kind {
  QW_WALK_ARC_REVERSAL = 0,
  QW_WALK_VERTEX_FACE = 1,
  QW_WALK_GENERIC = 2,
  QW_WALK_SZEGEDY = 3
} qw_walk_kind;

typedef enum qw_gamma { QW_GAMMA_AUTO = 0, QW_GAMMA_PLUS = 1, QW_GAMMA_MINUS = 2 } qw_gamma;

typedef struct qw_options {
  uint64_t q_max;        /* 0: max(64, 2 dim) */
  double tol;            /* rational-cosine recognition */
  double support_tol;    /* idempotent entries treated as zero */
  double cluster_tol;    /* eigenvalue clustering */
  double cospectral_tol;
  int exact;             /* exact characteristic polynomial when possible */
  int oracle;            /* force the time-evolution oracle, including U^t */
  int gamma;             /* qw_gamma */
  unsigned jobs;         /* threads for all-pairs analysis */
  int with_idempotents;  /* include idempotent matrices in spectrum JSON */
} qw_options;

QW_API void qw_options_init(qw_options* opts);
QW_API const char* qw_version(void);
QW_API const char* qw_last_error(void);
QW_API void qw_string_free(char* s);
QW_API qw_status qw_walk_kind_parse(const char* name, qw_walk_kind* out);

/* Graphs: {"n": int, "edges": [[u, v, mult?], ...], "labels": [...]?} */
QW_API qw_status qw_graph_from_json(const char* json, qw_graph** out);
QW_API qw_status qw_graph_to_json(const qw_graph* g, char** out);
QW_API size_t qw_graph_vertex_count(const qw_graph* g);
QW_API void qw_graph_free(qw_graph* g);

/* Embeddings: {"graph": <graph>, "rotation": [[arc ids], ...], "layout": ...?} */
QW_API qw_status qw_map_from_json(const char* json, qw_map** out);
QW_API qw_status qw_map_to_json(const qw_map* m, char** out);
QW_API size_t qw_map_face_count(const qw_map* m);
QW_API size_t qw_map_genus(const qw_map* m);
QW_API void qw_map_free(qw_map* m);

/* Generated families as JSON. Names and parameters:
 *   cycle n | complete n | path n | multipartite s1 s2 ... | gnm n m
 *   hamming d q | h33 | folded-cube d | fig2 | kneser n k | paley q
 *   blowup-cycle n m | blowup-complete n m | affine-incidence q
 *   fano-incidence                                   -> graph JSON
 *   grid n m | k4-planar | k4-torus | cycle-map n    -> embedding JSON
 *   affine-plane q | fano                            -> design JSON
 *   signed-c4                                        -> generic frames JSON */
QW_API qw_status qw_family_json(const char* name, const int64_t* params, size_t n_params,
                                char** out);

/* Walks. qw_walk_from_input accepts graph JSON (arc-reversal), embedding JSON
 * (vertex-face or arc-reversal on its graph), {"n_frame", "m_frame"}
 * (generic) or {"p", "q"} (Szegedy). */
QW_API qw_status qw_walk_from_input(const char* json, qw_walk_kind kind, qw_walk** out);
QW_API qw_status qw_walk_arc_reversal(const qw_graph* g, qw_walk** out);
QW_API qw_status qw_walk_vertex_face(const qw_map* m, qw_walk** out);
QW_API size_t qw_walk_dim(const qw_walk* w);
QW_API size_t qw_walk_arc_count(const qw_walk* w);
/* B_t = T_t(B) into out (dim*dim doubles, row-major). */
QW_API qw_status qw_walk_bt(const qw_walk* w, uint64_t t, double* out);
QW_API void qw_walk_free(qw_walk* w);

QW_API qw_status qw_spectrum_compute(const qw_walk* w, const qw_options* opts,
                                     qw_spectrum** out);
QW_API size_t qw_spectrum_size(const qw_spectrum* s);
QW_API double qw_spectrum_eigenvalue(const qw_spectrum* s, size_t i);
QW_API qw_status qw_spectrum_to_json(const qw_spectrum* s, int with_idempotents, char** out);
QW_API void qw_spectrum_free(qw_spectrum* s);

/* Verdict JSON. `oracle` may be NULL to skip the time-evolution check. */
QW_API qw_status qw_decide_pair(const qw_spectrum* s, const qw_walk* oracle, size_t u,
                                size_t v, const qw_options* opts, char** out);
QW_API qw_status qw_decide_periodicity(const qw_spectrum* s, const qw_walk* oracle, size_t u,
                                       const qw_options* opts, char** out);

/* Full report. pairs holds n_pairs (u, v) couples; with n_pairs == 0 and
 * periodicity == 0 every pair and every vertex is analyzed. */
QW_API qw_status qw_analyze(const qw_walk* w, const qw_options* opts, const size_t* pairs,
                            size_t n_pairs, int periodicity, int csv, char** out);

QW_API qw_status qw_evolve_csv(const qw_walk* w, size_t start, uint64_t t_max, char** out);
/* Writes frame_0000.svg ... into dir (graph-based walks only). */
QW_API qw_status qw_svg_frames(const qw_walk* w, size_t start, uint64_t t_max,
                               const char* dir);

QW_API qw_status qw_srg_analyze(int64_t n, int64_t k, int64_t a, int64_t c, char** out);
/* Design JSON {"v": int, "blocks": [[...], ...]}. */
QW_API qw_status qw_design_analyze(const char* json, const qw_options* opts, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QWALK_QWALK_H_ */
