////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of thermocone                                           //
//                                                                            //
//  Copyright 2026 thermocone developers                                      //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#ifndef THERMOCONE_THERMOCONE_H
#define THERMOCONE_THERMOCONE_H

/*
 * C interface to thermocone: thermal cones, their volumes, entanglement
 * volumes under the induced Haar measure and coherent qubit cones.
 *
 * Every fallible call returns a tc_status. On failure the thread-local
 * message from tc_last_error() describes the violated precondition. Handles
 * are opaque and owned by the caller; release them with the matching
 * *_destroy function (NULL is accepted).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TC_BUILDING_LIBRARY)
#    define TC_API __declspec(dllexport)
#  else
#    define TC_API __declspec(dllimport)
#  endif
#else
#  define TC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERR_INVALID_ARGUMENT = 1,
  TC_ERR_DIMENSION = 2,
  TC_ERR_NUMERICAL = 3,
  TC_ERR_UNSUPPORTED = 4,
  TC_ERR_ALLOC = 5
} tc_status;

TC_API const char* tc_version(void);
TC_API const char* tc_status_name(tc_status s);
/* Message of the last failed call on this thread; empty after success. */
TC_API const char* tc_last_error(void);

typedef enum tc_relation {
  TC_FUTURE = 0,
  TC_PAST = 1,
  TC_INCOMPARABLE = 2,
  TC_EQUIVALENT = 3
} tc_relation;

TC_API const char* tc_relation_name(tc_relation r);

/* ---- states and Gibbs contexts ---- */

typedef struct tc_state tc_state;
typedef struct tc_context tc_context;

/* Entries must be non-negative and sum to one (tolerance 1e-9). */
TC_API tc_status tc_state_create(const double* entries, size_t dim, tc_state** out);
TC_API void tc_state_destroy(tc_state* s);
TC_API size_t tc_state_dim(const tc_state* s);
TC_API const double* tc_state_entries(const tc_state* s);

/* beta may be INFINITY. */
TC_API tc_status tc_context_create(const double* energies, size_t dim, double beta, tc_context** out);
TC_API tc_status tc_context_create_uniform(size_t dim, tc_context** out);
TC_API void tc_context_destroy(tc_context* c);
TC_API size_t tc_context_dim(const tc_context* c);
/* Gibbs weights, dim entries. */
TC_API const double* tc_context_gibbs(const tc_context* c);

/* Where q sits relative to p. */
TC_API tc_status tc_classify(const tc_state* q, const tc_state* p, const tc_context* c, tc_relation* out);
/* levels_by_rank receives dim level indices. */
TC_API tc_status tc_beta_order(const tc_state* p, const tc_context* c, size_t* levels_by_rank);
/* Two-level swap between level 0 and level k; out receives dim entries. */
TC_API tc_status tc_beta_swap(const tc_state* p, const tc_context* c, size_t k, double* out);

/* ---- point lists ---- */

typedef struct tc_points tc_points;

TC_API void tc_points_destroy(tc_points* pts);
TC_API size_t tc_points_count(const tc_points* pts);
TC_API size_t tc_points_dim(const tc_points* pts);
/* Row-major count x dim block. */
TC_API const double* tc_points_data(const tc_points* pts);

/* ---- cones ---- */

typedef enum tc_polytope_kind {
  TC_POLYTOPE_FUTURE = 0,
  TC_POLYTOPE_PAST_CHAMBER = 1,
  TC_POLYTOPE_INCOMPARABLE_PIECE = 2
} tc_polytope_kind;

TC_API const char* tc_polytope_kind_name(tc_polytope_kind k);

typedef struct tc_cones tc_cones;

/* Future cone always; past chambers, incomparable pieces and tangent vectors
   when with_past is non-zero (dimension at most 4). */
TC_API tc_status tc_cones_compute(const tc_state* p, const tc_context* c, int with_past, tc_cones** out);
TC_API void tc_cones_destroy(tc_cones* cones);
TC_API size_t tc_cones_dim(const tc_cones* cones);
TC_API size_t tc_cones_polytope_count(const tc_cones* cones);
/* chamber receives dim level indices when the polytope belongs to a chamber
   (*has_chamber = 1); any output pointer may be NULL. */
TC_API tc_status tc_cones_polytope(const tc_cones* cones, size_t index, tc_polytope_kind* kind, size_t* piece,
                                   int* has_chamber, size_t* chamber, size_t* vertex_count);
/* Row-major vertex_count x dim block. */
TC_API const double* tc_cones_vertices(const tc_cones* cones, size_t index);
TC_API size_t tc_cones_tangent_count(const tc_cones* cones);
/* raw and projected receive dim entries; *projected_ok is 0 when the
   projection failed and projected is left untouched. */
TC_API tc_status tc_cones_tangent(const tc_cones* cones, size_t index, size_t* level, size_t* chamber, double* raw,
                                  double* projected, int* projected_ok);

/* ---- volumes ---- */

typedef enum tc_method {
  TC_METHOD_AUTO = 0,
  TC_METHOD_CLOSED_FORM = 1,
  TC_METHOD_EXACT_HULL = 2,
  TC_METHOD_MONTE_CARLO = 3
} tc_method;

TC_API const char* tc_method_name(tc_method m);

typedef struct tc_volume_options {
  tc_method method;
  uint64_t samples;
  uint64_t seed;
} tc_volume_options;

TC_API void tc_volume_options_default(tc_volume_options* opt);

/* Fractions of the simplex; NaN marks a value that was not computed. method
   is the method actually used, never TC_METHOD_AUTO. */
typedef struct tc_volume_report {
  double v_future;
  double v_past;
  double v_incomparable;
  double se_future;
  double se_past;
  double se_incomparable;
  uint64_t samples;
  tc_method method;
} tc_volume_report;

TC_API tc_status tc_volumes(const tc_state* p, const tc_context* c, const tc_volume_options* opt,
                            tc_volume_report* out);

typedef struct tc_sweep tc_sweep;

typedef struct tc_sweep_row {
  double beta;
  size_t permutation;
  int order_changed;
  int passive;
  int maximally_active;
  tc_volume_report report;
} tc_sweep_row;

/* Every distinct permutation of p at every beta, one shared sample set. */
TC_API tc_status tc_volume_sweep(const tc_state* p, const double* energies, const double* betas, size_t beta_count,
                                 const tc_volume_options* opt, tc_sweep** out);
TC_API void tc_sweep_destroy(tc_sweep* s);
TC_API size_t tc_sweep_dim(const tc_sweep* s);
TC_API size_t tc_sweep_count(const tc_sweep* s);
/* state and order receive dim values; either may be NULL. */
TC_API tc_status tc_sweep_row_get(const tc_sweep* s, size_t index, tc_sweep_row* row, double* state, size_t* order);

typedef struct tc_grid tc_grid;

/* Regular grid over the d = 3 simplex. */
TC_API tc_status tc_iso_grid(const tc_context* c, size_t resolution, const tc_volume_options* opt, tc_grid** out);
TC_API void tc_grid_destroy(tc_grid* g);
TC_API size_t tc_grid_dim(const tc_grid* g);
TC_API size_t tc_grid_count(const tc_grid* g);
/* state receives dim values; multiplicity is the number of grid points of the
   full simplex the row stands for (1 for the thermal grid). */
TC_API tc_status tc_grid_row(const tc_grid* g, size_t index, double* state, size_t* multiplicity,
                             tc_volume_report* report);

/* ---- probabilistic cones ---- */

typedef enum tc_prob_relation {
  TC_PROB_FUTURE = 0,
  TC_PROB_PAST = 1,
  TC_PROB_INTERCONVERTIBLE = 2,
  TC_PROB_INCOMPARABLE = 3
} tc_prob_relation;

TC_API const char* tc_prob_relation_name(tc_prob_relation r);
TC_API tc_status tc_vidal_probability(const tc_state* p, const tc_state* q, double* out);
/* out receives dim entries. */
TC_API tc_status tc_tilde_distribution(const tc_state* p, double prob, double* out);
TC_API tc_status tc_hat_distribution(const tc_state* p, double prob, double* out);
TC_API tc_status tc_prob_classify(const tc_state* q, const tc_state* p, double prob, tc_prob_relation* out);

/* ---- entanglement ---- */

/* count spectra of C^n (x) C^m pure states, sorted, row-major. */
TC_API tc_status tc_schmidt_samples(size_t n, size_t m, uint64_t seed, size_t count, tc_points** out);
/* Volumes under the entanglement order. */
TC_API tc_status tc_entanglement_volumes(const tc_state* p, size_t m, uint64_t seed, size_t samples,
                                         tc_volume_report* out);
/* Sorted-chamber grid, entries k / resolution. */
TC_API tc_status tc_entanglement_grid(size_t n, size_t m, uint64_t seed, size_t resolution, size_t samples,
                                      tc_grid** out);

/* ---- coherent qubit ---- */

typedef struct tc_bloch {
  double x;
  double y;
  double z;
} tc_bloch;

typedef struct tc_gp_quantities {
  double delta;
  double r_plus;
  double r_minus;
  double r1;
  double r2;
  double centre1;
  double centre2;
} tc_gp_quantities;

typedef struct tc_qubit_past {
  double d_cross;
  int has_piece2;
  double d_min;
  double d_max;
} tc_qubit_past;

/* States with y != 0 are rotated into the XZ plane first. */
TC_API tc_status tc_qubit_population_coherence(tc_bloch s, double* p, double* c);
TC_API tc_status tc_qubit_gp(tc_bloch s, double zeta, tc_gp_quantities* out);
TC_API tc_status tc_qubit_gp_classify(tc_bloch target, tc_bloch source, double zeta, tc_relation* out);
/* Disk boundary circles clipped to the Bloch disk, as (x, z) rows. */
TC_API tc_status tc_qubit_gp_boundary(tc_bloch s, double zeta, size_t points, tc_points** circle1,
                                      tc_points** circle2);
TC_API tc_status tc_qubit_to_classify(tc_bloch target, tc_bloch source, double zeta, tc_relation* out);
/* Closed outline of the thermal-operation future as (d, q) rows. */
TC_API tc_status tc_qubit_to_future(tc_bloch s, double zeta, size_t points, tc_points** outline);
/* Past pieces in the d >= 0 half as closed (d, q) outlines; piece2 is empty
   when info->has_piece2 is 0. */
TC_API tc_status tc_qubit_to_past(tc_bloch s, double zeta, size_t points, tc_qubit_past* info, tc_points** piece1,
                                  tc_points** piece2);

#ifdef __cplusplus
}
#endif

#endif
