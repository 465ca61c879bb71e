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

#include "thermocone/thermocone.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "cones.hpp"
#include "entanglement.hpp"
#include "probabilistic.hpp"
#include "qubit.hpp"
#include "volumes.hpp"

#ifndef THERMOCONE_VERSION
#define THERMOCONE_VERSION "0.0.0"
#endif

using namespace thermocone;

struct tc_state {
  ProbVector p;
};

struct tc_context {
  GibbsContext ctx;
};

struct tc_points {
  std::size_t dim = 0;
  std::vector<double> data;
};

struct tc_cones {
  std::size_t dim = 0;
  std::vector<ConePolytope> polytopes;
  std::vector<std::vector<double>> flat_vertices;
  std::vector<TangentVector> tangents;
};

struct tc_sweep {
  std::size_t dim = 0;
  std::vector<SweepRow> rows;
};

struct tc_grid {
  std::size_t dim = 0;
  std::vector<std::vector<double>> states;
  std::vector<std::size_t> multiplicity;
  std::vector<VolumeReport> reports;
};

namespace {

thread_local std::string last_error;

tc_status set_error(tc_status s, const char* what) {
  last_error = what;
  return s;
}

template <typename F>
tc_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return TC_OK;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::InvalidArgument: return set_error(TC_ERR_INVALID_ARGUMENT, e.what());
      case ErrorKind::DimensionMismatch: return set_error(TC_ERR_DIMENSION, e.what());
      case ErrorKind::Numerical: return set_error(TC_ERR_NUMERICAL, e.what());
      case ErrorKind::Unsupported: return set_error(TC_ERR_UNSUPPORTED, e.what());
    }
    return set_error(TC_ERR_NUMERICAL, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(TC_ERR_ALLOC, "out of memory");
  } catch (const std::exception& e) {
    return set_error(TC_ERR_NUMERICAL, e.what());
  }
}

void need(const void* ptr, const char* name) {
  if (!ptr) fail(ErrorKind::InvalidArgument, std::string(name) + " must not be NULL");
}

tc_method method_of(VolumeMethod m) {
  switch (m) {
    case VolumeMethod::ClosedForm: return TC_METHOD_CLOSED_FORM;
    case VolumeMethod::ExactHull: return TC_METHOD_EXACT_HULL;
    case VolumeMethod::MonteCarlo: return TC_METHOD_MONTE_CARLO;
  }
  return TC_METHOD_AUTO;
}

tc_volume_report to_c(const VolumeReport& r) {
  return {r.v_future, r.v_past, r.v_incomparable, r.se_future, r.se_past, r.se_incomparable, r.samples,
          method_of(r.method)};
}

VolumeOptions from_c(const tc_volume_options* opt) {
  VolumeOptions o;
  if (!opt) return o;
  switch (opt->method) {
    case TC_METHOD_AUTO: o.method = MethodChoice::Auto; break;
    case TC_METHOD_CLOSED_FORM: o.method = MethodChoice::ClosedForm; break;
    case TC_METHOD_EXACT_HULL: o.method = MethodChoice::ExactHull; break;
    case TC_METHOD_MONTE_CARLO: o.method = MethodChoice::MonteCarlo; break;
    default: fail(ErrorKind::InvalidArgument, "unknown volume method");
  }
  o.samples = static_cast<std::size_t>(opt->samples);
  o.seed = opt->seed;
  return o;
}

tc_relation to_c(Relation r) {
  switch (r) {
    case Relation::Future: return TC_FUTURE;
    case Relation::Past: return TC_PAST;
    case Relation::Incomparable: return TC_INCOMPARABLE;
    case Relation::Equivalent: return TC_EQUIVALENT;
  }
  return TC_INCOMPARABLE;
}

void copy_order(const BetaOrder& o, std::size_t* out) {
  if (out) std::copy(o.sequence().begin(), o.sequence().end(), out);
}

BlochState bloch_of(tc_bloch s) {
  BlochState b{s.x, s.y, s.z};
  validate(b);
  return rotate_to_xz(b);
}

tc_points* points_from(const std::vector<QubitPoint>& pts) {
  auto* out = new tc_points;
  out->dim = 2;
  for (const auto& pt : pts) {
    out->data.push_back(pt.d);
    out->data.push_back(pt.q);
  }
  return out;
}

tc_points* points_from(const std::vector<BlochState>& pts) {
  auto* out = new tc_points;
  out->dim = 2;
  for (const auto& pt : pts) {
    out->data.push_back(pt.x);
    out->data.push_back(pt.z);
  }
  return out;
}

}  // namespace

extern "C" {

const char* tc_version(void) { return THERMOCONE_VERSION; }

const char* tc_status_name(tc_status s) {
  switch (s) {
    case TC_OK: return "ok";
    case TC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TC_ERR_DIMENSION: return "dimension mismatch";
    case TC_ERR_NUMERICAL: return "numerical failure";
    case TC_ERR_UNSUPPORTED: return "unsupported";
    case TC_ERR_ALLOC: return "allocation failure";
  }
  return "unknown";
}

const char* tc_last_error(void) { return last_error.c_str(); }

const char* tc_relation_name(tc_relation r) {
  switch (r) {
    case TC_FUTURE: return "future";
    case TC_PAST: return "past";
    case TC_INCOMPARABLE: return "incomparable";
    case TC_EQUIVALENT: return "equivalent";
  }
  return "unknown";
}

tc_status tc_state_create(const double* entries, size_t dim, tc_state** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    need(entries, "entries");
    require(dim >= 1, ErrorKind::InvalidArgument, "state dimension must be positive");
    *out = new tc_state{ProbVector::strict(std::vector<double>(entries, entries + dim))};
  });
}

void tc_state_destroy(tc_state* s) { delete s; }
size_t tc_state_dim(const tc_state* s) { return s ? s->p.dim() : 0; }
const double* tc_state_entries(const tc_state* s) { return s ? s->p.values().data() : nullptr; }

tc_status tc_context_create(const double* energies, size_t dim, double beta, tc_context** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    need(energies, "energies");
    require(dim >= 1, ErrorKind::InvalidArgument, "energy list is empty");
    *out = new tc_context{GibbsContext::finite(std::vector<double>(energies, energies + dim), beta)};
  });
}

tc_status tc_context_create_uniform(size_t dim, tc_context** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    require(dim >= 1, ErrorKind::InvalidArgument, "dimension must be positive");
    *out = new tc_context{GibbsContext::uniform(dim)};
  });
}

void tc_context_destroy(tc_context* c) { delete c; }
size_t tc_context_dim(const tc_context* c) { return c ? c->ctx.dim() : 0; }
const double* tc_context_gibbs(const tc_context* c) { return c ? c->ctx.gibbs().values().data() : nullptr; }

tc_status tc_classify(const tc_state* q, const tc_state* p, const tc_context* c, tc_relation* out) {
  return guarded([&] {
    need(q, "q");
    need(p, "p");
    need(c, "context");
    need(out, "out");
    *out = to_c(classify(q->p, p->p, c->ctx));
  });
}

tc_status tc_beta_order(const tc_state* p, const tc_context* c, size_t* levels_by_rank) {
  return guarded([&] {
    need(p, "p");
    need(c, "context");
    need(levels_by_rank, "levels_by_rank");
    require(p->p.dim() == c->ctx.dim(), ErrorKind::DimensionMismatch, "state and context dimensions differ");
    copy_order(beta_order(p->p, c->ctx), levels_by_rank);
  });
}

tc_status tc_beta_swap(const tc_state* p, const tc_context* c, size_t k, double* out) {
  return guarded([&] {
    need(p, "p");
    need(c, "context");
    need(out, "out");
    const ProbVector r = beta_swap(p->p, c->ctx, k);
    std::copy(r.values().begin(), r.values().end(), out);
  });
}

void tc_points_destroy(tc_points* pts) { delete pts; }
size_t tc_points_count(const tc_points* pts) { return pts && pts->dim ? pts->data.size() / pts->dim : 0; }
size_t tc_points_dim(const tc_points* pts) { return pts ? pts->dim : 0; }
const double* tc_points_data(const tc_points* pts) { return pts ? pts->data.data() : nullptr; }

const char* tc_polytope_kind_name(tc_polytope_kind k) {
  switch (k) {
    case TC_POLYTOPE_FUTURE: return to_string(PolytopeKind::Future);
    case TC_POLYTOPE_PAST_CHAMBER: return to_string(PolytopeKind::PastChamber);
    case TC_POLYTOPE_INCOMPARABLE_PIECE: return to_string(PolytopeKind::IncomparablePiece);
  }
  return "unknown";
}

tc_status tc_cones_compute(const tc_state* p, const tc_context* c, int with_past, tc_cones** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    need(p, "p");
    need(c, "context");
    auto cones = std::make_unique<tc_cones>();
    cones->dim = p->p.dim();
    cones->polytopes.push_back(future_cone(p->p, c->ctx));
    if (with_past) {
      auto pi = past_and_incomparable(p->p, c->ctx);
      for (auto& poly : pi.past) cones->polytopes.push_back(std::move(poly));
      for (auto& poly : pi.incomparable) cones->polytopes.push_back(std::move(poly));
      cones->tangents = std::move(pi.tangents);
    }
    for (const auto& poly : cones->polytopes) {
      std::vector<double> flat;
      for (const auto& v : poly.vertices) flat.insert(flat.end(), v.begin(), v.end());
      cones->flat_vertices.push_back(std::move(flat));
    }
    *out = cones.release();
  });
}

void tc_cones_destroy(tc_cones* cones) { delete cones; }
size_t tc_cones_dim(const tc_cones* cones) { return cones ? cones->dim : 0; }
size_t tc_cones_polytope_count(const tc_cones* cones) { return cones ? cones->polytopes.size() : 0; }

tc_status tc_cones_polytope(const tc_cones* cones, size_t index, tc_polytope_kind* kind, size_t* piece,
                            int* has_chamber, size_t* chamber, size_t* vertex_count) {
  return guarded([&] {
    need(cones, "cones");
    require(index < cones->polytopes.size(), ErrorKind::InvalidArgument, "polytope index out of range");
    const auto& poly = cones->polytopes[index];
    if (kind) {
      switch (poly.kind) {
        case PolytopeKind::Future: *kind = TC_POLYTOPE_FUTURE; break;
        case PolytopeKind::PastChamber: *kind = TC_POLYTOPE_PAST_CHAMBER; break;
        case PolytopeKind::IncomparablePiece: *kind = TC_POLYTOPE_INCOMPARABLE_PIECE; break;
      }
    }
    if (piece) *piece = poly.piece;
    if (has_chamber) *has_chamber = poly.chamber.has_value();
    if (chamber && poly.chamber) copy_order(*poly.chamber, chamber);
    if (vertex_count) *vertex_count = poly.vertices.size();
  });
}

const double* tc_cones_vertices(const tc_cones* cones, size_t index) {
  if (!cones || index >= cones->flat_vertices.size()) return nullptr;
  return cones->flat_vertices[index].data();
}

size_t tc_cones_tangent_count(const tc_cones* cones) { return cones ? cones->tangents.size() : 0; }

tc_status tc_cones_tangent(const tc_cones* cones, size_t index, size_t* level, size_t* chamber, double* raw,
                           double* projected, int* projected_ok) {
  return guarded([&] {
    need(cones, "cones");
    require(index < cones->tangents.size(), ErrorKind::InvalidArgument, "tangent index out of range");
    const auto& t = cones->tangents[index];
    if (level) *level = t.level;
    copy_order(t.chamber, chamber);
    if (raw) std::copy(t.entries.begin(), t.entries.end(), raw);
    if (projected || projected_ok) {
      bool ok = true;
      try {
        const ProbVector pr = project_to_simplex(t);
        if (projected) std::copy(pr.values().begin(), pr.values().end(), projected);
      } catch (const Error&) {
        ok = false;
      }
      if (projected_ok) *projected_ok = ok;
    }
  });
}

const char* tc_method_name(tc_method m) {
  switch (m) {
    case TC_METHOD_AUTO: return "auto";
    case TC_METHOD_CLOSED_FORM: return to_string(VolumeMethod::ClosedForm);
    case TC_METHOD_EXACT_HULL: return to_string(VolumeMethod::ExactHull);
    case TC_METHOD_MONTE_CARLO: return to_string(VolumeMethod::MonteCarlo);
  }
  return "unknown";
}

void tc_volume_options_default(tc_volume_options* opt) {
  if (opt) *opt = {TC_METHOD_AUTO, kDefaultSamples, 0};
}

tc_status tc_volumes(const tc_state* p, const tc_context* c, const tc_volume_options* opt,
                     tc_volume_report* out) {
  return guarded([&] {
    need(p, "p");
    need(c, "context");
    need(out, "out");
    *out = to_c(compute_volumes(p->p, c->ctx, from_c(opt)));
  });
}

tc_status tc_volume_sweep(const tc_state* p, const double* energies, const double* betas, size_t beta_count,
                          const tc_volume_options* opt, tc_sweep** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    need(p, "p");
    need(energies, "energies");
    need(betas, "betas");
    auto s = std::make_unique<tc_sweep>();
    s->dim = p->p.dim();
    s->rows = volume_sweep(p->p, std::vector<double>(energies, energies + p->p.dim()),
                           std::vector<double>(betas, betas + beta_count), from_c(opt));
    *out = s.release();
  });
}

void tc_sweep_destroy(tc_sweep* s) { delete s; }
size_t tc_sweep_dim(const tc_sweep* s) { return s ? s->dim : 0; }
size_t tc_sweep_count(const tc_sweep* s) { return s ? s->rows.size() : 0; }

tc_status tc_sweep_row_get(const tc_sweep* s, size_t index, tc_sweep_row* row, double* state, size_t* order) {
  return guarded([&] {
    need(s, "sweep");
    require(index < s->rows.size(), ErrorKind::InvalidArgument, "sweep row out of range");
    const auto& r = s->rows[index];
    if (row) *row = {r.beta, r.permutation, r.order_changed, r.passive, r.maximally_active, to_c(r.report)};
    if (state) std::copy(r.state.begin(), r.state.end(), state);
    copy_order(r.order, order);
  });
}

tc_status tc_iso_grid(const tc_context* c, size_t resolution, const tc_volume_options* opt, tc_grid** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    need(c, "context");
    auto g = std::make_unique<tc_grid>();
    g->dim = c->ctx.dim();
    for (auto& row : isovolumetric_grid(c->ctx, resolution, from_c(opt))) {
      g->states.push_back(std::move(row.state));
      g->multiplicity.push_back(1);
      g->reports.push_back(row.report);
    }
    *out = g.release();
  });
}

void tc_grid_destroy(tc_grid* g) { delete g; }
size_t tc_grid_dim(const tc_grid* g) { return g ? g->dim : 0; }
size_t tc_grid_count(const tc_grid* g) { return g ? g->states.size() : 0; }

tc_status tc_grid_row(const tc_grid* g, size_t index, double* state, size_t* multiplicity,
                      tc_volume_report* report) {
  return guarded([&] {
    need(g, "grid");
    require(index < g->states.size(), ErrorKind::InvalidArgument, "grid row out of range");
    if (state) std::copy(g->states[index].begin(), g->states[index].end(), state);
    if (multiplicity) *multiplicity = g->multiplicity[index];
    if (report) *report = to_c(g->reports[index]);
  });
}

const char* tc_prob_relation_name(tc_prob_relation r) {
  switch (r) {
    case TC_PROB_FUTURE: return to_string(ProbRelation::Future);
    case TC_PROB_PAST: return to_string(ProbRelation::Past);
    case TC_PROB_INTERCONVERTIBLE: return to_string(ProbRelation::Interconvertible);
    case TC_PROB_INCOMPARABLE: return to_string(ProbRelation::Incomparable);
  }
  return "unknown";
}

tc_status tc_vidal_probability(const tc_state* p, const tc_state* q, double* out) {
  return guarded([&] {
    need(p, "p");
    need(q, "q");
    need(out, "out");
    *out = vidal_probability(p->p, q->p);
  });
}

tc_status tc_tilde_distribution(const tc_state* p, double prob, double* out) {
  return guarded([&] {
    need(p, "p");
    need(out, "out");
    const ProbVector r = tilde_distribution(p->p, prob);
    std::copy(r.values().begin(), r.values().end(), out);
  });
}

tc_status tc_hat_distribution(const tc_state* p, double prob, double* out) {
  return guarded([&] {
    need(p, "p");
    need(out, "out");
    const ProbVector r = hat_distribution(p->p, prob);
    std::copy(r.values().begin(), r.values().end(), out);
  });
}

tc_status tc_prob_classify(const tc_state* q, const tc_state* p, double prob, tc_prob_relation* out) {
  return guarded([&] {
    need(q, "q");
    need(p, "p");
    need(out, "out");
    switch (prob_classify(q->p, p->p, prob)) {
      case ProbRelation::Future: *out = TC_PROB_FUTURE; break;
      case ProbRelation::Past: *out = TC_PROB_PAST; break;
      case ProbRelation::Interconvertible: *out = TC_PROB_INTERCONVERTIBLE; break;
      case ProbRelation::Incomparable: *out = TC_PROB_INCOMPARABLE; break;
    }
  });
}

tc_status tc_schmidt_samples(size_t n, size_t m, uint64_t seed, size_t count, tc_points** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    SampleSet s = sample_schmidt({n, m, seed}, count);
    *out = new tc_points{s.dim, std::move(s.data)};
  });
}

tc_status tc_entanglement_volumes(const tc_state* p, size_t m, uint64_t seed, size_t samples,
                                  tc_volume_report* out) {
  return guarded([&] {
    need(p, "p");
    need(out, "out");
    *out = to_c(entanglement_cone_volumes(p->p, {p->p.dim(), m, seed}, samples));
  });
}

tc_status tc_entanglement_grid(size_t n, size_t m, uint64_t seed, size_t resolution, size_t samples,
                               tc_grid** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    auto g = std::make_unique<tc_grid>();
    g->dim = n;
    for (auto& row : iso_entanglement_grid({n, m, seed}, resolution, samples)) {
      g->states.push_back(std::move(row.state));
      g->multiplicity.push_back(row.multiplicity);
      g->reports.push_back(row.report);
    }
    *out = g.release();
  });
}

tc_status tc_qubit_population_coherence(tc_bloch s, double* p, double* c) {
  return guarded([&] {
    const PopCoherence pc = to_population_coherence(bloch_of(s));
    if (p) *p = pc.p;
    if (c) *c = pc.c;
  });
}

tc_status tc_qubit_gp(tc_bloch s, double zeta, tc_gp_quantities* out) {
  return guarded([&] {
    need(out, "out");
    const GpQuantities g = gp_quantities(bloch_of(s), QubitThermalContext(zeta));
    *out = {g.delta, g.r_plus, g.r_minus, g.r1, g.r2, g.centre1, g.centre2};
  });
}

tc_status tc_qubit_gp_classify(tc_bloch target, tc_bloch source, double zeta, tc_relation* out) {
  return guarded([&] {
    need(out, "out");
    *out = to_c(gp_classify(bloch_of(target), bloch_of(source), QubitThermalContext(zeta)));
  });
}

tc_status tc_qubit_gp_boundary(tc_bloch s, double zeta, size_t points, tc_points** circle1, tc_points** circle2) {
  return guarded([&] {
    need(circle1, "circle1");
    need(circle2, "circle2");
    *circle1 = *circle2 = nullptr;
    const GpBoundary b = gp_boundary(bloch_of(s), QubitThermalContext(zeta), points);
    std::unique_ptr<tc_points> c1(points_from(b.circle1));
    *circle2 = points_from(b.circle2);
    *circle1 = c1.release();
  });
}

tc_status tc_qubit_to_classify(tc_bloch target, tc_bloch source, double zeta, tc_relation* out) {
  return guarded([&] {
    need(out, "out");
    const QubitThermalContext ctx(zeta);
    *out = to_c(to_classify(to_population_coherence(bloch_of(target)), to_population_coherence(bloch_of(source)),
                            ctx));
  });
}

tc_status tc_qubit_to_future(tc_bloch s, double zeta, size_t points, tc_points** outline) {
  return guarded([&] {
    need(outline, "outline");
    *outline = nullptr;
    const QubitThermalContext ctx(zeta);
    *outline = points_from(to_future_region(to_population_coherence(bloch_of(s)), ctx, points));
  });
}

tc_status tc_qubit_to_past(tc_bloch s, double zeta, size_t points, tc_qubit_past* info, tc_points** piece1,
                           tc_points** piece2) {
  return guarded([&] {
    need(info, "info");
    need(piece1, "piece1");
    need(piece2, "piece2");
    *piece1 = *piece2 = nullptr;
    const QubitThermalContext ctx(zeta);
    const ToPastRegion r = to_past_region(to_population_coherence(bloch_of(s)), ctx, points);
    *info = {r.d_cross, r.d_min.has_value(), r.d_min.value_or(std::nan("")), r.d_max.value_or(std::nan(""))};
    std::unique_ptr<tc_points> p1(points_from(r.piece1));
    *piece2 = points_from(r.piece2);
    *piece1 = p1.release();
  });
}

}  // extern "C"
