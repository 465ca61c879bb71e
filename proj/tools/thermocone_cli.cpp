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

// Command-line front end. Everything numerical goes through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "thermocone/thermocone.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void invalid(const std::string& msg) { throw Failure{kExitValidation, msg}; }

void check(tc_status s) {
  if (s == TC_OK) return;
  const int code = (s == TC_ERR_NUMERICAL || s == TC_ERR_ALLOC) ? kExitNumerical : kExitValidation;
  throw Failure{code, std::string(tc_status_name(s)) + ": " + tc_last_error()};
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using State = std::unique_ptr<tc_state, Deleter<tc_state, tc_state_destroy>>;
using Context = std::unique_ptr<tc_context, Deleter<tc_context, tc_context_destroy>>;
using Points = std::unique_ptr<tc_points, Deleter<tc_points, tc_points_destroy>>;
using Cones = std::unique_ptr<tc_cones, Deleter<tc_cones, tc_cones_destroy>>;
using Sweep = std::unique_ptr<tc_sweep, Deleter<tc_sweep, tc_sweep_destroy>>;
using Grid = std::unique_ptr<tc_grid, Deleter<tc_grid, tc_grid_destroy>>;

// ---- parsing ----

double parse_number(const std::string& text, const std::string& what) {
  std::string t = text;
  t.erase(0, t.find_first_not_of(" \t"));
  t.erase(t.find_last_not_of(" \t") + 1);
  if (t.empty()) invalid(what + ": empty number");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE) invalid(what + ": cannot parse '" + text + "'");
  if (std::isnan(v)) invalid(what + ": NaN is not allowed");
  return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, what));
  if (out.empty()) invalid(what + ": empty list");
  return out;
}

std::vector<double> finite_list(const std::string& text, const std::string& what) {
  auto v = parse_list(text, what);
  for (double x : v)
    if (!std::isfinite(x)) invalid(what + ": entries must be finite");
  return v;
}

std::vector<double> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) invalid("--betas: expected start:stop:step");
  const double a = parse_number(parts[0], "--betas"), b = parse_number(parts[1], "--betas"),
               step = parse_number(parts[2], "--betas");
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(step)) invalid("--betas: bounds must be finite");
  if (!(step > 0.0)) invalid("--betas: step must be positive");
  if (b < a) invalid("--betas: stop must not be below start");
  const auto n = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
  if (n > 100000) invalid("--betas: too many values");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a + static_cast<double>(i) * step;
  return out;
}

// ---- output helpers ----

json num(double v) { return std::isfinite(v) ? json(v) : (std::isnan(v) ? json(nullptr) : json(v > 0 ? "inf" : "-inf")); }

json vec(const double* v, std::size_t n) {
  json a = json::array();
  for (std::size_t i = 0; i < n; ++i) a.push_back(num(v[i]));
  return a;
}

json vec(const std::vector<double>& v) { return vec(v.data(), v.size()); }

json idx(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join_values(const std::vector<double>& v, const char* sep = ";") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + fmt(v[i]);
  return s;
}

std::string join_index(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  return s;
}

json report_json(const tc_volume_report& r) {
  return json{{"method", tc_method_name(r.method)}, {"samples", r.samples},
              {"v_future", num(r.v_future)},        {"v_past", num(r.v_past)},
              {"v_incomparable", num(r.v_incomparable)}, {"se_future", num(r.se_future)},
              {"se_past", num(r.se_past)},           {"se_incomparable", num(r.se_incomparable)}};
}

std::string report_header() { return "method,samples,v_future,v_past,v_incomparable,se_future,se_past,se_incomparable"; }

std::string report_csv(const tc_volume_report& r) {
  return std::string(tc_method_name(r.method)) + "," + std::to_string(r.samples) + "," + fmt(r.v_future) + "," +
         fmt(r.v_past) + "," + fmt(r.v_incomparable) + "," + fmt(r.se_future) + "," + fmt(r.se_past) + "," +
         fmt(r.se_incomparable);
}

// A CSV document: metadata lines, then one or more tables.
struct Csv {
  std::vector<std::pair<std::string, std::string>> meta;
  std::ostringstream body;
};

// ---- configuration ----

struct Config {
  std::string command;
  std::string state, energies, beta = "0", method = "auto", betas, p_values, bloch, mode = "gp", orientation;
  std::size_t resolution = 0, n = 3, m = 3, samples = 0;
  double zeta = 0.0;
  std::uint64_t seed = 0;
  std::string format = "json", output;
};

std::vector<double> state_of(const Config& c) {
  if (c.state.empty()) invalid("--state is required");
  return finite_list(c.state, "--state");
}

double beta_of(const Config& c) {
  const double b = parse_number(c.beta, "--beta");
  if (b < 0.0) invalid("--beta must be non-negative");
  return b;
}

std::vector<double> energies_of(const Config& c, std::size_t d) {
  if (c.energies.empty()) return std::vector<double>(d, 0.0);
  auto e = finite_list(c.energies, "--energies");
  if (e.size() != d) invalid("--energies must have as many entries as the state");
  return e;
}

tc_volume_options options_of(const Config& c, std::size_t default_samples) {
  tc_volume_options o;
  tc_volume_options_default(&o);
  if (c.method == "auto") o.method = TC_METHOD_AUTO;
  else if (c.method == "closed-form") o.method = TC_METHOD_CLOSED_FORM;
  else if (c.method == "exact-hull") o.method = TC_METHOD_EXACT_HULL;
  else if (c.method == "monte-carlo") o.method = TC_METHOD_MONTE_CARLO;
  else invalid("--method must be auto, closed-form, exact-hull or monte-carlo");
  o.samples = c.samples ? c.samples : default_samples;
  o.seed = c.seed;
  return o;
}

State make_state(const std::vector<double>& v) {
  tc_state* s = nullptr;
  check(tc_state_create(v.data(), v.size(), &s));
  return State(s);
}

Context make_context(const std::vector<double>& energies, double beta) {
  tc_context* c = nullptr;
  check(tc_context_create(energies.data(), energies.size(), beta, &c));
  return Context(c);
}

tc_bloch bloch_of(const Config& c) {
  if (c.bloch.empty()) invalid("--bloch is required");
  const auto v = finite_list(c.bloch, "--bloch");
  if (v.size() != 3) invalid("--bloch needs three coordinates x,y,z");
  return {v[0], v[1], v[2]};
}

// Grid of the full d = 3 simplex with entries k / r.
std::vector<std::vector<double>> simplex_grid3(std::size_t r) {
  std::vector<std::vector<double>> out;
  const double rr = static_cast<double>(r);
  for (std::size_t i = 0; i <= r; ++i)
    for (std::size_t j = 0; i + j <= r; ++j)
      out.push_back({static_cast<double>(i) / rr, static_cast<double>(j) / rr, static_cast<double>(r - i - j) / rr});
  return out;
}

// ---- commands ----

void cmd_cones(const Config& cfg, json& results, Csv& csv) {
  const auto p = state_of(cfg);
  const std::size_t d = p.size();
  const auto energies = energies_of(cfg, d);
  const double beta = beta_of(cfg);
  auto state = make_state(p);
  auto ctx = make_context(energies, beta);
  const bool with_past = d >= 2 && d <= 4;
  tc_cones* raw = nullptr;
  check(tc_cones_compute(state.get(), ctx.get(), with_past, &raw));
  Cones cones(raw);

  std::vector<std::size_t> order(d);
  check(tc_beta_order(state.get(), ctx.get(), order.data()));
  results["dim"] = d;
  results["gibbs"] = vec(tc_context_gibbs(ctx.get()), d);
  results["beta_order"] = idx(order);
  results["past_available"] = with_past;

  csv.body << "kind,chamber,piece,vertex";
  for (std::size_t i = 0; i < d; ++i) csv.body << ",x" << i + 1;
  csv.body << "\n";

  json future = json::array(), past = json::array(), incomparable = json::array();
  for (std::size_t k = 0; k < tc_cones_polytope_count(cones.get()); ++k) {
    tc_polytope_kind kind;
    std::size_t piece = 0, nv = 0;
    int has_chamber = 0;
    std::vector<std::size_t> chamber(d);
    check(tc_cones_polytope(cones.get(), k, &kind, &piece, &has_chamber, chamber.data(), &nv));
    const double* v = tc_cones_vertices(cones.get(), k);
    json verts = json::array();
    for (std::size_t i = 0; i < nv; ++i) {
      verts.push_back(vec(v + i * d, d));
      csv.body << tc_polytope_kind_name(kind) << "," << (has_chamber ? join_index(chamber) : "") << "," << piece
               << "," << i;
      for (std::size_t j = 0; j < d; ++j) csv.body << "," << fmt(v[i * d + j]);
      csv.body << "\n";
    }
    json entry{{"vertices", verts}};
    if (has_chamber) entry = json{{"chamber", idx(chamber)}, {"vertices", verts}};
    if (kind == TC_POLYTOPE_INCOMPARABLE_PIECE)
      entry = json{{"chamber", idx(chamber)}, {"tangent_levels", json::array({piece, piece + 1})}, {"vertices", verts}};
    if (kind == TC_POLYTOPE_FUTURE) future = verts;
    else if (kind == TC_POLYTOPE_PAST_CHAMBER) past.push_back(entry);
    else incomparable.push_back(entry);
  }
  results["future"] = json{{"vertices", future}};
  results["past"] = with_past ? json(past) : json(nullptr);
  results["incomparable"] = with_past ? json(incomparable) : json(nullptr);

  json tangents = json::array();
  for (std::size_t k = 0; k < tc_cones_tangent_count(cones.get()); ++k) {
    std::size_t level = 0;
    std::vector<std::size_t> chamber(d);
    std::vector<double> rawv(d), proj(d);
    int ok = 0;
    check(tc_cones_tangent(cones.get(), k, &level, chamber.data(), rawv.data(), proj.data(), &ok));
    tangents.push_back(json{{"level", level}, {"chamber", idx(chamber)}, {"raw", vec(rawv)},
                            {"projected", ok ? vec(proj) : json(nullptr)}});
    csv.body << "tangent_raw," << join_index(chamber) << "," << level << ",0";
    for (double x : rawv) csv.body << "," << fmt(x);
    csv.body << "\n";
    if (ok) {
      csv.body << "tangent_projected," << join_index(chamber) << "," << level << ",0";
      for (double x : proj) csv.body << "," << fmt(x);
      csv.body << "\n";
    }
  }
  results["tangents"] = tangents;
  csv.meta.push_back({"beta_order", join_index(order)});
}

void cmd_volume(const Config& cfg, json& results, Csv& csv) {
  const auto p = state_of(cfg);
  auto state = make_state(p);
  auto ctx = make_context(energies_of(cfg, p.size()), beta_of(cfg));
  const auto opt = options_of(cfg, 1000000);
  tc_volume_report r;
  check(tc_volumes(state.get(), ctx.get(), &opt, &r));
  if (cfg.orientation == "entanglement") {
    // LOCC reverses the beta = 0 order: future and past trade places.
    if (beta_of(cfg) != 0.0 && !cfg.energies.empty()) invalid("--orientation entanglement needs --beta 0");
    std::swap(r.v_future, r.v_past);
    std::swap(r.se_future, r.se_past);
  }
  results = report_json(r);
  csv.body << report_header() << "\n" << report_csv(r) << "\n";
}

void cmd_sweep(const Config& cfg, json& results, Csv& csv) {
  const auto p = state_of(cfg);
  const std::size_t d = p.size();
  if (cfg.energies.empty()) invalid("--energies is required for sweep");
  const auto energies = energies_of(cfg, d);
  if (cfg.betas.empty()) invalid("--betas is required for sweep");
  const auto betas = parse_range(cfg.betas);
  auto state = make_state(p);
  const auto opt = options_of(cfg, 1000000);
  tc_sweep* raw = nullptr;
  check(tc_volume_sweep(state.get(), energies.data(), betas.data(), betas.size(), &opt, &raw));
  Sweep sweep(raw);
  json rows = json::array();
  csv.body << "beta,permutation,state,order,order_changed,passive,maximally_active," << report_header() << "\n";
  for (std::size_t k = 0; k < tc_sweep_count(sweep.get()); ++k) {
    tc_sweep_row row;
    std::vector<double> s(d);
    std::vector<std::size_t> order(d);
    check(tc_sweep_row_get(sweep.get(), k, &row, s.data(), order.data()));
    rows.push_back(json{{"beta", num(row.beta)},
                        {"permutation", row.permutation},
                        {"state", vec(s)},
                        {"order", idx(order)},
                        {"order_changed", static_cast<bool>(row.order_changed)},
                        {"passive", static_cast<bool>(row.passive)},
                        {"maximally_active", static_cast<bool>(row.maximally_active)},
                        {"volumes", report_json(row.report)}});
    csv.body << fmt(row.beta) << "," << row.permutation << "," << join_values(s) << "," << join_index(order) << ","
             << row.order_changed << "," << row.passive << "," << row.maximally_active << ","
             << report_csv(row.report) << "\n";
  }
  results["rows"] = rows;
}

void cmd_iso(const Config& cfg, json& results, Csv& csv) {
  const double beta = beta_of(cfg);
  const auto energies = cfg.energies.empty() ? std::vector<double>{0.0, 1.0, 2.0} : energies_of(cfg, 3);
  auto ctx = make_context(energies, beta);
  const auto opt = options_of(cfg, 1000000);
  const std::size_t res = cfg.resolution ? cfg.resolution : 60;
  tc_grid* raw = nullptr;
  check(tc_iso_grid(ctx.get(), res, &opt, &raw));
  Grid grid(raw);
  json rows = json::array();
  csv.body << "p1,p2,p3," << report_header() << "\n";
  for (std::size_t k = 0; k < tc_grid_count(grid.get()); ++k) {
    std::vector<double> s(3);
    tc_volume_report r;
    check(tc_grid_row(grid.get(), k, s.data(), nullptr, &r));
    rows.push_back(json{{"state", vec(s)}, {"volumes", report_json(r)}});
    csv.body << join_values(s, ",") << "," << report_csv(r) << "\n";
  }
  results["energies"] = vec(energies);
  results["resolution"] = res;
  results["rows"] = rows;
  csv.meta.push_back({"resolution", std::to_string(res)});
}

void cmd_prob(const Config& cfg, json& results, Csv& csv) {
  const auto p = state_of(cfg);
  const std::size_t d = p.size();
  if (cfg.p_values.empty()) invalid("--p is required for prob");
  const auto ps = finite_list(cfg.p_values, "--p");
  for (double v : ps)
    if (!(v > 0.0 && v <= 1.0)) invalid("--p values must lie in (0, 1]");
  auto state = make_state(p);
  const std::size_t res = cfg.resolution ? cfg.resolution : 60;
  const bool grid = d == 3;
  const auto points = grid ? simplex_grid3(res) : std::vector<std::vector<double>>{};
  std::vector<State> targets;
  for (const auto& q : points) targets.push_back(make_state(q));

  json panels = json::array();
  csv.body << "P,q1,q2,q3,relation\n";
  for (double prob : ps) {
    std::vector<double> tilde(d), hat(d);
    check(tc_tilde_distribution(state.get(), prob, tilde.data()));
    check(tc_hat_distribution(state.get(), prob, hat.data()));
    json rows = json::array();
    std::size_t counts[4] = {0, 0, 0, 0};
    for (std::size_t k = 0; k < points.size(); ++k) {
      tc_prob_relation rel;
      check(tc_prob_classify(targets[k].get(), state.get(), prob, &rel));
      ++counts[rel];
      rows.push_back(json{{"state", vec(points[k])}, {"relation", tc_prob_relation_name(rel)}});
      csv.body << fmt(prob) << "," << join_values(points[k], ",") << "," << tc_prob_relation_name(rel) << "\n";
    }
    json panel{{"P", prob}, {"tilde", vec(tilde)}, {"hat", vec(hat)}};
    if (grid) {
      json c;
      for (int r = 0; r < 4; ++r) c[tc_prob_relation_name(static_cast<tc_prob_relation>(r))] = counts[r];
      panel["counts"] = c;
      panel["grid"] = rows;
    }
    panels.push_back(panel);
  }
  results["resolution"] = grid ? json(res) : json(nullptr);
  results["panels"] = panels;
}

// Sorted composition of resolution nearest to a sorted spectrum.
std::vector<std::size_t> grid_cell(const double* v, std::size_t n, std::size_t res) {
  std::vector<std::size_t> k(n);
  std::vector<std::pair<double, std::size_t>> rem(n);
  std::size_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = v[i] * static_cast<double>(res);
    k[i] = static_cast<std::size_t>(std::floor(x));
    used += k[i];
    rem[i] = {x - std::floor(x), i};
  }
  std::stable_sort(rem.begin(), rem.end(), [](auto a, auto b) { return a.first > b.first; });
  for (std::size_t i = 0; used < res && i < n; ++i, ++used) ++k[rem[i].second];
  std::sort(k.begin(), k.end(), std::greater<>());
  return k;
}

void cmd_entangle(const Config& cfg, json& results, Csv& csv) {
  const std::size_t samples = cfg.samples ? cfg.samples : 50000;
  const std::size_t res = cfg.resolution ? cfg.resolution : 60;
  csv.meta.push_back({"N", std::to_string(cfg.n)});
  csv.meta.push_back({"M", std::to_string(cfg.m)});
  csv.meta.push_back({"n", std::to_string(samples)});
  results["N"] = cfg.n;
  results["M"] = cfg.m;
  results["samples"] = samples;
  if (!cfg.state.empty()) {
    const auto p = state_of(cfg);
    if (p.size() != cfg.n) invalid("--state must have N entries");
    auto state = make_state(p);
    tc_volume_report r;
    check(tc_entanglement_volumes(state.get(), cfg.m, cfg.seed, samples, &r));
    results["state"] = vec(p);
    results["volumes"] = report_json(r);
    csv.body << report_header() << "\n" << report_csv(r) << "\n";
    return;
  }
  tc_grid* raw = nullptr;
  check(tc_entanglement_grid(cfg.n, cfg.m, cfg.seed, res, samples, &raw));
  Grid grid(raw);
  tc_points* sp = nullptr;
  check(tc_schmidt_samples(cfg.n, cfg.m, cfg.seed, samples, &sp));
  Points spectra(sp);
  // Empirical density on the same grid: samples binned to the nearest point.
  const std::size_t n = cfg.n;
  const double* data = tc_points_data(spectra.get());
  std::vector<std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < tc_points_count(spectra.get()); ++i) cells.push_back(grid_cell(data + i * n, n, res));
  std::sort(cells.begin(), cells.end());

  json rows = json::array();
  csv.body << "state,multiplicity,density," << report_header() << "\n";
  for (std::size_t k = 0; k < tc_grid_count(grid.get()); ++k) {
    std::vector<double> s(n);
    std::size_t mult = 0;
    tc_volume_report r;
    check(tc_grid_row(grid.get(), k, s.data(), &mult, &r));
    std::vector<std::size_t> key(n);
    for (std::size_t i = 0; i < n; ++i) key[i] = static_cast<std::size_t>(std::llround(s[i] * static_cast<double>(res)));
    const auto range = std::equal_range(cells.begin(), cells.end(), key);
    const double density = static_cast<double>(range.second - range.first) / static_cast<double>(samples);
    rows.push_back(json{{"state", vec(s)}, {"multiplicity", mult}, {"density", density}, {"volumes", report_json(r)}});
    csv.body << join_values(s) << "," << mult << "," << fmt(density) << "," << report_csv(r) << "\n";
  }
  results["resolution"] = res;
  results["rows"] = rows;
}

json polyline(const tc_points* pts, const char* a, const char* b) {
  json out = json::array();
  const double* v = tc_points_data(pts);
  for (std::size_t i = 0; i < tc_points_count(pts); ++i) out.push_back(json{{a, num(v[2 * i])}, {b, num(v[2 * i + 1])}});
  return out;
}

void polyline_csv(Csv& csv, const std::string& name, const tc_points* pts, bool dq) {
  const double* v = tc_points_data(pts);
  for (std::size_t i = 0; i < tc_points_count(pts); ++i) {
    const double a = v[2 * i], b = v[2 * i + 1];
    // (d, q) maps to Bloch (x, z) = (2d, 2q - 1).
    const double d = dq ? a : a / 2, q = dq ? b : (b + 1) / 2;
    csv.body << name << "," << i << "," << fmt(d) << "," << fmt(q) << "," << fmt(2 * d) << "," << fmt(2 * q - 1)
             << "\n";
  }
}

json bloch_polyline(const tc_points* pts) {
  json out = json::array();
  const double* v = tc_points_data(pts);
  for (std::size_t i = 0; i < tc_points_count(pts); ++i)
    out.push_back(json{{"x", num(2 * v[2 * i])}, {"z", num(2 * v[2 * i + 1] - 1)}});
  return out;
}

void cmd_qubit(const Config& cfg, json& results, Csv& csv) {
  const tc_bloch s = bloch_of(cfg);
  if (!std::isfinite(cfg.zeta)) invalid("--zeta must be finite");
  const std::size_t points = cfg.resolution ? cfg.resolution : 1024;
  double p = 0, c = 0;
  check(tc_qubit_population_coherence(s, &p, &c));
  results["p"] = p;
  results["c"] = c;
  results["gamma"] = (1 + cfg.zeta) / 2;
  results["mirror"] = "regions are symmetric under x -> -x; outlines cover x >= 0";
  csv.body << "curve,index,d,q,x,z\n";
  if (cfg.mode == "gp") {
    tc_gp_quantities g;
    check(tc_qubit_gp(s, cfg.zeta, &g));
    tc_points *c1 = nullptr, *c2 = nullptr;
    check(tc_qubit_gp_boundary(s, cfg.zeta, points, &c1, &c2));
    Points p1(c1), p2(c2);
    results["gp"] = json{{"delta", g.delta}, {"r_plus", g.r_plus}, {"r_minus", g.r_minus}, {"r1", g.r1},
                         {"r2", g.r2},       {"centre1_z", g.centre1}, {"centre2_z", g.centre2}};
    results["circle1"] = polyline(p1.get(), "x", "z");
    results["circle2"] = polyline(p2.get(), "x", "z");
    polyline_csv(csv, "circle1", p1.get(), false);
    polyline_csv(csv, "circle2", p2.get(), false);
    for (auto& [k, v] : results["gp"].items()) csv.meta.push_back({k, fmt(v.get<double>())});
  } else if (cfg.mode == "to") {
    tc_points* f = nullptr;
    check(tc_qubit_to_future(s, cfg.zeta, points, &f));
    Points fut(f);
    tc_qubit_past info;
    tc_points *a = nullptr, *b = nullptr;
    check(tc_qubit_to_past(s, cfg.zeta, points, &info, &a, &b));
    Points piece1(a), piece2(b);
    results["future"] = json{{"dq", polyline(fut.get(), "d", "q")}, {"bloch", bloch_polyline(fut.get())}};
    results["past"] = json{{"d_cross", info.d_cross},
                           {"has_piece2", static_cast<bool>(info.has_piece2)},
                           {"d_min", num(info.d_min)},
                           {"d_max", num(info.d_max)},
                           {"piece1", json{{"dq", polyline(piece1.get(), "d", "q")}, {"bloch", bloch_polyline(piece1.get())}}},
                           {"piece2", json{{"dq", polyline(piece2.get(), "d", "q")}, {"bloch", bloch_polyline(piece2.get())}}}};
    polyline_csv(csv, "future", fut.get(), true);
    polyline_csv(csv, "past_piece1", piece1.get(), true);
    polyline_csv(csv, "past_piece2", piece2.get(), true);
    csv.meta.push_back({"d_cross", fmt(info.d_cross)});
  } else {
    invalid("--mode must be gp or to");
  }
}

json config_json(const Config& c) {
  json j{{"command", c.command}};
  auto put = [&](const char* k, const std::string& v) {
    if (!v.empty()) j[k] = v;
  };
  put("state", c.state);
  put("energies", c.energies);
  if (c.command != "entangle" && c.command != "qubit" && c.command != "prob") j["beta"] = c.beta;
  if (c.command == "volume" || c.command == "sweep" || c.command == "iso") j["method"] = c.method;
  put("orientation", c.orientation);
  put("betas", c.betas);
  put("p", c.p_values);
  put("bloch", c.bloch);
  if (c.command == "qubit") {
    j["zeta"] = c.zeta;
    j["mode"] = c.mode;
  }
  if (c.command == "entangle") {
    j["n"] = c.n;
    j["m"] = c.m;
  }
  if (c.resolution) j["resolution"] = c.resolution;
  if (c.samples) j["samples"] = c.samples;
  j["format"] = c.format;
  return j;
}

void write_output(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(cfg.output);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) invalid("cannot open " + tmp.string() + " for writing");
    out << text;
    out.close();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Failure{kExitNumerical, "write to " + tmp.string() + " failed"};
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Failure{kExitValidation, "cannot write " + target.string()};
  }
}

int run(const Config& cfg) {
  json results = json::object();
  Csv csv;
  if (cfg.format != "json" && cfg.format != "csv") invalid("--format must be json or csv");
  if (cfg.orientation.size() && cfg.orientation != "thermodynamic" && cfg.orientation != "entanglement")
    invalid("--orientation must be thermodynamic or entanglement");
  if (cfg.command == "cones") cmd_cones(cfg, results, csv);
  else if (cfg.command == "volume") cmd_volume(cfg, results, csv);
  else if (cfg.command == "sweep") cmd_sweep(cfg, results, csv);
  else if (cfg.command == "iso") cmd_iso(cfg, results, csv);
  else if (cfg.command == "prob") cmd_prob(cfg, results, csv);
  else if (cfg.command == "entangle") cmd_entangle(cfg, results, csv);
  else if (cfg.command == "qubit") cmd_qubit(cfg, results, csv);

  std::string text;
  if (cfg.format == "json") {
    json doc{{"config", config_json(cfg)},
             {"results", results},
             {"provenance", json{{"seed", cfg.seed}, {"version", tc_version()}}}};
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "# thermocone-schema v1\n";
    out << "# command=" << cfg.command << "\n";
    out << "# version=" << tc_version() << "\n";
    out << "# seed=" << cfg.seed << "\n";
    for (const auto& [k, v] : csv.meta) out << "# " << k << "=" << v << "\n";
    out << csv.body.str();
    text = out.str();
  }
  write_output(cfg, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal cones, their volumes and related majorisation geometry"};
  app.set_version_flag("--version", std::string(tc_version()));
  app.require_subcommand(1, 1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Master random seed")->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format: json or csv")->capture_default_str();
    sub->add_option("--output", cfg.output, "Output file (default: standard output)");
  };
  auto thermal = [&](CLI::App* sub) {
    sub->add_option("--energies", cfg.energies, "Comma-separated energy levels");
    sub->add_option("--beta", cfg.beta, "Inverse temperature, or inf")->capture_default_str();
  };
  auto volume_opts = [&](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "auto, closed-form, exact-hull or monte-carlo")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "Monte Carlo sample count");
  };

  auto* cones = app.add_subcommand("cones", "Future, past and incomparable vertex lists and tangent vectors");
  cones->add_option("--state", cfg.state, "Comma-separated probabilities");
  thermal(cones);
  common(cones);

  auto* volume = app.add_subcommand("volume", "Relative volumes of the three regions");
  volume->add_option("--state", cfg.state, "Comma-separated probabilities");
  thermal(volume);
  volume_opts(volume);
  volume->add_option("--orientation", cfg.orientation, "thermodynamic (default) or entanglement");
  common(volume);

  auto* sweep = app.add_subcommand("sweep", "Volumes of every permutation of a state over a range of beta");
  sweep->add_option("--state", cfg.state, "Comma-separated probabilities");
  sweep->add_option("--energies", cfg.energies, "Comma-separated energy levels");
  sweep->add_option("--betas", cfg.betas, "start:stop:step");
  volume_opts(sweep);
  common(sweep);

  auto* iso = app.add_subcommand("iso", "Volumes over a regular grid of the three-level simplex");
  thermal(iso);
  iso->add_option("--resolution", cfg.resolution, "Grid steps per side (default 60)");
  volume_opts(iso);
  common(iso);

  auto* prob = app.add_subcommand("prob", "Probabilistic cones at given success probabilities");
  prob->add_option("--state", cfg.state, "Comma-separated probabilities");
  prob->add_option("--p", cfg.p_values, "Comma-separated success probabilities in (0, 1]");
  prob->add_option("--resolution", cfg.resolution, "Grid steps per side (default 60)");
  common(prob);

  auto* ent = app.add_subcommand("entangle", "Entanglement cone volumes under the induced Haar measure");
  ent->add_option("--n", cfg.n, "Smaller subsystem dimension N")->capture_default_str();
  ent->add_option("--m", cfg.m, "Larger subsystem dimension M")->capture_default_str();
  ent->add_option("--samples", cfg.samples, "Number of sampled spectra (default 50000)");
  ent->add_option("--resolution", cfg.resolution, "Grid steps per side (default 60)");
  ent->add_option("--state", cfg.state, "Single Schmidt vector instead of a grid");
  common(ent);

  auto* qubit = app.add_subcommand("qubit", "Coherent qubit cones in the XZ plane");
  qubit->add_option("--bloch", cfg.bloch, "Bloch vector x,y,z");
  qubit->add_option("--zeta", cfg.zeta, "Gibbs z coordinate in [0, 1)")->capture_default_str();
  qubit->add_option("--mode", cfg.mode, "gp or to")->capture_default_str();
  qubit->add_option("--resolution", cfg.resolution, "Polyline points (default 1024)");
  common(qubit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    return run(cfg);
  } catch (const Failure& f) {
    std::cerr << "thermocone: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "thermocone: " << e.what() << "\n";
    return kExitNumerical;
  }
}
