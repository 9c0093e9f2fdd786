// Copyright 2026 The cvkernels Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. run() returns the process exit code:
// 0 success, 1 verification/tolerance failure, 2 usage error, 3 data error.

#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cvk/cvk.hpp"

namespace cvk::cli {

using nlohmann::json;

enum ExitCode : int { ok = 0, verification_failure = 1, usage_error = 2, data_error = 3 };

struct RunConfig {
  std::string command;
  std::vector<std::string> families{"coherent"};
  std::vector<double> r{1.0};
  double nbar = 0.5;
  std::vector<double> loss;
  std::vector<double> eta;
  std::string range;
  std::size_t steps = 0;
  std::string axis = "x1";
  std::string mode = "analytic";
  double lambda = 0.0;
  std::string data;
  std::string query;
  std::string test;
  std::string model;
  std::string predictions;
  std::string against;
  std::size_t synthetic = 0;
  bool classify = false;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 1;
  double tol = 0.0;
  std::size_t cutoff_limit = oracle::default_cutoff_limit;
};

namespace detail {

inline std::vector<double> transmissivities(const RunConfig& c, std::vector<double> default_eta) {
  if (!c.loss.empty() && !c.eta.empty()) throw UsageError("give either --loss or --eta, not both");
  std::vector<double> out;
  if (!c.eta.empty()) {
    out = c.eta;
  } else if (!c.loss.empty()) {
    for (double l : c.loss) out.push_back(1.0 - l);
  } else {
    out = std::move(default_eta);
  }
  for (double e : out) require_transmissivity(e);
  return out;
}

inline double single_eta(const RunConfig& c) {
  const std::vector<double> etas = transmissivities(c, {1.0});
  if (etas.size() != 1) throw UsageError("this command takes a single --loss or --eta value");
  return etas.front();
}

inline StateSpec state_spec(const std::string& family, double r, double nbar, double eta, std::size_t modes) {
  StateSpec s{parse_family(family), r, nbar, eta, modes};
  s.validate();
  return s;
}

inline std::pair<double, double> parse_range(const std::string& text, double lo, double hi) {
  if (text.empty()) return {lo, hi};
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--range expects start:stop, got '" + text + "'");
  try {
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError("--range expects start:stop, got '" + text + "'");
  }
}

inline std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

inline json point_json(const DataPoint& p) { return json(std::vector<double>(p.coords().begin(), p.coords().end())); }

/// Writes to `path`, or to `fallback` when the path is empty.
inline void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path);
  f << text;
}

inline KernelSpec kernel_spec(const RunConfig& c, std::size_t modes) {
  if (c.families.size() != 1) throw UsageError("this command takes a single --family");
  if (c.r.size() != 1) throw UsageError("this command takes a single --r");
  KernelSpec k;
  k.state = state_spec(c.families.front(), c.r.front(), c.nbar, single_eta(c), modes);
  k.mode = parse_mode(c.mode);
  if (c.tol > 0.0) k.numeric.tol = c.tol;
  k.numeric.cutoff_limit = c.cutoff_limit;
  return k;
}

inline json spec_json(const KernelSpec& k) {
  return json{{"family", std::string(to_string(k.state.family))},
              {"r", k.state.r},
              {"nbar", k.state.nbar},
              {"eta", k.state.eta},
              {"loss", 1.0 - k.state.eta},
              {"modes", k.state.modes},
              {"mode", std::string(to_string(k.mode))}};
}

inline KernelSpec spec_from_json(const json& j) {
  KernelSpec k;
  k.state = state_spec(j.at("family").get<std::string>(), j.at("r").get<double>(), j.at("nbar").get<double>(),
                       j.at("eta").get<double>(), j.at("modes").get<std::size_t>());
  k.mode = parse_mode(j.at("mode").get<std::string>());
  return k;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// witness

inline int cmd_witness(const RunConfig& c, std::ostream& out) {
  using detail::short_number;
  if (c.families.size() != 1 || c.r.size() != 1) throw UsageError("witness takes a single --family and --r");
  const std::vector<double> etas = detail::transmissivities(c, {1.0});
  const auto [start, stop] = detail::parse_range(c.range, 0.0, 3.0);
  const std::size_t steps = c.steps == 0 ? 301 : c.steps;
  std::size_t axis = 0;
  if (c.axis == "x2") {
    axis = 1;
  } else if (c.axis != "x1") {
    throw UsageError("--axis must be x1 or x2");
  }
  if (c.format != "csv" && c.format != "json") throw UsageError("--format must be csv or json");
  const std::vector<DataPoint> offsets = axis_offsets(1, axis, start, stop, steps);

  json summary = json::array();
  if (!c.out.empty()) std::filesystem::create_directories(c.out);
  for (double eta : etas) {
    KernelSpec k;
    k.state = detail::state_spec(c.families.front(), c.r.front(), c.nbar, eta, 1);
    k.mode = parse_mode(c.mode);
    const WitnessReport rep = witness_scan(k, offsets);

    const DataPoint& at = rep.argmin_offset();
    summary.push_back({{"family", std::string(to_string(k.state.family))},
                       {"r", k.state.r},
                       {"nbar", k.state.nbar},
                       {"loss", 1.0 - eta},
                       {"eta", eta},
                       {"min_witness", rep.min_witness},
                       {"argmin_delta_x1", at[0]},
                       {"argmin_delta_x2", at[1]}});
    if (c.out.empty()) continue;

    std::ostringstream body;
    if (c.format == "csv") {
      body << "delta_x1,delta_x2,kernel,bound,witness\n";
      for (std::size_t i = 0; i < rep.offsets.size(); ++i) {
        const double row[] = {rep.offsets[i][0], rep.offsets[i][1], rep.kernel[i], rep.bound[i], rep.witness[i]};
        io::write_row(body, row);
      }
    } else {
      json rows = json::array();
      for (std::size_t i = 0; i < rep.offsets.size(); ++i) {
        rows.push_back({{"delta_x1", rep.offsets[i][0]},
                        {"delta_x2", rep.offsets[i][1]},
                        {"kernel", rep.kernel[i]},
                        {"bound", rep.bound[i]},
                        {"witness", rep.witness[i]}});
      }
      body << rows.dump(2) << '\n';
    }
    const std::string name = "witness_" + std::string(to_string(k.state.family)) + "_loss" + short_number(1.0 - eta) +
                             "." + c.format;
    detail::emit((std::filesystem::path(c.out) / name).string(), body.str(), out);
  }
  const std::string text = summary.dump(2) + "\n";
  if (c.out.empty()) {
    out << text;
  } else {
    detail::emit((std::filesystem::path(c.out) / "summary.json").string(), text, out);
  }
  return ok;
}

// ---------------------------------------------------------------------------
// verify

inline int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<std::string> families = c.families;
  if (families.size() == 1 && families.front() == "all") families = {"coherent", "squeezed", "single-photon", "thermal"};
  const std::vector<double> etas = detail::transmissivities(c, {0.0, 0.2, 0.5, 0.8, 1.0});
  const auto [start, stop] = detail::parse_range(c.range, -3.0, 3.0);
  const std::size_t steps = c.steps == 0 ? 21 : c.steps;
  const double tol = c.tol > 0.0 ? c.tol : 1e-6;

  // pairs straddle the origin, x = -d/2 and x' = +d/2, along each axis
  std::vector<DataPoint> deltas = axis_offsets(1, 0, start, stop, steps);
  for (const DataPoint& d : axis_offsets(1, 1, start, stop, steps)) deltas.push_back(d);
  double reach = 0.0;
  for (const DataPoint& d : deltas) reach = std::max(reach, 0.5 * std::sqrt(d.norm_sq()));

  json report = json::object();
  report["tolerance"] = tol;
  report["range"] = {start, stop};
  report["steps"] = steps;
  report["families"] = json::array();
  bool pass = true;
  for (const std::string& fam : families) {
    const Family f = parse_family(fam);
    const std::vector<double> rs = f == Family::squeezed ? c.r : std::vector<double>{0.0};
    for (double r : rs) {
      for (double eta : etas) {
        const StateSpec s = detail::state_spec(fam, r, c.nbar, eta, 1);
        json entry = {{"family", std::string(to_string(f))}, {"r", r}, {"nbar", s.nbar}, {"eta", eta}};
        std::size_t cutoff = 0;
        try {
          cutoff = oracle::choose_cutoff(s, reach, 1e-12, c.cutoff_limit);
        } catch (const CutoffError& e) {
          err << "verify: " << e.what() << '\n';
          entry["error"] = e.what();
          entry["pass"] = false;
          report["families"].push_back(entry);
          pass = false;
          continue;
        }
        double max_abs = 0.0, max_rel = 0.0, max_abs_gaussian = 0.0;
        const FockState base = make_fock_state(s, cutoff, 1e-10);
        for (const DataPoint& d : deltas) {
          const DataPoint x = -0.5 * d;
          const DataPoint xp = 0.5 * d;
          const double a = kernel_analytic(s, x, xp);
          const double n = oracle::kernel_numeric(base, x, xp);
          max_abs = std::max(max_abs, std::abs(a - n));
          if (std::abs(a) > 0.0) max_rel = std::max(max_rel, std::abs(a - n) / std::abs(a));
          if (s.is_gaussian()) max_abs_gaussian = std::max(max_abs_gaussian, std::abs(a - oracle::kernel_gaussian(s, x, xp)));
        }
        const bool good = max_abs <= tol && max_abs_gaussian <= tol;
        pass = pass && good;
        entry["cutoff"] = cutoff;
        entry["max_abs_dev"] = max_abs;
        entry["max_rel_dev"] = max_rel;
        if (s.is_gaussian()) entry["max_abs_dev_moment_route"] = max_abs_gaussian;
        entry["pass"] = good;
        report["families"].push_back(entry);
      }
    }
  }
  report["pass"] = pass;
  detail::emit(c.out, report.dump(2) + "\n", out);
  return pass ? ok : verification_failure;
}

// ---------------------------------------------------------------------------
// gram

inline int cmd_gram(const RunConfig& c, std::ostream& out) {
  if (c.data.empty()) throw UsageError("gram needs --data");
  const io::Table t = io::read_points(c.data);
  if (t.points.empty()) throw DataError(c.data + ": no points");
  const KernelSpec k = detail::kernel_spec(c, t.points.front().modes());
  for (const DataPoint& p : t.points) {
    if (p.modes() != k.state.modes) throw DataError("mixed point dimensions in " + c.data);
  }
  const GramMatrix g = gram(k, t.points);
  std::ostringstream body;
  if (c.format == "json") {
    json rows = json::array();
    for (Eigen::Index i = 0; i < g.entries().rows(); ++i) {
      rows.push_back(std::vector<double>(g.entries().row(i).begin(), g.entries().row(i).end()));
    }
    body << json{{"spec", detail::spec_json(k)}, {"entries", rows}, {"min_eigenvalue", g.min_eigenvalue()}}.dump(2)
         << '\n';
  } else if (c.format == "csv") {
    for (std::size_t j = 0; j < g.size(); ++j) body << (j ? "," : "") << "k" << j;
    body << '\n';
    for (Eigen::Index i = 0; i < g.entries().rows(); ++i) {
      const std::vector<double> row(g.entries().row(i).begin(), g.entries().row(i).end());
      io::write_row(body, row);
    }
  } else {
    throw UsageError("--format must be csv or json");
  }
  detail::emit(c.out, body.str(), out);
  return ok;
}

// ---------------------------------------------------------------------------
// fit / predict

/// M points uniform in [-2, 2]^2 labelled by a random combination of five kernel sections.
inline LabeledDataset synthetic_dataset(const KernelSpec& k, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> weight(-1.0, 1.0);
  auto draw = [&] {
    std::vector<double> v(2 * k.state.modes);
    for (double& x : v) x = coord(rng);
    return DataPoint(std::move(v));
  };
  std::vector<DataPoint> centers;
  std::vector<double> weights;
  for (int i = 0; i < 5; ++i) {
    centers.push_back(draw());
    weights.push_back(weight(rng));
  }
  LabeledDataset ds;
  for (std::size_t i = 0; i < m; ++i) {
    DataPoint x = draw();
    double y = 0.0;
    for (std::size_t j = 0; j < centers.size(); ++j) y += weights[j] * kernel(k, x, centers[j]);
    ds.points.push_back(std::move(x));
    ds.labels.push_back(y);
  }
  return ds;
}

inline json model_json(const KrrModel& m) {
  json pts = json::array();
  for (const DataPoint& p : m.points) pts.push_back(detail::point_json(p));
  return json{{"spec", detail::spec_json(m.spec)},
              {"lambda", m.lambda},
              {"training_size", m.size()},
              {"points", pts},
              {"coefficients", std::vector<double>(m.coefficients.begin(), m.coefficients.end())},
              {"B", m.bound},
              {"bound_rhs", bound_rhs(m)},
              {"residual", m.residual}};
}

inline KrrModel model_from_json(const json& j) {
  KrrModel m;
  m.spec = detail::spec_from_json(j.at("spec"));
  m.lambda = j.at("lambda").get<double>();
  for (const auto& p : j.at("points")) m.points.emplace_back(p.get<std::vector<double>>());
  const auto c = j.at("coefficients").get<std::vector<double>>();
  if (c.size() != m.points.size()) throw DataError("model has mismatched coefficients and points");
  m.coefficients = to_vector(c);
  m.bound = j.at("B").get<double>();
  m.residual = j.value("residual", 0.0);
  return m;
}

inline std::string predictions_csv(const KrrModel& m, const io::Table& q, bool classify) {
  std::ostringstream body;
  const std::size_t modes = m.spec.state.modes;
  body << io::coordinate_header(modes) << ",prediction" << (classify ? ",sign" : "") << '\n';
  for (const DataPoint& p : q.points) {
    if (p.modes() != modes) throw DataError("query point dimension does not match the model");
    std::vector<double> row(p.coords().begin(), p.coords().end());
    const double h = predict(m, p);
    row.push_back(h);
    if (classify) row.push_back(h >= 0.0 ? 1.0 : -1.0);
    io::write_row(body, row);
  }
  return body.str();
}

inline io::Table read_query(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (buffer.str().find_first_not_of(" \t\r\n") == std::string::npos) return {};
  return io::read_points(buffer);
}

inline int cmd_fit(const RunConfig& c, std::ostream& out) {
  LabeledDataset train;
  if (!c.data.empty()) {
    train = io::read_dataset(c.data);
  } else if (c.synthetic > 0) {
    train = synthetic_dataset(detail::kernel_spec(c, 1), c.synthetic, c.seed);
  } else {
    throw UsageError("fit needs --data or --synthetic");
  }
  const KernelSpec k = detail::kernel_spec(c, train.points.front().modes());
  const GramMatrix g = gram(k, train.points);
  const KrrModel m = fit_krr(g, train.labels, c.lambda);
  json summary = model_json(m);
  if (!c.test.empty()) {
    const GeneralizationReport rep = generalization_report(m, io::read_dataset(c.test));
    summary["heldout"] = {{"empirical_error", rep.empirical_error}, {"bound_rhs", rep.bound_rhs}};
  }
  detail::emit(c.out, summary.dump(2) + "\n", out);
  if (!c.query.empty()) {
    const std::string preds = predictions_csv(m, read_query(c.query), c.classify);
    if (c.predictions.empty()) throw UsageError("--query with fit needs --predictions <path>");
    detail::emit(c.predictions, preds, out);
  }
  return ok;
}

inline int cmd_predict(const RunConfig& c, std::ostream& out) {
  if (c.model.empty() || c.query.empty()) throw UsageError("predict needs --model and --query");
  std::ifstream in(c.model);
  if (!in) throw DataError("cannot open " + c.model);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(c.model + ": " + e.what());
  }
  KrrModel m;
  try {
    m = model_from_json(j);
  } catch (const json::exception& e) {
    throw DataError(c.model + ": " + e.what());
  }
  const io::Table q = read_query(c.query);
  std::string body;
  if (q.points.empty()) {
    body = io::coordinate_header(m.spec.state.modes) + ",prediction" + (c.classify ? ",sign" : "") + "\n";
  } else {
    body = predictions_csv(m, q, c.classify);
  }
  detail::emit(c.out, body, out);
  return ok;
}

// ---------------------------------------------------------------------------
// geometry

inline json geometry_json(const GeometryReport& g) {
  json d = json::array();
  for (Eigen::Index i = 0; i < g.sq_distances.rows(); ++i) {
    d.push_back(std::vector<double>(g.sq_distances.row(i).begin(), g.sq_distances.row(i).end()));
  }
  return json{{"family", std::string(to_string(g.spec.family))},
              {"eta", g.spec.eta},
              {"com_norm", g.com_norm},
              {"mean_sq_dist_to_com", g.mean_sq_dist_to_com},
              {"sq_distances", d}};
}

inline int cmd_geometry(const RunConfig& c, std::ostream& out) {
  if (c.data.empty()) throw UsageError("geometry needs --data");
  const io::Table t = io::read_points(c.data);
  if (t.points.empty()) throw DataError(c.data + ": no points");
  const KernelSpec k = detail::kernel_spec(c, t.points.front().modes());
  json report;
  if (c.against.empty()) {
    report = geometry_json(geometry_report(gram(k, t.points)));
  } else {
    KernelSpec b = k;
    b.state.family = parse_family(c.against);
    const SeparationComparison cmp = separation_comparison(k, b, t.points);
    report = {{"a", geometry_json(cmp.a)},
              {"b", geometry_json(cmp.b)},
              {"pairs", cmp.pairs},
              {"a_larger", cmp.a_larger},
              {"b_larger", cmp.b_larger},
              {"ties", cmp.ties},
              {"mixed", cmp.mixed()},
              {"a_disperses_more", cmp.a_disperses_more()}};
  }
  detail::emit(c.out, report.dump(2) + "\n", out);
  return ok;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Continuous-variable quantum kernels: witness scans, oracle verification, kernel ridge regression"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_state = [&c](CLI::App* sub, bool many_families) {
    if (many_families) {
      sub->add_option("--family", c.families, "coherent | squeezed | single-photon | thermal | all")->delimiter(',');
    } else {
      sub->add_option("--family", c.families, "coherent | squeezed | single-photon | thermal")->expected(1);
    }
    sub->add_option("--r", c.r, "squeezing parameter")->delimiter(',');
    sub->add_option("--nbar", c.nbar, "thermal mean photon number");
    auto* l = sub->add_option("--loss", c.loss, "loss 1 - eta (comma separated list allowed)")->delimiter(',');
    auto* e = sub->add_option("--eta", c.eta, "transmissivity eta (comma separated list allowed)")->delimiter(',');
    l->excludes(e);
    sub->add_option("--tol", c.tol, "tolerance override");
    sub->add_option("--cutoff-limit", c.cutoff_limit, "largest number-basis cutoff to try");
    sub->add_option("--out", c.out, "output path (stdout when omitted)");
    sub->add_option("--seed", c.seed, "random seed");
  };

  auto* witness = app.add_subcommand("witness", "scan K, the classical bound and the witness along an axis");
  add_state(witness, false);
  witness->add_option("--range", c.range, "start:stop of the offset scan")->default_str("0:3");
  witness->add_option("--steps", c.steps, "number of scan points")->default_str("301");
  witness->add_option("--axis", c.axis, "x1 or x2");
  witness->add_option("--mode", c.mode, "analytic | numeric-fock | numeric-wigner");
  witness->add_option("--format", c.format, "csv | json");

  auto* verify = app.add_subcommand("verify", "compare closed-form kernels with the number-basis oracle");
  add_state(verify, true);
  verify->add_option("--range", c.range, "start:stop of the offset grid per axis")->default_str("-3:3");
  verify->add_option("--steps", c.steps, "grid points per axis")->default_str("21");

  auto* gram_cmd = app.add_subcommand("gram", "export the Gram matrix of a point file");
  add_state(gram_cmd, false);
  gram_cmd->add_option("--data", c.data, "CSV of points")->required();
  gram_cmd->add_option("--mode", c.mode, "analytic | numeric-fock | numeric-wigner");
  gram_cmd->add_option("--format", c.format, "csv | json");

  auto* fit = app.add_subcommand("fit", "kernel ridge regression");
  add_state(fit, false);
  fit->add_option("--data", c.data, "training CSV (coordinates then label)");
  fit->add_option("--synthetic", c.synthetic, "generate this many RKHS-labelled training points from --seed");
  fit->add_option("--lambda", c.lambda, "regularization lambda >= 0");
  fit->add_option("--query", c.query, "CSV of points to predict");
  fit->add_option("--predictions", c.predictions, "where to write predictions for --query");
  fit->add_option("--test", c.test, "held-out labelled CSV for the generalization report");
  fit->add_option("--mode", c.mode, "analytic | numeric-fock | numeric-wigner");
  fit->add_flag("--classify", c.classify, "add a sign column to predictions");

  auto* pred = app.add_subcommand("predict", "evaluate a fitted model");
  pred->add_option("--model", c.model, "model JSON written by fit")->required();
  pred->add_option("--query", c.query, "CSV of points")->required();
  pred->add_option("--out", c.out, "output path (stdout when omitted)");
  pred->add_flag("--classify", c.classify, "add a sign column");

  auto* geom = app.add_subcommand("geometry", "feature-space distances and centre-of-mass dispersion");
  add_state(geom, false);
  geom->add_option("--data", c.data, "CSV of points")->required();
  geom->add_option("--against", c.against, "second family for a separation comparison");
  geom->add_option("--mode", c.mode, "analytic | numeric-fock | numeric-wigner");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  }

  try {
    if (*witness) return cmd_witness(c, out);
    if (*verify) {
      if (c.families == std::vector<std::string>{"coherent"} && verify->count("--family") == 0) c.families = {"all"};
      if (verify->count("--r") == 0) c.r = {0.5, 1.0};
      return cmd_verify(c, out, err);
    }
    if (*gram_cmd) return cmd_gram(c, out);
    if (*fit) return cmd_fit(c, out);
    if (*pred) return cmd_predict(c, out);
    if (*geom) return cmd_geometry(c, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const CutoffError& e) {
    err << "cutoff failure: " << e.what() << '\n';
    return verification_failure;
  } catch (const GridError& e) {
    err << "quadrature failure: " << e.what() << '\n';
    return verification_failure;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return data_error;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "data error: " << e.what() << '\n';
    return data_error;
  }
  return usage_error;
}

}  // namespace cvk::cli
