// Copyright 2026 The JohnSpace Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "johnspace/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <unistd.h>

#include "johnspace/analysis.h"
#include "johnspace/constructions.h"
#include "johnspace/error.h"
#include "johnspace/john.h"
#include "johnspace/quasisym.h"

namespace johnspace {

namespace {

// Bad command-line values and unreadable inputs.
class InputError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string domain_path;
  std::string center = "0,0";
  double grid = 0.02;
  int samples = 200;
  std::uint64_t seed = 42;
  std::string out;
  std::string svg;
  std::string map;
  std::string constants;
  std::string basepoint;
  std::string report;
};

// Overridable constants.
struct Overrides {
  std::optional<double> a;
  double a_max = std::numeric_limits<double>::infinity();
  QuasiconvexityParams params;
  std::size_t triples = 20000;
};

Point parse_point(const std::string& text, const char* flag) {
  std::istringstream in(text);
  double x = 0, y = 0;
  char comma = 0;
  if (!(in >> x >> comma >> y) || comma != ',' || !(in >> std::ws).eof() ||
      !std::isfinite(x) || !std::isfinite(y)) {
    throw InputError(std::string(flag) + " expects x,y but got \"" + text + "\"");
  }
  return {x, y};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in " + what + ": " + e.what());
  }
}

// Inline JSON when the argument starts with '{', a file path otherwise.
nlohmann::json json_argument(const std::string& arg, const std::string& what) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json(arg, what);
  return parse_json(read_file(arg), arg);
}

Overrides parse_overrides(const std::string& arg) {
  Overrides o;
  if (arg.empty()) return o;
  const nlohmann::json j = json_argument(arg, "--constants");
  if (!j.is_object()) throw InputError("--constants must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) throw InputError("constant " + key + " must be a number");
    const double v = value.get<double>();
    if (key == "a") {
      if (!(v > 0)) throw InputError("constant a must be positive");
      o.a = v;
    } else if (key == "a_max") {
      if (!(v > 0)) throw InputError("constant a_max must be positive");
      o.a_max = v;
    } else if (key == "lambda") {
      if (!(v > 0 && v < 1)) throw InputError("constant lambda must lie in (0, 1)");
      o.params.lambda = v;
    } else if (key == "c") {
      if (!(v >= 1)) throw InputError("constant c must be at least 1");
      o.params.c = v;
    } else if (key == "triples") {
      if (!(v >= 1000)) throw InputError("constant triples must be at least 1000");
      o.triples = static_cast<std::size_t>(v);
    } else {
      throw InputError("unknown constant \"" + key + "\"");
    }
  }
  return o;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write " + path);
    f << content;
    if (!f.flush()) throw InputError("cannot write " + path);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot write " + path);
  }
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_atomic(path, content);
  }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// The grid space of a domain file and the vertex nearest to a point that
// must lie in the domain.
struct Setup {
  PolygonalDomain domain;
  DiscreteSpace space;
  VertexId center;
};

VertexId vertex_at(const PolygonalDomain& domain, const DiscreteSpace& space, Point p,
                   const char* flag) {
  if (!domain.contains(p)) {
    throw InputError(std::string(flag) + " point lies outside the domain");
  }
  return *space.nearest_vertex(p);
}

Setup load_setup(const RunConfig& cfg) {
  if (cfg.domain_path.empty()) throw InputError("--domain is required");
  if (!(cfg.grid > 0)) throw InputError("--grid must be positive");
  if (cfg.samples < 1) throw InputError("--samples must be at least 1");
  PolygonalDomain domain = domain_from_json(parse_json(read_file(cfg.domain_path), cfg.domain_path));
  DiscreteSpace space = build_grid_space(domain, cfg.grid);
  if (!is_connected(space)) {
    throw ResolutionError("grid of spacing " + std::to_string(cfg.grid) +
                          " is disconnected; refine --grid");
  }
  const VertexId center = vertex_at(domain, space, parse_point(cfg.center, "--center"), "--center");
  return {std::move(domain), std::move(space), center};
}

nlohmann::json point_json(Point p) { return {p.x, p.y}; }

// Top-level witness: that of the first failing report.
nlohmann::json first_failure(const std::vector<ConditionReport>& reports) {
  for (const ConditionReport& r : reports) {
    if (!r.pass && r.witness) return witness_to_json(*r.witness);
  }
  return nullptr;
}

bool all_pass(const std::vector<ConditionReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

nlohmann::json reports_json(const std::vector<ConditionReport>& reports) {
  nlohmann::json j = nlohmann::json::array();
  for (const ConditionReport& r : reports) j.push_back(report_to_json(r));
  return j;
}

int finish(const nlohmann::json& report, const RunConfig& cfg, std::ostream& out) {
  emit(cfg.out, dump(report), out);
  if (!cfg.svg.empty()) write_atomic(cfg.svg, render_svg(scene_from_report(report)));
  return report.at("pass").get<bool>() ? kExitPass : kExitPropertyFailure;
}

// ---------------------------------------------------------------------------

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const Overrides ov = parse_overrides(cfg.constants);
  const Setup setup = load_setup(cfg);
  const DiscreteSpace& space = setup.space;
  const VertexId x0 = setup.center;
  const std::vector<VertexId> samples =
      stratified_samples(space, static_cast<std::size_t>(cfg.samples), cfg.seed);

  AnalysisOptions options;
  options.a = ov.a;
  options.a_max = ov.a_max;
  options.params = ov.params;
  options.seed = cfg.seed;
  const JohnAnalysis analysis = analyze_john(space, x0, samples, options);
  const JohnProfile& profile = analysis.profile;

  nlohmann::json curves = nlohmann::json::array();
  for (const PolyCurve& c : profile.curves) curves.push_back(curve_to_json(c));
  nlohmann::json ids = nlohmann::json::array();
  for (VertexId s : profile.samples) ids.push_back(s);

  const nlohmann::json report{
      {"kind", "analyze"},
      {"domain", domain_to_json(setup.domain)},
      {"grid", cfg.grid},
      {"seed", cfg.seed},
      {"center", point_json(space.position(x0))},
      {"center_vertex", x0},
      {"vertices", space.size()},
      {"profile",
       {{"a", real_to_json(profile.a)}, {"samples", ids}, {"sample_a", profile.sample_a}}},
      {"constants", analysis.ledger.to_json()},
      {"reports", reports_json(analysis.reports)},
      {"hypotheses", reports_json({analysis.local_quasiconvexity})},
      {"curves", curves},
      {"pass", analysis.pass()},
      {"witness", first_failure(analysis.reports)}};
  return finish(report, cfg, out);
}

int cmd_chain(const RunConfig& cfg, std::ostream& out) {
  const Overrides ov = parse_overrides(cfg.constants);
  if (cfg.basepoint.empty()) throw InputError("--basepoint is required");
  const Setup setup = load_setup(cfg);
  const DiscreteSpace& space = setup.space;
  const VertexId x0 = setup.center;
  const VertexId x1 =
      vertex_at(setup.domain, space, parse_point(cfg.basepoint, "--basepoint"), "--basepoint");
  const Tolerance tol = Tolerance::For(space);
  const QhGeodesicOracle oracle(space, x0);
  const double b = oracle.empirical_b();
  const double d0 = space.boundary_distance(x0), d1 = space.boundary_distance(x1);

  nlohmann::json report{{"kind", "chain"},
                        {"domain", domain_to_json(setup.domain)},
                        {"grid", cfg.grid},
                        {"center", point_json(space.position(x0))},
                        {"center_vertex", x0},
                        {"basepoint", point_json(space.position(x1))},
                        {"basepoint_vertex", x1},
                        {"b", b},
                        {"lambda", ov.params.lambda},
                        {"c", ov.params.c},
                        {"max_stages", std::ceil(std::log2(d0 / d1)) + 1}};
  try {
    const ConstructedCurve built = construct_john_curve(
        space, x1, x0, b, ov.params, std::cref(oracle), tol.at(d1));
    report["curve"] = constructed_to_json(space, built);
    report["pass"] = true;
    report["witness"] = nullptr;
  } catch (const ConstructionError& e) {
    report["error"] = e.what();
    report["pass"] = false;
    report["witness"] = witness_to_json(vertex_witness(space, x1, x0));
  }
  return finish(report, cfg, out);
}

int cmd_qs(const RunConfig& cfg, std::ostream& out) {
  const Overrides ov = parse_overrides(cfg.constants);
  if (cfg.map.empty()) throw InputError("--map is required");
  const QuasiMap map = map_from_json(json_argument(cfg.map, "--map"));
  const Setup setup = load_setup(cfg);
  const DiscreteSpace& space = setup.space;
  const VertexId x0 = setup.center;
  const PolygonalDomain image_domain = map.image_domain(setup.domain);
  const DiscreteSpace image = push_space(map, space, image_domain);
  const Tolerance tol = Tolerance::For(image);
  const std::vector<VertexId> samples =
      stratified_samples(space, static_cast<std::size_t>(cfg.samples), cfg.seed);

  Condition1Options c1_options;
  c1_options.search.a_max = ov.a_max;
  const Condition1Result source = check_condition1(space, x0, samples, c1_options);
  const double a = ov.a.value_or(source.profile.a);
  double a_diam = 0.0;
  for (const PolyCurve& c : source.profile.curves) {
    a_diam = std::max(a_diam, min_diameter_carrot_constant(space, c));
  }

  EtaOptions eta_options;
  eta_options.n_triples = ov.triples;
  eta_options.seed = cfg.seed;
  const EtaEstimate eta = estimate_eta(map, setup.domain, eta_options);
  const ControlFunction control = [eta](double t) { return eta(t); };
  const ControlFunction eta_prime = eta_inverse_control(control);

  const ConditionReport diam = check_diameter_carrot_image(space, image, source.profile.curves,
                                                           a_diam, control, tol);
  const ConditionReport rel =
      check_relative_distance_claim(space, image, source.profile.curves, eta_prime, tol);

  // Fit (c1, c2) on one sample of pairs, inflate, and verify on fresh pairs.
  constexpr double kFitInflation = 1.1;
  const std::vector<VertexPair> fit_pairs = sample_vertex_pairs(space, 20, 25, cfg.seed);
  const CoarseQhResult fit =
      check_coarse_qh_claim(space, image, fit_pairs, 0.0, 0.0, control, ov.params, tol);
  const CoarseFit coarse{kFitInflation * fit.fitted.c1, kFitInflation * fit.fitted.c2};
  const std::vector<VertexPair> check_pairs = sample_vertex_pairs(space, 40, 25, cfg.seed + 1000);
  const CoarseQhResult coarse_check = check_coarse_qh_claim(
      space, image, check_pairs, coarse.c1, coarse.c2, control, ov.params, tol);

  TransferInputs inputs;
  inputs.a = a;
  inputs.eta = control;
  inputs.eta_prime = eta_prime;
  inputs.coarse = coarse;
  inputs.params = ov.params;
  inputs.samples = samples;
  inputs.search.a_max = std::numeric_limits<double>::infinity();
  const TransferResult transfer = transfer_john_constant(space, image, map, x0, inputs);

  const std::vector<ConditionReport> reports{diam, rel, coarse_check.report,
                                             coarse_check.small_scale, transfer.report};
  nlohmann::json curves = nlohmann::json::array();
  for (const PolyCurve& c : transfer.image_profile.curves) curves.push_back(curve_to_json(c));
  const nlohmann::json report{
      {"kind", "qs"},
      {"map", map.to_json()},
      {"domain", domain_to_json(image_domain)},
      {"source_domain", domain_to_json(setup.domain)},
      {"grid", cfg.grid},
      {"seed", cfg.seed},
      {"center", point_json(image.position(x0))},
      {"source", {{"a", a}, {"a_diameter", a_diam}}},
      {"image", {{"a", real_to_json(transfer.image_profile.a)}}},
      {"eta", eta_to_json(eta)},
      {"coarse_fit",
       {{"fitted_c1", fit.fitted.c1},
        {"fitted_c2", fit.fitted.c2},
        {"inflation", kFitInflation},
        {"c1", coarse.c1},
        {"c2", coarse.c2},
        {"fit_pairs", fit_pairs.size()},
        {"check_pairs", check_pairs.size()}}},
      {"reports", reports_json(reports)},
      {"curves", curves},
      {"pass", all_pass(reports)},
      {"witness", first_failure(reports)}};
  return finish(report, cfg, out);
}

int cmd_render(const RunConfig& cfg, std::ostream& out) {
  if (cfg.report.empty()) throw InputError("--report is required");
  const nlohmann::json report = parse_json(read_file(cfg.report), cfg.report);
  emit(cfg.out, render_svg(scene_from_report(report)), out);
  return kExitPass;
}

Point point_of(const nlohmann::json& p) { return {p.at(0).get<double>(), p.at(1).get<double>()}; }

std::vector<Point> points_from_json(const nlohmann::json& j) {
  std::vector<Point> pts;
  for (const auto& p : j) pts.push_back(point_of(p));
  return pts;
}

}  // namespace

SvgScene scene_from_report(const nlohmann::json& report) {
  try {
    if (!report.is_object() || !report.contains("domain")) {
      throw DomainError("report has no domain");
    }
    SvgScene scene = scene_for_domain(domain_from_json(report.at("domain")));
    if (report.contains("curves")) {
      for (const auto& c : report.at("curves")) {
        scene.curves.push_back(points_from_json(c.at("vertices")));
      }
    }
    if (report.contains("curve")) {
      const auto& c = report.at("curve");
      scene.curves.push_back(points_from_json(c.at("vertices")));
      const auto& stages = c.value("stages", nlohmann::json::array());
      for (std::size_t i = 0; i < stages.size(); ++i) {
        if (i == 0) scene.stage_points.push_back(point_of(stages[i].at("from_pos")));
        scene.stage_points.push_back(point_of(stages[i].at("to_pos")));
      }
    }
    const auto& w = report.value("witness", nlohmann::json());
    if (w.is_object()) {
      for (const char* site : {"point", "basepoint"}) {
        const auto& pos = w.at(site).at("pos");
        if (pos.is_array()) {
          scene.witness = point_of(pos);
          break;
        }
      }
    }
    return scene;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Toolkit for John spaces, quasihyperbolic geometry and quasisymmetric maps",
               "johnspace"};
  app.require_subcommand(1);

  auto add_space_flags = [&](CLI::App* sub) {
    sub->add_option("--domain", cfg.domain_path, "Domain JSON file")->required();
    sub->add_option("--center", cfg.center, "Center x,y");
    sub->add_option("--grid", cfg.grid, "Grid spacing h");
    sub->add_option("--samples", cfg.samples, "Number of sampled basepoints");
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--out", cfg.out, "Output JSON path (default: standard output)");
    sub->add_option("--svg", cfg.svg, "Also write an SVG figure here");
    sub->add_option("--constants", cfg.constants,
                    "Constant overrides: inline JSON object or file (a, a_max, lambda, c, triples)");
  };
  CLI::App* analyze = app.add_subcommand("analyze", "Check the five John conditions");
  add_space_flags(analyze);
  CLI::App* chain = app.add_subcommand("chain", "Construct a quasiconvex carrot curve");
  add_space_flags(chain);
  chain->add_option("--basepoint", cfg.basepoint, "Basepoint x,y")->required();
  CLI::App* qs = app.add_subcommand("qs", "Quasisymmetric transfer and distortion claims");
  add_space_flags(qs);
  qs->add_option("--map", cfg.map, "Map JSON: inline object or file")->required();
  CLI::App* render = app.add_subcommand("render", "Render a report as SVG");
  render->add_option("--report", cfg.report, "Report JSON file")->required();
  render->add_option("--out", cfg.out, "Output SVG path (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, out);
    if (*chain) return cmd_chain(cfg, out);
    if (*qs) return cmd_qs(cfg, out);
    return cmd_render(cfg, out);
  } catch (const UnreachableError& e) {
    err << "error: " << e.what() << " (the grid may be too coarse)\n";
    return kExitInputError;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPropertyFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace johnspace
