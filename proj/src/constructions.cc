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

#include "johnspace/constructions.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "johnspace/error.h"
#include "johnspace/john.h"
#include "johnspace/shortest_path.h"

namespace johnspace {

namespace {

void require_john_constant(double a) {
  if (!(a >= 1)) throw DomainError("John constant must be >= 1");
}

}  // namespace

GrowthConstants derive_c2_from_c1(double a) {
  require_john_constant(a);
  return {3 * a, a, (3 + std::log(2 * a)) * a};
}

double derive_c3_from_c2(const GrowthConstants& c) {
  return std::max(c.b1 * std::log(2 * c.b) + c.b2, c.b1 * std::numbers::ln2 + c.b2);
}

LogPhi derive_phi_from_c1(double a) {
  const GrowthConstants c = derive_c2_from_c1(a);
  return {c.b1, c.b2};
}

double derive_c3_from_c5(double a, const std::function<double(double)>& phi) {
  require_john_constant(a);
  return 2 * phi(2 * a * (1 + a));
}

std::optional<std::size_t> first_point_with_distance(const PolyCurve& curve,
                                                     double target) {
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (curve.boundary_distance(i) >= target) return i;
  }
  return std::nullopt;
}

void ConstantLedger::set(const std::string& name, double value, std::string provenance) {
  if (!(value >= 0)) throw DomainError("constant " + name + " must be nonnegative");
  entries_[name] = {value, std::move(provenance)};
}

double ConstantLedger::get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw DomainError("no constant named " + name);
  return it->second.value;
}

nlohmann::json ConstantLedger::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, e] : entries_) {
    j[name] = {{"value", real_to_json(e.value)}, {"provenance", e.provenance}};
  }
  return j;
}

std::string case_name(ConstructionCase c) {
  switch (c) {
    case ConstructionCase::kA: return "A";
    case ConstructionCase::kB: return "B";
    case ConstructionCase::kC: return "C";
  }
  return "?";
}

ConstructionCase route_case(const DiscreteSpace& space, VertexId x1, VertexId x0,
                            const QuasiconvexityParams& params) {
  const double d0 = space.boundary_distance(x0);
  if (space.distance(x1, x0) <= params.lambda / params.c * d0) return ConstructionCase::kA;
  if (space.boundary_distance(x1) >= d0 / 2) return ConstructionCase::kB;
  return ConstructionCase::kC;
}

double case_constant(const QuasiconvexityParams& params, double b) {
  const double l = params.lambda, c = params.c;
  return std::max({l / (1 - l), std::exp(2 * b), c * std::exp(b) / l,
                   4 * std::exp(2 * b), 4 * c / l * std::exp(2 * b)});
}

double log_case_constant(const QuasiconvexityParams& params, double b) {
  const double l = params.lambda, c = params.c;
  return std::max({std::log(l / (1 - l)), 2 * b, std::log(c / l) + b,
                   std::log(4.0) + 2 * b, std::log(4 * c / l) + 2 * b});
}

QhGeodesicOracle::QhGeodesicOracle(const DiscreteSpace& space, VertexId x0)
    : space_(&space), x0_(x0) {
  parent_ = dijkstra(space, x0, EdgeWeight::kQuasihyperbolic).parent;
}

PolyCurve QhGeodesicOracle::operator()(VertexId x) const {
  std::vector<VertexId> path;
  for (VertexId v = x; v != kNoVertex; v = parent_[v]) path.push_back(v);
  if (path.back() != x0_) {
    throw UnreachableError("center is not reachable from vertex " + std::to_string(x));
  }
  return PolyCurve::FromVertices(*space_, std::move(path));
}

double QhGeodesicOracle::stopping_qh(VertexId x1) const {
  const double d0 = space_->boundary_distance(x0_);
  const double d1 = space_->boundary_distance(x1);
  const bool to_center = d1 >= d0 / 2;
  double acc = 0.0;
  for (VertexId v = x1; v != x0_;) {
    if (!to_center && space_->boundary_distance(v) >= 2 * d1) break;
    const VertexId next = parent_[v];
    if (next == kNoVertex) {
      throw UnreachableError("center is not reachable from vertex " + std::to_string(x1));
    }
    acc += space_->find_arc(v, next)->qh_len;
    v = next;
  }
  return acc;
}

double QhGeodesicOracle::empirical_b() const {
  double b = 0.0;
  for (VertexId v = 0; v < static_cast<VertexId>(space_->size()); ++v) {
    b = std::max(b, stopping_qh(v));
  }
  return b;
}

namespace {

void finish(const DiscreteSpace& space, VertexId x1, VertexId x0,
            ConstructedCurve& out, double eps) {
  out.carrot_constant = min_carrot_constant_for_curve(out.curve);
  const double separation = space.distance(x1, x0);
  out.length_ratio = separation > 0 ? out.curve.length() / separation : 0.0;
  if (out.carrot_constant > out.carrot_bound + eps) {
    throw ConstructionError("case " + case_name(out.kind) + " curve from vertex " +
                            std::to_string(x1) + " has carrot constant " +
                            std::to_string(out.carrot_constant) + " above its bound " +
                            std::to_string(out.carrot_bound));
  }
  if (out.length_ratio > out.length_bound + eps) {
    throw ConstructionError("case " + case_name(out.kind) + " curve from vertex " +
                            std::to_string(x1) + " has length ratio " +
                            std::to_string(out.length_ratio) + " above its bound " +
                            std::to_string(out.length_bound));
  }
}

PolyCurve checked_oracle(const Cond3Oracle& oracle, VertexId x, VertexId x0) {
  PolyCurve curve = oracle(x);
  if (curve.front() != x || curve.back() != x0) {
    throw ConstructionError("oracle curve does not join vertex " + std::to_string(x) +
                            " to the center");
  }
  return curve;
}

void check_oracle_bound(double qh, double b, double eps, VertexId x) {
  if (qh > b + eps) {
    throw ConstructionError("oracle curve from vertex " + std::to_string(x) +
                            " has l_k " + std::to_string(qh) + " above b = " +
                            std::to_string(b));
  }
}

}  // namespace

ConstructedCurve construct_case_a(const DiscreteSpace& space, VertexId x1, VertexId x0,
                                  const QuasiconvexityParams& params, double eps) {
  if (route_case(space, x1, x0, params) != ConstructionCase::kA) {
    throw ConstructionError("case A needs |x1 - x0| <= (lambda/c) d(x0)");
  }
  GeodesicResult geo = euclid_geodesic(space, x1, x0);
  ConstructedCurve out{ConstructionCase::kA, std::move(geo.curve), {}};
  if (x1 != x0) out.stages.push_back({x1, x0, out.curve.length(), out.curve.qh_length()});
  out.carrot_bound = params.lambda / (1 - params.lambda);
  out.length_bound = params.c;
  finish(space, x1, x0, out, eps);
  return out;
}

ConstructedCurve construct_case_b(const DiscreteSpace& space, VertexId x1, VertexId x0,
                                  double b, const QuasiconvexityParams& params,
                                  const Cond3Oracle& oracle, double eps) {
  if (route_case(space, x1, x0, params) != ConstructionCase::kB) {
    throw ConstructionError("case B needs |x1 - x0| > (lambda/c) d(x0) and d(x1) >= d(x0)/2");
  }
  PolyCurve curve = checked_oracle(oracle, x1, x0);
  check_oracle_bound(curve.qh_length(), b, eps, x1);
  ConstructedCurve out{ConstructionCase::kB, std::move(curve), {}};
  out.stages.push_back({x1, x0, out.curve.length(), out.curve.qh_length()});
  out.carrot_bound = std::exp(2 * b);
  out.length_bound = params.c * std::exp(b) / params.lambda;
  finish(space, x1, x0, out, eps);
  return out;
}

ConstructedCurve chain_construction(const DiscreteSpace& space, VertexId x1,
                                    VertexId x0, double b,
                                    const QuasiconvexityParams& params,
                                    const Cond3Oracle& oracle, double eps) {
  if (route_case(space, x1, x0, params) != ConstructionCase::kC) {
    throw ConstructionError("case C needs |x1 - x0| > (lambda/c) d(x0) and d(x1) < d(x0)/2");
  }
  const double d0 = space.boundary_distance(x0);
  const double d1 = space.boundary_distance(x1);
  const std::size_t max_stages =
      static_cast<std::size_t>(std::ceil(std::log2(d0 / d1))) + 1;

  std::vector<VertexId> path{x1};
  std::vector<Stage> stages;
  VertexId xi = x1;
  while (xi != x0) {
    if (stages.size() >= max_stages) {
      throw ConstructionError("doubling chain from vertex " + std::to_string(x1) +
                              " did not terminate within " + std::to_string(max_stages) +
                              " stages");
    }
    const PolyCurve curve = checked_oracle(oracle, xi, x0);
    const double di = space.boundary_distance(xi);
    std::size_t stop = curve.size() - 1;
    if (di < d0 / 2) stop = *first_point_with_distance(curve, 2 * di);
    check_oracle_bound(curve.prefix_qh(stop), b, eps, xi);
    for (std::size_t k = 1; k <= stop; ++k) path.push_back(curve.vertex(k));
    stages.push_back({xi, curve.vertex(stop), curve.prefix_length(stop),
                      curve.prefix_qh(stop)});
    xi = di < d0 / 2 ? curve.vertex(stop) : x0;
  }

  ConstructedCurve out{ConstructionCase::kC, PolyCurve::FromVertices(space, std::move(path)),
                       std::move(stages)};
  out.carrot_bound = 4 * std::exp(2 * b);
  out.length_bound = 4 * params.c / params.lambda * std::exp(2 * b);
  finish(space, x1, x0, out, eps * static_cast<double>(out.stages.size()));
  return out;
}

ConstructedCurve construct_john_curve(const DiscreteSpace& space, VertexId x1,
                                      VertexId x0, double b,
                                      const QuasiconvexityParams& params,
                                      const Cond3Oracle& oracle, double eps) {
  switch (route_case(space, x1, x0, params)) {
    case ConstructionCase::kA: return construct_case_a(space, x1, x0, params, eps);
    case ConstructionCase::kB: return construct_case_b(space, x1, x0, b, params, oracle, eps);
    case ConstructionCase::kC:
      return chain_construction(space, x1, x0, b, params, oracle, eps);
  }
  throw ConstructionError("unreachable case");
}

nlohmann::json constructed_to_json(const DiscreteSpace& space,
                                   const ConstructedCurve& constructed) {
  nlohmann::json j = curve_to_json(constructed.curve);
  j["case"] = case_name(constructed.kind);
  j["carrot_constant"] = constructed.carrot_constant;
  j["carrot_bound"] = real_to_json(constructed.carrot_bound);
  j["length_ratio"] = constructed.length_ratio;
  j["length_bound"] = real_to_json(constructed.length_bound);
  j["stages"] = nlohmann::json::array();
  for (const Stage& s : constructed.stages) {
    nlohmann::json sj{{"from", s.from}, {"to", s.to}, {"len", s.len}, {"qh_len", s.qh_len}};
    if (space.has_positions()) {
      const Point a = space.position(s.from), b = space.position(s.to);
      sj["from_pos"] = {a.x, a.y};
      sj["to_pos"] = {b.x, b.y};
    }
    j["stages"].push_back(sj);
  }
  return j;
}

}  // namespace johnspace
