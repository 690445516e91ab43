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

#include "johnspace/john.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "johnspace/constructions.h"
#include "johnspace/error.h"
#include "johnspace/shortest_path.h"

namespace johnspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_ends_at(const PolyCurve& curve, VertexId x0) {
  if (!curve.on_space() || curve.back() != x0) {
    throw MalformedCurveError("curve does not end at the center vertex " +
                              std::to_string(x0));
  }
}

}  // namespace

double carrot_margin(const PolyCurve& curve, double a, std::size_t* worst_index) {
  double worst = kInf;
  std::size_t at = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double m = a * curve.boundary_distance(i) - curve.prefix_length(i);
    if (m < worst) {
      worst = m;
      at = i;
    }
  }
  if (worst_index) *worst_index = at;
  return worst;
}

double min_carrot_constant_for_curve(const PolyCurve& curve, std::size_t* worst_index) {
  double best = 0.0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double ratio = curve.prefix_length(i) / curve.boundary_distance(i);
    if (ratio > best) {
      best = ratio;
      at = i;
    }
  }
  if (worst_index) *worst_index = at;
  return best;
}

double min_diameter_carrot_constant(const DiscreteSpace& space, const PolyCurve& curve) {
  const std::vector<double> diam = prefix_diameters(space, curve);
  double best = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    best = std::max(best, diam[i] / curve.boundary_distance(i));
  }
  return best;
}

std::optional<PolyCurve> carrot_feasible_path(const DiscreteSpace& space,
                                              VertexId x, VertexId x0, double a) {
  const auto tree = dijkstra(
      space, x, EdgeWeight::kEuclidean,
      [&](VertexId v, double arrival) { return arrival <= a * space.boundary_distance(v); },
      [x0](VertexId v) { return v == x0; });
  std::vector<VertexId> path = extract_path(tree, x0);
  if (path.empty()) return std::nullopt;
  return PolyCurve::FromVertices(space, std::move(path));
}

CarrotArc best_carrot_arc(const DiscreteSpace& space, VertexId x, VertexId x0,
                          const CarrotSearchOptions& options) {
  if (x == x0) return {true, PolyCurve::FromVertices(space, {x}), 0.0};
  GeodesicResult shortest = euclid_geodesic(space, x, x0);
  double hi = min_carrot_constant_for_curve(shortest.curve);
  PolyCurve best = std::move(shortest.curve);
  double lo = shortest.value / space.boundary_distance(x0);
  if (auto at_lo = carrot_feasible_path(space, x, x0, lo)) {
    best = std::move(*at_lo);
    hi = lo;
  }
  while (hi > lo * (1.0 + options.rel_tol)) {
    const double mid = 0.5 * (lo + hi);
    if (auto path = carrot_feasible_path(space, x, x0, mid)) {
      best = std::move(*path);
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double a = min_carrot_constant_for_curve(best);
  return {a <= options.a_max, std::move(best), a};
}

Condition1Result check_condition1(const DiscreteSpace& space, VertexId x0,
                                  std::span<const VertexId> samples,
                                  const Condition1Options& options) {
  Condition1Result result;
  JohnProfile& profile = result.profile;
  profile.center = x0;
  std::vector<std::size_t> worst_at;
  for (VertexId x : samples) {
    CarrotArc arc = best_carrot_arc(space, x, x0, options.search);
    std::size_t at = 0;
    min_carrot_constant_for_curve(arc.curve, &at);
    profile.samples.push_back(x);
    profile.sample_a.push_back(arc.a);
    profile.a = std::max(profile.a, arc.a);
    worst_at.push_back(at);
    profile.curves.push_back(std::move(arc.curve));
  }

  ConditionReport& report = result.report;
  report.condition = Condition::kC1;
  const double target = options.a.value_or(std::min(profile.a, options.search.a_max));
  for (std::size_t s = 0; s < profile.samples.size(); ++s) {
    report.observe(target - profile.sample_a[s],
                   vertex_witness(space, profile.samples[s],
                                  profile.curves[s].vertex(worst_at[s])));
  }
  report.constants = {{"a", target},
                      {"a_measured", profile.a},
                      {"samples", static_cast<double>(profile.samples.size())}};
  if (std::isfinite(options.search.a_max)) report.constants["a_max"] = options.search.a_max;
  return result;
}

ConditionReport check_condition2(const DiscreteSpace& space, VertexId x0,
                                 std::span<const PolyCurve> curves, double b,
                                 double b1, double b2, const Tolerance& tol) {
  ConditionReport report;
  report.condition = Condition::kC2;
  report.constants = {{"b", b}, {"b1", b1}, {"b2", b2}};
  const double d0 = space.boundary_distance(x0);
  report.observe(b - space.diameter() / d0 + tol.at(d0), vertex_witness(space, x0, x0));
  for (const PolyCurve& curve : curves) {
    require_ends_at(curve, x0);
    const double eps = tol.at(curve_min_distance(curve));
    const double d1 = curve.boundary_distance(0);
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const double rhs = b1 * std::abs(std::log(curve.boundary_distance(i) / d1)) + b2;
      report.observe(rhs - curve.prefix_qh(i) + eps,
                     vertex_witness(space, curve.front(), curve.vertex(i)));
    }
  }
  return report;
}

ConditionReport check_condition3(const DiscreteSpace& space, VertexId x0,
                                 std::span<const PolyCurve> curves, double b,
                                 const Tolerance& tol) {
  ConditionReport report;
  report.condition = Condition::kC3;
  report.constants = {{"b", b}};
  const double d0 = space.boundary_distance(x0);
  for (const PolyCurve& curve : curves) {
    require_ends_at(curve, x0);
    const double d1 = curve.boundary_distance(0);
    std::size_t stop = curve.size() - 1;
    if (d1 < d0 / 2) {
      const auto found = first_point_with_distance(curve, 2 * d1);
      if (!found) {
        throw MalformedCurveError("curve never reaches twice its starting distance");
      }
      stop = *found;
    }
    const double eps = tol.at(curve_min_distance(curve.prefix(stop)));
    report.observe(b - curve.prefix_qh(stop) + eps,
                   vertex_witness(space, curve.front(), curve.vertex(stop)));
  }
  return report;
}

ConditionReport check_condition4(const DiscreteSpace& space, VertexId x0,
                                 std::span<const PolyCurve> curves, double a,
                                 const Tolerance& tol) {
  ConditionReport report;
  report.condition = Condition::kC4;
  report.constants = {{"a", a}};
  for (const PolyCurve& curve : curves) {
    require_ends_at(curve, x0);
    const double eps = tol.at(curve_min_distance(curve));
    const VertexId x1 = curve.front();
    const double separation = space.distance(x1, x0);
    if (separation > 0) {
      report.observe(a - curve.length() / separation + eps,
                     vertex_witness(space, x1, x0));
    }
    for (std::size_t i = 0; i < curve.size(); ++i) {
      report.observe(a - curve.prefix_length(i) / curve.boundary_distance(i) + eps,
                     vertex_witness(space, x1, curve.vertex(i)));
    }
  }
  return report;
}

ConditionReport check_condition5(const DiscreteSpace& space, VertexId x0,
                                 std::span<const PolyCurve> curves, double a,
                                 const std::function<double(double)>& phi,
                                 const Tolerance& tol, int max_probes) {
  ConditionReport report;
  report.condition = Condition::kC5;
  report.constants = {{"a", a}};
  double upper_worst = kInf;
  for (const PolyCurve& curve : curves) {
    require_ends_at(curve, x0);
    const double eps = tol.at(curve_min_distance(curve));
    const std::vector<double> diam = prefix_diameters(space, curve);
    const std::vector<double> lower = prefix_qh_diameter_lower(space, curve, max_probes);
    double dist_to_boundary = kInf;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const Witness w = vertex_witness(space, curve.front(), curve.vertex(i));
      const double d = curve.boundary_distance(i);
      dist_to_boundary = std::min(dist_to_boundary, d);
      report.observe(a - diam[i] / d + eps, w);
      const double bound = phi(diam[i] / dist_to_boundary);
      report.observe(bound - lower[i] + eps, w);
      upper_worst = std::min(upper_worst, bound - curve.prefix_qh(i) + eps);
    }
  }
  report.constants["upper_bracket_worst_margin"] = upper_worst;
  return report;
}

}  // namespace johnspace
