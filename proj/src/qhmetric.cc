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

#include "johnspace/qhmetric.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "johnspace/error.h"
#include "johnspace/shortest_path.h"

namespace johnspace {

PolyCurve PolyCurve::FromVertices(const DiscreteSpace& space,
                                  std::vector<VertexId> vertices) {
  if (vertices.empty()) throw MalformedCurveError("curve has no vertices");
  PolyCurve curve;
  curve.ids_ = std::move(vertices);
  const std::size_t n = curve.ids_.size();
  curve.d_.reserve(n);
  curve.prefix_len_.assign(n, 0.0);
  curve.prefix_qh_.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = curve.ids_[i];
    if (v < 0 || static_cast<std::size_t>(v) >= space.size()) {
      throw MalformedCurveError("curve vertex " + std::to_string(v) + " out of range");
    }
    curve.d_.push_back(space.boundary_distance(v));
    if (space.has_positions()) curve.points_.push_back(space.position(v));
    if (i == 0) continue;
    const Arc* arc = space.find_arc(curve.ids_[i - 1], v);
    if (arc == nullptr) {
      throw MalformedCurveError("curve vertices " + std::to_string(curve.ids_[i - 1]) +
                                " and " + std::to_string(v) + " are not adjacent");
    }
    curve.prefix_len_[i] = curve.prefix_len_[i - 1] + arc->euclid_len;
    curve.prefix_qh_[i] = curve.prefix_qh_[i - 1] + arc->qh_len;
  }
  return curve;
}

PolyCurve PolyCurve::FromPoints(const PolygonalDomain& domain,
                                std::vector<Point> points, int subdivisions) {
  if (points.empty()) throw MalformedCurveError("curve has no vertices");
  if (subdivisions < 1) throw DomainError("subdivisions must be >= 1");
  PolyCurve curve;
  curve.points_ = std::move(points);
  const std::size_t n = curve.points_.size();
  curve.prefix_len_.assign(n, 0.0);
  curve.prefix_qh_.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = curve.points_[i];
    if (!domain.contains(p)) {
      throw DegenerateCurveError("curve vertex (" + std::to_string(p.x) + ", " +
                                 std::to_string(p.y) + ") is not interior");
    }
    curve.d_.push_back(domain.raw_boundary_distance(p));
    if (i == 0) continue;
    const Point a = curve.points_[i - 1];
    if (!domain.segment_inside(a, p)) {
      throw DegenerateCurveError("curve segment leaves the domain");
    }
    const double len = distance(a, p);
    double sum = 0.0;
    double previous = 1.0 / curve.d_[i - 1];
    for (int k = 1; k <= subdivisions; ++k) {
      const double d = k == subdivisions
                           ? curve.d_[i]
                           : domain.raw_boundary_distance(
                                 a + (static_cast<double>(k) / subdivisions) * (p - a));
      if (!(d > 0)) throw DegenerateCurveError("curve touches the boundary");
      sum += 0.5 * (previous + 1.0 / d);
      previous = 1.0 / d;
    }
    curve.prefix_len_[i] = curve.prefix_len_[i - 1] + len;
    curve.prefix_qh_[i] = curve.prefix_qh_[i - 1] + len / subdivisions * sum;
  }
  return curve;
}

PolyCurve PolyCurve::prefix(std::size_t last) const {
  PolyCurve out;
  const std::size_t n = std::min(last + 1, size());
  auto cut = [n](const auto& v) {
    return std::vector(v.begin(), v.begin() + std::min(n, v.size()));
  };
  out.ids_ = cut(ids_);
  out.points_ = cut(points_);
  out.d_ = cut(d_);
  out.prefix_len_ = cut(prefix_len_);
  out.prefix_qh_ = cut(prefix_qh_);
  return out;
}

nlohmann::json curve_to_json(const PolyCurve& curve) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const Point& p : curve.points()) j["vertices"].push_back({p.x, p.y});
  if (curve.on_space()) j["vertex_ids"] = curve.vertices();
  j["len"] = curve.length();
  j["qh_len"] = curve.qh_length();
  return j;
}

namespace {

GeodesicResult geodesic(const DiscreteSpace& space, VertexId x, VertexId y,
                        EdgeWeight weight) {
  const VertexId from = std::min(x, y), to = std::max(x, y);
  const auto tree = dijkstra(space, from, weight, AdmitAll{},
                             [to](VertexId v) { return v == to; });
  std::vector<VertexId> path = extract_path(tree, to);
  if (path.empty()) {
    throw UnreachableError("vertex " + std::to_string(y) +
                           " is not reachable from " + std::to_string(x));
  }
  if (from != x) std::reverse(path.begin(), path.end());
  return {PolyCurve::FromVertices(space, std::move(path)), tree.dist[to]};
}

double gp_lower_bound(double separation, double d1, double d2) {
  return std::log1p(separation / std::min(d1, d2));
}

}  // namespace

GeodesicResult qh_distance(const DiscreteSpace& space, VertexId x, VertexId y) {
  return geodesic(space, x, y, EdgeWeight::kQuasihyperbolic);
}

GeodesicResult euclid_geodesic(const DiscreteSpace& space, VertexId x, VertexId y) {
  return geodesic(space, x, y, EdgeWeight::kEuclidean);
}

double check_gp_point_bound(const DiscreteSpace& space, VertexId x, VertexId y,
                            double k_val) {
  return k_val - gp_lower_bound(space.distance(x, y), space.boundary_distance(x),
                                space.boundary_distance(y));
}

double check_gp_point_bound(const PolygonalDomain& domain, Point x, Point y,
                            double k_val) {
  return k_val - gp_lower_bound(distance(x, y), domain.boundary_distance(x),
                                domain.boundary_distance(y));
}

double check_gp_length_bound(const PolyCurve& curve) {
  return curve.qh_length() -
         gp_lower_bound(curve.length(), curve.boundary_distance(0),
                        curve.boundary_distance(curve.size() - 1));
}

namespace {

std::vector<std::size_t> probe_indices(std::size_t n, int max_probes) {
  std::vector<std::size_t> idx;
  const std::size_t m = static_cast<std::size_t>(std::max(1, max_probes));
  if (n <= m) {
    for (std::size_t i = 0; i < n; ++i) idx.push_back(i);
    return idx;
  }
  for (std::size_t i = 0; i < m; ++i) {
    idx.push_back(m == 1 ? 0 : (i * (n - 1) + (m - 1) / 2) / (m - 1));
  }
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

}  // namespace

std::vector<double> prefix_qh_diameter_lower(const DiscreteSpace& space,
                                             const PolyCurve& curve,
                                             int max_probes) {
  if (!curve.on_space()) {
    throw MalformedCurveError("quasihyperbolic diameter needs a curve on a space");
  }
  const std::vector<std::size_t> idx = probe_indices(curve.size(), max_probes);
  const std::size_t m = idx.size();
  // best[j]: largest k between probe j and an earlier probe.
  std::vector<double> best(m, 0.0);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const VertexId source = curve.vertex(idx[i]);
    std::vector<bool> pending(space.size(), false);
    for (std::size_t j = i + 1; j < m; ++j) pending[curve.vertex(idx[j])] = true;
    std::size_t remaining = std::count(pending.begin(), pending.end(), true);
    const auto tree = dijkstra(space, source, EdgeWeight::kQuasihyperbolic, AdmitAll{},
                               [&](VertexId v) {
                                 if (pending[v]) {
                                   pending[v] = false;
                                   --remaining;
                                 }
                                 return remaining == 0;
                               });
    for (std::size_t j = i + 1; j < m; ++j) {
      best[j] = std::max(best[j], tree.dist[curve.vertex(idx[j])]);
    }
  }
  std::vector<double> lower(curve.size(), 0.0);
  double running = 0.0;
  std::size_t next = 0;
  for (std::size_t t = 0; t < curve.size(); ++t) {
    while (next < m && idx[next] <= t) running = std::max(running, best[next++]);
    lower[t] = running;
  }
  return lower;
}

QhDiameterBracket qh_diameter_of_curve(const DiscreteSpace& space,
                                       const PolyCurve& curve, int max_probes) {
  const std::vector<double> lower = prefix_qh_diameter_lower(space, curve, max_probes);
  return {lower.back(), curve.qh_length()};
}

std::vector<double> prefix_diameters(const DiscreteSpace& space,
                                     const PolyCurve& curve) {
  std::vector<double> diam(curve.size(), 0.0);
  auto chord = [&](std::size_t i, std::size_t j) {
    if (curve.on_space()) return space.distance(curve.vertex(i), curve.vertex(j));
    return distance(curve.points()[i], curve.points()[j]);
  };
  for (std::size_t t = 1; t < curve.size(); ++t) {
    double far = 0.0;
    for (std::size_t s = 0; s < t; ++s) far = std::max(far, chord(s, t));
    diam[t] = std::max(diam[t - 1], far);
  }
  return diam;
}

double curve_min_distance(const PolyCurve& curve) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < curve.size(); ++i) m = std::min(m, curve.boundary_distance(i));
  return m;
}

}  // namespace johnspace
