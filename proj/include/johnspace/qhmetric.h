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

#ifndef JOHNSPACE_QHMETRIC_H_
#define JOHNSPACE_QHMETRIC_H_

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "johnspace/discrete_space.h"

namespace johnspace {

// A polygonal curve with cached prefix lengths. Either a vertex path in a
// DiscreteSpace (consecutive vertices adjacent) or a free polyline in a
// PolygonalDomain. Always has at least one vertex.
class PolyCurve {
 public:
  // Throws MalformedCurveError if the list is empty or two consecutive
  // vertices are not adjacent.
  static PolyCurve FromVertices(const DiscreteSpace& space,
                                std::vector<VertexId> vertices);

  // Free polyline. Each segment's quasihyperbolic length is a composite
  // trapezoid sum over `subdivisions` pieces with d evaluated from `domain`.
  // Throws DegenerateCurveError if a vertex or segment leaves the domain.
  static PolyCurve FromPoints(const PolygonalDomain& domain,
                              std::vector<Point> points, int subdivisions = 1);

  std::size_t size() const { return d_.size(); }
  bool on_space() const { return !ids_.empty(); }
  const std::vector<VertexId>& vertices() const { return ids_; }
  VertexId vertex(std::size_t i) const { return ids_.at(i); }
  VertexId front() const { return ids_.front(); }
  VertexId back() const { return ids_.back(); }
  // Empty for curves in abstract graph spaces without embedding.
  const std::vector<Point>& points() const { return points_; }

  double boundary_distance(std::size_t i) const { return d_[i]; }
  double prefix_length(std::size_t i) const { return prefix_len_[i]; }
  double prefix_qh(std::size_t i) const { return prefix_qh_[i]; }
  double length() const { return prefix_len_.back(); }
  double qh_length() const { return prefix_qh_.back(); }

  // The subcurve through vertex `last`, inclusive.
  PolyCurve prefix(std::size_t last) const;

 private:
  PolyCurve() = default;

  std::vector<VertexId> ids_;
  std::vector<Point> points_;
  std::vector<double> d_;
  std::vector<double> prefix_len_;
  std::vector<double> prefix_qh_;
};

nlohmann::json curve_to_json(const PolyCurve& curve);

struct GeodesicResult {
  PolyCurve curve;
  double value = 0.0;
};

// k(x, y): Dijkstra over quasihyperbolic edge weights. The search always runs
// from the smaller vertex id, so the value is exactly symmetric in x and y.
// Throws UnreachableError if y cannot be reached.
GeodesicResult qh_distance(const DiscreteSpace& space, VertexId x, VertexId y);

// Euclidean-length shortest path, same conventions as qh_distance.
GeodesicResult euclid_geodesic(const DiscreteSpace& space, VertexId x, VertexId y);

// k(x, y) - log(1 + |x - y| / min(d(x), d(y))). Nonnegative for every true
// quasihyperbolic distance.
double check_gp_point_bound(const DiscreteSpace& space, VertexId x, VertexId y,
                            double k_val);
double check_gp_point_bound(const PolygonalDomain& domain, Point x, Point y,
                            double k_val);

// l_k(curve) - log(1 + l(curve) / min(d(x), d(y))) for the curve's endpoints.
double check_gp_length_bound(const PolyCurve& curve);

struct QhDiameterBracket {
  double lower = 0.0;
  double upper = 0.0;
};

// lower: largest k between at most `max_probes` evenly spaced curve vertices;
// upper: l_k(curve). The quasihyperbolic diameter lies in between.
QhDiameterBracket qh_diameter_of_curve(const DiscreteSpace& space,
                                       const PolyCurve& curve, int max_probes);

// The lower bracket for every prefix curve[0..i], from the same probes.
std::vector<double> prefix_qh_diameter_lower(const DiscreteSpace& space,
                                             const PolyCurve& curve,
                                             int max_probes);

// Euclidean diameter of every prefix curve[0..i] over its vertices.
std::vector<double> prefix_diameters(const DiscreteSpace& space,
                                     const PolyCurve& curve);

// Tolerance model eps = coefficient * h / d_min, where d_min is the smallest
// boundary distance the checked quantity depends on.
struct Tolerance {
  double coefficient = 3.0;
  double spacing = 0.0;

  double at(double d_min) const { return coefficient * spacing / d_min; }
  static Tolerance For(const DiscreteSpace& space, double coefficient = 3.0) {
    return {coefficient, space.spacing()};
  }
};

// Smallest boundary distance along the curve.
double curve_min_distance(const PolyCurve& curve);

}  // namespace johnspace

#endif  // JOHNSPACE_QHMETRIC_H_
