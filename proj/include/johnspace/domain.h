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

#ifndef JOHNSPACE_DOMAIN_H_
#define JOHNSPACE_DOMAIN_H_

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "johnspace/geometry.h"

namespace johnspace {

using Ring = std::vector<Point>;

struct Circle {
  Point center;
  double radius = 1.0;
};

// Points closer than this to a boundary segment count as boundary points
// and are excluded from the domain.
inline constexpr double kBoundaryTolerance = 1e-12;

// A bounded planar domain: the interior of a simple outer polygon minus the
// closures of pairwise disjoint simple holes. Optionally carries an analytic
// disk, in which case containment and boundary distance use the exact circle
// while the polygon serves only for rendering.
class PolygonalDomain {
 public:
  // Throws DomainError if a ring has fewer than three vertices, is not
  // simple, or if the holes are not disjoint and strictly inside `outer`.
  explicit PolygonalDomain(Ring outer, std::vector<Ring> holes = {});

  // Disk with exact boundary distance r - |z - center|. `sides` controls only
  // the polygon used for rendering and serialization.
  static PolygonalDomain AnalyticDisk(Point center, double radius,
                                      int sides = 256);

  const Ring& outer() const { return outer_; }
  const std::vector<Ring>& holes() const { return holes_; }
  const std::optional<Circle>& analytic_disk() const { return disk_; }

  // Strictly inside the outer ring, strictly outside every hole (even-odd
  // rule), and farther than kBoundaryTolerance from every boundary segment.
  bool contains(Point p) const;

  // d(p) = dist(p, boundary). Throws DomainError if p is not in the domain.
  double boundary_distance(Point p) const;

  // Distance to the boundary without the containment check; valid for any
  // point of the plane.
  double raw_boundary_distance(Point p) const;

  // Maximum pairwise distance over boundary vertices (2r for a disk).
  double diameter() const;

  BoundingBox bounds() const;

  // True if the closed segment [a, b] lies in the domain. Both endpoints
  // must already be inside.
  bool segment_inside(Point a, Point b) const;

 private:
  PolygonalDomain() = default;
  void validate() const;

  Ring outer_;
  std::vector<Ring> holes_;
  std::optional<Circle> disk_;
};

PolygonalDomain domain_from_json(const nlohmann::json& j);
nlohmann::json domain_to_json(const PolygonalDomain& domain);

// Reference fixtures used by tests, the acceptance suite and the CLI.
namespace fixtures {

PolygonalDomain unit_disk_polygon(int sides = 256);
PolygonalDomain unit_disk_analytic();
PolygonalDomain unit_square();
PolygonalDomain rectangle(double width, double height);
// [0,1]^2 minus the closed square [0.4,0.6]^2.
PolygonalDomain square_with_hole();
// [0,1]^2 minus [0.5,1]x[0.5,1].
PolygonalDomain l_shape();
// [0,2]x[0,1] with a thin notch of width 0.02 rising from the bottom edge at
// x = 1 up to y = 0.6.
PolygonalDomain slit_rectangle();
// Two unit rooms [0,1]^2 and [2,3]x[0,1] joined by a horizontal corridor of
// the given width centered at y = 0.5.
PolygonalDomain rooms_and_corridor(double width);

}  // namespace fixtures

}  // namespace johnspace

#endif  // JOHNSPACE_DOMAIN_H_
