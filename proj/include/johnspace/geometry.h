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

#ifndef JOHNSPACE_GEOMETRY_H_
#define JOHNSPACE_GEOMETRY_H_

#include <cmath>

namespace johnspace {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Distance from p to the closed segment [a, b].
double point_segment_distance(Point p, Point a, Point b);

// True if the closed segments [a, b] and [c, d] share a point.
bool segments_intersect(Point a, Point b, Point c, Point d);

// Distance between the closed segments [a, b] and [c, d].
double segment_segment_distance(Point a, Point b, Point c, Point d);

struct BoundingBox {
  Point min;
  Point max;
};

}  // namespace johnspace

#endif  // JOHNSPACE_GEOMETRY_H_
