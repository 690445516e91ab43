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

#include "johnspace/domain.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "johnspace/error.h"

namespace johnspace {

namespace {

template <class F>
void for_each_segment(const Ring& ring, F&& f) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) f(ring[i], ring[(i + 1) % n]);
}

// Even-odd ray casting.
bool ring_contains(const Ring& ring, Point p) {
  bool inside = false;
  for_each_segment(ring, [&](Point a, Point b) {
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  });
  return inside;
}

double ring_distance(const Ring& ring, Point p) {
  double best = std::numeric_limits<double>::infinity();
  for_each_segment(ring, [&](Point a, Point b) {
    best = std::min(best, point_segment_distance(p, a, b));
  });
  return best;
}

bool ring_is_simple(const Ring& ring) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = ring[i], b = ring[(i + 1) % n];
    if (a == b) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const Point c = ring[j], d = ring[(j + 1) % n];
      if (adjacent) {
        // Adjacent edges share exactly one endpoint; reject overlaps.
        const Point shared = (j == i + 1) ? b : a;
        const Point other_first = (j == i + 1) ? a : b;
        const Point other_second = (j == i + 1) ? d : c;
        if (std::abs(cross(other_first - shared, other_second - shared)) == 0 &&
            dot(other_first - shared, other_second - shared) > 0) {
          return false;
        }
        continue;
      }
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

bool rings_intersect(const Ring& r1, const Ring& r2) {
  bool hit = false;
  for_each_segment(r1, [&](Point a, Point b) {
    if (hit) return;
    for_each_segment(r2, [&](Point c, Point d) {
      if (!hit && segments_intersect(a, b, c, d)) hit = true;
    });
  });
  return hit;
}

}  // namespace

PolygonalDomain::PolygonalDomain(Ring outer, std::vector<Ring> holes)
    : outer_(std::move(outer)), holes_(std::move(holes)) {
  validate();
}

PolygonalDomain PolygonalDomain::AnalyticDisk(Point center, double radius,
                                              int sides) {
  if (!(radius > 0) || !std::isfinite(radius) || !is_finite(center)) {
    throw DomainError("analytic disk needs a finite center and radius > 0");
  }
  if (sides < 3) throw DomainError("analytic disk needs at least 3 sides");
  PolygonalDomain domain;
  domain.outer_.reserve(sides);
  for (int i = 0; i < sides; ++i) {
    const double t = 2.0 * std::numbers::pi * i / sides;
    domain.outer_.push_back(
        {center.x + radius * std::cos(t), center.y + radius * std::sin(t)});
  }
  domain.disk_ = Circle{center, radius};
  return domain;
}

void PolygonalDomain::validate() const {
  auto check_ring = [](const Ring& ring, const char* what) {
    if (ring.size() < 3) {
      throw DomainError(std::string(what) + " ring needs at least 3 vertices");
    }
    for (const Point& p : ring) {
      if (!is_finite(p)) {
        throw DomainError(std::string(what) + " ring has a non-finite vertex");
      }
    }
    if (!ring_is_simple(ring)) {
      throw DomainError(std::string(what) + " ring is not simple");
    }
  };
  check_ring(outer_, "outer");
  for (std::size_t i = 0; i < holes_.size(); ++i) {
    check_ring(holes_[i], "hole");
    if (rings_intersect(outer_, holes_[i])) {
      throw DomainError("hole " + std::to_string(i) + " touches the outer ring");
    }
    for (const Point& p : holes_[i]) {
      if (!ring_contains(outer_, p)) {
        throw DomainError("hole " + std::to_string(i) +
                          " is not inside the outer ring");
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rings_intersect(holes_[i], holes_[j]) ||
          ring_contains(holes_[j], holes_[i].front()) ||
          ring_contains(holes_[i], holes_[j].front())) {
        throw DomainError("holes " + std::to_string(j) + " and " +
                          std::to_string(i) + " overlap");
      }
    }
  }
}

bool PolygonalDomain::contains(Point p) const {
  if (!is_finite(p)) return false;
  if (disk_) return distance(p, disk_->center) < disk_->radius - kBoundaryTolerance;
  if (!ring_contains(outer_, p)) return false;
  for (const Ring& hole : holes_) {
    if (ring_contains(hole, p)) return false;
  }
  return raw_boundary_distance(p) > kBoundaryTolerance;
}

double PolygonalDomain::raw_boundary_distance(Point p) const {
  if (disk_) return std::abs(disk_->radius - distance(p, disk_->center));
  double best = ring_distance(outer_, p);
  for (const Ring& hole : holes_) best = std::min(best, ring_distance(hole, p));
  return best;
}

double PolygonalDomain::boundary_distance(Point p) const {
  if (!contains(p)) {
    throw DomainError("point (" + std::to_string(p.x) + ", " +
                      std::to_string(p.y) + ") is outside the domain");
  }
  return raw_boundary_distance(p);
}

double PolygonalDomain::diameter() const {
  if (disk_) return 2.0 * disk_->radius;
  // Holes lie inside the outer ring, so the outer vertices realize the sup.
  double best = 0.0;
  for (std::size_t i = 0; i < outer_.size(); ++i) {
    for (std::size_t j = i + 1; j < outer_.size(); ++j) {
      best = std::max(best, distance(outer_[i], outer_[j]));
    }
  }
  return best;
}

BoundingBox PolygonalDomain::bounds() const {
  BoundingBox box{outer_.front(), outer_.front()};
  for (const Point& p : outer_) {
    box.min = {std::min(box.min.x, p.x), std::min(box.min.y, p.y)};
    box.max = {std::max(box.max.x, p.x), std::max(box.max.y, p.y)};
  }
  if (disk_) {
    const Point c = disk_->center;
    const double r = disk_->radius;
    box = {{c.x - r, c.y - r}, {c.x + r, c.y + r}};
  }
  return box;
}

bool PolygonalDomain::segment_inside(Point a, Point b) const {
  if (disk_) return true;  // convex
  const double len = distance(a, b);
  if (len < raw_boundary_distance(a) || len < raw_boundary_distance(b)) {
    return true;  // within an inscribed open ball
  }
  auto clear_of = [&](const Ring& ring) {
    bool clear = true;
    for_each_segment(ring, [&](Point c, Point d) {
      if (clear && segment_segment_distance(a, b, c, d) <= kBoundaryTolerance) {
        clear = false;
      }
    });
    return clear;
  };
  if (!clear_of(outer_)) return false;
  for (const Ring& hole : holes_) {
    if (!clear_of(hole)) return false;
  }
  return contains(0.5 * (a + b));
}

namespace {

Ring ring_from_json(const nlohmann::json& j) {
  Ring ring;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) {
      throw DomainError("ring vertex must be an [x, y] pair");
    }
    ring.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return ring;
}

nlohmann::json ring_to_json(const Ring& ring) {
  nlohmann::json j = nlohmann::json::array();
  for (const Point& p : ring) j.push_back({p.x, p.y});
  return j;
}

}  // namespace

PolygonalDomain domain_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("analytic_disk")) {
      const auto& d = j.at("analytic_disk");
      const auto& c = d.at("center");
      return PolygonalDomain::AnalyticDisk({c.at(0).get<double>(), c.at(1).get<double>()},
                                           d.at("radius").get<double>(),
                                           d.value("sides", 256));
    }
    std::vector<Ring> holes;
    if (j.contains("holes")) {
      for (const auto& h : j.at("holes")) holes.push_back(ring_from_json(h));
    }
    return PolygonalDomain(ring_from_json(j.at("outer")), std::move(holes));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed domain JSON: ") + e.what());
  }
}

nlohmann::json domain_to_json(const PolygonalDomain& domain) {
  nlohmann::json j;
  j["outer"] = ring_to_json(domain.outer());
  nlohmann::json holes = nlohmann::json::array();
  for (const Ring& h : domain.holes()) holes.push_back(ring_to_json(h));
  j["holes"] = holes;
  if (const auto& disk = domain.analytic_disk()) {
    j["analytic_disk"] = {{"center", {disk->center.x, disk->center.y}},
                          {"radius", disk->radius},
                          {"sides", domain.outer().size()}};
  }
  return j;
}

namespace fixtures {

PolygonalDomain unit_disk_polygon(int sides) {
  Ring ring;
  for (int i = 0; i < sides; ++i) {
    const double t = 2.0 * std::numbers::pi * i / sides;
    ring.push_back({std::cos(t), std::sin(t)});
  }
  return PolygonalDomain(std::move(ring));
}

PolygonalDomain unit_disk_analytic() {
  return PolygonalDomain::AnalyticDisk({0.0, 0.0}, 1.0);
}

PolygonalDomain unit_square() { return rectangle(1.0, 1.0); }

PolygonalDomain rectangle(double width, double height) {
  return PolygonalDomain({{0, 0}, {width, 0}, {width, height}, {0, height}});
}

PolygonalDomain square_with_hole() {
  return PolygonalDomain({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                         {{{0.4, 0.4}, {0.6, 0.4}, {0.6, 0.6}, {0.4, 0.6}}});
}

PolygonalDomain l_shape() {
  return PolygonalDomain(
      {{0, 0}, {1, 0}, {1, 0.5}, {0.5, 0.5}, {0.5, 1}, {0, 1}});
}

PolygonalDomain slit_rectangle() {
  return PolygonalDomain({{0, 0},
                          {0.99, 0},
                          {0.99, 0.6},
                          {1.01, 0.6},
                          {1.01, 0},
                          {2, 0},
                          {2, 1},
                          {0, 1}});
}

PolygonalDomain rooms_and_corridor(double width) {
  if (!(width > 0 && width < 1)) {
    throw DomainError("corridor width must lie in (0, 1)");
  }
  const double lo = 0.5 - width / 2, hi = 0.5 + width / 2;
  return PolygonalDomain({{0, 0},
                          {1, 0},
                          {1, lo},
                          {2, lo},
                          {2, 0},
                          {3, 0},
                          {3, 1},
                          {2, 1},
                          {2, hi},
                          {1, hi},
                          {1, 1},
                          {0, 1}});
}

}  // namespace fixtures

}  // namespace johnspace
