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

#include "johnspace/quasisym.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>
#include <random>

#include "johnspace/error.h"
#include "johnspace/shortest_path.h"

namespace johnspace {

// ---------------------------------------------------------------------------
// Maps

QuasiMap QuasiMap::Identity() { return QuasiMap(); }

QuasiMap QuasiMap::Similarity(double scale, double rotation, Point translation) {
  if (!(scale > 0) || !std::isfinite(scale) || !std::isfinite(rotation) ||
      !is_finite(translation)) {
    throw DomainError("similarity needs a positive finite scale and finite parameters");
  }
  QuasiMap m;
  m.kind_ = MapKind::kSimilarity;
  m.scale_ = scale;
  m.rotation_ = rotation;
  m.translation_ = translation;
  return m;
}

QuasiMap QuasiMap::Linear(double a11, double a12, double a21, double a22) {
  const double det = a11 * a22 - a12 * a21;
  if (!std::isfinite(det) || det == 0.0) {
    throw DomainError("linear map needs a finite invertible matrix");
  }
  QuasiMap m;
  m.kind_ = MapKind::kLinear;
  m.m_[0] = a11;
  m.m_[1] = a12;
  m.m_[2] = a21;
  m.m_[3] = a22;
  return m;
}

QuasiMap QuasiMap::RadialPower(double alpha, Point center) {
  if (!(alpha > 0) || !std::isfinite(alpha) || !is_finite(center)) {
    throw DomainError("radial power map needs a positive finite exponent");
  }
  QuasiMap m;
  m.kind_ = MapKind::kRadialPower;
  m.alpha_ = alpha;
  m.center_ = center;
  return m;
}

Point QuasiMap::apply(Point p) const {
  if (!is_finite(p)) throw DomainError("cannot map a non-finite point");
  switch (kind_) {
    case MapKind::kIdentity:
      return p;
    case MapKind::kSimilarity: {
      const double c = std::cos(rotation_), s = std::sin(rotation_);
      return Point{scale_ * (c * p.x - s * p.y), scale_ * (s * p.x + c * p.y)} +
             translation_;
    }
    case MapKind::kLinear:
      return {m_[0] * p.x + m_[1] * p.y, m_[2] * p.x + m_[3] * p.y};
    case MapKind::kRadialPower: {
      const Point q = p - center_;
      const double r = norm(q);
      if (r == 0.0) return center_;
      return center_ + std::pow(r, alpha_ - 1) * q;
    }
  }
  return p;
}

QuasiMap QuasiMap::inverse() const {
  switch (kind_) {
    case MapKind::kIdentity:
      return *this;
    case MapKind::kSimilarity: {
      const double c = std::cos(rotation_), s = std::sin(rotation_);
      const Point back{c * translation_.x + s * translation_.y,
                       -s * translation_.x + c * translation_.y};
      return Similarity(1 / scale_, -rotation_, (-1 / scale_) * back);
    }
    case MapKind::kLinear: {
      const double det = m_[0] * m_[3] - m_[1] * m_[2];
      return Linear(m_[3] / det, -m_[1] / det, -m_[2] / det, m_[0] / det);
    }
    case MapKind::kRadialPower:
      return RadialPower(1 / alpha_, center_);
  }
  return *this;
}

PolygonalDomain QuasiMap::image_domain(const PolygonalDomain& domain,
                                       int subdivisions) const {
  if (kind_ == MapKind::kIdentity) return domain;
  if (const auto& disk = domain.analytic_disk()) {
    const int sides = static_cast<int>(domain.outer().size());
    if (kind_ == MapKind::kSimilarity) {
      return PolygonalDomain::AnalyticDisk(apply(disk->center), scale_ * disk->radius,
                                           sides);
    }
    if (kind_ == MapKind::kRadialPower && disk->center == center_) {
      return PolygonalDomain::AnalyticDisk(center_, std::pow(disk->radius, alpha_), sides);
    }
  }
  const int pieces = kind_ == MapKind::kRadialPower ? std::max(1, subdivisions) : 1;
  auto map_ring = [&](const Ring& ring) {
    Ring out;
    out.reserve(ring.size() * static_cast<std::size_t>(pieces));
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Point a = ring[i], b = ring[(i + 1) % ring.size()];
      for (int k = 0; k < pieces; ++k) {
        out.push_back(apply(a + (static_cast<double>(k) / pieces) * (b - a)));
      }
    }
    return out;
  };
  std::vector<Ring> holes;
  for (const Ring& h : domain.holes()) holes.push_back(map_ring(h));
  return PolygonalDomain(map_ring(domain.outer()), std::move(holes));
}

nlohmann::json QuasiMap::to_json() const {
  switch (kind_) {
    case MapKind::kIdentity:
      return {{"kind", "identity"}};
    case MapKind::kSimilarity:
      return {{"kind", "similarity"},
              {"scale", scale_},
              {"rotation", rotation_},
              {"translation", {translation_.x, translation_.y}}};
    case MapKind::kLinear:
      return {{"kind", "linear"}, {"matrix", {{m_[0], m_[1]}, {m_[2], m_[3]}}}};
    case MapKind::kRadialPower:
      return {{"kind", "radial_power"}, {"alpha", alpha_}, {"center", {center_.x, center_.y}}};
  }
  return nullptr;
}

namespace {

Point point_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw DomainError(std::string("map field ") + what + " must be [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

double number_or(const nlohmann::json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw DomainError(std::string("map field ") + key + " must be a number");
  return j[key].get<double>();
}

}  // namespace

QuasiMap map_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw DomainError("map JSON needs a string field \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "identity") return QuasiMap::Identity();
  if (kind == "similarity") {
    const Point t = j.contains("translation") ? point_from_json(j["translation"], "translation")
                                              : Point{};
    return QuasiMap::Similarity(number_or(j, "scale", 1.0), number_or(j, "rotation", 0.0), t);
  }
  if (kind == "linear") {
    const auto& m = j.value("matrix", nlohmann::json());
    if (!m.is_array() || m.size() != 2) throw DomainError("linear map needs a 2x2 \"matrix\"");
    const Point r0 = point_from_json(m[0], "matrix"), r1 = point_from_json(m[1], "matrix");
    return QuasiMap::Linear(r0.x, r0.y, r1.x, r1.y);
  }
  if (kind == "radial_power") {
    if (!j.contains("alpha")) throw DomainError("radial power map needs \"alpha\"");
    const Point c = j.contains("center") ? point_from_json(j["center"], "center") : Point{};
    return QuasiMap::RadialPower(number_or(j, "alpha", 1.0), c);
  }
  throw DomainError("unknown map kind \"" + kind + "\"");
}

DiscreteSpace push_space(const QuasiMap& map, const DiscreteSpace& space,
                         const PolygonalDomain& image_domain) {
  if (!space.has_positions()) throw DomainError("push_space needs a positioned space");
  std::vector<Point> positions;
  positions.reserve(space.size());
  for (VertexId v = 0; v < static_cast<VertexId>(space.size()); ++v) {
    const Point p = map.apply(space.position(v));
    if (!image_domain.contains(p)) {
      throw DomainError("image of vertex " + std::to_string(v) +
                        " falls outside the image domain");
    }
    positions.push_back(p);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(space.edge_count());
  double stretch = 0.0;
  for (VertexId u = 0; u < static_cast<VertexId>(space.size()); ++u) {
    for (const Arc& arc : space.neighbors(u)) {
      if (arc.to <= u) continue;
      edges.emplace_back(u, arc.to);
      stretch = std::max(stretch, distance(positions[u], positions[arc.to]) / arc.euclid_len);
    }
  }
  if (edges.empty()) stretch = 1.0;
  return build_space_from_parts(std::make_shared<PolygonalDomain>(image_domain),
                                std::move(positions), std::move(edges),
                                space.spacing() * stretch);
}

// ---------------------------------------------------------------------------
// Distortion estimation

namespace {

// Uniform samples from a domain and from its boundary.
class DomainSampler {
 public:
  DomainSampler(const PolygonalDomain& domain, std::mt19937_64& rng)
      : domain_(domain), rng_(rng), box_(domain.bounds()) {
    auto add_ring = [&](const Ring& ring) {
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point a = ring[i], b = ring[(i + 1) % ring.size()];
        segments_.push_back({a, b});
        cumulative_.push_back((cumulative_.empty() ? 0.0 : cumulative_.back()) +
                              distance(a, b));
      }
    };
    add_ring(domain.outer());
    for (const Ring& h : domain.holes()) add_ring(h);
  }

  Point interior() {
    std::uniform_real_distribution<double> ux(box_.min.x, box_.max.x);
    std::uniform_real_distribution<double> uy(box_.min.y, box_.max.y);
    for (int attempt = 0; attempt < 100000; ++attempt) {
      const Point p{ux(rng_), uy(rng_)};
      if (domain_.contains(p)) return p;
    }
    throw DomainError("domain too thin to sample");
  }

  Point boundary() {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (const auto& disk = domain_.analytic_disk()) {
      const double theta = 2 * std::numbers::pi * u(rng_);
      return disk->center + disk->radius * Point{std::cos(theta), std::sin(theta)};
    }
    const double s = u(rng_) * cumulative_.back();
    const std::size_t i = static_cast<std::size_t>(
        std::lower_bound(cumulative_.begin(), cumulative_.end(), s) - cumulative_.begin());
    const auto& [a, b] = segments_[std::min(i, segments_.size() - 1)];
    return a + u(rng_) * (b - a);
  }

  // Interior point with probability 3/4, boundary point otherwise.
  Point closure() { return std::uniform_int_distribution<int>(0, 3)(rng_) == 0 ? boundary() : interior(); }

  Point direction() {
    const double theta = 2 * std::numbers::pi * std::uniform_real_distribution<double>(0, 1)(rng_);
    return {std::cos(theta), std::sin(theta)};
  }

  bool in_closure(Point p) const {
    return domain_.contains(p) || domain_.raw_boundary_distance(p) <= kBoundaryTolerance;
  }

 private:
  const PolygonalDomain& domain_;
  std::mt19937_64& rng_;
  BoundingBox box_;
  std::vector<std::pair<Point, Point>> segments_;
  std::vector<double> cumulative_;
};

// Relative slack that keeps a triple placed at ratio exactly t_i in bin i
// despite rounding of the recomputed ratio.
constexpr double kBinSlack = 1e-12;

double clamp_exponent(double p) {
  if (!std::isfinite(p)) return 1.0;
  return std::clamp(p, 0.05, 20.0);
}

}  // namespace

double EtaEstimate::raw(double t) const {
  if (!(t > 0)) return 0.0;
  const std::size_t n = t_grid.size();
  if (t > t_grid.back()) {
    const double p = n > 1 ? clamp_exponent(std::log(eta_hat[n - 1] / eta_hat[n - 2]) /
                                            std::log(t_grid[n - 1] / t_grid[n - 2]))
                           : 1.0;
    return eta_hat.back() * std::pow(t / t_grid.back(), p);
  }
  // First grid point with a positive envelope value.
  std::size_t first = 0;
  while (first < n && !(eta_hat[first] > 0)) ++first;
  if (first == n) return 0.0;
  const std::size_t i =
      static_cast<std::size_t>(std::lower_bound(t_grid.begin(), t_grid.end(), t) - t_grid.begin());
  const bool in_first_bin = first > 0 ? t > t_grid[first - 1] : t == t_grid[0];
  if (i > first || (i == first && in_first_bin)) return eta_hat[i];
  // Below the sampled range: power law through the first two positive values.
  const double p = first + 1 < n ? clamp_exponent(std::log(eta_hat[first + 1] / eta_hat[first]) /
                                                  std::log(t_grid[first + 1] / t_grid[first]))
                                 : 1.0;
  return eta_hat[first] * std::pow(t / t_grid[first], p);
}

EtaEstimate estimate_eta(const QuasiMap& map, const PolygonalDomain& domain,
                         const EtaOptions& options) {
  if (options.n_triples < 1000) throw DomainError("estimate_eta needs at least 1000 triples");
  if (!(options.t_min > 0) || !(options.t_max > options.t_min) || options.per_decade < 1) {
    throw DomainError("invalid t grid for estimate_eta");
  }
  EtaEstimate est;
  est.inflation = options.inflation;
  const int steps = static_cast<int>(
      std::round(options.per_decade * std::log10(options.t_max / options.t_min)));
  for (int i = 0; i <= steps; ++i) {
    est.t_grid.push_back(options.t_min * std::pow(10.0, static_cast<double>(i) / options.per_decade));
  }
  const std::size_t n = est.t_grid.size();
  est.bin_sup.assign(n, 0.0);
  std::vector<std::optional<EtaTriple>> bin_witness(n);

  std::mt19937_64 rng(options.seed);
  DomainSampler sampler(domain, rng);

  auto record = [&](Point x, Point a, Point b) {
    const double dxa = distance(x, a), dxb = distance(x, b);
    if (!(dxa > 0) || !(dxb > 0)) return false;
    const Point fx = map.apply(x);
    const double ratio = distance(fx, map.apply(a)) / distance(fx, map.apply(b));
    if (!std::isfinite(ratio)) return false;
    const double t = dxa / dxb;
    ++est.samples;
    const std::size_t bin = static_cast<std::size_t>(
        std::lower_bound(est.t_grid.begin(), est.t_grid.end(), t / (1 + kBinSlack)) -
        est.t_grid.begin());
    if (bin == n) return true;
    if (!bin_witness[bin] || ratio > est.bin_sup[bin]) {
      est.bin_sup[bin] = ratio;
      bin_witness[bin] = EtaTriple{x, a, b, t, ratio};
    }
    return true;
  };

  const std::size_t targeted = options.n_triples / 2;
  for (std::size_t s = 0; s < targeted; ++s) {
    const double t = est.t_grid[s % n];
    for (int attempt = 0; attempt < 20; ++attempt) {
      const Point x = sampler.interior();
      const Point far = sampler.closure();
      const double r = distance(x, far);
      if (!(r > 0)) continue;
      // The farther of a, b is a sampled point; the nearer one is placed
      // along a random direction to make |x - a| = t |x - b| exact.
      const Point near = t <= 1 ? x + (t * r) * sampler.direction()
                                : x + (r / t) * sampler.direction();
      if (!sampler.in_closure(near)) continue;
      if (t <= 1 ? record(x, near, far) : record(x, far, near)) break;
    }
  }
  for (std::size_t s = targeted; s < options.n_triples; ++s) {
    record(sampler.interior(), sampler.closure(), sampler.closure());
  }

  est.eta_hat.assign(n, 0.0);
  est.witnesses.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    est.eta_hat[i] = i > 0 ? est.eta_hat[i - 1] : 0.0;
    est.witnesses[i] = i > 0 ? est.witnesses[i - 1] : std::nullopt;
    if (bin_witness[i] && est.bin_sup[i] > est.eta_hat[i]) {
      est.eta_hat[i] = est.bin_sup[i];
      est.witnesses[i] = bin_witness[i];
    }
  }
  bool strict = est.eta_hat[0] > 0;
  double min_slope = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && !(est.eta_hat[i] > est.eta_hat[i - 1])) strict = false;
    if (est.eta_hat[i] > 0) min_slope = std::min(min_slope, est.eta_hat[i] / est.t_grid[i]);
  }
  if (!strict) {
    est.delta = std::isfinite(min_slope) ? 1e-6 * min_slope : 1e-6;
    est.warnings.push_back("envelope not strictly increasing; strictified by delta * t");
  }
  return est;
}

nlohmann::json eta_to_json(const EtaEstimate& eta) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : eta.witnesses) {
    if (!w) {
      witnesses.push_back(nullptr);
      continue;
    }
    witnesses.push_back({{"x", {w->x.x, w->x.y}},
                         {"a", {w->a.x, w->a.y}},
                         {"b", {w->b.x, w->b.y}},
                         {"t", w->t},
                         {"ratio", w->ratio}});
  }
  return {{"kind", "eta_estimate"},
          {"t_grid", eta.t_grid},
          {"bin_sup", eta.bin_sup},
          {"eta_hat", eta.eta_hat},
          {"witnesses", witnesses},
          {"samples", eta.samples},
          {"inflation", eta.inflation},
          {"delta", eta.delta},
          {"warnings", eta.warnings}};
}

ControlFunction eta_inverse_control(ControlFunction eta) {
  return [eta = std::move(eta)](double t) -> double {
    if (!(t > 0)) return 0.0;
    const double s = 1 / t;
    // Bracket eta^{-1}(s) in [lo, hi] with eta(lo) < s <= eta(hi).
    double hi = 1.0;
    while (eta(hi) < s) {
      hi *= 2;
      if (hi > 1e300) throw DomainError("control function is bounded; no inverse");
    }
    double lo = hi;
    while (eta(lo) >= s) {
      lo /= 2;
      if (lo < 1e-300) throw DomainError("control function does not vanish at 0");
    }
    while (hi - lo > 1e-15 * hi) {
      const double mid = std::sqrt(lo * hi);
      if (mid <= lo || mid >= hi) break;
      (eta(mid) < s ? lo : hi) = mid;
    }
    // eta^{-1}(s) >= lo, so 1/lo never under-estimates the inverse control.
    return 1 / lo;
  };
}

// ---------------------------------------------------------------------------
// Claims

ConditionReport check_diameter_carrot_image(const DiscreteSpace& source,
                                            const DiscreteSpace& image,
                                            std::span<const PolyCurve> curves,
                                            double a, const ControlFunction& eta,
                                            const Tolerance& tol) {
  ConditionReport report;
  report.condition = Condition::kDiameterCarrotImage;
  const double a_image = 2 * eta(a);
  report.constants["a"] = a;
  report.constants["eta_a"] = eta(a);
  report.constants["a_image"] = a_image;
  const Tolerance source_tol = Tolerance::For(source, tol.coefficient);
  for (const PolyCurve& curve : curves) {
    const std::vector<double> diam = prefix_diameters(source, curve);
    const double source_eps = source_tol.at(curve_min_distance(curve));
    for (std::size_t i = 0; i < curve.size(); ++i) {
      if (diam[i] / curve.boundary_distance(i) > a + source_eps) {
        throw DomainError("source curve from vertex " + std::to_string(curve.front()) +
                          " is not a diameter a-carrot arc");
      }
    }
    const PolyCurve mapped = PolyCurve::FromVertices(image, curve.vertices());
    const std::vector<double> diam_image = prefix_diameters(image, mapped);
    const double eps = tol.at(curve_min_distance(mapped));
    for (std::size_t i = 0; i < mapped.size(); ++i) {
      report.observe(a_image - diam_image[i] / mapped.boundary_distance(i) + eps,
                     vertex_witness(image, mapped.front(), mapped.vertex(i)));
    }
  }
  return report;
}

ConditionReport check_relative_distance_claim(const DiscreteSpace& source,
                                              const DiscreteSpace& image,
                                              std::span<const PolyCurve> curves,
                                              const ControlFunction& eta_prime,
                                              const Tolerance& tol) {
  ConditionReport report;
  report.condition = Condition::kRelativeDistance;
  for (const PolyCurve& curve : curves) {
    const PolyCurve mapped = PolyCurve::FromVertices(image, curve.vertices());
    const std::vector<double> diam = prefix_diameters(source, curve);
    const std::vector<double> diam_image = prefix_diameters(image, mapped);
    double dist = curve.boundary_distance(0), dist_image = mapped.boundary_distance(0);
    for (std::size_t i = 1; i < curve.size(); ++i) {
      dist = std::min(dist, curve.boundary_distance(i));
      dist_image = std::min(dist_image, mapped.boundary_distance(i));
      const double lhs = diam[i] / dist;
      const double rhs = 6 * eta_prime(diam_image[i] / dist_image);
      report.observe((rhs - lhs) / lhs + tol.at(dist_image),
                     vertex_witness(image, mapped.front(), mapped.vertex(i)));
    }
  }
  return report;
}

std::vector<VertexPair> sample_vertex_pairs(const DiscreteSpace& space,
                                            std::size_t sources,
                                            std::size_t per_source,
                                            std::uint64_t seed) {
  std::vector<VertexPair> pairs;
  if (space.size() < 2) return pairs;
  std::mt19937_64 rng(seed + 1);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(space.size()) - 1);
  std::uniform_int_distribution<int> hops(1, 3);
  for (VertexId u : stratified_samples(space, sources, seed)) {
    for (std::size_t k = 0; k < per_source; ++k) {
      VertexId v = u;
      if (k % 2 == 1) {
        // Short random walk, so that the cloud also covers small distances.
        for (int h = hops(rng); h > 0; --h) {
          const auto arcs = space.neighbors(v);
          if (arcs.empty()) break;
          v = arcs[std::uniform_int_distribution<std::size_t>(0, arcs.size() - 1)(rng)].to;
        }
      }
      while (v == u) v = pick(rng);
      pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

CoarseFit fit_coarse_constants(std::span<const double> k, std::span<const double> k_image) {
  if (k.size() != k_image.size()) throw DomainError("coarse fit needs paired samples");
  if (k.empty()) return {};
  std::vector<Point> pts;
  pts.reserve(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) pts.push_back({k[i], k_image[i]});
  std::sort(pts.begin(), pts.end(),
            [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y > b.y); });
  // Upper convex hull, left to right.
  std::vector<Point> hull;
  for (const Point& p : pts) {
    if (!hull.empty() && hull.back().x == p.x) continue;
    while (hull.size() >= 2 &&
           cross(hull.back() - hull[hull.size() - 2], p - hull[hull.size() - 2]) >= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  const double mean = std::accumulate(k.begin(), k.end(), 0.0) / static_cast<double>(k.size());

  std::vector<CoarseFit> candidates;
  candidates.push_back({0.0, std::max(0.0, *std::max_element(k_image.begin(), k_image.end()))});
  double slope = 0.0;
  bool through_origin = true;
  for (const Point& p : pts) {
    if (p.x > 0) {
      slope = std::max(slope, p.y / p.x);
    } else if (p.y > 0) {
      through_origin = false;
    }
  }
  if (through_origin) candidates.push_back({slope, 0.0});
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const double m = (hull[i + 1].y - hull[i].y) / (hull[i + 1].x - hull[i].x);
    const double c2 = hull[i].y - m * hull[i].x;
    if (m >= 0 && c2 >= 0) candidates.push_back({m, c2});
  }
  CoarseFit best = candidates.front();
  for (const CoarseFit& c : candidates) {
    if (c.c1 * mean + c.c2 < best.c1 * mean + best.c2) best = c;
  }
  // Absorb rounding so the line lies above every sample exactly.
  for (const Point& p : pts) best.c2 = std::max(best.c2, p.y - best.c1 * p.x);
  return best;
}

double small_scale_threshold(const ControlFunction& eta, const QuasiconvexityParams& params) {
  const double target = params.lambda / (2 * params.c);
  auto g = [&](double t) { return 2 * eta(std::expm1(t)) - target; };
  double lo = 0.0, hi = 1.0;
  while (g(hi) < 0) {
    hi *= 2;
    if (hi > 1e6) throw DomainError("small-scale threshold has no solution");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return lo;
}

CoarseQhResult check_coarse_qh_claim(const DiscreteSpace& source,
                                     const DiscreteSpace& image,
                                     std::span<const VertexPair> pairs, double c1,
                                     double c2, const ControlFunction& eta,
                                     const QuasiconvexityParams& params,
                                     const Tolerance& tol) {
  if (source.size() != image.size()) throw DomainError("spaces differ in size");
  CoarseQhResult out;
  out.report.condition = Condition::kCoarseQh;
  out.small_scale.condition = Condition::kSmallScaleQh;
  out.t0 = small_scale_threshold(eta, params);
  const double small_bound = params.lambda / (2 - params.lambda);

  std::map<VertexId, std::vector<std::size_t>> by_source;
  for (std::size_t i = 0; i < pairs.size(); ++i) by_source[pairs[i].first].push_back(i);
  out.k.assign(pairs.size(), 0.0);
  out.k_image.assign(pairs.size(), 0.0);
  for (const auto& [u, indices] : by_source) {
    const ShortestPathTree tree = dijkstra(source, u, EdgeWeight::kQuasihyperbolic);
    const ShortestPathTree tree_image = dijkstra(image, u, EdgeWeight::kQuasihyperbolic);
    for (std::size_t i : indices) {
      out.k[i] = tree.dist[pairs[i].second];
      out.k_image[i] = tree_image.dist[pairs[i].second];
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    const double eps = tol.at(std::min(image.boundary_distance(u), image.boundary_distance(v)));
    const Witness w = vertex_witness(image, u, v);
    out.report.observe(c1 * out.k[i] + c2 - out.k_image[i] + eps, w);
    if (out.k[i] <= out.t0) {
      ++out.small_pairs;
      out.small_scale.observe(small_bound - out.k_image[i] + eps, w);
    }
  }
  out.fitted = fit_coarse_constants(out.k, out.k_image);
  out.report.constants = {{"c1", c1},
                          {"c2", c2},
                          {"fitted_c1", out.fitted.c1},
                          {"fitted_c2", out.fitted.c2},
                          {"pairs", static_cast<double>(pairs.size())}};
  out.small_scale.constants = {{"t0", out.t0},
                               {"bound", small_bound},
                               {"pairs", static_cast<double>(out.small_pairs)}};
  return out;
}

// ---------------------------------------------------------------------------
// Transfer

TransferBound transfer_bound(const TransferInputs& inputs) {
  const double a = std::max(1.0, inputs.a);
  TransferBound out;
  out.a_diam = std::max(1.0, 2 * inputs.eta(a));
  const LogPhi phi = derive_phi_from_c1(a);
  const CoarseFit coarse = inputs.coarse;
  const ControlFunction eta_prime = inputs.eta_prime;
  auto phi_image = [&](double t) { return coarse.c1 * phi(6 * eta_prime(t)) + coarse.c2; };
  out.b = derive_c3_from_c5(out.a_diam, phi_image);
  out.log_bound = log_case_constant(inputs.params, out.b);
  return out;
}

TransferResult transfer_john_constant(const DiscreteSpace& source,
                                      const DiscreteSpace& image, const QuasiMap& map,
                                      VertexId x0, const TransferInputs& inputs) {
  if (!source.has_positions()) throw DomainError("transfer needs a positioned source space");
  const std::optional<VertexId> x0_image = image.nearest_vertex(map.apply(source.position(x0)));
  if (!x0_image) throw DomainError("image space is empty");

  TransferResult out;
  out.bound = transfer_bound(inputs);
  Condition1Options options;
  options.search = inputs.search;
  Condition1Result c1 = check_condition1(image, *x0_image, inputs.samples, options);
  out.image_profile = std::move(c1.profile);

  ConditionReport& report = out.report;
  report.condition = Condition::kTransfer;
  const JohnProfile& prof = out.image_profile;
  const std::size_t worst = static_cast<std::size_t>(
      std::max_element(prof.sample_a.begin(), prof.sample_a.end()) - prof.sample_a.begin());
  const double a_image = prof.a;
  const Witness w = prof.samples.empty()
                        ? vertex_witness(image, *x0_image, *x0_image)
                        : vertex_witness(image, prof.samples[worst], *x0_image);
  report.observe(out.bound.log_bound - std::log(std::max(a_image, 1e-300)), w);
  report.constants = {{"a_source", inputs.a},
                      {"a_image", a_image},
                      {"a_diam_image", out.bound.a_diam},
                      {"b_pipeline", out.bound.b},
                      {"log_pipeline_bound", out.bound.log_bound},
                      {"pipeline_bound", std::exp(out.bound.log_bound)},
                      {"c1", inputs.coarse.c1},
                      {"c2", inputs.coarse.c2},
                      {"lambda", inputs.params.lambda},
                      {"c", inputs.params.c}};
  return out;
}

}  // namespace johnspace
