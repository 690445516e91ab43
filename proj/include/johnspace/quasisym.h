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

#ifndef JOHNSPACE_QUASISYM_H_
#define JOHNSPACE_QUASISYM_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "johnspace/constructions.h"
#include "johnspace/john.h"

namespace johnspace {

// Increasing function [0, inf) -> [0, inf), such as a distortion control eta.
using ControlFunction = std::function<double(double)>;

enum class MapKind { kIdentity, kSimilarity, kLinear, kRadialPower };

// An explicit planar homeomorphism from a small closed-form gallery.
class QuasiMap {
 public:
  static QuasiMap Identity();
  // p -> scale * R(rotation) p + translation. Throws DomainError unless
  // scale > 0.
  static QuasiMap Similarity(double scale, double rotation, Point translation);
  // p -> [[a11, a12], [a21, a22]] p. Throws DomainError for a singular matrix.
  static QuasiMap Linear(double a11, double a12, double a21, double a22);
  // p -> center + (p - center) |p - center|^(alpha - 1), extended by
  // continuity to send the center to itself. Throws DomainError unless
  // alpha > 0.
  static QuasiMap RadialPower(double alpha, Point center);

  MapKind kind() const { return kind_; }

  // Throws DomainError for non-finite input.
  Point apply(Point p) const;
  QuasiMap inverse() const;

  // f(D). Exact for the identity, similarities and linear maps of polygons,
  // similarities of analytic disks, and radial maps of analytic disks
  // centered at the map center. Otherwise the image of the boundary polygon
  // with every edge subdivided into `subdivisions` pieces.
  PolygonalDomain image_domain(const PolygonalDomain& domain,
                               int subdivisions = 32) const;

  nlohmann::json to_json() const;

 private:
  MapKind kind_ = MapKind::kIdentity;
  double scale_ = 1.0;
  double rotation_ = 0.0;
  Point translation_;
  double m_[4] = {1.0, 0.0, 0.0, 1.0};
  double alpha_ = 1.0;
  Point center_;
};

// {"kind": "identity" | "similarity" | "linear" | "radial_power", ...}.
// Throws DomainError for unknown kinds or invalid parameters.
QuasiMap map_from_json(const nlohmann::json& j);

// Image of a positioned space: same vertex ids and adjacency, d and weights
// recomputed in `image_domain`. The spacing is the source spacing times the
// largest edge stretch factor. Throws DomainError if the space has no
// positions or an image vertex falls outside `image_domain`.
DiscreteSpace push_space(const QuasiMap& map, const DiscreteSpace& space,
                         const PolygonalDomain& image_domain);

struct EtaTriple {
  Point x;
  Point a;
  Point b;
  // |x - a| / |x - b| and |f(x) - f(a)| / |f(x) - f(b)|.
  double t = 0.0;
  double ratio = 0.0;
};

struct EtaOptions {
  std::size_t n_triples = 20000;
  double t_min = 1e-4;
  double t_max = 1e4;
  int per_decade = 8;
  double inflation = 1.1;
  std::uint64_t seed = 42;
};

// Empirical distortion function of a map over the closure of a domain.
struct EtaEstimate {
  std::vector<double> t_grid;
  // Largest image ratio over triples with t in (t_grid[i-1], t_grid[i]].
  std::vector<double> bin_sup;
  // Running maximum of bin_sup: the largest image ratio over all sampled
  // triples with t <= t_grid[i], attained by witnesses[i].
  std::vector<double> eta_hat;
  std::vector<std::optional<EtaTriple>> witnesses;
  std::size_t samples = 0;
  double inflation = 1.1;
  // Slope of the strictifying term delta * t.
  double delta = 0.0;
  std::vector<std::string> warnings;

  // Upper step interpolation of eta_hat (the value at the first grid point
  // >= t), with power-law extrapolation outside the grid and raw(0) = 0.
  double raw(double t) const;

  // Control used in bounds: inflation * raw(t) + delta * t.
  double operator()(double t) const { return inflation * raw(t) + delta * t; }
};

// Samples n_triples triples (x, a, b) from the closure of `domain`: half
// placed at exact ratios t_grid[i], half uniform, with boundary points mixed
// in. Throws DomainError for fewer than 1000 triples.
EtaEstimate estimate_eta(const QuasiMap& map, const PolygonalDomain& domain,
                         const EtaOptions& options = {});

nlohmann::json eta_to_json(const EtaEstimate& eta);

// t -> 1 / eta^{-1}(1 / t), with eta^{-1} found by bisection; 0 -> 0. The
// returned function throws DomainError if eta is not unbounded increasing.
ControlFunction eta_inverse_control(ControlFunction eta);

// Checks that each image curve is a diameter 2 eta(a)-carrot arc: margin
// 2 eta(a) - diam'(curve'[x', z']) / d'(z') + eps per vertex. Throws
// DomainError if a source curve is not a diameter a-carrot arc within eps.
ConditionReport check_diameter_carrot_image(const DiscreteSpace& source,
                                            const DiscreteSpace& image,
                                            std::span<const PolyCurve> curves,
                                            double a, const ControlFunction& eta,
                                            const Tolerance& tol);

// For every prefix A of every curve: diam(A) / dist(A, boundary) <=
// 6 eta'(diam(A') / dist(A', boundary')), margin (rhs - lhs) / lhs + eps.
ConditionReport check_relative_distance_claim(const DiscreteSpace& source,
                                              const DiscreteSpace& image,
                                              std::span<const PolyCurve> curves,
                                              const ControlFunction& eta_prime,
                                              const Tolerance& tol);

using VertexPair = std::pair<VertexId, VertexId>;

// `sources` stratified source vertices with `per_source` partners each, so
// that one shortest-path tree per source serves all its pairs. Every second
// partner ends a random walk of one to three edges; the rest are uniform.
std::vector<VertexPair> sample_vertex_pairs(const DiscreteSpace& space,
                                            std::size_t sources,
                                            std::size_t per_source,
                                            std::uint64_t seed = 42);

struct CoarseFit {
  double c1 = 0.0;
  double c2 = 0.0;
};

// Smallest line c1 k + c2 (c1, c2 >= 0) lying above every point (k_i, k'_i),
// minimal in c1 mean(k) + c2, among lines through edges of the upper convex
// hull and the two axis-constrained lines.
CoarseFit fit_coarse_constants(std::span<const double> k,
                               std::span<const double> k_image);

struct CoarseQhResult {
  ConditionReport report;
  // k <= t0 => k' <= lambda / (2 - lambda), with 2 eta(e^{t0} - 1) =
  // lambda / (2c).
  ConditionReport small_scale;
  std::vector<double> k;
  std::vector<double> k_image;
  CoarseFit fitted;
  double t0 = 0.0;
  std::size_t small_pairs = 0;
};

// Margins c1 k(u1, u2) + c2 - k'(u1', u2') + eps per pair, plus the
// small-scale check and the fitted constants of the sampled cloud.
CoarseQhResult check_coarse_qh_claim(const DiscreteSpace& source,
                                     const DiscreteSpace& image,
                                     std::span<const VertexPair> pairs, double c1,
                                     double c2, const ControlFunction& eta,
                                     const QuasiconvexityParams& params,
                                     const Tolerance& tol);

// Solves 2 eta(e^{t0} - 1) = lambda / (2c) for t0 by bisection.
double small_scale_threshold(const ControlFunction& eta,
                             const QuasiconvexityParams& params);

struct TransferInputs {
  // Length John constant of the source space at center x0.
  double a = 1.0;
  ControlFunction eta;
  ControlFunction eta_prime;
  CoarseFit coarse;
  QuasiconvexityParams params;
  std::vector<VertexId> samples;
  CarrotSearchOptions search;
};

struct TransferBound {
  double a_diam = 0.0;
  double b = 0.0;
  double log_bound = 0.0;
};

// a'_diam = 2 eta(a); phi(t) = a log(1 + t) + (3 + log 2a) a;
// phi'(t) = c1 phi(6 eta'(t)) + c2; b = 2 phi'(2 a'_diam (1 + a'_diam));
// bound = case_constant(params, b), returned as its logarithm.
TransferBound transfer_bound(const TransferInputs& inputs);

struct TransferResult {
  ConditionReport report;
  JohnProfile image_profile;
  TransferBound bound;
};

// Measures the image John constant a' at f(x0) over the sampled vertices and
// compares it with the assembled bound; margin log(bound) - log(a').
TransferResult transfer_john_constant(const DiscreteSpace& source,
                                      const DiscreteSpace& image, const QuasiMap& map,
                                      VertexId x0, const TransferInputs& inputs);

}  // namespace johnspace

#endif  // JOHNSPACE_QUASISYM_H_
