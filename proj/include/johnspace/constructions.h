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

#ifndef JOHNSPACE_CONSTRUCTIONS_H_
#define JOHNSPACE_CONSTRUCTIONS_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "johnspace/qhmetric.h"

namespace johnspace {

// Constants of the quasihyperbolic growth condition
//   diam(D) <= b d(x0),  l_k(alpha[x1, y]) <= b1 |log(d(y)/d(x1))| + b2.
struct GrowthConstants {
  double b = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
};

// From a length a-John constant: (3a, a, (3 + log 2a) a). Throws DomainError
// for a < 1.
GrowthConstants derive_c2_from_c1(double a);

// Bound on l_k up to the doubling point (or to x0):
// max(b1 log(2b) + b2, b1 log 2 + b2).
double derive_c3_from_c2(const GrowthConstants& c);

// phi(t) = b1 log(1 + t) + b2.
struct LogPhi {
  double b1 = 0.0;
  double b2 = 0.0;
  double operator()(double t) const { return b1 * std::log1p(t) + b2; }
};

// The natural-condition control function of a length a-John space, with
// (b1, b2) from derive_c2_from_c1. Throws DomainError for a < 1.
LogPhi derive_phi_from_c1(double a);

// 2 phi(2a(1 + a)): the factor 2 pays for replacing a curve by a near
// geodesic with l_k <= 2k. Throws DomainError for a < 1.
double derive_c3_from_c5(double a, const std::function<double(double)>& phi);

// Smallest index i with d(curve[i]) >= target, if any.
std::optional<std::size_t> first_point_with_distance(const PolyCurve& curve,
                                                     double target);

// Named nonnegative constants tagged with the step that produced them.
class ConstantLedger {
 public:
  struct Entry {
    double value = 0.0;
    std::string provenance;
  };

  // Throws DomainError for negative or NaN values.
  void set(const std::string& name, double value, std::string provenance);
  double get(const std::string& name) const;
  bool contains(const std::string& name) const { return entries_.count(name) > 0; }
  const std::map<std::string, Entry>& entries() const { return entries_; }
  nlohmann::json to_json() const;

 private:
  std::map<std::string, Entry> entries_;
};

struct QuasiconvexityParams {
  double lambda = 0.5;
  double c = 1.1;
};

enum class ConstructionCase { kA, kB, kC };

std::string case_name(ConstructionCase c);

// A: |x1 - x0| <= (lambda / c) d(x0) (boundary included, and x1 == x0);
// B: otherwise, if d(x1) >= d(x0) / 2; C: otherwise.
ConstructionCase route_case(const DiscreteSpace& space, VertexId x1, VertexId x0,
                            const QuasiconvexityParams& params);

// Quasiconvex carrot constant produced by the three cases:
// max(lambda/(1-lambda), e^{2b}, c e^b / lambda, 4 e^{2b}, (4c/lambda) e^{2b}).
double case_constant(const QuasiconvexityParams& params, double b);

// log of case_constant, finite even where the constant itself overflows.
double log_case_constant(const QuasiconvexityParams& params, double b);

// Yields a curve from x to x0 whose quasihyperbolic length up to the
// condition-3 stopping point is bounded by some b.
using Cond3Oracle = std::function<PolyCurve(VertexId)>;

// Quasihyperbolic geodesics toward x0, read off one shortest-path tree.
class QhGeodesicOracle {
 public:
  QhGeodesicOracle(const DiscreteSpace& space, VertexId x0);

  PolyCurve operator()(VertexId x) const;

  // l_k of the geodesic from x1 up to its condition-3 stopping point.
  double stopping_qh(VertexId x1) const;

  // Largest stopping_qh over every vertex of the space: the smallest b for
  // which this oracle satisfies its contract everywhere.
  double empirical_b() const;

 private:
  const DiscreteSpace* space_;
  VertexId x0_;
  std::vector<VertexId> parent_;
};

struct Stage {
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;
  double len = 0.0;
  double qh_len = 0.0;
};

struct ConstructedCurve {
  ConstructionCase kind = ConstructionCase::kA;
  PolyCurve curve;
  std::vector<Stage> stages;
  // Measured carrot constant and l / |x1 - x0|, with the bounds the case
  // guarantees for them.
  double carrot_constant = 0.0;
  double carrot_bound = 0.0;
  double length_ratio = 0.0;
  double length_bound = 0.0;
};

// Every construction throws ConstructionError when a guaranteed bound fails
// by more than `eps` (dimensionless, ratio form; multiplied by the stage
// count for the chain) or when the oracle breaks its contract.

// Euclidean geodesic; l <= c |x1 - x0| and carrot constant <= lambda/(1-lambda).
ConstructedCurve construct_case_a(const DiscreteSpace& space, VertexId x1, VertexId x0,
                                  const QuasiconvexityParams& params, double eps);

// The oracle curve itself; carrot constant <= e^{2b}, l <= (c e^b/lambda)|x1 - x0|.
ConstructedCurve construct_case_b(const DiscreteSpace& space, VertexId x1, VertexId x0,
                                  double b, const QuasiconvexityParams& params,
                                  const Cond3Oracle& oracle, double eps);

// Doubling chain: follow the oracle curve from x_i to its first vertex with
// d >= 2 d(x_i), restart the oracle there, and append the whole oracle curve
// once d(x_i) >= d(x0)/2. Carrot constant <= 4 e^{2b},
// l <= (4c/lambda) e^{2b} |x1 - x0|, at most ceil(log2(d(x0)/d(x1))) + 1
// stages.
ConstructedCurve chain_construction(const DiscreteSpace& space, VertexId x1,
                                    VertexId x0, double b,
                                    const QuasiconvexityParams& params,
                                    const Cond3Oracle& oracle, double eps);

// Routes to the case selected by route_case.
ConstructedCurve construct_john_curve(const DiscreteSpace& space, VertexId x1,
                                      VertexId x0, double b,
                                      const QuasiconvexityParams& params,
                                      const Cond3Oracle& oracle, double eps);

// Curve JSON with per-stage annotations.
nlohmann::json constructed_to_json(const DiscreteSpace& space,
                                   const ConstructedCurve& constructed);

}  // namespace johnspace

#endif  // JOHNSPACE_CONSTRUCTIONS_H_
