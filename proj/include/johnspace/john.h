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

#ifndef JOHNSPACE_JOHN_H_
#define JOHNSPACE_JOHN_H_

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "johnspace/qhmetric.h"
#include "johnspace/report.h"

namespace johnspace {

// min over curve vertices z of a * d(z) - l(curve[0..z]). Nonnegative iff
// the curve is an a-carrot arc from its first vertex. If `worst_index` is
// given it receives the vertex attaining the minimum.
double carrot_margin(const PolyCurve& curve, double a,
                     std::size_t* worst_index = nullptr);

// max over curve vertices z of l(curve[0..z]) / d(z): the least a for which
// the curve is an a-carrot arc.
double min_carrot_constant_for_curve(const PolyCurve& curve,
                                     std::size_t* worst_index = nullptr);

// max over z of diam(curve[0..z]) / d(z).
double min_diameter_carrot_constant(const DiscreteSpace& space,
                                    const PolyCurve& curve);

// Shortest path from x to x0 among paths that are a-carrot arcs, found by a
// Dijkstra search that relaxes an edge into v only when the arrival length
// is at most a * d(v). Empty if no such path exists.
std::optional<PolyCurve> carrot_feasible_path(const DiscreteSpace& space,
                                              VertexId x, VertexId x0, double a);

struct CarrotSearchOptions {
  double a_max = std::numeric_limits<double>::infinity();
  double rel_tol = 1e-3;
};

struct CarrotArc {
  // False when the optimal constant exceeds a_max: the curve and constant
  // are then a not-John witness rather than an answer.
  bool feasible = true;
  PolyCurve curve;
  // Carrot constant of `curve`, within rel_tol of the optimum over all
  // vertex paths from x to x0.
  double a = 0.0;
};

// Bisection on a between |x - x0|_path / d(x0) (a lower bound for any path)
// and the carrot constant of the Euclidean geodesic (always feasible).
CarrotArc best_carrot_arc(const DiscreteSpace& space, VertexId x, VertexId x0,
                          const CarrotSearchOptions& options = {});

struct JohnProfile {
  VertexId center = kNoVertex;
  std::vector<VertexId> samples;
  std::vector<double> sample_a;
  // Largest per-sample carrot constant.
  double a = 0.0;
  std::vector<PolyCurve> curves;
};

struct Condition1Options {
  // Check against this constant instead of the measured maximum.
  std::optional<double> a;
  CarrotSearchOptions search;
};

struct Condition1Result {
  ConditionReport report;
  JohnProfile profile;
};

// Length a-John check: finds the best carrot arc from every sample to x0.
// Margins are a - a(x) per sample; samples whose optimum exceeds a_max fail.
Condition1Result check_condition1(const DiscreteSpace& space, VertexId x0,
                                  std::span<const VertexId> samples,
                                  const Condition1Options& options = {});

// diam(D) <= b d(x0), and l_k(curve[x1, y]) <= b1 |log(d(y)/d(x1))| + b2 for
// every vertex y of every curve.
ConditionReport check_condition2(const DiscreteSpace& space, VertexId x0,
                                 std::span<const PolyCurve> curves, double b,
                                 double b1, double b2, const Tolerance& tol);

// l_k(curve[x1, y]) <= b, where y = x0 if d(x1) >= d(x0)/2 and otherwise the
// first vertex with d(y) >= 2 d(x1). Throws MalformedCurveError for a curve
// that does not end at x0.
ConditionReport check_condition3(const DiscreteSpace& space, VertexId x0,
                                 std::span<const PolyCurve> curves, double b,
                                 const Tolerance& tol);

// l(curve) <= a |x1 - x0| and the curve is an a-carrot arc. Margins are in
// ratio form: a - l / |x1 - x0| and a - l(curve[x1, z]) / d(z).
ConditionReport check_condition4(const DiscreteSpace& space, VertexId x0,
                                 std::span<const PolyCurve> curves, double a,
                                 const Tolerance& tol);

// Diameter a-carrot (diam(curve[x1, z]) <= a d(z)) and the phi-natural
// condition diam_k(curve[x1, y]) <= phi(diam(curve[x1, y]) / dist(curve[x1, y],
// boundary)). diam_k is bracketed: the margin uses the probe lower bound, and
// the margin against the upper bound l_k is reported as
// constants["upper_bracket_worst_margin"].
ConditionReport check_condition5(const DiscreteSpace& space, VertexId x0,
                                 std::span<const PolyCurve> curves, double a,
                                 const std::function<double(double)>& phi,
                                 const Tolerance& tol, int max_probes = 6);

}  // namespace johnspace

#endif  // JOHNSPACE_JOHN_H_
