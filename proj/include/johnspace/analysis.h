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

#ifndef JOHNSPACE_ANALYSIS_H_
#define JOHNSPACE_ANALYSIS_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "johnspace/constructions.h"
#include "johnspace/john.h"

namespace johnspace {

struct AnalysisOptions {
  // Check condition 1 against this constant instead of the measured one.
  std::optional<double> a;
  double a_max = std::numeric_limits<double>::infinity();
  QuasiconvexityParams params;
  int lqc_centers = 50;
  std::uint64_t seed = 42;
};

struct JohnAnalysis {
  JohnProfile profile;
  ConstantLedger ledger;
  // Conditions 1 to 5 in order.
  std::vector<ConditionReport> reports;
  // Probe of the local quasiconvexity hypothesis behind condition 4.
  ConditionReport local_quasiconvexity;
  // Case-routed curves checked by condition 4, one per constructible sample.
  std::vector<ConstructedCurve> constructed;

  bool pass() const;
};

// Measures the length John constant a at x0 over `samples`, derives the
// constants of the other four conditions from it, and checks them all:
//   2: (b, b1, b2) = (3a, a, (3 + log 2a) a) on the condition-1 arcs;
//   3: b1 log 2b + b2 on the same arcs;
//   4: the case constant for the empirical oracle b, on constructed curves;
//   5: diameter a-carrot and phi(t) = b1 log(1 + t) + b2 on the arcs.
// The derivations use max(1, a).
JohnAnalysis analyze_john(const DiscreteSpace& space, VertexId x0,
                          std::span<const VertexId> samples,
                          const AnalysisOptions& options = {});

}  // namespace johnspace

#endif  // JOHNSPACE_ANALYSIS_H_
