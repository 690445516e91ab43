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

#ifndef JOHNSPACE_REPORT_H_
#define JOHNSPACE_REPORT_H_

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "johnspace/geometry.h"

namespace johnspace {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

enum class Condition {
  kC1,
  kC2,
  kC3,
  kC4,
  kC5,
  kLocalQuasiconvexity,
  kTransfer,
  kDiameterCarrotImage,
  kRelativeDistance,
  kCoarseQh,
  kSmallScaleQh,
};

std::string condition_name(Condition c);

// Where a margin is attained: a basepoint (the start of a curve, or a
// sampled center) and a point on the curve or in the ball.
struct Witness {
  VertexId basepoint = kNoVertex;
  VertexId point = kNoVertex;
  std::optional<Point> basepoint_pos;
  std::optional<Point> point_pos;
};

// Verdict for one condition. `worst_margin` is tolerance-adjusted, so
// pass == (worst_margin >= 0).
struct ConditionReport {
  Condition condition = Condition::kC1;
  std::map<std::string, double> constants;
  bool pass = true;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::optional<Witness> witness;

  // Folds one margin observation into the report.
  void observe(double margin, const Witness& where) {
    if (!witness || margin < worst_margin) {
      worst_margin = margin;
      witness = where;
    }
    pass = worst_margin >= 0;
  }
};

nlohmann::json witness_to_json(const Witness& w);
nlohmann::json report_to_json(const ConditionReport& r);

// Non-finite reals have no JSON representation; they serialize as null.
nlohmann::json real_to_json(double v);

}  // namespace johnspace

#endif  // JOHNSPACE_REPORT_H_
