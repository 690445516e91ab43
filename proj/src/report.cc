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

#include "johnspace/report.h"

#include <cmath>

namespace johnspace {

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::kC1: return "C1";
    case Condition::kC2: return "C2";
    case Condition::kC3: return "C3";
    case Condition::kC4: return "C4";
    case Condition::kC5: return "C5";
    case Condition::kLocalQuasiconvexity: return "LQC";
    case Condition::kTransfer: return "transfer";
    case Condition::kDiameterCarrotImage: return "diameter_carrot_image";
    case Condition::kRelativeDistance: return "relative_distance";
    case Condition::kCoarseQh: return "coarse_qh";
    case Condition::kSmallScaleQh: return "small_scale_qh";
  }
  return "?";
}

nlohmann::json real_to_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json j;
  auto site = [](VertexId id, const std::optional<Point>& pos) {
    nlohmann::json s;
    s["vertex"] = id;
    if (pos) {
      s["pos"] = {pos->x, pos->y};
    } else {
      s["pos"] = nullptr;
    }
    return s;
  };
  j["basepoint"] = site(w.basepoint, w.basepoint_pos);
  j["point"] = site(w.point, w.point_pos);
  return j;
}

nlohmann::json report_to_json(const ConditionReport& r) {
  nlohmann::json j;
  j["condition"] = condition_name(r.condition);
  nlohmann::json constants = nlohmann::json::object();
  for (const auto& [name, value] : r.constants) constants[name] = real_to_json(value);
  j["constants"] = constants;
  j["pass"] = r.pass;
  j["worst_margin"] = real_to_json(r.worst_margin);
  j["witness"] = r.witness ? witness_to_json(*r.witness) : nlohmann::json(nullptr);
  return j;
}

}  // namespace johnspace
