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

#ifndef JOHNSPACE_SVG_H_
#define JOHNSPACE_SVG_H_

#include <optional>
#include <string>
#include <vector>

#include "johnspace/domain.h"

namespace johnspace {

// Everything drawn in one figure. Coordinates are in domain units.
struct SvgScene {
  // Outline rings; the first is the outer boundary.
  std::vector<Ring> rings;
  std::vector<std::vector<Point>> curves;
  std::vector<Point> stage_points;
  std::optional<Point> witness;
};

SvgScene scene_for_domain(const PolygonalDomain& domain);

// Deterministic SVG 1.1 document on a fixed 1000x1000 canvas: the outline as
// a single even-odd path in black, curves as blue polylines, stage points as
// small blue disks and the witness as one red disk. Coordinates are printed
// with three decimals, so equal scenes give byte-identical output.
std::string render_svg(const SvgScene& scene);

}  // namespace johnspace

#endif  // JOHNSPACE_SVG_H_
