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

#include "johnspace/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace johnspace {

namespace {

constexpr double kCanvas = 1000.0;
constexpr double kPad = 40.0;

class Frame {
 public:
  explicit Frame(const SvgScene& scene) {
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
    double x1 = -x0, y1 = -x0;
    auto extend = [&](Point p) {
      x0 = std::min(x0, p.x);
      y0 = std::min(y0, p.y);
      x1 = std::max(x1, p.x);
      y1 = std::max(y1, p.y);
    };
    for (const Ring& r : scene.rings) std::for_each(r.begin(), r.end(), extend);
    for (const auto& c : scene.curves) std::for_each(c.begin(), c.end(), extend);
    if (x0 > x1) x0 = y0 = 0, x1 = y1 = 1;
    const double span = std::max({x1 - x0, y1 - y0, 1e-12});
    scale_ = (kCanvas - 2 * kPad) / span;
    // Center the drawing on the canvas.
    ox_ = kPad + 0.5 * ((kCanvas - 2 * kPad) - scale_ * (x1 - x0)) - scale_ * x0;
    oy_ = kPad + 0.5 * ((kCanvas - 2 * kPad) - scale_ * (y1 - y0)) + scale_ * y1;
  }

  // SVG y grows downward.
  std::string xy(Point p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", fix(ox_ + scale_ * p.x), fix(oy_ - scale_ * p.y));
    return buf;
  }

  std::string circle(Point p, double r, const char* fill) const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.1f\" fill=\"%s\"/>\n",
                  fix(ox_ + scale_ * p.x), fix(oy_ - scale_ * p.y), r, fill);
    return buf;
  }

 private:
  // Avoids printing "-0.000".
  static double fix(double v) { return v == 0.0 || std::abs(v) < 5e-4 ? 0.0 : v; }

  double scale_ = 1.0;
  double ox_ = 0.0;
  double oy_ = 0.0;
};

}  // namespace

SvgScene scene_for_domain(const PolygonalDomain& domain) {
  SvgScene scene;
  scene.rings.push_back(domain.outer());
  for (const Ring& h : domain.holes()) scene.rings.push_back(h);
  return scene;
}

std::string render_svg(const SvgScene& scene) {
  const Frame frame(scene);
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" "
      "height=\"1000\" viewBox=\"0 0 1000 1000\">\n"
      "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  if (!scene.rings.empty()) {
    out += "<path class=\"outline\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
           "fill-rule=\"evenodd\" d=\"";
    bool first_ring = true;
    for (const Ring& ring : scene.rings) {
      if (ring.empty()) continue;
      if (!first_ring) out += ' ';
      first_ring = false;
      out += 'M' + frame.xy(ring.front());
      for (std::size_t i = 1; i < ring.size(); ++i) out += " L" + frame.xy(ring[i]);
      out += " Z";
    }
    out += "\"/>\n";
  }
  for (const auto& curve : scene.curves) {
    if (curve.empty()) continue;
    out += "<polyline class=\"curve\" fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < curve.size(); ++i) {
      if (i > 0) out += ' ';
      out += frame.xy(curve[i]);
    }
    out += "\"/>\n";
  }
  for (const Point& p : scene.stage_points) out += frame.circle(p, 4.0, "blue");
  if (scene.witness) out += frame.circle(*scene.witness, 7.0, "red");
  out += "</svg>\n";
  return out;
}

}  // namespace johnspace
