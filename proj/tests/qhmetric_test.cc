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

#include "johnspace/qhmetric.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "johnspace/error.h"
#include "johnspace/shortest_path.h"
#include "oracles.h"

namespace johnspace {
namespace {

class DiskGridTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    space_ = new DiscreteSpace(build_grid_space(fixtures::unit_disk_analytic(), 0.02));
  }
  static void TearDownTestSuite() { delete space_; }
  static const DiscreteSpace& space() { return *space_; }

 private:
  static DiscreteSpace* space_;
};

DiscreteSpace* DiskGridTest::space_ = nullptr;

TEST_F(DiskGridTest, RadialDistanceMatchesClosedForm) {
  const VertexId o = *space().nearest_vertex({0, 0});
  for (double r : {0.3, 0.6, 0.9}) {
    const VertexId x = *space().nearest_vertex({r, 0});
    const double k = qh_distance(space(), o, x).value;
    EXPECT_NEAR(k, std::log(1 / (1 - r)), 0.03 * std::log(1 / (1 - r))) << "r = " << r;
  }
}

TEST_F(DiskGridTest, DistanceIsExactlySymmetric) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(space().size()) - 1);
  for (int i = 0; i < 20; ++i) {
    const VertexId x = pick(rng), y = pick(rng);
    EXPECT_EQ(qh_distance(space(), x, y).value, qh_distance(space(), y, x).value);
    EXPECT_EQ(euclid_geodesic(space(), x, y).value, euclid_geodesic(space(), y, x).value);
  }
}

TEST_F(DiskGridTest, GeodesicCurveCarriesItsValue) {
  const VertexId x = *space().nearest_vertex({-0.5, 0.3});
  const VertexId y = *space().nearest_vertex({0.7, -0.2});
  const GeodesicResult g = qh_distance(space(), x, y);
  EXPECT_EQ(g.curve.front(), x);
  EXPECT_EQ(g.curve.back(), y);
  EXPECT_NEAR(g.curve.qh_length(), g.value, 1e-12);
  EXPECT_EQ(qh_distance(space(), x, x).value, 0.0);
}

TEST_F(DiskGridTest, QhLowerBoundsHold) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(space().size()) - 1);
  for (int i = 0; i < 50; ++i) {
    const VertexId x = pick(rng), y = pick(rng);
    const GeodesicResult g = qh_distance(space(), x, y);
    EXPECT_GE(check_gp_point_bound(space(), x, y, g.value), 0.0);
    EXPECT_GE(check_gp_length_bound(g.curve), 0.0);
  }
}

TEST_F(DiskGridTest, DiameterBracketIsOrdered) {
  const VertexId x = *space().nearest_vertex({0.9, 0});
  const VertexId o = *space().nearest_vertex({0, 0});
  const PolyCurve c = qh_distance(space(), x, o).curve;
  const QhDiameterBracket b = qh_diameter_of_curve(space(), c, 6);
  EXPECT_LE(b.lower, b.upper + 1e-12);
  // On a geodesic the endpoints already realize the length.
  EXPECT_NEAR(b.lower, b.upper, 1e-9);
  const auto lower = prefix_qh_diameter_lower(space(), c, 6);
  ASSERT_EQ(lower.size(), c.size());
  for (std::size_t i = 1; i < lower.size(); ++i) {
    EXPECT_GE(lower[i], lower[i - 1]);
    EXPECT_LE(lower[i], c.prefix_qh(i) + 1e-12);
  }
}

TEST_F(DiskGridTest, PrefixDiametersAreMonotone) {
  const VertexId x = *space().nearest_vertex({-0.6, -0.6});
  const VertexId y = *space().nearest_vertex({0.6, 0.1});
  const PolyCurve c = euclid_geodesic(space(), x, y).curve;
  const auto diam = prefix_diameters(space(), c);
  EXPECT_EQ(diam[0], 0.0);
  for (std::size_t i = 1; i < diam.size(); ++i) {
    EXPECT_GE(diam[i], diam[i - 1]);
    EXPECT_LE(diam[i], c.prefix_length(i) + 1e-12);
  }
}

TEST(PolyCurveTest, FromVerticesRejectsGaps) {
  const DiscreteSpace s = build_grid_space(fixtures::unit_square(), 0.25);
  EXPECT_THROW(PolyCurve::FromVertices(s, {}), MalformedCurveError);
  const VertexId a = *s.nearest_vertex({0.25, 0.25});
  const VertexId b = *s.nearest_vertex({0.75, 0.75});
  EXPECT_THROW(PolyCurve::FromVertices(s, {a, b}), MalformedCurveError);
  const VertexId m = *s.nearest_vertex({0.5, 0.5});
  const PolyCurve c = PolyCurve::FromVertices(s, {a, m, b});
  EXPECT_NEAR(c.length(), std::sqrt(2.0) / 2, 1e-15);
  EXPECT_EQ(c.prefix(1).size(), 2u);
}

TEST(PolyCurveTest, FromPointsIntegratesAndRejectsExits) {
  const PolygonalDomain sq = fixtures::unit_square();
  const PolyCurve c = PolyCurve::FromPoints(sq, {{0.5, 0.1}, {0.5, 0.5}}, 64);
  EXPECT_NEAR(c.qh_length(), std::log(5.0), 1e-3);
  EXPECT_GE(c.qh_length(), std::log(5.0));
  EXPECT_FALSE(c.on_space());
  EXPECT_THROW(PolyCurve::FromPoints(sq, {{0.5, 0.5}, {1.5, 0.5}}), DegenerateCurveError);
  EXPECT_THROW(PolyCurve::FromPoints(fixtures::square_with_hole(), {{0.3, 0.5}, {0.7, 0.5}}),
               DegenerateCurveError);
}

TEST(QhLowerBoundTest, DomainPointBound) {
  const PolygonalDomain disk = fixtures::unit_disk_analytic();
  // The radial distance attains the bound with equality.
  EXPECT_NEAR(check_gp_point_bound(disk, {0, 0}, {0.5, 0}, std::log(2.0)), 0.0, 1e-15);
  EXPECT_LT(check_gp_point_bound(disk, {0, 0}, {0.5, 0}, 0.5), 0.0);
}

TEST(QhDistanceTest, GraphMatchesEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const GraphSpace g = oracles::random_graph(rng, 9);
    const DiscreteSpace s = build_graph_space(g);
    const oracles::PathEnumerator oracle(g);
    for (VertexId x = 0; x < static_cast<VertexId>(s.size()); ++x) {
      for (VertexId y = 0; y < static_cast<VertexId>(s.size()); ++y) {
        EXPECT_NEAR(qh_distance(s, x, y).value, oracle.qh_distance(s.label(x), s.label(y)),
                    1e-12);
      }
    }
  }
}

TEST(QhDistanceTest, UnreachableThrows) {
  const DiscreteSpace s = build_grid_space(fixtures::rooms_and_corridor(0.05), 0.2);
  const VertexId a = *s.nearest_vertex({0.4, 0.4});
  const VertexId b = *s.nearest_vertex({2.6, 0.4});
  EXPECT_THROW(qh_distance(s, a, b), UnreachableError);
}

TEST(ToleranceTest, ScalesWithSpacing) {
  const DiscreteSpace s = build_grid_space(fixtures::unit_square(), 0.1);
  const Tolerance t = Tolerance::For(s);
  EXPECT_DOUBLE_EQ(t.at(0.1), 3.0);
  EXPECT_DOUBLE_EQ(t.at(0.5), 0.6);
}

}  // namespace
}  // namespace johnspace
