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

#include "johnspace/domain.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "johnspace/discrete_space.h"
#include "johnspace/error.h"
#include "oracles.h"

namespace johnspace {
namespace {

TEST(ContainsTest, DiskCenterInside) {
  EXPECT_TRUE(fixtures::unit_disk_polygon(64).contains({0, 0}));
}

TEST(ContainsTest, OutsideBoundingBox) {
  EXPECT_FALSE(fixtures::unit_disk_polygon(64).contains({2, 0}));
}

TEST(ContainsTest, HoleIsExcluded) {
  const PolygonalDomain d = fixtures::square_with_hole();
  EXPECT_FALSE(d.contains({0.5, 0.5}));
  EXPECT_TRUE(d.contains({0.2, 0.5}));
}

TEST(ContainsTest, BoundaryPointsAreExcluded) {
  const PolygonalDomain d = fixtures::unit_square();
  EXPECT_FALSE(d.contains({0.0, 0.5}));
  EXPECT_FALSE(d.contains({1.0, 1.0}));
  EXPECT_FALSE(fixtures::unit_disk_analytic().contains({1.0, 0.0}));
}

TEST(BoundaryDistanceTest, Examples) {
  EXPECT_DOUBLE_EQ(fixtures::unit_disk_analytic().boundary_distance({0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(fixtures::unit_square().boundary_distance({0.5, 0.5}), 0.5);
  EXPECT_DOUBLE_EQ(fixtures::unit_square().boundary_distance({0.1, 0.3}), 0.1);
  EXPECT_NEAR(fixtures::square_with_hole().boundary_distance({0.3, 0.5}), 0.1, 1e-15);
}

TEST(BoundaryDistanceTest, FinePolygonApproachesCircle) {
  EXPECT_NEAR(fixtures::unit_disk_polygon(4096).boundary_distance({0, 0}), 1.0, 1e-6);
}

TEST(BoundaryDistanceTest, OutsidePointThrows) {
  EXPECT_THROW(fixtures::unit_square().boundary_distance({2, 2}), DomainError);
}

TEST(DiameterTest, Examples) {
  EXPECT_DOUBLE_EQ(fixtures::unit_square().diameter(), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(fixtures::unit_disk_analytic().diameter(), 2.0);
  EXPECT_DOUBLE_EQ(fixtures::rectangle(3, 1).diameter(), std::sqrt(10.0));
}

TEST(PolygonalDomainTest, RejectsInvalidRings) {
  EXPECT_THROW(PolygonalDomain({{0, 0}, {1, 0}}), DomainError);
  // Bow tie.
  EXPECT_THROW(PolygonalDomain({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), DomainError);
  // Hole sticking out of the outer ring.
  EXPECT_THROW(PolygonalDomain({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                               {{{0.5, 0.5}, {1.5, 0.5}, {1.5, 0.7}, {0.5, 0.7}}}),
               DomainError);
  // Overlapping holes.
  EXPECT_THROW(PolygonalDomain({{0, 0}, {4, 0}, {4, 4}, {0, 4}},
                               {{{1, 1}, {2, 1}, {2, 2}, {1, 2}},
                                {{1.5, 1.5}, {2.5, 1.5}, {2.5, 2.5}, {1.5, 2.5}}}),
               DomainError);
  EXPECT_THROW(PolygonalDomain({{0, 0}, {NAN, 0}, {1, 1}}), DomainError);
}

TEST(DomainJsonTest, RoundTrip) {
  const PolygonalDomain d = fixtures::square_with_hole();
  const PolygonalDomain back = domain_from_json(domain_to_json(d));
  EXPECT_EQ(back.outer(), d.outer());
  ASSERT_EQ(back.holes().size(), 1u);
  EXPECT_EQ(back.holes()[0], d.holes()[0]);
}

TEST(DomainJsonTest, AnalyticDiskRoundTrip) {
  const PolygonalDomain back = domain_from_json(domain_to_json(fixtures::unit_disk_analytic()));
  ASSERT_TRUE(back.analytic_disk().has_value());
  EXPECT_DOUBLE_EQ(back.boundary_distance({0.25, 0}), 0.75);
}

TEST(DomainJsonTest, MalformedThrows) {
  EXPECT_THROW(domain_from_json(nlohmann::json::parse(R"({"outer": 3})")), DomainError);
  EXPECT_THROW(domain_from_json(nlohmann::json::parse(R"({"holes": []})")), DomainError);
}

TEST(GridSpaceTest, UnitSquareQuarterGrid) {
  const DiscreteSpace s = build_grid_space(fixtures::unit_square(), 0.25);
  // 3x3 interior lattice: 6 horizontal, 6 vertical, 8 diagonal edges.
  EXPECT_EQ(s.size(), 9u);
  EXPECT_EQ(s.edge_count(), 20u);
  EXPECT_EQ(s.backend(), Backend::kGrid);
  const VertexId mid = *s.nearest_vertex({0.5, 0.5});
  EXPECT_DOUBLE_EQ(s.boundary_distance(mid), 0.5);
  EXPECT_EQ(s.neighbors(mid).size(), 8u);
}

TEST(GridSpaceTest, EdgesAvoidHoleAndNotch) {
  const DiscreteSpace s = build_grid_space(fixtures::slit_rectangle(), 0.1);
  const PolygonalDomain& d = *s.domain();
  for (VertexId u = 0; u < static_cast<VertexId>(s.size()); ++u) {
    for (const Arc& arc : s.neighbors(u)) {
      const Point a = s.position(u), b = s.position(arc.to);
      // No edge crosses the notch below its tip.
      if ((a.x - 1.0) * (b.x - 1.0) < 0) {
        EXPECT_GT(std::min(a.y, b.y), 0.6 - 1e-9);
      }
      EXPECT_TRUE(d.segment_inside(a, b));
    }
  }
}

TEST(GridSpaceTest, WeightsFollowTrapezoidRule) {
  const DiscreteSpace s = build_grid_space(fixtures::unit_square(), 0.1);
  for (VertexId u = 0; u < static_cast<VertexId>(s.size()); ++u) {
    const double du = s.boundary_distance(u);
    for (const Arc& arc : s.neighbors(u)) {
      const double dv = s.boundary_distance(arc.to);
      EXPECT_LE(std::abs(du - dv), arc.euclid_len + 1e-12);
      if (arc.euclid_len <= std::min(du, dv) / 2) {
        EXPECT_NEAR(arc.qh_len, arc.euclid_len * (1 / du + 1 / dv) / 2, 1e-15);
      }
    }
  }
}

TEST(GridSpaceTest, LongEdgesAreSubdivided) {
  // One piece would evaluate d only at the endpoints.
  const PolygonalDomain d = fixtures::unit_square();
  const Point a{0.1, 0.5}, b{0.9, 0.5};
  const double one_piece = 0.8 * (1 / 0.1 + 1 / 0.1) / 2;
  const double w = qh_segment_weight(d, a, b, 0.1, 0.1);
  EXPECT_LT(w, one_piece);
  // Exact integral of 1/d along the segment is 2 log 5.
  EXPECT_NEAR(w, 2 * std::log(5.0), 0.1);
  EXPECT_GE(w, 2 * std::log(5.0));
}

TEST(GridSpaceTest, NoVertexInsideThrows) {
  const PolygonalDomain tiny({{0.01, 0.01}, {0.02, 0.01}, {0.02, 0.02}, {0.01, 0.02}});
  EXPECT_THROW(build_grid_space(tiny, 0.5), ResolutionError);
  EXPECT_THROW(build_grid_space(fixtures::unit_square(), 0.0), DomainError);
}

TEST(GridSpaceTest, ConnectivityMatchesUnionFind) {
  for (double w : {0.3, 0.05}) {
    const DiscreteSpace s = build_grid_space(fixtures::rooms_and_corridor(w), 0.1);
    EXPECT_EQ(is_connected(s), oracles::union_find_connected(s));
    EXPECT_TRUE(is_connected(s));
  }
  // A corridor thinner than the grid has no row inside it.
  const DiscreteSpace split = build_grid_space(fixtures::rooms_and_corridor(0.05), 0.2);
  EXPECT_EQ(is_connected(split), oracles::union_find_connected(split));
  EXPECT_FALSE(is_connected(split));
}

TEST(GraphSpaceTest, BoundaryDistancesMatchFloydWarshall) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const GraphSpace g = oracles::random_graph(rng);
    const DiscreteSpace s = build_graph_space(g);
    const oracles::PathEnumerator oracle(g);
    for (VertexId v = 0; v < static_cast<VertexId>(s.size()); ++v) {
      EXPECT_NEAR(s.boundary_distance(v), oracle.boundary_distance(s.label(v)), 1e-12);
    }
  }
}

TEST(GraphSpaceTest, MetricIsWholeGraphShortestPath) {
  // 1 - 2 - 3 in a line with boundary 0 hanging off 2 by a short edge and a
  // shortcut 1 - 0 - 3 through the boundary vertex.
  GraphSpace g;
  for (int id = 0; id < 4; ++id) g.vertices.push_back({id, std::nullopt});
  g.edges = {{1, 2, 1.0}, {2, 3, 1.0}, {0, 1, 0.4}, {0, 3, 0.4}, {0, 2, 0.9}};
  g.boundary = {0};
  const DiscreteSpace s = build_graph_space(g);
  ASSERT_EQ(s.size(), 3u);
  const VertexId v1 = *s.find_label(1), v3 = *s.find_label(3);
  EXPECT_DOUBLE_EQ(s.distance(v1, v3), 0.8);
  EXPECT_DOUBLE_EQ(s.boundary_distance(v1), 0.4);
  EXPECT_DOUBLE_EQ(s.spacing(), 0.0);
}

TEST(GraphSpaceTest, RejectsInvalidGraphs) {
  GraphSpace g;
  for (int id = 0; id < 4; ++id) g.vertices.push_back({id, std::nullopt});
  g.edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}};
  EXPECT_THROW(build_graph_space(g), DomainError);  // No boundary.
  g.boundary = {2};
  EXPECT_THROW(build_graph_space(g), DomainError);  // Interior splits at 2.
  g.boundary = {3};
  g.edges[0].length = 0.0;
  EXPECT_THROW(build_graph_space(g), DomainError);
  g.edges[0].length = 1.0;
  g.edges.push_back({0, 9, 1.0});
  EXPECT_THROW(build_graph_space(g), DomainError);
}

TEST(GraphSpaceTest, JsonRoundTrip) {
  std::mt19937_64 rng(3);
  const GraphSpace g = oracles::random_graph(rng);
  const GraphSpace back = graph_from_json(graph_to_json(g));
  ASSERT_EQ(back.edges.size(), g.edges.size());
  EXPECT_EQ(back.boundary, g.boundary);
  EXPECT_DOUBLE_EQ(back.edges[0].length, g.edges[0].length);
}

TEST(StratifiedSamplesTest, AllVerticesWhenSmall) {
  const DiscreteSpace s = build_grid_space(fixtures::unit_square(), 0.25);
  const auto samples = stratified_samples(s, 100);
  EXPECT_EQ(samples.size(), 9u);
}

TEST(StratifiedSamplesTest, DeterministicAndMixesBoundaryLayer) {
  const DiscreteSpace s = build_grid_space(fixtures::unit_square(), 0.02);
  const auto a = stratified_samples(s, 40, 42);
  EXPECT_EQ(a, stratified_samples(s, 40, 42));
  EXPECT_NE(a, stratified_samples(s, 40, 43));
  EXPECT_EQ(a.size(), 40u);
  int near = 0;
  for (VertexId v : a) near += s.boundary_distance(v) <= 2 * 0.02 + 1e-12;
  EXPECT_EQ(near, 20);
}

}  // namespace
}  // namespace johnspace
