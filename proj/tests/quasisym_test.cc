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

#include "johnspace/quasisym.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "johnspace/error.h"
#include "johnspace/qhmetric.h"

namespace johnspace {
namespace {

void expect_point_near(Point p, Point q, double tol) {
  EXPECT_NEAR(p.x, q.x, tol);
  EXPECT_NEAR(p.y, q.y, tol);
}

TEST(QuasiMapTest, AppliesClosedForms) {
  expect_point_near(QuasiMap::Identity().apply({0.3, -2}), {0.3, -2}, 0);
  expect_point_near(QuasiMap::Similarity(2, 0, {0, 0}).apply({1, 1}), {2, 2}, 1e-15);
  expect_point_near(QuasiMap::Similarity(1, std::numbers::pi / 2, {1, 0}).apply({1, 0}),
                    {1, 1}, 1e-15);
  expect_point_near(QuasiMap::Linear(2, 0, 0, 1).apply({1, 1}), {2, 1}, 0);
  expect_point_near(QuasiMap::RadialPower(0.5, {0, 0}).apply({0.25, 0}), {0.5, 0}, 1e-15);
  expect_point_near(QuasiMap::RadialPower(0.5, {1, 1}).apply({1, 1}), {1, 1}, 0);
}

TEST(QuasiMapTest, InverseRoundTrips) {
  const QuasiMap maps[] = {QuasiMap::Identity(), QuasiMap::Similarity(3, 0.5, {1, -2}),
                           QuasiMap::Linear(2, 1, 0.5, 3),
                           QuasiMap::RadialPower(0.5, {0.1, -0.2})};
  for (const QuasiMap& f : maps) {
    const QuasiMap g = f.inverse();
    for (Point p : {Point{0.3, 0.4}, Point{-0.7, 0.1}, Point{0.0, -0.5}}) {
      expect_point_near(g.apply(f.apply(p)), p, 1e-12);
    }
  }
}

TEST(QuasiMapTest, JsonRoundTrips) {
  const QuasiMap f = QuasiMap::Similarity(3, 0.5, {1, -2});
  EXPECT_EQ(map_from_json(f.to_json()).to_json(), f.to_json());
  const QuasiMap r = QuasiMap::RadialPower(0.5, {0, 0});
  EXPECT_EQ(map_from_json(r.to_json()).to_json(), r.to_json());
  const QuasiMap l = QuasiMap::Linear(2, 0, 0, 1);
  EXPECT_EQ(map_from_json(l.to_json()).to_json(), l.to_json());
}

TEST(QuasiMapTest, RejectsInvalidParameters) {
  EXPECT_THROW(QuasiMap::Similarity(0, 0, {0, 0}), DomainError);
  EXPECT_THROW(QuasiMap::Linear(1, 2, 2, 4), DomainError);
  EXPECT_THROW(QuasiMap::RadialPower(-1, {0, 0}), DomainError);
  EXPECT_THROW(QuasiMap::Identity().apply({NAN, 0}), DomainError);
  EXPECT_THROW(map_from_json({{"kind", "shear"}}), DomainError);
  EXPECT_THROW(map_from_json({{"kind", "radial_power"}}), DomainError);
  EXPECT_THROW(map_from_json({{"scale", 1}}), DomainError);
}

TEST(QuasiMapTest, ImageDomainOfDisk) {
  const PolygonalDomain disk = fixtures::unit_disk_analytic();
  const PolygonalDomain s = QuasiMap::Similarity(3, 0.5, {1, -2}).image_domain(disk);
  ASSERT_TRUE(s.analytic_disk().has_value());
  EXPECT_DOUBLE_EQ(s.analytic_disk()->radius, 3.0);
  const PolygonalDomain r = QuasiMap::RadialPower(0.5, {0, 0}).image_domain(disk);
  ASSERT_TRUE(r.analytic_disk().has_value());
  EXPECT_DOUBLE_EQ(r.analytic_disk()->radius, 1.0);
  const PolygonalDomain l = QuasiMap::Linear(2, 0, 0, 1).image_domain(fixtures::unit_square());
  EXPECT_DOUBLE_EQ(l.bounds().max.x - l.bounds().min.x, 2.0);
}

class PushTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    source_ = new DiscreteSpace(build_grid_space(fixtures::unit_disk_analytic(), 0.05));
  }
  static void TearDownTestSuite() { delete source_; }
  static DiscreteSpace* source_;
};

DiscreteSpace* PushTest::source_ = nullptr;

TEST_F(PushTest, IdentityKeepsWeightsExactly) {
  const QuasiMap f = QuasiMap::Identity();
  const DiscreteSpace image = push_space(f, *source_, f.image_domain(*source_->domain()));
  ASSERT_EQ(image.size(), source_->size());
  EXPECT_EQ(image.spacing(), source_->spacing());
  for (VertexId v = 0; v < static_cast<VertexId>(source_->size()); ++v) {
    EXPECT_EQ(image.boundary_distance(v), source_->boundary_distance(v));
    const auto a = source_->neighbors(v), b = image.neighbors(v);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].to, b[i].to);
      EXPECT_EQ(a[i].qh_len, b[i].qh_len);
    }
  }
}

TEST_F(PushTest, SimilarityScalesLengthsAndKeepsQh) {
  const QuasiMap f = QuasiMap::Similarity(3, 0.5, {1, -2});
  const DiscreteSpace image = push_space(f, *source_, f.image_domain(*source_->domain()));
  EXPECT_NEAR(image.spacing(), 3 * source_->spacing(), 1e-12);
  const VertexId x = *source_->nearest_vertex({-0.4, 0.3});
  const VertexId y = *source_->nearest_vertex({0.6, -0.1});
  EXPECT_NEAR(image.distance(x, y), 3 * source_->distance(x, y), 1e-12);
  const double k = qh_distance(*source_, x, y).value;
  EXPECT_NEAR(qh_distance(image, x, y).value, k, 1e-9 * k);
}

TEST_F(PushTest, RejectsVertexOutsideImage) {
  const QuasiMap f = QuasiMap::Similarity(1, 0, {5, 0});
  EXPECT_THROW(push_space(f, *source_, *source_->domain()), DomainError);
}

TEST(EtaTest, SimilarityIsExact) {
  const EtaEstimate eta = estimate_eta(QuasiMap::Similarity(3, 0.5, {1, -2}),
                                       fixtures::unit_disk_analytic(), {.n_triples = 4000});
  ASSERT_EQ(eta.t_grid.size(), eta.eta_hat.size());
  for (std::size_t i = 0; i < eta.t_grid.size(); ++i) {
    if (!eta.witnesses[i]) continue;
    EXPECT_NEAR(eta.eta_hat[i], eta.t_grid[i], 1e-9 * std::max(1.0, eta.t_grid[i]));
  }
  EXPECT_EQ(eta.raw(0), 0.0);
}

TEST(EtaTest, LinearStaysWithinConditionNumber) {
  const EtaEstimate eta = estimate_eta(QuasiMap::Linear(2, 0, 0, 1), fixtures::unit_square(),
                                       {.n_triples = 4000});
  for (std::size_t i = 0; i < eta.t_grid.size(); ++i) {
    EXPECT_LE(eta.eta_hat[i], 2 * eta.t_grid[i] * (1 + 1e-12));
  }
}

TEST(EtaTest, RadialDistortsUnitRatio) {
  const EtaEstimate eta = estimate_eta(QuasiMap::RadialPower(0.5, {0, 0}),
                                       fixtures::unit_disk_analytic(), {.n_triples = 4000});
  EXPECT_GE(eta.raw(1.0), 1.0);
  EXPECT_GT(eta(1.0), eta.raw(1.0));
}

TEST(EtaTest, WitnessesReproduceTheirRatios) {
  const QuasiMap f = QuasiMap::RadialPower(0.5, {0, 0});
  const EtaEstimate eta = estimate_eta(f, fixtures::unit_disk_analytic(), {.n_triples = 2000});
  for (const auto& w : eta.witnesses) {
    if (!w) continue;
    EXPECT_NEAR(norm(w->x - w->a) / norm(w->x - w->b), w->t, 1e-9 * w->t);
    const double r = norm(f.apply(w->x) - f.apply(w->a)) / norm(f.apply(w->x) - f.apply(w->b));
    EXPECT_NEAR(r, w->ratio, 1e-9 * r);
  }
  const EtaEstimate again = estimate_eta(f, fixtures::unit_disk_analytic(), {.n_triples = 2000});
  EXPECT_EQ(eta_to_json(again), eta_to_json(eta));
}

TEST(EtaTest, RejectsTooFewTriples) {
  EXPECT_THROW(estimate_eta(QuasiMap::Identity(), fixtures::unit_square(), {.n_triples = 999}),
               DomainError);
}

TEST(EtaInverseTest, ClosedForms) {
  const ControlFunction id = eta_inverse_control([](double t) { return t; });
  const ControlFunction twice = eta_inverse_control([](double t) { return 2 * t; });
  const ControlFunction square = eta_inverse_control([](double t) { return t * t; });
  for (double t : {1e-3, 0.5, 1.0, 7.0, 1e3}) {
    EXPECT_NEAR(id(t), t, 1e-9 * std::max(1.0, t));
    EXPECT_NEAR(twice(t), 2 * t, 1e-9 * std::max(1.0, t));
    EXPECT_NEAR(square(t), std::sqrt(t), 1e-9 * std::max(1.0, t));
    EXPECT_GE(id(t), t);
  }
  EXPECT_EQ(id(0.0), 0.0);
  const ControlFunction bounded = eta_inverse_control([](double t) { return t / (1 + t); });
  EXPECT_THROW(bounded(0.5), DomainError);
}

TEST(SmallScaleTest, IdentityThreshold) {
  const double t0 = small_scale_threshold([](double t) { return t; }, {0.5, 1.0});
  EXPECT_NEAR(t0, std::log(9.0 / 8.0), 1e-12);
}

TEST(CoarseFitTest, LineLiesAboveCloud) {
  const std::vector<double> k = {0.5, 1, 2, 3, 4};
  const std::vector<double> kp = {1.4, 1.9, 2.9, 3.7, 4.9};
  const CoarseFit fit = fit_coarse_constants(k, kp);
  EXPECT_GE(fit.c1, 0);
  EXPECT_GE(fit.c2, 0);
  for (std::size_t i = 0; i < k.size(); ++i) EXPECT_GE(fit.c1 * k[i] + fit.c2, kp[i]);
  // Exact line k' = k + 1 is recovered.
  const std::vector<double> exact = {1.5, 2, 3, 4, 5};
  const CoarseFit line = fit_coarse_constants(k, exact);
  EXPECT_NEAR(line.c1, 1.0, 1e-12);
  EXPECT_NEAR(line.c2, 1.0, 1e-12);
  EXPECT_THROW(fit_coarse_constants(k, std::vector<double>{1.0}), DomainError);
}

TEST_F(PushTest, IdentityClaimsAndTransferHold) {
  const DiscreteSpace& s = *source_;
  const QuasiMap f = QuasiMap::Identity();
  const DiscreteSpace image = push_space(f, s, f.image_domain(*s.domain()));
  const VertexId x0 = *s.nearest_vertex({0, 0});
  const std::vector<VertexId> samples = stratified_samples(s, 40, 3);
  const Condition1Result c1 = check_condition1(s, x0, samples);
  const Tolerance tol = Tolerance::For(s);
  const ControlFunction id = [](double t) { return t; };
  const double a_diam = [&] {
    double m = 0;
    for (const PolyCurve& c : c1.profile.curves) m = std::max(m, min_diameter_carrot_constant(s, c));
    return m;
  }();
  EXPECT_TRUE(check_diameter_carrot_image(s, image, c1.profile.curves, a_diam, id, tol).pass);
  EXPECT_TRUE(check_relative_distance_claim(s, image, c1.profile.curves, id, tol).pass);

  const std::vector<VertexPair> pairs = sample_vertex_pairs(s, 10, 10, 5);
  ASSERT_EQ(pairs.size(), 100u);
  const CoarseQhResult coarse = check_coarse_qh_claim(s, image, pairs, 1.0, 0.0, id, {}, tol);
  EXPECT_TRUE(coarse.report.pass);
  EXPECT_TRUE(coarse.small_scale.pass);
  for (std::size_t i = 0; i < pairs.size(); ++i) EXPECT_EQ(coarse.k[i], coarse.k_image[i]);

  TransferInputs in;
  in.a = c1.profile.a;
  in.eta = id;
  in.eta_prime = id;
  in.coarse = {1.0, 0.0};
  in.samples = samples;
  const TransferResult t = transfer_john_constant(s, image, f, x0, in);
  EXPECT_TRUE(t.report.pass);
  EXPECT_DOUBLE_EQ(t.image_profile.a, c1.profile.a);
  EXPECT_GT(t.bound.log_bound, std::log(c1.profile.a));
}

}  // namespace
}  // namespace johnspace
