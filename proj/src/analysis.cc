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

#include "johnspace/analysis.h"

#include <algorithm>
#include <functional>

#include "johnspace/error.h"

namespace johnspace {

bool JohnAnalysis::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

JohnAnalysis analyze_john(const DiscreteSpace& space, VertexId x0,
                          std::span<const VertexId> samples,
                          const AnalysisOptions& options) {
  JohnAnalysis out;
  const Tolerance tol = Tolerance::For(space);

  Condition1Options c1_options;
  c1_options.a = options.a;
  c1_options.search.a_max = options.a_max;
  Condition1Result c1 = check_condition1(space, x0, samples, c1_options);
  out.profile = std::move(c1.profile);
  const double a = options.a.value_or(out.profile.a);
  const double a_eff = std::max(1.0, a);

  ConstantLedger& ledger = out.ledger;
  ledger.set("a", a, options.a ? "override" : "measured: best carrot arcs over the samples");
  const GrowthConstants growth = derive_c2_from_c1(a_eff);
  ledger.set("b", growth.b, "derived from a: b = 3a");
  ledger.set("b1", growth.b1, "derived from a: b1 = a");
  ledger.set("b2", growth.b2, "derived from a: b2 = (3 + log 2a) a");
  const double b_doubling = derive_c3_from_c2(growth);
  ledger.set("b_doubling", b_doubling, "derived from (b, b1, b2): b1 log 2b + b2");
  const LogPhi phi = derive_phi_from_c1(a_eff);

  const QhGeodesicOracle oracle(space, x0);
  const double b_oracle = oracle.empirical_b();
  ledger.set("b_oracle", b_oracle, "measured: quasihyperbolic geodesics to the doubling point");
  ledger.set("lambda", options.params.lambda, "local quasiconvexity parameter");
  ledger.set("c", options.params.c, "local quasiconvexity parameter");
  const double a_case = case_constant(options.params, b_oracle);
  ledger.set("a_quasiconvex", a_case, "derived from b_oracle, lambda, c: case constant");

  const auto& curves = out.profile.curves;
  ConditionReport c2 = check_condition2(space, x0, curves, growth.b, growth.b1, growth.b2, tol);
  ConditionReport c3 = check_condition3(space, x0, curves, b_doubling, tol);

  // A construction that breaks a guaranteed bound is a condition-4 failure
  // at its basepoint.
  std::vector<PolyCurve> built;
  std::optional<Witness> failed_at;
  const Cond3Oracle oracle_fn = std::cref(oracle);
  for (VertexId s : samples) {
    try {
      out.constructed.push_back(construct_john_curve(space, s, x0, b_oracle, options.params,
                                                     oracle_fn,
                                                     tol.at(space.boundary_distance(s))));
      built.push_back(out.constructed.back().curve);
    } catch (const ConstructionError&) {
      if (!failed_at) failed_at = vertex_witness(space, s, x0);
    }
  }
  ConditionReport c4 = check_condition4(space, x0, built, a_case, tol);
  if (failed_at) c4.observe(-std::numeric_limits<double>::infinity(), *failed_at);
  ConditionReport c5 = check_condition5(space, x0, curves, a_eff, phi, tol);

  out.reports = {std::move(c1.report), std::move(c2), std::move(c3), std::move(c4),
                 std::move(c5)};
  out.local_quasiconvexity = local_quasiconvexity_probe(
      space, options.params.lambda, options.params.c,
      std::min(options.lqc_centers, static_cast<int>(samples.size())), options.seed);
  return out;
}

}  // namespace johnspace
