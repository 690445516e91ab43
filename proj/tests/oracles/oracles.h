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

#ifndef JOHNSPACE_TESTS_ORACLES_ORACLES_H_
#define JOHNSPACE_TESTS_ORACLES_ORACLES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "johnspace/discrete_space.h"

// Brute-force reference implementations. They share no code with the library
// beyond its data types.
namespace johnspace::oracles {

// Exhaustive simple-path enumeration over a raw GraphSpace: boundary
// distances by Floyd-Warshall, then every simple path between interior
// vertices. Exponential; meant for graphs of at most a dozen vertices.
class PathEnumerator {
 public:
  explicit PathEnumerator(const GraphSpace& graph);

  // Distance to the boundary set, by label.
  double boundary_distance(std::int64_t label) const;

  // Minimum quasihyperbolic length over simple interior paths.
  double qh_distance(std::int64_t x, std::int64_t y) const;

  // Minimum over simple interior paths from x to x0 of
  // max_z l(path[x, z]) / d(z).
  double min_carrot_constant(std::int64_t x, std::int64_t x0) const;

  std::vector<std::int64_t> interior_labels() const;

 private:
  template <typename Visit>
  void for_each_path(int from, int to, Visit&& visit) const;

  int index(std::int64_t label) const;

  std::vector<std::int64_t> labels_;
  std::vector<bool> boundary_;
  std::vector<double> d_;
  // Dense matrix of the shortest parallel edge, infinity if absent.
  std::vector<double> edge_;
};

// Random boundary-marked graph with 4 to max_vertices vertices, one to three
// of them boundary vertices, a connected interior and edge lengths in
// [0.1, 1].
GraphSpace random_graph(std::mt19937_64& rng, int max_vertices = 12);

// Exact optimal carrot constant from every vertex to x0 by a Pareto label
// search over (length, running max ratio). Index v holds the optimum over
// all vertex paths from v to x0.
std::vector<double> pareto_min_carrot(const DiscreteSpace& space, VertexId x0);

// Connectivity by union-find over the adjacency lists.
bool union_find_connected(const DiscreteSpace& space);

}  // namespace johnspace::oracles

#endif  // JOHNSPACE_TESTS_ORACLES_ORACLES_H_
