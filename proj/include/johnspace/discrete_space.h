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

#ifndef JOHNSPACE_DISCRETE_SPACE_H_
#define JOHNSPACE_DISCRETE_SPACE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "johnspace/domain.h"
#include "johnspace/report.h"

namespace johnspace {

// Abstract noncomplete metric space given as a weighted graph. The boundary
// vertices play the role of the boundary; the space itself is the set of
// non-boundary vertices.
struct GraphSpace {
  struct Vertex {
    std::int64_t id = 0;
    std::optional<Point> pos;
  };
  struct Edge {
    std::int64_t u = 0;
    std::int64_t v = 0;
    double length = 0.0;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<std::int64_t> boundary;
};

GraphSpace graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const GraphSpace& g);

enum class Backend { kGrid, kGraph };

struct Arc {
  VertexId to = kNoVertex;
  double euclid_len = 0.0;
  double qh_len = 0.0;
};

// Quasihyperbolic weight of the straight segment [a, b] by the trapezoid
// rule. Segments longer than half the smaller endpoint distance are split
// into ceil(2 |a - b| / min(da, db)) pieces, with d evaluated at the interior
// sample points from `domain`.
double qh_segment_weight(const PolygonalDomain& domain, Point a, Point b,
                         double da, double db);

// Discretized noncomplete metric space: vertices with boundary distance
// d(v) > 0 and symmetric adjacency carrying Euclidean and quasihyperbolic
// edge weights. Immutable once built.
class DiscreteSpace {
 public:
  Backend backend() const { return backend_; }
  std::size_t size() const { return d_.size(); }

  bool has_positions() const { return !positions_.empty(); }
  Point position(VertexId v) const { return positions_.at(v); }
  double boundary_distance(VertexId v) const { return d_[v]; }
  std::span<const Arc> neighbors(VertexId v) const {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }
  std::size_t edge_count() const { return arcs_.size() / 2; }

  // |u - v| in the metric of the space: Euclidean for positioned grid
  // spaces, the shortest-path metric of the whole graph for graph spaces.
  double distance(VertexId u, VertexId v) const;

  // diam(D): the domain diameter for grid spaces, the largest distance
  // between non-boundary vertices for graph spaces.
  double diameter() const { return diameter_; }

  // Grid spacing h for grid spaces (the largest edge length for pushed
  // spaces), 0 for graph spaces, whose weights carry no discretization error.
  double spacing() const { return spacing_; }

  // The domain a grid space was built over, or null for graph spaces.
  const PolygonalDomain* domain() const { return domain_.get(); }

  // Nearest vertex by Euclidean distance, lowest id on ties.
  std::optional<VertexId> nearest_vertex(Point p) const;

  // Graph spaces only: internal index of an external vertex id.
  std::optional<VertexId> find_label(std::int64_t label) const;
  std::int64_t label(VertexId v) const;

  // Arc from u to v, or null if they are not adjacent.
  const Arc* find_arc(VertexId u, VertexId v) const;

  friend DiscreteSpace build_grid_space(const PolygonalDomain& domain, double h);
  friend DiscreteSpace build_graph_space(const GraphSpace& graph);
  friend DiscreteSpace build_space_from_parts(
      std::shared_ptr<const PolygonalDomain> domain, std::vector<Point> positions,
      std::vector<std::pair<VertexId, VertexId>> edges, double spacing);

 private:
  DiscreteSpace() = default;

  struct UndirectedEdge {
    VertexId u;
    VertexId v;
    double euclid_len;
    double qh_len;
  };
  void set_edges(std::vector<UndirectedEdge> edges);

  Backend backend_ = Backend::kGrid;
  std::vector<Point> positions_;
  std::vector<double> d_;
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
  std::shared_ptr<const PolygonalDomain> domain_;
  double spacing_ = 0.0;
  double diameter_ = 0.0;
  // Graph backend: external labels and the all-pairs metric (row-major).
  std::vector<std::int64_t> labels_;
  std::vector<double> metric_;
};

// Axis-aligned grid of spacing h with vertices at integer multiples of h,
// clipped to the interior, with 8-connected edges lying inside the domain.
// Throws ResolutionError if no grid point lies inside.
DiscreteSpace build_grid_space(const PolygonalDomain& domain, double h);

// Throws DomainError for an empty boundary, nonpositive edge lengths,
// unknown ids, or a disconnected interior.
DiscreteSpace build_graph_space(const GraphSpace& graph);

// Grid-backend space over explicit positions and adjacency, with d and
// weights recomputed from `domain`. Used to realize images of spaces under
// maps. Every position must lie in the domain.
DiscreteSpace build_space_from_parts(
    std::shared_ptr<const PolygonalDomain> domain, std::vector<Point> positions,
    std::vector<std::pair<VertexId, VertexId>> edges, double spacing);

// Witness at two vertices, with positions when the space has them.
Witness vertex_witness(const DiscreteSpace& space, VertexId basepoint,
                       VertexId point);

// True if every vertex is reachable from vertex 0.
bool is_connected(const DiscreteSpace& space);

// Samples `centers` vertices x and up to four pairs u, v in B(x, lambda d(x))
// each, and measures the Euclidean shortest-path ratio l(u, v) / |u - v|.
// Passes when the largest ratio is at most c; empty balls are skipped.
ConditionReport local_quasiconvexity_probe(const DiscreteSpace& space,
                                           double lambda, double c,
                                           int centers, std::uint64_t seed = 42);

// Deterministic stratified sample of basepoints: every vertex when the space
// has at most `count` of them, otherwise half from the layer of vertices
// within two grid steps of the boundary and half from the rest, one per
// contiguous id stratum.
std::vector<VertexId> stratified_samples(const DiscreteSpace& space,
                                         std::size_t count,
                                         std::uint64_t seed = 42);

}  // namespace johnspace

#endif  // JOHNSPACE_DISCRETE_SPACE_H_
