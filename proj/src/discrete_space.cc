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

#include "johnspace/discrete_space.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <string>
#include <unordered_map>

#include "johnspace/error.h"
#include "johnspace/shortest_path.h"

namespace johnspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxGraphVertices = 4000;

}  // namespace

Witness vertex_witness(const DiscreteSpace& space, VertexId basepoint,
                       VertexId point) {
  Witness w{basepoint, point, std::nullopt, std::nullopt};
  if (space.has_positions()) {
    w.basepoint_pos = space.position(basepoint);
    w.point_pos = space.position(point);
  }
  return w;
}

double qh_segment_weight(const PolygonalDomain& domain, Point a, Point b,
                         double da, double db) {
  const double len = distance(a, b);
  const double dmin = std::min(da, db);
  if (!(dmin > 0)) {
    throw DegenerateCurveError("segment endpoint on the boundary");
  }
  if (len <= dmin / 2) return len * (1.0 / da + 1.0 / db) / 2.0;
  const int pieces = static_cast<int>(std::ceil(2.0 * len / dmin));
  double sum = 0.5 * (1.0 / da + 1.0 / db);
  for (int i = 1; i < pieces; ++i) {
    const double t = static_cast<double>(i) / pieces;
    const double d = domain.raw_boundary_distance(a + t * (b - a));
    if (!(d > 0)) throw DegenerateCurveError("segment touches the boundary");
    sum += 1.0 / d;
  }
  return len / pieces * sum;
}

double DiscreteSpace::distance(VertexId u, VertexId v) const {
  if (backend_ == Backend::kGraph) return metric_[u * size() + v];
  return johnspace::distance(positions_[u], positions_[v]);
}

std::optional<VertexId> DiscreteSpace::nearest_vertex(Point p) const {
  if (!has_positions()) return std::nullopt;
  std::optional<VertexId> best;
  double best_dist = kInf;
  for (std::size_t v = 0; v < positions_.size(); ++v) {
    const double dist = johnspace::distance(p, positions_[v]);
    if (dist < best_dist) {
      best_dist = dist;
      best = static_cast<VertexId>(v);
    }
  }
  return best;
}

std::optional<VertexId> DiscreteSpace::find_label(std::int64_t label) const {
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return static_cast<VertexId>(v);
  }
  return std::nullopt;
}

std::int64_t DiscreteSpace::label(VertexId v) const {
  return labels_.empty() ? v : labels_.at(v);
}

const Arc* DiscreteSpace::find_arc(VertexId u, VertexId v) const {
  const auto arcs = neighbors(u);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                             [](const Arc& a, VertexId id) { return a.to < id; });
  if (it == arcs.end() || it->to != v) return nullptr;
  return &*it;
}

void DiscreteSpace::set_edges(std::vector<UndirectedEdge> edges) {
  std::vector<std::vector<Arc>> adjacency(size());
  for (const UndirectedEdge& e : edges) {
    adjacency[e.u].push_back({e.v, e.euclid_len, e.qh_len});
    adjacency[e.v].push_back({e.u, e.euclid_len, e.qh_len});
  }
  offsets_.assign(size() + 1, 0);
  arcs_.clear();
  for (std::size_t v = 0; v < size(); ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end(),
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
    arcs_.insert(arcs_.end(), list.begin(), list.end());
    offsets_[v + 1] = arcs_.size();
  }
}

DiscreteSpace build_grid_space(const PolygonalDomain& domain, double h) {
  if (!(h > 0) || !std::isfinite(h)) {
    throw DomainError("grid spacing must be a positive finite number");
  }
  const BoundingBox box = domain.bounds();
  const long i0 = static_cast<long>(std::ceil(box.min.x / h));
  const long i1 = static_cast<long>(std::floor(box.max.x / h));
  const long j0 = static_cast<long>(std::ceil(box.min.y / h));
  const long j1 = static_cast<long>(std::floor(box.max.y / h));
  const long ni = std::max(0L, i1 - i0 + 1);
  const long nj = std::max(0L, j1 - j0 + 1);

  DiscreteSpace space;
  space.backend_ = Backend::kGrid;
  space.domain_ = std::make_shared<PolygonalDomain>(domain);
  space.spacing_ = h;
  space.diameter_ = domain.diameter();

  std::vector<VertexId> cell(static_cast<std::size_t>(ni * nj), kNoVertex);
  for (long j = j0; j <= j1; ++j) {
    for (long i = i0; i <= i1; ++i) {
      const Point p{static_cast<double>(i) * h, static_cast<double>(j) * h};
      if (!domain.contains(p)) continue;
      cell[(j - j0) * ni + (i - i0)] = static_cast<VertexId>(space.positions_.size());
      space.positions_.push_back(p);
      space.d_.push_back(domain.raw_boundary_distance(p));
    }
  }
  if (space.positions_.empty()) {
    throw ResolutionError("no grid vertex of spacing " + std::to_string(h) +
                          " lies inside the domain");
  }

  auto at = [&](long i, long j) -> VertexId {
    if (i < i0 || i > i1 || j < j0 || j > j1) return kNoVertex;
    return cell[(j - j0) * ni + (i - i0)];
  };
  std::vector<DiscreteSpace::UndirectedEdge> edges;
  constexpr long kSteps[4][2] = {{1, 0}, {0, 1}, {1, 1}, {-1, 1}};
  for (long j = j0; j <= j1; ++j) {
    for (long i = i0; i <= i1; ++i) {
      const VertexId u = at(i, j);
      if (u == kNoVertex) continue;
      for (const auto& step : kSteps) {
        const VertexId v = at(i + step[0], j + step[1]);
        if (v == kNoVertex) continue;
        const Point a = space.positions_[u], b = space.positions_[v];
        if (!domain.segment_inside(a, b)) continue;
        edges.push_back({u, v, distance(a, b),
                         qh_segment_weight(domain, a, b, space.d_[u], space.d_[v])});
      }
    }
  }
  space.set_edges(std::move(edges));
  return space;
}

DiscreteSpace build_space_from_parts(
    std::shared_ptr<const PolygonalDomain> domain, std::vector<Point> positions,
    std::vector<std::pair<VertexId, VertexId>> edges, double spacing) {
  DiscreteSpace space;
  space.backend_ = Backend::kGrid;
  space.domain_ = std::move(domain);
  space.spacing_ = spacing;
  space.diameter_ = space.domain_->diameter();
  space.positions_ = std::move(positions);
  space.d_.reserve(space.positions_.size());
  for (const Point& p : space.positions_) {
    space.d_.push_back(space.domain_->boundary_distance(p));
  }
  std::vector<DiscreteSpace::UndirectedEdge> weighted;
  weighted.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    const Point a = space.positions_.at(u), b = space.positions_.at(v);
    weighted.push_back({u, v, distance(a, b),
                        qh_segment_weight(*space.domain_, a, b, space.d_[u],
                                          space.d_[v])});
  }
  space.set_edges(std::move(weighted));
  return space;
}

DiscreteSpace build_graph_space(const GraphSpace& graph) {
  const std::size_t n = graph.vertices.size();
  std::unordered_map<std::int64_t, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(graph.vertices[i].id, i).second) {
      throw DomainError("duplicate vertex id " + std::to_string(graph.vertices[i].id));
    }
  }
  auto lookup = [&](std::int64_t id) {
    auto it = index.find(id);
    if (it == index.end()) throw DomainError("unknown vertex id " + std::to_string(id));
    return it->second;
  };
  if (graph.boundary.empty()) throw DomainError("graph space needs a nonempty boundary");
  std::vector<bool> is_boundary(n, false);
  for (std::int64_t id : graph.boundary) is_boundary[lookup(id)] = true;

  // Full adjacency, boundary included, with parallel edges collapsed.
  std::map<std::pair<std::size_t, std::size_t>, double> lengths;
  for (const auto& e : graph.edges) {
    if (!(e.length > 0) || !std::isfinite(e.length)) {
      throw DomainError("edge lengths must be positive and finite");
    }
    std::size_t u = lookup(e.u), v = lookup(e.v);
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    if (u > v) std::swap(u, v);
    auto [it, inserted] = lengths.emplace(std::make_pair(u, v), e.length);
    if (!inserted) it->second = std::min(it->second, e.length);
  }
  std::vector<std::vector<std::pair<std::size_t, double>>> full(n);
  for (const auto& [key, len] : lengths) {
    full[key.first].push_back({key.second, len});
    full[key.second].push_back({key.first, len});
  }
  auto multi_source = [&](const std::vector<std::size_t>& sources) {
    std::vector<double> dist(n, kInf);
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (std::size_t s : sources) {
      dist[s] = 0.0;
      heap.push({0.0, s});
    }
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (du > dist[u]) continue;
      for (const auto& [v, w] : full[u]) {
        if (du + w < dist[v]) {
          dist[v] = du + w;
          heap.push({dist[v], v});
        }
      }
    }
    return dist;
  };

  std::vector<std::size_t> boundary_index;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_boundary[i]) boundary_index.push_back(i);
  }
  const std::vector<double> to_boundary = multi_source(boundary_index);

  DiscreteSpace space;
  space.backend_ = Backend::kGraph;
  std::vector<VertexId> interior(n, kNoVertex);
  bool all_positioned = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_boundary[i]) continue;
    if (!std::isfinite(to_boundary[i])) {
      throw DomainError("vertex " + std::to_string(graph.vertices[i].id) +
                        " cannot reach the boundary");
    }
    interior[i] = static_cast<VertexId>(space.d_.size());
    space.d_.push_back(to_boundary[i]);
    space.labels_.push_back(graph.vertices[i].id);
    all_positioned = all_positioned && graph.vertices[i].pos.has_value();
  }
  if (space.d_.empty()) throw ResolutionError("graph space has no interior vertex");
  if (space.d_.size() > kMaxGraphVertices) {
    throw ResolutionError("graph space has too many interior vertices");
  }
  if (all_positioned) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_boundary[i]) space.positions_.push_back(*graph.vertices[i].pos);
    }
  }
  std::vector<DiscreteSpace::UndirectedEdge> edges;
  for (const auto& [key, len] : lengths) {
    const VertexId u = interior[key.first], v = interior[key.second];
    if (u == kNoVertex || v == kNoVertex) continue;
    edges.push_back({u, v, len, len * (1.0 / space.d_[u] + 1.0 / space.d_[v]) / 2.0});
  }
  space.set_edges(std::move(edges));
  if (!is_connected(space)) {
    throw DomainError("graph restricted to non-boundary vertices is disconnected");
  }

  const std::size_t m = space.size();
  space.metric_.assign(m * m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (interior[i] == kNoVertex) continue;
    const std::vector<double> dist = multi_source({i});
    for (std::size_t k = 0; k < n; ++k) {
      if (interior[k] != kNoVertex) space.metric_[interior[i] * m + interior[k]] = dist[k];
    }
  }
  space.diameter_ = *std::max_element(space.metric_.begin(), space.metric_.end());
  space.spacing_ = 0.0;
  return space;
}

bool is_connected(const DiscreteSpace& space) {
  if (space.size() == 0) return true;
  std::vector<bool> seen(space.size(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (const Arc& arc : space.neighbors(u)) {
      if (!seen[arc.to]) {
        seen[arc.to] = true;
        ++count;
        stack.push_back(arc.to);
      }
    }
  }
  return count == space.size();
}

ConditionReport local_quasiconvexity_probe(const DiscreteSpace& space,
                                           double lambda, double c,
                                           int centers, std::uint64_t seed) {
  if (!(lambda > 0 && lambda <= 0.5)) throw DomainError("lambda must lie in (0, 1/2]");
  if (!(c >= 1)) throw DomainError("quasiconvexity constant c must be >= 1");
  constexpr int kPairsPerCenter = 4;
  ConditionReport report;
  report.condition = Condition::kLocalQuasiconvexity;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(space.size()) - 1);
  double max_ratio = 0.0;
  int skipped = 0, measured = 0;
  for (int s = 0; s < centers; ++s) {
    const VertexId x = pick(rng);
    const double radius = lambda * space.boundary_distance(x);
    std::vector<VertexId> ball;
    for (VertexId v = 0; v < static_cast<VertexId>(space.size()); ++v) {
      if (space.distance(x, v) < radius) ball.push_back(v);
    }
    if (ball.size() < 2) {
      ++skipped;
      continue;
    }
    std::uniform_int_distribution<std::size_t> in_ball(0, ball.size() - 1);
    for (int k = 0; k < kPairsPerCenter; ++k) {
      const VertexId u = ball[in_ball(rng)];
      VertexId v = ball[in_ball(rng)];
      if (u == v) continue;
      const auto tree = dijkstra(space, u, EdgeWeight::kEuclidean, AdmitAll{},
                                 [v](VertexId w) { return w == v; });
      const double ratio = tree.dist[v] / space.distance(u, v);
      max_ratio = std::max(max_ratio, ratio);
      ++measured;
      report.observe(c - ratio, vertex_witness(space, u, v));
    }
  }
  report.constants = {{"lambda", lambda},
                      {"c", c},
                      {"max_ratio", max_ratio},
                      {"pairs", static_cast<double>(measured)},
                      {"centers_skipped", static_cast<double>(skipped)}};
  return report;
}

std::vector<VertexId> stratified_samples(const DiscreteSpace& space,
                                         std::size_t count, std::uint64_t seed) {
  const std::size_t n = space.size();
  std::vector<VertexId> out;
  if (n <= count) {
    for (std::size_t v = 0; v < n; ++v) out.push_back(static_cast<VertexId>(v));
    return out;
  }
  double threshold = 2.0 * space.spacing();
  if (threshold == 0.0) {
    double dmin = kInf;
    for (std::size_t v = 0; v < n; ++v) dmin = std::min(dmin, space.boundary_distance(v));
    threshold = 2.0 * dmin;
  }
  std::vector<VertexId> layer, rest;
  for (std::size_t v = 0; v < n; ++v) {
    (space.boundary_distance(v) <= threshold ? layer : rest).push_back(static_cast<VertexId>(v));
  }
  std::size_t from_layer = std::min(count / 2, layer.size());
  std::size_t from_rest = std::min(count - from_layer, rest.size());
  from_layer = std::min(count - from_rest, layer.size());

  std::mt19937_64 rng(seed);
  auto take = [&](const std::vector<VertexId>& pool, std::size_t k) {
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t lo = s * pool.size() / k;
      const std::size_t hi = (s + 1) * pool.size() / k;
      std::uniform_int_distribution<std::size_t> pick(lo, hi - 1);
      out.push_back(pool[pick(rng)]);
    }
  };
  take(layer, from_layer);
  take(rest, from_rest);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GraphSpace graph_from_json(const nlohmann::json& j) {
  try {
    GraphSpace g;
    for (const auto& v : j.at("vertices")) {
      GraphSpace::Vertex vertex;
      vertex.id = v.at("id").get<std::int64_t>();
      if (v.contains("pos") && !v.at("pos").is_null()) {
        vertex.pos = Point{v.at("pos").at(0).get<double>(), v.at("pos").at(1).get<double>()};
      }
      g.vertices.push_back(vertex);
    }
    for (const auto& e : j.at("edges")) {
      g.edges.push_back({e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>(),
                         e.at(2).get<double>()});
    }
    for (const auto& b : j.at("boundary")) g.boundary.push_back(b.get<std::int64_t>());
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed graph JSON: ") + e.what());
  }
}

nlohmann::json graph_to_json(const GraphSpace& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices) {
    nlohmann::json vj{{"id", v.id}};
    if (v.pos) vj["pos"] = {v.pos->x, v.pos->y};
    j["vertices"].push_back(vj);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges) j["edges"].push_back({e.u, e.v, e.length});
  j["boundary"] = g.boundary;
  return j;
}

}  // namespace johnspace
