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

#ifndef JOHNSPACE_SHORTEST_PATH_H_
#define JOHNSPACE_SHORTEST_PATH_H_

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "johnspace/discrete_space.h"

namespace johnspace {

enum class EdgeWeight { kEuclidean, kQuasihyperbolic };

struct ShortestPathTree {
  VertexId source = kNoVertex;
  std::vector<double> dist;
  std::vector<VertexId> parent;
};

struct AdmitAll {
  bool operator()(VertexId, double) const { return true; }
};

struct NeverStop {
  bool operator()(VertexId) const { return false; }
};

// Dijkstra with a binary heap. Ties are broken by vertex id, so the tree is
// reproducible. `admit(v, candidate)` may veto a relaxation; `stop(v)` is
// called when v is settled and ends the search when it returns true.
template <class Admit = AdmitAll, class Stop = NeverStop>
ShortestPathTree dijkstra(const DiscreteSpace& space, VertexId source,
                          EdgeWeight weight, Admit admit = {}, Stop stop = {}) {
  const double inf = std::numeric_limits<double>::infinity();
  ShortestPathTree tree;
  tree.source = source;
  tree.dist.assign(space.size(), inf);
  tree.parent.assign(space.size(), kNoVertex);
  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<bool> settled(space.size(), false);
  tree.dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = true;
    if (stop(u)) break;
    for (const Arc& arc : space.neighbors(u)) {
      if (settled[arc.to]) continue;
      const double w =
          weight == EdgeWeight::kEuclidean ? arc.euclid_len : arc.qh_len;
      const double candidate = du + w;
      if (candidate < tree.dist[arc.to] && admit(arc.to, candidate)) {
        tree.dist[arc.to] = candidate;
        tree.parent[arc.to] = u;
        heap.push({candidate, arc.to});
      }
    }
  }
  return tree;
}

// Vertices from the tree source to `target`; empty if unreachable.
inline std::vector<VertexId> extract_path(const ShortestPathTree& tree,
                                          VertexId target) {
  if (tree.dist[target] == std::numeric_limits<double>::infinity()) return {};
  std::vector<VertexId> path;
  for (VertexId v = target; v != kNoVertex; v = tree.parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace johnspace

#endif  // JOHNSPACE_SHORTEST_PATH_H_
