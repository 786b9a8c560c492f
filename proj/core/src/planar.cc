// Copyright 2026 The lincol Authors
//
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

#include "lincol/planar.h"

#include <algorithm>
#include <map>

namespace lincol {

void RotationSystem::validate(const Graph& g) const {
  if (static_cast<int>(order.size()) != g.vertex_count()) {
    throw EmbeddingError("rotation covers " + std::to_string(order.size()) + " vertices, graph has " +
                         std::to_string(g.vertex_count()));
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> a(order[v]);
    std::vector<Vertex> b(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      throw EmbeddingError("rotation at vertex " + std::to_string(v) +
                           " is not a permutation of its neighbors");
    }
  }
}

RotationSystem RotationSystem::restricted(const GraphView& view) const {
  RotationSystem out;
  out.order.resize(order.size());
  for (Vertex v = 0; v < static_cast<Vertex>(order.size()); ++v) {
    if (!view.alive(v)) continue;
    for (Vertex w : order[v]) {
      if (view.alive(w)) out.order[v].push_back(w);
    }
  }
  return out;
}

RotationSystem adjacency_rotation(const Graph& g) {
  RotationSystem rot;
  rot.order.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    rot.order[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  return rot;
}

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(darts.size());
  for (const auto& d : darts) out.push_back(d.first);
  return out;
}

int FaceSet::total_degree() const {
  int total = 0;
  for (const auto& f : faces) total += f.degree();
  return total;
}

FaceSet faces_of(const GraphView& g, const RotationSystem& rot) {
  const int n = g.vertex_count();
  if (static_cast<int>(rot.order.size()) != n) throw EmbeddingError("rotation size mismatch");
  // position[v][w] = index of w in v's live rotation.
  std::vector<std::vector<Vertex>> live(n);
  std::vector<std::map<Vertex, int>> position(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!g.alive(v)) continue;
    for (Vertex w : rot.order[v]) {
      if (!g.alive(w)) continue;
      if (!g.adjacent(v, w) || position[v].count(w)) {
        throw EmbeddingError("rotation at vertex " + std::to_string(v) + " does not match its neighbors");
      }
      position[v][w] = static_cast<int>(live[v].size());
      live[v].push_back(w);
    }
    if (static_cast<int>(live[v].size()) != g.degree(v)) {
      throw EmbeddingError("rotation at vertex " + std::to_string(v) + " misses a neighbor");
    }
  }
  std::map<Edge, bool> used;
  std::vector<Edge> darts;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : live[u]) darts.emplace_back(u, v);
  }
  std::sort(darts.begin(), darts.end());
  FaceSet out;
  for (const auto& start : darts) {
    if (used[start]) continue;
    Face face;
    Edge d = start;
    do {
      used[d] = true;
      face.darts.push_back(d);
      const auto& [u, v] = d;
      const auto& ring = live[v];
      int next = (position[v].at(u) + 1) % static_cast<int>(ring.size());
      d = {v, ring[next]};
    } while (d != start);
    out.faces.push_back(std::move(face));
  }
  return out;
}

int component_count(const GraphView& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (!g.alive(s) || seen[s]) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

bool euler_check(const Graph& g, const FaceSet& faces) {
  if (component_count(g) != 1) throw std::invalid_argument("euler_check needs a connected graph");
  // A lone vertex has one (empty-boundary) face.
  int f = static_cast<int>(faces.faces.size()) + (g.edge_count() == 0 ? 1 : 0);
  return g.vertex_count() - g.edge_count() + f == 2;
}

bool is_plane_embedding(const GraphView& g, const RotationSystem& rot) {
  auto faces = faces_of(g, rot);
  int live_edges = 0;
  int isolated = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.alive(v)) continue;
    live_edges += g.degree(v);
    isolated += g.degree(v) == 0 ? 1 : 0;
  }
  live_edges /= 2;
  int f = static_cast<int>(faces.faces.size()) + isolated;
  return g.live_count() - live_edges + f == 2 * component_count(g);
}

}  // namespace lincol
