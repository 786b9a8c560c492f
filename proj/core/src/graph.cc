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

#include "lincol/graph.h"

#include <algorithm>
#include <queue>

namespace lincol {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  adjacency_.resize(vertex_count);
}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count()) {
    throw GraphError("vertex id " + std::to_string(v) + " out of range (n = " +
                     std::to_string(vertex_count()) + ")");
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) {
    throw GraphError("duplicate edge " + std::to_string(std::min(u, v)) + " " +
                     std::to_string(std::max(u, v)));
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++edge_count_;
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  return vertex_count() - 1;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  Vertex other = &a == &adjacency_[u] ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& a : adjacency_) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

int Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  int best = std::numeric_limits<int>::max();
  for (const auto& a : adjacency_) best = std::min(best, static_cast<int>(a.size()));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> index(vertex_count(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(sorted.size()));
  for (const auto& [u, v] : edges()) {
    if (index[u] >= 0 && index[v] >= 0) h.add_edge(index[u], index[v]);
  }
  return h;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

GraphView::GraphView(const Graph& graph)
    : GraphView(graph, std::vector<char>(graph.vertex_count(), 1)) {}

GraphView::GraphView(const Graph& graph, std::vector<char> alive)
    : graph_(&graph), alive_(std::move(alive)), degree_(graph.vertex_count(), 0) {
  if (static_cast<int>(alive_.size()) != graph.vertex_count()) {
    throw GraphError("alive mask size does not match vertex count");
  }
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (!alive_[v]) continue;
    ++live_count_;
    for (Vertex w : graph.neighbors(v)) degree_[v] += alive_[w] ? 1 : 0;
  }
}

std::vector<Vertex> GraphView::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree_[v]);
  for (Vertex w : graph_->neighbors(v)) {
    if (alive_[w]) out.push_back(w);
  }
  return out;
}

std::vector<Vertex> GraphView::live_vertices() const {
  std::vector<Vertex> out;
  out.reserve(live_count_);
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

bool GraphView::adjacent(Vertex u, Vertex v) const {
  return alive_[u] && alive_[v] && graph_->adjacent(u, v);
}

int GraphView::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (alive_[v]) best = std::max(best, degree_[v]);
  }
  return best;
}

int GraphView::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (alive_[v]) best = std::min(best, degree_[v]);
  }
  return live_count_ == 0 ? 0 : best;
}

void GraphView::remove(Vertex v) {
  if (!alive_[v]) return;
  alive_[v] = 0;
  --live_count_;
  degree_[v] = 0;
  for (Vertex w : graph_->neighbors(v)) {
    if (alive_[w]) --degree_[w];
  }
}

void GraphView::restore(Vertex v) {
  if (alive_[v]) return;
  alive_[v] = 1;
  ++live_count_;
  for (Vertex w : graph_->neighbors(v)) {
    if (alive_[w]) {
      ++degree_[w];
      ++degree_[v];
    }
  }
}

int girth(const GraphView& g) {
  int best = kInfiniteGirth;
  const int n = g.vertex_count();
  std::vector<int> dist(n), parent(n);
  for (Vertex s = 0; s < n; ++s) {
    if (!g.alive(s)) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.graph().neighbors(u)) {
        if (!g.alive(w)) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

ThreadWalk walk_thread(const GraphView& g, Vertex from, Vertex start) {
  ThreadWalk walk;
  Vertex prev = from;
  Vertex cur = start;
  while (g.degree(cur) == 2) {
    if (cur == from) {
      walk.end = -1;
      return walk;
    }
    walk.interior.push_back(cur);
    auto nbrs = g.neighbors(cur);
    Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
    if (cur == start) {  // closed loop of degree-2 vertices
      walk.end = -1;
      return walk;
    }
  }
  walk.end = cur;
  return walk;
}

std::vector<Thread> find_threads(const GraphView& g, int min_k) {
  std::vector<Thread> out;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    if (!g.alive(a) || g.degree(a) == 2) continue;
    for (Vertex start : g.neighbors(a)) {
      Thread t;
      t.first = a;
      if (g.degree(start) != 2) {
        t.last = start;
      } else {
        auto walk = walk_thread(g, a, start);
        t.last = walk.end;
        t.interior = std::move(walk.interior);
      }
      // Report each thread from its canonical end only.
      if (t.last < a) continue;
      if (t.last == a && t.interior.size() >= 2 && t.interior.front() > t.interior.back()) continue;
      if (t.length() < min_k) continue;
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(), [](const Thread& x, const Thread& y) {
    return std::tie(x.first, x.last, x.interior) < std::tie(y.first, y.last, y.interior);
  });
  return out;
}

int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

int naive_lower_bound(const Graph& g) {
  if (g.empty()) throw GraphError("naive lower bound of the empty graph");
  return ceil_half(g.max_degree()) + 1;
}

}  // namespace lincol
