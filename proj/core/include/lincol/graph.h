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

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lincol {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Girth of an acyclic graph.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1. Adjacency lists keep insertion
// order; that order is what rotation systems and generators rely on.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  // Throws GraphError on self-loops, parallel edges or out-of-range ids.
  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  void add_edge(Vertex u, Vertex v);
  Vertex add_vertex();

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  bool empty() const { return adjacency_.empty(); }

  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  int max_degree() const;
  int min_degree() const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  // Subgraph induced by `keep`, relabelled densely in increasing id order.
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

// A graph with some vertices switched off. Ids stay stable; degrees and
// neighbor lists only see live vertices.
class GraphView {
 public:
  GraphView(const Graph& graph);  // NOLINT: every graph is a full view
  GraphView(const Graph& graph, std::vector<char> alive);

  const Graph& graph() const { return *graph_; }
  int vertex_count() const { return graph_->vertex_count(); }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  int degree(Vertex v) const { return degree_[v]; }
  int live_count() const { return live_count_; }
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Vertex> live_vertices() const;
  bool adjacent(Vertex u, Vertex v) const;
  int max_degree() const;
  int min_degree() const;
  const std::vector<char>& alive_mask() const { return alive_; }

  void remove(Vertex v);
  void restore(Vertex v);

 private:
  const Graph* graph_;
  std::vector<char> alive_;
  std::vector<int> degree_;
  int live_count_ = 0;
};

// Maximal path whose interior vertices all have degree 2 and whose endpoints
// do not. Endpoints coincide for a path that leaves and re-enters one vertex.
struct Thread {
  Vertex first = -1;
  Vertex last = -1;
  std::vector<Vertex> interior;

  int length() const { return static_cast<int>(interior.size()); }
  friend bool operator==(const Thread&, const Thread&) = default;
};

// Shortest cycle length, or kInfiniteGirth for forests.
int girth(const GraphView& g);

// Threads of length >= min_k, each reported once, sorted by (first, path).
// Components that are plain cycles have no endpoint and yield no thread.
std::vector<Thread> find_threads(const GraphView& g, int min_k);

// Walks from `from` through `start` while the current vertex has degree 2.
// Returns the degree-2 vertices passed and the vertex where the walk stopped
// (the far endpoint), or -1 as endpoint if the walk closed a degree-2 cycle.
struct ThreadWalk {
  std::vector<Vertex> interior;
  Vertex end = -1;
};
ThreadWalk walk_thread(const GraphView& g, Vertex from, Vertex start);

// ceil(max degree / 2) + 1. Throws GraphError for the empty graph.
int naive_lower_bound(const Graph& g);

int ceil_half(int x);

}  // namespace lincol
