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

#include "lincol/sparsity.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

namespace lincol {
namespace {

// Dinic max-flow on a small network with int64 capacities.
class FlowNetwork {
 public:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  explicit FlowNetwork(int nodes) : head_(nodes, -1), level_(nodes), iter_(nodes) {}

  void add_arc(int from, int to, std::int64_t cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t max_flow(int s, int t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (std::int64_t pushed = dfs(s, t, kInf)) total += pushed;
    }
    return total;
  }

  // Nodes reachable from s in the residual network after max_flow.
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          queue.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& a = iter_[u]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      if (std::int64_t got = dfs(arc.to, t, std::min(limit, arc.cap))) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

int induced_edge_count(const Graph& g, const std::vector<char>& in) {
  int count = 0;
  for (const auto& [u, v] : g.edges()) count += (in[u] && in[v]) ? 1 : 0;
  return count;
}

// Vertex set maximizing den*|E(S)| - num*|S| (possibly empty), via the
// edge/vertex closure network: s -> edge (den), edge -> ends (inf),
// vertex -> t (num).
std::vector<Vertex> best_closure(const Graph& g, std::int64_t num, std::int64_t den) {
  const int n = g.vertex_count();
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int s = n + m;
  const int t = s + 1;
  FlowNetwork net(n + m + 2);
  for (int i = 0; i < m; ++i) {
    net.add_arc(s, n + i, den);
    net.add_arc(n + i, edges[i].first, FlowNetwork::kInf);
    net.add_arc(n + i, edges[i].second, FlowNetwork::kInf);
  }
  for (Vertex v = 0; v < n; ++v) net.add_arc(v, t, num);
  net.max_flow(s, t);
  auto side = net.source_side(s);
  std::vector<Vertex> chosen;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v]) chosen.push_back(v);
  }
  return chosen;
}

DensityWitness mad_by_flow(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> best(n);
  for (Vertex v = 0; v < n; ++v) best[v] = v;
  std::int64_t best_edges = g.edge_count();
  std::int64_t best_size = n;
  // Newton iteration on the edge density |E(S)|/|S|: each round either finds
  // a strictly denser set or certifies optimality. Densities are fractions
  // with denominator <= n, so the sequence is finite.
  for (;;) {
    auto candidate = best_closure(g, best_edges, best_size);
    if (candidate.empty()) break;
    std::vector<char> in(n, 0);
    for (Vertex v : candidate) in[v] = 1;
    std::int64_t edges = induced_edge_count(g, in);
    std::int64_t size = static_cast<std::int64_t>(candidate.size());
    if (edges * best_size <= best_edges * size) break;
    best = std::move(candidate);
    best_edges = edges;
    best_size = size;
  }
  return {best, Rational(2 * best_edges, best_size)};
}

DensityWitness mad_by_enumeration(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("subset enumeration limited to 24 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (const auto& [u, v] : g.edges()) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }
  std::uint32_t best_mask = 1;
  std::int64_t best_edges = 0;
  std::int64_t best_size = 1;
  const std::uint32_t limit = n == 32 ? ~0u : (1u << n);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::int64_t twice_edges = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      twice_edges += std::popcount(nbr[std::countr_zero(rest)] & mask);
    }
    std::int64_t size = std::popcount(mask);
    if (twice_edges * best_size > 2 * best_edges * size) {
      best_mask = mask;
      best_edges = twice_edges / 2;
      best_size = size;
    }
  }
  std::vector<Vertex> vertices;
  for (Vertex v = 0; v < n; ++v) {
    if (best_mask >> v & 1u) vertices.push_back(v);
  }
  return {vertices, Rational(2 * best_edges, best_size)};
}

}  // namespace

Rational induced_average_degree(const Graph& g, const std::vector<Vertex>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty vertex set has no average degree");
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : vertices) in[v] = 1;
  int size = 0;
  for (char c : in) size += c;
  return Rational(2 * static_cast<std::int64_t>(induced_edge_count(g, in)), size);
}

DensityWitness max_average_degree(const Graph& g, MadMethod method) {
  if (g.empty()) throw GraphError("maximum average degree of the empty graph");
  if (method == MadMethod::kAuto) {
    method = g.vertex_count() <= 12 ? MadMethod::kEnumeration : MadMethod::kFlow;
  }
  return method == MadMethod::kEnumeration ? mad_by_enumeration(g) : mad_by_flow(g);
}

bool mad_below(const Graph& g, const Rational& threshold) {
  if (threshold.sign() <= 0) throw std::invalid_argument("mad threshold must be positive");
  if (g.empty()) return true;
  return max_average_degree(g).density < threshold;
}

Rational girth_mad_bound(int girth_value) {
  if (girth_value < 3) throw std::invalid_argument("girth must be at least 3");
  return Rational(2 * static_cast<std::int64_t>(girth_value), girth_value - 2);
}

}  // namespace lincol
