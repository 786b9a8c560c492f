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

#include "lincol/verify.h"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace lincol {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Rotates a cycle to start at its smallest vertex, heading to the smaller of
// that vertex's two cycle neighbors.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

std::vector<Vertex> forest_path(const std::vector<std::vector<Vertex>>& forest, Vertex from, Vertex to) {
  std::map<Vertex, Vertex> parent;
  parent[from] = from;
  std::queue<Vertex> queue;
  queue.push(from);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    if (u == to) break;
    for (Vertex w : forest[u]) {
      if (!parent.count(w)) {
        parent[w] = u;
        queue.push(w);
      }
    }
  }
  std::vector<Vertex> path;
  for (Vertex v = to; v != from; v = parent.at(v)) path.push_back(v);
  path.push_back(from);
  return path;
}

void check_colored(const Graph& g, const LinearColoring& col) {
  if (static_cast<int>(col.color.size()) != g.vertex_count()) {
    throw ColoringError("coloring has " + std::to_string(col.color.size()) + " entries for " +
                        std::to_string(g.vertex_count()) + " vertices");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (col.color[v] <= 0) throw ColoringError("vertex " + std::to_string(v) + " is uncolored");
    if (col.palette_size > 0 && col.color[v] > col.palette_size) {
      throw ColoringError("vertex " + std::to_string(v) + " color outside palette");
    }
  }
}

}  // namespace

int LinearColoring::colors_used() const {
  std::set<Color> distinct(color.begin(), color.end());
  distinct.erase(0);
  return static_cast<int>(distinct.size());
}

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
  for (auto& l : lists_) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (!l.empty() && l.front() <= 0) throw ColoringError("list colors must be positive");
  }
}

ListAssignment ListAssignment::uniform(int vertex_count, int k) {
  std::vector<Color> base(std::max(k, 0));
  std::iota(base.begin(), base.end(), 1);
  return ListAssignment(std::vector<std::vector<Color>>(vertex_count, base));
}

bool ListAssignment::contains(Vertex v, Color c) const {
  return std::binary_search(lists_[v].begin(), lists_[v].end(), c);
}

int ListAssignment::min_size() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& l : lists_) best = std::min(best, static_cast<int>(l.size()));
  return lists_.empty() ? 0 : best;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kAdjacentSameColor: return "adjacent-same-color";
    case ViolationKind::kThreeNeighborsSameColor: return "three-neighbors-same-color";
    case ViolationKind::kBicoloredCycle: return "bicolored-cycle";
    case ViolationKind::kListViolation: return "list-violation";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << to_string(kind) << ":";
  for (Vertex v : witness) os << ' ' << v;
  return os.str();
}

std::optional<Violation> verify_linear(const Graph& g, const LinearColoring& col) {
  check_colored(g, col);
  const auto& c = col.color;
  const auto edges = g.edges();
  for (const auto& [u, v] : edges) {
    if (c[u] == c[v]) return Violation{ViolationKind::kAdjacentSameColor, {u, v}};
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(nbrs.begin(), nbrs.end());
    std::map<Color, std::vector<Vertex>> by_color;
    for (Vertex w : nbrs) by_color[c[w]].push_back(w);
    for (const auto& [color, group] : by_color) {
      if (group.size() >= 3) {
        return Violation{ViolationKind::kThreeNeighborsSameColor, {v, group[0], group[1], group[2]}};
      }
    }
  }
  std::set<Color> palette(c.begin(), c.end());
  for (auto a = palette.begin(); a != palette.end(); ++a) {
    for (auto b = std::next(a); b != palette.end(); ++b) {
      DisjointSets sets(g.vertex_count());
      std::vector<std::vector<Vertex>> forest(g.vertex_count());
      for (const auto& [u, v] : edges) {
        bool in_pair = (c[u] == *a && c[v] == *b) || (c[u] == *b && c[v] == *a);
        if (!in_pair) continue;
        if (!sets.unite(u, v)) {
          return Violation{ViolationKind::kBicoloredCycle, canonical_cycle(forest_path(forest, u, v))};
        }
        forest[u].push_back(v);
        forest[v].push_back(u);
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> verify_list(const Graph& g, const ListAssignment& lists,
                                     const LinearColoring& col) {
  if (lists.vertex_count() != g.vertex_count()) {
    throw ColoringError("list assignment size does not match the graph");
  }
  if (auto v = verify_linear(g, col)) return v;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!lists.contains(v, col.color[v])) return Violation{ViolationKind::kListViolation, {v}};
  }
  return std::nullopt;
}

bool witness_holds(const Graph& g, const LinearColoring& col, const Violation& v,
                   const ListAssignment* lists) {
  const auto& c = col.color;
  const auto& w = v.witness;
  auto valid_id = [&](Vertex x) { return x >= 0 && x < g.vertex_count(); };
  if (!std::all_of(w.begin(), w.end(), valid_id)) return false;
  switch (v.kind) {
    case ViolationKind::kAdjacentSameColor:
      return w.size() == 2 && g.adjacent(w[0], w[1]) && c[w[0]] == c[w[1]];
    case ViolationKind::kThreeNeighborsSameColor: {
      if (w.size() != 4) return false;
      std::set<Vertex> distinct(w.begin() + 1, w.end());
      if (distinct.size() != 3) return false;
      for (int i = 1; i < 4; ++i) {
        if (!g.adjacent(w[0], w[i]) || c[w[i]] != c[w[1]]) return false;
      }
      return true;
    }
    case ViolationKind::kBicoloredCycle: {
      if (w.size() < 3) return false;
      std::set<Vertex> distinct(w.begin(), w.end());
      if (distinct.size() != w.size()) return false;
      std::set<Color> used;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!g.adjacent(w[i], w[(i + 1) % w.size()])) return false;
        used.insert(c[w[i]]);
      }
      return used.size() == 2;
    }
    case ViolationKind::kListViolation:
      return lists != nullptr && w.size() == 1 && !lists->contains(w[0], c[w[0]]);
  }
  return false;
}

bool locally_linear(const GraphView& g, const std::vector<Color>& color, Vertex v) {
  const Color a = color[v];
  if (a == 0) return true;
  const Graph& graph = g.graph();
  std::map<Color, int> around;
  for (Vertex y : graph.neighbors(v)) {
    if (!g.alive(y) || color[y] == 0) continue;
    if (color[y] == a || ++around[color[y]] >= 3) return false;
  }
  for (Vertex x : graph.neighbors(v)) {
    if (!g.alive(x)) continue;
    int same = 0;
    for (Vertex z : graph.neighbors(x)) same += g.alive(z) && color[z] == a ? 1 : 0;
    if (same >= 3) return false;
  }
  // The two-colored component through v has a cycle iff it has at least as
  // many edges as vertices.
  for (const auto& [b, unused] : around) {
    std::set<Vertex> seen{v};
    std::vector<Vertex> stack{v};
    int degree_sum = 0;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex z : graph.neighbors(x)) {
        if (!g.alive(z) || (color[z] != a && color[z] != b)) continue;
        ++degree_sum;
        if (seen.insert(z).second) stack.push_back(z);
      }
    }
    if (degree_sum / 2 >= static_cast<int>(seen.size())) return false;
  }
  return true;
}

}  // namespace lincol
