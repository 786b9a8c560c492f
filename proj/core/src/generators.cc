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

#include "lincol/generators.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <queue>
#include <random>
#include <stdexcept>

#include "lincol/sparsity.h"

namespace lincol {
namespace {

// Portable bounded draws on top of mt19937_64 (the standard distributions
// are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Edge set plus per-vertex cyclic order, edited in place and frozen into a
// Graph at the end. The rotation is meaningful only for embedded families.
class Builder {
 public:
  explicit Builder(int n = 0) : rot_(n) {}

  int size() const { return static_cast<int>(rot_.size()); }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<Vertex>& ring(Vertex v) const { return rot_[v]; }

  Vertex add_vertex() {
    rot_.emplace_back();
    return size() - 1;
  }
  bool has_edge(Vertex u, Vertex v) const {
    return std::find(rot_[u].begin(), rot_[u].end(), v) != rot_[u].end();
  }
  void add_edge(Vertex u, Vertex v) {
    rot_[u].push_back(v);
    rot_[v].push_back(u);
  }
  void set_ring(Vertex v, std::vector<Vertex> ring) { rot_[v] = std::move(ring); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < size(); ++u) {
      for (Vertex v : rot_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Replaces u-v by a path through `times` new vertices; rotation preserved.
  void subdivide(Vertex u, Vertex v, int times) {
    Vertex prev = u;
    for (int i = 0; i < times; ++i) {
      Vertex s = add_vertex();
      replace(prev, i == 0 ? v : -1, s);
      rot_[s] = {prev};
      prev = s;
    }
    if (times > 0) {
      std::replace(rot_[v].begin(), rot_[v].end(), u, prev);
      rot_[prev].push_back(v);
    }
  }

  // Drops vertices of degree <= 1 until none remain.
  void prune_leaves() {
    std::vector<char> dead(size(), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < size(); ++v) {
        if (dead[v] || degree(v) > 1) continue;
        for (Vertex w : rot_[v]) std::erase(rot_[w], v);
        rot_[v].clear();
        dead[v] = 1;
        changed = true;
      }
    }
    compact(dead);
  }

  GeneratedGraph freeze(bool embedded) const {
    GeneratedGraph out;
    out.graph = Graph::from_edges(size(), edges());
    if (embedded) out.rotation = RotationSystem{rot_};
    return out;
  }

 private:
  void replace(Vertex at, Vertex old_value, Vertex new_value) {
    if (old_value >= 0) {
      std::replace(rot_[at].begin(), rot_[at].end(), old_value, new_value);
    } else {
      rot_[at].push_back(new_value);
    }
  }

  void compact(const std::vector<char>& dead) {
    std::vector<int> index(size(), -1);
    int next = 0;
    for (Vertex v = 0; v < size(); ++v) {
      if (!dead[v]) index[v] = next++;
    }
    std::vector<std::vector<Vertex>> fresh(next);
    for (Vertex v = 0; v < size(); ++v) {
      if (dead[v]) continue;
      for (Vertex w : rot_[v]) fresh[index[v]].push_back(index[w]);
    }
    rot_ = std::move(fresh);
  }

  std::vector<std::vector<Vertex>> rot_;
};

// Clockwise rotation from planar coordinates.
void rotation_from_points(Builder& b, const std::vector<std::pair<double, double>>& pts) {
  for (Vertex v = 0; v < b.size(); ++v) {
    auto ring = b.ring(v);
    auto angle = [&](Vertex w) { return std::atan2(pts[w].second - pts[v].second, pts[w].first - pts[v].first); };
    std::sort(ring.begin(), ring.end(), [&](Vertex x, Vertex y) { return angle(x) > angle(y); });
    b.set_ring(v, ring);
  }
}

std::pair<double, double> polar(double radius, double degrees) {
  double rad = degrees * std::numbers::pi / 180.0;
  return {radius * std::cos(rad), radius * std::sin(rad)};
}

Builder dodecahedron() {
  Builder b(20);
  std::vector<std::pair<double, double>> pts(20);
  for (int i = 0; i < 5; ++i) {
    pts[i] = polar(3, 90 + 72 * i);
    pts[5 + 2 * i] = polar(2, 90 + 72 * i);
    pts[6 + 2 * i] = polar(2, 126 + 72 * i);
    pts[15 + i] = polar(1, 126 + 72 * i);
  }
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, 5 + 2 * i);
    b.add_edge(15 + i, 15 + (i + 1) % 5);
    b.add_edge(6 + 2 * i, 15 + i);
  }
  for (int i = 0; i < 10; ++i) b.add_edge(5 + i, 5 + (i + 1) % 10);
  rotation_from_points(b, pts);
  return b;
}

Builder octahedron() {
  // Outer triangle 0,1,2; inner triangle 3,4,5 with vertex 3+i opposite i.
  Builder b(6);
  std::vector<std::pair<double, double>> pts(6);
  for (int i = 0; i < 3; ++i) {
    pts[i] = polar(3, 90 + 120 * i);
    pts[3 + i] = polar(1, 270 + 120 * i);
  }
  for (int i = 0; i < 3; ++i) {
    b.add_edge(i, (i + 1) % 3);
    b.add_edge(3 + i, 3 + (i + 1) % 3);
    for (int j = 0; j < 3; ++j) {
      if (j != i) b.add_edge(i, 3 + j);
    }
  }
  rotation_from_points(b, pts);
  return b;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Builder tree(const GraphFamily& f) {
  require(f.n >= 1, "tree needs n >= 1");
  require(f.max_degree >= 0 && (f.n == 1 || f.max_degree >= 1), "tree needs max_degree >= 1");
  require(f.max_degree <= f.n - 1, "tree max_degree exceeds n - 1");
  require(f.n <= 2 || f.max_degree >= 2, "tree with n > 2 needs max_degree >= 2");
  Rng rng(f.seed);
  // Random labels; label[0] is the hub, which takes its max_degree children
  // first. Every later vertex hangs off a random unsaturated vertex.
  std::vector<Vertex> label(f.n);
  for (Vertex v = 0; v < f.n; ++v) label[v] = v;
  for (Vertex v = f.n - 1; v > 0; --v) std::swap(label[v], label[rng.below(v + 1)]);
  Builder b(f.n);
  std::vector<int> degree(f.n, 0);
  for (Vertex v = 1; v < f.n; ++v) {
    Vertex parent = 0;
    if (v > f.max_degree) {
      std::vector<Vertex> open;
      for (Vertex u = 1; u < v; ++u) {
        if (degree[u] < f.max_degree) open.push_back(u);
      }
      parent = open[rng.below(static_cast<int>(open.size()))];
    }
    ++degree[parent];
    ++degree[v];
    b.add_edge(label[parent], label[v]);
  }
  return b;
}

Builder random_base(const GraphFamily& f, Rng& rng) {
  Builder b(f.n);
  std::vector<int> cap(f.n, f.low_degree);
  for (int h = 0; h < std::min(f.hubs, f.n); ++h) cap[h] = f.max_degree;
  int failures = 0;
  while (failures < 50 * f.n) {
    std::vector<Vertex> open;
    for (Vertex v = 0; v < f.n; ++v) {
      if (b.degree(v) < cap[v]) open.push_back(v);
    }
    if (open.size() < 2) break;
    Vertex u = open[rng.below(static_cast<int>(open.size()))];
    Vertex v = open[rng.below(static_cast<int>(open.size()))];
    if (u == v || b.has_edge(u, v)) {
      ++failures;
      continue;
    }
    b.add_edge(u, v);
  }
  return b;
}

void subdivide_randomly(Builder& b, const GraphFamily& f, Rng& rng) {
  for (const auto& [u, v] : b.edges()) {
    b.subdivide(u, v, rng.between(f.min_subdivisions, f.max_subdivisions));
  }
}

bool accepted(const GeneratedGraph& g, const GraphFamily& f) {
  if (g.graph.empty()) return false;
  if (g.graph.max_degree() < f.require_max_degree) return false;
  if (f.mad_below && !mad_below(g.graph, *f.mad_below)) return false;
  return true;
}

GeneratedGraph random_sparse(const GraphFamily& f) {
  require(f.n >= 2, "random-sparse needs n >= 2");
  require(f.max_degree >= 1 && f.low_degree >= 1, "random-sparse degrees must be positive");
  require(0 <= f.min_subdivisions && f.min_subdivisions <= f.max_subdivisions, "bad subdivision range");
  Rng rng(f.seed);
  for (int attempt = 0; attempt < f.max_attempts; ++attempt) {
    Builder b = random_base(f, rng);
    subdivide_randomly(b, f, rng);
    if (f.prune_leaves) b.prune_leaves();
    auto out = b.freeze(false);
    if (accepted(out, f)) return out;
  }
  throw std::runtime_error("random-sparse: no accepted sample within max_attempts");
}

bool segments_cross(std::pair<double, double> p1, std::pair<double, double> p2, std::pair<double, double> q1,
                    std::pair<double, double> q2) {
  auto orient = [](auto a, auto b, auto c) {
    double v = (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
    return (v > 1e-12) - (v < -1e-12);
  };
  int o1 = orient(p1, p2, q1);
  int o2 = orient(p1, p2, q2);
  int o3 = orient(q1, q2, p1);
  int o4 = orient(q1, q2, p2);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

// Edge of a shortest cycle shorter than `limit`, or {-1, -1}.
Edge short_cycle_edge(const Builder& b, int limit) {
  int best = limit;
  Edge found{-1, -1};
  std::vector<int> dist(b.size()), parent(b.size());
  for (Vertex s = 0; s < b.size(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : b.ring(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (parent[u] != w && dist[u] + dist[w] + 1 < best) {
          best = dist[u] + dist[w] + 1;
          found = {u, w};
        }
      }
    }
  }
  return found;
}

GeneratedGraph random_planar(const GraphFamily& f) {
  require(f.n >= 3, "random-planar needs n >= 3");
  require(f.max_degree >= 2, "random-planar needs max_degree >= 2");
  require(0 <= f.min_subdivisions && f.min_subdivisions <= f.max_subdivisions, "bad subdivision range");
  Rng rng(f.seed);
  for (int attempt = 0; attempt < f.max_attempts; ++attempt) {
    std::vector<std::pair<double, double>> pts(f.n);
    for (auto& p : pts) p = {rng.unit(), rng.unit()};
    std::vector<std::pair<double, Edge>> candidates;
    for (Vertex u = 0; u < f.n; ++u) {
      for (Vertex v = u + 1; v < f.n; ++v) {
        double dx = pts[u].first - pts[v].first;
        double dy = pts[u].second - pts[v].second;
        candidates.push_back({dx * dx + dy * dy, {u, v}});
      }
    }
    std::sort(candidates.begin(), candidates.end());
    Builder b(f.n);
    std::vector<Edge> placed;
    for (const auto& [len, e] : candidates) {
      if (b.degree(e.first) >= f.max_degree || b.degree(e.second) >= f.max_degree) continue;
      // Random thinning keeps the degree profile varied.
      if (rng.below(4) == 0) continue;
      bool crossing = false;
      for (const auto& p : placed) {
        if (p.first == e.first || p.first == e.second || p.second == e.first || p.second == e.second) continue;
        if (segments_cross(pts[e.first], pts[e.second], pts[p.first], pts[p.second])) {
          crossing = true;
          break;
        }
      }
      if (crossing) continue;
      placed.push_back(e);
      b.add_edge(e.first, e.second);
    }
    rotation_from_points(b, pts);
    subdivide_randomly(b, f, rng);
    if (f.min_girth > 0) {
      for (Edge e = short_cycle_edge(b, f.min_girth); e.first >= 0; e = short_cycle_edge(b, f.min_girth)) {
        b.subdivide(e.first, e.second, 1);
      }
    }
    if (f.prune_leaves) b.prune_leaves();
    auto out = b.freeze(true);
    if (accepted(out, f)) return out;
  }
  throw std::runtime_error("random-planar: no accepted sample within max_attempts");
}

Builder with_pendant_paths(Builder b, int length) {
  const int core = b.size();
  for (Vertex v = 0; v < core; ++v) {
    Vertex prev = v;
    for (int i = 0; i < length; ++i) {
      Vertex s = b.add_vertex();
      b.add_edge(prev, s);
      prev = s;
    }
  }
  return b;
}

Builder complete_bipartite(int a, int c) {
  Builder b(a + c);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < c; ++j) b.add_edge(i, a + j);
  }
  return b;
}

}  // namespace

std::vector<Edge> dodecahedron_face_matching() {
  Builder b = dodecahedron();
  auto gen = b.freeze(true);
  auto faces = faces_of(gen.graph, *gen.rotation);
  auto edges = gen.graph.edges();
  std::vector<std::vector<int>> faces_of_edge(edges.size());
  for (int f = 0; f < static_cast<int>(faces.faces.size()); ++f) {
    for (const auto& [u, v] : faces.faces[f].darts) {
      Edge e{std::min(u, v), std::max(u, v)};
      auto it = std::lower_bound(edges.begin(), edges.end(), e);
      faces_of_edge[it - edges.begin()].push_back(f);
    }
  }
  // Lexicographically first matching that meets every face exactly once.
  std::vector<int> face_hits(faces.faces.size(), 0);
  std::vector<char> used(20, 0);
  std::vector<Edge> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t from) {
    if (chosen.size() == 6) return true;
    for (std::size_t i = from; i < edges.size(); ++i) {
      const auto& [u, v] = edges[i];
      if (used[u] || used[v]) continue;
      const auto& fs = faces_of_edge[i];
      if (face_hits[fs[0]] || face_hits[fs[1]]) continue;
      used[u] = used[v] = 1;
      face_hits[fs[0]] = face_hits[fs[1]] = 1;
      chosen.push_back(edges[i]);
      if (search(i + 1)) return true;
      chosen.pop_back();
      used[u] = used[v] = 0;
      face_hits[fs[0]] = face_hits[fs[1]] = 0;
    }
    return false;
  };
  if (!search(0)) throw std::logic_error("dodecahedron has no face-transversal matching");
  return chosen;
}

std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kTree: return "tree";
    case FamilyTag::kPath: return "path";
    case FamilyTag::kCycle: return "cycle";
    case FamilyTag::kStar: return "star";
    case FamilyTag::kSpider: return "spider";
    case FamilyTag::kCompleteBipartite: return "complete-bipartite";
    case FamilyTag::kComplete: return "complete";
    case FamilyTag::kPetersen: return "petersen";
    case FamilyTag::kDodecahedron: return "dodecahedron";
    case FamilyTag::kOctahedron: return "octahedron";
    case FamilyTag::kSubdividedDodecahedron: return "subdivided-dodecahedron";
    case FamilyTag::kSubdividedOctahedron: return "subdivided-octahedron";
    case FamilyTag::kK23Extension: return "k23-extension";
    case FamilyTag::kK33Extension: return "k33-extension";
    case FamilyTag::kRandomSparse: return "random-sparse";
    case FamilyTag::kRandomPlanar: return "random-planar";
  }
  return "?";
}

FamilyTag parse_family(std::string_view text) {
  for (int i = 0; i <= static_cast<int>(FamilyTag::kRandomPlanar); ++i) {
    auto tag = static_cast<FamilyTag>(i);
    if (to_string(tag) == text) return tag;
  }
  throw std::invalid_argument("unknown graph family '" + std::string(text) + "'");
}

GeneratedGraph generate(const GraphFamily& f) {
  switch (f.tag) {
    case FamilyTag::kTree:
      return tree(f).freeze(false);
    case FamilyTag::kPath: {
      require(f.n >= 1, "path needs n >= 1");
      Builder b(f.n);
      for (Vertex v = 0; v + 1 < f.n; ++v) b.add_edge(v, v + 1);
      return b.freeze(false);
    }
    case FamilyTag::kCycle: {
      require(f.n >= 3, "cycle needs n >= 3");
      Builder b(f.n);
      for (Vertex v = 0; v < f.n; ++v) b.add_edge(v, (v + 1) % f.n);
      // Rotation: (prev, next) at every vertex gives the two faces.
      for (Vertex v = 0; v < f.n; ++v) b.set_ring(v, {(v + f.n - 1) % f.n, (v + 1) % f.n});
      return b.freeze(true);
    }
    case FamilyTag::kStar: {
      require(f.n >= 1, "star needs n >= 1 leaves");
      Builder b(f.n + 1);
      for (Vertex v = 1; v <= f.n; ++v) b.add_edge(0, v);
      return b.freeze(true);
    }
    case FamilyTag::kSpider: {
      require(f.a >= 1 && f.b >= 1, "spider needs a legs of b >= 1 vertices");
      Builder b(1);
      for (int leg = 0; leg < f.a; ++leg) {
        Vertex prev = 0;
        for (int i = 0; i < f.b; ++i) {
          Vertex s = b.add_vertex();
          b.add_edge(prev, s);
          prev = s;
        }
      }
      return b.freeze(true);
    }
    case FamilyTag::kCompleteBipartite:
      require(f.a >= 1 && f.b >= 1, "complete-bipartite needs a, b >= 1");
      return complete_bipartite(f.a, f.b).freeze(false);
    case FamilyTag::kComplete: {
      require(f.n >= 1, "complete needs n >= 1");
      Builder b(f.n);
      for (Vertex u = 0; u < f.n; ++u) {
        for (Vertex v = u + 1; v < f.n; ++v) b.add_edge(u, v);
      }
      return b.freeze(false);
    }
    case FamilyTag::kPetersen: {
      Builder b(10);
      for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, 5 + i);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
      }
      return b.freeze(false);
    }
    case FamilyTag::kDodecahedron:
      return dodecahedron().freeze(true);
    case FamilyTag::kOctahedron:
      return octahedron().freeze(true);
    case FamilyTag::kSubdividedDodecahedron: {
      Builder b = dodecahedron();
      for (const auto& [u, v] : dodecahedron_face_matching()) b.subdivide(u, v, 1);
      return b.freeze(true);
    }
    case FamilyTag::kSubdividedOctahedron: {
      Builder b = octahedron();
      // Perfect matching kept whole: each outer vertex with the inner vertex
      // clockwise-next to its antipode.
      std::vector<Edge> keep{{0, 4}, {1, 5}, {2, 3}};
      for (const auto& e : b.edges()) {
        if (std::find(keep.begin(), keep.end(), e) == keep.end()) b.subdivide(e.first, e.second, 1);
      }
      return b.freeze(true);
    }
    case FamilyTag::kK23Extension:
    case FamilyTag::kK33Extension: {
      require(f.pendant_length >= 2 && f.pendant_length % 2 == 0, "pendant_length must be even and >= 2");
      int side = f.tag == FamilyTag::kK23Extension ? 2 : 3;
      return with_pendant_paths(complete_bipartite(side, 3), f.pendant_length).freeze(false);
    }
    case FamilyTag::kRandomSparse:
      return random_sparse(f);
    case FamilyTag::kRandomPlanar:
      return random_planar(f);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace lincol
