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

#include "oracles.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace oracle {

using lincol::LemmaId;

namespace {

int deg(const Graph& g, Vertex v) { return g.degree(v); }

// Walk from v through x along degree-2 vertices.
struct Walk {
  std::vector<Vertex> interior;
  Vertex end = -1;
};

Walk walk(const Graph& g, Vertex v, Vertex x) {
  Walk w;
  Vertex prev = v;
  Vertex cur = x;
  while (deg(g, cur) == 2 && cur != v && static_cast<int>(w.interior.size()) <= g.vertex_count()) {
    w.interior.push_back(cur);
    auto n = g.neighbors(cur);
    Vertex next = n[0] == prev ? n[1] : n[0];
    prev = cur;
    cur = next;
  }
  w.end = cur;
  return w;
}

bool exact_thread(const Graph& g, const Walk& w, int k) {
  return static_cast<int>(w.interior.size()) == k && deg(g, w.end) >= 3;
}

std::vector<Walk> walks(const Graph& g, Vertex v, Vertex skip = -1) {
  std::vector<Walk> out;
  for (Vertex x : g.neighbors(v)) {
    if (x != skip) out.push_back(walk(g, v, x));
  }
  return out;
}

}  // namespace

Rational subset_mad(const Graph& g) {
  const int n = g.vertex_count();
  Rational best(0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int verts = 0;
    int edges = 0;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      ++verts;
      for (Vertex w : g.neighbors(v)) {
        if (w > v && (mask >> w & 1)) ++edges;
      }
    }
    best = std::max(best, Rational(2 * edges, verts));
  }
  return best;
}

int edge_removal_girth(const Graph& g) {
  int best = lincol::kInfiniteGirth;
  for (auto [a, b] : g.edges()) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[a] = 0;
    q.push(a);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if ((x == a && y == b) || dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
    if (dist[b] > 0) best = std::min(best, dist[b] + 1);
  }
  return best;
}

bool pairwise_linear(const Graph& g, const std::vector<int>& color) {
  for (auto [a, b] : g.edges()) {
    if (color[a] == color[b]) return false;
  }
  std::set<int> palette(color.begin(), color.end());
  for (int c1 : palette) {
    for (int c2 : palette) {
      if (c2 <= c1) continue;
      auto in = [&](Vertex v) { return color[v] == c1 || color[v] == c2; };
      // Degree within the class pair, then acyclicity by union-find.
      std::vector<int> parent(g.vertex_count());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!in(v)) continue;
        int d = 0;
        for (Vertex w : g.neighbors(v)) d += in(w);
        if (d > 2) return false;
      }
      for (auto [a, b] : g.edges()) {
        if (!in(a) || !in(b)) continue;
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
      }
    }
  }
  return true;
}

int enumerate_lc(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> color(n, 1);
    while (true) {
      if (pairwise_linear(g, color)) return k;
      int i = 0;
      while (i < n && color[i] == k) color[i++] = 1;
      if (i == n) break;
      ++color[i];
    }
  }
}

bool enumerate_list_feasible(const Graph& g, const std::vector<std::vector<int>>& lists) {
  const int n = g.vertex_count();
  for (const auto& l : lists) {
    if (l.empty()) return false;
  }
  std::vector<std::size_t> idx(n, 0);
  std::vector<int> color(n);
  while (true) {
    for (int v = 0; v < n; ++v) color[v] = lists[v][idx[v]];
    if (pairwise_linear(g, color)) return true;
    int i = 0;
    while (i < n && idx[i] + 1 == lists[i].size()) idx[i++] = 0;
    if (i == n) return false;
    ++idx[i];
  }
}

std::vector<std::vector<Vertex>> trace_faces(const Graph& g, const lincol::RotationSystem& rot) {
  // succ[(u, v)] = dart leaving v after arriving from u.
  std::map<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>> succ;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& ring = rot.order[v];
    for (std::size_t i = 0; i < ring.size(); ++i) {
      succ[{ring[i], v}] = {v, ring[(i + 1) % ring.size()]};
    }
  }
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<std::vector<Vertex>> faces;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      std::pair<Vertex, Vertex> start{u, v};
      if (seen.count(start)) continue;
      std::vector<Vertex> face;
      auto cur = start;
      do {
        seen.insert(cur);
        face.push_back(cur.first);
        cur = succ.at(cur);
      } while (cur != start);
      faces.push_back(face);
    }
  }
  return faces;
}

std::set<int> configs_present(const Graph& g, LemmaId lemma, const lincol::RotationSystem* rot,
                              int bound_m) {
  std::set<int> out;
  const int n = g.vertex_count();
  if (lemma == LemmaId::kG5) {
    for (Vertex v = 0; v < n; ++v) {
      if (deg(g, v) != 2) continue;
      for (Vertex w : g.neighbors(v)) {
        if (deg(g, w) <= 5) out.insert(1);
      }
    }
    for (const auto& face : trace_faces(g, *rot)) {
      if (face.size() != 5) continue;
      int threes = 0;
      int small = 0;
      for (Vertex v : face) {
        threes += deg(g, v) == 3;
        small += deg(g, v) <= 5;
      }
      if (threes >= 4 && small == 5) out.insert(2);
    }
    return out;
  }
  if (lemma == LemmaId::kMad3) {
    auto half = [](int x) { return (x + 1) / 2; };
    for (Vertex u = 0; u < n; ++u) {
      std::vector<int> nd;
      for (Vertex x : g.neighbors(u)) nd.push_back(deg(g, x));
      const int twos = static_cast<int>(std::count(nd.begin(), nd.end(), 2));
      if (deg(g, u) == 2 && half(nd[0]) + half(nd[1]) < half(bound_m) + 2) out.insert(1);
      if (deg(g, u) == 3) {
        for (int i = 0; i < 3; ++i) {
          if (nd[i] == 2 && nd[(i + 1) % 3] + nd[(i + 2) % 3] <= 8) out.insert(2);
        }
        if (twos >= 2) out.insert(3);
      }
      if (deg(g, u) == 4 && twos == 4) out.insert(4);
      if (deg(g, u) == 5) {
        auto nb = g.neighbors(u);
        for (int fifth = 0; fifth < 5; ++fifth) {
          if (nd[fifth] > 3) continue;
          bool ok = true;
          for (int i = 0; i < 5; ++i) {
            if (i == fifth) continue;
            if (nd[i] != 2) {
              ok = false;
              continue;
            }
            auto tn = g.neighbors(nb[i]);
            Vertex other = tn[0] == u ? tn[1] : tn[0];
            if (deg(g, other) > 8) ok = false;
          }
          if (ok) out.insert(5);
        }
      }
    }
    return out;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (deg(g, v) < 3) continue;
    auto ws = walks(g, v);
    for (const auto& w : ws) {
      if (w.interior.size() >= 3 && deg(g, w.end) >= 3) out.insert(1);
    }
    if (deg(g, v) != 3) continue;
    for (int i = 0; i < 3; ++i) {
      auto fits = [&](const Walk& w) {
        if (w.interior.empty() || deg(g, w.end) < 3) return false;
        Vertex second = w.interior.size() >= 2 ? w.interior[1] : w.end;
        return deg(g, second) <= 3;
      };
      if (exact_thread(g, ws[i], 2) && fits(ws[(i + 1) % 3]) && fits(ws[(i + 2) % 3])) out.insert(2);
    }
    for (Vertex u : g.neighbors(v)) {
      if (deg(g, u) != 3) continue;
      std::set<Vertex> twos;
      for (const auto& w : walks(g, v, u)) twos.insert(w.interior.begin(), w.interior.end());
      for (const auto& w : walks(g, u, v)) twos.insert(w.interior.begin(), w.interior.end());
      if (twos.size() >= 7) out.insert(3);
    }
    // v as the middle vertex of u-v-w.
    auto nb = g.neighbors(v);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const int k = 3 - i - j;
        Vertex a = nb[i];
        Vertex b = nb[j];
        if (deg(g, a) != 3 || deg(g, b) != 3 || !exact_thread(g, ws[k], 2)) continue;
        auto two_two = [&](Vertex s) {
          auto sw = walks(g, s, v);
          return exact_thread(g, sw[0], 2) && exact_thread(g, sw[1], 2);
        };
        if (two_two(a) && two_two(b)) out.insert(4);
      }
    }
  }
  return out;
}

bool match_valid(const Graph& g, const lincol::ConfigMatch& m, int bound_m) {
  auto r = [&](const char* name) { return m.role(name); };
  auto half = [](int x) { return (x + 1) / 2; };
  if (m.lemma == LemmaId::kMad3) {
    Vertex u = r("u");
    switch (m.config) {
      case 1:
        return deg(g, u) == 2 && g.adjacent(u, r("v")) && g.adjacent(u, r("w")) && r("v") != r("w") &&
               half(deg(g, r("v"))) + half(deg(g, r("w"))) < half(bound_m) + 2;
      case 2: {
        std::set<Vertex> s{r("x"), r("v"), r("w")};
        return deg(g, u) == 3 && s.size() == 3 && g.adjacent(u, r("x")) && g.adjacent(u, r("v")) &&
               g.adjacent(u, r("w")) && deg(g, r("x")) == 2 && deg(g, r("v")) + deg(g, r("w")) <= 8;
      }
      case 3:
        return deg(g, u) == 3 && g.adjacent(u, r("v1")) && g.adjacent(u, r("v2")) && r("v1") != r("v2") &&
               deg(g, r("v1")) == 2 && deg(g, r("v2")) == 2;
      case 4:
      case 5: {
        std::set<Vertex> s;
        for (int i = 1; i <= 4; ++i) {
          Vertex x = r(("v" + std::to_string(i)).c_str());
          if (!g.adjacent(u, x) || deg(g, x) != 2) return false;
          s.insert(x);
        }
        if (m.config == 4) return deg(g, u) == 4 && s.size() == 4;
        return deg(g, u) == 5 && s.size() == 4 && g.adjacent(u, r("v5")) && deg(g, r("v5")) <= 3;
      }
    }
    return false;
  }
  if (m.lemma == LemmaId::kG5 && m.config == 1) {
    return deg(g, r("u")) == 2 && g.adjacent(r("u"), r("v")) && deg(g, r("v")) <= 5;
  }
  if (m.lemma == LemmaId::kMad125 && m.config == 1) {
    std::vector<Vertex> path{r("u"), r("u1"), r("u2"), r("u3")};
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!g.adjacent(path[i], path[i + 1])) return false;
    }
    return deg(g, r("u")) >= 3 && deg(g, r("u1")) == 2 && deg(g, r("u2")) == 2 && deg(g, r("u3")) == 2;
  }
  return true;
}

int connected_components(const Graph& g) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int count = g.vertex_count();
  for (auto [a, b] : g.edges()) {
    int ra = find(a);
    int rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && g.edge_count() == g.vertex_count() - 1 && connected_components(g) == 1;
}

Graph random_gnm(int n, int m, std::mt19937_64& rng) {
  std::vector<lincol::Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(m, all.size()));
  return Graph::from_edges(n, all);
}

Graph random_tree(int n, int max_degree, std::mt19937_64& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    std::vector<Vertex> open;
    for (int u = 0; u < v; ++u) {
      if (g.degree(u) < max_degree) open.push_back(u);
    }
    g.add_edge(open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)], v);
  }
  return g;
}

}  // namespace oracle
