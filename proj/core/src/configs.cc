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

#include "lincol/configs.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

#include "lincol/sparsity.h"

namespace lincol {
namespace {

using Roles = std::vector<std::pair<std::string, Vertex>>;

// Direction of a thread as seen from `from`, leaving through neighbor `via`.
struct Direction {
  std::vector<Vertex> interior;
  Vertex end = -1;

  int length() const { return static_cast<int>(interior.size()); }
};

Direction direction(const GraphView& g, Vertex from, Vertex via) {
  auto walk = walk_thread(g, from, via);
  return {std::move(walk.interior), walk.end};
}

// A k-thread leaving `from` in this direction: exactly k degree-2 vertices
// and a 3+ far end.
bool is_thread(const GraphView& g, const Direction& d, int k) {
  return d.length() == k && d.end >= 0 && g.degree(d.end) >= 3;
}

bool is_thread_at_least(const GraphView& g, const Direction& d, int k) {
  return d.length() >= k && d.end >= 0 && g.degree(d.end) >= 3;
}

// Vertex two steps from the start along the direction.
Vertex second_vertex(const Direction& d) { return d.length() >= 2 ? d.interior[1] : d.end; }

std::vector<Vertex> sorted_neighbors(const GraphView& g, Vertex v) {
  auto n = g.neighbors(v);
  std::sort(n.begin(), n.end());
  return n;
}

Vertex other_neighbor(const GraphView& g, Vertex two_vertex, Vertex known) {
  for (Vertex w : g.neighbors(two_vertex)) {
    if (w != known) return w;
  }
  return -1;
}

ConfigMatch make(LemmaId lemma, int config, Roles roles, int face = -1) {
  return ConfigMatch{lemma, config, std::move(roles), face};
}

void detect_g5(const GraphView& g, const RotationSystem& rot, std::vector<ConfigMatch>& out) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!g.alive(u) || g.degree(u) != 2) continue;
    auto nbrs = sorted_neighbors(g, u);
    for (int i = 0; i < 2; ++i) {
      if (g.degree(nbrs[i]) <= 5) {
        out.push_back(make(LemmaId::kG5, 1, {{"u", u}, {"v", nbrs[i]}, {"w", nbrs[1 - i]}}));
      }
    }
  }
  auto faces = faces_of(g, rot);
  for (int fi = 0; fi < static_cast<int>(faces.faces.size()); ++fi) {
    const auto& face = faces.faces[fi];
    if (face.degree() != 5) continue;
    auto verts = face.vertices();
    if (std::set<Vertex>(verts.begin(), verts.end()).size() != 5) continue;
    for (int i = 0; i < 5; ++i) {
      bool ok = g.degree(verts[i]) <= 5;
      for (int j = 1; j < 5 && ok; ++j) ok = g.degree(verts[(i + j) % 5]) == 3;
      if (!ok) continue;
      out.push_back(make(LemmaId::kG5, 2,
                         {{"u1", verts[(i + 1) % 5]},
                          {"u2", verts[(i + 2) % 5]},
                          {"u3", verts[(i + 3) % 5]},
                          {"u4", verts[(i + 4) % 5]},
                          {"x", verts[i]}},
                         fi));
      break;
    }
  }
}

void detect_mad3(const GraphView& g, int bound_m, std::vector<ConfigMatch>& out) {
  const LemmaId L = LemmaId::kMad3;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!g.alive(u)) continue;
    const int d = g.degree(u);
    auto nbrs = sorted_neighbors(g, u);
    if (d == 2) {
      if (ceil_half(g.degree(nbrs[0])) + ceil_half(g.degree(nbrs[1])) < ceil_half(bound_m) + 2) {
        out.push_back(make(L, 1, {{"u", u}, {"v", nbrs[0]}, {"w", nbrs[1]}}));
      }
    } else if (d == 3) {
      for (int i = 0; i < 3; ++i) {
        if (g.degree(nbrs[i]) != 2) continue;
        Vertex v = nbrs[(i + 1) % 3];
        Vertex w = nbrs[(i + 2) % 3];
        if (v > w) std::swap(v, w);
        if (g.degree(v) + g.degree(w) <= 8) {
          out.push_back(make(L, 2, {{"u", u}, {"x", nbrs[i]}, {"v", v}, {"w", w}}));
        }
      }
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          if (g.degree(nbrs[i]) == 2 && g.degree(nbrs[j]) == 2) {
            out.push_back(make(L, 3, {{"u", u}, {"v1", nbrs[i]}, {"v2", nbrs[j]}, {"v3", nbrs[3 - i - j]}}));
          }
        }
      }
    } else if (d == 4) {
      if (std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex x) { return g.degree(x) == 2; })) {
        out.push_back(make(L, 4, {{"u", u}, {"v1", nbrs[0]}, {"v2", nbrs[1]}, {"v3", nbrs[2]}, {"v4", nbrs[3]}}));
      }
    } else if (d == 5) {
      for (int fifth = 0; fifth < 5; ++fifth) {
        if (g.degree(nbrs[fifth]) > 3) continue;
        Roles roles{{"u", u}};
        bool ok = true;
        for (int i = 0, k = 1; i < 5 && ok; ++i) {
          if (i == fifth) continue;
          ok = g.degree(nbrs[i]) == 2 && g.degree(other_neighbor(g, nbrs[i], u)) <= 8;
          roles.emplace_back("v" + std::to_string(k++), nbrs[i]);
        }
        if (!ok) continue;
        roles.emplace_back("v5", nbrs[fifth]);
        out.push_back(make(L, 5, std::move(roles)));
      }
    }
  }
}

void add_thread_roles(Roles& roles, const std::string& base, const Direction& d, int depth) {
  static const char* kPrimes[] = {"", "p", "pp"};
  for (int i = 0; i < depth; ++i) {
    Vertex v = i < d.length() ? d.interior[i] : d.end;
    roles.emplace_back(base + kPrimes[i], v);
  }
}

void detect_mad125(const GraphView& g, std::vector<ConfigMatch>& out) {
  const LemmaId L = LemmaId::kMad125;
  for (const auto& t : find_threads(g, 3)) {
    if (g.degree(t.first) < 3 || g.degree(t.last) < 3) continue;
    Vertex u4 = t.length() > 3 ? t.interior[3] : t.last;
    out.push_back(make(L, 1,
                       {{"u", t.first}, {"u1", t.interior[0]}, {"u2", t.interior[1]}, {"u3", t.interior[2]}, {"u4", u4}}));
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!g.alive(u) || g.degree(u) != 3) continue;
    auto nbrs = sorted_neighbors(g, u);
    std::vector<Direction> dirs;
    for (Vertex x : nbrs) dirs.push_back(direction(g, u, x));

    // RC2
    for (int i = 0; i < 3; ++i) {
      if (!is_thread(g, dirs[i], 2)) continue;
      const Direction& a = dirs[(i + 1) % 3];
      const Direction& b = dirs[(i + 2) % 3];
      auto fits = [&](const Direction& d) {
        return is_thread_at_least(g, d, 1) && g.degree(second_vertex(d)) <= 3;
      };
      if (!fits(a) || !fits(b)) continue;
      const Direction& lo = a.interior[0] < b.interior[0] ? a : b;
      const Direction& hi = &lo == &a ? b : a;
      Roles roles{{"u", u}};
      add_thread_roles(roles, "u1", dirs[i], 3);
      roles.emplace_back("u2", lo.interior[0]);
      roles.emplace_back("u2p", second_vertex(lo));
      roles.emplace_back("u3", hi.interior[0]);
      roles.emplace_back("u3p", second_vertex(hi));
      out.push_back(make(L, 2, std::move(roles)));
    }

    // RC3, once per edge u-v with u < v.
    for (int i = 0; i < 3; ++i) {
      Vertex v = nbrs[i];
      if (v < u || g.degree(v) != 3) continue;
      std::vector<Direction> udirs;
      for (int j = 0; j < 3; ++j) {
        if (j != i) udirs.push_back(dirs[j]);
      }
      std::vector<Direction> vdirs;
      for (Vertex y : sorted_neighbors(g, v)) {
        if (y != u) vdirs.push_back(direction(g, v, y));
      }
      std::set<Vertex> twos;
      for (const auto* list : {&udirs, &vdirs}) {
        for (const auto& d : *list) twos.insert(d.interior.begin(), d.interior.end());
      }
      if (twos.size() < 7) continue;
      auto two_threads = [&](const std::vector<Direction>& ds) {
        return static_cast<int>(std::count_if(ds.begin(), ds.end(), [&](const Direction& d) { return is_thread(g, d, 2); }));
      };
      Vertex a = u;
      Vertex b = v;
      if (two_threads(udirs) != 2 && two_threads(vdirs) == 2) {
        std::swap(a, b);
        std::swap(udirs, vdirs);
      }
      Roles roles{{"u", a}, {"v", b}};
      if (two_threads(udirs) == 2 && two_threads(vdirs) >= 1 &&
          std::all_of(vdirs.begin(), vdirs.end(), [&](const Direction& d) { return is_thread_at_least(g, d, 1); })) {
        add_thread_roles(roles, "u1", udirs[0], 3);
        add_thread_roles(roles, "u2", udirs[1], 3);
        int k = is_thread(g, vdirs[0], 2) ? 0 : 1;
        add_thread_roles(roles, "v1", vdirs[k], 3);
        add_thread_roles(roles, "v2", vdirs[1 - k], 2);
      }
      out.push_back(make(L, 3, std::move(roles)));
    }

    // RC4 with u as the middle vertex w.
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const int k = 3 - i - j;
        Vertex a = nbrs[i];
        Vertex b = nbrs[j];
        if (g.degree(a) != 3 || g.degree(b) != 3 || !is_thread(g, dirs[k], 2)) continue;
        auto side = [&](Vertex s, Roles& roles, const std::string& name) {
          std::vector<Direction> ds;
          for (Vertex y : sorted_neighbors(g, s)) {
            if (y != u) ds.push_back(direction(g, s, y));
          }
          if (ds.size() != 2 || !is_thread(g, ds[0], 2) || !is_thread(g, ds[1], 2)) return false;
          roles.emplace_back(name, s);
          add_thread_roles(roles, name + "1", ds[0], 3);
          add_thread_roles(roles, name + "2", ds[1], 3);
          return true;
        };
        Roles roles;
        Roles vroles;
        if (!side(a, roles, "u") || !side(b, vroles, "v")) continue;
        roles.emplace_back("w", u);
        add_thread_roles(roles, "w1", dirs[k], 3);
        roles.insert(roles.end(), vroles.begin(), vroles.end());
        out.push_back(make(L, 4, std::move(roles)));
      }
    }
  }
}

std::vector<Vertex> role_vertices(const ConfigMatch& m) {
  std::vector<Vertex> out;
  for (const auto& r : m.roles) out.push_back(r.second);
  return out;
}

void require_embedding(const GraphView& g, const RotationSystem* embedding) {
  if (embedding == nullptr) throw EmbeddingError("lemma G5 needs an embedding");
  if (!is_plane_embedding(g, *embedding)) {
    throw EmbeddingError("rotation system is not a plane embedding (Euler formula fails)");
  }
}

}  // namespace

std::string_view to_string(LemmaId lemma) {
  switch (lemma) {
    case LemmaId::kG5: return "G5";
    case LemmaId::kMad3: return "MAD3";
    case LemmaId::kMad125: return "MAD125";
  }
  return "?";
}

LemmaId parse_lemma(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "g5") return LemmaId::kG5;
  if (lower == "mad3") return LemmaId::kMad3;
  if (lower == "mad125") return LemmaId::kMad125;
  throw std::invalid_argument("unknown lemma '" + std::string(text) + "' (expected g5, mad3 or mad125)");
}

Vertex ConfigMatch::role(std::string_view name) const {
  for (const auto& [n, v] : roles) {
    if (n == name) return v;
  }
  throw std::out_of_range("configuration " + tag() + " has no role '" + std::string(name) + "'");
}

bool ConfigMatch::has_role(std::string_view name) const {
  return std::any_of(roles.begin(), roles.end(), [&](const auto& r) { return r.first == name; });
}

std::string ConfigMatch::describe() const {
  std::ostringstream os;
  os << to_string(lemma) << '/' << tag();
  if (face >= 0) os << " face=" << face;
  for (const auto& [n, v] : roles) os << ' ' << n << '=' << v;
  return os.str();
}

std::vector<ConfigMatch> detect(const GraphView& g, LemmaId lemma, const RotationSystem* embedding,
                                const DetectOptions& options) {
  std::vector<ConfigMatch> out;
  switch (lemma) {
    case LemmaId::kG5:
      require_embedding(g, embedding);
      detect_g5(g, *embedding, out);
      break;
    case LemmaId::kMad3: {
      int m = g.max_degree();
      if (options.bound_m) {
        if (*options.bound_m < m) throw std::invalid_argument("bound M is below the maximum degree");
        m = *options.bound_m;
      }
      detect_mad3(g, m, out);
      break;
    }
    case LemmaId::kMad125:
      detect_mad125(g, out);
      break;
  }
  std::stable_sort(out.begin(), out.end(), [](const ConfigMatch& a, const ConfigMatch& b) {
    return std::make_tuple(a.config, role_vertices(a), a.face) < std::make_tuple(b.config, role_vertices(b), b.face);
  });
  return out;
}

namespace {

class Ledger {
 public:
  explicit Ledger(ChargeReport& report) : r_(report) {}

  void move(ChargeElement from, ChargeElement to, const Rational& amount, const char* rule) {
    if (amount.sign() == 0) return;
    at(from) -= amount;
    at(to) += amount;
    r_.transfers.push_back({from, to, amount, rule});
  }

 private:
  Rational& at(ChargeElement e) {
    return e.kind == ChargeElement::Kind::kVertex ? r_.vertex_final[e.id] : r_.face_final[e.id];
  }

  ChargeReport& r_;
};

ChargeElement vtx(Vertex v) { return {ChargeElement::Kind::kVertex, v}; }
ChargeElement fce(int f) { return {ChargeElement::Kind::kFace, f}; }

void discharge_g5(const GraphView& g, ChargeReport& r) {
  const int nf = static_cast<int>(r.faces.faces.size());
  r.face_initial.resize(nf);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.alive(v)) r.vertex_initial[v] = Rational(3 * g.degree(v) - 10, 2);
  }
  for (int f = 0; f < nf; ++f) r.face_initial[f] = Rational(r.faces.faces[f].degree() - 5);
  r.vertex_final = r.vertex_initial;
  r.face_final = r.face_initial;
  Ledger ledger(r);
  // One transfer per (vertex, face) pair, scaled by how often the vertex
  // occurs on the face boundary.
  auto occurrences = [&](int f) {
    std::vector<std::pair<Vertex, int>> counts;
    for (Vertex v : r.faces.faces[f].vertices()) {
      auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& c) { return c.first == v; });
      if (it == counts.end()) {
        counts.emplace_back(v, 1);
      } else {
        ++it->second;
      }
    }
    return counts;
  };
  for (int f = 0; f < nf; ++f) {
    for (const auto& [v, times] : occurrences(f)) {
      const int d = g.degree(v);
      if (d >= 4) ledger.move(vtx(v), fce(f), Rational(3 * d - 10, 2 * d) * times, "R1");
    }
  }
  for (int f = 0; f < nf; ++f) {
    for (const auto& [v, times] : occurrences(f)) {
      const int d = g.degree(v);
      if (d == 2) ledger.move(fce(f), vtx(v), Rational(times), "R2");
      if (d == 3) ledger.move(fce(f), vtx(v), Rational(times, 6), "R2");
    }
  }
}

void discharge_mad3(const GraphView& g, ChargeReport& r) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.alive(v)) r.vertex_initial[v] = Rational(g.degree(v) - 3);
  }
  r.vertex_final = r.vertex_initial;
  Ledger ledger(r);
  std::vector<Rational> received(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.alive(v)) continue;
    const int d = g.degree(v);
    for (Vertex x : sorted_neighbors(g, v)) {
      const int dx = g.degree(x);
      if (d == 4 && dx == 2) {
        ledger.move(vtx(v), vtx(x), Rational(1, 3), "R1");
      } else if (d == 5 && (dx == 2 || dx == 3)) {
        // For a 2-vertex the test looks at its neighbor other than v.
        bool heavy = dx == 2 && g.degree(other_neighbor(g, x, v)) <= 8;
        Rational amount = heavy ? Rational(3, 7) : Rational(5, 14);
        ledger.move(vtx(v), vtx(x), amount, "R2");
        if (dx == 3) received[x] += amount;
      } else if (d >= 6 && (dx == 2 || dx == 3)) {
        Rational amount(d - 3, d);
        ledger.move(vtx(v), vtx(x), amount, "R3");
        if (dx == 3) received[x] += amount;
      }
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.alive(v) || g.degree(v) != 3 || received[v].sign() == 0) continue;
    std::vector<Vertex> twos;
    for (Vertex x : sorted_neighbors(g, v)) {
      if (g.degree(x) == 2) twos.push_back(x);
    }
    if (twos.empty()) continue;
    if (twos.size() > 1) r.ambiguous_forwarding.push_back(v);
    ledger.move(vtx(v), vtx(twos.front()), received[v], "R4");
  }
}

void discharge_mad125(const GraphView& g, ChargeReport& r) {
  const Rational fifth(1, 5);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.alive(v)) r.vertex_initial[v] = Rational(5 * g.degree(v) - 12, 5);
  }
  r.vertex_final = r.vertex_initial;
  Ledger ledger(r);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.alive(v) || g.degree(v) != 2) continue;
    auto nbrs = sorted_neighbors(g, v);
    for (Vertex start : nbrs) {
      auto d = direction(g, v, start);
      if (d.end < 0) {
        r.cycle_component_vertices.push_back(v);
        break;
      }
      ledger.move(vtx(d.end), vtx(v), fifth, "R1");
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.alive(v) || g.degree(v) != 3) continue;
    auto nbrs = sorted_neighbors(g, v);
    std::vector<Direction> dirs;
    for (Vertex x : nbrs) dirs.push_back(direction(g, v, x));
    int two_threads = 0;
    for (const auto& d : dirs) two_threads += is_thread(g, d, 2) ? 1 : 0;
    if (two_threads == 2) {
      for (Vertex x : nbrs) {
        if (g.degree(x) >= 3) ledger.move(vtx(x), vtx(v), fifth, "R2");
      }
    }
    for (const auto& d : dirs) {
      if (is_thread(g, d, 1) && d.end != v && g.degree(d.end) >= 4) ledger.move(vtx(d.end), vtx(v), fifth, "R3");
    }
  }
}

}  // namespace

ChargeReport discharge(const GraphView& g, LemmaId lemma, const RotationSystem* embedding) {
  if (g.live_count() > 0 && g.min_degree() < 2) {
    throw HypothesisError("discharging needs minimum degree >= 2 (found " + std::to_string(g.min_degree()) + ")");
  }
  ChargeReport r;
  r.lemma = lemma;
  r.vertex_initial.assign(g.vertex_count(), Rational(0));
  switch (lemma) {
    case LemmaId::kG5:
      require_embedding(g, embedding);
      r.faces = faces_of(g, *embedding);
      discharge_g5(g, r);
      break;
    case LemmaId::kMad3:
      discharge_mad3(g, r);
      break;
    case LemmaId::kMad125:
      discharge_mad125(g, r);
      break;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.alive(v)) continue;
    r.sum_initial += r.vertex_initial[v];
    r.sum_final += r.vertex_final[v];
    if (r.vertex_final[v].sign() < 0) r.negative.push_back(vtx(v));
  }
  for (std::size_t f = 0; f < r.face_initial.size(); ++f) {
    r.sum_initial += r.face_initial[f];
    r.sum_final += r.face_final[f];
    if (r.face_final[f].sign() < 0) r.negative.push_back(fce(static_cast<int>(f)));
  }
  return r;
}

AuditVerdict audit(const Graph& g, LemmaId lemma, const RotationSystem* embedding, const DetectOptions& options) {
  AuditVerdict verdict;
  verdict.lemma = lemma;
  auto& hyp = verdict.hypotheses;
  const int delta_min = g.min_degree();
  const int delta_max = g.max_degree();
  hyp.push_back({"min-degree>=2", delta_min >= 2, "min degree " + std::to_string(delta_min)});
  // Detection needs a plane embedding for G5; discharging also needs
  // min degree >= 2. Without them the verdict rests on the hypotheses.
  bool embedded = lemma != LemmaId::kG5;
  switch (lemma) {
    case LemmaId::kG5: {
      bool have = embedding != nullptr;
      std::string problem = have ? "supplied" : "missing";
      if (have) {
        try {
          embedding->validate(g);
        } catch (const EmbeddingError& e) {
          have = false;
          problem = e.what();
        }
      }
      hyp.push_back({"embedding", have, problem});
      if (have) {
        bool plane = is_plane_embedding(g, *embedding);
        hyp.push_back({"plane-embedding", plane, plane ? "V-E+F=2 per component" : "Euler formula fails"});
        embedded = plane;
      }
      int gi = girth(g);
      hyp.push_back({"girth>=5", gi >= 5, gi == kInfiniteGirth ? "girth infinite" : "girth " + std::to_string(gi)});
      break;
    }
    case LemmaId::kMad3: {
      auto mad = max_average_degree(g).density;
      hyp.push_back({"mad<3", mad < Rational(3), "mad " + mad.str()});
      if (options.bound_m) {
        bool ok = *options.bound_m >= 9 && delta_max <= *options.bound_m;
        hyp.push_back({"M>=9 and max-degree<=M", ok,
                       "M " + std::to_string(*options.bound_m) + ", max degree " + std::to_string(delta_max)});
      } else {
        hyp.push_back({"max-degree>=9", delta_max >= 9, "max degree " + std::to_string(delta_max)});
      }
      break;
    }
    case LemmaId::kMad125: {
      auto mad = max_average_degree(g).density;
      hyp.push_back({"mad<12/5", mad < Rational(12, 5), "mad " + mad.str()});
      break;
    }
  }
  verdict.charges.lemma = lemma;
  if (embedded) verdict.matches = detect(g, lemma, embedding, options);
  if (embedded && delta_min >= 2) verdict.charges = discharge(g, lemma, embedding);
  if (lemma == LemmaId::kMad125) {
    bool none = verdict.charges.cycle_component_vertices.empty();
    hyp.push_back({"no-cycle-components", none, none ? "none" : "a component is a plain cycle"});
  }
  verdict.hypotheses_hold =
      std::all_of(hyp.begin(), hyp.end(), [](const HypothesisCheck& h) { return h.holds; });
  verdict.consistent =
      !(verdict.hypotheses_hold && verdict.matches.empty() && !verdict.charges.negative.empty());
  return verdict;
}

}  // namespace lincol
