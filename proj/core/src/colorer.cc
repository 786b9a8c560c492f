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

#include "lincol/colorer.h"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "lincol/sparsity.h"

namespace lincol {
namespace {

using Colors = std::vector<Color>;

Colors minus(Colors a, const Colors& b) {
  std::erase_if(a, [&](Color c) { return std::find(b.begin(), b.end(), c) != b.end(); });
  return a;
}

Colors truncated(Colors a, std::size_t k) {
  if (a.size() > k) a.resize(k);
  return a;
}

bool has(const Colors& a, Color c) { return std::find(a.begin(), a.end(), c) != a.end(); }

Colors joined(Colors a, const Colors& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<Vertex> concat(std::initializer_list<std::vector<Vertex>> parts) {
  std::vector<Vertex> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

class StepFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string name(Vertex v) { return std::to_string(v); }

// Extends a partial coloring onto the vertices of one step. Color 0 marks
// an uncolored vertex; dead vertices are ignored.
class Extender {
 public:
  Extender(const GraphView& view, std::vector<Color>& col, const ListAssignment& lists, int& rejected)
      : view_(view), col_(col), lists_(lists), rejected_(rejected) {}

  void extend(ColorStep& step);

 private:
  Color c(Vertex v) const { return col_[v]; }
  Colors list(Vertex v) const { return lists_.at(v); }

  // Colored live neighbors of y other than `skip`.
  std::vector<Vertex> others(Vertex y, Vertex skip) const {
    std::vector<Vertex> out;
    for (Vertex z : view_.neighbors(y)) {
      if (z != skip && col_[z] != 0) out.push_back(z);
    }
    return out;
  }

  Colors colors_of(const std::vector<Vertex>& vs) const {
    Colors out;
    for (Vertex v : vs) {
      if (col_[v] != 0) out.push_back(col_[v]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Colors carried by at least two entries of the multiset `vs`.
  Colors repeated(const std::vector<Vertex>& vs) const {
    std::map<Color, int> count;
    for (Vertex v : vs) {
      if (col_[v] != 0) ++count[col_[v]];
    }
    Colors out;
    for (const auto& [color, k] : count) {
      if (k >= 2) out.push_back(color);
    }
    return out;
  }

  // L(x) minus c(y) and the colors repeated among y's other neighbors: what
  // is left for a vertex x whose only colored neighbor is y.
  Colors behind(Vertex x, Vertex y) const { return minus(list(x), joined({c(y)}, repeated(others(y, x)))); }

  bool valid_at(Vertex v) const { return locally_linear(view_, col_, v); }

  Color pick(Vertex v, const Colors& candidates) {
    for (Color candidate : candidates) {
      col_[v] = candidate;
      if (valid_at(v)) return candidate;
      ++rejected_;
    }
    col_[v] = 0;
    throw StepFailure("no admissible color for vertex " + name(v));
  }

  bool assign(std::initializer_list<std::pair<Vertex, Color>> colors) {
    for (const auto& [v, color] : colors) col_[v] = color;
    bool ok = std::all_of(colors.begin(), colors.end(), [&](const auto& p) { return valid_at(p.first); });
    if (!ok) {
      for (const auto& [v, color] : colors) col_[v] = 0;
      ++rejected_;
    }
    return ok;
  }

  // First pair (a, b) in lexicographic order accepted by `allowed` and the
  // local check.
  template <typename Pred>
  bool assign_pair(Vertex x, const Colors& xs, Vertex y, const Colors& ys, Pred allowed) {
    for (Color a : xs) {
      for (Color b : ys) {
        if (allowed(a, b) && assign({{x, a}, {y, b}})) return true;
      }
    }
    return false;
  }

  void pendant(ColorStep& step);
  void thread_middle(Vertex u, Vertex u1, Vertex u2, Vertex u3);
  void g5_rc2(ColorStep& step);
  void g5_rc1(ColorStep& step);
  void mad3_rc1(ColorStep& step);
  void mad3_rc2(ColorStep& step);
  void mad3_rc3(ColorStep& step);
  void mad3_star(ColorStep& step, bool fifth);
  void mad125_rc2(ColorStep& step);
  void mad125_rc3(ColorStep& step);
  void mad125_rc4(ColorStep& step);

  const GraphView& view_;
  std::vector<Color>& col_;
  const ListAssignment& lists_;
  int& rejected_;
  std::vector<Vertex> touched_;
};

void Extender::pendant(ColorStep& step) {
  Vertex u = step.deleted[0];
  auto nbrs = view_.neighbors(u);
  if (nbrs.empty()) {
    pick(u, list(u));
    return;
  }
  pick(u, behind(u, nbrs[0]));
}

// Colors u2 in the middle of u - u1 - u2 - u3 where u1 and u3 have degree 2.
void Extender::thread_middle(Vertex u, Vertex u1, Vertex u2, Vertex u3) {
  if (c(u1) == c(u3)) {
    pick(u2, minus(list(u2), {c(u1), c(u)}));
  } else {
    pick(u2, minus(list(u2), {c(u1), c(u3)}));
  }
}

// Any color repeated in N(v) and N(w) together is forbidden, so the count is
// at most floor((d(v) + d(w)) / 2) + 1.
void Extender::g5_rc1(ColorStep& step) {
  const auto& m = *step.match;
  Vertex u = m.role("u"), v = m.role("v"), w = m.role("w");
  Colors forbid = joined({c(v), c(w)}, repeated(concat({others(v, u), others(w, u)})));
  step.forbidden = static_cast<int>(forbid.size());
  step.forbidden_bound = (view_.degree(v) + view_.degree(w)) / 2 + 1;
  pick(u, minus(list(u), forbid));
}

void Extender::g5_rc2(ColorStep& step) {
  const auto& m = *step.match;
  Vertex u1 = m.role("u1"), u2 = m.role("u2"), u3 = m.role("u3"), u4 = m.role("u4");
  auto off_face = [&](Vertex x, Vertex a, Vertex b) {
    for (Vertex y : view_.neighbors(x)) {
      if (y != a && y != b) return y;
    }
    throw StepFailure("vertex " + name(x) + " has no neighbor off the face");
  };
  Vertex v2 = off_face(u2, u1, u3);
  Vertex v3 = off_face(u3, u2, u4);
  Colors l2 = minus(list(u2), joined({c(u1), c(v2)}, repeated(concat({others(u1, u2), others(v2, u2), {u4, v3}}))));
  if (c(u1) == c(v2)) {
    Colors l3 = minus(list(u3), joined({c(u4), c(v3)}, repeated(concat({others(u4, u3), others(v3, u3), {u1, v2}}))));
    pick(u3, l3);
    pick(u2, minus(l2, {c(u3)}));
  } else {
    pick(u2, l2);
    Colors l3 = minus(list(u3), joined({c(v3), c(u4)}, repeated(concat({others(u4, u3), others(v3, u3)}))));
    pick(u3, minus(l3, {c(u2)}));
  }
}

// u has degree 2 with neighbors v and w. Besides c(v) and c(w), a color is
// forbidden when it repeats among the other neighbors of v (or of w), or,
// if c(v) = c(w), when it appears around both, closing a two-colored cycle.
void Extender::mad3_rc1(ColorStep& step) {
  const auto& m = *step.match;
  Vertex u = m.role("u"), v = m.role("v"), w = m.role("w");
  Colors forbid;
  if (c(v) != c(w)) {
    forbid = joined(joined({c(v), c(w)}, repeated(others(v, u))), repeated(others(w, u)));
  } else {
    forbid = joined({c(v)}, repeated(concat({others(v, u), others(w, u)})));
  }
  step.forbidden = static_cast<int>(forbid.size());
  step.forbidden_bound = ceil_half(view_.degree(v)) + ceil_half(view_.degree(w));
  pick(u, minus(list(u), forbid));
}

void Extender::mad3_rc2(ColorStep& step) {
  const auto& m = *step.match;
  Vertex u = m.role("u"), x = m.role("x"), v = m.role("v"), w = m.role("w");
  if (c(x) == c(v) && c(v) == c(w)) {
    // Recolor the 2-vertex; in G - u it hangs off y alone.
    Vertex y = others(x, u).at(0);
    col_[x] = 0;
    pick(x, minus(behind(x, y), {c(v)}));
    step.recolored = true;
    touched_.push_back(x);
  }
  Colors forbid = joined({c(x), c(v), c(w)}, repeated(concat({others(x, u), others(v, u), others(w, u)})));
  pick(u, minus(list(u), forbid));
}

void Extender::mad3_rc3(ColorStep& step) {
  const auto& m = *step.match;
  Vertex u = m.role("u"), v1 = m.role("v1"), v2 = m.role("v2"), v3 = m.role("v3");
  Vertex w1 = others(v1, u).at(0);
  Vertex w2 = others(v2, u).at(0);
  Colors lv1 = behind(v1, w1);
  Colors lv2 = behind(v2, w2);
  Colors lu = behind(u, v3);
  const Color cw1 = c(w1), cw2 = c(w2), cv3 = c(v3);
  if (lu.size() == 2 && cw1 != cw2 && has(lu, cw1) && has(lu, cw2)) {
    pick(u, {cw1});
    pick(v1, minus(lv1, {cv3}));
    pick(v2, minus(lv2, {cw1}));
    return;
  }
  for (Color cu : minus(lu, {cw1, cw2})) {
    if (!assign({{u, cu}})) continue;
    if (assign_pair(v1, minus(lv1, {cu}), v2, minus(lv2, {cu}),
                    [&](Color a, Color b) { return !(a == b && b == cv3); })) {
      return;
    }
    col_[u] = 0;
  }
  // Every choice gave c(v1) = c(v2) = c(v3): L'(v1) = L'(v2) = {c(v3), c1}.
  Colors rest = minus(lv1, {cv3});
  if (rest.empty()) throw StepFailure("RC3: L'(v1) has no color besides c(v3)");
  const Color c1 = rest[0];
  if (cw1 != cw2) {
    for (auto [vi, wi, vo] : {std::tuple{v1, w1, v2}, std::tuple{v2, w2, v1}}) {
      if (has(lu, c(wi)) && assign({{u, c(wi)}, {vi, c1}, {vo, cv3}})) return;
    }
    throw StepFailure("RC3: no c(wi) in L'(u) gives a linear coloring");
  }
  auto around = [&](Vertex wi, Vertex vi) { return colors_of(others(wi, vi)); };
  bool c1_on_both = has(around(w1, v1), c1) && has(around(w2, v2), c1);
  if (!c1_on_both && assign({{u, cw1}, {v1, c1}, {v2, c1}})) return;
  bool cv3_on_both = has(around(w1, v1), cv3) && has(around(w2, v2), cv3);
  if (!cv3_on_both) {
    if (!has(around(w1, v1), cv3) && assign({{u, cw1}, {v1, cv3}, {v2, c1}})) return;
    if (assign({{u, cw1}, {v1, c1}, {v2, cv3}})) return;
  }
  throw StepFailure("RC3: both sub-branches blocked");
}

// RC4 (fifth = false) and RC5: four 2-neighbors v1..v4 of u.
void Extender::mad3_star(ColorStep& step, bool fifth) {
  const auto& m = *step.match;
  Vertex u = m.role("u");
  std::vector<Vertex> v, w;
  std::vector<Colors> lv;
  for (int i = 1; i <= 4; ++i) {
    v.push_back(m.role("v" + std::to_string(i)));
    w.push_back(others(v.back(), u).at(0));
    lv.push_back(behind(v.back(), w.back()));
  }
  Colors lu = list(u);
  if (fifth) {
    Vertex v5 = m.role("v5");
    lu = behind(u, v5);
    for (auto& l : lv) l = minus(l, {c(v5)});
  }
  // Any coloring of the v_i using each color at most twice falls under one
  // of the proof's three cases for u. The proof leaves the colors free; take
  // the lexicographically first one that passes the local checks and leaves
  // u a color. Shared outer neighbors w_i can rule out the first choices.
  auto color_u = [&]() {
    Colors forbid;
    for (int i = 0; i < 4; ++i) forbid.push_back(c(v[i]));
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (c(v[i]) == c(v[j])) forbid.push_back(c(w[i]));
      }
    }
    for (Color x : minus(lu, forbid)) {
      if (assign({{u, x}})) return true;
    }
    return false;
  };
  std::map<Color, int> uses;
  std::function<bool(int)> place = [&](int i) {
    if (i == 4) return color_u();
    for (Color x : lv[i]) {
      if (uses[x] == 2 || !assign({{v[i], x}})) continue;
      ++uses[x];
      if (place(i + 1)) return true;
      --uses[x];
      col_[v[i]] = 0;
    }
    return false;
  };
  if (!place(0)) throw StepFailure("no admissible coloring of u and its 2-neighbors");
}

void Extender::mad125_rc2(ColorStep& step) {
  const auto& m = *step.match;
  Vertex u = m.role("u"), u1 = m.role("u1"), u1p = m.role("u1p"), u1pp = m.role("u1pp");
  Vertex u2 = m.role("u2"), u2p = m.role("u2p"), u3 = m.role("u3"), u3p = m.role("u3p");
  Colors l1 = behind(u1, u1p);
  Colors l2 = behind(u2, u2p);
  Colors l3 = behind(u3, u3p);
  if (l2.empty() || l3.empty()) throw StepFailure("RC2: L'(u2) or L'(u3) is empty");
  if (joined(l2, l3).size() >= 2) {
    if (!assign_pair(u2, l2, u3, l3, [](Color a, Color b) { return a != b; })) {
      throw StepFailure("RC2: no distinct colors for u2, u3");
    }
    pick(u, minus(list(u), {c(u2), c(u3)}));
    if (c(u) != c(u1p)) {
      pick(u1, minus(l1, {c(u)}));
    } else {
      pick(u1, minus(l1, {c(u1pp)}));
    }
    return;
  }
  const Color a = l2[0];
  if (!assign({{u2, a}, {u3, a}})) throw StepFailure("RC2: forced color on u2, u3 fails");
  pick(u1, minus(list(u1), {a, c(u1p)}));
  // u is adjacent to u1 as well, so its color also avoids c(u1).
  pick(u, minus(list(u), {a, c(u1)}));
}

void Extender::mad125_rc3(ColorStep& step) {
  const auto& m = *step.match;
  if (!m.has_role("u1")) throw StepFailure("RC3 match without thread roles");
  Vertex u = m.role("u"), v = m.role("v");
  Vertex u1 = m.role("u1"), u1p = m.role("u1p");
  Vertex u2 = m.role("u2"), u2p = m.role("u2p"), u2pp = m.role("u2pp");
  Vertex v1 = m.role("v1"), v1p = m.role("v1p"), v1pp = m.role("v1pp");
  Vertex v2 = m.role("v2");
  Colors lu1 = truncated(behind(u1, u1p), 2);
  Colors lu2 = truncated(behind(u2, u2p), 2);
  Colors lv1 = truncated(behind(v1, v1p), 2);
  Colors lu = truncated(list(u), 3);
  Colors lv = truncated(behind(v, v2), 2);
  pick(u, minus(lu, lu1));
  if (c(u) == c(v2)) {
    pick(v1, minus(lv1, {c(u)}));
    pick(v, minus(lv, {c(v1)}));
  } else {
    pick(v, minus(lv, {c(u)}));
    if (c(v) != c(v1p)) {
      pick(v1, minus(lv1, {c(v)}));
    } else {
      pick(v1, minus(lv1, {c(v1pp)}));
    }
  }
  pick(u1, minus(lu1, {c(v)}));
  if (c(u) == c(u2p)) {
    pick(u2, minus(lu2, {c(u2pp)}));
  } else {
    pick(u2, minus(lu2, {c(u)}));
  }
}

void Extender::mad125_rc4(ColorStep& step) {
  const auto& m = *step.match;
  struct Side {
    Vertex s, s1, s1p, s1pp, s2, s2p;
    Colors ls, ls1, ls2;
    enum { kDone, kDelayed, kOpen } mode = kDone;
  };
  auto side = [&](const std::string& k) {
    Side out{m.role(k), m.role(k + "1"), m.role(k + "1p"), m.role(k + "1pp"), m.role(k + "2"), m.role(k + "2p"), {}, {}, {}};
    out.ls = truncated(list(out.s), 3);
    out.ls1 = truncated(behind(out.s1, out.s1p), 2);
    out.ls2 = truncated(behind(out.s2, out.s2p), 2);
    return out;
  };
  Side su = side("u");
  Side sv = side("v");
  Vertex w = m.role("w"), w1 = m.role("w1"), w1p = m.role("w1p");
  Colors lw = truncated(list(w), 3);
  Colors lw1 = truncated(behind(w1, w1p), 2);

  auto begin = [&](Side& s) {
    if (c(s.s1p) == c(s.s2p)) {
      const Color p = c(s.s1p);
      if (!has(s.ls, p)) {
        if (!assign_pair(s.s1, s.ls1, s.s2, s.ls2, [](Color a, Color b) { return a != b; })) {
          throw StepFailure("RC4 subcase (i): no distinct colors for the thread neighbors");
        }
        pick(s.s, minus(s.ls, {p, c(s.s1), c(s.s2)}));
        s.mode = Side::kDone;
      } else {
        pick(s.s, {p});
        s.mode = Side::kDelayed;
      }
    } else {
      pick(s.s, minus(s.ls, {c(s.s1p), c(s.s2p)}));
      s.mode = Side::kOpen;
    }
  };
  auto finish = [&](Side& s) {
    if (s.mode == Side::kDelayed) {
      pick(s.s1, minus(s.ls1, {c(s.s), c(s.s1pp)}));
      pick(s.s2, minus(s.ls2, {c(s.s), c(w)}));
    } else if (s.mode == Side::kOpen) {
      const Color cw = c(w);
      if (assign_pair(s.s1, minus(s.ls1, {c(s.s)}), s.s2, minus(s.ls2, {c(s.s)}),
                      [&](Color a, Color b) { return a != cw || b != cw; })) {
        return;
      }
      // Both thread neighbors take the old color of s; s gets a new one.
      const Color old = c(s.s);
      col_[s.s] = 0;
      col_[s.s1] = old;
      col_[s.s2] = old;
      pick(s.s, minus(s.ls, {old, c(w1), cw}));
      step.recolored = true;
    }
  };

  begin(su);
  begin(sv);
  if (c(su.s) == c(sv.s)) {
    pick(w1, minus(lw1, {c(su.s)}));
    pick(w, minus(lw, {c(w1), c(su.s)}));
  } else {
    pick(w, minus(lw, {c(su.s), c(sv.s)}));
    pick(w1, minus(lw1, {c(w)}));
  }
  finish(su);
  finish(sv);
}

void Extender::extend(ColorStep& step) {
  touched_ = step.deleted;
  if (step.action == "isolated" || step.action == "pendant") {
    pendant(step);
  } else if (step.action == "cycle") {
    Vertex u2 = step.deleted[0];
    auto nbrs = view_.neighbors(u2);
    std::sort(nbrs.begin(), nbrs.end());
    Vertex u1 = nbrs.at(0), u3 = nbrs.at(1);
    Vertex u = others(u1, u2).at(0);
    thread_middle(u, u1, u2, u3);
  } else {
    const auto& m = *step.match;
    switch (m.lemma) {
      case LemmaId::kG5:
        m.config == 1 ? g5_rc1(step) : g5_rc2(step);
        break;
      case LemmaId::kMad3:
        switch (m.config) {
          case 1: mad3_rc1(step); break;
          case 2: mad3_rc2(step); break;
          case 3: mad3_rc3(step); break;
          default: mad3_star(step, m.config == 5); break;
        }
        break;
      case LemmaId::kMad125:
        switch (m.config) {
          case 1: thread_middle(m.role("u"), m.role("u1"), m.role("u2"), m.role("u3")); break;
          case 2: mad125_rc2(step); break;
          case 3: mad125_rc3(step); break;
          default: mad125_rc4(step); break;
        }
        break;
    }
  }
  for (Vertex t : touched_) {
    if (col_[t] == 0 || !lists_.contains(t, col_[t]) || !valid_at(t)) {
      throw StepFailure("local check failed at vertex " + name(t));
    }
  }
}

// Vertices a configuration removes before recursing.
std::vector<Vertex> deleted_set(const ConfigMatch& m) {
  std::vector<std::string> names;
  switch (m.lemma) {
    case LemmaId::kG5:
      names = m.config == 1 ? std::vector<std::string>{"u"} : std::vector<std::string>{"u2", "u3"};
      break;
    case LemmaId::kMad3:
      if (m.config <= 2) names = {"u"};
      if (m.config == 3) names = {"u", "v1", "v2"};
      if (m.config >= 4) names = {"u", "v1", "v2", "v3", "v4"};
      break;
    case LemmaId::kMad125:
      if (m.config == 1) names = {"u2"};
      if (m.config == 2) names = {"u", "u1", "u2", "u3"};
      if (m.config == 3) names = {"u", "v", "u1", "u2", "v1"};
      if (m.config == 4) names = {"u", "u1", "u2", "v", "v1", "v2", "w", "w1"};
      break;
  }
  std::vector<Vertex> out;
  for (const auto& n : names) out.push_back(m.role(n));
  return out;
}

// The RC3 and RC4 extensions assume the core and thread vertices are all
// different, as drawn in the proofs; matches where two of the threads are
// one and the same are skipped.
bool usable(const GraphView& g, const ConfigMatch& m, const std::vector<Vertex>& deleted) {
  if (m.lemma == LemmaId::kMad125 && m.config == 3 && !m.has_role("u1")) return false;
  std::set<Vertex> distinct(deleted.begin(), deleted.end());
  if (distinct.size() != deleted.size()) return false;
  if (m.lemma != LemmaId::kMad125 || m.config < 3) return true;
  std::vector<Vertex> inner;
  for (const auto& [role, v] : m.roles) {
    if (role == "u" || role == "v" || role == "w" || g.degree(v) == 2) inner.push_back(v);
  }
  std::set<Vertex> inner_set(inner.begin(), inner.end());
  return inner_set.size() == inner.size();
}

std::string step_tag(const ConfigMatch& m) { return std::string(to_string(m.lemma)) + "/" + m.tag(); }

class Reducer {
 public:
  Reducer(GraphView& view, const BoundParameter& bound, const RotationSystem* embedding)
      : view_(view), bound_(bound), embedding_(embedding) {}

  ColorStep next() {
    for (Vertex v = 0; v < view_.vertex_count(); ++v) {
      if (view_.alive(v) && view_.degree(v) == 0) return {"isolated", std::nullopt, {v}};
    }
    for (Vertex v = 0; v < view_.vertex_count(); ++v) {
      if (view_.alive(v) && view_.degree(v) == 1) return {"pendant", std::nullopt, {v}};
    }
    DetectOptions options;
    if (bound_.theorem == LemmaId::kMad3) options.bound_m = bound_.m;
    for (auto& m : detect(view_, bound_.theorem, embedding_, options)) {
      auto deleted = deleted_set(m);
      if (usable(view_, m, deleted)) {
        std::string tag = step_tag(m);
        return {tag, std::move(m), std::move(deleted)};
      }
    }
    // Plain cycle components carry no thread; colored like a 3+-thread.
    if (bound_.theorem == LemmaId::kMad125) {
      if (auto v = cycle_vertex()) return {"cycle", std::nullopt, {*v}};
    }
    throw StepFailure("no reducible configuration in the remaining graph (" + std::to_string(view_.live_count()) +
                      " vertices)");
  }

 private:
  std::optional<Vertex> cycle_vertex() const {
    std::vector<char> seen(view_.vertex_count(), 0);
    for (Vertex s = 0; s < view_.vertex_count(); ++s) {
      if (!view_.alive(s) || seen[s]) continue;
      std::vector<Vertex> stack{s};
      seen[s] = 1;
      bool all_two = true;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        all_two = all_two && view_.degree(x) == 2;
        for (Vertex y : view_.neighbors(x)) {
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
      if (all_two) return s;
    }
    return std::nullopt;
  }

  GraphView& view_;
  BoundParameter bound_;
  const RotationSystem* embedding_;
};

}  // namespace

int required_list_size(const BoundParameter& bound) {
  switch (bound.theorem) {
    case LemmaId::kG5: return ceil_half(bound.m) + 4;
    case LemmaId::kMad3: return ceil_half(bound.m) + 2;
    case LemmaId::kMad125: return ceil_half(bound.m) + 1;
  }
  return 0;
}

void check_hypotheses(const Graph& g, const BoundParameter& bound, const ListAssignment& lists,
                      const RotationSystem* embedding) {
  auto fail = [](const std::string& what) { throw HypothesisError("hypothesis failed: " + what); };
  if (lists.vertex_count() != g.vertex_count()) fail("one list per vertex");
  if (g.vertex_count() == 0) return;
  if (g.max_degree() > bound.m) fail("max-degree<=M (max degree " + std::to_string(g.max_degree()) + ")");
  switch (bound.theorem) {
    case LemmaId::kG5: {
      if (embedding == nullptr) fail("embedding");
      try {
        embedding->validate(g);
      } catch (const EmbeddingError& e) {
        fail(std::string("embedding (") + e.what() + ")");
      }
      if (!is_plane_embedding(g, *embedding)) fail("plane-embedding");
      if (girth(g) < 5) fail("girth>=5");
      break;
    }
    case LemmaId::kMad3:
      if (bound.m < 9) fail("M>=9");
      if (!mad_below(g, Rational(3))) fail("mad<3");
      break;
    case LemmaId::kMad125:
      if (bound.m < 3) fail("M>=3");
      if (!mad_below(g, Rational(12, 5))) fail("mad<12/5");
      break;
  }
  if (lists.min_size() < required_list_size(bound)) {
    fail("list-size>=" + std::to_string(required_list_size(bound)));
  }
}

ColorOutcome color_traced(const Graph& g, const BoundParameter& bound, const ListAssignment& lists,
                          const RotationSystem* embedding, const ColorOptions& options) {
  if (lists.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("list assignment size does not match the graph");
  }
  if (options.check_hypotheses) check_hypotheses(g, bound, lists, embedding);
  ColorOutcome out;
  GraphView view(g);
  std::vector<Color> col(g.vertex_count(), 0);
  std::size_t extended = 0;
  bool extending = false;
  try {
    Reducer reducer(view, bound, embedding);
    while (view.live_count() > 0) {
      ColorStep step = reducer.next();
      for (Vertex v : step.deleted) view.remove(v);
      out.steps.push_back(std::move(step));
    }
    Extender extender(view, col, lists, out.rejected_choices);
    extending = true;
    for (auto it = out.steps.rbegin(); it != out.steps.rend(); ++it, ++extended) {
      for (Vertex v : it->deleted) view.restore(v);
      extender.extend(*it);
    }
  } catch (const std::exception& e) {
    out.failure = e.what();
    if (extending) {
      const auto& step = out.steps[out.steps.size() - 1 - extended];
      out.failure += " while extending step " + std::to_string(out.steps.size() - extended) + " (" + step.action + ")";
    }
    return out;
  }
  LinearColoring result{std::move(col), 0};
  if (auto violation = verify_list(g, lists, result)) {
    out.failure = "final verification failed: " + violation->describe();
    return out;
  }
  out.coloring = std::move(result);
  return out;
}

LinearColoring color(const Graph& g, const BoundParameter& bound, const ListAssignment& lists,
                     const RotationSystem* embedding, const ColorOptions& options) {
  auto outcome = color_traced(g, bound, lists, embedding, options);
  if (!outcome.coloring) throw ExtensionFailure(outcome.failure, std::move(outcome.steps));
  return std::move(*outcome.coloring);
}

LinearColoring color_tree_greedy(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (n == 0 || g.edge_count() != n - 1 || component_count(g) != 1) {
    throw std::invalid_argument("color_tree_greedy needs a tree");
  }
  if (k < ceil_half(g.max_degree()) + 1) {
    throw std::invalid_argument("k must be at least ceil(max degree / 2) + 1");
  }
  LinearColoring out{std::vector<Color>(n, 0), k};
  out.color[0] = 1;
  std::queue<Vertex> queue;
  queue.push(0);
  while (!queue.empty()) {
    Vertex p = queue.front();
    queue.pop();
    std::vector<Vertex> children(g.neighbors(p).begin(), g.neighbors(p).end());
    std::sort(children.begin(), children.end());
    std::vector<int> around(k + 1, 0);
    for (Vertex x : children) around[out.color[x]] += out.color[x] != 0 ? 1 : 0;
    for (Vertex x : children) {
      if (out.color[x] != 0) continue;
      Color chosen = 0;
      for (Color candidate = 1; candidate <= k && chosen == 0; ++candidate) {
        if (candidate != out.color[p] && around[candidate] < 2) chosen = candidate;
      }
      if (chosen == 0) throw std::logic_error("greedy tree coloring ran out of colors");
      out.color[x] = chosen;
      ++around[chosen];
      queue.push(x);
    }
  }
  return out;
}

}  // namespace lincol
