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

// Acceptance criteria runner. Usage: acceptance_test <criterion 1..8>.
// Prints one PASS/FAIL line per check and exits nonzero if any check fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>
#include <string>

#include "instances.h"
#include "lincol/colorer.h"
#include "lincol/configs.h"
#include "lincol/exact.h"
#include "lincol/generators.h"
#include "lincol/sparsity.h"
#include "lincol/verify.h"
#include "oracles.h"

namespace {

using namespace lincol;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

class Report {
 public:
  explicit Report(int criterion) : criterion_(criterion) {}

  void check(bool pass, const std::string& what) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion_, what.c_str());
    ok_ = ok_ && pass;
  }
  bool ok() const { return ok_; }

 private:
  int criterion_;
  bool ok_ = true;
};

GeneratedGraph named(FamilyTag tag, int a = 0, int b = 0) {
  GraphFamily f;
  f.tag = tag;
  f.a = a;
  f.b = b;
  return generate(f);
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

int bound_floor(LemmaId lemma) { return lemma == LemmaId::kMad3 ? 9 : lemma == LemmaId::kMad125 ? 3 : 1; }

const RotationSystem* rot_of(const GeneratedGraph& gg) { return gg.rotation ? &*gg.rotation : nullptr; }

constexpr LemmaId kLemmas[] = {LemmaId::kG5, LemmaId::kMad3, LemmaId::kMad125};
constexpr std::uint64_t kSuiteSize = 200;

void exact_small_values(Report& r) {
  for (auto [a, b, want] : {std::tuple{2, 3, 4}, std::tuple{3, 3, 5}}) {
    Stopwatch t;
    const int got = exact_lc(named(FamilyTag::kCompleteBipartite, a, b).graph);
    const double s = t.seconds();
    r.check(got == want && s < 10.0, "exact_lc(K" + std::to_string(a) + "," + std::to_string(b) +
                                         ") = " + std::to_string(got) + " (want " + std::to_string(want) +
                                         "), " + secs(s) + " (limit 10 s)");
  }
}

void sparsity_exactness(Report& r) {
  Stopwatch t;
  struct Case {
    std::string name;
    Graph g;
    Rational want;
  };
  std::vector<Case> cases{{"K2,3", named(FamilyTag::kCompleteBipartite, 2, 3).graph, Rational(12, 5)},
                          {"K3,3", named(FamilyTag::kCompleteBipartite, 3, 3).graph, Rational(3)},
                          {"subdivided octahedron", named(FamilyTag::kSubdividedOctahedron).graph, Rational(14, 5)}};
  for (const auto& c : cases) {
    auto got = max_average_degree(c.g).density;
    r.check(got == c.want, "mad(" + c.name + ") = " + got.str() + " (want " + c.want.str() + ")");
  }
  std::mt19937_64 rng(2026);
  int agree = 0;
  constexpr int kTrials = 100;
  for (int i = 0; i < kTrials; ++i) {
    const int n = 2 + static_cast<int>(rng() % 11);
    Graph g = oracle::random_gnm(n, static_cast<int>(rng() % (2 * n + 1)), rng);
    agree += max_average_degree(g, MadMethod::kFlow).density == oracle::subset_mad(g);
  }
  r.check(agree == kTrials,
          "max-flow mad matches subset enumeration on " + std::to_string(agree) + "/" + std::to_string(kTrials) +
              " random graphs with n <= 12");
  const double s = t.seconds();
  r.check(s < 5.0, "runtime " + secs(s) + " (limit 5 s)");
}

void configuration_freeness(Report& r) {
  for (auto [name, tag] : {std::pair{"subdivided dodecahedron", FamilyTag::kSubdividedDodecahedron},
                           std::pair{"subdivided octahedron", FamilyTag::kSubdividedOctahedron}}) {
    Graph g = named(tag).graph;
    auto matches = detect(g, LemmaId::kMad3, nullptr);
    std::string found;
    for (const auto& m : matches) {
      if (found.find(m.tag()) == std::string::npos) found += " " + m.tag();
    }
    r.check(matches.empty(), std::string("detect(MAD3) on ") + name + " returns " +
                                 std::to_string(matches.size()) + " matches" +
                                 (found.empty() ? "" : " (" + found.substr(1) + ")"));
    auto v = audit(g, LemmaId::kMad3, nullptr);
    bool max_degree_fails = false;
    for (const auto& h : v.hypotheses) max_degree_fails |= h.name == "max-degree>=9" && !h.holds;
    r.check(max_degree_fails && !v.hypotheses_hold && v.consistent,
            std::string("audit(MAD3) on ") + name + " records the max-degree>=9 failure and stays consistent");
  }
}

void charge_sum(Report& r) {
  auto dd = named(FamilyTag::kDodecahedron);
  auto rep = discharge(dd.graph, LemmaId::kG5, &*dd.rotation);
  r.check(rep.sum_initial == Rational(-10), "dodecahedron G5 sum_initial = " + rep.sum_initial.str() + " (want -10)");
  int runs = 1;
  bool conserved = rep.sum_initial == rep.sum_final;
  for (LemmaId lemma : kLemmas) {
    for (std::uint64_t i = 0; i < 50; ++i) {
      auto gg = instances::for_lemma(lemma, i);
      auto c = discharge(gg.graph, lemma, rot_of(gg));
      conserved = conserved && c.sum_initial == c.sum_final;
      ++runs;
    }
  }
  r.check(conserved, "charge conserved on all " + std::to_string(runs) + " runs");
}

void lemma_suite(Report& r) {
  Stopwatch t;
  for (LemmaId lemma : kLemmas) {
    struct Tally {
      int graphs = 0;
      int hypotheses = 0;
      int with_config = 0;
      int inconsistent = 0;
    };
    std::map<std::string, Tally> by_family;
    Tally all;
    for (std::uint64_t i = 0; i < kSuiteSize; ++i) {
      auto gg = instances::for_lemma(lemma, i);
      auto v = audit(gg.graph, lemma, rot_of(gg));
      for (Tally* tl : {&all, &by_family[instances::family(lemma, i)]}) {
        ++tl->graphs;
        tl->hypotheses += v.hypotheses_hold;
        tl->with_config += !v.matches.empty();
        tl->inconsistent += !v.consistent;
      }
    }
    for (const auto& [fam, tl] : by_family) {
      std::printf("  %s/%s: %d graphs, %d with a configuration, %d inconsistent\n",
                  std::string(to_string(lemma)).c_str(), fam.c_str(), tl.graphs, tl.with_config, tl.inconsistent);
    }
    const std::string name(to_string(lemma));
    r.check(all.graphs >= 200 && all.hypotheses == all.graphs,
            name + ": " + std::to_string(all.hypotheses) + "/" + std::to_string(all.graphs) +
                " generated graphs satisfy the hypotheses");
    r.check(all.with_config == all.graphs && all.inconsistent == 0,
            name + ": configuration found in " + std::to_string(all.with_config) + "/" +
                std::to_string(all.graphs) + ", consistency tripped " + std::to_string(all.inconsistent) + " times");
  }
  const double s = t.seconds();
  r.check(s < 120.0, "runtime " + secs(s) + " (limit 120 s)");
}

ListAssignment random_lists(int n, int k, std::mt19937_64& rng) {
  std::vector<Color> pool(2 * k);
  for (int c = 0; c < 2 * k; ++c) pool[c] = c + 1;
  std::vector<std::vector<Color>> lists(n);
  for (auto& l : lists) {
    std::shuffle(pool.begin(), pool.end(), rng);
    l.assign(pool.begin(), pool.begin() + k);
    std::sort(l.begin(), l.end());
  }
  return ListAssignment(std::move(lists));
}

void constructive_suite(Report& r) {
  std::mt19937_64 rng(6);
  for (LemmaId lemma : kLemmas) {
    std::map<std::string, std::pair<int, int>> by_family;  // family -> (colored, total)
    int colored = 0;
    std::string first_failure;
    for (std::uint64_t i = 0; i < kSuiteSize; ++i) {
      auto gg = instances::for_lemma(lemma, i);
      BoundParameter bound{lemma, std::max(bound_floor(lemma), gg.graph.max_degree())};
      auto lists = random_lists(gg.graph.vertex_count(), required_list_size(bound), rng);
      auto out = color_traced(gg.graph, bound, lists, rot_of(gg));
      const bool ok = out.coloring && !verify_list(gg.graph, lists, *out.coloring);
      auto& tally = by_family[instances::family(lemma, i)];
      tally.first += ok;
      ++tally.second;
      colored += ok;
      if (!ok && first_failure.empty()) first_failure = "#" + std::to_string(i) + ": " + out.failure;
    }
    for (const auto& [fam, tl] : by_family) {
      std::printf("  %s/%s: %d/%d colored\n", std::string(to_string(lemma)).c_str(), fam.c_str(), tl.first,
                  tl.second);
    }
    r.check(colored == static_cast<int>(kSuiteSize),
            std::string(to_string(lemma)) + ": " + std::to_string(colored) + "/" + std::to_string(kSuiteSize) +
                " colorings pass verify_list with lists of exactly the required size" +
                (first_failure.empty() ? "" : "; first failure " + first_failure));
  }
  int small = 0;
  int equal = 0;
  for (std::uint64_t i = 0; small < 60 && i < 400; ++i) {
    GeneratedGraph gg;
    try {
      gg = instances::for_lemma(LemmaId::kMad125, i, true);
    } catch (const std::runtime_error&) {
      continue;
    }
    if (gg.graph.vertex_count() > 12) continue;
    ++small;
    equal += exact_lc(gg.graph) == ceil_half(gg.graph.max_degree()) + 1;
  }
  r.check(small >= 50 && equal == small, "MAD125 instances with n <= 12: exact_lc = ceil(D/2)+1 on " +
                                             std::to_string(equal) + "/" + std::to_string(small));
}

void choosability_sharpness(Report& r) {
  Stopwatch t;
  Graph k23 = named(FamilyTag::kCompleteBipartite, 2, 3).graph;
  auto v = choosability_at_least(k23, 3, 6);
  const double s = t.seconds();
  r.check(v.bad_lists.has_value(), "choosability_at_least(K2,3, k=3, universe=6) finds a bad-list witness after " +
                                       std::to_string(v.assignments_checked) + " assignments");
  if (v.bad_lists) {
    std::vector<std::vector<int>> raw = v.bad_lists->lists();
    r.check(v.bad_lists->min_size() == 3 && !list_feasible(k23, *v.bad_lists) &&
                !oracle::enumerate_list_feasible(k23, raw),
            "witness lists have size 3 and re-verify as infeasible");
  }
  r.check(s < 60.0, "runtime " + secs(s) + " (limit 60 s)");
}

void tree_equality(Report& r) {
  int greedy_ok = 0;
  int small = 0;
  int equal = 0;
  for (int i = 0; i < 50; ++i) {
    GraphFamily f;
    f.tag = FamilyTag::kTree;
    f.max_degree = 3 + i % 8;
    f.n = i % 2 == 0 ? std::min(12, f.max_degree + 1 + i / 8 % 3) : 15 + 3 * i;
    f.seed = 1000 + i;
    Graph g = generate(f).graph;
    const int k = ceil_half(g.max_degree()) + 1;
    auto col = color_tree_greedy(g, k);
    greedy_ok += g.max_degree() == f.max_degree && !verify_linear(g, col) && col.colors_used() <= k;
    if (g.vertex_count() <= 12) {
      ++small;
      equal += exact_lc(g) == k;
    }
  }
  r.check(greedy_ok == 50, "color_tree_greedy with k = ceil(D/2)+1 verifies on " + std::to_string(greedy_ok) +
                               "/50 random trees, D in 3..10");
  r.check(small >= 20 && equal == small,
          "exact_lc = ceil(D/2)+1 on " + std::to_string(equal) + "/" + std::to_string(small) + " trees with n <= 12");
}

}  // namespace

int main(int argc, char** argv) {
  const int criterion = argc == 2 ? std::atoi(argv[1]) : 0;
  if (criterion < 1 || criterion > 8) {
    std::fprintf(stderr, "usage: acceptance_test <criterion 1..8>\n");
    return 2;
  }
  Report r(criterion);
  Stopwatch t;
  switch (criterion) {
    case 1: exact_small_values(r); break;
    case 2: sparsity_exactness(r); break;
    case 3: configuration_freeness(r); break;
    case 4: charge_sum(r); break;
    case 5: lemma_suite(r); break;
    case 6: constructive_suite(r); break;
    case 7: choosability_sharpness(r); break;
    case 8: tree_equality(r); break;
  }
  std::printf("%s criterion %d (%s)\n", r.ok() ? "PASS" : "FAIL", criterion, secs(t.seconds()).c_str());
  return r.ok() ? 0 : 1;
}
