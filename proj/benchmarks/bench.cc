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

#include <benchmark/benchmark.h>

#include <algorithm>

#include "lincol/colorer.h"
#include "lincol/configs.h"
#include "lincol/exact.h"
#include "lincol/generators.h"
#include "lincol/sparsity.h"

namespace {

using namespace lincol;

GeneratedGraph sparse(int n, std::uint64_t seed) {
  GraphFamily f;
  f.tag = FamilyTag::kRandomSparse;
  f.n = n;
  f.hubs = std::max(1, n / 20);
  f.max_degree = 10;
  f.require_max_degree = 10;
  f.mad_below = Rational(3);
  f.seed = seed;
  return generate(f);
}

GeneratedGraph planar(int n, std::uint64_t seed) {
  GraphFamily f;
  f.tag = FamilyTag::kRandomPlanar;
  f.n = n;
  f.max_degree = 6;
  f.min_girth = 5;
  f.seed = seed;
  return generate(f);
}

void BM_MadFlow(benchmark::State& state) {
  Graph g = sparse(static_cast<int>(state.range(0)), 1).graph;
  for (auto _ : state) benchmark::DoNotOptimize(max_average_degree(g, MadMethod::kFlow));
  state.counters["vertices"] = g.vertex_count();
}
BENCHMARK(BM_MadFlow)->Arg(20)->Arg(80)->Arg(320);

void BM_DetectMad3(benchmark::State& state) {
  Graph g = sparse(static_cast<int>(state.range(0)), 2).graph;
  for (auto _ : state) benchmark::DoNotOptimize(detect(g, LemmaId::kMad3, nullptr));
  state.counters["vertices"] = g.vertex_count();
}
BENCHMARK(BM_DetectMad3)->Arg(20)->Arg(80)->Arg(320);

void BM_ColorMad3(benchmark::State& state) {
  Graph g = sparse(static_cast<int>(state.range(0)), 3).graph;
  BoundParameter bound{LemmaId::kMad3, std::max(9, g.max_degree())};
  auto lists = ListAssignment::uniform(g.vertex_count(), required_list_size(bound));
  for (auto _ : state) benchmark::DoNotOptimize(color(g, bound, lists, nullptr));
  state.counters["vertices"] = g.vertex_count();
}
BENCHMARK(BM_ColorMad3)->Arg(20)->Arg(80)->Arg(320);

void BM_ColorG5(benchmark::State& state) {
  auto gg = planar(static_cast<int>(state.range(0)), 4);
  BoundParameter bound{LemmaId::kG5, gg.graph.max_degree()};
  auto lists = ListAssignment::uniform(gg.graph.vertex_count(), required_list_size(bound));
  for (auto _ : state) benchmark::DoNotOptimize(color(gg.graph, bound, lists, &*gg.rotation));
  state.counters["vertices"] = gg.graph.vertex_count();
}
BENCHMARK(BM_ColorG5)->Arg(20)->Arg(80)->Arg(320);

void BM_ExactLcCompleteBipartite(benchmark::State& state) {
  GraphFamily f;
  f.tag = FamilyTag::kCompleteBipartite;
  f.a = static_cast<int>(state.range(0));
  f.b = static_cast<int>(state.range(0));
  Graph g = generate(f).graph;
  for (auto _ : state) benchmark::DoNotOptimize(exact_lc(g));
}
BENCHMARK(BM_ExactLcCompleteBipartite)->DenseRange(2, 4);

}  // namespace
BENCHMARK_MAIN();
