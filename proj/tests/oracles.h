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

// Brute-force reference implementations used to cross-check the library.
// They share no code with the algorithms under test beyond the Graph type.

#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "lincol/configs.h"
#include "lincol/graph.h"
#include "lincol/planar.h"
#include "lincol/rational.h"
#include "lincol/verify.h"

namespace oracle {

using lincol::Graph;
using lincol::Rational;
using lincol::Vertex;

// Max over all nonempty vertex subsets of 2|E(H)|/|V(H)|.
Rational subset_mad(const Graph& g);

// Shortest cycle via "remove edge uv, BFS from u to v"; kInfiniteGirth on forests.
int edge_removal_girth(const Graph& g);

// Every pair of color classes induces max degree <= 2 and no cycle.
bool pairwise_linear(const Graph& g, const std::vector<int>& color);

// Smallest k with a valid linear k-coloring, by enumerating all k^n maps.
int enumerate_lc(const Graph& g);

// Enumerates every choice from the lists.
bool enumerate_list_feasible(const Graph& g, const std::vector<std::vector<int>>& lists);

// Face boundaries as vertex walks, traced with a successor table built here.
std::vector<std::vector<Vertex>> trace_faces(const Graph& g, const lincol::RotationSystem& rot);

// Configuration numbers present under each lemma, read off the definitions.
std::set<int> configs_present(const Graph& g, lincol::LemmaId lemma,
                              const lincol::RotationSystem* rot, int bound_m);

// Role map of a match satisfies the degree and adjacency constraints of its
// configuration (the simply stated ones; others return true).
bool match_valid(const Graph& g, const lincol::ConfigMatch& m, int bound_m);

bool is_tree(const Graph& g);
int connected_components(const Graph& g);

Graph random_gnm(int n, int m, std::mt19937_64& rng);
Graph random_tree(int n, int max_degree, std::mt19937_64& rng);

}  // namespace oracle
