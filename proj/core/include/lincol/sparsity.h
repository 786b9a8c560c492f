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

#include <vector>

#include "lincol/graph.h"
#include "lincol/rational.h"

namespace lincol {

// Vertex set together with the average degree 2|E(H)|/|V(H)| of the
// subgraph H it induces.
struct DensityWitness {
  std::vector<Vertex> vertices;
  Rational density;
};

enum class MadMethod {
  kAuto,         // subset enumeration for n <= 12, max-flow otherwise
  kFlow,         // parametric max-flow (Goldberg network, Newton iteration)
  kEnumeration,  // all nonempty vertex subsets; n <= 24
};

// Exact maximum average degree. Throws GraphError on the empty graph.
DensityWitness max_average_degree(const Graph& g, MadMethod method = MadMethod::kAuto);

// mad(g) < threshold, decided exactly. Throws std::invalid_argument when
// threshold <= 0.
bool mad_below(const Graph& g, const Rational& threshold);

// Euler-formula bound 2g/(g-2) on mad of a planar graph of girth g.
// Throws std::invalid_argument for g < 3.
Rational girth_mad_bound(int girth_value);

// 2|E(H)|/|V(H)| for the subgraph induced by `vertices`.
Rational induced_average_degree(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace lincol
