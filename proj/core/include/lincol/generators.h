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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lincol/graph.h"
#include "lincol/planar.h"
#include "lincol/rational.h"

namespace lincol {

enum class FamilyTag {
  kTree,
  kPath,
  kCycle,
  kStar,
  kSpider,
  kCompleteBipartite,
  kComplete,
  kPetersen,
  kDodecahedron,
  kOctahedron,
  kSubdividedDodecahedron,
  kSubdividedOctahedron,
  kK23Extension,
  kK33Extension,
  kRandomSparse,
  kRandomPlanar,
};

std::string_view to_string(FamilyTag tag);
FamilyTag parse_family(std::string_view text);

// Parameters for every family; each family reads the fields listed next to
// it in generate()'s documentation and ignores the rest.
struct GraphFamily {
  FamilyTag tag = FamilyTag::kPath;
  int n = 0;
  int a = 0;
  int b = 0;
  int max_degree = 0;
  int pendant_length = 2;
  std::uint64_t seed = 1;

  // random-sparse / random-planar
  int hubs = 1;
  int low_degree = 3;
  int min_subdivisions = 0;
  int max_subdivisions = 2;
  int min_girth = 0;
  int require_max_degree = 0;  // reject samples whose max degree is below this
  bool prune_leaves = true;    // strip degree <= 1 vertices (min degree >= 2)
  std::optional<Rational> mad_below;
  int max_attempts = 1000;
};

struct GeneratedGraph {
  Graph graph;
  std::optional<RotationSystem> rotation;
};

// Families and the parameters they use:
//   tree (n, max_degree, seed)        random tree, max degree exactly max_degree
//   path (n), cycle (n >= 3), star (n leaves), complete (n)
//   spider (a legs of b vertices)
//   complete-bipartite (a, b)         parts 0..a-1 and a..a+b-1
//   petersen, dodecahedron, octahedron (the latter two embedded)
//   subdivided-dodecahedron           one face-transversal matching subdivided
//   subdivided-octahedron             all edges but a perfect matching subdivided
//   k23-extension, k33-extension (pendant_length, even >= 2)
//   random-sparse (n base vertices, hubs, max_degree, low_degree, subdivision
//                  range, mad_below, require_max_degree, prune_leaves, seed)
//   random-planar (n points, max_degree, subdivision range, min_girth,
//                  prune_leaves, seed), embedded
// Throws std::invalid_argument on bad parameters, std::runtime_error when a
// rejection-sampled family exhausts max_attempts.
GeneratedGraph generate(const GraphFamily& family);

// Edges of the dodecahedron matching that gets subdivided (one per face).
std::vector<Edge> dodecahedron_face_matching();

}  // namespace lincol
