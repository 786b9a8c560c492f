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

#include <span>
#include <stdexcept>
#include <vector>

#include "lincol/graph.h"

namespace lincol {

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Combinatorial embedding: for every vertex the clockwise cyclic order of
// its neighbors.
struct RotationSystem {
  std::vector<std::vector<Vertex>> order;

  // Throws EmbeddingError unless each order[v] is a permutation of the
  // neighbors of v.
  void validate(const Graph& g) const;

  // Same cyclic orders restricted to the live vertices of `view`.
  RotationSystem restricted(const GraphView& view) const;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

// Rotation read off the adjacency lists as stored.
RotationSystem adjacency_rotation(const Graph& g);

struct Face {
  // Boundary walk as directed edges (u -> v); consecutive darts chain.
  std::vector<Edge> darts;

  int degree() const { return static_cast<int>(darts.size()); }
  // Tail of each dart, i.e. the boundary walk's vertex sequence.
  std::vector<Vertex> vertices() const;
};

struct FaceSet {
  std::vector<Face> faces;
  int total_degree() const;
};

// Traces every face: after arriving at v from u, leave along the neighbor
// that follows u in v's rotation. Faces are listed by their smallest dart,
// each walk starting at that dart. Throws EmbeddingError if `rot` does not
// match `g`. Isolated vertices belong to no face.
FaceSet faces_of(const GraphView& g, const RotationSystem& rot);

// |V| - |E| + |F| == 2 for a connected graph. Throws std::invalid_argument
// for disconnected input.
bool euler_check(const Graph& g, const FaceSet& faces);

// Genus-zero test that also accepts disconnected graphs: every component
// (isolated vertices included) must satisfy V - E + F = 2.
bool is_plane_embedding(const GraphView& g, const RotationSystem& rot);

int component_count(const GraphView& g);

}  // namespace lincol
