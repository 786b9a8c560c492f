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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lincol/graph.h"

namespace lincol {

using Color = int;

// Per-vertex color; colors are positive. palette_size > 0 additionally
// restricts every color to 1..palette_size.
struct LinearColoring {
  std::vector<Color> color;
  int palette_size = 0;

  int colors_used() const;
  friend bool operator==(const LinearColoring&, const LinearColoring&) = default;
};

// Allowed colors per vertex, each list sorted and duplicate-free.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<Color>> lists);

  // Every vertex gets {1, ..., k}.
  static ListAssignment uniform(int vertex_count, int k);

  int vertex_count() const { return static_cast<int>(lists_.size()); }
  const std::vector<Color>& at(Vertex v) const { return lists_[v]; }
  bool contains(Vertex v, Color c) const;
  int min_size() const;
  const std::vector<std::vector<Color>>& lists() const { return lists_; }

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<std::vector<Color>> lists_;
};

enum class ViolationKind {
  kAdjacentSameColor,
  kThreeNeighborsSameColor,
  kBicoloredCycle,
  kListViolation,
};

std::string_view to_string(ViolationKind kind);

// Witness layout by kind: edge {u, v}; center followed by three neighbors;
// cycle vertex sequence (starts at its smallest vertex, then the smaller
// neighbor); single vertex.
struct Violation {
  ViolationKind kind;
  std::vector<Vertex> witness;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

class ColoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// First violation in scan order (edges lexicographically, then vertices,
// then color pairs), or nullopt for a valid linear coloring. Throws
// ColoringError if some vertex is uncolored or out of palette.
std::optional<Violation> verify_linear(const Graph& g, const LinearColoring& col);

// verify_linear plus membership c(v) in L(v).
std::optional<Violation> verify_list(const Graph& g, const ListAssignment& lists,
                                     const LinearColoring& col);

// True iff `v` re-certifies against g and col.
bool witness_holds(const Graph& g, const LinearColoring& col, const Violation& v,
                   const ListAssignment* lists = nullptr);

// Partial-coloring check around v, where color 0 marks an uncolored vertex
// and only colored live vertices count: v differs from its neighbors, no
// vertex of N[v] sees three neighbors of one color, and no two-colored
// cycle passes through v. True when v itself is uncolored.
bool locally_linear(const GraphView& g, const std::vector<Color>& color, Vertex v);

}  // namespace lincol
