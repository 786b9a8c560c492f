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
#include <vector>

#include "lincol/configs.h"
#include "lincol/graph.h"
#include "lincol/planar.h"
#include "lincol/verify.h"

namespace lincol {

// Which theorem drives the colorer, and the degree bound M >= max degree it
// is phrased in. M stays fixed while the recursion shrinks the graph.
struct BoundParameter {
  LemmaId theorem = LemmaId::kMad125;
  int m = 0;
};

// ceil(M/2) + 4, + 2, + 1 for G5, MAD3, MAD125.
int required_list_size(const BoundParameter& bound);

// Throws HypothesisError naming the first failed hypothesis: M >= max
// degree, M >= 9 (MAD3) or M >= 3 (MAD125), the mad bound, girth >= 5 and a
// plane embedding (G5), and list sizes.
void check_hypotheses(const Graph& g, const BoundParameter& bound, const ListAssignment& lists,
                      const RotationSystem* embedding);

// One reduction: the vertices deleted before recursing and the rule that
// extends the coloring back onto them.
struct ColorStep {
  std::string action;  // "isolated", "pendant", "cycle", or a tag such as "MAD3/RC2"
  std::optional<ConfigMatch> match;
  std::vector<Vertex> deleted;
  // RC1 steps only: colors forbidden at the 2-vertex and the bound on that
  // count, floor((d(v) + d(w)) / 2) + 1 under G5 and
  // ceil(d(v)/2) + ceil(d(w)/2) under MAD3.
  int forbidden = -1;
  int forbidden_bound = -1;
  bool recolored = false;  // a recolor step ran (MAD3 RC2, MAD125 RC4)
};

struct ColorOutcome {
  std::optional<LinearColoring> coloring;
  std::vector<ColorStep> steps;  // in deletion order
  std::string failure;           // empty on success
  // Candidate colors inside a prescribed choice set that the local check
  // rejected before an acceptable one was found.
  int rejected_choices = 0;
};

class ExtensionFailure : public std::runtime_error {
 public:
  ExtensionFailure(const std::string& what, std::vector<ColorStep> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::vector<ColorStep>& trace() const { return trace_; }

 private:
  std::vector<ColorStep> trace_;
};

struct ColorOptions {
  bool check_hypotheses = true;
};

// Reduce-and-extend colorer. Returns the failure diagnostic instead of
// throwing when an extension step cannot complete; hypothesis violations
// (checked mode) throw HypothesisError.
ColorOutcome color_traced(const Graph& g, const BoundParameter& bound, const ListAssignment& lists,
                          const RotationSystem* embedding, const ColorOptions& options = {});

// As color_traced, but throws ExtensionFailure on failure.
LinearColoring color(const Graph& g, const BoundParameter& bound, const ListAssignment& lists,
                     const RotationSystem* embedding, const ColorOptions& options = {});

// BFS-greedy linear coloring of a tree with colors 1..k. Throws
// std::invalid_argument if g is not a tree or k < ceil(max degree / 2) + 1.
LinearColoring color_tree_greedy(const Graph& g, int k);

}  // namespace lincol
