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
#include <utility>
#include <vector>

#include "lincol/graph.h"
#include "lincol/planar.h"
#include "lincol/rational.h"

namespace lincol {

// The three structural lemmas: planar girth >= 5 (needs an embedding),
// mad < 3 with max degree >= 9, and mad < 12/5.
enum class LemmaId { kG5, kMad3, kMad125 };

std::string_view to_string(LemmaId lemma);
// Accepts "g5", "mad3", "mad125" (case-insensitive).
LemmaId parse_lemma(std::string_view text);

class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One located configuration. Roles are listed in a fixed per-configuration
// order; `face` is the face index (into faces_of) for G5 RC2, else -1.
struct ConfigMatch {
  LemmaId lemma = LemmaId::kG5;
  int config = 0;  // 1 for RC1, ..., 5 for RC5
  std::vector<std::pair<std::string, Vertex>> roles;
  int face = -1;

  std::string tag() const { return "RC" + std::to_string(config); }
  // Throws std::out_of_range for an unknown role name.
  Vertex role(std::string_view name) const;
  bool has_role(std::string_view name) const;
  std::string describe() const;

  friend bool operator==(const ConfigMatch&, const ConfigMatch&) = default;
};

struct DetectOptions {
  // Replaces the max degree in the MAD3 RC1 inequality; must be >= max degree.
  std::optional<int> bound_m;
};

// All matches of the lemma's configurations, ordered by configuration then
// role vertices. Throws EmbeddingError for G5 without a plane embedding.
std::vector<ConfigMatch> detect(const GraphView& g, LemmaId lemma, const RotationSystem* embedding,
                                const DetectOptions& options = {});

struct ChargeElement {
  enum class Kind { kVertex, kFace };
  Kind kind = Kind::kVertex;
  int id = 0;

  std::string str() const { return (kind == Kind::kVertex ? "v" : "f") + std::to_string(id); }
  friend bool operator==(const ChargeElement&, const ChargeElement&) = default;
};

struct Transfer {
  ChargeElement from;
  ChargeElement to;
  Rational amount;
  std::string rule;  // "R1" .. "R4"
};

struct ChargeReport {
  LemmaId lemma = LemmaId::kG5;
  // Indexed by vertex id; entries of dead vertices stay 0 and are not
  // counted in the sums.
  std::vector<Rational> vertex_initial;
  std::vector<Rational> vertex_final;
  FaceSet faces;  // G5 only
  std::vector<Rational> face_initial;
  std::vector<Rational> face_final;
  std::vector<Transfer> transfers;
  Rational sum_initial;
  Rational sum_final;
  std::vector<ChargeElement> negative;
  // MAD3 R4: 3-vertices with several adjacent 2-vertices; the charge went to
  // the lowest-id one.
  std::vector<Vertex> ambiguous_forwarding;
  // MAD125: vertices on components that are plain cycles (no thread ends).
  std::vector<Vertex> cycle_component_vertices;
};

// Runs the lemma's discharging rules with exact arithmetic. Throws
// HypothesisError when min degree < 2 and EmbeddingError for G5 without an
// embedding.
ChargeReport discharge(const GraphView& g, LemmaId lemma, const RotationSystem* embedding);

struct HypothesisCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct AuditVerdict {
  LemmaId lemma = LemmaId::kG5;
  std::vector<HypothesisCheck> hypotheses;
  bool hypotheses_hold = false;
  std::vector<ConfigMatch> matches;
  ChargeReport charges;
  // False exactly when hypotheses hold, nothing was detected and some
  // element still ends negative; the lemma rules that combination out.
  bool consistent = true;
};

AuditVerdict audit(const Graph& g, LemmaId lemma, const RotationSystem* embedding,
                   const DetectOptions& options = {});

}  // namespace lincol
