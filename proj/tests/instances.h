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

// Seeded generators of instances satisfying each lemma's hypotheses.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lincol/configs.h"
#include "lincol/generators.h"

namespace instances {

// The i-th instance for the lemma, cycling through several families;
// `small` keeps n <= 12. Throws std::runtime_error if sampling gives up.
lincol::GeneratedGraph for_lemma(lincol::LemmaId lemma, std::uint64_t i, bool small = false);

// Name of the family instance i is drawn from.
std::string family(lincol::LemmaId lemma, std::uint64_t i);

}  // namespace instances
