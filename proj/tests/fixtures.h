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

#include "lincol/generators.h"

namespace fixtures {

inline lincol::GeneratedGraph make(lincol::FamilyTag tag, int n = 0, int a = 0, int b = 0) {
  lincol::GraphFamily f;
  f.tag = tag;
  f.n = n;
  f.a = a;
  f.b = b;
  return lincol::generate(f);
}

inline lincol::Graph k(int a, int b) {
  return make(lincol::FamilyTag::kCompleteBipartite, 0, a, b).graph;
}

}  // namespace fixtures
