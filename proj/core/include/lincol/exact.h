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
#include <stdexcept>
#include <string>

#include "lincol/graph.h"
#include "lincol/verify.h"

namespace lincol {

struct SearchBudget {
  std::int64_t max_nodes = 200'000'000;
  double max_seconds = 60.0;

  // Throws std::invalid_argument unless both limits are positive.
  void validate() const;
};

// Raised when a search hits its budget. Bounds are what the search had
// established: lc lies in [lower, upper] (upper is 0 when unknown).
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, int lower, int upper, std::int64_t nodes)
      : std::runtime_error(what), lower_(lower), upper_(upper), nodes_(nodes) {}
  int lower() const { return lower_; }
  int upper() const { return upper_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  int lower_;
  int upper_;
  std::int64_t nodes_;
};

// Linear chromatic number by backtracking (vertices by decreasing degree,
// colors ascending, new colors introduced in order). 0 for the empty graph.
int exact_lc(const Graph& g, const SearchBudget& budget = {});

// A linear coloring with every color from its vertex's list, or nullopt
// once the search space is exhausted.
std::optional<LinearColoring> list_feasible(const Graph& g, const ListAssignment& lists,
                                            const SearchBudget& budget = {});

struct ChoosabilityVerdict {
  // Lists of size k with no linear coloring (so the linear list chromatic
  // number exceeds k), or nullopt if every assignment over the universe is
  // colorable.
  std::optional<ListAssignment> bad_lists;
  std::int64_t assignments_checked = 0;
};

// Searches k-lists drawn from colors 1..universe, up to renaming colors.
// universe = 0 selects 2k. Throws std::invalid_argument if universe < k.
ChoosabilityVerdict choosability_at_least(const Graph& g, int k, int universe = 0,
                                          const SearchBudget& budget = {});

}  // namespace lincol
