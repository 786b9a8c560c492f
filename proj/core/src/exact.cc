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

#include "lincol/exact.h"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace lincol {
namespace {

class Budget {
 public:
  explicit Budget(const SearchBudget& limits)
      : limits_(limits), start_(std::chrono::steady_clock::now()) {
    limits.validate();
  }

  // False once a limit is hit; time is sampled every 4096 nodes.
  bool tick() {
    ++nodes_;
    if (nodes_ > limits_.max_nodes) return false;
    if ((nodes_ & 4095) == 0) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > limits_.max_seconds) return false;
    }
    return true;
  }
  std::int64_t nodes() const { return nodes_; }

 private:
  SearchBudget limits_;
  std::chrono::steady_clock::time_point start_;
  std::int64_t nodes_ = 0;
};

struct OutOfBudget {};

// Backtracking over the vertices of `view`, decreasing degree first.
class Solver {
 public:
  Solver(const GraphView& view, Budget& budget) : view_(view), budget_(budget) {
    for (Vertex v = 0; v < view.vertex_count(); ++v) {
      if (view.alive(v)) order_.push_back(v);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return view.degree(a) > view.degree(b); });
  }

  // Lists indexed by vertex; `uniform` enables color-renaming symmetry
  // breaking (valid only when all lists are 1..k).
  std::optional<std::vector<Color>> solve(const std::vector<std::vector<Color>>& lists, bool uniform) {
    lists_ = &lists;
    uniform_ = uniform;
    color_.assign(view_.vertex_count(), 0);
    if (!descend(0, 0)) return std::nullopt;
    return color_;
  }

 private:
  bool descend(std::size_t index, Color max_used) {
    if (index == order_.size()) return true;
    const Vertex v = order_[index];
    for (Color c : (*lists_)[v]) {
      if (uniform_ && c > max_used + 1) break;
      if (!budget_.tick()) throw OutOfBudget{};
      color_[v] = c;
      if (locally_linear(view_, color_, v) && descend(index + 1, std::max(max_used, c))) return true;
    }
    color_[v] = 0;
    return false;
  }

  const GraphView& view_;
  Budget& budget_;
  std::vector<Vertex> order_;
  const std::vector<std::vector<Color>>* lists_ = nullptr;
  bool uniform_ = false;
  std::vector<Color> color_;
};

std::vector<std::vector<Color>> uniform_lists(int n, int k) {
  std::vector<Color> one(k);
  std::iota(one.begin(), one.end(), 1);
  return std::vector<std::vector<Color>>(n, one);
}

// Enumerates k-subsets of 1..universe for each vertex in id order, new
// colors introduced in increasing order. A prefix whose induced subgraph
// is already uncolorable completes to a bad assignment.
class ListSearch {
 public:
  ListSearch(const Graph& g, int k, int universe, Budget& budget)
      : g_(g), k_(k), universe_(universe), budget_(budget), lists_(g.vertex_count()) {}

  std::optional<std::vector<std::vector<Color>>> run() {
    if (descend(0, 0)) return lists_;
    return std::nullopt;
  }
  std::int64_t checked() const { return checked_; }

 private:
  bool descend(int v, Color max_used) {
    const int n = g_.vertex_count();
    if (v > 0 && !prefix_colorable(v)) {
      for (int x = v; x < n; ++x) {
        lists_[x].resize(k_);
        std::iota(lists_[x].begin(), lists_[x].end(), 1);
      }
      return true;
    }
    if (v == n) return false;
    std::vector<Color> pick;
    return choose(v, 1, max_used, pick);
  }

  // Builds the k-subset for v in ascending order; colors above max_used
  // must continue the run max_used + 1, max_used + 2, ...
  bool choose(int v, Color from, Color max_used, std::vector<Color>& pick) {
    if (static_cast<int>(pick.size()) == k_) {
      lists_[v] = pick;
      Color top = std::max(max_used, pick.back());
      return descend(v + 1, top);
    }
    const int remaining = k_ - static_cast<int>(pick.size());
    for (Color c = from; c + remaining - 1 <= universe_; ++c) {
      Color fresh_floor = pick.empty() || pick.back() <= max_used ? max_used : pick.back();
      if (c > fresh_floor + 1) break;
      pick.push_back(c);
      if (choose(v, c + 1, max_used, pick)) return true;
      pick.pop_back();
    }
    return false;
  }

  bool prefix_colorable(int prefix) {
    ++checked_;
    std::vector<char> alive(g_.vertex_count(), 0);
    std::fill(alive.begin(), alive.begin() + prefix, 1);
    GraphView view(g_, alive);
    Solver solver(view, budget_);
    return solver.solve(lists_, false).has_value();
  }

  const Graph& g_;
  int k_;
  int universe_;
  Budget& budget_;
  std::vector<std::vector<Color>> lists_;
  std::int64_t checked_ = 0;
};

}  // namespace

void SearchBudget::validate() const {
  if (max_nodes <= 0 || !(max_seconds > 0)) throw std::invalid_argument("search budget must be positive");
}

int exact_lc(const Graph& g, const SearchBudget& limits) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  Budget budget(limits);
  GraphView view(g);
  Solver solver(view, budget);
  int k = naive_lower_bound(g);
  try {
    // All-distinct colors are always linear, so k = n terminates.
    for (; k < n; ++k) {
      if (solver.solve(uniform_lists(n, k), true)) return k;
    }
    return n;
  } catch (const OutOfBudget&) {
    throw BudgetExhausted("exact_lc: search budget exhausted", k, n, budget.nodes());
  }
}

std::optional<LinearColoring> list_feasible(const Graph& g, const ListAssignment& lists,
                                            const SearchBudget& limits) {
  if (lists.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("list assignment size does not match the graph");
  }
  Budget budget(limits);
  GraphView view(g);
  Solver solver(view, budget);
  try {
    auto colors = solver.solve(lists.lists(), false);
    if (!colors) return std::nullopt;
    return LinearColoring{std::move(*colors), 0};
  } catch (const OutOfBudget&) {
    throw BudgetExhausted("list_feasible: search budget exhausted", 0, 0, budget.nodes());
  }
}

ChoosabilityVerdict choosability_at_least(const Graph& g, int k, int universe, const SearchBudget& limits) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (universe == 0) universe = 2 * k;
  if (universe < k) throw std::invalid_argument("universe must be at least k");
  Budget budget(limits);
  ListSearch search(g, k, universe, budget);
  ChoosabilityVerdict verdict;
  try {
    if (auto lists = search.run()) verdict.bad_lists = ListAssignment(std::move(*lists));
  } catch (const OutOfBudget&) {
    throw BudgetExhausted("choosability_at_least: search budget exhausted", 0, 0, budget.nodes());
  }
  verdict.assignments_checked = search.checked();
  return verdict;
}

}  // namespace lincol
