// Copyright 2026 The KECS Authors.
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

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

#include "kecs/errors.hpp"
#include "kecs/weight.hpp"

namespace kecs {

inline constexpr int kDefaultBruteEdges = 40;
inline constexpr int kDefaultEnumerationEdges = 60;

struct SearchBudget {
  int max_edges = kDefaultBruteEdges;
  std::int64_t max_nodes_expanded = 2'000'000'000;
  std::chrono::milliseconds time_limit = std::chrono::minutes(10);

  static SearchBudget ForBruteForce() { return SearchBudget{}; }
  static SearchBudget ForEnumeration() {
    SearchBudget b;
    b.max_edges = kDefaultEnumerationEdges;
    return b;
  }

  void Validate() const {
    if (max_edges <= 0 || max_nodes_expanded <= 0 || time_limit.count() <= 0) {
      throw ParameterError("search budget fields must be positive");
    }
  }

  // KECS_BUDGET_EDGES, when set to a positive integer, replaces max_edges.
  SearchBudget WithEnvironmentOverride() const {
    SearchBudget b = *this;
    if (const char* env = std::getenv("KECS_BUDGET_EDGES")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) b.max_edges = static_cast<int>(v);
    }
    return b;
  }
};

// Budget exhaustion. When a search found feasible solutions before running
// out, the best value seen is carried along; it is a lower bound only.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& message, std::optional<Weight> best_lower_bound = {})
      : Error(ErrorKind::kBudget, message), best_lower_bound_(std::move(best_lower_bound)) {}

  const std::optional<Weight>& best_lower_bound() const { return best_lower_bound_; }
  static constexpr bool kOptimal = false;

 private:
  std::optional<Weight> best_lower_bound_;
};

// Node/time accounting shared by the exponential searches.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  // Returns false once either limit is hit.
  bool Tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes_expanded) return false;
    if ((nodes_ & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.time_limit) {
      timed_out_ = true;
      return false;
    }
    return !timed_out_;
  }

  std::int64_t nodes() const { return nodes_; }
  std::string Describe() const {
    return std::to_string(nodes_) + " nodes expanded" + (timed_out_ ? ", time limit hit" : "");
  }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::int64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace kecs
