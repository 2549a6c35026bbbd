// Copyright 2026 The roughspan Authors
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

#ifndef ROUGHSPAN_FEATURE_SELECTION_HPP_
#define ROUGHSPAN_FEATURE_SELECTION_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "roughspan/error.hpp"
#include "roughspan/information_system.hpp"
#include "roughspan/rough.hpp"
#include "roughspan/span.hpp"

namespace roughspan {

// Criterion improvements below this are treated as stagnation.
inline constexpr double kSelectionEps = 1e-12;

struct SelectionStep {
  std::string attribute;
  double criterion = 0.0;       // mean upper-form span over decision classes
  double mean_accuracy = 0.0;   // mean |lower|/|upper| over decision classes
};

/// Outcome of greedy forward selection. The criterion values along the
/// trace are strictly increasing by construction, and the mean accuracy is
/// non-decreasing because adding attributes only refines the partition.
struct SelectionResult {
  AttributeSubset selected;
  std::vector<SelectionStep> trace;
  static constexpr const char* criterion = "delta_prime_mean";
};

/// The decision classes of a decision table: objects grouped by decision
/// value, ordered by smallest contained object id.
inline std::vector<ObjectSubset> decision_classes(
    const InformationSystem& sys) {
  if (!sys.decision()) {
    raise(Errc::missing_decision, "table has no decision attribute");
  }
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < sys.universe_size(); ++i) {
    groups[sys.decision_value(i)].push_back(i);
  }
  std::vector<ObjectSubset> classes;
  classes.reserve(groups.size());
  for (auto& [value, members] : groups) {
    classes.push_back(detail::subset_from_indices(sys, std::move(members)));
  }
  std::sort(classes.begin(), classes.end(),
            [](const ObjectSubset& a, const ObjectSubset& b) {
              return a.ids.front() < b.ids.front();
            });
  return classes;
}

namespace detail {

struct CriterionValue {
  double criterion = 0.0;
  double mean_accuracy = 0.0;
  bool all_definable = false;
};

inline CriterionValue evaluate_criterion(
    const InformationSystem& sys, const AttributeSubset& p,
    const std::vector<ObjectSubset>& classes, SpanWeights w) {
  CriterionValue out;
  out.all_definable = true;
  for (const auto& cls : classes) {
    auto triple = approximate(sys, p, cls);
    out.criterion += span_delta_prime(triple, w).value;
    out.mean_accuracy += static_cast<double>(triple.lower.size()) /
                         static_cast<double>(triple.upper.size());
    if (triple.lower.size() != triple.upper.size()) out.all_definable = false;
  }
  out.criterion /= static_cast<double>(classes.size());
  out.mean_accuracy /= static_cast<double>(classes.size());
  return out;
}

}  // namespace detail

/// Greedy forward feature selection on a decision table. Each round scans
/// every unselected attribute, scores the enlarged subset by the mean
/// upper-form span over the decision classes, and keeps the best candidate
/// (ties to the lexicographically first name). The loop stops when the
/// criterion no longer strictly improves, when every decision class becomes
/// definable (mean accuracy 1 certifies the selection), or when
/// max_features is reached.
inline SelectionResult select_features(
    const InformationSystem& sys, SpanWeights w,
    std::optional<std::size_t> max_features = std::nullopt) {
  if (!sys.decision()) {
    raise(Errc::missing_decision,
          "feature selection needs a decision attribute");
  }
  if (sys.attributes().empty()) {
    raise(Errc::empty_attribute_set,
          "feature selection needs at least one conditional attribute");
  }

  const auto classes = decision_classes(sys);
  SelectionResult result;
  const std::size_t cap = max_features.value_or(sys.attributes().size());

  std::vector<std::string> remaining = sys.attributes();
  detail::sort_unique(remaining);
  double current =
      detail::evaluate_criterion(sys, result.selected, classes, w).criterion;

  while (result.selected.size() < cap && !remaining.empty()) {
    double best_criterion = 0.0;
    detail::CriterionValue best_value;
    std::size_t best_pos = remaining.size();
    for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
      AttributeSubset candidate = result.selected;
      candidate.names.push_back(remaining[pos]);
      detail::sort_unique(candidate.names);
      auto value = detail::evaluate_criterion(sys, candidate, classes, w);
      if (best_pos == remaining.size() || value.criterion > best_criterion) {
        best_criterion = value.criterion;
        best_value = value;
        best_pos = pos;
      }
    }
    if (best_criterion <= current + kSelectionEps) break;

    std::string added = remaining[best_pos];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_pos));
    result.selected.names.push_back(added);
    detail::sort_unique(result.selected.names);
    result.trace.push_back(
        {std::move(added), best_criterion, best_value.mean_accuracy});
    current = best_criterion;
    if (best_value.all_definable) break;
  }
  return result;
}

}  // namespace roughspan

#endif  // ROUGHSPAN_FEATURE_SELECTION_HPP_
