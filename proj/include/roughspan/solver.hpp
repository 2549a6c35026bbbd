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

#ifndef ROUGHSPAN_SOLVER_HPP_
#define ROUGHSPAN_SOLVER_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roughspan/error.hpp"
#include "roughspan/information_system.hpp"
#include "roughspan/rough.hpp"
#include "roughspan/span.hpp"

namespace roughspan {

enum class SolverStrategy { exhaustive, greedy, local };

inline const char* strategy_name(SolverStrategy s) {
  switch (s) {
    case SolverStrategy::exhaustive: return "exhaustive";
    case SolverStrategy::greedy: return "greedy";
    case SolverStrategy::local: return "local";
  }
  return "unknown";
}

/// Search configuration. Ties are always broken the same way and are not
/// configurable: prefer the smaller subset, then the lexicographically
/// smaller sorted id sequence. `exhaustive_limit` guards the 2^|U|
/// enumeration; raising it past 20 is the caller's risk.
struct SolverConfig {
  SpanMeasure measure = SpanMeasure::delta_prime;
  SpanWeights weights = SpanWeights::from_w1(0.5);
  std::optional<std::size_t> max_size;
  SolverStrategy strategy = SolverStrategy::exhaustive;
  std::size_t exhaustive_limit = 20;
};

struct SpanningSetResult {
  ObjectSubset subset;
  SpanValue span;
  SolverStrategy strategy = SolverStrategy::exhaustive;
  bool optimal = false;
};

namespace detail {

// Evaluates the configured measure for membership vectors, with the
// partitions computed once up front. The weighted sums reuse the
// *_from_counts primitives in the same order as the set-level span
// functions, so an evaluation here is bit-identical to re-evaluating the
// measure on the extracted subset.
class SpanEvaluator {
 public:
  SpanEvaluator(const InformationSystem& sys, const AttributeSubset& p,
                SpanMeasure measure, SpanWeights weights)
      : n_(sys.universe_size()), measure_(measure), weights_(weights) {
    if (measure == SpanMeasure::fuzzy) {
      raise(Errc::invalid_config,
            "the fuzzy measure has no information-table solver");
    }
    const bool per_attribute = measure == SpanMeasure::complete ||
                               measure == SpanMeasure::hybrid;
    const bool full_subset = measure != SpanMeasure::complete;
    if (per_attribute) {
      if (p.empty()) {
        raise(Errc::empty_attribute_set,
              "per-attribute span sums need at least one attribute");
      }
      for (const auto& name : p.names) {
        attr_parts_.push_back(
            make_part(sys, {sys.attribute_index(name)}));
      }
    }
    if (full_subset) {
      full_part_ = make_part(sys, attribute_indices(sys, p));
    }
    std::size_t max_classes = 1;
    for (const auto& part : attr_parts_)
      max_classes = std::max(max_classes, part.class_size.size());
    max_classes = std::max(max_classes, full_part_.class_size.size());
    scratch_.resize(max_classes);
  }

  std::size_t universe_size() const { return n_; }

  double eval(const std::vector<char>& member) const {
    double total = 0.0;
    if (measure_ == SpanMeasure::complete || measure_ == SpanMeasure::hybrid) {
      for (const auto& part : attr_parts_) {
        auto [lower, upper] = counts(part, member);
        total += span_delta_prime_from_counts(
            static_cast<double>(lower), static_cast<double>(upper), n_,
            weights_);
      }
    }
    if (measure_ == SpanMeasure::delta) {
      auto [lower, upper] = counts(full_part_, member);
      total = span_delta_from_counts(static_cast<double>(lower),
                                     static_cast<double>(upper - lower), n_,
                                     weights_);
    } else if (measure_ == SpanMeasure::delta_prime ||
               measure_ == SpanMeasure::hybrid) {
      auto [lower, upper] = counts(full_part_, member);
      total += span_delta_prime_from_counts(static_cast<double>(lower),
                                            static_cast<double>(upper), n_,
                                            weights_);
    }
    return total;
  }

 private:
  struct Part {
    std::vector<std::uint32_t> class_of;
    std::vector<std::uint32_t> class_size;
  };

  static Part make_part(const InformationSystem& sys,
                        const std::vector<std::size_t>& attr_idx) {
    Part part;
    part.class_of.resize(sys.universe_size());
    auto classes = partition_indices(sys, attr_idx);
    part.class_size.reserve(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t i : classes[c])
        part.class_of[i] = static_cast<std::uint32_t>(c);
      part.class_size.push_back(static_cast<std::uint32_t>(classes[c].size()));
    }
    return part;
  }

  std::pair<std::size_t, std::size_t> counts(
      const Part& part, const std::vector<char>& member) const {
    const std::size_t k = part.class_size.size();
    std::fill(scratch_.begin(), scratch_.begin() + k, 0u);
    for (std::size_t i = 0; i < n_; ++i) {
      if (member[i]) ++scratch_[part.class_of[i]];
    }
    std::size_t lower = 0, upper = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (scratch_[c] == 0) continue;
      upper += part.class_size[c];
      if (scratch_[c] == part.class_size[c]) lower += part.class_size[c];
    }
    return {lower, upper};
  }

  std::size_t n_;
  SpanMeasure measure_;
  SpanWeights weights_;
  std::vector<Part> attr_parts_;
  Part full_part_;
  mutable std::vector<std::uint32_t> scratch_;
};

// Universe indices ordered by object id, so that walking them visits ids in
// ascending lexicographic order.
inline std::vector<std::size_t> lexicographic_order(
    const InformationSystem& sys) {
  std::vector<std::size_t> order(sys.universe_size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sys.objects()[a] < sys.objects()[b];
  });
  return order;
}

// True when `a` beats `b` under the fixed tie-break: smaller cardinality
// first, then the lexicographically smaller sorted id sequence.
inline bool tie_break_less(const InformationSystem& sys,
                           const std::vector<std::size_t>& lex_order,
                           const std::vector<char>& a,
                           const std::vector<char>& b) {
  std::size_t card_a = 0, card_b = 0;
  for (char m : a) card_a += m != 0;
  for (char m : b) card_b += m != 0;
  if (card_a != card_b) return card_a < card_b;
  for (std::size_t i : lex_order) {
    if (a[i] != b[i]) return a[i] != 0;  // earlier id present => lex smaller
  }
  return false;
}

inline ObjectSubset subset_from_membership(const InformationSystem& sys,
                                           const std::vector<char>& member) {
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < member.size(); ++i)
    if (member[i]) indices.push_back(i);
  return subset_from_indices(sys, std::move(indices));
}

}  // namespace detail

/// Global maximization of the configured measure by enumerating every
/// subset, honoring max_size. The returned subset is the canonical one
/// among all maximizers under the fixed tie-break, and `optimal` is true.
inline SpanningSetResult solve_exhaustive(const InformationSystem& sys,
                                          const AttributeSubset& p,
                                          const SolverConfig& config) {
  const std::size_t n = sys.universe_size();
  if (n > config.exhaustive_limit) {
    raise(Errc::universe_too_large,
          "universe of " + std::to_string(n) +
              " objects exceeds the exhaustive enumeration limit of " +
              std::to_string(config.exhaustive_limit));
  }
  const std::size_t max_size = config.max_size.value_or(n);
  detail::SpanEvaluator evaluator(sys, p, config.measure, config.weights);
  const auto lex_order = detail::lexicographic_order(sys);

  std::vector<char> member(n, 0), best(n, 0);
  double best_span = evaluator.eval(best);  // the empty subset, always feasible
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_size)
      continue;
    for (std::size_t i = 0; i < n; ++i) member[i] = (mask >> i) & 1 ? 1 : 0;
    const double span = evaluator.eval(member);
    if (span > best_span ||
        (span == best_span &&
         detail::tie_break_less(sys, lex_order, member, best))) {
      best_span = span;
      best = member;
    }
  }
  return {detail::subset_from_membership(sys, best),
          SpanValue{best_span, config.measure, config.weights},
          SolverStrategy::exhaustive, true};
}

/// Greedy forward construction: starting from the empty subset, each step
/// scans every candidate addition, takes the one with the best resulting
/// span (ties to the smallest object id), and stops when no addition
/// strictly improves the span or max_size is reached.
inline SpanningSetResult solve_greedy(const InformationSystem& sys,
                                      const AttributeSubset& p,
                                      const SolverConfig& config) {
  const std::size_t n = sys.universe_size();
  const std::size_t max_size = config.max_size.value_or(n);
  detail::SpanEvaluator evaluator(sys, p, config.measure, config.weights);
  const auto lex_order = detail::lexicographic_order(sys);

  std::vector<char> member(n, 0);
  double current = evaluator.eval(member);
  std::size_t count = 0;
  while (count < max_size) {
    double best_span = current;
    std::size_t best_index = n;
    for (std::size_t i : lex_order) {
      if (member[i]) continue;
      member[i] = 1;
      const double span = evaluator.eval(member);
      member[i] = 0;
      if (span > best_span) {  // strict: first (smallest-id) winner is kept
        best_span = span;
        best_index = i;
      }
    }
    if (best_index == n) break;
    member[best_index] = 1;
    current = best_span;
    ++count;
  }
  return {detail::subset_from_membership(sys, member),
          SpanValue{current, config.measure, config.weights},
          SolverStrategy::greedy, false};
}

/// Deterministic hill climbing from a seed subset over the single-element
/// add / remove / swap neighborhood. Each iteration moves to the best
/// strictly improving neighbor (ties broken like everywhere else) and the
/// climb stops at a local maximum or after max_iters iterations.
inline SpanningSetResult solve_local(const InformationSystem& sys,
                                     const AttributeSubset& p,
                                     const SolverConfig& config,
                                     const ObjectSubset& seed,
                                     std::size_t max_iters = 1000) {
  const std::size_t n = sys.universe_size();
  const std::size_t max_size = config.max_size.value_or(n);
  if (seed.size() > max_size) {
    raise(Errc::invalid_seed, "seed of " + std::to_string(seed.size()) +
                                  " objects violates max_size " +
                                  std::to_string(max_size));
  }
  detail::SpanEvaluator evaluator(sys, p, config.measure, config.weights);
  const auto lex_order = detail::lexicographic_order(sys);

  std::vector<char> member(n, 0);
  for (std::size_t i : detail::object_indices(sys, seed)) member[i] = 1;
  double current = evaluator.eval(member);
  std::size_t count = seed.size();

  std::vector<char> candidate = member;
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    std::vector<char> best = member;
    double best_span = current;
    bool improved = false;
    auto consider = [&](const std::vector<char>& next) {
      const double span = evaluator.eval(next);
      if (span > best_span ||
          (improved && span == best_span &&
           detail::tie_break_less(sys, lex_order, next, best))) {
        best_span = span;
        best = next;
        improved = true;
      }
    };
    for (std::size_t i = 0; i < n; ++i) {
      if (!member[i] && count < max_size) {
        candidate = member;
        candidate[i] = 1;
        consider(candidate);
      }
      if (member[i]) {
        candidate = member;
        candidate[i] = 0;
        consider(candidate);
      }
    }
    for (std::size_t out = 0; out < n; ++out) {
      if (!member[out]) continue;
      for (std::size_t in = 0; in < n; ++in) {
        if (member[in]) continue;
        candidate = member;
        candidate[out] = 0;
        candidate[in] = 1;
        consider(candidate);
      }
    }
    if (!improved) break;
    member = best;
    current = best_span;
    count = 0;
    for (char m : member) count += m != 0;
  }
  return {detail::subset_from_membership(sys, member),
          SpanValue{current, config.measure, config.weights},
          SolverStrategy::local, false};
}

/// Dispatch on config.strategy; local search starts from the empty seed.
inline SpanningSetResult solve(const InformationSystem& sys,
                               const AttributeSubset& p,
                               const SolverConfig& config) {
  switch (config.strategy) {
    case SolverStrategy::exhaustive: return solve_exhaustive(sys, p, config);
    case SolverStrategy::greedy: return solve_greedy(sys, p, config);
    case SolverStrategy::local:
      return solve_local(sys, p, config, ObjectSubset{});
  }
  raise(Errc::invalid_config, "unknown solver strategy");
}

}  // namespace roughspan

#endif  // ROUGHSPAN_SOLVER_HPP_
