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

#ifndef ROUGHSPAN_SPAN_HPP_
#define ROUGHSPAN_SPAN_HPP_

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "roughspan/error.hpp"
#include "roughspan/fuzzy.hpp"
#include "roughspan/information_system.hpp"
#include "roughspan/rough.hpp"

namespace roughspan {

/// The convex weight pair (w1, w2) of every span measure. w1 weighs the
/// lower-approximation term, w2 the boundary or upper term. Callers normally
/// supply only w1; w2 is derived as 1 - w1 so the pair cannot drift apart.
class SpanWeights {
 public:
  static SpanWeights from_w1(double w1) { return SpanWeights(w1, 1.0 - w1); }

  SpanWeights(double w1, double w2) : w1_(w1), w2_(w2) {
    if (!(w1 >= 0.0 && w1 <= 1.0) || !(w2 >= 0.0 && w2 <= 1.0)) {
      raise(Errc::invalid_weights, "span weights must lie in [0,1]");
    }
    if (std::fabs(w1 + w2 - 1.0) > 1e-9) {
      raise(Errc::invalid_weights, "span weights must sum to 1");
    }
  }

  double w1() const { return w1_; }
  double w2() const { return w2_; }

 private:
  double w1_;
  double w2_;
};

enum class SpanMeasure { delta, delta_prime, complete, hybrid, fuzzy };

inline const char* measure_name(SpanMeasure m) {
  switch (m) {
    case SpanMeasure::delta: return "delta";
    case SpanMeasure::delta_prime: return "delta-prime";
    case SpanMeasure::complete: return "complete";
    case SpanMeasure::hybrid: return "hybrid";
    case SpanMeasure::fuzzy: return "fuzzy";
  }
  return "unknown";
}

/// A computed span. delta, delta-prime, and fuzzy spans lie in [0,1];
/// complete and hybrid spans sum over attributes and may exceed 1.
struct SpanValue {
  double value = 0.0;
  SpanMeasure measure = SpanMeasure::delta;
  SpanWeights weights = SpanWeights::from_w1(0.5);
};

// The two weighted-average forms, written once over cardinalities so that
// every caller (the set-level functions below, the solver's bitmask
// evaluator, the fuzzy variant) produces bit-identical doubles for equal
// counts.
inline double span_delta_from_counts(double lower, double boundary,
                                     std::size_t universe, SpanWeights w) {
  const double n = static_cast<double>(universe);
  return w.w1() * (lower / n) + w.w2() * (boundary / n);
}

inline double span_delta_prime_from_counts(double lower, double upper,
                                           std::size_t universe,
                                           SpanWeights w) {
  const double n = static_cast<double>(universe);
  return w.w1() * (lower / n) + w.w2() * (upper / n);
}

/// Boundary-form span of an already computed approximation triple:
///   w1 * |lower|/|U| + w2 * |boundary|/|U|
inline SpanValue span_delta(const ApproximationTriple& t, SpanWeights w) {
  return {span_delta_from_counts(static_cast<double>(t.lower.size()),
                                 static_cast<double>(t.boundary.size()),
                                 t.universe_size, w),
          SpanMeasure::delta, w};
}

/// Upper-form span of an already computed approximation triple:
///   w1 * |lower|/|U| + w2 * |upper|/|U|
/// Since the upper approximation contains the lower one, this always
/// dominates the boundary form: delta' = delta + w2 * |lower|/|U|.
inline SpanValue span_delta_prime(const ApproximationTriple& t,
                                  SpanWeights w) {
  return {span_delta_prime_from_counts(static_cast<double>(t.lower.size()),
                                       static_cast<double>(t.upper.size()),
                                       t.universe_size, w),
          SpanMeasure::delta_prime, w};
}

inline SpanValue span_delta(const InformationSystem& sys,
                            const AttributeSubset& p, const ObjectSubset& x,
                            SpanWeights w) {
  return span_delta(approximate(sys, p, x), w);
}

inline SpanValue span_delta_prime(const InformationSystem& sys,
                                  const AttributeSubset& p,
                                  const ObjectSubset& x, SpanWeights w) {
  return span_delta_prime(approximate(sys, p, x), w);
}

/// Sum of single-attribute upper-form spans over every attribute in p.
/// With include_full_set the boundary-form span of the whole subset is
/// added on top; hybrid_span is the variant that adds the upper form
/// instead, and is the preferred full-set flavour.
inline SpanValue complete_span(const InformationSystem& sys,
                               const AttributeSubset& p, const ObjectSubset& x,
                               SpanWeights w, bool include_full_set = false) {
  if (p.empty()) {
    raise(Errc::empty_attribute_set,
          "complete span needs at least one attribute");
  }
  double total = 0.0;
  for (const auto& name : p.names) {
    AttributeSubset single{{name}};
    total += span_delta_prime(sys, single, x, w).value;
  }
  if (include_full_set) {
    total += span_delta(sys, p, x, w).value;
  }
  return {total, SpanMeasure::complete, w};
}

/// Sum of single-attribute upper-form spans plus the upper-form span of the
/// whole subset.
inline SpanValue hybrid_span(const InformationSystem& sys,
                             const AttributeSubset& p, const ObjectSubset& x,
                             SpanWeights w) {
  if (p.empty()) {
    raise(Errc::empty_attribute_set,
          "hybrid span needs at least one attribute");
  }
  double total = 0.0;
  for (const auto& name : p.names) {
    AttributeSubset single{{name}};
    total += span_delta_prime(sys, single, x, w).value;
  }
  total += span_delta_prime(sys, p, x, w).value;
  return {total, SpanMeasure::hybrid, w};
}

/// Upper-form span of a fuzzy rough set, with fuzzy cardinalities:
///   w1 * sigma(lower)/|U| + w2 * sigma(upper)/|U|
inline SpanValue fuzzy_span(const FuzzySet& lower, const FuzzySet& upper,
                            SpanWeights w) {
  if (lower.universe() != upper.universe()) {
    raise(Errc::universe_mismatch,
          "lower and upper fuzzy sets are over different universes");
  }
  return {span_delta_prime_from_counts(sigma_count(lower), sigma_count(upper),
                                       lower.size(), w),
          SpanMeasure::fuzzy, w};
}

inline SpanValue fuzzy_span(const FuzzyApproximationPair& pair,
                            SpanWeights w) {
  return fuzzy_span(pair.lower, pair.upper, w);
}

}  // namespace roughspan

#endif  // ROUGHSPAN_SPAN_HPP_
