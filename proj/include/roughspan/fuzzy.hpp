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

#ifndef ROUGHSPAN_FUZZY_HPP_
#define ROUGHSPAN_FUZZY_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "roughspan/error.hpp"

namespace roughspan {

// Absolute tolerance for relation axiom checks.
inline constexpr double kRelationEps = 1e-9;

/// A fuzzy set: one membership grade in [0,1] per universe object.
class FuzzySet {
 public:
  FuzzySet(std::vector<std::string> universe, std::vector<double> membership)
      : universe_(std::move(universe)), membership_(std::move(membership)) {
    if (universe_.empty()) {
      raise(Errc::universe_mismatch, "fuzzy set universe must be nonempty");
    }
    if (membership_.size() != universe_.size()) {
      raise(Errc::universe_mismatch,
            "expected one membership grade per universe object");
    }
    for (std::size_t i = 0; i < membership_.size(); ++i) {
      if (!(membership_[i] >= 0.0 && membership_[i] <= 1.0)) {
        raise(Errc::invalid_grade, "grade for '" + universe_[i] +
                                       "' is outside [0,1]");
      }
    }
  }

  static FuzzySet constant(std::vector<std::string> universe, double grade) {
    std::vector<double> membership(universe.size(), grade);
    return FuzzySet(std::move(universe), std::move(membership));
  }

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<double>& membership() const { return membership_; }
  std::size_t size() const { return universe_.size(); }
  double grade(std::size_t i) const { return membership_[i]; }

 private:
  std::vector<std::string> universe_;
  std::vector<double> membership_;
};

/// A fuzzy binary relation over a universe: a square matrix of grades
/// R(x,y) in [0,1]. Whether the similarity axioms (reflexive, symmetric,
/// min-transitive) actually hold is checked by validate_relation, not here;
/// real-world similarity matrices often break min-transitivity.
class FuzzyRelation {
 public:
  FuzzyRelation(std::vector<std::string> universe,
                std::vector<std::vector<double>> values)
      : universe_(std::move(universe)), values_(std::move(values)) {
    if (universe_.empty()) {
      raise(Errc::invalid_matrix, "relation universe must be nonempty");
    }
    if (values_.size() != universe_.size()) {
      raise(Errc::invalid_matrix, "relation matrix must be square");
    }
    for (const auto& row : values_) {
      if (row.size() != universe_.size()) {
        raise(Errc::invalid_matrix, "relation matrix must be square");
      }
      for (double v : row) {
        if (!(v >= 0.0 && v <= 1.0)) {
          raise(Errc::invalid_grade, "relation grade outside [0,1]");
        }
      }
    }
  }

  /// The 0/1 relation of an equivalence partition given as class labels,
  /// one label per universe object.
  static FuzzyRelation from_labels(std::vector<std::string> universe,
                                   const std::vector<std::string>& labels) {
    if (labels.size() != universe.size()) {
      raise(Errc::invalid_matrix, "one class label required per object");
    }
    const std::size_t n = universe.size();
    std::vector<std::vector<double>> values(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        values[i][j] = labels[i] == labels[j] ? 1.0 : 0.0;
    return FuzzyRelation(std::move(universe), std::move(values));
  }

  const std::vector<std::string>& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }
  double at(std::size_t x, std::size_t y) const { return values_[x][y]; }

 private:
  std::vector<std::string> universe_;
  std::vector<std::vector<double>> values_;
};

/// A collection of fuzzy sets acting as fuzzy knowledge granules. The
/// construction of such a partition from raw data is the caller's business;
/// it is always an explicit input here.
class FuzzyPartition {
 public:
  explicit FuzzyPartition(std::vector<FuzzySet> classes)
      : classes_(std::move(classes)) {
    if (classes_.empty()) {
      raise(Errc::missing_partition, "fuzzy partition must be nonempty");
    }
    for (const auto& cls : classes_) {
      if (cls.universe() != classes_.front().universe()) {
        raise(Errc::universe_mismatch,
              "all partition classes must share one universe");
      }
    }
  }

  const std::vector<FuzzySet>& classes() const { return classes_; }
  const std::vector<std::string>& universe() const {
    return classes_.front().universe();
  }

 private:
  std::vector<FuzzySet> classes_;
};

struct FuzzyApproximationPair {
  FuzzySet lower;
  FuzzySet upper;
};

// ---------------------------------------------------------------------------
// Relation validation

enum class RelationAxiom { reflexivity, symmetry, min_transitivity };

inline const char* axiom_name(RelationAxiom a) {
  switch (a) {
    case RelationAxiom::reflexivity: return "reflexivity";
    case RelationAxiom::symmetry: return "symmetry";
    case RelationAxiom::min_transitivity: return "min-transitivity";
  }
  return "unknown";
}

/// One axiom failure: which axiom, on which objects, and by how much.
/// For reflexivity only x is meaningful; for symmetry x,y; for transitivity
/// the witness is the triple (x, y, z) with R(x,y) < min(R(x,z), R(z,y)).
struct RelationViolation {
  RelationAxiom axiom;
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;
  double magnitude = 0.0;
};

enum class ValidationMode { strict, warn, off };

struct ValidationReport {
  std::vector<RelationViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks the similarity axioms against `rel` with tolerance 1e-9.
/// `off` skips the axioms entirely (the constructor already guarantees
/// shape and grade range), `warn` returns the full violation list, and
/// `strict` additionally raises on the first violation found.
inline ValidationReport validate_relation(const FuzzyRelation& rel,
                                          ValidationMode mode) {
  ValidationReport report;
  if (mode == ValidationMode::off) return report;

  const std::size_t n = rel.size();
  for (std::size_t x = 0; x < n; ++x) {
    double d = std::fabs(rel.at(x, x) - 1.0);
    if (d > kRelationEps) {
      report.violations.push_back(
          {RelationAxiom::reflexivity, x, x, x, d});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      double d = std::fabs(rel.at(x, y) - rel.at(y, x));
      if (d > kRelationEps) {
        report.violations.push_back({RelationAxiom::symmetry, x, y, y, d});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        double bound = std::min(rel.at(x, z), rel.at(z, y));
        double d = bound - rel.at(x, y);
        if (d > kRelationEps) {
          report.violations.push_back(
              {RelationAxiom::min_transitivity, x, y, z, d});
        }
      }
    }
  }

  if (mode == ValidationMode::strict && !report.valid()) {
    const auto& v = report.violations.front();
    std::ostringstream msg;
    msg << "fuzzy relation violates " << axiom_name(v.axiom) << " at ("
        << rel.universe()[v.x] << ", " << rel.universe()[v.y];
    if (v.axiom == RelationAxiom::min_transitivity)
      msg << ", " << rel.universe()[v.z];
    msg << ") by " << v.magnitude;
    raise(Errc::invalid_fuzzy_relation, msg.str());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Approximation operators

namespace detail {

inline void require_same_universe(const std::vector<std::string>& a,
                                  const std::vector<std::string>& b) {
  if (a != b) {
    raise(Errc::universe_mismatch, "operands are over different universes");
  }
}

// Scalar inf/sup bounds between a granule g and a reference set f:
//   lower = min over y of max(1 - g(y), f(y))
//   upper = max over y of min(g(y), f(y))
inline std::pair<double, double> scalar_bounds(const FuzzySet& g,
                                               const FuzzySet& f) {
  double lo = 1.0;
  double hi = 0.0;
  for (std::size_t y = 0; y < f.size(); ++y) {
    lo = std::min(lo, std::max(1.0 - g.grade(y), f.grade(y)));
    hi = std::max(hi, std::min(g.grade(y), f.grade(y)));
  }
  return {lo, hi};
}

}  // namespace detail

/// Pointwise approximation of `f` under a fuzzy relation:
///   lower(x) = min over y of max(1 - R(x,y), f(y))
///   upper(x) = max over y of min(R(x,y), f(y))
/// With a reflexive relation the result brackets f pointwise, and with a
/// 0/1 equivalence matrix and 0/1 memberships it degenerates to the crisp
/// lower/upper approximations.
inline FuzzyApproximationPair fuzzy_approximate(const FuzzyRelation& rel,
                                                const FuzzySet& f) {
  detail::require_same_universe(rel.universe(), f.universe());
  const std::size_t n = f.size();
  std::vector<double> lower(n), upper(n);
  for (std::size_t x = 0; x < n; ++x) {
    double lo = 1.0;
    double hi = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      lo = std::min(lo, std::max(1.0 - rel.at(x, y), f.grade(y)));
      hi = std::max(hi, std::min(rel.at(x, y), f.grade(y)));
    }
    lower[x] = lo;
    upper[x] = hi;
  }
  return {FuzzySet(f.universe(), std::move(lower)),
          FuzzySet(f.universe(), std::move(upper))};
}

/// Scalar approximation bounds of a reference set against one fuzzy concept,
/// broadcast back over the universe as constant fuzzy sets.
inline FuzzyApproximationPair fuzzy_approximate(const FuzzySet& concept_set,
                                                const FuzzySet& reference) {
  detail::require_same_universe(concept_set.universe(), reference.universe());
  auto [lo, hi] = detail::scalar_bounds(concept_set, reference);
  return {FuzzySet::constant(reference.universe(), lo),
          FuzzySet::constant(reference.universe(), hi)};
}

/// Sup-min composition over the classes of a fuzzy partition:
///   lower(x) = sup over classes F of min(F(x), min_y max(1 - F(y), f(y)))
///   upper(x) = sup over classes F of min(F(x), max_y min(F(y), f(y)))
inline FuzzyApproximationPair fuzzy_approximate(const FuzzyPartition& part,
                                                const FuzzySet& f) {
  detail::require_same_universe(part.universe(), f.universe());
  const std::size_t n = f.size();
  std::vector<double> lower(n, 0.0), upper(n, 0.0);
  for (const auto& cls : part.classes()) {
    auto [lo, hi] = detail::scalar_bounds(cls, f);
    for (std::size_t x = 0; x < n; ++x) {
      lower[x] = std::max(lower[x], std::min(cls.grade(x), lo));
      upper[x] = std::max(upper[x], std::min(cls.grade(x), hi));
    }
  }
  return {FuzzySet(f.universe(), std::move(lower)),
          FuzzySet(f.universe(), std::move(upper))};
}

/// Fuzzy cardinality: the sum of all membership grades.
inline double sigma_count(const FuzzySet& f) {
  return std::accumulate(f.membership().begin(), f.membership().end(), 0.0);
}

}  // namespace roughspan

#endif  // ROUGHSPAN_FUZZY_HPP_
