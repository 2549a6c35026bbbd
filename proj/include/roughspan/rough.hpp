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

#ifndef ROUGHSPAN_ROUGH_HPP_
#define ROUGHSPAN_ROUGH_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "roughspan/error.hpp"
#include "roughspan/information_system.hpp"

namespace roughspan {

/// Lower approximation, upper approximation, and boundary region of one
/// object subset under one indiscernibility partition. Always satisfies
/// lower <= X <= upper and boundary == upper \ lower.
struct ApproximationTriple {
  ObjectSubset lower;
  ObjectSubset upper;
  ObjectSubset boundary;
  std::size_t universe_size = 0;
};

namespace detail {

// Equivalence classes of "equal value on every attribute in attr_idx",
// as object index lists. Classes are ordered by their smallest member id
// (lexicographic) and each class lists members in id order.
inline std::vector<std::vector<std::size_t>> partition_indices(
    const InformationSystem& sys, const std::vector<std::size_t>& attr_idx) {
  const std::size_t n = sys.universe_size();
  std::map<std::vector<std::string>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> key;
    key.reserve(attr_idx.size());
    for (std::size_t a : attr_idx) key.push_back(sys.value(i, a));
    groups[std::move(key)].push_back(i);
  }
  std::vector<std::vector<std::size_t>> classes;
  classes.reserve(groups.size());
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) {
                return sys.objects()[a] < sys.objects()[b];
              });
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end(),
            [&](const auto& a, const auto& b) {
              return sys.objects()[a.front()] < sys.objects()[b.front()];
            });
  return classes;
}

}  // namespace detail

/// Equivalence classes of the indiscernibility relation induced by `p`.
/// The classes are disjoint, nonempty, cover the universe, and are ordered
/// by their smallest contained object id. The empty attribute subset makes
/// all objects indiscernible, so it yields the single class U.
inline std::vector<ObjectSubset> partition(const InformationSystem& sys,
                                           const AttributeSubset& p) {
  auto classes = detail::partition_indices(sys, detail::attribute_indices(sys, p));
  std::vector<ObjectSubset> out;
  out.reserve(classes.size());
  for (auto& members : classes)
    out.push_back(detail::subset_from_indices(sys, std::move(members)));
  return out;
}

/// Lower/upper/boundary approximation of `x` under the partition of `p`:
/// the lower approximation collects classes fully contained in x, the upper
/// collects classes intersecting x, and the boundary is their difference.
inline ApproximationTriple approximate(const InformationSystem& sys,
                                       const AttributeSubset& p,
                                       const ObjectSubset& x) {
  const std::size_t n = sys.universe_size();
  std::vector<char> in_x(n, 0);
  for (std::size_t i : detail::object_indices(sys, x)) in_x[i] = 1;

  auto classes = detail::partition_indices(sys, detail::attribute_indices(sys, p));
  std::vector<std::size_t> lower, upper;
  for (const auto& members : classes) {
    std::size_t hits = 0;
    for (std::size_t i : members) hits += in_x[i];
    if (hits == 0) continue;
    upper.insert(upper.end(), members.begin(), members.end());
    if (hits == members.size())
      lower.insert(lower.end(), members.begin(), members.end());
  }

  ApproximationTriple triple;
  triple.lower = detail::subset_from_indices(sys, std::move(lower));
  triple.upper = detail::subset_from_indices(sys, std::move(upper));
  std::vector<std::string> boundary;
  std::set_difference(triple.upper.ids.begin(), triple.upper.ids.end(),
                      triple.lower.ids.begin(), triple.lower.ids.end(),
                      std::back_inserter(boundary));
  triple.boundary = ObjectSubset{std::move(boundary)};
  triple.universe_size = n;
  return triple;
}

/// |lower| / |upper|. Undefined (0/0) for the empty subset, which is an error.
inline double accuracy(const InformationSystem& sys, const AttributeSubset& p,
                       const ObjectSubset& x) {
  if (x.empty()) {
    raise(Errc::undefined_accuracy,
          "accuracy is undefined for the empty object subset");
  }
  auto triple = approximate(sys, p, x);
  return static_cast<double>(triple.lower.size()) /
         static_cast<double>(triple.upper.size());
}

inline double roughness(const InformationSystem& sys, const AttributeSubset& p,
                        const ObjectSubset& x) {
  return 1.0 - accuracy(sys, p, x);
}

}  // namespace roughspan

#endif  // ROUGHSPAN_ROUGH_HPP_
