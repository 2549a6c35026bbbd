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

#ifndef ROUGHSPAN_INFORMATION_SYSTEM_HPP_
#define ROUGHSPAN_INFORMATION_SYSTEM_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "roughspan/error.hpp"

namespace roughspan {

/// A finite universe of named objects described by categorical attributes,
/// optionally with one designated decision attribute. Values are opaque
/// string tokens compared for exact equality; there is no numeric binning
/// and no missing-cell support.
class InformationSystem {
 public:
  /// Builds a system from parallel containers. `rows[i][j]` is the value of
  /// `attributes[j]` on `objects[i]`; `decision_values`, when a decision
  /// attribute is named, gives one decision token per object.
  InformationSystem(std::vector<std::string> objects,
                    std::vector<std::string> attributes,
                    std::vector<std::vector<std::string>> rows,
                    std::optional<std::string> decision = std::nullopt,
                    std::vector<std::string> decision_values = {})
      : objects_(std::move(objects)),
        attributes_(std::move(attributes)),
        rows_(std::move(rows)),
        decision_(std::move(decision)),
        decision_values_(std::move(decision_values)) {
    if (objects_.empty()) {
      raise(Errc::empty_table, "universe must contain at least one object");
    }
    if (rows_.size() != objects_.size()) {
      raise(Errc::invalid_table, "one value row required per object");
    }
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      if (rows_[i].size() != attributes_.size()) {
        raise(Errc::ragged_row, "object '" + objects_[i] + "' has " +
                                    std::to_string(rows_[i].size()) +
                                    " values, expected " +
                                    std::to_string(attributes_.size()));
      }
      auto [it, inserted] = object_index_.emplace(objects_[i], i);
      (void)it;
      if (!inserted) {
        raise(Errc::duplicate_object_id,
              "duplicate object id '" + objects_[i] + "'");
      }
    }
    for (std::size_t j = 0; j < attributes_.size(); ++j) {
      auto [it, inserted] = attribute_index_.emplace(attributes_[j], j);
      (void)it;
      if (!inserted) {
        raise(Errc::invalid_table,
              "duplicate attribute name '" + attributes_[j] + "'");
      }
    }
    if (decision_) {
      if (attribute_index_.count(*decision_) != 0) {
        raise(Errc::invalid_table,
              "decision attribute '" + *decision_ +
                  "' also appears among conditional attributes");
      }
      if (decision_values_.size() != objects_.size()) {
        raise(Errc::invalid_table, "one decision value required per object");
      }
    } else if (!decision_values_.empty()) {
      raise(Errc::invalid_table, "decision values given without a decision attribute");
    }
  }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::optional<std::string>& decision() const { return decision_; }
  std::size_t universe_size() const { return objects_.size(); }

  bool has_object(const std::string& id) const {
    return object_index_.count(id) != 0;
  }
  bool has_attribute(const std::string& name) const {
    return attribute_index_.count(name) != 0;
  }

  std::size_t object_index(const std::string& id) const {
    auto it = object_index_.find(id);
    if (it == object_index_.end()) {
      raise(Errc::object_not_found, "object id '" + id + "' not in universe");
    }
    return it->second;
  }

  std::size_t attribute_index(const std::string& name) const {
    auto it = attribute_index_.find(name);
    if (it == attribute_index_.end()) {
      raise(Errc::attribute_not_found, "attribute '" + name + "' not in table");
    }
    return it->second;
  }

  const std::string& value(std::size_t object, std::size_t attribute) const {
    return rows_[object][attribute];
  }

  const std::string& decision_value(std::size_t object) const {
    if (!decision_) {
      raise(Errc::missing_decision, "table has no decision attribute");
    }
    return decision_values_[object];
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<std::vector<std::string>> rows_;
  std::optional<std::string> decision_;
  std::vector<std::string> decision_values_;
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::size_t> attribute_index_;
};

namespace detail {

// Sorts and deduplicates in place; all ordered output in this library uses
// plain lexicographic order on the id/name strings.
inline void sort_unique(std::vector<std::string>& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

}  // namespace detail

/// A subset of the conditional attributes. Names are kept sorted and unique;
/// the empty subset is legal and induces the coarsest partition {U}.
struct AttributeSubset {
  std::vector<std::string> names;

  static AttributeSubset of(const InformationSystem& sys,
                            std::vector<std::string> names) {
    detail::sort_unique(names);
    for (const auto& name : names) {
      if (!sys.has_attribute(name)) {
        raise(Errc::attribute_not_found,
              "attribute '" + name + "' not in table");
      }
    }
    return AttributeSubset{std::move(names)};
  }

  bool empty() const { return names.empty(); }
  std::size_t size() const { return names.size(); }
  bool contains(const std::string& name) const {
    return std::binary_search(names.begin(), names.end(), name);
  }
};

/// A subset of the universe, as sorted unique object ids.
struct ObjectSubset {
  std::vector<std::string> ids;

  static ObjectSubset of(const InformationSystem& sys,
                         std::vector<std::string> ids) {
    detail::sort_unique(ids);
    for (const auto& id : ids) {
      if (!sys.has_object(id)) {
        raise(Errc::object_not_found, "object id '" + id + "' not in universe");
      }
    }
    return ObjectSubset{std::move(ids)};
  }

  bool empty() const { return ids.empty(); }
  std::size_t size() const { return ids.size(); }
  bool contains(const std::string& id) const {
    return std::binary_search(ids.begin(), ids.end(), id);
  }
  bool subset_of(const ObjectSubset& other) const {
    return std::includes(other.ids.begin(), other.ids.end(), ids.begin(),
                         ids.end());
  }
};

inline bool operator==(const ObjectSubset& a, const ObjectSubset& b) {
  return a.ids == b.ids;
}
inline bool operator==(const AttributeSubset& a, const AttributeSubset& b) {
  return a.names == b.names;
}

namespace detail {

inline std::vector<std::size_t> attribute_indices(const InformationSystem& sys,
                                              const AttributeSubset& p) {
  std::vector<std::size_t> out;
  out.reserve(p.names.size());
  for (const auto& name : p.names) out.push_back(sys.attribute_index(name));
  return out;
}

inline std::vector<std::size_t> object_indices(const InformationSystem& sys,
                                           const ObjectSubset& x) {
  std::vector<std::size_t> out;
  out.reserve(x.ids.size());
  for (const auto& id : x.ids) out.push_back(sys.object_index(id));
  return out;
}

inline ObjectSubset subset_from_indices(const InformationSystem& sys,
                                        std::vector<std::size_t> indices) {
  std::vector<std::string> ids;
  ids.reserve(indices.size());
  for (std::size_t i : indices) ids.push_back(sys.objects()[i]);
  sort_unique(ids);
  return ObjectSubset{std::move(ids)};
}

}  // namespace detail

}  // namespace roughspan

#endif  // ROUGHSPAN_INFORMATION_SYSTEM_HPP_
