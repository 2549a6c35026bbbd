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
//
// Plain comma-separated ingestion. Cells are trimmed of surrounding
// whitespace; there is no quoting or escaping, so values must not contain
// commas. Every file starts with a header row.

#ifndef ROUGHSPAN_CSV_HPP_
#define ROUGHSPAN_CSV_HPP_

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "roughspan/error.hpp"
#include "roughspan/fuzzy.hpp"
#include "roughspan/information_system.hpp"

namespace roughspan {

// Header name that marks the final table column as the decision attribute.
inline constexpr std::string_view kDecisionMarker = "#decision";

namespace detail {

inline std::string trim(std::string_view text) {
  const char* ws = " \t\r\n";
  auto begin = text.find_first_not_of(ws);
  if (begin == std::string_view::npos) return std::string();
  auto end = text.find_last_not_of(ws);
  return std::string(text.substr(begin, end - begin + 1));
}

inline std::vector<std::string> split_row(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

// Splits into nonempty rows of cells; skips lines that are entirely blank.
inline std::vector<std::vector<std::string>> split_rows(
    std::string_view content) {
  std::vector<std::vector<std::string>> rows;
  std::size_t start = 0;
  while (start <= content.size()) {
    auto newline = content.find('\n', start);
    std::string_view line = newline == std::string_view::npos
                                ? content.substr(start)
                                : content.substr(start, newline - start);
    if (!trim(line).empty()) rows.push_back(split_row(line));
    if (newline == std::string_view::npos) break;
    start = newline + 1;
  }
  return rows;
}

inline double parse_grade(const std::string& cell, const std::string& where) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    raise(Errc::invalid_grade,
          "cannot parse '" + cell + "' as a number (" + where + ")");
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    raise(Errc::invalid_grade,
          "grade " + cell + " outside [0,1] (" + where + ")");
  }
  return value;
}

}  // namespace detail

/// Parses an information table. The header names the attributes, the first
/// column carries object ids, and a final column named "#decision" becomes
/// the decision attribute.
inline InformationSystem parse_information_table(std::string_view content) {
  auto rows = detail::split_rows(content);
  if (rows.empty()) raise(Errc::empty_table, "table file has no rows");

  const auto& header = rows.front();
  if (header.size() < 1 || header.front().empty()) {
    raise(Errc::invalid_table, "header must start with the object id column");
  }
  for (std::size_t j = 1; j + 1 < header.size(); ++j) {
    if (header[j] == kDecisionMarker) {
      raise(Errc::invalid_table,
            "'#decision' is only recognized as the final column");
    }
  }
  bool has_decision = header.size() > 1 && header.back() == kDecisionMarker;
  std::vector<std::string> attributes(header.begin() + 1,
                                      header.end() - (has_decision ? 1 : 0));
  if (rows.size() < 2) raise(Errc::empty_table, "table file has no data rows");

  std::vector<std::string> objects;
  std::vector<std::vector<std::string>> values;
  std::vector<std::string> decision_values;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) {
      raise(Errc::ragged_row, "row " + std::to_string(r + 1) + " has " +
                                  std::to_string(row.size()) +
                                  " cells, expected " +
                                  std::to_string(header.size()));
    }
    for (const auto& cell : row) {
      if (cell.empty()) {
        raise(Errc::invalid_table,
              "empty cell in row " + std::to_string(r + 1));
      }
    }
    objects.push_back(row.front());
    values.emplace_back(row.begin() + 1,
                        row.end() - (has_decision ? 1 : 0));
    if (has_decision) decision_values.push_back(row.back());
  }
  return InformationSystem(
      std::move(objects), std::move(attributes), std::move(values),
      has_decision ? std::optional<std::string>(std::string(kDecisionMarker))
                   : std::nullopt,
      std::move(decision_values));
}

/// Parses a square relation matrix. The header lists the universe ids after
/// an ignored corner cell, and each data row repeats its id in the first
/// cell, in header order.
inline FuzzyRelation parse_fuzzy_relation(std::string_view content) {
  auto rows = detail::split_rows(content);
  if (rows.empty()) raise(Errc::empty_table, "relation file has no rows");
  const auto& header = rows.front();
  if (header.size() < 2) {
    raise(Errc::invalid_matrix, "relation header needs at least one id");
  }
  std::vector<std::string> universe(header.begin() + 1, header.end());
  if (rows.size() - 1 != universe.size()) {
    raise(Errc::invalid_matrix,
          "relation matrix must have one row per universe id");
  }
  std::vector<std::vector<double>> values;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) {
      raise(Errc::invalid_matrix,
            "relation row " + std::to_string(r + 1) + " is ragged");
    }
    if (row.front() != universe[r - 1]) {
      raise(Errc::invalid_matrix,
            "relation row ids must match the header order ('" + row.front() +
                "' vs '" + universe[r - 1] + "')");
    }
    std::vector<double> grades;
    grades.reserve(universe.size());
    for (std::size_t c = 1; c < row.size(); ++c) {
      grades.push_back(detail::parse_grade(
          row[c], "row " + std::to_string(r + 1) + ", column " +
                      std::to_string(c + 1)));
    }
    values.push_back(std::move(grades));
  }
  return FuzzyRelation(std::move(universe), std::move(values));
}

/// Parses a fuzzy set as a two-column (id, grade) file with a header row.
inline FuzzySet parse_fuzzy_set(std::string_view content) {
  auto rows = detail::split_rows(content);
  if (rows.size() < 2) raise(Errc::empty_table, "fuzzy set file has no data");
  if (rows.front().size() != 2) {
    raise(Errc::invalid_matrix, "fuzzy set files have exactly two columns");
  }
  std::vector<std::string> universe;
  std::vector<double> membership;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 2) {
      raise(Errc::invalid_matrix,
            "fuzzy set row " + std::to_string(r + 1) + " is ragged");
    }
    for (const auto& seen : universe) {
      if (seen == row.front()) {
        raise(Errc::duplicate_object_id,
              "duplicate object id '" + row.front() + "'");
      }
    }
    universe.push_back(row.front());
    membership.push_back(
        detail::parse_grade(row[1], "row " + std::to_string(r + 1)));
  }
  return FuzzySet(std::move(universe), std::move(membership));
}

/// Parses a fuzzy partition: header of universe ids after an ignored corner
/// cell, then one row per class with a class label and one grade per id.
inline FuzzyPartition parse_fuzzy_partition(std::string_view content) {
  auto rows = detail::split_rows(content);
  if (rows.size() < 2) raise(Errc::empty_table, "partition file has no data");
  const auto& header = rows.front();
  if (header.size() < 2) {
    raise(Errc::invalid_matrix, "partition header needs at least one id");
  }
  std::vector<std::string> universe(header.begin() + 1, header.end());
  std::vector<FuzzySet> classes;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) {
      raise(Errc::invalid_matrix,
            "partition row " + std::to_string(r + 1) + " is ragged");
    }
    std::vector<double> grades;
    grades.reserve(universe.size());
    for (std::size_t c = 1; c < row.size(); ++c) {
      grades.push_back(detail::parse_grade(
          row[c], "row " + std::to_string(r + 1) + ", column " +
                      std::to_string(c + 1)));
    }
    classes.emplace_back(universe, std::move(grades));
  }
  return FuzzyPartition(std::move(classes));
}

/// Reads a whole file into memory.
inline std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(Errc::file_not_found, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace roughspan

#endif  // ROUGHSPAN_CSV_HPP_
