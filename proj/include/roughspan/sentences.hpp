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
// Bundled worked example: two sentences scored against a nine-word domain
// vocabulary. The lower/upper approximation vectors were produced with a
// lexical similarity relation that is not distributed, so they ship here as
// data, together with the reference span grid that `repro-table1` checks.
// Two grid cells are known misprints (the w1=0.8 row repeats the w1=0.2
// row); for those the check uses the recomputed value instead.

#ifndef ROUGHSPAN_SENTENCES_HPP_
#define ROUGHSPAN_SENTENCES_HPP_

#include <string>
#include <vector>

#include "roughspan/fuzzy.hpp"

namespace roughspan::sentences {

// Tolerance that absorbs the reference grid's mixed rounding/truncation.
inline constexpr double kReferenceTolerance = 5e-4;

inline const std::vector<std::string>& universe() {
  static const std::vector<std::string> words = {
      "kids", "group", "standing", "boys", "background",
      "old",  "man",   "yard",     "playing"};
  return words;
}

inline const FuzzySet& sentence1_lower() {
  static const FuzzySet f(universe(),
                          {0.6667, 0.5556, 0.5455, 0.6667, 0.5455, 0.5455,
                           0.6667, 0.6923, 0.7647});
  return f;
}

inline const FuzzySet& sentence1_upper() {
  static const FuzzySet f(universe(),
                          {0.6667, 1.0, 1.0, 1.0, 1.0, 0.5455, 1.0, 1.0, 1.0});
  return f;
}

inline const FuzzySet& sentence2_lower() {
  static const FuzzySet f(universe(),
                          {0.6667, 0.7778, 0.8334, 0.6667, 0.8182, 0.8334,
                           0.6667, 0.8462, 0.8823});
  return f;
}

inline const FuzzySet& sentence2_upper() {
  static const FuzzySet f(universe(),
                          {1.0, 1.0, 1.0, 0.6667, 1.0, 1.0, 1.0, 1.0, 1.0});
  return f;
}

/// One row of the reference span grid. `expected_*` is what the computation
/// should produce: for ordinary rows it equals the printed reference value,
/// for the erratum row it is the recomputed value.
struct ReferenceRow {
  double w1;
  double printed_s1;
  double printed_s2;
  bool erratum;
  double expected_s1;
  double expected_s2;
};

inline const std::vector<ReferenceRow>& reference_table() {
  static const std::vector<ReferenceRow> rows = {
      {0.2, 0.8554, 0.9257, false, 0.8554, 0.9257},
      {0.1, 0.8839, 0.9443, false, 0.8839, 0.9443},
      {0.8, 0.8554, 0.9257, true, 0.6846, 0.8140},
      {0.9, 0.6561, 0.7954, false, 0.6561, 0.7954},
      {0.5, 0.7700, 0.8698, false, 0.7700, 0.8698},
      {0.3, 0.8270, 0.9071, false, 0.8270, 0.9071},
      {0.7, 0.7130, 0.8326, false, 0.7130, 0.8326},
  };
  return rows;
}

}  // namespace roughspan::sentences

#endif  // ROUGHSPAN_SENTENCES_HPP_
