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

#ifndef ROUGHSPAN_ERROR_HPP_
#define ROUGHSPAN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace roughspan {

// Every failure the library can signal. The names double as the machine
// readable "code" field in CLI error reports, so they are stable API.
enum class Errc {
  attribute_not_found,
  object_not_found,
  undefined_accuracy,
  invalid_fuzzy_relation,
  universe_mismatch,
  missing_partition,
  empty_attribute_set,
  universe_too_large,
  invalid_seed,
  missing_decision,
  duplicate_object_id,
  ragged_row,
  empty_table,
  invalid_weights,
  invalid_grade,
  invalid_table,
  invalid_matrix,
  invalid_config,
  file_not_found,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::attribute_not_found: return "AttributeNotFound";
    case Errc::object_not_found: return "ObjectNotFound";
    case Errc::undefined_accuracy: return "UndefinedAccuracy";
    case Errc::invalid_fuzzy_relation: return "InvalidFuzzyRelation";
    case Errc::universe_mismatch: return "UniverseMismatch";
    case Errc::missing_partition: return "MissingPartition";
    case Errc::empty_attribute_set: return "EmptyAttributeSet";
    case Errc::universe_too_large: return "UniverseTooLarge";
    case Errc::invalid_seed: return "InvalidSeed";
    case Errc::missing_decision: return "MissingDecision";
    case Errc::duplicate_object_id: return "DuplicateObjectId";
    case Errc::ragged_row: return "RaggedRow";
    case Errc::empty_table: return "EmptyTable";
    case Errc::invalid_weights: return "InvalidWeights";
    case Errc::invalid_grade: return "InvalidGrade";
    case Errc::invalid_table: return "InvalidTable";
    case Errc::invalid_matrix: return "InvalidMatrix";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::file_not_found: return "FileNotFound";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace roughspan

#endif  // ROUGHSPAN_ERROR_HPP_
