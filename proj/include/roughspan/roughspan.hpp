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

#ifndef ROUGHSPAN_ROUGHSPAN_HPP_
#define ROUGHSPAN_ROUGHSPAN_HPP_

#include "roughspan/csv.hpp"
#include "roughspan/error.hpp"
#include "roughspan/feature_selection.hpp"
#include "roughspan/fuzzy.hpp"
#include "roughspan/information_system.hpp"
#include "roughspan/rough.hpp"
#include "roughspan/sentences.hpp"
#include "roughspan/solver.hpp"
#include "roughspan/span.hpp"

#endif  // ROUGHSPAN_ROUGHSPAN_HPP_
