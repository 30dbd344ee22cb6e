// Copyright 2026 The auglab Authors
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


#ifndef AUGLAB_INSTANCE_JSON_H_
#define AUGLAB_INSTANCE_JSON_H_

#include <optional>
#include <string>

#include "auglab/instance.h"
#include "json.hpp"

namespace auglab {

// An instance document: the feasible set plus an optional start point.
//
// H-representation:
//   { "n": 2, "rows": [{"coeffs": [1, 1], "sense": "LE", "rhs": 1}],
//     "lower": [0, 0], "upper": [1, 1], "objective": [3, "-2"],
//     "maximize": true, "start": [0, 0] }
// V-representation:
//   { "n": 2, "points": [[0, 0], [1, 0]], "objective": [1, 1] }
//
// Integers may be JSON numbers or decimal strings; values beyond 2^53 are
// written as strings. Objective and row entries may be rationals ("3/2",
// "0.25"); they are cleared to integers on load.
struct InstanceDocument {
  FeasibleSet set;
  std::optional<IntVector> start;
};

InstanceDocument InstanceFromJson(const nlohmann::json& doc);
InstanceDocument ParseInstance(const std::string& text);
InstanceDocument LoadInstance(const std::string& path);

nlohmann::json InstanceToJson(const FeasibleSet& set,
                              const std::optional<IntVector>& start = {});

nlohmann::json IntegerToJson(const Integer& v);
nlohmann::json RationalToJson(const Rational& q);
nlohmann::json VectorToJson(const IntVector& v);
Integer IntegerFromJson(const nlohmann::json& v);
Rational RationalFromJson(const nlohmann::json& v);
IntVector VectorFromJson(const nlohmann::json& v);

}  // namespace auglab

#endif  // AUGLAB_INSTANCE_JSON_H_
