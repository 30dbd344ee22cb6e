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


#ifndef AUGLAB_GENERATORS_H_
#define AUGLAB_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string>

#include "auglab/instance.h"
#include "auglab/numeric.h"
#include "json.hpp"

namespace auglab {

enum class GeneratorKind {
  // max c x, w x <= floor(sum w / 2), x in {0,1}^n.
  kRandomKnapsack,
  // max c x, sum_{j in S_i} x_j <= 1 for random sets S_i, x in {0,1}^n.
  kRandomSetPack,
  // max c x, sum x = k, x in {0,1}^n.
  kCardinalityK,
  // The bit scaling lower-bound family.
  kWorstCase,
};
const char* GeneratorKindName(GeneratorKind kind);
GeneratorKind ParseGeneratorKind(const std::string& name);

struct GeneratorParams {
  GeneratorKind kind = GeneratorKind::kRandomKnapsack;
  uint64_t seed = 1;
  int n = 10;
  // Objective entries are drawn from [1, cmax].
  int64_t cmax = 100;
  // Set packing rows; 0 means n / 2.
  int rows = 0;
  // Nonzeros per point for kCardinalityK; group size for kWorstCase.
  int k = 3;
  // Number of cost levels for kWorstCase.
  int p = 3;

  nlohmann::json ToJson() const;
  static GeneratorParams FromJson(const nlohmann::json& doc);
  // Stable identifier such as "RANDOM_KNAPSACK-n10-c100-s7".
  std::string Id() const;
};

struct GeneratedInstance {
  FeasibleSet set;
  IntVector start;
  // Cost levels for kWorstCase.
  std::optional<nlohmann::json> sidecar;
};

// Deterministic in the parameters, including the seed.
GeneratedInstance Generate(const GeneratorParams& params);

}  // namespace auglab

#endif  // AUGLAB_GENERATORS_H_
