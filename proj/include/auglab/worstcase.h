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


#ifndef AUGLAB_WORSTCASE_H_
#define AUGLAB_WORSTCASE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "auglab/instance.h"
#include "auglab/numeric.h"
#include "json.hpp"

namespace auglab {

// Lower-bound family for bit scaling: 2k points of {0,1}^(8k-2) and an
// objective built in p doubling layers, so that a least-improving oracle
// walks through every point group once per scaling phase.
struct WorstCaseParams {
  int k = 2;
  int p = 1;
};

struct WorstCaseInstance {
  WorstCaseParams params;
  // Points 1..2k in list order with objective levels.back().
  PointSetInstance points;
  // levels[l] = 2 levels[l-1] + layers[l-1], levels[0] = 0.
  std::vector<IntVector> levels;
  std::vector<IntVector> layers;

  size_t n() const { return points.n(); }
  // Point j in 1..2k.
  const IntVector& Point(int j) const { return points.points().at(j - 1); }
  // The adversarial start, point 2k.
  const IntVector& Start() const { return Point(2 * params.k); }
};

// Requires k >= 2 and p >= 1.
WorstCaseInstance BuildWorstCase(const WorstCaseParams& params);

// One unit-difference identity level . upper = level . lower + 1.
struct OrderingCheck {
  int level = 0;
  int upper = 0;
  int lower = 0;
  // "within-group" or "between-groups".
  std::string kind;
  Integer upper_value;
  Integer lower_value;
  bool holds = false;
};

struct OrderingReport {
  std::vector<OrderingCheck> checks;

  bool AllPass() const;
  std::string ToText() const;
};

// Within each group of k points consecutive points differ by one under every
// level; between groups, point k leads point k+1 on odd levels and point 2k
// leads point 1 on even levels.
OrderingReport VerifyOrderings(const WorstCaseInstance& instance);

// (2k - 1) + (p - 1) k.
uint64_t PredictedAdversarialCount(const WorstCaseParams& params);

// Parameters, every level and layer, and the predicted count.
nlohmann::json WorstCaseSidecar(const WorstCaseInstance& instance);

}  // namespace auglab

#endif  // AUGLAB_WORSTCASE_H_
