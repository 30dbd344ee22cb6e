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


#include "auglab/worstcase.h"

#include <sstream>

#include "auglab/error.h"
#include "auglab/instance_json.h"

namespace auglab {

namespace {

// Block offsets: two blocks of k-1 coordinates, then two of 3k.
struct Blocks {
  int k;
  int first() const { return 0; }
  int second() const { return k - 1; }
  int third() const { return 2 * k - 2; }
  int fourth() const { return 5 * k - 2; }
  int n() const { return 8 * k - 2; }
};

IntVector MakePoint(const Blocks& b, int j) {
  const int k = b.k;
  IntVector y(b.n(), Integer(0));
  const int shift = j <= k ? j : j - k;
  for (int i = 1; i <= k - 1; ++i) {
    if (i >= shift) y[b.first() + i - 1] = 1;
    if (i < shift) y[b.second() + i - 1] = 1;
  }
  const int block = j <= k ? b.third() : b.fourth();
  for (int i = 0; i < 3 * k; ++i) y[block + i] = 1;
  return y;
}

IntVector MakeLayer(const Blocks& b, int level) {
  const int k = b.k;
  IntVector d(b.n(), Integer(0));
  if (level == 1) {
    for (int i = 0; i < k - 1; ++i) d[b.first() + i] = 1;
    for (int i = 0; i < k; ++i) d[b.third() + i] = 1;
    return d;
  }
  for (int i = 0; i < k - 1; ++i) d[b.second() + i] = 1;
  const int block = level % 2 == 1 ? b.third() : b.fourth();
  for (int i = 0; i < 3 * k; ++i) d[block + i] = 1;
  return d;
}

}  // namespace

WorstCaseInstance BuildWorstCase(const WorstCaseParams& params) {
  if (params.k < 2) {
    Fail(ErrorCode::kInvalidArgument, "worst-case family needs k >= 2");
  }
  if (params.p < 1) {
    Fail(ErrorCode::kInvalidArgument, "worst-case family needs p >= 1");
  }
  const Blocks b{params.k};
  std::vector<IntVector> pts;
  for (int j = 1; j <= 2 * params.k; ++j) pts.push_back(MakePoint(b, j));
  std::vector<IntVector> levels{IntVector(b.n(), Integer(0))};
  std::vector<IntVector> layers;
  for (int l = 1; l <= params.p; ++l) {
    layers.push_back(MakeLayer(b, l));
    levels.push_back(Add(Scale(2, levels.back()), layers.back()));
  }
  PointSetInstance points(b.n(), std::move(pts),
                          ObjectiveVector(levels.back()));
  return {params, std::move(points), std::move(levels), std::move(layers)};
}

bool OrderingReport::AllPass() const {
  for (const OrderingCheck& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

std::string OrderingReport::ToText() const {
  std::ostringstream out;
  for (const OrderingCheck& c : checks) {
    out << (c.holds ? "pass" : "FAIL") << " level " << c.level << " "
        << c.kind << ": y" << c.upper << " = " << ToString(c.upper_value)
        << ", y" << c.lower << " = " << ToString(c.lower_value) << "\n";
  }
  return out.str();
}

OrderingReport VerifyOrderings(const WorstCaseInstance& instance) {
  OrderingReport report;
  const int k = instance.params.k;
  auto check = [&](int level, int upper, int lower, const char* kind) {
    const IntVector& c = instance.levels[level];
    OrderingCheck entry;
    entry.level = level;
    entry.upper = upper;
    entry.lower = lower;
    entry.kind = kind;
    entry.upper_value = Dot(c, instance.Point(upper));
    entry.lower_value = Dot(c, instance.Point(lower));
    entry.holds = entry.upper_value == entry.lower_value + 1;
    report.checks.push_back(std::move(entry));
  };
  for (int level = 1; level <= instance.params.p; ++level) {
    for (int j = 1; j <= 2 * k - 1; ++j) {
      if (j != k) check(level, j, j + 1, "within-group");
    }
    if (level % 2 == 1) {
      check(level, k, k + 1, "between-groups");
    } else {
      check(level, 2 * k, 1, "between-groups");
    }
  }
  return report;
}

uint64_t PredictedAdversarialCount(const WorstCaseParams& params) {
  const uint64_t k = static_cast<uint64_t>(params.k);
  return (2 * k - 1) + static_cast<uint64_t>(params.p - 1) * k;
}

nlohmann::json WorstCaseSidecar(const WorstCaseInstance& instance) {
  nlohmann::json doc;
  doc["k"] = instance.params.k;
  doc["p"] = instance.params.p;
  doc["n"] = instance.n();
  doc["start_index"] = 2 * instance.params.k;
  doc["predicted_improvements"] = PredictedAdversarialCount(instance.params);
  doc["levels"] = nlohmann::json::array();
  for (const IntVector& c : instance.levels) {
    doc["levels"].push_back(VectorToJson(c));
  }
  doc["layers"] = nlohmann::json::array();
  for (const IntVector& d : instance.layers) {
    doc["layers"].push_back(VectorToJson(d));
  }
  return doc;
}

}  // namespace auglab
