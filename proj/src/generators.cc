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


#include "auglab/generators.h"

#include <algorithm>
#include <cctype>
#include <random>
#include <utility>
#include <vector>

#include "auglab/error.h"
#include "auglab/worstcase.h"

namespace auglab {

namespace {

// Uniform draw from [lo, hi] built on the raw engine output, so that files
// do not depend on the standard library's distribution implementation.
int64_t Draw(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + static_cast<int64_t>(v % span);
}

IntVector Objective(std::mt19937_64& rng, int n, int64_t cmax) {
  IntVector c(n);
  for (int j = 0; j < n; ++j) c[j] = Integer(static_cast<long>(Draw(rng, 1, cmax)));
  return c;
}

GeneratedInstance Box01(int n, std::vector<Row> rows, IntVector c,
                        IntVector start) {
  Instance inst(n, std::move(rows), IntVector(n, Integer(0)),
                IntVector(n, Integer(1)), ObjectiveVector(std::move(c)));
  return {FeasibleSet(std::move(inst)), std::move(start), std::nullopt};
}

}  // namespace

const char* GeneratorKindName(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kRandomKnapsack:
      return "RANDOM_KNAPSACK";
    case GeneratorKind::kRandomSetPack:
      return "RANDOM_SETPACK";
    case GeneratorKind::kCardinalityK:
      return "CARDINALITY_K";
    case GeneratorKind::kWorstCase:
      return "WORSTCASE";
  }
  return "?";
}

GeneratorKind ParseGeneratorKind(const std::string& name) {
  std::string key;
  for (char ch : name) {
    key += ch == '-' ? '_' : static_cast<char>(std::toupper(ch));
  }
  if (key == "RANDOM_KNAPSACK" || key == "KNAPSACK") {
    return GeneratorKind::kRandomKnapsack;
  }
  if (key == "RANDOM_SETPACK" || key == "SETPACK") {
    return GeneratorKind::kRandomSetPack;
  }
  if (key == "CARDINALITY_K" || key == "CARDINALITY") {
    return GeneratorKind::kCardinalityK;
  }
  if (key == "WORSTCASE") return GeneratorKind::kWorstCase;
  Fail(ErrorCode::kInvalidArgument, "unknown generator '" + name + "'");
}

nlohmann::json GeneratorParams::ToJson() const {
  return {{"kind", GeneratorKindName(kind)},
          {"seed", seed},
          {"n", n},
          {"cmax", cmax},
          {"rows", rows},
          {"k", k},
          {"p", p}};
}

GeneratorParams GeneratorParams::FromJson(const nlohmann::json& doc) {
  GeneratorParams out;
  try {
    out.kind = ParseGeneratorKind(doc.at("kind").get<std::string>());
    out.seed = doc.value("seed", out.seed);
    out.n = doc.value("n", out.n);
    out.cmax = doc.value("cmax", out.cmax);
    out.rows = doc.value("rows", out.rows);
    out.k = doc.value("k", out.k);
    out.p = doc.value("p", out.p);
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParse, std::string("generator parameters: ") + e.what());
  }
  return out;
}

std::string GeneratorParams::Id() const {
  std::string id = GeneratorKindName(kind);
  if (kind == GeneratorKind::kWorstCase) {
    return id + "-k" + std::to_string(k) + "-p" + std::to_string(p);
  }
  id += "-n" + std::to_string(n) + "-c" + std::to_string(cmax);
  if (kind == GeneratorKind::kCardinalityK) id += "-k" + std::to_string(k);
  if (kind == GeneratorKind::kRandomSetPack && rows > 0) {
    id += "-r" + std::to_string(rows);
  }
  return id + "-s" + std::to_string(seed);
}

GeneratedInstance Generate(const GeneratorParams& params) {
  if (params.kind == GeneratorKind::kWorstCase) {
    const WorstCaseInstance w = BuildWorstCase({params.k, params.p});
    if (!VerifyOrderings(w).AllPass()) {
      Fail(ErrorCode::kInternal, "worst-case orderings failed verification");
    }
    return {FeasibleSet(w.points), w.Start(), WorstCaseSidecar(w)};
  }
  if (params.n < 1) Fail(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (params.cmax < 1) Fail(ErrorCode::kInvalidArgument, "cmax must be >= 1");
  const int n = params.n;
  std::mt19937_64 rng(params.seed);
  switch (params.kind) {
    case GeneratorKind::kRandomKnapsack: {
      IntVector c = Objective(rng, n, params.cmax);
      Row row;
      Integer total = 0;
      for (int j = 0; j < n; ++j) {
        row.coeffs.push_back(Integer(static_cast<long>(Draw(rng, 1, 100))));
        total += row.coeffs.back();
      }
      row.rhs = total / 2;
      return Box01(n, {std::move(row)}, std::move(c),
                   IntVector(n, Integer(0)));
    }
    case GeneratorKind::kRandomSetPack: {
      if (n < 2) Fail(ErrorCode::kInvalidArgument, "set packing needs n >= 2");
      IntVector c = Objective(rng, n, params.cmax);
      const int m = params.rows > 0 ? params.rows : std::max(1, n / 2);
      std::vector<Row> rows;
      for (int i = 0; i < m; ++i) {
        Row row;
        row.coeffs.assign(n, Integer(0));
        int size = 0;
        for (int j = 0; j < n; ++j) {
          if (Draw(rng, 0, 9) < 3) {
            row.coeffs[j] = 1;
            ++size;
          }
        }
        while (size < 2) {
          const int64_t j = Draw(rng, 0, n - 1);
          if (row.coeffs[j] == 0) {
            row.coeffs[j] = 1;
            ++size;
          }
        }
        row.rhs = 1;
        rows.push_back(std::move(row));
      }
      return Box01(n, std::move(rows), std::move(c), IntVector(n, Integer(0)));
    }
    case GeneratorKind::kCardinalityK: {
      if (params.k < 0 || params.k > n) {
        Fail(ErrorCode::kInvalidArgument, "cardinality k must be in [0, n]");
      }
      IntVector c = Objective(rng, n, params.cmax);
      // Random start: the first k entries of a shuffled index list.
      std::vector<int> order(n);
      for (int j = 0; j < n; ++j) order[j] = j;
      for (int j = n - 1; j > 0; --j) {
        std::swap(order[j], order[Draw(rng, 0, j)]);
      }
      IntVector start(n, Integer(0));
      for (int j = 0; j < params.k; ++j) start[order[j]] = 1;
      Row row{IntVector(n, Integer(1)), Sense::kEqual, Integer(params.k)};
      return Box01(n, {std::move(row)}, std::move(c), std::move(start));
    }
    case GeneratorKind::kWorstCase:
      break;
  }
  Fail(ErrorCode::kInternal, "unhandled generator");
}

}  // namespace auglab
