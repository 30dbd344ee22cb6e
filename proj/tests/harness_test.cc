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


#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "auglab/error.h"
#include "auglab/experiment.h"
#include "auglab/generators.h"
#include "auglab/instance_json.h"
#include "auglab/metrics.h"
#include "auglab/worstcase.h"
#include "test_support.h"

namespace auglab {
namespace {

using testing::I;
using testing::RefPoints;

// Gap integral evaluated piece by piece from the definition.
double RefIntegral(const std::vector<std::pair<double, double>>& points,
                   double best, double horizon) {
  auto gap = [&](double p) {
    if (p == 0 && best == 0) return 0.0;
    return std::fabs(p - best) / std::max(std::fabs(p), std::fabs(best));
  };
  double total = 0, t = 0, g = 1;
  for (const auto& [time, value] : points) {
    total += g * (time - t);
    t = time;
    g = gap(value);
  }
  return total + g * (horizon - t);
}

TEST(MetricsTest, PrimalIntegralExamples) {
  EXPECT_EQ(PrimalIntegral({{0, 7}}, 7, 10), Rational(0));
  EXPECT_EQ(PrimalIntegral({}, 7, 10), Rational(10));
  const Rational v = PrimalIntegral({{2, 50}, {6, 100}}, 100, 10);
  EXPECT_EQ(v, Rational(4));
  EXPECT_NEAR(ToDouble(v), RefIntegral({{2, 50}, {6, 100}}, 100, 10), 1e-6);
  EXPECT_EQ(PrimalIntegral({{0, 0}}, 0, 5), Rational(0));
  EXPECT_THROW(PrimalIntegral({}, 1, 0), Error);
}

TEST(MetricsTest, GapConventions) {
  EXPECT_EQ(PrimalGap(0, 0), Rational(0));
  EXPECT_EQ(PrimalGap(50, 100), MakeRational(1, 2));
  EXPECT_EQ(PrimalGap(-50, -100), MakeRational(1, 2));
  EXPECT_EQ(PrimalGap(-1, 5), Rational(1));
  EXPECT_EQ(PrimalGap(0, 5), Rational(1));
}

TEST(MetricsTest, EarlierImprovementNeverIncreasesTheIntegral) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> val(1, 100);
  std::uniform_int_distribution<int> tim(0, 50);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<PrimalPoint> pts;
    int t = 0, v = val(rng);
    for (int i = 0; i < 4; ++i) {
      t += tim(rng);
      v += val(rng);
      pts.push_back({Rational(t), Rational(v)});
    }
    const Rational best = pts.back().value;
    const Rational base = PrimalIntegral(pts, best, 400);
    std::vector<PrimalPoint> more = pts;
    const int at = tim(rng);
    const Rational value = Rational(val(rng));
    // Insert an extra incumbent no worse than the one it precedes.
    size_t pos = 0;
    while (pos < more.size() && more[pos].time <= at) ++pos;
    Rational prev = pos > 0 ? more[pos - 1].value : Rational(0);
    const Rational ins = value > prev ? value : prev;
    if (pos < more.size() && ins > more[pos].value) continue;
    more.insert(more.begin() + pos, {Rational(at), ins});
    EXPECT_LE(PrimalIntegral(more, best, 400), base);
  }
}

TEST(MetricsTest, ShiftedGeomeanExamples) {
  EXPECT_NEAR(ShiftedGeomean({10, 1000}, 10), std::sqrt(20.0 * 1010) - 10,
              1e-9);
  EXPECT_NEAR(ShiftedGeomean({10, 1000}, 10), 132.13, 1e-2);
  EXPECT_NEAR(ShiftedGeomean({42}, 3), 42, 1e-9);
  EXPECT_NEAR(ShiftedGeomean({7, 7, 7}, 100), 7, 1e-9);
  EXPECT_THROW(ShiftedGeomean({}, 10), Error);
}

TEST(MetricsTest, CallAxisCurve) {
  Trace t;
  TraceEvent start;
  start.kind = EventKind::kStart;
  start.value = I(50);
  start.call_index = 0;
  TraceEvent imp;
  imp.kind = EventKind::kImprovement;
  imp.value = I(100);
  imp.call_index = 4;
  t.events = {start, imp};
  t.counters.n_subproblems = 8;
  const std::vector<PrimalPoint> curve =
      PrimalCurve(t, ObjectiveVector(IntVector{I(1)}), TimeAxis::kCalls);
  ASSERT_EQ(curve.size(), 2u);
  EXPECT_EQ(curve[1].time, Rational(4));
  EXPECT_EQ(TraceHorizon(t, TimeAxis::kCalls), Rational(8));
  EXPECT_EQ(PrimalIntegral(curve, 100, 8), Rational(2));
}

TEST(GeneratorTest, CardinalityPointsHaveKNonzeros) {
  GeneratorParams params;
  params.kind = GeneratorKind::kCardinalityK;
  params.n = 12;
  params.k = 3;
  params.seed = 1;
  const GeneratedInstance g = Generate(params);
  const std::vector<IntVector> pts = RefPoints(g.set);
  EXPECT_EQ(pts.size(), 220u);
  for (const IntVector& x : pts) {
    int nz = 0;
    for (const Integer& v : x) nz += v != 0;
    EXPECT_EQ(nz, 3);
  }
  EXPECT_TRUE(g.set.Contains(g.start));
}

TEST(GeneratorTest, Deterministic) {
  for (GeneratorKind kind :
       {GeneratorKind::kRandomKnapsack, GeneratorKind::kRandomSetPack,
        GeneratorKind::kCardinalityK, GeneratorKind::kWorstCase}) {
    GeneratorParams params;
    params.kind = kind;
    params.n = 10;
    params.seed = 7;
    const GeneratedInstance a = Generate(params);
    const GeneratedInstance b = Generate(params);
    EXPECT_EQ(InstanceToJson(a.set, a.start).dump(),
              InstanceToJson(b.set, b.start).dump());
    EXPECT_TRUE(a.set.Contains(a.start));
    EXPECT_TRUE(a.set.IsBinary());
    if (kind != GeneratorKind::kWorstCase) {
      params.seed = 8;
      EXPECT_NE(InstanceToJson(Generate(params).set).dump(),
                InstanceToJson(a.set).dump());
      for (const Integer& c : a.set.objective().c()) {
        EXPECT_GE(c, 1);
        EXPECT_LE(c, 100);
      }
    }
  }
}

TEST(GeneratorTest, WorstCaseDelegates) {
  GeneratorParams params;
  params.kind = GeneratorKind::kWorstCase;
  params.k = 3;
  params.p = 4;
  const GeneratedInstance g = Generate(params);
  ASSERT_TRUE(g.sidecar.has_value());
  EXPECT_EQ((*g.sidecar)["levels"].size(), 5u);
  EXPECT_TRUE(VerifyOrderings(BuildWorstCase({3, 4})).AllPass());
  EXPECT_EQ(g.start, BuildWorstCase({3, 4}).Start());
  EXPECT_EQ(params.Id(), "WORSTCASE-k3-p4");
}

TEST(GeneratorTest, ParamsRoundTrip) {
  GeneratorParams params;
  params.kind = GeneratorKind::kRandomSetPack;
  params.seed = 99;
  params.rows = 4;
  const GeneratorParams back = GeneratorParams::FromJson(params.ToJson());
  EXPECT_EQ(back.Id(), params.Id());
  EXPECT_EQ(ParseGeneratorKind("cardinality-k"), GeneratorKind::kCardinalityK);
  EXPECT_THROW(ParseGeneratorKind("nope"), Error);
  params.kind = GeneratorKind::kCardinalityK;
  params.k = 20;
  EXPECT_THROW(Generate(params), Error);
}

ExperimentConfig WorstCaseConfig(const std::string& algo,
                                 const std::string& policy) {
  ExperimentConfig config;
  GeneratorParams params;
  params.kind = GeneratorKind::kWorstCase;
  params.k = 2;
  params.p = 3;
  config.generator = params;
  config.algorithm = MakeAlgorithmSpec(algo, policy, "", "classic", 2, "",
                                       false, true);
  config.time_axis = TimeAxis::kCalls;
  config.checked = true;
  return config;
}

TEST(ExperimentTest, WorstCaseRows) {
  const ExperimentResult bit = RunExperiment(WorstCaseConfig("bitscale",
                                                             "least"));
  EXPECT_EQ(bit.row.status, RunStatus::kOptimal) << bit.row.message;
  EXPECT_EQ(bit.row.n_improvements, 7u);
  EXPECT_TRUE(bit.row.optimal);
  EXPECT_EQ(bit.row.n_phases + bit.row.n_improvements, bit.row.n_subproblems);
  const ExperimentResult geo = RunExperiment(WorstCaseConfig("geom", "least"));
  EXPECT_EQ(geo.row.status, RunStatus::kOptimal) << geo.row.message;
  EXPECT_LE(geo.row.n_improvements, 3u);
  EXPECT_TRUE(geo.row.optimal);
}

TEST(ExperimentTest, SinglePointInstance) {
  const std::string path = ::testing::TempDir() + "single_point.json";
  {
    std::ofstream out(path);
    out << R"({"n": 2, "points": [[1, 0]], "objective": [1, 1]})";
  }
  ExperimentConfig config;
  config.instance_path = path;
  config.algorithm.kind = AlgorithmKind::kAugment;
  const ExperimentResult r = RunExperiment(config);
  EXPECT_EQ(r.row.status, RunStatus::kOptimal);
  EXPECT_EQ(r.row.n_improvements, 0u);
  EXPECT_TRUE(r.row.optimal);
  std::remove(path.c_str());
}

TEST(ExperimentTest, MissingInstanceIsAnErrorRow) {
  ExperimentConfig config;
  config.instance_path = "/nonexistent/instance.json";
  const ExperimentResult r = RunExperiment(config);
  EXPECT_EQ(r.row.status, RunStatus::kError);
  EXPECT_FALSE(r.row.message.empty());
}

TEST(ExperimentTest, BudgetRow) {
  ExperimentConfig config;
  GeneratorParams params;
  params.kind = GeneratorKind::kRandomKnapsack;
  params.n = 12;
  config.generator = params;
  config.algorithm = MakeAlgorithmSpec("augment", "least", "", "", 2, "",
                                       false, true);
  config.max_calls = 2;
  const ExperimentResult r = RunExperiment(config);
  EXPECT_EQ(r.row.status, RunStatus::kBudgetExceeded);
  EXPECT_EQ(r.row.n_subproblems, 2u);
  EXPECT_FALSE(r.row.optimal);
}

TEST(ExperimentTest, ConfigRoundTripAndReproducibleTraces) {
  ExperimentConfig config = WorstCaseConfig("geom", "first");
  config.algorithm.geo.mu_factor = 8;
  config.max_calls = 500;
  const ExperimentConfig back = ExperimentConfig::FromJson(config.ToJson());
  EXPECT_EQ(back.ToJson().dump(), config.ToJson().dump());
  const ExperimentResult a = RunExperiment(config);
  const ExperimentResult b = RunExperiment(back);
  ASSERT_TRUE(a.trace && b.trace);
  EXPECT_EQ(a.trace->ToJsonLines(false), b.trace->ToJsonLines(false));
  EXPECT_EQ(*a.row.primal_integral, *b.row.primal_integral);
}

TEST(ExperimentTest, CsvRoundTrip) {
  MetricsRow row;
  row.instance_id = "inst,1";
  row.algorithm = "geom-l1-2";
  row.policy = "least";
  row.status = RunStatus::kOptimal;
  row.n_improvements = 3;
  row.n_subproblems = 9;
  row.n_phases = 6;
  row.final_value = MakeRational(7, 3);
  row.best_value = MakeRational(7, 3);
  row.optimal = true;
  row.primal_integral = MakeRational(1, 8);
  row.wall_seconds = 0.5;
  row.message = "said \"hi\"";
  const std::string text = CsvHeader() + "\n" + ToCsvLine(row) + "\n";
  EXPECT_NE(text.find("2.333333,7/3"), std::string::npos);
  const std::vector<MetricsRow> rows = ParseCsv(text);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].instance_id, "inst,1");
  EXPECT_EQ(rows[0].message, "said \"hi\"");
  EXPECT_EQ(*rows[0].final_value, MakeRational(7, 3));
  EXPECT_EQ(rows[0].n_phases, 6u);
  EXPECT_TRUE(rows[0].optimal);
}

TEST(ExperimentTest, BatchIsOrderIndependent) {
  std::vector<ExperimentConfig> configs;
  for (const char* algo : {"geom", "augment", "bitscale", "mra-exact", "mra"}) {
    for (int seed : {3, 1, 2}) {
      ExperimentConfig c;
      GeneratorParams params;
      params.kind = GeneratorKind::kRandomKnapsack;
      params.n = 8;
      params.seed = seed;
      c.generator = params;
      c.algorithm = MakeAlgorithmSpec(algo, "optimal", "", "", 2, "", false,
                                      true);
      c.time_axis = TimeAxis::kCalls;
      c.checked = true;
      configs.push_back(c);
    }
  }
  const std::vector<MetricsRow> serial = RunBatch(configs, 1);
  std::reverse(configs.begin(), configs.end());
  const std::vector<MetricsRow> parallel = RunBatch(configs, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    MetricsRow a = serial[i], b = parallel[i];
    a.wall_seconds = b.wall_seconds = 0;
    EXPECT_EQ(ToCsvLine(a), ToCsvLine(b));
    EXPECT_EQ(a.status, RunStatus::kOptimal) << a.algorithm << a.message;
    EXPECT_TRUE(a.optimal);
  }
  const std::string summary = SummarizeRows(serial);
  EXPECT_NE(summary.find("mra-cp"), std::string::npos);
}

TEST(ExperimentTest, AlgorithmNames) {
  EXPECT_EQ(MakeAlgorithmSpec("mra-exact", "", "", "", 2, "", false, true)
                .Label(),
            "mra-exact-standard");
  EXPECT_EQ(MakeAlgorithmSpec("geom", "", "standard", "", 64, "solution",
                              true, true)
                .Label(),
            "geom-standard-64-solution-nocut");
  EXPECT_THROW(MakeAlgorithmSpec("mra", "", "standard", "", 2, "", false,
                                 true),
               Error);
  EXPECT_THROW(MakeAlgorithmSpec("simplex", "", "", "", 2, "", false, true),
               Error);
  EXPECT_THROW(MakeAlgorithmSpec("geom", "", "", "", 1, "", false, true),
               Error);
}

TEST(ExperimentTest, CheckedEnvironment) {
  setenv("AUGLAB_CHECKED", "1", 1);
  EXPECT_TRUE(CheckedFromEnvironment());
  setenv("AUGLAB_CHECKED", "0", 1);
  EXPECT_FALSE(CheckedFromEnvironment());
  unsetenv("AUGLAB_CHECKED");
  EXPECT_FALSE(CheckedFromEnvironment());
}

}  // namespace
}  // namespace auglab
