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


#ifndef AUGLAB_EXPERIMENT_H_
#define AUGLAB_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "auglab/algorithms.h"
#include "auglab/generators.h"
#include "auglab/instance_json.h"
#include "auglab/metrics.h"
#include "auglab/numeric.h"
#include "auglab/trace.h"
#include "json.hpp"

namespace auglab {

// One (instance, algorithm) cell. Serializes to and from JSON:
//   { "instance": "file.json" | {"generator": {...}},
//     "algorithm": {"algo": "geom", "policy": "least", "potential": "l1",
//                   "mu_factor": 8, "mu_init": "theory", "no_cutoff": false,
//                   "variant": "classic", "gate": true},
//     "budget": {"calls": 100000, "seconds": 60},
//     "time_axis": "calls", "checked": false, "trace": "out.jsonl" }
struct ExperimentConfig {
  std::optional<std::string> instance_path;
  std::optional<GeneratorParams> generator;
  AlgorithmSpec algorithm;
  uint64_t max_calls = 100000;
  std::optional<double> wall_limit_seconds;
  TimeAxis time_axis = TimeAxis::kWall;
  bool checked = false;
  std::optional<std::string> trace_path;

  nlohmann::json ToJson() const;
  static ExperimentConfig FromJson(const nlohmann::json& doc);
  std::string InstanceId() const;
};

// Builds an AlgorithmSpec from command-line style names: algo in
// augment|bitscale|geom|mra|mra-exact, policy in optimal|first|least|maxratio.
AlgorithmSpec MakeAlgorithmSpec(const std::string& algo,
                                const std::string& policy,
                                const std::string& potential,
                                const std::string& variant,
                                const Integer& mu_factor,
                                const std::string& mu_init, bool no_cutoff,
                                bool applicability_gate);
nlohmann::json AlgorithmSpecToJson(const AlgorithmSpec& spec);
AlgorithmSpec AlgorithmSpecFromJson(const nlohmann::json& doc);

struct MetricsRow {
  std::string instance_id;
  std::string algorithm;
  std::string policy;
  RunStatus status = RunStatus::kError;
  uint64_t n_improvements = 0;
  uint64_t n_subproblems = 0;
  uint64_t n_phases = 0;
  uint64_t n_exhaust = 0;
  uint64_t n_skipped = 0;
  std::optional<Rational> final_value;
  std::optional<Rational> best_value;
  bool optimal = false;
  std::optional<Rational> primal_integral;
  double wall_seconds = 0;
  std::string message;
};

std::string CsvHeader();
std::string ToCsvLine(const MetricsRow& row);
std::vector<MetricsRow> ParseCsv(const std::string& text);

// True when AUGLAB_CHECKED is set to a value other than "" or "0".
bool CheckedFromEnvironment();

struct ExperimentResult {
  MetricsRow row;
  std::optional<Trace> trace;
};

// Runs one cell. Budget exhaustion and oracle resource limits become
// BUDGET_EXCEEDED rows; in checked mode any invariant violation becomes an
// ERROR row. Failures to load the instance also become ERROR rows. Writes
// the trace when the config names a trace path.
ExperimentResult RunExperiment(const ExperimentConfig& config);

// Runs the config's algorithm on an instance supplied by the caller; the
// config's instance source is ignored.
ExperimentResult RunExperimentOn(const ExperimentConfig& config,
                                 const FeasibleSet& set,
                                 const IntVector& start,
                                 const std::string& instance_id);

// The start point for documents without one: the lower bounds if feasible,
// otherwise the first listed point.
IntVector DefaultStart(const FeasibleSet& set);

// Runs independent cells on `workers` threads and returns the rows sorted by
// (instance, algorithm, policy).
std::vector<MetricsRow> RunBatch(const std::vector<ExperimentConfig>& configs,
                                 unsigned workers);

// Per-algorithm summary: runs, optimal runs, shifted geometric means of wall
// time (shift 10) and of oracle calls (shift 100), mean improvements.
std::string SummarizeRows(const std::vector<MetricsRow>& rows);

}  // namespace auglab

#endif  // AUGLAB_EXPERIMENT_H_
