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


#ifndef AUGLAB_TRACE_H_
#define AUGLAB_TRACE_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "auglab/numeric.h"
#include "auglab/oracle.h"
#include "json.hpp"

namespace auglab {

enum class EventKind {
  kStart,
  kPhaseStart,
  kOracleCall,
  kImprovement,
  kExhaust,
  kSkip,
  kGuarantee,
  kConverged,
  kTerminate,
};
const char* EventKindName(EventKind kind);

enum class RunStatus { kOptimal, kBudgetExceeded, kError };
const char* RunStatusName(RunStatus status);

// One trace record. Which optional fields are set depends on the kind:
//   Start        x, value
//   PhaseStart   phase, mu and/or objective
//   OracleCall   query_digest, answer_digest, answer_status, nodes
//   Improvement  x, value, improvement
//   Exhaust      alpha
//   Skip         phase, mu, note
//   Guarantee    note, holds, lhs, rhs (the asserted lhs >= rhs or <= rhs)
//   Converged    mu (the ratio the search settled on)
//   Terminate    status, x, value, note
// Points and values are in the coordinates of the input instance; values are
// internal (maximization, cleared denominators) objective values.
struct TraceEvent {
  EventKind kind = EventKind::kStart;
  uint64_t call_index = 0;
  double time_seconds = 0;
  uint64_t phase = 0;
  std::optional<Rational> mu;
  IntVector objective;
  std::string query_digest;
  std::string answer_digest;
  std::string answer_status;
  uint64_t nodes = 0;
  IntVector x;
  std::optional<Integer> value;
  std::optional<Integer> improvement;
  std::optional<Integer> alpha;
  std::optional<bool> holds;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::optional<RunStatus> status;
  std::string note;

  nlohmann::json ToJson(bool with_time = true) const;
};

struct TraceCounters {
  uint64_t n_improvements = 0;
  uint64_t n_subproblems = 0;
  uint64_t n_phases = 0;
  uint64_t n_exhaust = 0;
  uint64_t n_skipped = 0;
  OracleCounters oracle;
};

struct Trace {
  std::vector<TraceEvent> events;
  TraceCounters counters;
  // Improvements per phase, in phase order.
  std::vector<uint64_t> phase_improvements;
  RunStatus status = RunStatus::kError;
  IntVector final_x;
  Integer final_value;
  std::string message;
  double wall_seconds = 0;

  // Objective values of the start point and of every improvement, in order.
  std::vector<Integer> ValueSequence() const;
  std::vector<IntVector> PointSequence() const;

  // One JSON object per line. Without timestamps the output is reproducible
  // byte for byte.
  std::string ToJsonLines(bool with_time = true) const;
};

// Builds a trace while an algorithm runs: stamps events, keeps the counters
// consistent and enforces the call and wall-clock budgets.
class TraceRecorder {
 public:
  struct Budget {
    uint64_t max_calls = 100000;
    std::optional<double> wall_limit_seconds;
  };

  // With `phases_from_calls`, every non-improving oracle call closes a phase;
  // otherwise phases are counted through CountPhase().
  explicit TraceRecorder(Budget budget, bool phases_from_calls = true);

  void Start(const IntVector& x, const Integer& value);
  // Opens a new phase; improvements are attributed to the latest phase.
  void BeginPhase(std::optional<Rational> mu, IntVector objective = {});
  void Skip(std::optional<Rational> mu, const std::string& reason);
  // Throws BudgetExhausted when no further oracle call is allowed.
  void CheckBudget() const;
  void OracleCall(const OracleQuery& query, const OracleAnswer& answer,
                  bool improving);
  void OracleCall(const std::string& query_digest,
                  const std::string& answer_digest,
                  const std::string& answer_status, bool improving,
                  const OracleCounters& counters);
  void CountPhase() { ++trace_.counters.n_phases; }
  void Improvement(const IntVector& x, const Integer& value,
                   const Integer& improvement);
  void Exhaust(const Integer& alpha);
  void Guarantee(const std::string& what, bool holds, const Rational& lhs,
                 const Rational& rhs);
  void Converged(const Rational& mu, const std::string& note = {});
  Trace Finish(RunStatus status, const IntVector& x, const Integer& value,
               const std::string& note = {});

  uint64_t calls() const { return trace_.counters.n_subproblems; }
  uint64_t phase() const { return phase_; }

  struct BudgetExhausted {
    std::string reason;
  };

 private:
  TraceEvent Make(EventKind kind) const;
  double Elapsed() const;

  Budget budget_;
  bool phases_from_calls_;
  std::chrono::steady_clock::time_point start_;
  Trace trace_;
  uint64_t phase_ = 0;
  bool phase_open_ = false;
};

}  // namespace auglab

#endif  // AUGLAB_TRACE_H_
