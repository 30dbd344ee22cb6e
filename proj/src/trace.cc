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


#include "auglab/trace.h"

#include <utility>

#include "auglab/instance_json.h"

namespace auglab {

using nlohmann::json;

const char* EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kStart:
      return "Start";
    case EventKind::kPhaseStart:
      return "PhaseStart";
    case EventKind::kOracleCall:
      return "OracleCall";
    case EventKind::kImprovement:
      return "Improvement";
    case EventKind::kExhaust:
      return "Exhaust";
    case EventKind::kSkip:
      return "Skip";
    case EventKind::kGuarantee:
      return "Guarantee";
    case EventKind::kConverged:
      return "Converged";
    case EventKind::kTerminate:
      return "Terminate";
  }
  return "?";
}

const char* RunStatusName(RunStatus status) {
  switch (status) {
    case RunStatus::kOptimal:
      return "OPTIMAL";
    case RunStatus::kBudgetExceeded:
      return "BUDGET_EXCEEDED";
    case RunStatus::kError:
      return "ERROR";
  }
  return "?";
}

json TraceEvent::ToJson(bool with_time) const {
  json j;
  j["event"] = EventKindName(kind);
  j["call"] = call_index;
  if (with_time) j["t"] = time_seconds;
  switch (kind) {
    case EventKind::kStart:
      j["x"] = VectorToJson(x);
      j["value"] = IntegerToJson(*value);
      break;
    case EventKind::kPhaseStart:
    case EventKind::kSkip:
      j["phase"] = phase;
      if (mu) j["mu"] = ToString(*mu);
      if (!objective.empty()) j["objective"] = VectorToJson(objective);
      if (!note.empty()) j["note"] = note;
      break;
    case EventKind::kOracleCall:
      j["query"] = query_digest;
      j["answer"] = answer_digest;
      j["status"] = answer_status;
      j["nodes"] = nodes;
      break;
    case EventKind::kImprovement:
      j["phase"] = phase;
      j["x"] = VectorToJson(x);
      j["value"] = IntegerToJson(*value);
      j["improvement"] = IntegerToJson(*improvement);
      break;
    case EventKind::kExhaust:
      j["alpha"] = IntegerToJson(*alpha);
      break;
    case EventKind::kGuarantee:
      j["what"] = note;
      j["holds"] = *holds;
      j["lhs"] = ToString(*lhs);
      j["rhs"] = ToString(*rhs);
      break;
    case EventKind::kConverged:
      j["mu"] = ToString(*mu);
      if (!note.empty()) j["note"] = note;
      break;
    case EventKind::kTerminate:
      j["status"] = RunStatusName(*status);
      j["x"] = VectorToJson(x);
      j["value"] = IntegerToJson(*value);
      if (!note.empty()) j["note"] = note;
      break;
  }
  return j;
}

std::vector<Integer> Trace::ValueSequence() const {
  std::vector<Integer> out;
  for (const TraceEvent& e : events) {
    if (e.kind == EventKind::kStart || e.kind == EventKind::kImprovement) {
      out.push_back(*e.value);
    }
  }
  return out;
}

std::vector<IntVector> Trace::PointSequence() const {
  std::vector<IntVector> out;
  for (const TraceEvent& e : events) {
    if (e.kind == EventKind::kStart || e.kind == EventKind::kImprovement) {
      out.push_back(e.x);
    }
  }
  return out;
}

std::string Trace::ToJsonLines(bool with_time) const {
  std::string out;
  for (const TraceEvent& e : events) {
    out += e.ToJson(with_time).dump();
    out += '\n';
  }
  return out;
}

TraceRecorder::TraceRecorder(Budget budget, bool phases_from_calls)
    : budget_(budget),
      phases_from_calls_(phases_from_calls),
      start_(std::chrono::steady_clock::now()) {}

double TraceRecorder::Elapsed() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start_)
      .count();
}

TraceEvent TraceRecorder::Make(EventKind kind) const {
  TraceEvent e;
  e.kind = kind;
  e.call_index = trace_.counters.n_subproblems;
  e.time_seconds = Elapsed();
  e.phase = phase_;
  return e;
}

void TraceRecorder::Start(const IntVector& x, const Integer& value) {
  TraceEvent e = Make(EventKind::kStart);
  e.x = x;
  e.value = value;
  trace_.events.push_back(std::move(e));
}

void TraceRecorder::BeginPhase(std::optional<Rational> mu,
                               IntVector objective) {
  if (phase_open_) ++phase_;
  phase_open_ = true;
  trace_.phase_improvements.push_back(0);
  TraceEvent e = Make(EventKind::kPhaseStart);
  e.mu = std::move(mu);
  e.objective = std::move(objective);
  trace_.events.push_back(std::move(e));
}

void TraceRecorder::Skip(std::optional<Rational> mu,
                         const std::string& reason) {
  ++trace_.counters.n_skipped;
  TraceEvent e = Make(EventKind::kSkip);
  e.mu = std::move(mu);
  e.note = reason;
  trace_.events.push_back(std::move(e));
}

void TraceRecorder::CheckBudget() const {
  if (trace_.counters.n_subproblems >= budget_.max_calls) {
    throw BudgetExhausted{"oracle call budget of " +
                          std::to_string(budget_.max_calls) + " reached"};
  }
  if (budget_.wall_limit_seconds && Elapsed() > *budget_.wall_limit_seconds) {
    throw BudgetExhausted{"wall-clock limit reached"};
  }
}

void TraceRecorder::OracleCall(const OracleQuery& query,
                               const OracleAnswer& answer, bool improving) {
  OracleCall(query.Digest(), answer.Digest(), AnswerStatusName(answer.status),
             improving, answer.counters);
}

void TraceRecorder::OracleCall(const std::string& query_digest,
                               const std::string& answer_digest,
                               const std::string& answer_status,
                               bool improving,
                               const OracleCounters& counters) {
  TraceEvent e = Make(EventKind::kOracleCall);
  e.query_digest = query_digest;
  e.answer_digest = answer_digest;
  e.answer_status = answer_status;
  e.nodes = counters.nodes;
  trace_.events.push_back(std::move(e));
  ++trace_.counters.n_subproblems;
  trace_.counters.oracle += counters;
  if (phases_from_calls_ && !improving) ++trace_.counters.n_phases;
}

void TraceRecorder::Improvement(const IntVector& x, const Integer& value,
                                const Integer& improvement) {
  if (trace_.phase_improvements.empty()) trace_.phase_improvements.push_back(0);
  ++trace_.phase_improvements.back();
  ++trace_.counters.n_improvements;
  TraceEvent e = Make(EventKind::kImprovement);
  e.x = x;
  e.value = value;
  e.improvement = improvement;
  trace_.events.push_back(std::move(e));
}

void TraceRecorder::Exhaust(const Integer& alpha) {
  if (alpha > 1) ++trace_.counters.n_exhaust;
  TraceEvent e = Make(EventKind::kExhaust);
  e.alpha = alpha;
  trace_.events.push_back(std::move(e));
}

void TraceRecorder::Guarantee(const std::string& what, bool holds,
                              const Rational& lhs, const Rational& rhs) {
  TraceEvent e = Make(EventKind::kGuarantee);
  e.note = what;
  e.holds = holds;
  e.lhs = lhs;
  e.rhs = rhs;
  trace_.events.push_back(std::move(e));
}

void TraceRecorder::Converged(const Rational& mu, const std::string& note) {
  TraceEvent e = Make(EventKind::kConverged);
  e.mu = mu;
  e.note = note;
  trace_.events.push_back(std::move(e));
}

Trace TraceRecorder::Finish(RunStatus status, const IntVector& x,
                            const Integer& value, const std::string& note) {
  TraceEvent e = Make(EventKind::kTerminate);
  e.status = status;
  e.x = x;
  e.value = value;
  e.note = note;
  trace_.events.push_back(std::move(e));
  trace_.status = status;
  trace_.final_x = x;
  trace_.final_value = value;
  trace_.message = note;
  trace_.wall_seconds = Elapsed();
  return std::move(trace_);
}

}  // namespace auglab
