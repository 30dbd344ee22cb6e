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


#include "auglab/experiment.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "auglab/error.h"
#include "auglab/geometry.h"
#include "auglab/oracle.h"

namespace auglab {

using nlohmann::json;

namespace {

OraclePolicy PolicyFromShortName(const std::string& name,
                                 PotentialKind potential) {
  if (name == "optimal") return OraclePolicy::Optimal();
  if (name == "first") return OraclePolicy::FirstImproving();
  if (name == "least") return OraclePolicy::LeastImproving();
  if (name == "maxratio") return OraclePolicy::MaxRatio(potential);
  return ParsePolicy(name, potential);
}

std::string ShortPolicyName(const OraclePolicy& policy) {
  switch (policy.kind) {
    case PolicyKind::kOptimal:
      return "optimal";
    case PolicyKind::kFirstImproving:
      return "first";
    case PolicyKind::kLeastImproving:
      return "least";
    case PolicyKind::kMaxRatio:
      return "maxratio";
  }
  return "?";
}

std::string RowPolicy(const AlgorithmSpec& spec) {
  if (spec.kind == AlgorithmKind::kMraExact ||
      spec.kind == AlgorithmKind::kMraCuttingPlane) {
    return "-";
  }
  return ShortPolicyName(spec.policy);
}

std::string AlgoShortName(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::kAugment:
      return "augment";
    case AlgorithmKind::kBitScaling:
      return "bitscale";
    case AlgorithmKind::kGeometric:
      return "geom";
    case AlgorithmKind::kMraExact:
      return "mra-exact";
    case AlgorithmKind::kMraCuttingPlane:
      return "mra";
  }
  return "?";
}

std::string Quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> SplitCsv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (ch == '\n') {
      if (any || !field.empty()) {
        fields.push_back(std::move(field));
        records.push_back(std::move(fields));
      }
      fields.clear();
      field.clear();
      any = false;
    } else if (ch != '\r') {
      field += ch;
      any = true;
    }
  }
  if (quoted) Fail(ErrorCode::kParse, "unterminated quoted CSV field");
  if (any || !field.empty()) {
    fields.push_back(std::move(field));
    records.push_back(std::move(fields));
  }
  return records;
}

std::string OptionalDecimal(const std::optional<Rational>& q) {
  return q ? ToDecimal(*q, 6) : "";
}

std::string OptionalExact(const std::optional<Rational>& q) {
  if (!q) return "";
  return q->get_num().get_str() + "/" + q->get_den().get_str();
}

std::optional<Rational> ParseOptionalExact(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return ParseRational(s);
}

uint64_t ParseCount(const std::string& s) {
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    Fail(ErrorCode::kParse, "bad counter '" + s + "' in CSV");
  }
}

}  // namespace

IntVector DefaultStart(const FeasibleSet& set) {
  if (set.is_point_set()) return set.point_set().points().front();
  if (set.Contains(set.lower())) return set.lower();
  Fail(ErrorCode::kInvalidArgument,
       "instance has no start point and the lower bounds are infeasible");
}

AlgorithmSpec MakeAlgorithmSpec(const std::string& algo,
                                const std::string& policy,
                                const std::string& potential,
                                const std::string& variant,
                                const Integer& mu_factor,
                                const std::string& mu_init, bool no_cutoff,
                                bool applicability_gate) {
  AlgorithmSpec spec;
  const PotentialKind pot_l1 =
      potential.empty() ? PotentialKind::kL1 : ParsePotential(potential);
  spec.policy = PolicyFromShortName(policy.empty() ? "optimal" : policy,
                                    pot_l1);
  if (algo == "augment") {
    spec.kind = AlgorithmKind::kAugment;
  } else if (algo == "bitscale") {
    spec.kind = AlgorithmKind::kBitScaling;
    spec.bit.variant = variant.empty() ? BitScalingVariant::kIncomplete
                                       : ParseBitScalingVariant(variant);
    spec.bit.applicability_gate = applicability_gate;
  } else if (algo == "geom") {
    spec.kind = AlgorithmKind::kGeometric;
    spec.geo.potential = pot_l1;
    spec.geo.mu_factor = mu_factor;
    spec.geo.mu_init = mu_init.empty() ? MuInit::kTheory : ParseMuInit(mu_init);
    spec.geo.no_cutoff = no_cutoff;
    if (mu_factor < 2) {
      Fail(ErrorCode::kInvalidArgument, "mu factor must be at least 2");
    }
  } else if (algo == "mra") {
    if (!potential.empty() && pot_l1 != PotentialKind::kL1) {
      Fail(ErrorCode::kInvalidArgument,
           "the cutting plane MRA uses the l1 potential");
    }
    spec.kind = AlgorithmKind::kMraCuttingPlane;
  } else if (algo == "mra-exact") {
    spec.kind = AlgorithmKind::kMraExact;
    spec.mra_potential = potential.empty() ? PotentialKind::kStandard
                                           : ParsePotential(potential);
  } else {
    Fail(ErrorCode::kInvalidArgument, "unknown algorithm '" + algo + "'");
  }
  return spec;
}

json AlgorithmSpecToJson(const AlgorithmSpec& spec) {
  json doc;
  doc["algo"] = AlgoShortName(spec.kind);
  doc["policy"] = ShortPolicyName(spec.policy);
  switch (spec.kind) {
    case AlgorithmKind::kAugment:
    case AlgorithmKind::kMraCuttingPlane:
      if (spec.policy.kind == PolicyKind::kMaxRatio) {
        doc["potential"] = PotentialName(spec.policy.potential);
      }
      break;
    case AlgorithmKind::kBitScaling: {
      std::string v = BitScalingVariantName(spec.bit.variant);
      std::transform(v.begin(), v.end(), v.begin(), ::tolower);
      doc["variant"] = v;
      doc["gate"] = spec.bit.applicability_gate;
      if (spec.policy.kind == PolicyKind::kMaxRatio) {
        doc["potential"] = PotentialName(spec.policy.potential);
      }
      break;
    }
    case AlgorithmKind::kGeometric:
      doc["potential"] = PotentialName(spec.geo.potential);
      doc["mu_factor"] = ToString(spec.geo.mu_factor);
      doc["mu_init"] =
          spec.geo.mu_init == MuInit::kTheory ? "theory" : "solution";
      doc["no_cutoff"] = spec.geo.no_cutoff;
      break;
    case AlgorithmKind::kMraExact:
      doc["potential"] = PotentialName(spec.mra_potential);
      break;
  }
  return doc;
}

AlgorithmSpec AlgorithmSpecFromJson(const json& doc) {
  try {
    Integer factor = 2;
    if (doc.contains("mu_factor")) {
      const json& f = doc["mu_factor"];
      factor = f.is_string() ? ParseInteger(f.get<std::string>())
                             : Integer(f.get<long>());
    }
    return MakeAlgorithmSpec(doc.at("algo").get<std::string>(),
                             doc.value("policy", std::string("optimal")),
                             doc.value("potential", std::string()),
                             doc.value("variant", std::string()), factor,
                             doc.value("mu_init", std::string()),
                             doc.value("no_cutoff", false),
                             doc.value("gate", true));
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("algorithm: ") + e.what());
  }
}

json ExperimentConfig::ToJson() const {
  json doc;
  if (instance_path) {
    doc["instance"] = *instance_path;
  } else if (generator) {
    doc["instance"] = {{"generator", generator->ToJson()}};
  }
  doc["algorithm"] = AlgorithmSpecToJson(algorithm);
  doc["budget"] = {{"calls", max_calls}};
  if (wall_limit_seconds) doc["budget"]["seconds"] = *wall_limit_seconds;
  doc["time_axis"] = TimeAxisName(time_axis);
  doc["checked"] = checked;
  if (trace_path) doc["trace"] = *trace_path;
  return doc;
}

ExperimentConfig ExperimentConfig::FromJson(const json& doc) {
  ExperimentConfig config;
  try {
    const json& inst = doc.at("instance");
    if (inst.is_string()) {
      config.instance_path = inst.get<std::string>();
    } else {
      config.generator = GeneratorParams::FromJson(inst.at("generator"));
    }
    config.algorithm = AlgorithmSpecFromJson(doc.at("algorithm"));
    if (doc.contains("budget")) {
      const json& b = doc["budget"];
      config.max_calls = b.value("calls", config.max_calls);
      if (b.contains("seconds")) {
        config.wall_limit_seconds = b["seconds"].get<double>();
      }
    }
    config.time_axis =
        ParseTimeAxis(doc.value("time_axis", std::string("wall")));
    config.checked = doc.value("checked", false);
    if (doc.contains("trace")) config.trace_path = doc["trace"];
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("experiment config: ") + e.what());
  }
  return config;
}

std::string ExperimentConfig::InstanceId() const {
  if (instance_path) return *instance_path;
  if (generator) return generator->Id();
  return "?";
}

std::string CsvHeader() {
  return "instance,algorithm,policy,status,n_improvements,n_subproblems,"
         "n_phases,n_exhaust,n_skipped,final_value,final_value_exact,"
         "best_value,best_value_exact,optimal,primal_integral,"
         "primal_integral_exact,wall_seconds,message";
}

std::string ToCsvLine(const MetricsRow& row) {
  std::ostringstream wall;
  wall << std::fixed << std::setprecision(6) << row.wall_seconds;
  std::vector<std::string> fields = {
      row.instance_id,
      row.algorithm,
      row.policy,
      RunStatusName(row.status),
      std::to_string(row.n_improvements),
      std::to_string(row.n_subproblems),
      std::to_string(row.n_phases),
      std::to_string(row.n_exhaust),
      std::to_string(row.n_skipped),
      OptionalDecimal(row.final_value),
      OptionalExact(row.final_value),
      OptionalDecimal(row.best_value),
      OptionalExact(row.best_value),
      row.optimal ? "true" : "false",
      OptionalDecimal(row.primal_integral),
      OptionalExact(row.primal_integral),
      wall.str(),
      row.message};
  std::string line;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += Quote(fields[i]);
  }
  return line;
}

std::vector<MetricsRow> ParseCsv(const std::string& text) {
  std::vector<std::vector<std::string>> records = SplitCsv(text);
  std::vector<MetricsRow> rows;
  if (records.empty()) return rows;
  std::map<std::string, size_t> column;
  for (size_t i = 0; i < records[0].size(); ++i) column[records[0][i]] = i;
  for (const char* name :
       {"instance", "algorithm", "policy", "status", "n_improvements",
        "n_subproblems", "n_phases", "n_exhaust", "optimal", "wall_seconds"}) {
    if (!column.count(name)) {
      Fail(ErrorCode::kParse, std::string("CSV lacks column '") + name + "'");
    }
  }
  auto get = [&](const std::vector<std::string>& rec, const char* name) {
    auto it = column.find(name);
    if (it == column.end() || it->second >= rec.size()) return std::string();
    return rec[it->second];
  };
  for (size_t r = 1; r < records.size(); ++r) {
    const std::vector<std::string>& rec = records[r];
    MetricsRow row;
    row.instance_id = get(rec, "instance");
    row.algorithm = get(rec, "algorithm");
    row.policy = get(rec, "policy");
    const std::string status = get(rec, "status");
    if (status == "OPTIMAL") {
      row.status = RunStatus::kOptimal;
    } else if (status == "BUDGET_EXCEEDED") {
      row.status = RunStatus::kBudgetExceeded;
    } else if (status == "ERROR") {
      row.status = RunStatus::kError;
    } else {
      Fail(ErrorCode::kParse, "unknown status '" + status + "' in CSV");
    }
    row.n_improvements = ParseCount(get(rec, "n_improvements"));
    row.n_subproblems = ParseCount(get(rec, "n_subproblems"));
    row.n_phases = ParseCount(get(rec, "n_phases"));
    row.n_exhaust = ParseCount(get(rec, "n_exhaust"));
    const std::string skipped = get(rec, "n_skipped");
    row.n_skipped = skipped.empty() ? 0 : ParseCount(skipped);
    row.final_value = ParseOptionalExact(get(rec, "final_value_exact"));
    row.best_value = ParseOptionalExact(get(rec, "best_value_exact"));
    row.optimal = get(rec, "optimal") == "true";
    row.primal_integral =
        ParseOptionalExact(get(rec, "primal_integral_exact"));
    try {
      row.wall_seconds = std::stod(get(rec, "wall_seconds"));
    } catch (const std::exception&) {
      Fail(ErrorCode::kParse, "bad wall_seconds in CSV");
    }
    row.message = get(rec, "message");
    rows.push_back(std::move(row));
  }
  return rows;
}

bool CheckedFromEnvironment() {
  const char* v = std::getenv("AUGLAB_CHECKED");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

namespace {

MetricsRow BlankRow(const ExperimentConfig& config, std::string instance_id) {
  MetricsRow row;
  row.instance_id = std::move(instance_id);
  row.algorithm = config.algorithm.Label();
  row.policy = RowPolicy(config.algorithm);
  return row;
}

void RecordFailure(const Error& e, MetricsRow& row) {
  row.status = e.code() == ErrorCode::kResourceLimit
                   ? RunStatus::kBudgetExceeded
                   : RunStatus::kError;
  row.message = std::string(ErrorCodeName(e.code())) + ": " + e.what();
}

void Execute(const ExperimentConfig& config, const FeasibleSet& set,
             const IntVector& start, ExperimentResult& result) {
  MetricsRow& row = result.row;
  RunOptions options;
  options.max_calls = config.max_calls;
  options.wall_limit_seconds = config.wall_limit_seconds;
  options.checked = config.checked;
  Trace trace = RunAlgorithm(config.algorithm, set, start, options);

  const ObjectiveVector& obj = set.objective();
  row.status = trace.status;
  row.n_improvements = trace.counters.n_improvements;
  row.n_subproblems = trace.counters.n_subproblems;
  row.n_phases = trace.counters.n_phases;
  row.n_exhaust = trace.counters.n_exhaust;
  row.n_skipped = trace.counters.n_skipped;
  row.final_value = obj.ToOriginal(trace.final_value);
  row.wall_seconds = trace.wall_seconds;
  row.message = trace.message;

  std::optional<Integer> best;
  try {
    best = Oracle(set).SolveExact(obj.c()).value;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kResourceLimit) throw;
  }
  if (best) {
    row.best_value = obj.ToOriginal(*best);
    row.optimal =
        trace.status == RunStatus::kOptimal && trace.final_value == *best;
    row.primal_integral = PrimalIntegral(
        PrimalCurve(trace, obj, config.time_axis), *row.best_value,
        TraceHorizon(trace, config.time_axis));
  }

  if (config.checked && trace.status != RunStatus::kError) {
    std::vector<std::string> problems =
        CheckTraceInvariants(config.algorithm, set, trace);
    if (best && trace.status == RunStatus::kOptimal &&
        trace.final_value != *best) {
      problems.push_back("final value " + ToString(trace.final_value) +
                         " differs from the optimum " + ToString(*best));
    }
    if (!problems.empty()) {
      row.status = RunStatus::kError;
      row.message.clear();
      for (const std::string& p : problems) {
        if (!row.message.empty()) row.message += "; ";
        row.message += p;
      }
    }
  }

  if (config.trace_path) {
    std::ofstream out(*config.trace_path);
    if (!out) {
      Fail(ErrorCode::kIo, "cannot write trace '" + *config.trace_path + "'");
    }
    out << trace.ToJsonLines(true);
  }
  result.trace = std::move(trace);
}

}  // namespace

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  ExperimentResult result;
  result.row = BlankRow(config, config.InstanceId());
  try {
    if (config.instance_path) {
      InstanceDocument doc = LoadInstance(*config.instance_path);
      const IntVector start = doc.start ? *doc.start : DefaultStart(doc.set);
      Execute(config, doc.set, start, result);
    } else if (config.generator) {
      const GeneratedInstance g = Generate(*config.generator);
      Execute(config, g.set, g.start, result);
    } else {
      Fail(ErrorCode::kInvalidArgument, "experiment has no instance");
    }
  } catch (const Error& e) {
    RecordFailure(e, result.row);
  }
  return result;
}

ExperimentResult RunExperimentOn(const ExperimentConfig& config,
                                 const FeasibleSet& set,
                                 const IntVector& start,
                                 const std::string& instance_id) {
  ExperimentResult result;
  result.row = BlankRow(config, instance_id);
  try {
    Execute(config, set, start, result);
  } catch (const Error& e) {
    RecordFailure(e, result.row);
  }
  return result;
}

std::vector<MetricsRow> RunBatch(const std::vector<ExperimentConfig>& configs,
                                 unsigned workers) {
  std::vector<MetricsRow> rows(configs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < configs.size(); i = next++) {
      rows[i] = RunExperiment(configs[i]).row;
    }
  };
  const unsigned count =
      std::max(1u, std::min<unsigned>(workers, configs.size()));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < count; ++t) threads.emplace_back(work);
  work();
  for (std::thread& t : threads) t.join();
  std::stable_sort(rows.begin(), rows.end(),
                   [](const MetricsRow& a, const MetricsRow& b) {
                     return std::tie(a.instance_id, a.algorithm, a.policy) <
                            std::tie(b.instance_id, b.algorithm, b.policy);
                   });
  return rows;
}

std::string SummarizeRows(const std::vector<MetricsRow>& rows) {
  struct Group {
    std::vector<double> seconds;
    std::vector<double> calls;
    uint64_t optimal = 0;
    uint64_t improvements = 0;
  };
  std::map<std::pair<std::string, std::string>, Group> groups;
  for (const MetricsRow& r : rows) {
    Group& g = groups[{r.algorithm, r.policy}];
    g.seconds.push_back(r.wall_seconds);
    g.calls.push_back(static_cast<double>(r.n_subproblems));
    g.optimal += r.optimal ? 1 : 0;
    g.improvements += r.n_improvements;
  }
  std::ostringstream out;
  out << std::left << std::setw(28) << "algorithm" << std::setw(10)
      << "policy" << std::right << std::setw(6) << "runs" << std::setw(9)
      << "optimal" << std::setw(14) << "sgm-seconds" << std::setw(12)
      << "sgm-calls" << std::setw(12) << "mean-improv" << "\n";
  for (const auto& [key, g] : groups) {
    const double runs = static_cast<double>(g.seconds.size());
    out << std::left << std::setw(28) << key.first << std::setw(10)
        << key.second << std::right << std::setw(6) << g.seconds.size()
        << std::setw(9) << g.optimal << std::fixed << std::setprecision(6)
        << std::setw(14) << ShiftedGeomean(g.seconds, 10.0)
        << std::setprecision(2) << std::setw(12)
        << ShiftedGeomean(g.calls, 100.0) << std::setw(12)
        << static_cast<double>(g.improvements) / runs << "\n";
  }
  return out.str();
}

}  // namespace auglab
