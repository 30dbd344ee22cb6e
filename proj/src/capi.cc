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


#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "auglab/algorithms.h"
#include "auglab/auglab.h"
#include "auglab/error.h"
#include "auglab/experiment.h"
#include "auglab/generators.h"
#include "auglab/instance_json.h"
#include "auglab/oracle.h"
#include "auglab/worstcase.h"

struct auglab_instance {
  auglab::InstanceDocument doc;
};

struct auglab_run {
  auglab::ExperimentResult result;
  std::string csv_row;
};

namespace {

thread_local std::string last_error;

auglab_status ToStatus(auglab::ErrorCode code) {
  using auglab::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return AUGLAB_E_INVALID_ARGUMENT;
    case ErrorCode::kDimensionMismatch:
      return AUGLAB_E_DIMENSION_MISMATCH;
    case ErrorCode::kParse:
      return AUGLAB_E_PARSE;
    case ErrorCode::kIo:
      return AUGLAB_E_IO;
    case ErrorCode::kResourceLimit:
      return AUGLAB_E_RESOURCE_LIMIT;
    case ErrorCode::kNotApplicable:
      return AUGLAB_E_NOT_APPLICABLE;
    case ErrorCode::kVerificationFailed:
      return AUGLAB_E_VERIFICATION_FAILED;
    case ErrorCode::kInternal:
      return AUGLAB_E_INTERNAL;
  }
  return AUGLAB_E_INTERNAL;
}

template <typename Body>
auglab_status Guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return AUGLAB_OK;
  } catch (const auglab::Error& e) {
    last_error = e.what();
    return ToStatus(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return AUGLAB_E_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return AUGLAB_E_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return AUGLAB_E_INTERNAL;
  }
}

char* Copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(bool ok, const char* what) {
  if (!ok) auglab::Fail(auglab::ErrorCode::kInvalidArgument, what);
}

}  // namespace

extern "C" {

const char* auglab_version(void) { return "0.1.0"; }

const char* auglab_status_name(auglab_status status) {
  switch (status) {
    case AUGLAB_OK:
      return "OK";
    case AUGLAB_E_INVALID_ARGUMENT:
      return "INVALID_ARGUMENT";
    case AUGLAB_E_DIMENSION_MISMATCH:
      return "DIMENSION_MISMATCH";
    case AUGLAB_E_PARSE:
      return "PARSE";
    case AUGLAB_E_IO:
      return "IO";
    case AUGLAB_E_RESOURCE_LIMIT:
      return "RESOURCE_LIMIT";
    case AUGLAB_E_NOT_APPLICABLE:
      return "NOT_APPLICABLE";
    case AUGLAB_E_VERIFICATION_FAILED:
      return "VERIFICATION_FAILED";
    case AUGLAB_E_INTERNAL:
      return "INTERNAL";
  }
  return "UNKNOWN";
}

const char* auglab_last_error(void) { return last_error.c_str(); }

void auglab_string_free(char* s) { std::free(s); }

auglab_status auglab_instance_load(const char* path, auglab_instance** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new auglab_instance{auglab::LoadInstance(path)};
  });
}

auglab_status auglab_instance_parse(const char* json, auglab_instance** out) {
  return Guard([&] {
    Require(json != nullptr && out != nullptr, "null argument");
    *out = new auglab_instance{auglab::ParseInstance(json)};
  });
}

void auglab_instance_free(auglab_instance* instance) { delete instance; }

size_t auglab_instance_dimension(const auglab_instance* instance) {
  return instance == nullptr ? 0 : instance->doc.set.n();
}

auglab_status auglab_instance_to_json(const auglab_instance* instance,
                                      char** out) {
  return Guard([&] {
    Require(instance != nullptr && out != nullptr, "null argument");
    *out = Copy(
        auglab::InstanceToJson(instance->doc.set, instance->doc.start).dump());
  });
}

auglab_status auglab_instance_solve(const auglab_instance* instance,
                                    char** value) {
  return Guard([&] {
    Require(instance != nullptr && value != nullptr, "null argument");
    const auglab::FeasibleSet& set = instance->doc.set;
    const auglab::OracleAnswer a =
        auglab::Oracle(set).SolveExact(set.objective().c());
    *value = Copy(auglab::ToString(set.objective().ToOriginal(a.value)));
  });
}

auglab_status auglab_generate(const char* params_json, char** instance_json,
                              char** sidecar_json) {
  return Guard([&] {
    Require(params_json != nullptr && instance_json != nullptr,
            "null argument");
    const auglab::GeneratorParams params = auglab::GeneratorParams::FromJson(
        nlohmann::json::parse(params_json));
    const auglab::GeneratedInstance g = auglab::Generate(params);
    std::string text = auglab::InstanceToJson(g.set, g.start).dump();
    std::optional<std::string> side;
    if (g.sidecar) side = g.sidecar->dump();
    *instance_json = Copy(text);
    if (sidecar_json != nullptr) {
      *sidecar_json = side ? Copy(*side) : nullptr;
    }
  });
}

auglab_status auglab_run_create(const char* config_json,
                                const auglab_instance* instance,
                                auglab_run** out) {
  return Guard([&] {
    Require(config_json != nullptr && out != nullptr, "null argument");
    const nlohmann::json doc = nlohmann::json::parse(config_json);
    auto run = std::make_unique<auglab_run>();
    if (instance != nullptr) {
      nlohmann::json copy = doc;
      if (!copy.contains("instance")) copy["instance"] = "<memory>";
      const auglab::ExperimentConfig config =
          auglab::ExperimentConfig::FromJson(copy);
      const auglab::IntVector start =
          instance->doc.start ? *instance->doc.start
                              : auglab::DefaultStart(instance->doc.set);
      run->result = auglab::RunExperimentOn(config, instance->doc.set, start,
                                            config.InstanceId());
    } else {
      run->result =
          auglab::RunExperiment(auglab::ExperimentConfig::FromJson(doc));
    }
    run->csv_row = auglab::ToCsvLine(run->result.row);
    *out = run.release();
  });
}

void auglab_run_free(auglab_run* run) { delete run; }

auglab_run_status auglab_run_status_code(const auglab_run* run) {
  if (run == nullptr) return AUGLAB_RUN_ERROR;
  switch (run->result.row.status) {
    case auglab::RunStatus::kOptimal:
      return AUGLAB_RUN_OPTIMAL;
    case auglab::RunStatus::kBudgetExceeded:
      return AUGLAB_RUN_BUDGET_EXCEEDED;
    case auglab::RunStatus::kError:
      return AUGLAB_RUN_ERROR;
  }
  return AUGLAB_RUN_ERROR;
}

void auglab_run_counters(const auglab_run* run, auglab_counters* out) {
  if (out == nullptr) return;
  *out = auglab_counters{0, 0, 0, 0, 0};
  if (run == nullptr) return;
  const auglab::MetricsRow& r = run->result.row;
  *out = auglab_counters{r.n_improvements, r.n_subproblems, r.n_phases,
                         r.n_exhaust, r.n_skipped};
}

const char* auglab_run_csv_row(const auglab_run* run) {
  return run == nullptr ? "" : run->csv_row.c_str();
}

const char* auglab_run_message(const auglab_run* run) {
  return run == nullptr ? "" : run->result.row.message.c_str();
}

auglab_status auglab_run_trace(const auglab_run* run, int with_time,
                               char** out) {
  return Guard([&] {
    Require(run != nullptr && out != nullptr, "null argument");
    *out = Copy(run->result.trace
                    ? run->result.trace->ToJsonLines(with_time != 0)
                    : std::string());
  });
}

const char* auglab_csv_header(void) {
  static const std::string header = auglab::CsvHeader();
  return header.c_str();
}

auglab_status auglab_run_batch(const char* configs_json, unsigned workers,
                               char** csv) {
  return Guard([&] {
    Require(configs_json != nullptr && csv != nullptr, "null argument");
    const nlohmann::json doc = nlohmann::json::parse(configs_json);
    if (!doc.is_array()) {
      auglab::Fail(auglab::ErrorCode::kParse, "batch must be a JSON array");
    }
    std::vector<auglab::ExperimentConfig> configs;
    for (const nlohmann::json& c : doc) {
      configs.push_back(auglab::ExperimentConfig::FromJson(c));
    }
    std::string text = auglab::CsvHeader() + "\n";
    for (const auglab::MetricsRow& row : auglab::RunBatch(configs, workers)) {
      text += auglab::ToCsvLine(row) + "\n";
    }
    *csv = Copy(text);
  });
}

auglab_status auglab_verify_worstcase(int k, int p, int* all_pass,
                                      char** report) {
  return Guard([&] {
    Require(all_pass != nullptr && report != nullptr, "null argument");
    const auglab::WorstCaseInstance w = auglab::BuildWorstCase({k, p});
    const auglab::OrderingReport orderings = auglab::VerifyOrderings(w);
    const auglab::FeasibleSet set(w.points);
    const auglab::Trace bit = auglab::BitScaling(
        set, w.Start(), auglab::OraclePolicy::LeastImproving(),
        {auglab::BitScalingVariant::kClassic, false});
    const auglab::Trace geo = auglab::GeometricScaling(
        set, w.Start(), auglab::OraclePolicy::LeastImproving(),
        auglab::GeoConfig{});
    const uint64_t predicted = auglab::PredictedAdversarialCount({k, p});
    std::ostringstream out;
    out << "k=" << k << " p=" << p << " n=" << w.n() << "\n"
        << orderings.ToText() << "orderings: "
        << (orderings.AllPass() ? "all pass" : "FAILED") << "\n"
        << "bit scaling improvements: " << bit.counters.n_improvements
        << " (predicted " << predicted << ")\n"
        << "geometric scaling improvements: " << geo.counters.n_improvements
        << " (at most " << 2 * k - 1 << ")\n";
    *all_pass = orderings.AllPass() &&
                        bit.counters.n_improvements == predicted &&
                        geo.counters.n_improvements <=
                            static_cast<uint64_t>(2 * k - 1)
                    ? 1
                    : 0;
    *report = Copy(out.str());
  });
}

auglab_status auglab_report(const char* csv_text, char** report) {
  return Guard([&] {
    Require(csv_text != nullptr && report != nullptr, "null argument");
    const std::vector<auglab::MetricsRow> rows = auglab::ParseCsv(csv_text);
    if (rows.empty()) {
      auglab::Fail(auglab::ErrorCode::kInvalidArgument, "no rows to report");
    }
    *report = Copy(auglab::SummarizeRows(rows));
  });
}

}  // extern "C"
