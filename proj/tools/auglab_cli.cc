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


// Command-line front end; talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "auglab/auglab.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct CString {
  char* p = nullptr;
  ~CString() { auglab_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

[[noreturn]] void Die(auglab_status status) {
  std::cerr << "auglab: " << auglab_status_name(status) << ": "
            << auglab_last_error() << "\n";
  std::exit(2);
}

void Check(auglab_status status) {
  if (status != AUGLAB_OK) Die(status);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "auglab: cannot read '" << path << "'\n";
    std::exit(2);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) {
    std::cerr << "auglab: cannot write '" << path << "'\n";
    std::exit(2);
  }
}

bool CheckedFromEnvironment() {
  const char* v = std::getenv("AUGLAB_CHECKED");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

struct GeneratorFlags {
  std::string kind;
  uint64_t seed = 1;
  int n = 10;
  int64_t cmax = 100;
  int rows = 0;
  int k = 3;
  int p = 3;

  void Add(CLI::App* app) {
    app->add_option("--seed", seed, "Random seed");
    app->add_option("--n", n, "Number of variables");
    app->add_option("--cmax", cmax, "Largest objective coefficient");
    app->add_option("--rows", rows, "Set packing rows (0: n/2)");
    app->add_option("--k", k, "Cardinality, or worst-case group size");
    app->add_option("--p", p, "Worst-case cost levels");
  }

  json ToJson() const {
    return {{"kind", kind}, {"seed", seed}, {"n", n}, {"cmax", cmax},
            {"rows", rows}, {"k", k},       {"p", p}};
  }
};

struct RunFlags {
  std::string instance;
  std::string config;
  GeneratorFlags gen;
  std::string algo = "augment";
  std::string variant;
  std::string policy = "optimal";
  std::string potential;
  std::string mu_factor = "2";
  std::string mu_init = "theory";
  bool no_cutoff = false;
  bool no_gate = false;
  uint64_t budget_calls = 100000;
  double time_limit = 0;
  std::string time_axis = "wall";
  std::string out;
  std::string trace;
  unsigned workers = 1;
};

json ConfigFromFlags(const RunFlags& f) {
  json algorithm = {{"algo", f.algo},
                    {"policy", f.policy},
                    {"mu_factor", f.mu_factor},
                    {"mu_init", f.mu_init},
                    {"no_cutoff", f.no_cutoff},
                    {"gate", !f.no_gate}};
  if (!f.variant.empty()) algorithm["variant"] = f.variant;
  if (!f.potential.empty()) algorithm["potential"] = f.potential;
  json config = {{"algorithm", algorithm},
                 {"budget", {{"calls", f.budget_calls}}},
                 {"time_axis", f.time_axis},
                 {"checked", CheckedFromEnvironment()}};
  if (f.time_limit > 0) config["budget"]["seconds"] = f.time_limit;
  if (!f.instance.empty()) {
    config["instance"] = f.instance;
  } else {
    config["instance"] = {{"generator", f.gen.ToJson()}};
  }
  if (!f.trace.empty()) config["trace"] = f.trace;
  return config;
}

// Appends rows to the CSV file, writing the header when the file is new or
// empty; prints to stdout without --out.
void EmitRows(const std::string& out, const std::string& header_and_rows) {
  if (out.empty()) {
    std::cout << header_and_rows;
    return;
  }
  bool fresh = true;
  {
    std::ifstream in(out);
    fresh = !in || in.peek() == std::ifstream::traits_type::eof();
  }
  std::string text = header_and_rows;
  if (!fresh) text = text.substr(text.find('\n') + 1);
  std::ofstream file(out, std::ios::app);
  if (!file || !(file << text)) {
    std::cerr << "auglab: cannot write '" << out << "'\n";
    std::exit(2);
  }
}

int CountErrorRows(const std::string& csv) {
  int errors = 0;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.find(",ERROR,") != std::string::npos) ++errors;
  }
  return errors;
}

int Run(const RunFlags& f) {
  std::string csv;
  if (!f.config.empty()) {
    json doc = json::parse(ReadFile(f.config));
    if (!doc.is_array()) doc = json::array({doc});
    if (CheckedFromEnvironment()) {
      for (json& c : doc) c["checked"] = true;
    }
    CString out;
    Check(auglab_run_batch(doc.dump().c_str(), f.workers, &out.p));
    csv = out.str();
  } else {
    if (f.instance.empty() && f.gen.kind.empty()) {
      std::cerr << "auglab: run needs --instance, --generator or --config\n";
      return 2;
    }
    auglab_run* run = nullptr;
    Check(auglab_run_create(ConfigFromFlags(f).dump().c_str(), nullptr, &run));
    csv = std::string(auglab_csv_header()) + "\n" + auglab_run_csv_row(run) +
          "\n";
    auglab_run_free(run);
  }
  EmitRows(f.out, csv);
  return CountErrorRows(csv) > 0 ? 3 : 0;
}

int Generate(const GeneratorFlags& g, const std::string& out,
             std::string sidecar_path) {
  CString instance, sidecar;
  Check(auglab_generate(g.ToJson().dump().c_str(), &instance.p, &sidecar.p));
  const std::string text = json::parse(instance.str()).dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    WriteFile(out, text);
  }
  if (sidecar.p != nullptr) {
    if (sidecar_path.empty() && !out.empty()) {
      const size_t dot = out.rfind(".json");
      sidecar_path = (dot == std::string::npos ? out : out.substr(0, dot)) +
                     ".levels.json";
    }
    const std::string side = json::parse(sidecar.str()).dump(2) + "\n";
    if (sidecar_path.empty()) {
      std::cerr << side;
    } else {
      WriteFile(sidecar_path, side);
    }
  }
  return 0;
}

int VerifyWorstCase(int k, int p, int k_max, int p_max, bool quiet) {
  if (k_max < k) k_max = k;
  if (p_max < p) p_max = p;
  int failures = 0;
  for (int kk = k; kk <= k_max; ++kk) {
    for (int pp = p; pp <= p_max; ++pp) {
      int pass = 0;
      CString report;
      Check(auglab_verify_worstcase(kk, pp, &pass, &report.p));
      if (!quiet || !pass) std::cout << report.str();
      std::cout << "k=" << kk << " p=" << pp << ": "
                << (pass ? "PASS" : "FAIL") << "\n";
      if (!pass) ++failures;
    }
  }
  return failures > 0 ? 1 : 0;
}

int Report(const std::string& path) {
  CString report;
  Check(auglab_report(ReadFile(path).c_str(), &report.p));
  std::cout << report.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primal augmentation and scaling experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(auglab_version()));

  GeneratorFlags gen;
  std::string gen_out, gen_sidecar;
  CLI::App* generate = app.add_subcommand("generate", "Write an instance");
  generate
      ->add_option("kind", gen.kind,
                   "RANDOM_KNAPSACK, RANDOM_SETPACK, CARDINALITY_K or "
                   "WORSTCASE")
      ->required();
  gen.Add(generate);
  generate->add_option("--out", gen_out, "Instance file (default stdout)");
  generate->add_option("--sidecar", gen_sidecar,
                       "Cost-level file for WORSTCASE (default "
                       "<out>.levels.json)");

  RunFlags rf;
  CLI::App* run = app.add_subcommand("run", "Run an algorithm");
  run->add_option("--instance", rf.instance, "Instance JSON file");
  run->add_option("--generator", rf.gen.kind, "Generate the instance");
  run->add_option("--config", rf.config,
                  "Experiment config JSON (object or array)");
  rf.gen.Add(run);
  run->add_option("--algo", rf.algo, "augment|bitscale|geom|mra|mra-exact")
      ->check(CLI::IsMember({"augment", "bitscale", "geom", "mra",
                             "mra-exact"}));
  run->add_option("--variant", rf.variant,
                  "Bit scaling variant: classic|incomplete|noimprove|complete");
  run->add_option("--policy", rf.policy, "optimal|first|least|maxratio")
      ->check(CLI::IsMember({"optimal", "first", "least", "maxratio"}));
  run->add_option("--potential", rf.potential, "standard|l1")
      ->check(CLI::IsMember({"standard", "l1"}));
  run->add_option("--mu-factor", rf.mu_factor, "Geometric scaling divisor");
  run->add_option("--mu-init", rf.mu_init, "theory|solution")
      ->check(CLI::IsMember({"theory", "solution"}));
  run->add_flag("--no-cutoff", rf.no_cutoff,
                "Geometric scaling without the improving cut");
  run->add_flag("--no-gate", rf.no_gate,
                "Run bit scaling even on equal-magnitude objectives");
  run->add_option("--budget-calls", rf.budget_calls, "Oracle call budget");
  run->add_option("--time-limit", rf.time_limit, "Wall-clock limit, seconds");
  run->add_option("--time-axis", rf.time_axis, "wall|calls")
      ->check(CLI::IsMember({"wall", "calls"}));
  run->add_option("--out", rf.out, "CSV file to append to (default stdout)");
  run->add_option("--trace", rf.trace, "JSON-lines trace file");
  run->add_option("--workers", rf.workers, "Threads for config batches");

  int wk = 2, wp = 3, wk_max = 0, wp_max = 0;
  bool quiet = false;
  CLI::App* verify = app.add_subcommand(
      "verify-worstcase", "Check the worst-case family and its counts");
  verify->add_option("--k", wk, "Group size");
  verify->add_option("--p", wp, "Cost levels");
  verify->add_option("--k-max", wk_max, "Check k..k-max");
  verify->add_option("--p-max", wp_max, "Check p..p-max");
  verify->add_flag("--quiet", quiet, "Only print one line per instance");

  std::string report_path;
  CLI::App* report = app.add_subcommand("report", "Summarize a results CSV");
  report->add_option("csv", report_path, "Results CSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return Generate(gen, gen_out, gen_sidecar);
    if (*run) return Run(rf);
    if (*verify) return VerifyWorstCase(wk, wp, wk_max, wp_max, quiet);
    if (*report) return Report(report_path);
  } catch (const json::exception& e) {
    std::cerr << "auglab: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
