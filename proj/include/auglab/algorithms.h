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


#ifndef AUGLAB_ALGORITHMS_H_
#define AUGLAB_ALGORITHMS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "auglab/instance.h"
#include "auglab/numeric.h"
#include "auglab/oracle.h"
#include "auglab/potential.h"
#include "auglab/trace.h"

namespace auglab {

// Threshold of the improving cut c x >= c x~ + delta for the current value v
// (original units): max(1, ceil(2 eps |v|)) for integral objectives, 2 eps |v|
// otherwise.
Rational ImprovingCutDelta(const Rational& current_value,
                           bool integral_objective,
                           const Rational& epsilon = MakeRational(1, 1000000));

struct RunOptions {
  uint64_t max_calls = 100000;
  std::optional<double> wall_limit_seconds;
  // Records and verifies per-step guarantees and re-validates every oracle
  // answer; verification failures end the run with status ERROR.
  bool checked = false;
  Rational epsilon = MakeRational(1, 1000000);
  OracleOptions oracle;
};

// Repeated improving queries with the improving cut until none exists.
Trace Augment(const FeasibleSet& set, const IntVector& x0,
              const OraclePolicy& policy, const RunOptions& options = {});

enum class BitScalingVariant {
  // One improving query for floor(c / mu) after another; mu halves when none
  // exists.
  kClassic,
  // One query per mu for floor(c / mu) with the improving cut on c; at mu = 1
  // queries repeat until none improves.
  kIncomplete,
  // kIncomplete without the improving cut.
  kNoImprove,
  // floor(c / mu) solved to optimality once per mu.
  kComplete,
};
const char* BitScalingVariantName(BitScalingVariant variant);
BitScalingVariant ParseBitScalingVariant(const std::string& name);

struct BitScalingConfig {
  BitScalingVariant variant = BitScalingVariant::kIncomplete;
  // Refuse objectives whose nonzero entries all have the same magnitude.
  bool applicability_gate = true;
};

// 0/1 problems only. Coordinates with negative cost are flipped internally;
// the trace reports points and values of the original problem.
Trace BitScaling(const FeasibleSet& set, const IntVector& x0,
                 const OraclePolicy& policy, const BitScalingConfig& config,
                 const RunOptions& options = {});

enum class MuInit {
  // 2 C (U - L).
  kTheory,
  // Smallest power of two above |c x0|, at most 10^8.
  kSolutionPower,
};
const char* MuInitName(MuInit init);
MuInit ParseMuInit(const std::string& name);

struct GeoConfig {
  PotentialKind potential = PotentialKind::kL1;
  Integer mu_factor = 2;
  MuInit mu_init = MuInit::kTheory;
  // Drop the improving cut from the queries.
  bool no_cutoff = false;
};

Rational InitialMu(const GeoConfig& config, const FeasibleSet& set,
                   const IntVector& x0);

Trace GeometricScaling(const FeasibleSet& set, const IntVector& x0,
                       const OraclePolicy& policy, const GeoConfig& config,
                       const RunOptions& options = {});

// Exact maximum-ratio augmentation.
Trace MraExact(const FeasibleSet& set, const IntVector& x0,
               PotentialKind potential, const RunOptions& options = {});

struct MraSearchConfig {
  // Defaults: 0, 2 C (U - L) and 1 / (2 D^2) with D = sum_j (u_j - l_j).
  std::optional<Rational> mu_lo;
  std::optional<Rational> mu_hi;
  std::optional<Rational> tolerance;
  uint64_t max_outer = 200;
  // Evaluate mu at the best ratio found so far when it lies in the interval;
  // a nonpositive value there closes the interval at once.
  bool probe_best_ratio = true;
};

// Maximum-ratio augmentation with the l1 potential, where the ratio is found
// by bisection over mu and each penalized subproblem is solved by a cutting
// plane method on supergradients of c (x - x~) - mu ||x - x~||_1.
Trace MraCuttingPlane(const FeasibleSet& set, const IntVector& x0,
                      const MraSearchConfig& config = {},
                      const RunOptions& options = {});

// s = sgn(x - anchor) with sgn(0) = 0. The supergradient of
// c (x - anchor) - mu ||x - anchor||_1 at x is c - mu s.
std::vector<int> SignVector(const IntVector& x, const IntVector& anchor);
std::vector<Rational> Supergradient(const IntVector& c, const Rational& mu,
                                    const std::vector<int>& sign);

enum class AlgorithmKind {
  kAugment,
  kBitScaling,
  kGeometric,
  kMraExact,
  kMraCuttingPlane,
};

struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::kAugment;
  OraclePolicy policy = OraclePolicy::Optimal();
  BitScalingConfig bit;
  GeoConfig geo;
  PotentialKind mra_potential = PotentialKind::kStandard;
  MraSearchConfig mra;

  // Short stable label, e.g. "bitscale-classic" or "geom-l1-8".
  std::string Label() const;
};

Trace RunAlgorithm(const AlgorithmSpec& spec, const FeasibleSet& set,
                   const IntVector& x0, const RunOptions& options = {});

// Checks a finished trace against the counting bounds and trace invariants
// that apply to its algorithm. Returns one message per violation.
std::vector<std::string> CheckTraceInvariants(const AlgorithmSpec& spec,
                                              const FeasibleSet& set,
                                              const Trace& trace);

}  // namespace auglab

#endif  // AUGLAB_ALGORITHMS_H_
