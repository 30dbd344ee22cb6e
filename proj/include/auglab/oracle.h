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


#ifndef AUGLAB_ORACLE_H_
#define AUGLAB_ORACLE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "auglab/instance.h"
#include "auglab/numeric.h"
#include "auglab/potential.h"

namespace auglab {

enum class PolicyKind { kOptimal, kFirstImproving, kLeastImproving, kMaxRatio };

struct OraclePolicy {
  PolicyKind kind = PolicyKind::kOptimal;
  // Used by kMaxRatio only.
  PotentialKind potential = PotentialKind::kL1;

  static OraclePolicy Optimal() { return {PolicyKind::kOptimal}; }
  static OraclePolicy FirstImproving() { return {PolicyKind::kFirstImproving}; }
  static OraclePolicy LeastImproving() { return {PolicyKind::kLeastImproving}; }
  static OraclePolicy MaxRatio(PotentialKind potential) {
    return {PolicyKind::kMaxRatio, potential};
  }
};

// 16 hex digits fingerprinting `text`; used for query and answer digests.
std::string DigestOf(const std::string& text);

// "OPTIMAL", "FIRST_IMPROVING", "LEAST_IMPROVING", "MAX_RATIO".
std::string PolicyName(const OraclePolicy& policy);
OraclePolicy ParsePolicy(const std::string& name,
                         PotentialKind potential = PotentialKind::kL1);

// objective * x >= threshold, typically c anchor + delta.
struct ImprovingCut {
  IntVector objective;
  Rational threshold;
};

// q (x - anchor) - mu rho(anchor, x - anchor) > 0.
struct Penalty {
  Rational mu;
  PotentialKind potential = PotentialKind::kL1;
};

struct OracleQuery {
  IntVector objective;
  std::optional<IntVector> anchor;
  std::optional<ImprovingCut> improving_cut;
  std::optional<Penalty> penalty;

  // Short stable fingerprint of the query, for traces.
  std::string Digest() const;
};

struct OracleCounters {
  uint64_t nodes = 0;
  uint64_t points_scanned = 0;
  uint64_t pruned = 0;

  OracleCounters& operator+=(const OracleCounters& other);
};

enum class AnswerStatus { kPoint, kInfeasible, kOptimalCertified };
const char* AnswerStatusName(AnswerStatus status);

struct OracleAnswer {
  AnswerStatus status = AnswerStatus::kInfeasible;
  IntVector x;
  // Query objective at x, and its gain over the anchor when one was given.
  Integer value;
  Integer improvement;
  // Exact c(x - anchor) / rho(anchor, x - anchor) for ratio answers.
  std::optional<Rational> ratio;
  OracleCounters counters;

  bool has_point() const { return status != AnswerStatus::kInfeasible; }
  std::string Digest() const;
};

// Solution of the cutting-plane master problem
//   max_x min_s (c - mu s)(x - anchor)  s.t.  c (x - anchor) > 0
// over a pool of sign vectors s.
struct MasterAnswer {
  bool found = false;
  IntVector x;
  Rational value;
  OracleCounters counters;
};

struct OracleOptions {
  uint64_t node_limit = 1000000000ULL;
};

// Exact enumeration oracle over a bounded feasible set. H-representations are
// searched depth first with row-interval pruning and incumbent bounds;
// V-representations are scanned in list order. Ties go to the
// lexicographically smallest point. Const methods are safe to call
// concurrently.
class Oracle {
 public:
  explicit Oracle(FeasibleSet set, OracleOptions options = {});

  const FeasibleSet& set() const { return set_; }
  const OracleOptions& options() const { return options_; }

  // A maximizer of `objective` subject to the optional cut; INFEASIBLE if the
  // cut empties the set.
  OracleAnswer SolveExact(const IntVector& objective,
                          const std::optional<ImprovingCut>& cut = {}) const;

  // A point with objective (x - anchor) > 0 satisfying the optional cut and
  // penalty, chosen according to the policy.
  OracleAnswer Answer(const OracleQuery& query,
                      const OraclePolicy& policy) const;

  // argmax c(x - anchor) / rho(anchor, x - anchor) over improving points.
  OracleAnswer MaxRatioPoint(const IntVector& c, const IntVector& anchor,
                             PotentialKind potential) const;

  MasterAnswer SolveMaster(const IntVector& c, const IntVector& anchor,
                           const Rational& mu,
                           const std::vector<std::vector<int>>& sign_cuts) const;

 private:
  struct Cache;

  FeasibleSet set_;
  OracleOptions options_;
  std::shared_ptr<const Cache> cache_;
};

}  // namespace auglab

#endif  // AUGLAB_ORACLE_H_
