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


#include "auglab/geometry.h"

#include <optional>
#include <utility>

#include "auglab/error.h"

namespace auglab {

bool CheckFeasible(const Instance& instance, const IntVector& x) {
  return instance.Contains(x);
}

bool CheckFeasible(const FeasibleSet& set, const IntVector& x) {
  return set.Contains(x);
}

std::vector<size_t> Support(const IntVector& z) {
  std::vector<size_t> s;
  for (size_t j = 0; j < z.size(); ++j) {
    if (z[j] != 0) s.push_back(j);
  }
  return s;
}

namespace {

bool InBox(const FeasibleSet& set, const IntVector& x) {
  for (size_t j = 0; j < x.size(); ++j) {
    if (x[j] < set.lower()[j] || x[j] > set.upper()[j]) return false;
  }
  return true;
}

bool FeasibleAt(const FeasibleSet& set, const IntVector& x, const IntVector& z,
                const Integer& alpha) {
  IntVector y = Add(x, Scale(alpha, z));
  return InBox(set, y) && set.Contains(y);
}

}  // namespace

bool IsExhaustive(const FeasibleSet& set, const IntVector& x,
                  const IntVector& z) {
  if (z.size() != set.n() || x.size() != set.n()) {
    Fail(ErrorCode::kDimensionMismatch, "IsExhaustive dimensions");
  }
  if (IsZero(z)) {
    Fail(ErrorCode::kInvalidArgument, "exhaustive directions are nonzero");
  }
  return !FeasibleAt(set, x, z, Integer(2));
}

Integer ExhaustDirection(const FeasibleSet& set, const IntVector& x,
                         const IntVector& z) {
  if (z.size() != set.n() || x.size() != set.n()) {
    Fail(ErrorCode::kDimensionMismatch, "ExhaustDirection dimensions");
  }
  if (IsZero(z)) Fail(ErrorCode::kInvalidArgument, "zero direction");
  // Cap implied by the bounds: alpha |z_j| <= slack_j.
  std::optional<Integer> cap;
  for (size_t j = 0; j < z.size(); ++j) {
    if (z[j] == 0) continue;
    Integer slack = z[j] > 0 ? Integer(set.upper()[j] - x[j])
                             : Integer(x[j] - set.lower()[j]);
    Integer bound = FloorDiv(slack, Abs(z[j]));
    if (!cap || bound < *cap) cap = bound;
  }
  Integer good = 1;
  if (*cap <= 1) return good;
  // Feasible alphas form an interval [0, alpha*] by convexity.
  Integer bad = 0;  // 0 means "no infeasible alpha known yet".
  Integer probe = 2;
  while (true) {
    if (probe > *cap) {
      if (FeasibleAt(set, x, z, *cap)) return *cap;
      bad = *cap;
      break;
    }
    if (FeasibleAt(set, x, z, probe)) {
      good = probe;
      probe *= 2;
    } else {
      bad = probe;
      break;
    }
  }
  while (bad - good > 1) {
    Integer mid = (good + bad) / 2;
    if (FeasibleAt(set, x, z, mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

bool FlipResult::IsIdentity() const {
  for (bool b : mask) {
    if (b) return false;
  }
  return true;
}

IntVector FlipResult::Apply(const IntVector& x) const {
  return ApplyFlip(mask, x);
}

IntVector ApplyFlip(const std::vector<bool>& mask, const IntVector& x) {
  if (mask.size() != x.size()) {
    Fail(ErrorCode::kDimensionMismatch, "flip mask length");
  }
  IntVector y = x;
  for (size_t j = 0; j < x.size(); ++j) {
    if (mask[j]) y[j] = 1 - x[j];
  }
  return y;
}

namespace {

std::pair<ObjectiveVector, Integer> FlipObjective(
    const ObjectiveVector& objective, const std::vector<bool>& mask) {
  IntVector c = objective.c();
  Integer offset = 0;
  for (size_t j = 0; j < c.size(); ++j) {
    if (mask[j]) {
      // c_j x_j = c_j (1 - x'_j) = c_j - c_j x'_j.
      offset += c[j];
      c[j] = -c[j];
    }
  }
  return {ObjectiveVector(std::move(c), objective.scale(), objective.negated()),
          offset};
}

std::vector<bool> NegativeMask(const ObjectiveVector& objective) {
  std::vector<bool> mask(objective.size());
  for (size_t j = 0; j < objective.size(); ++j) mask[j] = objective.c()[j] < 0;
  return mask;
}

}  // namespace

FlipResult FlipToNonnegative(const Instance& instance) {
  if (!instance.IsBinary()) {
    Fail(ErrorCode::kNotApplicable,
         "coordinate flips require a 0/1 instance (l = 0, u = 1)");
  }
  std::vector<bool> mask = NegativeMask(instance.objective());
  std::vector<Row> rows = instance.rows();
  for (Row& row : rows) {
    for (size_t j = 0; j < row.coeffs.size(); ++j) {
      if (mask[j]) {
        // a_j x_j = a_j - a_j x'_j.
        row.rhs -= row.coeffs[j];
        row.coeffs[j] = -row.coeffs[j];
      }
    }
  }
  auto [objective, offset] = FlipObjective(instance.objective(), mask);
  Instance flipped(instance.n(), std::move(rows), instance.lower(),
                   instance.upper(), std::move(objective), instance.maximize());
  return FlipResult{FeasibleSet(std::move(flipped)), std::move(mask),
                    std::move(offset)};
}

FlipResult FlipToNonnegative(const FeasibleSet& set) {
  if (!set.is_point_set()) return FlipToNonnegative(set.instance());
  const PointSetInstance& ps = set.point_set();
  std::vector<bool> mask = NegativeMask(ps.objective());
  std::vector<IntVector> points;
  points.reserve(ps.points().size());
  for (const IntVector& p : ps.points()) points.push_back(ApplyFlip(mask, p));
  auto [objective, offset] = FlipObjective(ps.objective(), mask);
  PointSetInstance flipped(ps.n(), std::move(points), std::move(objective));
  return FlipResult{FeasibleSet(std::move(flipped)), std::move(mask),
                    std::move(offset)};
}

}  // namespace auglab
