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


#ifndef AUGLAB_INSTANCE_H_
#define AUGLAB_INSTANCE_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "auglab/numeric.h"

namespace auglab {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

const char* SenseName(Sense sense);

struct Row {
  IntVector coeffs;
  Sense sense = Sense::kLessEqual;
  Integer rhs;
};

// Integer objective, always to be maximized. The objective the user supplied
// equals sign * c / scale, where sign is -1 for minimization inputs.
class ObjectiveVector {
 public:
  ObjectiveVector() = default;
  explicit ObjectiveVector(IntVector c, Rational scale = Rational(1),
                           bool negated = false);

  // Clears denominators of a rational objective; `minimize` negates it.
  static ObjectiveVector FromRational(const std::vector<Rational>& c,
                                      bool minimize);

  const IntVector& c() const { return c_; }
  size_t size() const { return c_.size(); }
  const Rational& scale() const { return scale_; }
  bool negated() const { return negated_; }
  // Feasible points of an integral objective have integral original values.
  bool integral_objective() const { return scale_ == 1; }

  // ||c||_inf + 1, the constant of the bit scaling analysis (>= 1).
  Integer BitScalingC() const { return MaxAbs(c_) + 1; }
  // ||c||_inf, the constant of the geometric scaling analysis.
  Integer GeometricC() const { return MaxAbs(c_); }

  Integer Value(const IntVector& x) const { return Dot(c_, x); }
  // Objective value in the units and sense of the original input.
  Rational OriginalValue(const IntVector& x) const;
  // Maps an internal value (or value difference) to original units.
  Rational ToOriginal(const Integer& internal_value) const;

 private:
  IntVector c_;
  Rational scale_ = Rational(1);
  bool negated_ = false;
};

// max { c x | rows, l <= x <= u, x integral } with finite bounds.
class Instance {
 public:
  Instance(size_t n, std::vector<Row> rows, IntVector lower, IntVector upper,
           ObjectiveVector objective, bool maximize = true);

  size_t n() const { return n_; }
  const std::vector<Row>& rows() const { return rows_; }
  const IntVector& lower() const { return lower_; }
  const IntVector& upper() const { return upper_; }
  const ObjectiveVector& objective() const { return objective_; }
  bool maximize() const { return maximize_; }

  // U := max_j u_j and L := min_j l_j.
  Integer MaxUpper() const;
  Integer MinLower() const;
  bool IsBinary() const;

  bool Contains(const IntVector& x) const;

  Instance WithObjective(ObjectiveVector objective) const;

 private:
  size_t n_;
  std::vector<Row> rows_;
  IntVector lower_;
  IntVector upper_;
  ObjectiveVector objective_;
  bool maximize_;
};

// A 0/1 polytope given by its vertex list. The integral points of the convex
// hull of a set of 0/1 vectors are exactly the listed vectors, so membership is
// a lookup.
class PointSetInstance {
 public:
  PointSetInstance(size_t n, std::vector<IntVector> points,
                   ObjectiveVector objective);

  size_t n() const { return n_; }
  const std::vector<IntVector>& points() const { return points_; }
  const IntVector& lower() const { return lower_; }
  const IntVector& upper() const { return upper_; }
  const ObjectiveVector& objective() const { return objective_; }

  bool Contains(const IntVector& x) const;
  // Position of x in points(), if listed.
  std::optional<size_t> IndexOf(const IntVector& x) const;

  PointSetInstance WithObjective(ObjectiveVector objective) const;

 private:
  size_t n_;
  std::vector<IntVector> points_;
  std::set<IntVector> lookup_;
  IntVector lower_;
  IntVector upper_;
  ObjectiveVector objective_;
};

// Either representation, shared immutably.
class FeasibleSet {
 public:
  FeasibleSet(Instance instance);          // NOLINT(runtime/explicit)
  FeasibleSet(PointSetInstance instance);  // NOLINT(runtime/explicit)

  bool is_point_set() const;
  const Instance& instance() const;
  const PointSetInstance& point_set() const;

  size_t n() const;
  const IntVector& lower() const;
  const IntVector& upper() const;
  const ObjectiveVector& objective() const;
  Integer MaxUpper() const;
  Integer MinLower() const;
  bool IsBinary() const;
  bool Contains(const IntVector& x) const;

  FeasibleSet WithObjective(ObjectiveVector objective) const;

 private:
  std::shared_ptr<const std::variant<Instance, PointSetInstance>> data_;
};

// An integer direction z anchored at a base point.
struct Direction {
  IntVector z;
  IntVector base;

  // z = Positive() - Negative(), both nonnegative with disjoint supports.
  IntVector Positive() const;
  IntVector Negative() const;
  IntVector Target() const { return Add(base, z); }
  bool IsFeasible(const FeasibleSet& set) const;
};

}  // namespace auglab

#endif  // AUGLAB_INSTANCE_H_
