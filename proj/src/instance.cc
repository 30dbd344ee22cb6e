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


#include "auglab/instance.h"

#include <string>
#include <utility>

#include "auglab/error.h"

namespace auglab {

const char* SenseName(Sense sense) {
  switch (sense) {
    case Sense::kLessEqual:
      return "LE";
    case Sense::kEqual:
      return "EQ";
    case Sense::kGreaterEqual:
      return "GE";
  }
  return "?";
}

ObjectiveVector::ObjectiveVector(IntVector c, Rational scale, bool negated)
    : c_(std::move(c)), scale_(std::move(scale)), negated_(negated) {
  scale_.canonicalize();
  if (scale_ <= 0) Fail(ErrorCode::kInvalidArgument, "objective scale <= 0");
}

ObjectiveVector ObjectiveVector::FromRational(const std::vector<Rational>& c,
                                              bool minimize) {
  Integer den = 1;
  for (const Rational& q : c) den = Lcm(den, q.get_den());
  IntVector ints;
  ints.reserve(c.size());
  for (const Rational& q : c) {
    Integer v = q.get_num() * (den / q.get_den());
    ints.push_back(minimize ? Integer(-v) : v);
  }
  return ObjectiveVector(std::move(ints), Rational(den), minimize);
}

Rational ObjectiveVector::ToOriginal(const Integer& internal_value) const {
  Rational v = Rational(internal_value) / scale_;
  return negated_ ? Rational(-v) : v;
}

Rational ObjectiveVector::OriginalValue(const IntVector& x) const {
  return ToOriginal(Value(x));
}

Instance::Instance(size_t n, std::vector<Row> rows, IntVector lower,
                   IntVector upper, ObjectiveVector objective, bool maximize)
    : n_(n),
      rows_(std::move(rows)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      objective_(std::move(objective)),
      maximize_(maximize) {
  if (n_ == 0) Fail(ErrorCode::kInvalidArgument, "instance dimension is 0");
  if (lower_.size() != n_ || upper_.size() != n_) {
    Fail(ErrorCode::kDimensionMismatch, "bounds must have length n");
  }
  if (objective_.size() != n_) {
    Fail(ErrorCode::kDimensionMismatch, "objective must have length n");
  }
  for (size_t j = 0; j < n_; ++j) {
    if (lower_[j] > upper_[j]) {
      Fail(ErrorCode::kInvalidArgument,
           "empty domain for variable " + std::to_string(j));
    }
  }
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].coeffs.size() != n_) {
      Fail(ErrorCode::kDimensionMismatch,
           "row " + std::to_string(i) + " does not have n coefficients");
    }
  }
}

Integer Instance::MaxUpper() const {
  Integer m = upper_[0];
  for (const Integer& u : upper_) {
    if (u > m) m = u;
  }
  return m;
}

Integer Instance::MinLower() const {
  Integer m = lower_[0];
  for (const Integer& l : lower_) {
    if (l < m) m = l;
  }
  return m;
}

bool Instance::IsBinary() const {
  for (size_t j = 0; j < n_; ++j) {
    if (lower_[j] != 0 || upper_[j] != 1) return false;
  }
  return true;
}

bool Instance::Contains(const IntVector& x) const {
  if (x.size() != n_) {
    Fail(ErrorCode::kDimensionMismatch,
         "point of length " + std::to_string(x.size()) + ", expected " +
             std::to_string(n_));
  }
  for (size_t j = 0; j < n_; ++j) {
    if (x[j] < lower_[j] || x[j] > upper_[j]) return false;
  }
  for (const Row& row : rows_) {
    Integer activity = Dot(row.coeffs, x);
    switch (row.sense) {
      case Sense::kLessEqual:
        if (activity > row.rhs) return false;
        break;
      case Sense::kEqual:
        if (activity != row.rhs) return false;
        break;
      case Sense::kGreaterEqual:
        if (activity < row.rhs) return false;
        break;
    }
  }
  return true;
}

Instance Instance::WithObjective(ObjectiveVector objective) const {
  return Instance(n_, rows_, lower_, upper_, std::move(objective), maximize_);
}

PointSetInstance::PointSetInstance(size_t n, std::vector<IntVector> points,
                                   ObjectiveVector objective)
    : n_(n), points_(std::move(points)), objective_(std::move(objective)) {
  if (n_ == 0) Fail(ErrorCode::kInvalidArgument, "point set dimension is 0");
  if (points_.empty()) Fail(ErrorCode::kInvalidArgument, "empty point set");
  if (objective_.size() != n_) {
    Fail(ErrorCode::kDimensionMismatch, "objective must have length n");
  }
  for (const IntVector& p : points_) {
    if (p.size() != n_) {
      Fail(ErrorCode::kDimensionMismatch, "point does not have length n");
    }
    for (const Integer& v : p) {
      if (v != 0 && v != 1) {
        Fail(ErrorCode::kInvalidArgument,
             "point sets must consist of 0/1 vectors");
      }
    }
    if (!lookup_.insert(p).second) {
      Fail(ErrorCode::kInvalidArgument, "duplicate point " + ToString(p));
    }
  }
  lower_ = points_.front();
  upper_ = points_.front();
  for (const IntVector& p : points_) {
    for (size_t j = 0; j < n_; ++j) {
      if (p[j] < lower_[j]) lower_[j] = p[j];
      if (p[j] > upper_[j]) upper_[j] = p[j];
    }
  }
}

bool PointSetInstance::Contains(const IntVector& x) const {
  if (x.size() != n_) {
    Fail(ErrorCode::kDimensionMismatch,
         "point of length " + std::to_string(x.size()) + ", expected " +
             std::to_string(n_));
  }
  return lookup_.count(x) > 0;
}

std::optional<size_t> PointSetInstance::IndexOf(const IntVector& x) const {
  for (size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] == x) return i;
  }
  return std::nullopt;
}

PointSetInstance PointSetInstance::WithObjective(
    ObjectiveVector objective) const {
  return PointSetInstance(n_, points_, std::move(objective));
}

FeasibleSet::FeasibleSet(Instance instance)
    : data_(std::make_shared<const std::variant<Instance, PointSetInstance>>(
          std::move(instance))) {}

FeasibleSet::FeasibleSet(PointSetInstance instance)
    : data_(std::make_shared<const std::variant<Instance, PointSetInstance>>(
          std::move(instance))) {}

bool FeasibleSet::is_point_set() const {
  return std::holds_alternative<PointSetInstance>(*data_);
}

const Instance& FeasibleSet::instance() const {
  if (is_point_set()) Fail(ErrorCode::kInvalidArgument, "not an H-instance");
  return std::get<Instance>(*data_);
}

const PointSetInstance& FeasibleSet::point_set() const {
  if (!is_point_set()) Fail(ErrorCode::kInvalidArgument, "not a point set");
  return std::get<PointSetInstance>(*data_);
}

size_t FeasibleSet::n() const {
  return std::visit([](const auto& s) { return s.n(); }, *data_);
}

const IntVector& FeasibleSet::lower() const {
  return std::visit([](const auto& s) -> const IntVector& { return s.lower(); },
                    *data_);
}

const IntVector& FeasibleSet::upper() const {
  return std::visit([](const auto& s) -> const IntVector& { return s.upper(); },
                    *data_);
}

const ObjectiveVector& FeasibleSet::objective() const {
  return std::visit(
      [](const auto& s) -> const ObjectiveVector& { return s.objective(); },
      *data_);
}

Integer FeasibleSet::MaxUpper() const {
  Integer m = upper()[0];
  for (const Integer& u : upper()) {
    if (u > m) m = u;
  }
  return m;
}

Integer FeasibleSet::MinLower() const {
  Integer m = lower()[0];
  for (const Integer& l : lower()) {
    if (l < m) m = l;
  }
  return m;
}

bool FeasibleSet::IsBinary() const {
  if (is_point_set()) return true;
  return instance().IsBinary();
}

bool FeasibleSet::Contains(const IntVector& x) const {
  return std::visit([&](const auto& s) { return s.Contains(x); }, *data_);
}

FeasibleSet FeasibleSet::WithObjective(ObjectiveVector objective) const {
  if (is_point_set()) return point_set().WithObjective(std::move(objective));
  return instance().WithObjective(std::move(objective));
}

IntVector Direction::Positive() const {
  IntVector r(z.size());
  for (size_t j = 0; j < z.size(); ++j) r[j] = z[j] > 0 ? z[j] : Integer(0);
  return r;
}

IntVector Direction::Negative() const {
  IntVector r(z.size());
  for (size_t j = 0; j < z.size(); ++j) r[j] = z[j] < 0 ? Integer(-z[j]) : Integer(0);
  return r;
}

bool Direction::IsFeasible(const FeasibleSet& set) const {
  return set.Contains(Target());
}

}  // namespace auglab
