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


#include "auglab/potential.h"

#include "auglab/error.h"

namespace auglab {

const char* PotentialName(PotentialKind kind) {
  return kind == PotentialKind::kStandard ? "standard" : "l1";
}

PotentialKind ParsePotential(const std::string& name) {
  if (name == "standard") return PotentialKind::kStandard;
  if (name == "l1") return PotentialKind::kL1;
  Fail(ErrorCode::kInvalidArgument, "unknown potential '" + name + "'");
}

ExtendedValue StandardPotential(const IntVector& lower, const IntVector& upper,
                                const IntVector& x, const IntVector& z) {
  const size_t n = x.size();
  if (z.size() != n || lower.size() != n || upper.size() != n) {
    Fail(ErrorCode::kDimensionMismatch, "standard potential dimensions");
  }
  ExtendedValue total;
  for (size_t j = 0; j < n; ++j) {
    if (z[j] > 0) {
      if (x[j] < upper[j]) {
        total = total + ExtendedValue(MakeRational(z[j], upper[j] - x[j]));
      } else {
        return ExtendedValue::Infinity();
      }
    } else if (z[j] < 0) {
      if (x[j] > lower[j]) {
        total = total + ExtendedValue(MakeRational(-z[j], x[j] - lower[j]));
      } else {
        return ExtendedValue::Infinity();
      }
    }
  }
  return total;
}

ExtendedValue StandardPotential(const FeasibleSet& set, const IntVector& x,
                                const IntVector& z) {
  return StandardPotential(set.lower(), set.upper(), x, z);
}

Integer L1Potential(const IntVector& z) {
  Integer s = 0;
  for (const Integer& v : z) s += Abs(v);
  return s;
}

ExtendedValue Potential(PotentialKind kind, const FeasibleSet& set,
                        const IntVector& x, const IntVector& z) {
  if (kind == PotentialKind::kStandard) return StandardPotential(set, x, z);
  return ExtendedValue(Rational(L1Potential(z)));
}

Integer PotentialUpperBound(PotentialKind kind, const FeasibleSet& set) {
  if (kind == PotentialKind::kStandard) return Integer(static_cast<long>(set.n()));
  Integer s = 0;
  for (size_t j = 0; j < set.n(); ++j) s += set.upper()[j] - set.lower()[j];
  return s;
}

}  // namespace auglab
