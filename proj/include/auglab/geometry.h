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


#ifndef AUGLAB_GEOMETRY_H_
#define AUGLAB_GEOMETRY_H_

#include <cstddef>
#include <vector>

#include "auglab/instance.h"
#include "auglab/numeric.h"

namespace auglab {

bool CheckFeasible(const Instance& instance, const IntVector& x);
bool CheckFeasible(const FeasibleSet& set, const IntVector& x);

// supp(z), zero-based.
std::vector<size_t> Support(const IntVector& z);

// z is exhaustive for x if x + 2z is infeasible. Requires z != 0.
bool IsExhaustive(const FeasibleSet& set, const IntVector& x,
                  const IntVector& z);

// Largest alpha >= 1 with x + alpha z feasible, given that x and x + z are.
// Doubling up to the bound-implied cap followed by binary search.
Integer ExhaustDirection(const FeasibleSet& set, const IntVector& x,
                         const IntVector& z);

// Result of substituting x_i -> 1 - x_i on the coordinates with c_i < 0 of a
// 0/1 problem. original objective value = flipped value + offset.
struct FlipResult {
  FeasibleSet set;
  std::vector<bool> mask;
  Integer offset;

  bool IsIdentity() const;
  // Involution mapping points between original and flipped coordinates.
  IntVector Apply(const IntVector& x) const;
};

FlipResult FlipToNonnegative(const Instance& instance);
FlipResult FlipToNonnegative(const FeasibleSet& set);
IntVector ApplyFlip(const std::vector<bool>& mask, const IntVector& x);

}  // namespace auglab

#endif  // AUGLAB_GEOMETRY_H_
