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


#ifndef AUGLAB_POTENTIAL_H_
#define AUGLAB_POTENTIAL_H_

#include <string>

#include "auglab/instance.h"
#include "auglab/numeric.h"

namespace auglab {

// kStandard: rho(x, z) = p(x) z+ + n(x) z- with p(x)_j = 1/(u_j - x_j) and
// n(x)_j = 1/(x_j - l_j) (infinite on a tight bound), using 0 * inf = 0.
// kL1: rho(x, z) = ||z||_1.
enum class PotentialKind { kStandard, kL1 };

const char* PotentialName(PotentialKind kind);
PotentialKind ParsePotential(const std::string& name);

ExtendedValue StandardPotential(const IntVector& lower, const IntVector& upper,
                                const IntVector& x, const IntVector& z);
ExtendedValue StandardPotential(const FeasibleSet& set, const IntVector& x,
                                const IntVector& z);

Integer L1Potential(const IntVector& z);

ExtendedValue Potential(PotentialKind kind, const FeasibleSet& set,
                        const IntVector& x, const IntVector& z);

// Upper bound on rho over feasible directions of the set: n for the standard
// potential, sum_j (u_j - l_j) for the l1 potential.
Integer PotentialUpperBound(PotentialKind kind, const FeasibleSet& set);

}  // namespace auglab

#endif  // AUGLAB_POTENTIAL_H_
