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


#ifndef AUGLAB_METRICS_H_
#define AUGLAB_METRICS_H_

#include <string>
#include <vector>

#include "auglab/instance.h"
#include "auglab/numeric.h"
#include "auglab/trace.h"

namespace auglab {

enum class TimeAxis {
  // Seconds since the run started.
  kWall,
  // Oracle calls issued before the event; machine independent.
  kCalls,
};
const char* TimeAxisName(TimeAxis axis);
TimeAxis ParseTimeAxis(const std::string& name);

// A new incumbent value (original units) found at `time`.
struct PrimalPoint {
  Rational time;
  Rational value;
};

// |p - b| / max(|p|, |b|); 0 when both are 0 and 1 when their signs differ.
Rational PrimalGap(const Rational& primal, const Rational& best);

// Integral over [0, horizon] of the piecewise constant gap, which is 1 before
// the first point. Requires horizon > 0 and points sorted by time.
Rational PrimalIntegral(const std::vector<PrimalPoint>& points,
                        const Rational& best, const Rational& horizon);

// Incumbents of a trace in original objective units.
std::vector<PrimalPoint> PrimalCurve(const Trace& trace,
                                     const ObjectiveVector& objective,
                                     TimeAxis axis);

// End of the time axis for a finished trace: wall seconds or oracle calls,
// at least one call.
Rational TraceHorizon(const Trace& trace, TimeAxis axis);

// (prod (v_i + s))^(1/n) - s, computed in log space. Throws on an empty list.
double ShiftedGeomean(const std::vector<double>& values, double shift);

}  // namespace auglab

#endif  // AUGLAB_METRICS_H_
