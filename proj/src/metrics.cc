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


#include "auglab/metrics.h"

#include <cmath>

#include "auglab/error.h"

namespace auglab {

const char* TimeAxisName(TimeAxis axis) {
  return axis == TimeAxis::kWall ? "wall" : "calls";
}

TimeAxis ParseTimeAxis(const std::string& name) {
  if (name == "wall") return TimeAxis::kWall;
  if (name == "calls") return TimeAxis::kCalls;
  Fail(ErrorCode::kInvalidArgument, "unknown time axis '" + name + "'");
}

Rational PrimalGap(const Rational& primal, const Rational& best) {
  if (primal == 0 && best == 0) return 0;
  if (sgn(primal) * sgn(best) < 0) return 1;
  const Rational a = abs(primal);
  const Rational b = abs(best);
  return Rational(abs(primal - best)) / (a > b ? a : b);
}

Rational PrimalIntegral(const std::vector<PrimalPoint>& points,
                        const Rational& best, const Rational& horizon) {
  if (horizon <= 0) {
    Fail(ErrorCode::kInvalidArgument, "primal integral horizon must be > 0");
  }
  Rational total = 0;
  Rational t = 0;
  Rational gap = 1;
  for (const PrimalPoint& pt : points) {
    if (pt.time < t) {
      Fail(ErrorCode::kInvalidArgument, "primal points are not sorted");
    }
    const Rational until = pt.time < horizon ? pt.time : horizon;
    total += gap * (until - t);
    t = until;
    gap = PrimalGap(pt.value, best);
  }
  total += gap * (horizon - t);
  return total;
}

std::vector<PrimalPoint> PrimalCurve(const Trace& trace,
                                     const ObjectiveVector& objective,
                                     TimeAxis axis) {
  std::vector<PrimalPoint> out;
  for (const TraceEvent& e : trace.events) {
    if (e.kind != EventKind::kStart && e.kind != EventKind::kImprovement) {
      continue;
    }
    const Rational time = axis == TimeAxis::kWall
                              ? Rational(e.time_seconds)
                              : Rational(Integer(
                                    static_cast<unsigned long>(e.call_index)));
    out.push_back({time, objective.ToOriginal(*e.value)});
  }
  return out;
}

Rational TraceHorizon(const Trace& trace, TimeAxis axis) {
  if (axis == TimeAxis::kWall) {
    Rational t(trace.wall_seconds);
    for (const TraceEvent& e : trace.events) {
      if (Rational(e.time_seconds) > t) t = Rational(e.time_seconds);
    }
    return t > 0 ? t : Rational(MakeRational(1, 1000000000));
  }
  const uint64_t calls = trace.counters.n_subproblems;
  return Rational(Integer(static_cast<unsigned long>(calls > 0 ? calls : 1)));
}

double ShiftedGeomean(const std::vector<double>& values, double shift) {
  if (values.empty()) {
    Fail(ErrorCode::kInvalidArgument, "shifted geometric mean of no values");
  }
  double log_sum = 0;
  for (double v : values) {
    if (v + shift <= 0) {
      Fail(ErrorCode::kInvalidArgument,
           "shifted geometric mean needs values above -shift");
    }
    log_sum += std::log(v + shift);
  }
  return std::exp(log_sum / static_cast<double>(values.size())) - shift;
}

}  // namespace auglab
