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


#include "auglab/algorithms.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "auglab/error.h"
#include "auglab/geometry.h"

namespace auglab {

namespace {

std::string Lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(ch));
  return s;
}

void ValidateStart(const FeasibleSet& set, const IntVector& x0) {
  if (x0.size() != set.n()) {
    Fail(ErrorCode::kDimensionMismatch,
         "start point has dimension " + std::to_string(x0.size()) +
             ", expected " + std::to_string(set.n()));
  }
  if (!set.Contains(x0)) {
    Fail(ErrorCode::kInvalidArgument, "start point is infeasible");
  }
}

bool EqualityOrBox(const FeasibleSet& set) {
  if (set.is_point_set()) return false;
  for (const Row& row : set.instance().rows()) {
    if (row.sense != Sense::kEqual) return false;
  }
  return true;
}

Integer OnesMax(const Oracle& oracle) {
  IntVector ones(oracle.set().n(), Integer(1));
  return oracle.SolveExact(ones).value;
}

// State shared by all schemes: the working set (possibly flipped), the
// incumbent and the trace under construction. Points and values reported to
// the trace are mapped back to the caller's coordinates.
class Runner {
 public:
  Runner(FeasibleSet work, const FeasibleSet& original, std::vector<bool> mask,
         const IntVector& x0, const RunOptions& options,
         bool phases_from_calls)
      : set_(std::move(work)),
        oracle_(set_, options.oracle),
        options_(options),
        rec_({options.max_calls, options.wall_limit_seconds},
             phases_from_calls),
        original_(original),
        mask_(std::move(mask)),
        x_(mask_.empty() ? x0 : ApplyFlip(mask_, x0)) {
    value_ = Dot(c(), x_);
  }

  const FeasibleSet& set() const { return set_; }
  const Oracle& oracle() const { return oracle_; }
  const RunOptions& options() const { return options_; }
  TraceRecorder& rec() { return rec_; }
  const IntVector& c() const { return set_.objective().c(); }
  const IntVector& x() const { return x_; }
  const Integer& value() const { return value_; }

  IntVector Reported(const IntVector& y) const {
    return mask_.empty() ? y : ApplyFlip(mask_, y);
  }
  Integer ReportedValue(const IntVector& y) const {
    return original_.objective().Value(Reported(y));
  }

  void Start() { rec_.Start(Reported(x_), ReportedValue(x_)); }

  // Improving cut on the working objective for the current incumbent.
  ImprovingCut Cut(Rational* delta_internal) const {
    const ObjectiveVector& obj = original_.objective();
    const Rational delta =
        ImprovingCutDelta(obj.ToOriginal(ReportedValue(x_)),
                          obj.integral_objective(), options_.epsilon);
    *delta_internal = delta * obj.scale();
    return {c(), Rational(value_) + *delta_internal};
  }

  OracleAnswer Ask(const OracleQuery& query, const OraclePolicy& policy) {
    rec_.CheckBudget();
    OracleAnswer answer = oracle_.Answer(query, policy);
    if (options_.checked) Verify(query, answer);
    rec_.OracleCall(query, answer, answer.has_point());
    return answer;
  }

  // Moves along y - x, exhausted, and records the improvement.
  void MoveTo(const IntVector& y, bool strictly_improving) {
    const IntVector z = Subtract(y, x_);
    const Integer alpha = ExhaustDirection(set_, x_, z);
    const IntVector step = Scale(alpha, z);
    if (options_.checked && !IsExhaustive(set_, x_, step)) {
      Fail(ErrorCode::kVerificationFailed, "step is not exhaustive");
    }
    rec_.Exhaust(alpha);
    const Integer before = ReportedValue(x_);
    x_ = Add(x_, step);
    value_ = Dot(c(), x_);
    const Integer after = ReportedValue(x_);
    if (options_.checked && strictly_improving && after <= before) {
      Fail(ErrorCode::kVerificationFailed, "objective did not increase");
    }
    rec_.Improvement(Reported(x_), after, after - before);
  }

  // Optimal value of the working objective; not counted as an oracle call.
  const Integer& OptimalValue() {
    if (!optimum_) optimum_ = oracle_.SolveExact(c()).value;
    return *optimum_;
  }

  template <typename Body>
  Trace Drive(Body&& body) {
    try {
      body();
      return Finish(RunStatus::kOptimal, {});
    } catch (const TraceRecorder::BudgetExhausted& e) {
      return Finish(RunStatus::kBudgetExceeded, e.reason);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kResourceLimit) {
        return Finish(RunStatus::kBudgetExceeded, e.what());
      }
      return Finish(RunStatus::kError,
                    std::string(ErrorCodeName(e.code())) + ": " + e.what());
    }
  }

 private:
  Trace Finish(RunStatus status, const std::string& note) {
    return rec_.Finish(status, Reported(x_), ReportedValue(x_), note);
  }

  void Verify(const OracleQuery& query, const OracleAnswer& answer) const {
    if (!answer.has_point()) return;
    auto fail = [](const std::string& what) {
      Fail(ErrorCode::kVerificationFailed, "oracle answer " + what);
    };
    if (!set_.Contains(answer.x)) fail("is infeasible");
    if (!query.anchor) return;
    const IntVector z = Subtract(answer.x, *query.anchor);
    const Integer gain = Dot(query.objective, z);
    if (gain <= 0) fail("is not improving");
    if (query.improving_cut &&
        Rational(Dot(query.improving_cut->objective, answer.x)) <
            query.improving_cut->threshold) {
      fail("violates the improving cut");
    }
    if (query.penalty) {
      const ExtendedValue rho =
          Potential(query.penalty->potential, set_, *query.anchor, z);
      if (rho.IsInfinite() ||
          Rational(gain) <= query.penalty->mu * rho.value()) {
        fail("violates the penalty");
      }
    }
  }

  FeasibleSet set_;
  Oracle oracle_;
  const RunOptions& options_;
  TraceRecorder rec_;
  const FeasibleSet& original_;
  std::vector<bool> mask_;
  IntVector x_;
  Integer value_;
  std::optional<Integer> optimum_;
};

// True if `next` = g * `prev` for a positive integer g.
bool PositiveMultiple(const IntVector& next, const IntVector& prev) {
  if (IsZero(prev)) return false;
  std::optional<Integer> factor;
  for (size_t j = 0; j < prev.size(); ++j) {
    if (prev[j] == 0) {
      if (next[j] != 0) return false;
      continue;
    }
    if (!factor) {
      if (next[j] % prev[j] != 0) return false;
      factor = next[j] / prev[j];
      if (*factor <= 0) return false;
    }
    if (next[j] != *factor * prev[j]) return false;
  }
  return true;
}

// Searches improving points of `query` until none exists. With an improving
// cut wider than one unit, an empty answer is re-checked without the cut.
void AugmentLoop(Runner& r, const OraclePolicy& policy, const IntVector& q,
                 bool use_cut, bool monotone) {
  for (;;) {
    OracleQuery query{q, r.x(), std::nullopt, std::nullopt};
    Rational delta = 1;
    if (use_cut) query.improving_cut = r.Cut(&delta);
    OracleAnswer a = r.Ask(query, policy);
    if (!a.has_point() && use_cut && delta > 1) {
      query.improving_cut.reset();
      a = r.Ask(query, policy);
    }
    if (!a.has_point()) return;
    r.MoveTo(a.x, monotone);
  }
}

}  // namespace

Rational ImprovingCutDelta(const Rational& current_value,
                           bool integral_objective, const Rational& epsilon) {
  const Rational raw = 2 * epsilon * abs(current_value);
  if (!integral_objective) return raw;
  const Integer up = Ceil(raw);
  return Rational(up < 1 ? Integer(1) : up);
}

Trace Augment(const FeasibleSet& set, const IntVector& x0,
              const OraclePolicy& policy, const RunOptions& options) {
  ValidateStart(set, x0);
  Runner r(set, set, {}, x0, options, true);
  return r.Drive([&] {
    r.Start();
    r.rec().BeginPhase(std::nullopt);
    AugmentLoop(r, policy, r.c(), true, true);
  });
}

const char* BitScalingVariantName(BitScalingVariant variant) {
  switch (variant) {
    case BitScalingVariant::kClassic:
      return "CLASSIC";
    case BitScalingVariant::kIncomplete:
      return "INCOMPLETE";
    case BitScalingVariant::kNoImprove:
      return "NOIMPROVE";
    case BitScalingVariant::kComplete:
      return "COMPLETE";
  }
  return "?";
}

BitScalingVariant ParseBitScalingVariant(const std::string& name) {
  const std::string key = Lower(name);
  if (key == "classic") return BitScalingVariant::kClassic;
  if (key == "incomplete") return BitScalingVariant::kIncomplete;
  if (key == "noimprove") return BitScalingVariant::kNoImprove;
  if (key == "complete") return BitScalingVariant::kComplete;
  Fail(ErrorCode::kInvalidArgument, "unknown bit scaling variant '" + name +
                                        "'");
}

Trace BitScaling(const FeasibleSet& set, const IntVector& x0,
                 const OraclePolicy& policy, const BitScalingConfig& config,
                 const RunOptions& options) {
  ValidateStart(set, x0);
  if (!set.IsBinary()) {
    Fail(ErrorCode::kNotApplicable, "bit scaling requires a 0/1 problem");
  }
  const IntVector& c0 = set.objective().c();
  if (config.applicability_gate) {
    std::set<Integer> magnitudes;
    for (const Integer& cj : c0) {
      if (cj != 0) magnitudes.insert(Abs(cj));
    }
    if (magnitudes.size() == 1) {
      Fail(ErrorCode::kNotApplicable,
           "all nonzero objective coefficients have the same magnitude");
    }
  }
  FlipResult flip = FlipToNonnegative(set);
  Runner r(flip.IsIdentity() ? set : flip.set, set,
           flip.IsIdentity() ? std::vector<bool>{} : flip.mask, x0, options,
           true);
  const BitScalingVariant variant = config.variant;
  return r.Drive([&] {
    r.Start();
    const IntVector& c = r.c();
    Integer mu = Pow2(CeilLog2(set.objective().BitScalingC()));
    std::optional<IntVector> previous;
    // Whether the incumbent is known to be optimal for `previous`.
    bool certified = false;
    std::optional<Integer> ones_max;
    while (mu >= 1) {
      IntVector scaled(c.size());
      for (size_t j = 0; j < c.size(); ++j) scaled[j] = FloorDiv(c[j], mu);
      r.rec().BeginPhase(Rational(mu), scaled);
      if (IsZero(scaled)) {
        r.rec().Skip(Rational(mu), "zero objective");
        certified = true;
      } else if (certified && previous && PositiveMultiple(scaled, *previous)) {
        r.rec().Skip(Rational(mu), "multiple of the previous objective");
      } else {
        switch (variant) {
          case BitScalingVariant::kClassic:
            AugmentLoop(r, policy, scaled, false, false);
            certified = true;
            break;
          case BitScalingVariant::kIncomplete:
          case BitScalingVariant::kNoImprove: {
            const bool use_cut = variant == BitScalingVariant::kIncomplete;
            if (mu == 1) {
              AugmentLoop(r, policy, scaled, use_cut, false);
              certified = true;
              break;
            }
            OracleQuery query{scaled, r.x(), std::nullopt, std::nullopt};
            Rational delta = 1;
            if (use_cut) query.improving_cut = r.Cut(&delta);
            const OracleAnswer a = r.Ask(query, policy);
            if (a.has_point()) {
              r.MoveTo(a.x, false);
              certified = false;
            } else {
              certified = !use_cut;
            }
            break;
          }
          case BitScalingVariant::kComplete: {
            r.rec().CheckBudget();
            const OracleAnswer a = r.oracle().SolveExact(scaled);
            const bool improving = Dot(scaled, a.x) > Dot(scaled, r.x());
            OracleQuery query{scaled, std::nullopt, std::nullopt,
                              std::nullopt};
            r.rec().OracleCall(query, a, improving);
            if (improving) r.MoveTo(a.x, false);
            certified = true;
            break;
          }
        }
      }
      if (r.options().checked && certified) {
        if (!ones_max) ones_max = OnesMax(r.oracle());
        const Rational gap = Rational(r.OptimalValue() - r.value());
        const Rational bound = Rational(mu * *ones_max);
        r.rec().Guarantee("scaled-gap", gap <= bound, gap, bound);
        if (gap > bound) {
          Fail(ErrorCode::kVerificationFailed,
               "gap " + ToString(gap) + " exceeds " + ToString(bound) +
                   " after the phase with mu " + ToString(mu));
        }
      }
      previous = std::move(scaled);
      mu /= 2;
    }
  });
}

const char* MuInitName(MuInit init) {
  return init == MuInit::kTheory ? "THEORY" : "SOLUTION_POWER";
}

MuInit ParseMuInit(const std::string& name) {
  const std::string key = Lower(name);
  if (key == "theory") return MuInit::kTheory;
  if (key == "solution" || key == "solution_power") {
    return MuInit::kSolutionPower;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown mu initialization '" + name +
                                        "'");
}

Rational InitialMu(const GeoConfig& config, const FeasibleSet& set,
                   const IntVector& x0) {
  if (config.mu_init == MuInit::kTheory) {
    return Rational(2 * set.objective().GeometricC() *
                    (set.MaxUpper() - set.MinLower()));
  }
  const Integer value = Abs(set.objective().Value(x0));
  Integer power = 1;
  while (power <= value) power *= 2;
  const Integer cap = 100000000;
  return Rational(power < cap ? power : cap);
}

Trace GeometricScaling(const FeasibleSet& set, const IntVector& x0,
                       const OraclePolicy& policy, const GeoConfig& config,
                       const RunOptions& options) {
  ValidateStart(set, x0);
  if (config.mu_factor < 2) {
    Fail(ErrorCode::kInvalidArgument, "mu factor must be at least 2");
  }
  Runner r(set, set, {}, x0, options, true);
  const Integer rho_max = PotentialUpperBound(config.potential, set);
  return r.Drive([&] {
    r.Start();
    Rational mu = InitialMu(config, set, x0);
    r.rec().BeginPhase(mu);
    for (;;) {
      OracleQuery query{r.c(), r.x(), std::nullopt,
                        Penalty{mu, config.potential}};
      Rational delta = 1;
      if (!config.no_cutoff) query.improving_cut = r.Cut(&delta);
      OracleAnswer a = r.Ask(query, policy);
      if (a.has_point()) {
        r.MoveTo(a.x, true);
        continue;
      }
      if (mu * rho_max < 1) {
        if (query.improving_cut && delta > 1) {
          query.improving_cut.reset();
          a = r.Ask(query, policy);
          if (a.has_point()) {
            r.MoveTo(a.x, true);
            continue;
          }
        }
        return;
      }
      mu /= Rational(config.mu_factor);
      r.rec().BeginPhase(mu);
    }
  });
}

Trace MraExact(const FeasibleSet& set, const IntVector& x0,
               PotentialKind potential, const RunOptions& options) {
  ValidateStart(set, x0);
  Runner r(set, set, {}, x0, options, true);
  const size_t n = set.n();
  return r.Drive([&] {
    r.Start();
    r.rec().BeginPhase(std::nullopt);
    for (;;) {
      r.rec().CheckBudget();
      const OracleAnswer a = r.oracle().MaxRatioPoint(r.c(), r.x(), potential);
      const OracleQuery query{r.c(), r.x(), std::nullopt, std::nullopt};
      r.rec().OracleCall(
          DigestOf(std::string("max-ratio|") + PotentialName(potential) + "|" +
                   query.Digest()),
          a.Digest(), AnswerStatusName(a.status), a.has_point(), a.counters);
      if (!a.has_point()) return;
      std::optional<Rational> required;
      if (r.options().checked && potential == PotentialKind::kStandard) {
        required = Rational(r.OptimalValue() - r.value()) /
                   Rational(Integer(2 * static_cast<unsigned long>(n)));
      }
      const Integer before = r.value();
      r.MoveTo(a.x, true);
      if (required) {
        const Rational step = Rational(r.value() - before);
        r.rec().Guarantee("mra-step", step >= *required, step, *required);
      }
    }
  });
}

std::vector<int> SignVector(const IntVector& x, const IntVector& anchor) {
  std::vector<int> s(x.size());
  for (size_t j = 0; j < x.size(); ++j) s[j] = sgn(Integer(x[j] - anchor[j]));
  return s;
}

std::vector<Rational> Supergradient(const IntVector& c, const Rational& mu,
                                    const std::vector<int>& sign) {
  std::vector<Rational> h(c.size());
  for (size_t j = 0; j < c.size(); ++j) h[j] = Rational(c[j]) - mu * sign[j];
  return h;
}

Trace MraCuttingPlane(const FeasibleSet& set, const IntVector& x0,
                      const MraSearchConfig& config,
                      const RunOptions& options) {
  ValidateStart(set, x0);
  Runner r(set, set, {}, x0, options, false);
  Integer span = 0;
  for (size_t j = 0; j < set.n(); ++j) span += set.upper()[j] - set.lower()[j];
  const Rational lo0 = config.mu_lo.value_or(Rational(0));
  const Rational hi0 = config.mu_hi.value_or(Rational(
      2 * set.objective().GeometricC() * (set.MaxUpper() - set.MinLower())));
  const Rational tol = config.tolerance.value_or(
      span > 0 ? MakeRational(Integer(1), Integer(2 * span * span))
                : Rational(1));
  return r.Drive([&] {
    r.Start();
    for (;;) {
      const OracleQuery query{r.c(), r.x(), std::nullopt, std::nullopt};
      const OracleAnswer first = r.Ask(query, OraclePolicy::Optimal());
      if (!first.has_point()) return;

      struct Candidate {
        IntVector x;
        Integer gain;
        Rational ratio;
      };
      std::vector<Candidate> candidates;
      auto add_candidate = [&](const IntVector& y) {
        const IntVector z = Subtract(y, r.x());
        const Integer gain = Dot(r.c(), z);
        if (gain <= 0) return;
        candidates.push_back({y, gain, MakeRational(gain, L1Potential(z))});
      };
      add_candidate(first.x);

      auto best_ratio = [&] {
        Rational b = candidates.front().ratio;
        for (const Candidate& cand : candidates) b = std::max(b, cand.ratio);
        return b;
      };

      std::vector<std::vector<int>> pool{std::vector<int>(set.n(), 0)};
      Rational lo = lo0, hi = hi0;
      std::optional<Rational> probed;
      for (uint64_t step = 0; hi - lo >= tol && step < config.max_outer;
           ++step) {
        Rational mu = (lo + hi) / 2;
        if (config.probe_best_ratio) {
          const Rational b = best_ratio();
          if (b >= lo && b < hi && (!probed || b > *probed)) {
            mu = b;
            probed = b;
          }
        }
        r.rec().BeginPhase(mu);
        r.rec().CountPhase();
        Rational g;
        for (;;) {
          r.rec().CheckBudget();
          const MasterAnswer m = r.oracle().SolveMaster(r.c(), r.x(), mu, pool);
          const std::string qd =
              DigestOf("master|" + ToString(r.c()) + "|" + ToString(r.x()) +
                       "|" + ToString(mu) + "|" + std::to_string(pool.size()));
          const std::string ad =
              m.found ? DigestOf(ToString(m.x) + "|" + ToString(m.value))
                      : DigestOf("none");
          r.rec().OracleCall(qd, ad, m.found ? "POINT" : "INFEASIBLE", false,
                             m.counters);
          if (!m.found) {
            Fail(ErrorCode::kInternal,
                 "master problem lost the improving point");
          }
          add_candidate(m.x);
          const IntVector z = Subtract(m.x, r.x());
          g = Rational(Dot(r.c(), z)) - mu * Rational(L1Potential(z));
          if (m.value == g) break;
          std::vector<int> s = SignVector(m.x, r.x());
          if (std::find(pool.begin(), pool.end(), s) != pool.end()) {
            Fail(ErrorCode::kInternal, "cutting plane repeated a cut");
          }
          pool.push_back(std::move(s));
        }
        if (g > 0) {
          lo = mu;
        } else {
          hi = mu;
        }
        // Every candidate ratio is attained, so it bounds the maximum below.
        if (config.probe_best_ratio) lo = std::max(lo, std::min(hi, best_ratio()));
      }

      const Candidate* best = &candidates.front();
      for (const Candidate& cand : candidates) {
        if (cand.ratio > best->ratio ||
            (cand.ratio == best->ratio &&
             (cand.gain > best->gain ||
              (cand.gain == best->gain && cand.x < best->x)))) {
          best = &cand;
        }
      }
      r.rec().Converged(best->ratio, "anchor " + ToString(r.Reported(r.x())));
      r.MoveTo(IntVector(best->x), true);
    }
  });
}

std::string AlgorithmSpec::Label() const {
  switch (kind) {
    case AlgorithmKind::kAugment:
      return "augment";
    case AlgorithmKind::kBitScaling:
      return "bitscale-" + Lower(BitScalingVariantName(bit.variant));
    case AlgorithmKind::kGeometric: {
      std::string label = std::string("geom-") + PotentialName(geo.potential) +
                          "-" + ToString(geo.mu_factor);
      if (geo.mu_init == MuInit::kSolutionPower) label += "-solution";
      if (geo.no_cutoff) label += "-nocut";
      return label;
    }
    case AlgorithmKind::kMraExact:
      return std::string("mra-exact-") + PotentialName(mra_potential);
    case AlgorithmKind::kMraCuttingPlane:
      return "mra-cp";
  }
  return "?";
}

Trace RunAlgorithm(const AlgorithmSpec& spec, const FeasibleSet& set,
                   const IntVector& x0, const RunOptions& options) {
  switch (spec.kind) {
    case AlgorithmKind::kAugment:
      return Augment(set, x0, spec.policy, options);
    case AlgorithmKind::kBitScaling:
      return BitScaling(set, x0, spec.policy, spec.bit, options);
    case AlgorithmKind::kGeometric:
      return GeometricScaling(set, x0, spec.policy, spec.geo, options);
    case AlgorithmKind::kMraExact:
      return MraExact(set, x0, spec.mra_potential, options);
    case AlgorithmKind::kMraCuttingPlane:
      return MraCuttingPlane(set, x0, spec.mra, options);
  }
  Fail(ErrorCode::kInvalidArgument, "unknown algorithm");
}

std::vector<std::string> CheckTraceInvariants(const AlgorithmSpec& spec,
                                              const FeasibleSet& set,
                                              const Trace& trace) {
  std::vector<std::string> out;
  const TraceCounters& k = trace.counters;
  const Integer n = static_cast<unsigned long>(set.n());
  const bool scaling = spec.kind == AlgorithmKind::kBitScaling ||
                       spec.kind == AlgorithmKind::kGeometric;
  if (scaling && k.n_phases + k.n_improvements != k.n_subproblems) {
    out.push_back("phases + improvements = " +
                  std::to_string(k.n_phases + k.n_improvements) +
                  " but subproblems = " + std::to_string(k.n_subproblems));
  }

  const bool monotone = spec.kind == AlgorithmKind::kGeometric ||
                        spec.kind == AlgorithmKind::kMraExact ||
                        spec.kind == AlgorithmKind::kMraCuttingPlane;
  if (monotone) {
    const std::vector<Integer> values = trace.ValueSequence();
    for (size_t i = 1; i < values.size(); ++i) {
      if (values[i] <= values[i - 1]) {
        out.push_back("objective value did not increase at improvement " +
                      std::to_string(i));
      }
    }
    std::vector<IntVector> points = trace.PointSequence();
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
      out.push_back("a point was visited twice");
    }
  }

  auto check_total = [&](const Integer& bound, const std::string& what) {
    if (Integer(static_cast<unsigned long>(k.n_improvements)) > bound) {
      out.push_back(what + ": " + std::to_string(k.n_improvements) +
                    " improvements exceed " + ToString(bound));
    }
  };
  auto check_phases = [&](const Integer& bound, const std::string& what) {
    for (size_t i = 0; i < trace.phase_improvements.size(); ++i) {
      if (Integer(static_cast<unsigned long>(trace.phase_improvements[i])) >
          bound) {
        out.push_back(what + ": phase " + std::to_string(i) + " has " +
                      std::to_string(trace.phase_improvements[i]) +
                      " improvements, bound " + ToString(bound));
      }
    }
  };

  if (spec.kind == AlgorithmKind::kBitScaling &&
      (spec.bit.variant == BitScalingVariant::kClassic ||
       spec.bit.variant == BitScalingVariant::kComplete)) {
    const unsigned logc = CeilLog2(set.objective().BitScalingC());
    check_total(n * (1 + logc), "bit scaling total");
    check_phases(n, "bit scaling per phase");
  }

  const bool default_schedule = spec.kind == AlgorithmKind::kGeometric &&
                                spec.geo.mu_factor == 2 &&
                                spec.geo.mu_init == MuInit::kTheory;
  if (default_schedule && spec.geo.potential == PotentialKind::kL1 &&
      set.IsBinary()) {
    const Integer cgeo = set.objective().GeometricC();
    if (cgeo > 0) {
      check_total(8 * n * (CeilLog2(cgeo) + 1) + 2 * n, "geometric l1 total");
    }
    check_phases(2 * n, "geometric l1 per phase");
  }
  if (default_schedule && spec.geo.potential == PotentialKind::kStandard &&
      EqualityOrBox(set)) {
    const Integer range = set.objective().GeometricC() *
                          (set.MaxUpper() - set.MinLower());
    if (range > 0) {
      check_total(4 * n * (CeilLog2(range) + 1) + n,
                  "geometric standard total");
    }
    check_phases(4 * n, "geometric standard per phase");
  }

  for (const TraceEvent& e : trace.events) {
    if (e.kind != EventKind::kGuarantee || *e.holds) continue;
    if (e.note == "mra-step" && !EqualityOrBox(set)) continue;
    out.push_back("guarantee '" + e.note + "' failed: " + ToString(*e.lhs) +
                  " vs " + ToString(*e.rhs));
  }
  return out;
}

}  // namespace auglab
