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


#include "auglab/oracle.h"

#include <algorithm>
#include <cstdio>
#include <type_traits>
#include <utility>

#include "auglab/error.h"
#include "search_engine.h"

namespace auglab {

using internal::SearchEngine;
using internal::SearchProblem;
using internal::SearchResult;
using internal::SearchRow;
using internal::Selection;
using internal::SeparableForm;

using Fast = __int128;

std::string PolicyName(const OraclePolicy& policy) {
  switch (policy.kind) {
    case PolicyKind::kOptimal:
      return "OPTIMAL";
    case PolicyKind::kFirstImproving:
      return "FIRST_IMPROVING";
    case PolicyKind::kLeastImproving:
      return "LEAST_IMPROVING";
    case PolicyKind::kMaxRatio:
      return "MAX_RATIO";
  }
  return "?";
}

OraclePolicy ParsePolicy(const std::string& name, PotentialKind potential) {
  if (name == "OPTIMAL") return OraclePolicy::Optimal();
  if (name == "FIRST_IMPROVING") return OraclePolicy::FirstImproving();
  if (name == "LEAST_IMPROVING") return OraclePolicy::LeastImproving();
  if (name == "MAX_RATIO") return OraclePolicy::MaxRatio(potential);
  Fail(ErrorCode::kInvalidArgument, "unknown oracle policy '" + name + "'");
}

const char* AnswerStatusName(AnswerStatus status) {
  switch (status) {
    case AnswerStatus::kPoint:
      return "POINT";
    case AnswerStatus::kInfeasible:
      return "INFEASIBLE";
    case AnswerStatus::kOptimalCertified:
      return "OPTIMAL_CERTIFIED";
  }
  return "?";
}

OracleCounters& OracleCounters::operator+=(const OracleCounters& other) {
  nodes += other.nodes;
  points_scanned += other.points_scanned;
  pruned += other.pruned;
  return *this;
}

std::string DigestOf(const std::string& text) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string OracleQuery::Digest() const {
  std::string s = "q" + ToString(objective);
  if (anchor) s += "|a" + ToString(*anchor);
  if (improving_cut) {
    s += "|c" + ToString(improving_cut->objective) + ">=" +
         ToString(improving_cut->threshold);
  }
  if (penalty) {
    s += "|p" + ToString(penalty->mu) + ":" + PotentialName(penalty->potential);
  }
  return DigestOf(s);
}

std::string OracleAnswer::Digest() const {
  std::string s = AnswerStatusName(status);
  if (has_point()) s += ToString(x) + ":" + ToString(value);
  return DigestOf(s);
}

// Rows and points converted once per oracle.
struct Oracle::Cache {
  std::vector<SearchRow<Integer>> rows;
  std::vector<SearchRow<Fast>> fast_rows;
  std::vector<IntVector> points;
  std::vector<std::vector<Fast>> fast_points;
  // Rows and bounds fit the 128-bit search.
  bool fits = false;
};

namespace {

const Integer& FastLimit() {
  static const Integer limit = Pow2(60);
  return limit;
}

Fast ToFast(const Integer& v) { return static_cast<Fast>(v.get_si()); }

Integer FromFast(Fast v) { return MakeInteger(static_cast<int64_t>(v)); }

std::vector<Fast> ToFast(const IntVector& v) {
  std::vector<Fast> out;
  out.reserve(v.size());
  for (const Integer& e : v) out.push_back(ToFast(e));
  return out;
}

IntVector FromFast(const std::vector<Fast>& v) {
  IntVector out;
  out.reserve(v.size());
  for (Fast e : v) out.push_back(FromFast(e));
  return out;
}

SeparableForm<Fast> ToFast(const SeparableForm<Integer>& f) {
  return {ToFast(f.constant), ToFast(f.linear), ToFast(f.plus),
          ToFast(f.minus)};
}

// Bound on |F(x)| over the box.
Integer Magnitude(const SeparableForm<Integer>& f, const IntVector& lower,
                  const IntVector& upper, const IntVector& kink) {
  Integer total = Abs(f.constant);
  for (size_t j = 0; j < f.linear.size(); ++j) {
    const Integer width = std::max(Abs(lower[j]), Abs(upper[j]));
    total += Abs(f.linear[j]) * width;
    if (f.has_kinks()) {
      const Integer reach = width + Abs(kink[j]);
      total += (Abs(f.plus[j]) + Abs(f.minus[j])) * reach;
    }
  }
  return total;
}

SeparableForm<Integer> LinearForm(const IntVector& coeffs,
                                  const Integer& constant) {
  SeparableForm<Integer> f;
  f.linear = coeffs;
  f.constant = constant;
  return f;
}

// q (x - anchor) as a form.
SeparableForm<Integer> GainForm(const IntVector& q, const IntVector& anchor) {
  return LinearForm(q, -Dot(q, anchor));
}

struct PotentialWeights {
  // rho(anchor, z) * scale = sum_j plus_j z+_j + minus_j z-_j.
  IntVector plus;
  IntVector minus;
  Integer scale = 1;
};

PotentialWeights Weights(PotentialKind kind, const IntVector& lower,
                         const IntVector& upper, const IntVector& anchor) {
  const size_t n = anchor.size();
  PotentialWeights w;
  if (kind == PotentialKind::kL1) {
    w.plus.assign(n, Integer(1));
    w.minus.assign(n, Integer(1));
    return w;
  }
  for (size_t j = 0; j < n; ++j) {
    if (upper[j] > anchor[j]) w.scale = Lcm(w.scale, upper[j] - anchor[j]);
    if (anchor[j] > lower[j]) w.scale = Lcm(w.scale, anchor[j] - lower[j]);
  }
  // A tight bound cannot be left inside the box, so its weight never matters.
  w.plus.assign(n, Integer(0));
  w.minus.assign(n, Integer(0));
  for (size_t j = 0; j < n; ++j) {
    if (upper[j] > anchor[j]) w.plus[j] = w.scale / (upper[j] - anchor[j]);
    if (anchor[j] > lower[j]) w.minus[j] = w.scale / (anchor[j] - lower[j]);
  }
  return w;
}

// B L q (x - anchor) - A L rho(anchor, x - anchor) for mu = A / B.
SeparableForm<Integer> PenaltyForm(const IntVector& q, const IntVector& anchor,
                                   const Rational& mu,
                                   const PotentialWeights& w) {
  const Integer a = mu.get_num();
  const Integer bl = mu.get_den() * w.scale;
  SeparableForm<Integer> f;
  f.linear.reserve(q.size());
  for (const Integer& v : q) f.linear.push_back(bl * v);
  f.constant = -Dot(f.linear, anchor);
  for (size_t j = 0; j < q.size(); ++j) {
    f.plus.push_back(-a * w.plus[j]);
    f.minus.push_back(-a * w.minus[j]);
  }
  return f;
}

// Lifts a linear form to carry (zero) kink coefficients so all forms in a
// problem agree on the layout.
void AddZeroKinks(SeparableForm<Integer>& f) {
  if (!f.has_kinks()) {
    f.plus.assign(f.linear.size(), Integer(0));
    f.minus.assign(f.linear.size(), Integer(0));
  }
}

std::vector<bool> DescendingFor(const IntVector& q, bool reverse) {
  std::vector<bool> d(q.size());
  for (size_t j = 0; j < q.size(); ++j) d[j] = (q[j] >= 0) != reverse;
  return d;
}

void CheckDimension(const FeasibleSet& set, const IntVector& v,
                    const char* what) {
  if (v.size() != set.n()) {
    Fail(ErrorCode::kDimensionMismatch,
         std::string(what) + " has length " + std::to_string(v.size()) +
             ", expected " + std::to_string(set.n()));
  }
}

void CheckAnchor(const FeasibleSet& set, const IntVector& anchor) {
  CheckDimension(set, anchor, "anchor");
  if (!set.Contains(anchor)) {
    Fail(ErrorCode::kInvalidArgument,
         "anchor " + ToString(anchor) + " is not feasible");
  }
}

}  // namespace

Oracle::Oracle(FeasibleSet set, OracleOptions options)
    : set_(std::move(set)), options_(options) {
  auto cache = std::make_shared<Cache>();
  Integer bound_magnitude = 0;
  for (size_t j = 0; j < set_.n(); ++j) {
    bound_magnitude = std::max(
        {bound_magnitude, Abs(set_.lower()[j]), Abs(set_.upper()[j])});
  }
  Integer row_magnitude = 0;
  if (set_.is_point_set()) {
    cache->points = set_.point_set().points();
    for (const IntVector& p : cache->points) {
      cache->fast_points.push_back(ToFast(p));
    }
  } else {
    for (const Row& row : set_.instance().rows()) {
      SearchRow<Integer> r{row.coeffs, row.sense, row.rhs};
      Integer m = Abs(row.rhs);
      for (size_t j = 0; j < row.coeffs.size(); ++j) {
        m += Abs(row.coeffs[j]) * std::max(Abs(set_.lower()[j]),
                                           Abs(set_.upper()[j]));
      }
      row_magnitude = std::max(row_magnitude, m);
      cache->rows.push_back(std::move(r));
    }
  }
  cache->fits = row_magnitude < FastLimit() && bound_magnitude < FastLimit();
  if (cache->fits) {
    for (const SearchRow<Integer>& r : cache->rows) {
      cache->fast_rows.push_back({ToFast(r.coeffs), r.sense, ToFast(r.rhs)});
    }
  }
  cache_ = std::move(cache);
}

namespace {

struct Outcome {
  bool found = false;
  IntVector point;
  std::vector<Integer> objective_values;
  OracleCounters counters;
};

template <typename Int>
Outcome ToOutcome(const SearchResult<Int>& r) {
  Outcome o;
  o.found = r.found;
  o.counters.nodes = r.nodes;
  o.counters.points_scanned = r.leaves;
  o.counters.pruned = r.pruned;
  if (!r.found) return o;
  if constexpr (std::is_same_v<Int, Integer>) {
    o.point = r.point;
    o.objective_values = r.objective_values;
  } else {
    o.point = FromFast(r.point);
    for (Int v : r.objective_values) o.objective_values.push_back(FromFast(v));
  }
  return o;
}

// Runs a search described with exact integers, on 128-bit integers whenever
// every intermediate quantity provably fits.
Outcome RunProblem(const SearchProblem<Integer>& problem,
                   const std::vector<SearchRow<Fast>>& fast_rows,
                   const std::vector<std::vector<Fast>>& fast_points,
                   bool rows_fit) {
  bool fits = rows_fit;
  const IntVector empty;
  const IntVector& kink = problem.kink.empty() ? empty : problem.kink;
  if (fits) {
    for (const auto& [f, strict] : problem.constraints) {
      if (Magnitude(f, problem.lower, problem.upper, kink) >= FastLimit()) {
        fits = false;
        break;
      }
    }
  }
  if (fits) {
    for (const auto& f : problem.objectives) {
      if (Magnitude(f, problem.lower, problem.upper, kink) >= FastLimit()) {
        fits = false;
        break;
      }
    }
  }
  if (fits && !problem.kink.empty() &&
      MaxAbs(problem.kink) >= FastLimit()) {
    fits = false;
  }
  if (!fits) return ToOutcome(SearchEngine<Integer>(problem).Run());

  SearchProblem<Fast> fast;
  fast.n = problem.n;
  fast.lower = ToFast(problem.lower);
  fast.upper = ToFast(problem.upper);
  fast.kink = ToFast(problem.kink);
  fast.rows = fast_rows;
  fast.points = problem.points != nullptr ? &fast_points : nullptr;
  for (const auto& [f, strict] : problem.constraints) {
    fast.constraints.emplace_back(ToFast(f), strict);
  }
  fast.selection = problem.selection;
  for (const auto& f : problem.objectives) fast.objectives.push_back(ToFast(f));
  fast.descending = problem.descending;
  fast.node_limit = problem.node_limit;
  return ToOutcome(SearchEngine<Fast>(fast).Run());
}

// Skeleton problem: bounds, rows or points, node limit.
SearchProblem<Integer> BaseProblem(const FeasibleSet& set,
                                   const std::vector<SearchRow<Integer>>& rows,
                                   const std::vector<IntVector>& points,
                                   uint64_t node_limit) {
  SearchProblem<Integer> p;
  p.n = set.n();
  p.lower = set.lower();
  p.upper = set.upper();
  p.rows = rows;
  if (set.is_point_set()) p.points = &points;
  p.node_limit = node_limit;
  return p;
}

std::pair<SeparableForm<Integer>, bool> CutConstraint(const ImprovingCut& cut) {
  // Integral left-hand side: objective x >= ceil(threshold).
  return {LinearForm(cut.objective, -Ceil(cut.threshold)), false};
}

}  // namespace

OracleAnswer Oracle::SolveExact(const IntVector& objective,
                                const std::optional<ImprovingCut>& cut) const {
  CheckDimension(set_, objective, "objective");
  SearchProblem<Integer> p =
      BaseProblem(set_, cache_->rows, cache_->points, options_.node_limit);
  if (cut) {
    CheckDimension(set_, cut->objective, "cut objective");
    p.constraints.push_back(CutConstraint(*cut));
  }
  p.selection = Selection::kMaximizeMin;
  p.objectives.push_back(LinearForm(objective, Integer(0)));
  p.descending = DescendingFor(objective, false);
  Outcome o = RunProblem(p, cache_->fast_rows, cache_->fast_points, cache_->fits);
  OracleAnswer answer;
  answer.counters = o.counters;
  if (!o.found) return answer;
  answer.status = AnswerStatus::kOptimalCertified;
  answer.x = std::move(o.point);
  answer.value = Dot(objective, answer.x);
  answer.improvement = 0;
  return answer;
}

OracleAnswer Oracle::Answer(const OracleQuery& query,
                            const OraclePolicy& policy) const {
  CheckDimension(set_, query.objective, "objective");
  if (!query.anchor && (policy.kind == PolicyKind::kMaxRatio || query.penalty)) {
    Fail(ErrorCode::kInvalidArgument,
         "ratio and penalty queries require an anchor");
  }
  SearchProblem<Integer> p =
      BaseProblem(set_, cache_->rows, cache_->points, options_.node_limit);
  const IntVector& q = query.objective;
  IntVector anchor;
  if (query.anchor) {
    CheckAnchor(set_, *query.anchor);
    anchor = *query.anchor;
    p.kink = anchor;
    SeparableForm<Integer> gain = GainForm(q, anchor);
    AddZeroKinks(gain);
    p.constraints.emplace_back(std::move(gain), true);
  }
  if (query.improving_cut) {
    CheckDimension(set_, query.improving_cut->objective, "cut objective");
    auto c = CutConstraint(*query.improving_cut);
    if (query.anchor) AddZeroKinks(c.first);
    p.constraints.push_back(std::move(c));
  }
  if (query.penalty) {
    if (query.penalty->mu < 0) {
      Fail(ErrorCode::kInvalidArgument, "penalty weight must be nonnegative");
    }
    PotentialWeights w =
        Weights(query.penalty->potential, set_.lower(), set_.upper(), anchor);
    p.constraints.emplace_back(PenaltyForm(q, anchor, query.penalty->mu, w),
                               true);
  }

  std::optional<PotentialWeights> ratio_weights;
  switch (policy.kind) {
    case PolicyKind::kOptimal:
      p.selection = Selection::kMaximizeMin;
      p.objectives.push_back(LinearForm(q, Integer(0)));
      p.descending = DescendingFor(q, false);
      break;
    case PolicyKind::kLeastImproving:
      p.selection = Selection::kMinimize;
      p.objectives.push_back(LinearForm(q, Integer(0)));
      p.descending = DescendingFor(q, true);
      break;
    case PolicyKind::kFirstImproving:
      p.selection = Selection::kFirst;
      p.descending = DescendingFor(q, false);
      break;
    case PolicyKind::kMaxRatio: {
      ratio_weights =
          Weights(policy.potential, set_.lower(), set_.upper(), anchor);
      p.selection = Selection::kMaximizeRatio;
      SeparableForm<Integer> num = GainForm(q, anchor);
      AddZeroKinks(num);
      SeparableForm<Integer> den;
      den.linear.assign(q.size(), Integer(0));
      den.plus = ratio_weights->plus;
      den.minus = ratio_weights->minus;
      p.objectives.push_back(std::move(num));
      p.objectives.push_back(std::move(den));
      p.descending = DescendingFor(q, false);
      break;
    }
  }
  if (!p.kink.empty()) {
    for (auto& [f, strict] : p.constraints) AddZeroKinks(f);
    for (auto& f : p.objectives) AddZeroKinks(f);
  }

  Outcome o = RunProblem(p, cache_->fast_rows, cache_->fast_points, cache_->fits);
  OracleAnswer answer;
  answer.counters = o.counters;
  if (!o.found) return answer;
  answer.status = AnswerStatus::kPoint;
  answer.x = std::move(o.point);
  answer.value = Dot(q, answer.x);
  answer.improvement = query.anchor ? answer.value - Dot(q, anchor) : Integer(0);
  if (ratio_weights) {
    // objective_values = {gain, scale * rho}.
    answer.ratio = MakeRational(o.objective_values[0] * ratio_weights->scale,
                                o.objective_values[1]);
  }
  return answer;
}

OracleAnswer Oracle::MaxRatioPoint(const IntVector& c, const IntVector& anchor,
                                   PotentialKind potential) const {
  OracleQuery query;
  query.objective = c;
  query.anchor = anchor;
  return Answer(query, OraclePolicy::MaxRatio(potential));
}

MasterAnswer Oracle::SolveMaster(
    const IntVector& c, const IntVector& anchor, const Rational& mu,
    const std::vector<std::vector<int>>& sign_cuts) const {
  CheckDimension(set_, c, "objective");
  CheckAnchor(set_, anchor);
  if (mu < 0) Fail(ErrorCode::kInvalidArgument, "mu must be nonnegative");
  SearchProblem<Integer> p =
      BaseProblem(set_, cache_->rows, cache_->points, options_.node_limit);
  p.constraints.emplace_back(GainForm(c, anchor), true);
  p.selection = Selection::kMaximizeMin;
  const Integer a = mu.get_num();
  const Integer b = mu.get_den();
  std::vector<std::vector<int>> cuts = sign_cuts;
  if (cuts.empty()) cuts.emplace_back(c.size(), 0);
  for (const std::vector<int>& s : cuts) {
    if (s.size() != c.size()) {
      Fail(ErrorCode::kDimensionMismatch, "sign cut has the wrong length");
    }
    IntVector coeffs(c.size());
    for (size_t j = 0; j < c.size(); ++j) coeffs[j] = b * c[j] - a * s[j];
    p.objectives.push_back(GainForm(coeffs, anchor));
  }
  p.descending = DescendingFor(c, false);
  Outcome o = RunProblem(p, cache_->fast_rows, cache_->fast_points, cache_->fits);
  MasterAnswer answer;
  answer.counters = o.counters;
  if (!o.found) return answer;
  answer.found = true;
  answer.x = std::move(o.point);
  Integer low = o.objective_values[0];
  for (const Integer& v : o.objective_values) low = std::min(low, v);
  answer.value = MakeRational(low, b);
  return answer;
}

}  // namespace auglab
