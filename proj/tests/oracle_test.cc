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


#include <optional>
#include <random>

#include <gtest/gtest.h>

#include "auglab/error.h"
#include "auglab/oracle.h"
#include "auglab/potential.h"
#include "test_support.h"

namespace auglab {
namespace {

using testing::I;
using testing::RefDot;
using testing::RefPoints;
using testing::RefSub;
using testing::V;

FeasibleSet Cube(size_t n, const IntVector& c) {
  return FeasibleSet(Instance(n, {}, IntVector(n, Integer(0)),
                              IntVector(n, Integer(1)), ObjectiveVector(c)));
}

// Reference query predicate written from its definition.
bool RefSatisfies(const FeasibleSet& set, const OracleQuery& q,
                  const IntVector& x) {
  if (!set.Contains(x)) return false;
  const IntVector& a = *q.anchor;
  IntVector z = RefSub(x, a);
  Integer gain = RefDot(q.objective, z);
  if (gain <= 0) return false;
  if (q.improving_cut &&
      Rational(RefDot(q.improving_cut->objective, x)) <
          q.improving_cut->threshold) {
    return false;
  }
  if (q.penalty) {
    Rational rho;
    if (q.penalty->potential == PotentialKind::kL1) {
      rho = Rational(testing::RefL1(z));
    } else {
      auto r = testing::RefStandardRho(set.lower(), set.upper(), a, z);
      if (!r) return false;
      rho = *r;
    }
    if (Rational(gain) - q.penalty->mu * rho <= 0) return false;
  }
  return true;
}

std::vector<IntVector> RefCandidates(const FeasibleSet& set,
                                     const OracleQuery& q) {
  std::vector<IntVector> out;
  for (const IntVector& x : RefPoints(set)) {
    if (RefSatisfies(set, q, x)) out.push_back(x);
  }
  return out;
}

TEST(SolveExactTest, Knapsack) {
  FeasibleSet set(Instance(2, {Row{V({1, 1}), Sense::kLessEqual, I(1)}},
                           V({0, 0}), V({1, 1}), ObjectiveVector(V({5, 3}))));
  Oracle oracle(set);
  OracleAnswer a = oracle.SolveExact(V({5, 3}));
  EXPECT_EQ(a.status, AnswerStatus::kOptimalCertified);
  EXPECT_EQ(a.x, V({1, 0}));
  EXPECT_EQ(a.value, 5);
}

TEST(SolveExactTest, CutAboveOptimumIsInfeasible) {
  Oracle oracle(Cube(3, V({1, 2, 3})));
  EXPECT_EQ(oracle.SolveExact(V({1, 2, 3}), ImprovingCut{V({1, 2, 3}), 7})
                .status,
            AnswerStatus::kInfeasible);
  EXPECT_EQ(oracle.SolveExact(V({1, 2, 3}), ImprovingCut{V({1, 2, 3}), 6})
                .status,
            AnswerStatus::kOptimalCertified);
  // A fractional threshold rounds up on integral left-hand sides.
  EXPECT_EQ(oracle
                .SolveExact(V({1, 2, 3}),
                            ImprovingCut{V({1, 2, 3}), MakeRational(11, 2)})
                .value,
            6);
}

TEST(SolveExactTest, TiesGoToTheLexicographicallySmallestPoint) {
  Oracle oracle(Cube(3, V({1, 1, 0})));
  // Maximizers of x1 + x2 are (1,1,0) and (1,1,1).
  EXPECT_EQ(oracle.SolveExact(V({1, 1, 0})).x, V({1, 1, 0}));
  Oracle points(FeasibleSet(PointSetInstance(
      2, {V({1, 0}), V({0, 1}), V({0, 0})}, ObjectiveVector(V({1, 1})))));
  EXPECT_EQ(points.SolveExact(V({1, 1})).x, V({0, 1}));
}

TEST(SolveExactTest, NodeLimitRaisesResourceError) {
  OracleOptions options;
  options.node_limit = 10;
  Oracle oracle(Cube(12, IntVector(12, Integer(1))), options);
  try {
    // The cut forces the search past the first dive.
    oracle.SolveExact(IntVector(12, Integer(-1)));
    FAIL() << "expected a resource error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceLimit);
  }
}

TEST(AnswerTest, PenaltyTooLargeIsInfeasible) {
  Oracle oracle(Cube(3, V({4, 1, 2})));
  OracleQuery q{V({4, 1, 2}), V({0, 0, 0}), std::nullopt,
                Penalty{Rational(4), PotentialKind::kL1}};
  EXPECT_EQ(oracle.Answer(q, OraclePolicy::Optimal()).status,
            AnswerStatus::kInfeasible);
  q.penalty->mu = MakeRational(39, 10);
  OracleAnswer a = oracle.Answer(q, OraclePolicy::Optimal());
  EXPECT_EQ(a.status, AnswerStatus::kPoint);
  EXPECT_EQ(a.x, V({1, 0, 0}));
}

TEST(AnswerTest, PoliciesOnAChain) {
  // Values 0, 1, 2, 3 along a chain of 0/1 points.
  FeasibleSet set(PointSetInstance(
      3, {V({0, 0, 0}), V({1, 0, 0}), V({1, 1, 0}), V({1, 1, 1})},
      ObjectiveVector(V({1, 1, 1}))));
  Oracle oracle(set);
  OracleQuery q{V({1, 1, 1}), V({0, 0, 0})};
  EXPECT_EQ(oracle.Answer(q, OraclePolicy::LeastImproving()).x, V({1, 0, 0}));
  EXPECT_EQ(oracle.Answer(q, OraclePolicy::Optimal()).x, V({1, 1, 1}));
  EXPECT_EQ(oracle.Answer(q, OraclePolicy::FirstImproving()).x, V({1, 0, 0}));
  EXPECT_EQ(oracle.Answer(q, OraclePolicy::Optimal()).improvement, 3);
}

TEST(AnswerTest, MaxRatioRequiresAnAnchor) {
  Oracle oracle(Cube(2, V({1, 1})));
  OracleQuery q{V({1, 1})};
  try {
    oracle.Answer(q, OraclePolicy::MaxRatio(PotentialKind::kL1));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(AnswerTest, InfeasibleAnchorIsRejected) {
  Oracle oracle(Cube(2, V({1, 1})));
  EXPECT_THROW(oracle.Answer({V({1, 1}), V({0, 2})}, OraclePolicy::Optimal()),
               Error);
  EXPECT_THROW(oracle.Answer({V({1, 1, 1}), V({0, 0})}, OraclePolicy::Optimal()),
               Error);
}

TEST(MaxRatioTest, CubeExample) {
  Oracle oracle(Cube(2, V({3, 1})));
  OracleAnswer a = oracle.MaxRatioPoint(V({3, 1}), V({0, 0}), PotentialKind::kL1);
  EXPECT_EQ(a.x, V({1, 0}));
  ASSERT_TRUE(a.ratio.has_value());
  EXPECT_EQ(*a.ratio, 3);
}

TEST(MaxRatioTest, NoImprovingPoint) {
  Oracle single(FeasibleSet(
      PointSetInstance(2, {V({1, 0})}, ObjectiveVector(V({1, 1})))));
  EXPECT_EQ(single.MaxRatioPoint(V({1, 1}), V({1, 0}), PotentialKind::kL1)
                .status,
            AnswerStatus::kInfeasible);
  Oracle cube(Cube(2, V({0, 0})));
  EXPECT_EQ(cube.MaxRatioPoint(V({0, 0}), V({0, 0}), PotentialKind::kStandard)
                .status,
            AnswerStatus::kInfeasible);
}

TEST(MaxRatioTest, TiesPreferTheLargerGain) {
  // (1,1,0) and (1,0,0) both have l1 ratio 2; the larger gain wins.
  Oracle oracle(Cube(3, V({2, 2, -5})));
  OracleAnswer a =
      oracle.MaxRatioPoint(V({2, 2, -5}), V({0, 0, 0}), PotentialKind::kL1);
  EXPECT_EQ(a.x, V({1, 1, 0}));
  EXPECT_EQ(*a.ratio, 2);
}

TEST(MaxRatioTest, StandardPotentialUsesBoundSlacks) {
  FeasibleSet set(Instance(2, {}, V({0, 0}), V({4, 1}),
                           ObjectiveVector(V({1, 1}))));
  Oracle oracle(set);
  // From (0,0): moving x1 by t has ratio t / (t/4) = 4; x2 has ratio 1.
  OracleAnswer a =
      oracle.MaxRatioPoint(V({1, 1}), V({0, 0}), PotentialKind::kStandard);
  EXPECT_EQ(*a.ratio, 4);
  EXPECT_EQ(a.x, V({4, 0}));
}

TEST(MasterTest, InitialCutIsTheObjective) {
  Oracle oracle(Cube(2, V({3, 1})));
  MasterAnswer m = oracle.SolveMaster(V({3, 1}), V({0, 0}), Rational(2), {});
  ASSERT_TRUE(m.found);
  EXPECT_EQ(m.x, V({1, 1}));
  EXPECT_EQ(m.value, 4);
  // With the cut of s = (1,0): min{4, (1,1).(1,1)} = 2 at (1,1), while
  // (1,0) gives min{3, 1} = 1.
  MasterAnswer m2 =
      oracle.SolveMaster(V({3, 1}), V({0, 0}), Rational(2), {{0, 0}, {1, 0}});
  EXPECT_EQ(m2.x, V({1, 1}));
  EXPECT_EQ(m2.value, 2);
}

struct RandomCase {
  FeasibleSet set;
  IntVector anchor;
};

RandomCase MakeCase(std::mt19937_64& rng, bool binary, bool huge) {
  std::uniform_int_distribution<int> size(2, binary ? 6 : 4);
  Instance inst = testing::RandomInstance(rng, size(rng), 3, 2, 6, binary);
  if (huge) {
    // Scale everything so the search cannot use 128-bit integers.
    Integer big("1000000000000000000000");
    std::vector<Row> rows = inst.rows();
    for (Row& r : rows) {
      for (Integer& v : r.coeffs) v *= big;
      r.rhs *= big;
    }
    IntVector c = inst.objective().c();
    for (Integer& v : c) v *= big;
    inst = Instance(inst.n(), rows, inst.lower(), inst.upper(),
                    ObjectiveVector(c));
  }
  FeasibleSet set(inst);
  std::vector<IntVector> pts = RefPoints(set);
  std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
  return {set, pts[pick(rng)]};
}

OracleQuery RandomQuery(std::mt19937_64& rng, const RandomCase& rc) {
  OracleQuery q;
  q.objective = rc.set.objective().c();
  q.anchor = rc.anchor;
  std::uniform_int_distribution<int> coin(0, 3);
  if (coin(rng) == 0) {
    Integer v = RefDot(q.objective, rc.anchor);
    q.improving_cut = ImprovingCut{q.objective, Rational(v + coin(rng) + 1)};
  }
  int pen = coin(rng);
  if (pen == 1 || pen == 2) {
    std::uniform_int_distribution<int> num(0, 12), den(1, 4);
    q.penalty = Penalty{MakeRational(num(rng), den(rng)),
                        pen == 1 ? PotentialKind::kL1
                                 : PotentialKind::kStandard};
    if (MaxAbs(q.objective) > 1000) q.penalty->mu *= MaxAbs(q.objective);
  }
  return q;
}

class OraclePropertyTest : public ::testing::TestWithParam<int> {};

// Soundness, completeness against full enumeration, policy ordering and
// determinism on random H-representations; parameter 0 uses 0/1 boxes, 1
// general boxes, 2 coefficients too large for 128-bit arithmetic.
TEST_P(OraclePropertyTest, AgreesWithEnumeration) {
  const int mode = GetParam();
  std::mt19937_64 rng(100 + mode);
  for (int trial = 0; trial < 150; ++trial) {
    RandomCase rc = MakeCase(rng, mode == 0, mode == 2);
    Oracle oracle(rc.set);
    const IntVector& c = rc.set.objective().c();

    OracleAnswer best = oracle.SolveExact(c);
    ASSERT_EQ(best.status, AnswerStatus::kOptimalCertified);
    EXPECT_EQ(best.value, testing::RefMax(rc.set, c));
    EXPECT_TRUE(rc.set.Contains(best.x));

    OracleQuery q = RandomQuery(rng, rc);
    std::vector<IntVector> cands = RefCandidates(rc.set, q);
    OracleAnswer opt = oracle.Answer(q, OraclePolicy::Optimal());
    OracleAnswer first = oracle.Answer(q, OraclePolicy::FirstImproving());
    OracleAnswer least = oracle.Answer(q, OraclePolicy::LeastImproving());
    if (cands.empty()) {
      EXPECT_EQ(opt.status, AnswerStatus::kInfeasible);
      EXPECT_EQ(first.status, AnswerStatus::kInfeasible);
      EXPECT_EQ(least.status, AnswerStatus::kInfeasible);
      continue;
    }
    ASSERT_EQ(opt.status, AnswerStatus::kPoint);
    for (const OracleAnswer* a : {&opt, &first, &least}) {
      EXPECT_TRUE(RefSatisfies(rc.set, q, a->x)) << ToString(a->x);
      EXPECT_EQ(a->improvement, RefDot(c, RefSub(a->x, rc.anchor)));
    }
    Integer hi = RefDot(c, cands[0]), lo = hi;
    IntVector hi_x = cands[0], lo_x = cands[0];
    for (const IntVector& x : cands) {
      Integer v = RefDot(c, x);
      if (v > hi || (v == hi && x < hi_x)) hi = v, hi_x = x;
      if (v < lo || (v == lo && x < lo_x)) lo = v, lo_x = x;
    }
    EXPECT_EQ(opt.x, hi_x);
    EXPECT_EQ(least.x, lo_x);
    EXPECT_LE(least.improvement, first.improvement);
    EXPECT_LE(first.improvement, opt.improvement);
    EXPECT_EQ(oracle.Answer(q, OraclePolicy::FirstImproving()).x, first.x);
    EXPECT_EQ(oracle.Answer(q, OraclePolicy::Optimal()).Digest(), opt.Digest());
  }
}

// The ratio maximizer matches a direct evaluation of every candidate ratio,
// including the tie-breaking rule.
TEST_P(OraclePropertyTest, MaxRatioAgreesWithEnumeration) {
  const int mode = GetParam();
  std::mt19937_64 rng(200 + mode);
  for (int trial = 0; trial < 100; ++trial) {
    RandomCase rc = MakeCase(rng, mode == 0, mode == 2);
    Oracle oracle(rc.set);
    const IntVector& c = rc.set.objective().c();
    for (PotentialKind kind : {PotentialKind::kL1, PotentialKind::kStandard}) {
      std::optional<Rational> best;
      Integer best_gain;
      IntVector best_x;
      for (const IntVector& x : RefPoints(rc.set)) {
        IntVector z = RefSub(x, rc.anchor);
        Integer gain = RefDot(c, z);
        if (gain <= 0) continue;
        Rational rho = kind == PotentialKind::kL1
                           ? Rational(testing::RefL1(z))
                           : *testing::RefStandardRho(rc.set.lower(),
                                                      rc.set.upper(),
                                                      rc.anchor, z);
        Rational r = Rational(gain) / rho;
        if (!best || r > *best || (r == *best && gain > best_gain) ||
            (r == *best && gain == best_gain && x < best_x)) {
          best = r, best_gain = gain, best_x = x;
        }
      }
      OracleAnswer a = oracle.MaxRatioPoint(c, rc.anchor, kind);
      if (!best) {
        EXPECT_EQ(a.status, AnswerStatus::kInfeasible);
        continue;
      }
      ASSERT_EQ(a.status, AnswerStatus::kPoint);
      EXPECT_EQ(*a.ratio, *best);
      EXPECT_EQ(a.x, best_x);
    }
  }
}

// The master problem value is max over improving x of min over cuts.
TEST_P(OraclePropertyTest, MasterAgreesWithEnumeration) {
  const int mode = GetParam();
  std::mt19937_64 rng(300 + mode);
  std::uniform_int_distribution<int> sign(-1, 1), num(0, 9), den(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    RandomCase rc = MakeCase(rng, mode == 0, mode == 2);
    Oracle oracle(rc.set);
    const IntVector& c = rc.set.objective().c();
    Rational mu = MakeRational(num(rng), den(rng));
    if (mode == 2) mu *= MaxAbs(c);
    std::vector<std::vector<int>> cuts(3, std::vector<int>(c.size()));
    for (auto& s : cuts) {
      for (int& v : s) v = sign(rng);
    }
    std::optional<Rational> best;
    IntVector best_x;
    for (const IntVector& x : RefPoints(rc.set)) {
      IntVector z = RefSub(x, rc.anchor);
      if (RefDot(c, z) <= 0) continue;
      std::optional<Rational> low;
      for (const auto& s : cuts) {
        Rational v = Rational(RefDot(c, z));
        for (size_t j = 0; j < z.size(); ++j) v -= mu * s[j] * Rational(z[j]);
        if (!low || v < *low) low = v;
      }
      if (!best || *low > *best || (*low == *best && x < best_x)) {
        best = low, best_x = x;
      }
    }
    MasterAnswer m = oracle.SolveMaster(c, rc.anchor, mu, cuts);
    ASSERT_EQ(m.found, best.has_value());
    if (!best) continue;
    EXPECT_EQ(m.value, *best);
    EXPECT_EQ(m.x, best_x);
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, OraclePropertyTest, ::testing::Values(0, 1, 2));

TEST(PointSetOracleTest, AgreesWithEnumeration) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> bit(0, 1), coef(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<IntVector> seen;
    std::vector<IntVector> pts;
    for (int i = 0; i < 8; ++i) {
      IntVector p = V({bit(rng), bit(rng), bit(rng), bit(rng)});
      if (seen.insert(p).second) pts.push_back(p);
    }
    IntVector c = V({coef(rng), coef(rng), coef(rng), coef(rng)});
    FeasibleSet set(PointSetInstance(4, pts, ObjectiveVector(c)));
    Oracle oracle(set);
    EXPECT_EQ(oracle.SolveExact(c).value, testing::RefMax(set, c));
    OracleQuery q{c, pts.back()};
    std::vector<IntVector> cands = RefCandidates(set, q);
    OracleAnswer first = oracle.Answer(q, OraclePolicy::FirstImproving());
    if (cands.empty()) {
      EXPECT_EQ(first.status, AnswerStatus::kInfeasible);
    } else {
      // List order is the enumeration order of point sets.
      EXPECT_EQ(first.x, cands.front());
    }
  }
}

TEST(DigestTest, StableAndSensitive) {
  OracleQuery a{V({1, 2}), V({0, 0})};
  OracleQuery b{V({1, 2}), V({0, 1})};
  EXPECT_EQ(a.Digest(), OracleQuery(a).Digest());
  EXPECT_NE(a.Digest(), b.Digest());
  EXPECT_EQ(a.Digest().size(), 16u);
}

TEST(PolicyTest, Names) {
  for (const char* name :
       {"OPTIMAL", "FIRST_IMPROVING", "LEAST_IMPROVING", "MAX_RATIO"}) {
    EXPECT_EQ(PolicyName(ParsePolicy(name)), name);
  }
  EXPECT_THROW(ParsePolicy("BEST"), Error);
}

}  // namespace
}  // namespace auglab
