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


#include <random>

#include <gtest/gtest.h>

#include "auglab/error.h"
#include "auglab/geometry.h"
#include "auglab/instance.h"
#include "auglab/instance_json.h"
#include "auglab/potential.h"
#include "test_support.h"

namespace auglab {
namespace {

using testing::I;
using testing::V;

Instance Box(const IntVector& lower, const IntVector& upper,
             std::vector<Row> rows = {}) {
  IntVector c(lower.size(), Integer(1));
  return Instance(lower.size(), std::move(rows), lower, upper,
                  ObjectiveVector(c));
}

Instance Simplex() {
  return Box(V({0, 0}), V({1, 1}), {Row{V({1, 1}), Sense::kLessEqual, I(1)}});
}

TEST(CheckFeasibleTest, SimplexBox) {
  Instance inst = Simplex();
  EXPECT_TRUE(CheckFeasible(inst, V({0, 0})));
  EXPECT_FALSE(CheckFeasible(inst, V({1, 1})));
  EXPECT_FALSE(CheckFeasible(inst, V({0, 2})));
}

TEST(CheckFeasibleTest, DimensionMismatchIsAnError) {
  Instance inst = Simplex();
  try {
    CheckFeasible(inst, V({0, 0, 0}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(InstanceTest, RejectsBadData) {
  EXPECT_THROW(Box(V({1}), V({0})), Error);
  EXPECT_THROW(Instance(2, {Row{V({1}), Sense::kLessEqual, I(0)}}, V({0, 0}),
                        V({1, 1}), ObjectiveVector(V({1, 1}))),
               Error);
  EXPECT_THROW(Instance(0, {}, {}, {}, ObjectiveVector()), Error);
}

TEST(InstanceTest, DerivedBounds) {
  Instance inst = Box(V({-2, 0, 1}), V({3, 7, 4}));
  EXPECT_EQ(inst.MaxUpper(), 7);
  EXPECT_EQ(inst.MinLower(), -2);
  EXPECT_FALSE(inst.IsBinary());
  EXPECT_TRUE(Simplex().IsBinary());
}

TEST(ObjectiveVectorTest, ScalingConstants) {
  ObjectiveVector c(V({5, -3, 0}));
  EXPECT_EQ(c.BitScalingC(), 6);
  EXPECT_EQ(c.GeometricC(), 5);
  EXPECT_EQ(ObjectiveVector(V({0, 0})).BitScalingC(), 1);
}

TEST(ObjectiveVectorTest, RationalInputIsCleared) {
  std::vector<Rational> c = {MakeRational(1, 2), MakeRational(2, 3),
                             Rational(-1)};
  ObjectiveVector o = ObjectiveVector::FromRational(c, false);
  EXPECT_EQ(o.c(), V({3, 4, -6}));
  EXPECT_EQ(o.scale(), 6);
  EXPECT_FALSE(o.integral_objective());
  ObjectiveVector m = ObjectiveVector::FromRational(c, true);
  EXPECT_EQ(m.c(), V({-3, -4, 6}));
  EXPECT_TRUE(m.negated());
}

// The original rational objective equals internal value / scale on every
// point, for both senses.
TEST(ObjectiveVectorTest, ProvenanceProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 8), coord(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> c;
    for (int j = 0; j < 4; ++j) c.push_back(MakeRational(num(rng), den(rng)));
    for (bool minimize : {false, true}) {
      ObjectiveVector o = ObjectiveVector::FromRational(c, minimize);
      IntVector x;
      for (int j = 0; j < 4; ++j) x.push_back(I(coord(rng)));
      Rational direct = 0;
      for (int j = 0; j < 4; ++j) direct += c[j] * Rational(x[j]);
      EXPECT_EQ(o.OriginalValue(x), direct);
      Rational internal = Rational(o.Value(x)) / o.scale();
      EXPECT_EQ(minimize ? Rational(-internal) : internal, direct);
    }
  }
}

TEST(StandardPotentialTest, Examples) {
  EXPECT_EQ(StandardPotential(V({0, 0}), V({1, 1}), V({0, 0}), V({1, 1})),
            ExtendedValue(Rational(2)));
  EXPECT_EQ(StandardPotential(V({0, 0}), V({2, 1}), V({0, 0}), V({1, 0})),
            ExtendedValue(MakeRational(1, 2)));
  EXPECT_TRUE(StandardPotential(V({0, 0}), V({1, 1}), V({0, 0}), V({-1, 0}))
                  .IsInfinite());
}

TEST(StandardPotentialTest, ZeroTimesInfinityIsZero) {
  // x sits on its lower bound in coordinate 0 but z does not move it.
  EXPECT_EQ(StandardPotential(V({0, 0}), V({1, 4}), V({0, 1}), V({0, -1})),
            ExtendedValue(Rational(1)));
}

TEST(L1PotentialTest, Examples) {
  EXPECT_EQ(L1Potential(V({0, 0, 0})), 0);
  EXPECT_EQ(L1Potential(V({1, -1, 2})), 4);
}

TEST(PotentialTest, ParseAndName) {
  EXPECT_EQ(ParsePotential("standard"), PotentialKind::kStandard);
  EXPECT_EQ(ParsePotential("l1"), PotentialKind::kL1);
  EXPECT_STREQ(PotentialName(PotentialKind::kL1), "l1");
  EXPECT_THROW(ParsePotential("l2"), Error);
}

// Random equality-form instance {a x = a x0, l <= x <= u}, where the only way
// to leave the set along a feasible direction is through a bound.
Instance RandomEqualityInstance(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), lo(-2, 0), width(1, 4);
  IntVector lower, upper, a, x0;
  for (int j = 0; j < 4; ++j) {
    lower.push_back(I(lo(rng)));
    upper.push_back(lower.back() + width(rng));
    a.push_back(I(coef(rng)));
    x0.push_back(lower.back() + (upper.back() - lower.back()) / 2);
  }
  Row row{a, Sense::kEqual, testing::RefDot(a, x0)};
  return Instance(4, {row}, lower, upper, ObjectiveVector(a));
}

// Homogeneity, the n upper bound on feasible directions and the 1/2 lower
// bound on exhaustive ones, checked against the definition on random
// equality-form instances.
TEST(StandardPotentialTest, BoundsAndHomogeneity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = RandomEqualityInstance(rng);
    FeasibleSet set(inst);
    std::vector<IntVector> pts = testing::RefPoints(set);
    for (const IntVector& x : pts) {
      for (const IntVector& y : pts) {
        IntVector z = testing::RefSub(y, x);
        ExtendedValue rho = StandardPotential(set, x, z);
        auto ref = testing::RefStandardRho(inst.lower(), inst.upper(), x, z);
        ASSERT_TRUE(ref.has_value());
        ASSERT_FALSE(rho.IsInfinite());
        EXPECT_EQ(rho.value(), *ref);
        EXPECT_LE(rho.value(), Rational(static_cast<long>(inst.n())));
        for (long alpha : {0L, 2L, 3L}) {
          ExtendedValue scaled =
              StandardPotential(set, x, Scale(Integer(alpha), z));
          ASSERT_FALSE(scaled.IsInfinite());
          EXPECT_EQ(scaled.value(), Rational(alpha) * rho.value());
        }
        if (!IsZero(z) && IsExhaustive(set, x, z)) {
          EXPECT_GT(rho.value(), MakeRational(1, 2));
        }
      }
    }
  }
}

TEST(L1PotentialTest, ZeroOneDirectionsAreBetweenOneAndN) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    FeasibleSet set(testing::RandomInstance(rng, 5, 1, 2, 5, true));
    std::vector<IntVector> pts = testing::RefPoints(set);
    for (const IntVector& x : pts) {
      for (const IntVector& y : pts) {
        if (x == y) continue;
        Integer rho = L1Potential(Subtract(y, x));
        EXPECT_GE(rho, 1);
        EXPECT_LE(rho, 5);
      }
    }
  }
}

TEST(IsExhaustiveTest, Examples) {
  FeasibleSet unit(Box(V({0, 0}), V({1, 1})));
  FeasibleSet wide(Box(V({0, 0}), V({3, 3})));
  EXPECT_TRUE(IsExhaustive(unit, V({0, 0}), V({1, 0})));
  EXPECT_FALSE(IsExhaustive(wide, V({0, 0}), V({1, 0})));
  EXPECT_THROW(IsExhaustive(unit, V({0, 0}), V({0, 0})), Error);
}

TEST(IsExhaustiveTest, PointSetDirectionsAreExhaustive) {
  std::vector<IntVector> pts = {V({0, 0, 1}), V({1, 0, 0}), V({1, 1, 0}),
                                V({0, 1, 1})};
  FeasibleSet set(PointSetInstance(3, pts, ObjectiveVector(V({1, 1, 1}))));
  for (const IntVector& x : pts) {
    for (const IntVector& y : pts) {
      if (x != y) EXPECT_TRUE(IsExhaustive(set, x, Subtract(y, x)));
    }
  }
}

TEST(ExhaustDirectionTest, Examples) {
  FeasibleSet wide(Box(V({0, 0}), V({3, 3})));
  EXPECT_EQ(ExhaustDirection(wide, V({0, 0}), V({1, 0})), 3);
  FeasibleSet line(Box(V({0}), V({10})));
  EXPECT_EQ(ExhaustDirection(line, V({0}), V({3})), 3);
  FeasibleSet cube(Box(V({0, 0, 0}), V({1, 1, 1})));
  EXPECT_EQ(ExhaustDirection(cube, V({0, 1, 0}), V({1, -1, 1})), 1);
}

TEST(ExhaustDirectionTest, RowsLimitTheStep) {
  FeasibleSet set(Box(V({0, 0}), V({100, 100}),
                      {Row{V({3, 1}), Sense::kLessEqual, I(20)}}));
  // 3 alpha + alpha <= 20 with the box allowing 100.
  EXPECT_EQ(ExhaustDirection(set, V({0, 0}), V({1, 1})), 5);
}

// alpha is maximal: x + alpha z feasible, x + (alpha + 1) z infeasible.
TEST(ExhaustDirectionTest, MaximalityProperty) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Instance inst = testing::RandomInstance(rng, 3, 6, 2, 5, false);
    FeasibleSet set(inst);
    std::vector<IntVector> pts = testing::RefPoints(set);
    for (size_t a = 0; a < pts.size(); a += 3) {
      for (size_t b = 0; b < pts.size(); b += 5) {
        IntVector z = Subtract(pts[b], pts[a]);
        if (IsZero(z)) continue;
        Integer alpha = ExhaustDirection(set, pts[a], z);
        EXPECT_GE(alpha, 1);
        auto in = [&](const Integer& t) {
          IntVector y = Add(pts[a], Scale(t, z));
          for (size_t j = 0; j < y.size(); ++j) {
            if (y[j] < inst.lower()[j] || y[j] > inst.upper()[j]) return false;
          }
          return testing::RefRowsHold(inst.rows(), y);
        };
        EXPECT_TRUE(in(alpha));
        EXPECT_FALSE(in(alpha + 1));
      }
    }
  }
}

TEST(FlipTest, Example) {
  Instance inst(2, {Row{V({1, 1}), Sense::kLessEqual, I(1)}}, V({0, 0}),
                V({1, 1}), ObjectiveVector(V({3, -2})));
  FlipResult flip = FlipToNonnegative(inst);
  const Instance& out = flip.set.instance();
  EXPECT_EQ(out.objective().c(), V({3, 2}));
  EXPECT_EQ(out.rows()[0].coeffs, V({1, -1}));
  EXPECT_EQ(out.rows()[0].rhs, 0);
  EXPECT_EQ(flip.offset, -2);
  EXPECT_EQ(flip.mask, (std::vector<bool>{false, true}));
  // Objective values agree through the offset on every point.
  for (const IntVector& x : testing::RefPoints(FeasibleSet(inst))) {
    IntVector y = flip.Apply(x);
    EXPECT_TRUE(out.Contains(y));
    EXPECT_EQ(inst.objective().Value(x), out.objective().Value(y) + flip.offset);
  }
}

TEST(FlipTest, IdentityAndRoundTrip) {
  Instance inst = Simplex();
  FlipResult flip = FlipToNonnegative(inst);
  EXPECT_TRUE(flip.IsIdentity());
  std::vector<bool> mask = {true, false, true};
  for (int bits = 0; bits < 8; ++bits) {
    IntVector x = V({bits & 1, (bits >> 1) & 1, (bits >> 2) & 1});
    EXPECT_EQ(ApplyFlip(mask, ApplyFlip(mask, x)), x);
  }
}

TEST(FlipTest, RejectsGeneralIntegers) {
  try {
    FlipToNonnegative(Box(V({0}), V({2})));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotApplicable);
  }
}

TEST(SupportTest, Examples) {
  EXPECT_TRUE(Support(V({0, 0})).empty());
  EXPECT_EQ(Support(V({1, 0, -2})), (std::vector<size_t>{0, 2}));
  IntVector z = V({1, 0, -1, 1});
  EXPECT_EQ(Integer(static_cast<long>(Support(z).size())), L1Potential(z));
}

TEST(DirectionTest, PositiveAndNegativeParts) {
  Direction d{V({2, 0, -3}), V({0, 1, 3})};
  EXPECT_EQ(d.Positive(), V({2, 0, 0}));
  EXPECT_EQ(d.Negative(), V({0, 0, 3}));
  EXPECT_EQ(Subtract(d.Positive(), d.Negative()), d.z);
  EXPECT_EQ(d.Target(), V({2, 1, 0}));
  EXPECT_TRUE(d.IsFeasible(FeasibleSet(Box(V({0, 0, 0}), V({3, 3, 3})))));
}

TEST(PointSetTest, Validation) {
  ObjectiveVector c(V({1, 1}));
  EXPECT_THROW(PointSetInstance(2, {V({0, 1}), V({0, 1})}, c), Error);
  EXPECT_THROW(PointSetInstance(2, {V({0, 2})}, c), Error);
  PointSetInstance ps(2, {V({0, 1}), V({1, 1})}, c);
  EXPECT_EQ(ps.lower(), V({0, 1}));
  EXPECT_EQ(ps.upper(), V({1, 1}));
  EXPECT_TRUE(ps.Contains(V({1, 1})));
  EXPECT_FALSE(ps.Contains(V({0, 0})));
  EXPECT_EQ(ps.IndexOf(V({1, 1})), 1u);
}

TEST(InstanceJsonTest, RoundTripWithRationalsAndBigIntegers) {
  const char* text = R"({
    "n": 2,
    "rows": [{"coeffs": ["1/2", 1], "sense": "LE", "rhs": "3/2"},
             {"coeffs": [1, -1], "sense": "GE", "rhs": -1}],
    "lower": [0, 0], "upper": [3, "123456789012345678901"],
    "objective": ["0.25", 1], "maximize": false, "start": [0, 0]})";
  InstanceDocument doc = ParseInstance(text);
  const Instance& inst = doc.set.instance();
  EXPECT_EQ(inst.rows()[0].coeffs, V({1, 2}));
  EXPECT_EQ(inst.rows()[0].rhs, 3);
  EXPECT_EQ(inst.rows()[1].sense, Sense::kGreaterEqual);
  EXPECT_EQ(inst.upper()[1], Integer("123456789012345678901"));
  EXPECT_EQ(inst.objective().c(), V({-1, -4}));
  EXPECT_EQ(inst.objective().scale(), 4);
  ASSERT_TRUE(doc.start.has_value());

  nlohmann::json out = InstanceToJson(doc.set, doc.start);
  EXPECT_TRUE(out["upper"][1].is_string());
  InstanceDocument again = InstanceFromJson(out);
  EXPECT_EQ(again.set.instance().upper(), inst.upper());
  EXPECT_EQ(again.set.objective().c(), inst.objective().c());
  EXPECT_EQ(again.set.objective().negated(), true);
  EXPECT_EQ(again.set.objective().OriginalValue(V({1, 1})),
            MakeRational(5, 4));
}

TEST(InstanceJsonTest, PointSets) {
  InstanceDocument doc = ParseInstance(
      R"({"n": 2, "points": [[0, 0], [1, 0]], "objective": [1, 1]})");
  ASSERT_TRUE(doc.set.is_point_set());
  EXPECT_EQ(doc.set.point_set().points().size(), 2u);
  InstanceDocument again = InstanceFromJson(InstanceToJson(doc.set));
  EXPECT_EQ(again.set.point_set().points(), doc.set.point_set().points());
}

TEST(InstanceJsonTest, Errors) {
  auto code_of = [](const std::string& text) {
    try {
      ParseInstance(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  EXPECT_EQ(code_of("{"), ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"n": 1, "lower": [0], "upper": [1]})"),
            ErrorCode::kParse);
  EXPECT_EQ(code_of(R"({"n": 2, "lower": [0, 0], "upper": [1, 1],
                        "objective": [1]})"),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of(R"({"n": 1, "lower": [0], "upper": [1], "objective": [1],
                        "rows": [{"coeffs": [1], "sense": "LT", "rhs": 0}]})"),
            ErrorCode::kParse);
  EXPECT_THROW(LoadInstance("/nonexistent/instance.json"), Error);
}

}  // namespace
}  // namespace auglab
