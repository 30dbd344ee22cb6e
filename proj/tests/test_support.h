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


#ifndef AUGLAB_TESTS_TEST_SUPPORT_H_
#define AUGLAB_TESTS_TEST_SUPPORT_H_

// Reference computations for tests. Everything here is written directly from
// the definitions, by full enumeration, and shares no code with the library
// beyond its data types.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "auglab/instance.h"
#include "auglab/numeric.h"

namespace auglab::testing {

inline Integer I(int64_t v) { return Integer(static_cast<long>(v)); }

inline IntVector V(std::initializer_list<int64_t> values) {
  IntVector out;
  for (int64_t v : values) out.push_back(I(v));
  return out;
}

inline Integer RefDot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool RefRowsHold(const std::vector<Row>& rows, const IntVector& x) {
  for (const Row& r : rows) {
    Integer act = RefDot(r.coeffs, x);
    if (r.sense == Sense::kLessEqual && act > r.rhs) return false;
    if (r.sense == Sense::kGreaterEqual && act < r.rhs) return false;
    if (r.sense == Sense::kEqual && act != r.rhs) return false;
  }
  return true;
}

// All integral feasible points, lexicographically ordered for H-rep sets and
// in list order for point sets.
inline std::vector<IntVector> RefPoints(const FeasibleSet& set) {
  if (set.is_point_set()) return set.point_set().points();
  const Instance& inst = set.instance();
  std::vector<IntVector> out;
  IntVector x = inst.lower();
  const size_t n = inst.n();
  while (true) {
    if (RefRowsHold(inst.rows(), x)) out.push_back(x);
    size_t j = n;
    while (j > 0 && x[j - 1] == inst.upper()[j - 1]) {
      x[j - 1] = inst.lower()[j - 1];
      --j;
    }
    if (j == 0) return out;
    ++x[j - 1];
  }
}

// Standard potential from its definition; nullopt encodes +infinity.
inline std::optional<Rational> RefStandardRho(const IntVector& lower,
                                              const IntVector& upper,
                                              const IntVector& x,
                                              const IntVector& z) {
  Rational total = 0;
  for (size_t j = 0; j < x.size(); ++j) {
    if (z[j] > 0) {
      if (upper[j] == x[j]) return std::nullopt;
      total += Rational(z[j]) / Rational(upper[j] - x[j]);
    } else if (z[j] < 0) {
      if (x[j] == lower[j]) return std::nullopt;
      total += Rational(-z[j]) / Rational(x[j] - lower[j]);
    }
  }
  return total;
}

inline Integer RefL1(const IntVector& z) {
  Integer s = 0;
  for (const Integer& v : z) s += v < 0 ? Integer(-v) : v;
  return s;
}

inline IntVector RefSub(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Integer RefMax(const FeasibleSet& set, const IntVector& c) {
  std::vector<IntVector> pts = RefPoints(set);
  Integer best = RefDot(c, pts.front());
  for (const IntVector& p : pts) best = std::max(best, RefDot(c, p));
  return best;
}

// Random small bounded instance with a few LE rows; the origin is always
// feasible.
inline Instance RandomInstance(std::mt19937_64& rng, size_t n, int64_t width,
                               size_t rows, int64_t cmax, bool binary) {
  std::uniform_int_distribution<int64_t> coef(-4, 6);
  std::uniform_int_distribution<int64_t> obj(-cmax, cmax);
  std::uniform_int_distribution<int64_t> lo(-1, 0);
  IntVector lower(n), upper(n), c(n);
  for (size_t j = 0; j < n; ++j) {
    lower[j] = binary ? I(0) : I(lo(rng));
    upper[j] = binary ? I(1) : lower[j] + I(width);
    c[j] = I(obj(rng));
  }
  std::vector<Row> rs;
  for (size_t i = 0; i < rows; ++i) {
    Row r;
    r.sense = Sense::kLessEqual;
    Integer sum_pos = 0;
    for (size_t j = 0; j < n; ++j) {
      r.coeffs.push_back(I(coef(rng)));
      if (r.coeffs.back() > 0) sum_pos += r.coeffs.back() * upper[j];
    }
    r.rhs = sum_pos / 2;
    rs.push_back(std::move(r));
  }
  return Instance(n, std::move(rs), lower, upper, ObjectiveVector(c));
}

}  // namespace auglab::testing

#endif  // AUGLAB_TESTS_TEST_SUPPORT_H_
