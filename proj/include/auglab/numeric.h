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


#ifndef AUGLAB_NUMERIC_H_
#define AUGLAB_NUMERIC_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace auglab {

// Exact arithmetic is used for all instance data, objective values, potentials
// and ratios.
using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

Integer MakeInteger(int64_t v);
Rational MakeRational(const Integer& num, const Integer& den);
Rational MakeRational(int64_t num, int64_t den);

// Floor and ceiling of a rational.
Integer Floor(const Rational& q);
Integer Ceil(const Rational& q);
// Floor division with a positive divisor.
Integer FloorDiv(const Integer& a, const Integer& b);

Integer Abs(const Integer& a);
Integer Lcm(const Integer& a, const Integer& b);
Integer Pow2(unsigned exponent);
// Smallest e >= 0 with 2^e >= v, for v >= 1.
unsigned CeilLog2(const Integer& v);

Integer Dot(const IntVector& a, const IntVector& b);
Integer MaxAbs(const IntVector& v);
IntVector Add(const IntVector& a, const IntVector& b);
IntVector Subtract(const IntVector& a, const IntVector& b);
IntVector Scale(const Integer& alpha, const IntVector& v);
bool IsZero(const IntVector& v);

IntVector ToIntVector(const std::vector<int64_t>& v);
// Throws if any entry does not fit in int64_t.
std::vector<int64_t> ToInt64Vector(const IntVector& v);
bool FitsInt64(const Integer& v);

std::string ToString(const Integer& v);
// "p/q" for non-integers, "p" otherwise.
std::string ToString(const Rational& q);
std::string ToString(const IntVector& v);
// Fixed-point decimal rendering with `digits` fractional digits, rounded
// half away from zero.
std::string ToDecimal(const Rational& q, int digits = 6);
double ToDouble(const Rational& q);

// Parses "12", "-3/4", "0.125" or "1e-6" exactly.
Rational ParseRational(std::string_view text);
Integer ParseInteger(std::string_view text);

// A nonnegative rational or +infinity. Multiplication by zero yields zero
// even for the infinite value.
class ExtendedValue {
 public:
  ExtendedValue() : value_(Rational(0)) {}
  explicit ExtendedValue(Rational v);
  static ExtendedValue Infinity();

  bool IsInfinite() const { return !value_.has_value(); }
  // Requires !IsInfinite().
  const Rational& value() const;

  ExtendedValue operator+(const ExtendedValue& other) const;
  ExtendedValue Times(const Rational& factor) const;

  bool operator==(const ExtendedValue& other) const;
  bool operator<(const ExtendedValue& other) const;
  bool operator<=(const ExtendedValue& other) const { return !(other < *this); }
  bool operator>(const ExtendedValue& other) const { return other < *this; }

  std::string ToString() const;

 private:
  std::optional<Rational> value_;
};

}  // namespace auglab

#endif  // AUGLAB_NUMERIC_H_
