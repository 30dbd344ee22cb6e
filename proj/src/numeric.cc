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


#include "auglab/numeric.h"

#include <cctype>
#include <limits>
#include <utility>

#include "auglab/error.h"

namespace auglab {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kDimensionMismatch:
      return "dimension_mismatch";
    case ErrorCode::kParse:
      return "parse_error";
    case ErrorCode::kIo:
      return "io_error";
    case ErrorCode::kResourceLimit:
      return "resource_limit";
    case ErrorCode::kNotApplicable:
      return "not_applicable";
    case ErrorCode::kVerificationFailed:
      return "verification_failed";
    case ErrorCode::kInternal:
      return "internal";
  }
  return "unknown";
}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

Integer MakeInteger(int64_t v) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

Rational MakeRational(const Integer& num, const Integer& den) {
  if (den == 0) Fail(ErrorCode::kInvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational MakeRational(int64_t num, int64_t den) {
  return MakeRational(MakeInteger(num), MakeInteger(den));
}

Integer Floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer Ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer FloorDiv(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer Abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer Lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer Pow2(unsigned exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

unsigned CeilLog2(const Integer& v) {
  if (v <= 1) return 0;
  Integer w = v - 1;
  return static_cast<unsigned>(mpz_sizeinbase(w.get_mpz_t(), 2));
}

Integer Dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) {
    Fail(ErrorCode::kDimensionMismatch, "dot product of vectors of length " +
                                            std::to_string(a.size()) + " and " +
                                            std::to_string(b.size()));
  }
  Integer s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer MaxAbs(const IntVector& v) {
  Integer m = 0;
  for (const Integer& x : v) {
    Integer a = Abs(x);
    if (a > m) m = a;
  }
  return m;
}

IntVector Add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) Fail(ErrorCode::kDimensionMismatch, "vector add");
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector Subtract(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) Fail(ErrorCode::kDimensionMismatch, "vector sub");
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector Scale(const Integer& alpha, const IntVector& v) {
  IntVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = alpha * v[i];
  return r;
}

bool IsZero(const IntVector& v) {
  for (const Integer& x : v) {
    if (x != 0) return false;
  }
  return true;
}

IntVector ToIntVector(const std::vector<int64_t>& v) {
  IntVector r;
  r.reserve(v.size());
  for (int64_t x : v) r.push_back(MakeInteger(x));
  return r;
}

bool FitsInt64(const Integer& v) { return mpz_fits_slong_p(v.get_mpz_t()); }

std::vector<int64_t> ToInt64Vector(const IntVector& v) {
  std::vector<int64_t> r;
  r.reserve(v.size());
  for (const Integer& x : v) {
    if (!FitsInt64(x)) Fail(ErrorCode::kInvalidArgument, "value exceeds int64");
    r.push_back(x.get_si());
  }
  return r;
}

std::string ToString(const Integer& v) { return v.get_str(); }

std::string ToString(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string ToString(const IntVector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string ToDecimal(const Rational& q, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer num = Abs(q.get_num()) * scale;
  Integer den = q.get_den();
  // Round half away from zero.
  Integer scaled = FloorDiv(2 * num + den, 2 * den);
  std::string digits_str = scaled.get_str();
  if (static_cast<int>(digits_str.size()) <= digits) {
    digits_str.insert(0, digits + 1 - digits_str.size(), '0');
  }
  std::string out;
  if (q < 0 && scaled != 0) out += "-";
  out += digits_str.substr(0, digits_str.size() - digits);
  if (digits > 0) {
    out += ".";
    out += digits_str.substr(digits_str.size() - digits);
  }
  return out;
}

double ToDouble(const Rational& q) { return q.get_d(); }

Integer ParseInteger(std::string_view text) {
  Rational q = ParseRational(text);
  if (q.get_den() != 1) {
    Fail(ErrorCode::kParse, "expected an integer, got '" + std::string(text) +
                                "'");
  }
  return q.get_num();
}

Rational ParseRational(std::string_view text) {
  std::string s(text);
  auto bad = [&]() -> Rational {
    Fail(ErrorCode::kParse, "cannot parse number '" + s + "'");
  };
  if (s.empty()) return bad();
  size_t slash = s.find('/');
  if (slash != std::string::npos) {
    Integer num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0) return bad();
    if (den.set_str(s.substr(slash + 1), 10) != 0) return bad();
    if (den == 0) return bad();
    return MakeRational(num, den);
  }
  // Decimal with optional fraction and exponent.
  size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string mantissa;
  int frac_digits = 0;
  bool seen_point = false;
  while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                            s[pos] == '.')) {
    if (s[pos] == '.') {
      if (seen_point) return bad();
      seen_point = true;
    } else {
      mantissa += s[pos];
      if (seen_point) ++frac_digits;
    }
    ++pos;
  }
  if (mantissa.empty()) return bad();
  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') return bad();
    ++pos;
    std::string exp_str = s.substr(pos);
    if (exp_str.empty()) return bad();
    try {
      size_t used = 0;
      exponent = std::stol(exp_str, &used);
      if (used != exp_str.size()) return bad();
    } catch (const std::exception&) {
      return bad();
    }
  }
  Integer num(mantissa, 10);
  if (negative) num = -num;
  long shift = exponent - frac_digits;
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10,
                static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0) return Rational(num * ten_pow);
  return MakeRational(num, ten_pow);
}

ExtendedValue::ExtendedValue(Rational v) : value_(std::move(v)) {
  if (*value_ < 0) Fail(ErrorCode::kInvalidArgument, "negative extended value");
}

ExtendedValue ExtendedValue::Infinity() {
  ExtendedValue v;
  v.value_.reset();
  return v;
}

const Rational& ExtendedValue::value() const {
  if (!value_) Fail(ErrorCode::kInvalidArgument, "value of infinity");
  return *value_;
}

ExtendedValue ExtendedValue::operator+(const ExtendedValue& other) const {
  if (IsInfinite() || other.IsInfinite()) return Infinity();
  return ExtendedValue(Rational(*value_ + *other.value_));
}

ExtendedValue ExtendedValue::Times(const Rational& factor) const {
  if (factor < 0) Fail(ErrorCode::kInvalidArgument, "negative factor");
  if (factor == 0) return ExtendedValue();
  if (IsInfinite()) return Infinity();
  return ExtendedValue(Rational(*value_ * factor));
}

bool ExtendedValue::operator==(const ExtendedValue& other) const {
  if (IsInfinite() || other.IsInfinite()) {
    return IsInfinite() == other.IsInfinite();
  }
  return *value_ == *other.value_;
}

bool ExtendedValue::operator<(const ExtendedValue& other) const {
  if (IsInfinite()) return false;
  if (other.IsInfinite()) return true;
  return *value_ < *other.value_;
}

std::string ExtendedValue::ToString() const {
  if (IsInfinite()) return "inf";
  return auglab::ToString(*value_);
}

}  // namespace auglab
