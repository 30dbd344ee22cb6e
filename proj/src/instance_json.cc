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


#include "auglab/instance_json.h"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "auglab/error.h"

namespace auglab {

using nlohmann::json;

namespace {

const Integer& SafeIntegerLimit() {
  static const Integer limit = Pow2(53);
  return limit;
}

const json& Require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    Fail(ErrorCode::kParse, std::string("missing key '") + key + "'");
  }
  return *it;
}

Sense ParseSense(const std::string& s) {
  if (s == "LE" || s == "<=") return Sense::kLessEqual;
  if (s == "EQ" || s == "=" || s == "==") return Sense::kEqual;
  if (s == "GE" || s == ">=") return Sense::kGreaterEqual;
  Fail(ErrorCode::kParse, "unknown row sense '" + s + "'");
}

std::vector<Rational> RationalsFromJson(const json& v) {
  if (!v.is_array()) Fail(ErrorCode::kParse, "expected an array");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const json& e : v) out.push_back(RationalFromJson(e));
  return out;
}

}  // namespace

json IntegerToJson(const Integer& v) {
  if (Abs(v) <= SafeIntegerLimit()) return json(static_cast<int64_t>(v.get_si()));
  return json(v.get_str());
}

json RationalToJson(const Rational& q) {
  if (q.get_den() == 1) return IntegerToJson(q.get_num());
  return json(ToString(q));
}

json VectorToJson(const IntVector& v) {
  json a = json::array();
  for (const Integer& x : v) a.push_back(IntegerToJson(x));
  return a;
}

Rational RationalFromJson(const json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) {
      return Rational(Integer(std::to_string(v.get<uint64_t>())));
    }
    return Rational(MakeInteger(v.get<int64_t>()));
  }
  if (v.is_number_float()) return ParseRational(v.dump());
  if (v.is_string()) return ParseRational(v.get<std::string>());
  Fail(ErrorCode::kParse, "expected a number, got " + v.dump());
}

Integer IntegerFromJson(const json& v) {
  Rational q = RationalFromJson(v);
  if (q.get_den() != 1) {
    Fail(ErrorCode::kParse, "expected an integer, got " + v.dump());
  }
  return q.get_num();
}

IntVector VectorFromJson(const json& v) {
  if (!v.is_array()) Fail(ErrorCode::kParse, "expected an array");
  IntVector out;
  out.reserve(v.size());
  for (const json& e : v) out.push_back(IntegerFromJson(e));
  return out;
}

InstanceDocument InstanceFromJson(const json& doc) {
  if (!doc.is_object()) Fail(ErrorCode::kParse, "instance must be an object");
  const json& n_json = Require(doc, "n");
  if (!n_json.is_number_integer() || n_json.get<int64_t>() < 1) {
    Fail(ErrorCode::kParse, "'n' must be a positive integer");
  }
  const size_t n = n_json.get<size_t>();
  bool maximize = doc.value("maximize", true);
  std::vector<Rational> c = RationalsFromJson(Require(doc, "objective"));
  if (c.size() != n) {
    Fail(ErrorCode::kDimensionMismatch, "objective must have n entries");
  }
  ObjectiveVector objective = ObjectiveVector::FromRational(c, !maximize);

  std::optional<IntVector> start;
  if (doc.contains("start") && !doc["start"].is_null()) {
    start = VectorFromJson(doc["start"]);
    if (start->size() != n) {
      Fail(ErrorCode::kDimensionMismatch, "start must have n entries");
    }
  }

  if (doc.contains("points")) {
    std::vector<IntVector> points;
    for (const json& p : doc["points"]) points.push_back(VectorFromJson(p));
    return {FeasibleSet(PointSetInstance(n, std::move(points),
                                         std::move(objective))),
            std::move(start)};
  }

  std::vector<Row> rows;
  if (doc.contains("rows")) {
    for (const json& r : doc["rows"]) {
      std::vector<Rational> coeffs = RationalsFromJson(Require(r, "coeffs"));
      Rational rhs = RationalFromJson(Require(r, "rhs"));
      Integer den = rhs.get_den();
      for (const Rational& q : coeffs) den = Lcm(den, q.get_den());
      Row row;
      row.sense = ParseSense(Require(r, "sense").get<std::string>());
      for (const Rational& q : coeffs) {
        row.coeffs.push_back(q.get_num() * (den / q.get_den()));
      }
      row.rhs = rhs.get_num() * (den / rhs.get_den());
      rows.push_back(std::move(row));
    }
  }
  // Bounds of integer variables may be rounded inward.
  IntVector lower, upper;
  for (const Rational& q : RationalsFromJson(Require(doc, "lower"))) {
    lower.push_back(Ceil(q));
  }
  for (const Rational& q : RationalsFromJson(Require(doc, "upper"))) {
    upper.push_back(Floor(q));
  }
  return {FeasibleSet(Instance(n, std::move(rows), std::move(lower),
                               std::move(upper), std::move(objective),
                               maximize)),
          std::move(start)};
}

InstanceDocument ParseInstance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  try {
    return InstanceFromJson(doc);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("malformed instance: ") + e.what());
  }
}

InstanceDocument LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

json InstanceToJson(const FeasibleSet& set,
                    const std::optional<IntVector>& start) {
  json doc;
  doc["n"] = set.n();
  const ObjectiveVector& objective = set.objective();
  json c = json::array();
  for (const Integer& v : objective.c()) {
    c.push_back(RationalToJson(objective.ToOriginal(v)));
  }
  if (set.is_point_set()) {
    json points = json::array();
    for (const IntVector& p : set.point_set().points()) {
      points.push_back(VectorToJson(p));
    }
    doc["points"] = std::move(points);
  } else {
    const Instance& inst = set.instance();
    json rows = json::array();
    for (const Row& row : inst.rows()) {
      rows.push_back({{"coeffs", VectorToJson(row.coeffs)},
                      {"sense", SenseName(row.sense)},
                      {"rhs", IntegerToJson(row.rhs)}});
    }
    doc["rows"] = std::move(rows);
    doc["lower"] = VectorToJson(inst.lower());
    doc["upper"] = VectorToJson(inst.upper());
  }
  doc["objective"] = std::move(c);
  doc["maximize"] = !objective.negated();
  if (start) doc["start"] = VectorToJson(*start);
  return doc;
}

}  // namespace auglab
