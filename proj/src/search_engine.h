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


#ifndef AUGLAB_SRC_SEARCH_ENGINE_H_
#define AUGLAB_SRC_SEARCH_ENGINE_H_

// Exact enumeration over the integer points of a bounded feasible set.
//
// H-representations are searched depth first in ascending variable order with
// interval propagation on the rows; V-representations are scanned in list
// order. Candidates must satisfy a list of separable constraints F(x) > 0 or
// F(x) >= 0 and are selected by one of four rules. Ties are always broken
// towards the lexicographically smallest point.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "auglab/error.h"
#include "auglab/instance.h"
#include "auglab/numeric.h"

namespace auglab::internal {

// F(x) = constant + sum_j a_j x_j + p_j (x_j - k_j)^+ + m_j (k_j - x_j)^+,
// where k is the kink location shared by all forms of a problem. `plus` and
// `minus` are empty for linear forms.
template <typename Int>
struct SeparableForm {
  Int constant{0};
  std::vector<Int> linear;
  std::vector<Int> plus;
  std::vector<Int> minus;

  bool has_kinks() const { return !plus.empty(); }
};

enum class Selection { kFirst, kMaximizeMin, kMinimize, kMaximizeRatio };

template <typename Int>
struct SearchRow {
  std::vector<Int> coeffs;
  Sense sense = Sense::kLessEqual;
  Int rhs{0};
};

template <typename Int>
struct SearchProblem {
  size_t n = 0;
  std::vector<Int> lower;
  std::vector<Int> upper;
  std::vector<Int> kink;
  std::vector<SearchRow<Int>> rows;
  // Non-null selects the V-representation backend.
  const std::vector<std::vector<Int>>* points = nullptr;
  // (form, strict): strict means F > 0, otherwise F >= 0.
  std::vector<std::pair<SeparableForm<Int>, bool>> constraints;
  Selection selection = Selection::kFirst;
  // kMaximizeMin: maximize the minimum of all forms. kMinimize: forms[0].
  // kMaximizeRatio: forms[0] / forms[1], where forms[1] >= 1 on candidates.
  std::vector<SeparableForm<Int>> objectives;
  // Per variable: true enumerates values from the upper bound downwards.
  std::vector<bool> descending;
  uint64_t node_limit = 1000000000ULL;
};

template <typename Int>
struct SearchResult {
  bool found = false;
  std::vector<Int> point;
  std::vector<Int> objective_values;
  uint64_t nodes = 0;
  uint64_t leaves = 0;
  uint64_t pruned = 0;
};

template <typename Int>
class SearchEngine {
 public:
  explicit SearchEngine(const SearchProblem<Int>& problem) : p_(problem) {}

  SearchResult<Int> Run() {
    if (p_.points != nullptr) {
      ScanPoints();
    } else {
      Prepare();
      x_.assign(p_.n, Int(0));
      if (NodeFeasible(0)) Dfs(0);
    }
    return std::move(result_);
  }

 private:
  Int Term(const SeparableForm<Int>& f, size_t j, const Int& v) const {
    Int t = f.linear[j] * v;
    if (f.has_kinks()) {
      const Int& k = p_.kink[j];
      if (v > k) t += f.plus[j] * (v - k);
      if (v < k) t += f.minus[j] * (k - v);
    }
    return t;
  }

  // Min and max of a term over [l_j, u_j]; piecewise linear, so the extremes
  // sit at the bounds or at the kink.
  std::pair<Int, Int> TermRange(const SeparableForm<Int>& f, size_t j) const {
    Int a = Term(f, j, p_.lower[j]);
    Int b = Term(f, j, p_.upper[j]);
    Int lo = std::min(a, b), hi = std::max(a, b);
    if (f.has_kinks() && p_.kink[j] > p_.lower[j] && p_.kink[j] < p_.upper[j]) {
      Int c = Term(f, j, p_.kink[j]);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    return {lo, hi};
  }

  struct Suffix {
    std::vector<Int> min;  // min[j] = sum_{k >= j} min term_k
    std::vector<Int> max;
  };

  Suffix BuildSuffix(const SeparableForm<Int>& f) const {
    Suffix s;
    s.min.assign(p_.n + 1, Int(0));
    s.max.assign(p_.n + 1, Int(0));
    for (size_t j = p_.n; j-- > 0;) {
      auto [lo, hi] = TermRange(f, j);
      s.min[j] = s.min[j + 1] + lo;
      s.max[j] = s.max[j + 1] + hi;
    }
    return s;
  }

  void Prepare() {
    row_min_.clear();
    row_max_.clear();
    for (const SearchRow<Int>& row : p_.rows) {
      std::vector<Int> mn(p_.n + 1, Int(0)), mx(p_.n + 1, Int(0));
      for (size_t j = p_.n; j-- > 0;) {
        Int a = row.coeffs[j] * p_.lower[j];
        Int b = row.coeffs[j] * p_.upper[j];
        mn[j] = mn[j + 1] + std::min(a, b);
        mx[j] = mx[j + 1] + std::max(a, b);
      }
      row_min_.push_back(std::move(mn));
      row_max_.push_back(std::move(mx));
    }
    row_act_.assign(p_.rows.size(), Int(0));
    for (const auto& [form, strict] : p_.constraints) {
      constraint_suffix_.push_back(BuildSuffix(form));
    }
    constraint_partial_.clear();
    for (const auto& [form, strict] : p_.constraints) {
      constraint_partial_.push_back(form.constant);
    }
    for (const SeparableForm<Int>& form : p_.objectives) {
      objective_suffix_.push_back(BuildSuffix(form));
      objective_partial_.push_back(form.constant);
    }
  }

  void CountNode() {
    if (++result_.nodes > p_.node_limit) {
      Fail(ErrorCode::kResourceLimit,
           "oracle search exceeded the node limit of " +
               std::to_string(p_.node_limit));
    }
  }

  // Compares x_[0..depth) with the incumbent's prefix.
  int ComparePrefix(size_t depth) const {
    for (size_t j = 0; j < depth; ++j) {
      if (x_[j] < result_.point[j]) return -1;
      if (x_[j] > result_.point[j]) return 1;
    }
    return 0;
  }

  // Checks rows, constraints and the selection bound with variables [0, depth)
  // fixed.
  bool NodeFeasible(size_t depth) {
    for (size_t i = 0; i < p_.rows.size(); ++i) {
      const SearchRow<Int>& row = p_.rows[i];
      const Int lo = row_act_[i] + row_min_[i][depth];
      const Int hi = row_act_[i] + row_max_[i][depth];
      if (row.sense != Sense::kGreaterEqual && lo > row.rhs) return false;
      if (row.sense != Sense::kLessEqual && hi < row.rhs) return false;
    }
    for (size_t i = 0; i < p_.constraints.size(); ++i) {
      const Int ub = constraint_partial_[i] + constraint_suffix_[i].max[depth];
      if (p_.constraints[i].second ? ub <= 0 : ub < 0) return false;
    }
    if (!result_.found) return true;
    switch (p_.selection) {
      case Selection::kFirst:
        return false;
      case Selection::kMaximizeMin: {
        Int ub = objective_partial_[0] + objective_suffix_[0].max[depth];
        for (size_t i = 1; i < p_.objectives.size(); ++i) {
          const Int cand = objective_partial_[i] + objective_suffix_[i].max[depth];
          if (cand < ub) ub = cand;
        }
        const Int& best = best_score_;
        if (ub < best) return false;
        if (ub == best && ComparePrefix(depth) > 0) return false;
        return true;
      }
      case Selection::kMinimize: {
        const Int lb = objective_partial_[0] + objective_suffix_[0].min[depth];
        if (lb > best_score_) return false;
        if (lb == best_score_ && ComparePrefix(depth) > 0) return false;
        return true;
      }
      case Selection::kMaximizeRatio: {
        const Int num_ub = objective_partial_[0] + objective_suffix_[0].max[depth];
        Int den_lb = objective_partial_[1] + objective_suffix_[1].min[depth];
        if (den_lb < 1) den_lb = Int(1);
        // Every completion has ratio <= num_ub / den_lb.
        const Int& bn = result_.objective_values[0];
        const Int& bd = result_.objective_values[1];
        if (num_ub * bd < bn * den_lb) return false;
        return true;
      }
    }
    return true;
  }

  void Assign(size_t j, const Int& v) {
    x_[j] = v;
    for (size_t i = 0; i < p_.rows.size(); ++i) {
      row_act_[i] += p_.rows[i].coeffs[j] * v;
    }
    for (size_t i = 0; i < p_.constraints.size(); ++i) {
      constraint_partial_[i] += Term(p_.constraints[i].first, j, v);
    }
    for (size_t i = 0; i < p_.objectives.size(); ++i) {
      objective_partial_[i] += Term(p_.objectives[i], j, v);
    }
  }

  void Unassign(size_t j, const Int& v) {
    for (size_t i = 0; i < p_.rows.size(); ++i) {
      row_act_[i] -= p_.rows[i].coeffs[j] * v;
    }
    for (size_t i = 0; i < p_.constraints.size(); ++i) {
      constraint_partial_[i] -= Term(p_.constraints[i].first, j, v);
    }
    for (size_t i = 0; i < p_.objectives.size(); ++i) {
      objective_partial_[i] -= Term(p_.objectives[i], j, v);
    }
  }

  // Returns true when the search should stop.
  bool Dfs(size_t j) {
    if (j == p_.n) {
      ++result_.leaves;
      return Offer(x_, objective_partial_);
    }
    const bool desc = p_.descending[j];
    Int v = desc ? p_.upper[j] : p_.lower[j];
    const Int step = desc ? Int(-1) : Int(1);
    while (desc ? v >= p_.lower[j] : v <= p_.upper[j]) {
      CountNode();
      Assign(j, v);
      bool stop = false;
      if (NodeFeasible(j + 1)) {
        stop = Dfs(j + 1);
      } else {
        ++result_.pruned;
      }
      Unassign(j, v);
      if (stop) return true;
      v += step;
    }
    return false;
  }

  bool Better(const std::vector<Int>& x, const std::vector<Int>& values,
              const Int& score) const {
    if (!result_.found) return true;
    switch (p_.selection) {
      case Selection::kFirst:
        return false;
      case Selection::kMaximizeMin:
        if (score != best_score_) return score > best_score_;
        return x < result_.point;
      case Selection::kMinimize:
        if (score != best_score_) return score < best_score_;
        return x < result_.point;
      case Selection::kMaximizeRatio: {
        const Int lhs = values[0] * result_.objective_values[1];
        const Int rhs = result_.objective_values[0] * values[1];
        if (lhs != rhs) return lhs > rhs;
        if (values[0] != result_.objective_values[0]) {
          return values[0] > result_.objective_values[0];
        }
        return x < result_.point;
      }
    }
    return false;
  }

  Int Score(const std::vector<Int>& values) const {
    if (values.empty()) return Int(0);
    Int s = values[0];
    if (p_.selection == Selection::kMaximizeMin) {
      for (const Int& v : values) s = std::min(s, v);
    }
    return s;
  }

  bool Offer(const std::vector<Int>& x, const std::vector<Int>& values) {
    const Int score = Score(values);
    if (Better(x, values, score)) {
      result_.found = true;
      result_.point = x;
      result_.objective_values = values;
      best_score_ = score;
    }
    return p_.selection == Selection::kFirst && result_.found;
  }

  Int Evaluate(const SeparableForm<Int>& f, const std::vector<Int>& x) const {
    Int s = f.constant;
    for (size_t j = 0; j < p_.n; ++j) s += Term(f, j, x[j]);
    return s;
  }

  void ScanPoints() {
    for (const std::vector<Int>& x : *p_.points) {
      CountNode();
      ++result_.leaves;
      bool ok = true;
      for (const auto& [form, strict] : p_.constraints) {
        const Int v = Evaluate(form, x);
        if (strict ? v <= 0 : v < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<Int> values;
      values.reserve(p_.objectives.size());
      for (const SeparableForm<Int>& f : p_.objectives) {
        values.push_back(Evaluate(f, x));
      }
      if (Offer(x, values)) return;
    }
  }

  const SearchProblem<Int>& p_;
  SearchResult<Int> result_;
  Int best_score_{0};
  std::vector<Int> x_;
  std::vector<Int> row_act_;
  std::vector<std::vector<Int>> row_min_;
  std::vector<std::vector<Int>> row_max_;
  std::vector<Suffix> constraint_suffix_;
  std::vector<Int> constraint_partial_;
  std::vector<Suffix> objective_suffix_;
  std::vector<Int> objective_partial_;
};

}  // namespace auglab::internal

#endif  // AUGLAB_SRC_SEARCH_ENGINE_H_
