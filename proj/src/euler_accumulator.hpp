// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0
//
// Internal: incremental Euler transformation of an alternating series
// (van Wijngaarden form). Feed signed terms one at a time; the difference
// table grows only while that helps and is capped.

#ifndef GML_SRC_EULER_ACCUMULATOR_HPP
#define GML_SRC_EULER_ACCUMULATOR_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace gml::detail {

class EulerAccumulator {
public:
  explicit EulerAccumulator(std::size_t cap) : cap_(cap) {}

  // Returns the increment this term contributed to the accelerated sum.
  double feed(double term) {
    if (table_.empty()) {
      table_.push_back(term);
      const double inc = 0.5 * term;
      sum_ += inc;
      return inc;
    }
    double carry = table_[0];
    table_[0] = term;
    for (std::size_t j = 0; j + 1 < table_.size(); ++j) {
      const double next_carry = table_[j + 1];
      table_[j + 1] = 0.5 * (table_[j] + carry);
      carry = next_carry;
    }
    const double next = 0.5 * (table_.back() + carry);
    double inc;
    if (std::abs(next) <= std::abs(table_.back()) && table_.size() < cap_) {
      table_.push_back(next);
      inc = 0.5 * next;
    } else {
      inc = next;
    }
    sum_ += inc;
    return inc;
  }

  double sum() const { return sum_; }

private:
  std::size_t cap_;
  std::vector<double> table_;
  double sum_ = 0.0;
};

}  // namespace gml::detail

#endif  // GML_SRC_EULER_ACCUMULATOR_HPP
