// Copyright 2026 The btensor Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "btensor/decompose.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "btensor/classes.hpp"

namespace btensor {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Picks c (and if necessary adjusts b by rounding) so that fl(b + c) == a.
bool exact_split(double a, double& b, double& c) {
  c = a - b;
  if (b + c == a) return true;
  double up = c;
  double down = c;
  for (int step = 0; step < 8; ++step) {
    up = std::nextafter(up, kInf);
    if (b + up == a) {
      c = up;
      return true;
    }
    down = std::nextafter(down, -kInf);
    if (b + down == a) {
      c = down;
      return true;
    }
  }
  const double c2 = a - b;
  const double b2 = a - c2;
  if (b2 + c2 == a) {
    b = b2;
    c = c2;
    return true;
  }
  return false;
}

double shape_tolerance(const Tensor& a, int i, double epsilon) {
  double scale = std::max(1.0, epsilon);
  for (double v : a.row(i)) scale = std::max(scale, std::abs(v));
  return 16.0 * DBL_EPSILON * scale;
}

bool has_row_constant_shape(const Tensor& a, const Decomposition& d) {
  if (static_cast<int>(d.row_constants.size()) != a.dim()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    const double c = d.row_constants[i];
    if (c < 0) return false;
    const double tol = shape_tolerance(a, i, d.epsilon);
    const auto row = d.part_c.row(i);
    const std::size_t diag_off = a.diagonal_offset_in_row(i);
    for (std::size_t off = 0; off < row.size(); ++off) {
      const double expected = off == diag_off ? c + d.epsilon : c;
      if (std::abs(row[off] - expected) > tol) return false;
    }
  }
  return true;
}

void require_valid(const Tensor& a, const Decomposition& d) {
  if (!is_valid_decomposition(a, d)) {
    throw std::logic_error(
        "internal error: constructed decomposition violates its invariants");
  }
}

std::string describe(const Witness& w) {
  if (w.is_pair()) {
    return "rows " + std::to_string(w.row + 1) + " and " +
           std::to_string(*w.other + 1) + ": " + std::to_string(w.lhs) +
           " is not greater than " + std::to_string(w.rhs);
  }
  return "row " + std::to_string(w.row + 1) + ": " + std::to_string(w.lhs) +
         " is not greater than " + std::to_string(w.rhs);
}

}  // namespace

double pair_shift_limit(double d_i, double d_j, double s_i, double s_j) {
  const double gap = d_i - d_j;
  const double disc = std::sqrt(gap * gap + 4.0 * s_i * s_j);
  // Rationalized form of ((d_i + d_j) - disc) / 2; no cancellation.
  return 2.0 * (d_i * d_j - s_i * s_j) / ((d_i + d_j) + disc);
}

Decomposition decompose_with_epsilon(const Tensor& a, DecompositionKind kind,
                                     double epsilon) {
  if (!(epsilon > 0)) {
    throw DegenerateMargin("decomposition epsilon must be positive, got " +
                           std::to_string(epsilon));
  }
  const RowStats stats = row_stats(a);
  Tensor part_b = a_plus(a);
  for (int i = 0; i < a.dim(); ++i) part_b[part_b.diagonal_index(i)] -= epsilon;

  Tensor part_c(a.order(), a.dim());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!exact_split(a[k], part_b[k], part_c[k])) {
      throw std::logic_error("internal error: no exact split for entry " +
                             std::to_string(k));
    }
  }

  Decomposition d{kind, std::move(part_b), std::move(part_c), epsilon, {}};
  d.row_constants.reserve(a.dim());
  for (const auto& s : stats) d.row_constants.push_back(s.r_plus);
  require_valid(a, d);
  return d;
}

Decomposition decompose_b(const Tensor& a) {
  if (auto w = b_violation(a, row_stats(a))) {
    throw ClassViolation("not a B-tensor, " + describe(*w), w);
  }
  const RowStats plus_stats = row_stats(a_plus(a));
  double slack = kInf;
  for (const auto& s : plus_stats) {
    slack = std::min(slack, s.diag - s.off_diag_abs_sum);
  }
  const double epsilon = slack / 2.0;
  if (!(epsilon > 0)) {
    throw DegenerateMargin("dominance slack " + std::to_string(slack) +
                           " of A+ is too small to split");
  }
  return decompose_with_epsilon(a, DecompositionKind::B, epsilon);
}

Decomposition decompose_doubly_b(const Tensor& a) {
  if (auto w = doubly_b_violation(row_stats(a))) {
    throw ClassViolation("not a doubly B-tensor, " + describe(*w), w);
  }
  const RowStats plus_stats = row_stats(a_plus(a));
  const int n = a.dim();
  double limit = kInf;
  for (int i = 0; i < n; ++i) {
    limit = std::min(limit, plus_stats[i].diag);
    for (int j = i + 1; j < n; ++j) {
      limit = std::min(limit, pair_shift_limit(plus_stats[i].diag,
                                               plus_stats[j].diag,
                                               plus_stats[i].off_diag_abs_sum,
                                               plus_stats[j].off_diag_abs_sum));
    }
  }
  const double epsilon = limit / 2.0;
  if (!(epsilon > 0)) {
    throw DegenerateMargin("doubly dominated slack " + std::to_string(limit) +
                           " of A+ is too small to split");
  }
  return decompose_with_epsilon(a, DecompositionKind::DoublyB, epsilon);
}

bool is_valid_decomposition(const Tensor& a, const Decomposition& d) {
  if (!(d.epsilon > 0)) return false;
  if (d.part_b.order() != a.order() || d.part_b.dim() != a.dim()) return false;
  if (d.part_c.order() != a.order() || d.part_c.dim() != a.dim()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (d.part_b[k] + d.part_c[k] != a[k]) return false;
    if (d.part_c[k] < 0) return false;
  }
  if (!is_z(d.part_b)) return false;
  if (d.kind == DecompositionKind::B) {
    return is_b(d.part_b) && is_b(d.part_c);
  }
  return is_doubly_b(d.part_b) && is_doubly_b(d.part_c) &&
         has_row_constant_shape(a, d);
}

}  // namespace btensor
