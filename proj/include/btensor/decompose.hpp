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

#pragma once

#include <vector>

#include "btensor/tensor.hpp"

namespace btensor {

enum class DecompositionKind { B, DoublyB };

/// A = part_b + part_c with part_b a Z-tensor in the same class as A and
/// part_c a nonnegative member of that class of the row-constant shape
///   c_{i i_2..i_m} = row_constants[i] + epsilon  on the diagonal,
///                    row_constants[i]            elsewhere.
struct Decomposition {
  DecompositionKind kind;
  Tensor part_b;
  Tensor part_c;
  double epsilon;
  std::vector<double> row_constants;  // r_plus of each row of A
};

/// Splits a B-tensor as A = (A+ - eps I) + C, with eps half of the smallest
/// strict-dominance slack of A+. Throws ClassViolation if A is not a
/// B-tensor and DegenerateMargin if eps underflows.
Decomposition decompose_b(const Tensor& a);

/// Splits a doubly B-tensor as A = (A+ - eps I) + C. eps is half of
/// min(delta*, min_i diag(A+)_i), where delta* is the smallest over row
/// pairs of the smaller root of (d_i - t)(d_j - t) = s_i s_j.
Decomposition decompose_doubly_b(const Tensor& a);

/// Largest admissible shift for the doubly dominated pair condition: the
/// smaller root t of (d_i - t)(d_j - t) = s_i * s_j.
double pair_shift_limit(double d_i, double d_j, double s_i, double s_j);

/// Builds the split for a caller-chosen epsilon without choosing it; used to
/// probe smaller epsilons. Runs the same post-construction checks.
Decomposition decompose_with_epsilon(const Tensor& a, DecompositionKind kind,
                                     double epsilon);

/// True iff `d` satisfies every structural and class invariant of its kind
/// with respect to `a`.
bool is_valid_decomposition(const Tensor& a, const Decomposition& d);

}  // namespace btensor
