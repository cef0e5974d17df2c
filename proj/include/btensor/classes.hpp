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

#include <map>
#include <optional>
#include <string>

#include "btensor/errors.hpp"
#include "btensor/tensor.hpp"

namespace btensor {

// Membership predicates. Every strict inequality is evaluated exactly on the
// stored doubles; the `*_violation` variants return the first failing row
// (or ordered pair) and nullopt when the tensor is a member.

/// All off-diagonal entries are <= 0.
bool is_z(const Tensor& a);
std::optional<Witness> z_violation(const Tensor& a);

/// Row-sum characterization: sum_i > n^(m-1) * r_plus_i for every row.
bool is_b(const Tensor& a);
std::optional<Witness> b_violation(const Tensor& a, const RowStats& stats);

/// Non-strict variant of is_b.
bool is_b0(const Tensor& a);
std::optional<Witness> b0_violation(const Tensor& a, const RowStats& stats);

/// diag_i > r_plus_i for all i, and for all i != j
/// (diag_i - r_plus_i)(diag_j - r_plus_j) > plus_deficit_i * plus_deficit_j.
bool is_doubly_b(const Tensor& a);
std::optional<Witness> doubly_b_violation(const RowStats& stats);

/// Strictly diagonally dominated: diag_i > sum of |off-diagonal| in row i.
bool is_sdd(const Tensor& a);
std::optional<Witness> sdd_violation(const RowStats& stats);

/// Strictly doubly diagonally dominated.
bool is_sddd(const Tensor& a);
std::optional<Witness> sddd_violation(const RowStats& stats);

/// Subtracts r_plus of row i from every entry of row i. Always a Z-tensor.
Tensor a_plus(const Tensor& a);

/// Scales row k by sign(a_{k...k}); zero-diagonal rows become zero.
Tensor f_transform(const Tensor& a);

/// Whether f_transform(a) is a B-tensor, decided from the signed row
/// extremes of `a` without forming the transform.
bool check_f_b(const Tensor& a);
std::optional<Witness> f_b_violation(const Tensor& a, const RowStats& stats);

/// Whether f_transform(a) is a doubly B-tensor, decided on `a` directly.
bool check_f_doubly_b(const Tensor& a);
std::optional<Witness> f_doubly_b_violation(const Tensor& a,
                                            const RowStats& stats);

struct ClassReport {
  // Keys: Z, B, B0, doublyB, SDD, SDDD, F_B, F_doublyB.
  std::map<std::string, bool> flags;
  std::map<std::string, Witness> witnesses;

  bool flag(const std::string& name) const { return flags.at(name); }
};

/// Runs every predicate on one shared set of row statistics.
ClassReport classify(const Tensor& a);

}  // namespace btensor
