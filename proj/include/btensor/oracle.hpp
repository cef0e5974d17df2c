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

#include <cstdint>
#include <vector>

#include "btensor/tensor.hpp"

namespace btensor {

/// A real eigenpair A x^(m-1) = lambda x^[m-1]. `x` is scaled to max-norm 1
/// with its first nonzero component positive.
struct EigenPair {
  double lambda;
  Vector x;
  double residual;
};

/// Max-norm of A x^(m-1) - lambda x^[m-1] after scaling x to max-norm 1.
/// Throws InputError for the zero vector.
double residual(const Tensor& a, double lambda, const Vector& x);

/// Scales x to max-norm 1 with the first nonzero component positive.
Vector canonical_direction(const Vector& x);

/// Every H-eigenpair of a 2-dimensional tensor, up to root-finding accuracy.
///
/// The chart x = (1, t) reduces the eigenvalue equation to the univariate
/// g(t) = (A x^(m-1))_2 - (A x^(m-1))_1 t^(m-1) of degree <= 2(m-1); the
/// direction (0, 1) is tested separately. When g vanishes identically every
/// direction is an eigenvector for a single eigenvalue, and the directions
/// t = -1, 0, 1 plus (0, 1) are reported as representatives.
/// Pairs with residual above `tol` are discarded; duplicates within 1e-9 in
/// both lambda and direction are merged. Sorted by (lambda, x).
std::vector<EigenPair> eigenpairs_n2(const Tensor& a, double tol);

/// Heuristic H-eigenpair search for any dimension: from `restarts` seeded
/// random starts, shifted fixed-point iterations in both directions plus a
/// plain Newton run, each polished by Newton on (x, lambda). Returns the
/// distinct pairs with residual <= tol, sorted by (lambda, x). The result is
/// a subset of the H-spectrum; completeness is not claimed.
std::vector<EigenPair> eigen_search(const Tensor& a, int restarts,
                                    std::uint64_t seed, double tol);

}  // namespace btensor
