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

namespace btensor {

/// Real univariate polynomial, coefficients in ascending degree order.
class Polynomial {
 public:
  Polynomial() = default;
  /// Trailing (leading-degree) coefficients whose magnitude is at most
  /// `cutoff` times the largest coefficient magnitude are dropped.
  explicit Polynomial(std::vector<double> coefficients, double cutoff = 0.0);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<double>& coefficients() const { return coeffs_; }

  double operator()(double t) const;
  Polynomial derivative() const;

  /// Every real root lies strictly inside (-bound, bound).
  double cauchy_bound() const;

 private:
  std::vector<double> coeffs_;
};

/// Real roots of `p` found by splitting the line at the sign-change roots of
/// p' (recursively) and bisecting every monotone piece whose endpoints have
/// opposite signs. Roots where p touches zero without changing sign are
/// returned only when p vanishes exactly at a breakpoint; callers that need
/// them should also inspect the roots of p'. Result is sorted ascending.
/// Bisection stops at relative width `width`.
std::vector<double> real_roots(const Polynomial& p, double width = 1e-13);

}  // namespace btensor
