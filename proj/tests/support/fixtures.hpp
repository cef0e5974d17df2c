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

#include "btensor/tensor.hpp"

namespace btensor::testing {

inline Tensor all_ones(int m, int n) { return Tensor::constant(m, n, 1.0); }

// The order-4, dimension-3 B-tensor with a nonzero kernel vector (-4, 2, 3).
inline Tensor kernel_b_tensor() {
  Tensor a(4, 3);
  for (double& v : a.row(0)) v = 64.0;
  for (double& v : a.row(1)) v = 16.0;
  for (double& v : a.row(2)) v = 12.0;
  a({0, 0, 0, 0}) = 65.0;
  a({1, 1, 1, 1}) = 18.0;
  a({1, 0, 0, 1}) = 15.0;
  a({2, 2, 2, 2}) = 40.0 / 3.0;
  a({2, 0, 0, 2}) = 11.0;
  return a;
}

// Order 4, dimension 2: doubly B but neither B nor positive definite.
inline Tensor doubly_b_counterexample() {
  Tensor a(4, 2);
  a({0, 0, 0, 0}) = 2.0;
  a({1, 1, 1, 1}) = 2.0;
  a({0, 1, 1, 1}) = -1.0;
  a({1, 0, 1, 1}) = -1.0;
  a({1, 1, 0, 1}) = -1.0;
  a({1, 1, 1, 0}) = -1.0;
  return a;
}

// Order 3, dimension 2 Z-tensor: diagonal 2, a_122 = a_211 = -1.
inline Tensor small_z_tensor() {
  Tensor a(3, 2);
  a({0, 0, 0}) = 2.0;
  a({1, 1, 1}) = 2.0;
  a({0, 1, 1}) = -1.0;
  a({1, 0, 0}) = -1.0;
  return a;
}

inline Tensor matrix(double a11, double a12, double a21, double a22) {
  return Tensor(2, 2, std::vector<double>{a11, a12, a21, a22});
}

}  // namespace btensor::testing
