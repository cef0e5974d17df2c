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

#include <optional>
#include <vector>

#include "btensor/tensor.hpp"

namespace btensor {

struct Interval {
  double lo;
  double hi;

  bool contains(double x, double slack = 0.0) const {
    return x >= lo - slack && x <= hi + slack;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted, pairwise disjoint, non-adjacent closed intervals.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  /// Drops empty intervals (lo > hi) and merges overlapping or touching ones.
  explicit IntervalUnion(std::vector<Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(double x, double slack = 0.0) const;
  /// True iff every part of *this lies inside some part of `other`.
  bool subset_of(const IntervalUnion& other, double slack = 0.0) const;
  /// Smallest interval containing the union. Requires !empty().
  Interval hull() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> parts_;
};

/// Real eigenvalues of a Z-tensor lie in the union over rows of
/// [row_sum_i, diag_i - off_diag_sum_i]. Throws ClassViolation otherwise.
IntervalUnion intervals_z(const Tensor& a);

/// Lower endpoints L_i = diag_i - r_plus_i - sum(r_plus_i - a) used by the
/// even-order symmetric bound, one per row.
std::vector<double> lower_endpoints(const Tensor& a);
/// Upper endpoints U_j = diag_j - r_minus_j + sum(a - r_minus_j).
std::vector<double> upper_endpoints(const Tensor& a);

/// H-eigenvalues of an even-order symmetric tensor lie in [min L, max U].
/// Throws PreconditionError for odd order or asymmetric input.
IntervalUnion intervals_even_symmetric(const Tensor& a);

/// H-eigenvalues lie in the union of the per-row intervals [L_i, U_i] when
/// the order is odd or n = 2. Throws PreconditionError otherwise.
IntervalUnion intervals_odd_or_n2(const Tensor& a);

/// Gerschgorin-type comparison: [diag_i - abs_i, diag_i + abs_i] per row.
IntervalUnion intervals_gerschgorin(const Tensor& a);

/// m-uniform hypergraph on vertices 0..n-1.
class Hypergraph {
 public:
  /// Validates edges: m distinct in-range vertices each, no duplicate edges.
  /// Vertex order inside an edge is irrelevant; edges are stored sorted.
  Hypergraph(int n, int m, std::vector<std::vector<int>> edges);

  int vertex_count() const { return n_; }
  int edge_size() const { return m_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int max_degree() const;

 private:
  int n_;
  int m_;
  std::vector<std::vector<int>> edges_;
  std::vector<int> degrees_;
};

/// Degree diagonal minus the adjacency tensor normalized by 1/(m-1)!.
/// The result is a symmetric Z-tensor with zero row sums.
Tensor laplacian_tensor(const Hypergraph& g);

/// [0, 2 * max degree].
Interval laplacian_bounds(const Hypergraph& g);

enum class Verdict { PositiveDefinite, PositiveSemidefinite, IndefinitePossible };
enum class VerdictMethod { BTest, IntervalLowerBound };

struct DefinitenessVerdict {
  Verdict verdict;
  VerdictMethod method;
  std::optional<double> bound;  // min_i L_i
};

/// Sufficient-condition definiteness test for even-order symmetric tensors.
/// Never asserts indefiniteness; IndefinitePossible means "not certified".
DefinitenessVerdict definiteness(const Tensor& a);

}  // namespace btensor
