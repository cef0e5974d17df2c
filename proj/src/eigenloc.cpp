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

#include "btensor/eigenloc.hpp"

#include <algorithm>
#include <string>

#include "btensor/classes.hpp"

namespace btensor {

IntervalUnion::IntervalUnion(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& p) { return p.lo > p.hi; });
  std::sort(parts.begin(), parts.end(), [](const Interval& p, const Interval& q) {
    return p.lo < q.lo || (p.lo == q.lo && p.hi < q.hi);
  });
  for (const Interval& p : parts) {
    if (!parts_.empty() && p.lo <= parts_.back().hi) {
      parts_.back().hi = std::max(parts_.back().hi, p.hi);
    } else {
      parts_.push_back(p);
    }
  }
}

bool IntervalUnion::contains(double x, double slack) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const Interval& p) { return p.contains(x, slack); });
}

bool IntervalUnion::subset_of(const IntervalUnion& other, double slack) const {
  return std::all_of(parts_.begin(), parts_.end(), [&](const Interval& p) {
    return std::any_of(other.parts_.begin(), other.parts_.end(),
                       [&](const Interval& q) {
                         return p.lo >= q.lo - slack && p.hi <= q.hi + slack;
                       });
  });
}

Interval IntervalUnion::hull() const {
  return {parts_.front().lo, parts_.back().hi};
}

IntervalUnion intervals_z(const Tensor& a) {
  if (auto w = z_violation(a)) {
    throw ClassViolation("not a Z-tensor: row " + std::to_string(w->row + 1) +
                             " has a positive off-diagonal entry",
                         w);
  }
  std::vector<Interval> parts;
  for (const RowStat& s : row_stats(a)) {
    parts.push_back({s.row_sum, s.diag - s.off_diag_sum});
  }
  return IntervalUnion(std::move(parts));
}

std::vector<double> lower_endpoints(const Tensor& a) {
  std::vector<double> out;
  for (const RowStat& s : row_stats(a)) {
    out.push_back(s.diag - s.r_plus - s.plus_deficit);
  }
  return out;
}

std::vector<double> upper_endpoints(const Tensor& a) {
  std::vector<double> out;
  for (const RowStat& s : row_stats(a)) {
    out.push_back(s.diag - s.r_minus + s.minus_surplus);
  }
  return out;
}

IntervalUnion intervals_even_symmetric(const Tensor& a) {
  if (a.order() % 2 != 0) {
    throw PreconditionError("even-order bound needs an even order, got " +
                            std::to_string(a.order()));
  }
  if (!is_symmetric(a)) {
    throw PreconditionError("even-order bound needs a symmetric tensor");
  }
  // L_i <= diag_i <= U_i for every row, so the union of [L_i, U_j] over all
  // pairs (i, j) is exactly [min L, max U].
  const auto lower = lower_endpoints(a);
  const auto upper = upper_endpoints(a);
  return IntervalUnion({{*std::min_element(lower.begin(), lower.end()),
                         *std::max_element(upper.begin(), upper.end())}});
}

IntervalUnion intervals_odd_or_n2(const Tensor& a) {
  if (a.order() % 2 == 0 && a.dim() != 2) {
    throw PreconditionError(
        "row-wise bound needs an odd order or dimension 2, got order " +
        std::to_string(a.order()) + " and dimension " + std::to_string(a.dim()));
  }
  const auto lower = lower_endpoints(a);
  const auto upper = upper_endpoints(a);
  std::vector<Interval> parts;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    parts.push_back({lower[i], upper[i]});
  }
  return IntervalUnion(std::move(parts));
}

IntervalUnion intervals_gerschgorin(const Tensor& a) {
  std::vector<Interval> parts;
  for (const RowStat& s : row_stats(a)) {
    parts.push_back({s.diag - s.off_diag_abs_sum, s.diag + s.off_diag_abs_sum});
  }
  return IntervalUnion(std::move(parts));
}

Hypergraph::Hypergraph(int n, int m, std::vector<std::vector<int>> edges)
    : n_(n), m_(m), edges_(std::move(edges)), degrees_(n > 0 ? n : 0, 0) {
  if (n < 1) throw InputError("hypergraph needs at least one vertex");
  if (m < 2) throw InputError("hyperedges need at least two vertices");
  for (auto& e : edges_) {
    if (static_cast<int>(e.size()) != m) {
      throw InputError("edge has " + std::to_string(e.size()) +
                       " vertices, expected " + std::to_string(m));
    }
    std::sort(e.begin(), e.end());
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] < 0 || e[k] >= n) {
        throw InputError("edge vertex " + std::to_string(e[k] + 1) +
                         " out of range [1, " + std::to_string(n) + "]");
      }
      if (k > 0 && e[k] == e[k - 1]) {
        throw InputError("edge repeats vertex " + std::to_string(e[k] + 1));
      }
    }
  }
  auto sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("hypergraph contains a duplicate edge");
  }
  for (const auto& e : edges_) {
    for (int v : e) ++degrees_[v];
  }
}

int Hypergraph::max_degree() const {
  return *std::max_element(degrees_.begin(), degrees_.end());
}

Tensor laplacian_tensor(const Hypergraph& g) {
  const int m = g.edge_size();
  Tensor l(m, g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) {
    l[l.diagonal_index(i)] = g.degrees()[i];
  }
  double factorial = 1.0;
  for (int k = 2; k < m; ++k) factorial *= k;
  const double weight = -1.0 / factorial;
  std::vector<int> index(m);
  for (const auto& e : g.edges()) {
    for (int pos = 0; pos < m; ++pos) {
      std::vector<int> rest;
      for (int k = 0; k < m; ++k) {
        if (k != pos) rest.push_back(e[k]);
      }
      // `rest` is sorted, so this visits every permutation once.
      do {
        index[0] = e[pos];
        std::copy(rest.begin(), rest.end(), index.begin() + 1);
        l[l.flat_index(index)] += weight;
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  return l;
}

Interval laplacian_bounds(const Hypergraph& g) {
  return {0.0, 2.0 * g.max_degree()};
}

DefinitenessVerdict definiteness(const Tensor& a) {
  if (a.order() % 2 != 0) {
    throw PreconditionError("definiteness needs an even order, got " +
                            std::to_string(a.order()));
  }
  if (!is_symmetric(a)) {
    throw PreconditionError("definiteness needs a symmetric tensor");
  }
  const auto lower = lower_endpoints(a);
  const double bound = *std::min_element(lower.begin(), lower.end());
  if (is_b(a)) {
    return {Verdict::PositiveDefinite, VerdictMethod::BTest, bound};
  }
  if (bound > 0) {
    return {Verdict::PositiveDefinite, VerdictMethod::IntervalLowerBound, bound};
  }
  if (bound >= 0) {
    return {Verdict::PositiveSemidefinite, VerdictMethod::IntervalLowerBound,
            bound};
  }
  return {Verdict::IndefinitePossible, VerdictMethod::IntervalLowerBound, bound};
}

}  // namespace btensor
