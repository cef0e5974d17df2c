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

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "btensor/errors.hpp"

namespace btensor {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

// n^k, or 0 if the result would exceed `cap`.
inline std::size_t checked_power(std::size_t n, int k, std::size_t cap) {
  std::size_t result = 1;
  for (int i = 0; i < k; ++i) {
    if (n != 0 && result > cap / n) return 0;
    result *= n;
  }
  return result <= cap ? result : 0;
}

// Enumerates index tuples of a given length over [0, n) in lexicographic
// order and keeps the running product x[t_0] * x[t_1] * ... up to date.
// The product of a tuple is always formed left to right, so every caller
// sees the same rounding for the same tuple.
template <typename Scalar>
class ProductOdometer {
 public:
  ProductOdometer(const VectorX<Scalar>& x, int length)
      : x_(x), digits_(length, 0), prefix_(length + 1, Scalar(1)) {
    refresh(0);
  }

  Scalar product() const { return prefix_.back(); }
  const std::vector<int>& digits() const { return digits_; }

  void next() {
    const int n = static_cast<int>(x_.size());
    int p = static_cast<int>(digits_.size()) - 1;
    while (p >= 0 && digits_[p] == n - 1) {
      digits_[p] = 0;
      --p;
    }
    if (p < 0) {
      refresh(0);
      return;
    }
    ++digits_[p];
    refresh(p);
  }

 private:
  void refresh(int from) {
    for (std::size_t k = from; k < digits_.size(); ++k) {
      prefix_[k + 1] = prefix_[k] * x_[digits_[k]];
    }
  }

  const VectorX<Scalar>& x_;
  std::vector<int> digits_;
  std::vector<Scalar> prefix_;
};

}  // namespace detail

/// Dense real m-th order n-dimensional hypermatrix.
///
/// Entries are stored row-major in lexicographic order of the 0-based
/// multi-index (i_1, ..., i_m), so row i (all entries with first index i)
/// is the contiguous block [i * n^(m-1), (i + 1) * n^(m-1)).
template <typename Scalar>
class BasicTensor {
 public:
  using Vector = VectorX<Scalar>;

  static constexpr std::size_t kDefaultEntryCap = 100'000'000;

  BasicTensor(int order, int dim, std::size_t entry_cap = kDefaultEntryCap)
      : order_(order), dim_(dim) {
    init_shape(entry_cap);
    data_ = Vector::Zero(static_cast<Eigen::Index>(size_));
  }

  BasicTensor(int order, int dim, Vector entries,
              std::size_t entry_cap = kDefaultEntryCap)
      : order_(order), dim_(dim), data_(std::move(entries)) {
    init_shape(entry_cap);
    if (static_cast<std::size_t>(data_.size()) != size_) {
      throw InputError("tensor of order " + std::to_string(order) +
                       " and dimension " + std::to_string(dim) + " needs " +
                       std::to_string(size_) + " entries, got " +
                       std::to_string(data_.size()));
    }
    for (Eigen::Index k = 0; k < data_.size(); ++k) {
      if (!std::isfinite(static_cast<double>(data_[k]))) {
        throw InputError("tensor entry " + std::to_string(k) +
                         " is not finite");
      }
    }
  }

  BasicTensor(int order, int dim, const std::vector<Scalar>& entries,
              std::size_t entry_cap = kDefaultEntryCap)
      : BasicTensor(order, dim,
                    Eigen::Map<const Vector>(entries.data(),
                                             static_cast<Eigen::Index>(
                                                 entries.size())),
                    entry_cap) {}

  static BasicTensor zeros(int order, int dim) {
    return BasicTensor(order, dim);
  }

  static BasicTensor constant(int order, int dim, Scalar value) {
    BasicTensor t(order, dim);
    t.data_.setConstant(value);
    return t;
  }

  /// Diagonal entries 1, everything else 0.
  static BasicTensor identity(int order, int dim) {
    BasicTensor t(order, dim);
    for (int i = 0; i < dim; ++i) t.data_[t.diagonal_index(i)] = Scalar(1);
    return t;
  }

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t size() const { return size_; }
  /// Number of entries per row, n^(m-1).
  std::size_t row_size() const { return row_size_; }

  const Vector& entries() const { return data_; }

  Scalar operator[](std::size_t flat) const { return data_[flat]; }
  Scalar& operator[](std::size_t flat) { return data_[flat]; }

  Scalar operator()(std::span<const int> index) const {
    return data_[flat_index(index)];
  }
  Scalar operator()(std::initializer_list<int> index) const {
    return (*this)(std::span<const int>(index.begin(), index.size()));
  }
  Scalar& operator()(std::initializer_list<int> index) {
    return data_[flat_index(std::span<const int>(index.begin(), index.size()))];
  }

  std::size_t flat_index(std::span<const int> index) const {
    if (static_cast<int>(index.size()) != order_) {
      throw InputError("multi-index has " + std::to_string(index.size()) +
                       " components, tensor order is " +
                       std::to_string(order_));
    }
    std::size_t flat = 0;
    for (int i : index) {
      if (i < 0 || i >= dim_) {
        throw InputError("index " + std::to_string(i) + " out of range [0, " +
                         std::to_string(dim_) + ")");
      }
      flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return flat;
  }

  std::vector<int> multi_index(std::size_t flat) const {
    std::vector<int> index(order_);
    for (int k = order_ - 1; k >= 0; --k) {
      index[k] = static_cast<int>(flat % static_cast<std::size_t>(dim_));
      flat /= static_cast<std::size_t>(dim_);
    }
    return index;
  }

  /// Flat index of a_{i...i}.
  std::size_t diagonal_index(int i) const {
    return static_cast<std::size_t>(i) * (row_size_ + diag_stride_);
  }
  /// Offset of a_{i...i} inside row i.
  std::size_t diagonal_offset_in_row(int i) const {
    return static_cast<std::size_t>(i) * diag_stride_;
  }
  Scalar diagonal(int i) const { return data_[diagonal_index(i)]; }

  std::span<const Scalar> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * row_size_, row_size_};
  }
  std::span<Scalar> row(int i) {
    return {data_.data() + static_cast<std::size_t>(i) * row_size_, row_size_};
  }

  template <typename Other>
  BasicTensor<Other> cast() const {
    return BasicTensor<Other>(order_, dim_, data_.template cast<Other>().eval());
  }

  BasicTensor& operator+=(const BasicTensor& other) {
    check_same_shape(other);
    data_ += other.data_;
    return *this;
  }
  BasicTensor& operator-=(const BasicTensor& other) {
    check_same_shape(other);
    data_ -= other.data_;
    return *this;
  }
  BasicTensor& operator*=(Scalar c) {
    data_ *= c;
    return *this;
  }

  friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) {
    return a += b;
  }
  friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) {
    return a -= b;
  }
  friend BasicTensor operator*(Scalar c, BasicTensor a) { return a *= c; }
  friend BasicTensor operator*(BasicTensor a, Scalar c) { return a *= c; }
  friend BasicTensor operator-(BasicTensor a) {
    a.data_ = -a.data_;
    return a;
  }

  /// Exact entrywise equality (bitwise up to signed zeros).
  friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
    return a.order_ == b.order_ && a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  void init_shape(std::size_t entry_cap) {
    if (order_ < 2) {
      throw InputError("tensor order must be >= 2, got " +
                       std::to_string(order_));
    }
    if (dim_ < 1) {
      throw InputError("tensor dimension must be >= 1, got " +
                       std::to_string(dim_));
    }
    size_ = detail::checked_power(dim_, order_, entry_cap);
    if (size_ == 0) {
      throw InputError("tensor with dimension " + std::to_string(dim_) +
                       " and order " + std::to_string(order_) +
                       " exceeds the entry cap of " + std::to_string(entry_cap));
    }
    row_size_ = size_ / static_cast<std::size_t>(dim_);
    diag_stride_ = 0;
    std::size_t power = 1;
    for (int k = 0; k < order_ - 1; ++k) {
      diag_stride_ += power;
      power *= static_cast<std::size_t>(dim_);
    }
  }

  void check_same_shape(const BasicTensor& other) const {
    if (order_ != other.order_ || dim_ != other.dim_) {
      throw InputError("tensor shapes differ");
    }
  }

  int order_;
  int dim_;
  std::size_t size_ = 0;
  std::size_t row_size_ = 0;
  std::size_t diag_stride_ = 0;  // 1 + n + ... + n^(m-2)
  Vector data_;
};

using Tensor = BasicTensor<double>;
using Vector = VectorX<double>;

/// Per-row quantities every class predicate is built from.
template <typename Scalar>
struct BasicRowStat {
  Scalar diag{};
  Scalar r_plus{};    // max(0, largest off-diagonal entry)
  Scalar r_minus{};   // min(0, smallest off-diagonal entry)
  Scalar r_signed{};  // r_plus, 0 or r_minus by the sign of diag
  Scalar row_sum{};
  Scalar off_diag_sum{};
  Scalar off_diag_abs_sum{};
  Scalar plus_deficit{};   // sum over off-diagonals of (r_plus - a)
  Scalar minus_surplus{};  // sum over off-diagonals of (a - r_minus)
};

using RowStat = BasicRowStat<double>;
using RowStats = std::vector<RowStat>;

/// Nonempty strictly increasing set of 0-based indices.
class IndexSet {
 public:
  explicit IndexSet(std::vector<int> members) : members_(std::move(members)) {
    if (members_.empty()) throw InputError("index set is empty");
    for (std::size_t k = 0; k < members_.size(); ++k) {
      if (members_[k] < 0) throw InputError("index set member is negative");
      if (k > 0 && members_[k] <= members_[k - 1]) {
        throw InputError("index set must be strictly increasing");
      }
    }
  }

  static IndexSet full(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return IndexSet(std::move(all));
  }

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }

  void check_fits(int n) const {
    if (members_.back() >= n) {
      throw InputError("index " + std::to_string(members_.back() + 1) +
                       " out of range for dimension " + std::to_string(n));
    }
  }

 private:
  std::vector<int> members_;
};

/// A x^(m-1): component i is the sum over all (i_2..i_m) of
/// a_{i i_2..i_m} x_{i_2}...x_{i_m}, accumulated in lexicographic order.
template <typename Scalar>
VectorX<Scalar> contract(const BasicTensor<Scalar>& a,
                         const std::type_identity_t<VectorX<Scalar>>& x) {
  if (x.size() != a.dim()) {
    throw InputError("vector length " + std::to_string(x.size()) +
                     " does not match tensor dimension " +
                     std::to_string(a.dim()));
  }
  VectorX<Scalar> out(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    const auto row = a.row(i);
    detail::ProductOdometer<Scalar> tuple(x, a.order() - 1);
    Scalar sum(0);
    for (std::size_t off = 0; off < row.size(); ++off, tuple.next()) {
      sum += row[off] * tuple.product();
    }
    out[i] = sum;
  }
  return out;
}

/// The homogeneous form A x^m.
template <typename Scalar>
Scalar polyeval(const BasicTensor<Scalar>& a,
                const std::type_identity_t<VectorX<Scalar>>& x) {
  if (x.size() != a.dim()) {
    throw InputError("vector length " + std::to_string(x.size()) +
                     " does not match tensor dimension " +
                     std::to_string(a.dim()));
  }
  detail::ProductOdometer<Scalar> tuple(x, a.order());
  Scalar sum(0);
  const auto& data = a.entries();
  for (std::size_t k = 0; k < a.size(); ++k, tuple.next()) {
    sum += data[k] * tuple.product();
  }
  return sum;
}

template <typename Scalar>
BasicRowStat<Scalar> row_stat(const BasicTensor<Scalar>& a, int i) {
  const auto row = a.row(i);
  const std::size_t diag_off = a.diagonal_offset_in_row(i);
  BasicRowStat<Scalar> s;
  s.diag = row[diag_off];
  for (std::size_t off = 0; off < row.size(); ++off) {
    const Scalar v = row[off];
    s.row_sum += v;
    if (off == diag_off) continue;
    s.off_diag_sum += v;
    s.off_diag_abs_sum += std::abs(v);
    s.r_plus = std::max(s.r_plus, v);
    s.r_minus = std::min(s.r_minus, v);
  }
  for (std::size_t off = 0; off < row.size(); ++off) {
    if (off == diag_off) continue;
    s.plus_deficit += s.r_plus - row[off];
    s.minus_surplus += row[off] - s.r_minus;
  }
  if (s.diag > 0) {
    s.r_signed = s.r_plus;
  } else if (s.diag < 0) {
    s.r_signed = s.r_minus;
  }
  return s;
}

template <typename Scalar>
std::vector<BasicRowStat<Scalar>> row_stats(const BasicTensor<Scalar>& a) {
  std::vector<BasicRowStat<Scalar>> stats;
  stats.reserve(a.dim());
  for (int i = 0; i < a.dim(); ++i) stats.push_back(row_stat(a, i));
  return stats;
}

/// Entries whose indices all lie in `j`, re-indexed consecutively.
template <typename Scalar>
BasicTensor<Scalar> principal_subtensor(const BasicTensor<Scalar>& a,
                                        const IndexSet& j) {
  j.check_fits(a.dim());
  const auto& members = j.members();
  BasicTensor<Scalar> sub(a.order(), j.size());
  std::vector<int> local(a.order(), 0);
  std::vector<int> global(a.order());
  for (std::size_t k = 0; k < sub.size(); ++k) {
    for (int p = 0; p < a.order(); ++p) global[p] = members[local[p]];
    sub[k] = a(global);
    for (int p = a.order() - 1; p >= 0; --p) {
      if (++local[p] < j.size()) break;
      local[p] = 0;
    }
  }
  return sub;
}

/// True iff every entry equals (within `tol`) the entries at all
/// permutations of its multi-index.
template <typename Scalar>
bool is_symmetric(const BasicTensor<Scalar>& a, Scalar tol = Scalar(0)) {
  const int m = a.order();
  const int n = a.dim();
  std::vector<int> canonical(m, 0);
  while (true) {
    const Scalar ref = a(canonical);
    std::vector<int> perm = canonical;
    while (std::next_permutation(perm.begin(), perm.end())) {
      if (std::abs(a(perm) - ref) > tol) return false;
    }
    // Advance to the next nondecreasing multi-index.
    int p = m - 1;
    while (p >= 0 && canonical[p] == n - 1) --p;
    if (p < 0) break;
    ++canonical[p];
    for (int q = p + 1; q < m; ++q) canonical[q] = canonical[p];
  }
  return true;
}

}  // namespace btensor
