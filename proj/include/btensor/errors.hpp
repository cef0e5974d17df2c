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
#include <stdexcept>
#include <string>

namespace btensor {

/// The failing row (or ordered row pair) of a violated class inequality.
/// Rows are 0-based here and converted to 1-based at the I/O boundary.
/// The inequality that failed is `lhs > rhs` (or `lhs >= rhs` for the
/// non-strict variants); `margin()` is `lhs - rhs`.
struct Witness {
  int row = 0;
  std::optional<int> other;  // set for pairwise conditions
  double lhs = 0.0;
  double rhs = 0.0;

  bool is_pair() const { return other.has_value(); }
  double margin() const { return lhs - rhs; }
};

/// Malformed input: bad shape, non-finite entries, out-of-range indices.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on a tensor outside its domain (odd order for
/// an even-order theorem, asymmetric input, wrong dimension, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The input does not belong to the class an operation requires.
class ClassViolation : public PreconditionError {
 public:
  ClassViolation(const std::string& what, std::optional<Witness> witness)
      : PreconditionError(what), witness_(std::move(witness)) {}

  const std::optional<Witness>& witness() const { return witness_; }

 private:
  std::optional<Witness> witness_;
};

/// A constructed quantity (e.g. a decomposition epsilon) collapsed to zero
/// in floating point.
class DegenerateMargin : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace btensor
