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

#include "btensor/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace btensor {

Polynomial::Polynomial(std::vector<double> coefficients, double cutoff)
    : coeffs_(std::move(coefficients)) {
  double largest = 0.0;
  for (double c : coeffs_) largest = std::max(largest, std::abs(c));
  const double threshold = cutoff * largest;
  while (!coeffs_.empty() &&
         (coeffs_.back() == 0.0 || std::abs(coeffs_.back()) <= threshold)) {
    coeffs_.pop_back();
  }
}

double Polynomial::operator()(double t) const {
  double v = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
  return v;
}

Polynomial Polynomial::derivative() const {
  std::vector<double> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d.push_back(static_cast<double>(k) * coeffs_[k]);
  }
  return Polynomial(std::move(d));
}

double Polynomial::cauchy_bound() const {
  double ratio = 0.0;
  const double lead = std::abs(coeffs_.back());
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
    ratio = std::max(ratio, std::abs(coeffs_[k]) / lead);
  }
  return 1.0 + ratio;
}

namespace {

int sign(double v) { return (v > 0) - (v < 0); }

double bisect(const Polynomial& p, double lo, double hi, int sign_lo,
              double width) {
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) return mid;
    if (hi - lo <= width * std::max(1.0, std::abs(mid))) return mid;
    const int s = sign(p(mid));
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

}  // namespace

std::vector<double> real_roots(const Polynomial& p, double width) {
  if (p.degree() <= 0) return {};
  const auto& c = p.coefficients();
  if (p.degree() == 1) return {-c[0] / c[1]};

  const double bound = p.cauchy_bound();
  std::vector<double> breaks{-bound};
  for (double r : real_roots(p.derivative(), width)) {
    if (r > -bound && r < bound) breaks.push_back(r);
  }
  breaks.push_back(bound);

  std::vector<double> roots;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double lo = breaks[k];
    const double hi = breaks[k + 1];
    const int s_lo = sign(p(lo));
    const int s_hi = sign(p(hi));
    if (s_lo == 0) {
      roots.push_back(lo);
    } else if (s_hi != 0 && s_lo != s_hi) {
      roots.push_back(bisect(p, lo, hi, s_lo, width));
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace btensor
