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

#include "btensor/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "btensor/polynomial.hpp"

namespace btensor {
namespace {

constexpr double kDedupTol = 1e-9;
constexpr double kCoefficientCutoff = 1e-12;
constexpr int kPowerIterationCap = 10'000;
constexpr int kNewtonIterationCap = 60;
constexpr int kStallWindow = 200;
constexpr double kMaxShift = 64.0;

double pow_int(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

Vector power_vector(const Vector& x, int k) {
  Vector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = pow_int(x[i], k);
  return out;
}

Eigen::Index argmax_abs(const Vector& x) {
  Eigen::Index k = 0;
  for (Eigen::Index i = 1; i < x.size(); ++i) {
    if (std::abs(x[i]) > std::abs(x[k])) k = i;
  }
  return k;
}

// Eigenvalue estimate read off the largest component of x.
double component_lambda(const Tensor& a, const Vector& x) {
  const Vector ax = contract(a, x);
  const Eigen::Index k = argmax_abs(x);
  return ax[k] / pow_int(x[k], a.order() - 1);
}

double max_abs_row_sum(const Tensor& a) {
  double bound = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    double s = 0.0;
    for (double v : a.row(i)) s += std::abs(v);
    bound = std::max(bound, s);
  }
  return bound;
}

EigenPair make_pair(const Tensor& a, const Vector& x) {
  const Vector dir = canonical_direction(x);
  const double lambda = component_lambda(a, dir) + 0.0;  // no -0 in output
  return {lambda, dir, residual(a, lambda, dir)};
}

bool same_pair(const EigenPair& p, const EigenPair& q) {
  return std::abs(p.lambda - q.lambda) <= kDedupTol &&
         (p.x - q.x).cwiseAbs().maxCoeff() <= kDedupTol;
}

bool pair_less(const EigenPair& p, const EigenPair& q) {
  if (p.lambda != q.lambda) return p.lambda < q.lambda;
  return std::lexicographical_compare(p.x.begin(), p.x.end(), q.x.begin(),
                                      q.x.end());
}

// Keeps the pairs within tolerance, merges near-duplicates (keeping the one
// with the smaller residual) and sorts.
std::vector<EigenPair> finalize(std::vector<EigenPair> candidates, double tol) {
  std::vector<EigenPair> kept;
  for (auto& c : candidates) {
    if (!(c.residual <= tol)) continue;
    auto it = std::find_if(kept.begin(), kept.end(),
                           [&](const EigenPair& k) { return same_pair(k, c); });
    if (it == kept.end()) {
      kept.push_back(std::move(c));
    } else if (c.residual < it->residual) {
      *it = std::move(c);
    }
  }
  std::sort(kept.begin(), kept.end(), pair_less);
  return kept;
}

// d (A x^(m-1))_i / d x_j.
Eigen::MatrixXd contract_jacobian(const Tensor& a, const Vector& x) {
  const int n = a.dim();
  const int len = a.order() - 1;
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  std::vector<int> digits(len, 0);
  std::vector<double> prefix(len + 1);
  std::vector<double> suffix(len + 1);
  for (int i = 0; i < n; ++i) {
    const auto row = a.row(i);
    std::fill(digits.begin(), digits.end(), 0);
    for (std::size_t off = 0; off < row.size(); ++off) {
      const double v = row[off];
      if (v != 0.0) {
        prefix[0] = 1.0;
        for (int p = 0; p < len; ++p) prefix[p + 1] = prefix[p] * x[digits[p]];
        suffix[len] = 1.0;
        for (int p = len - 1; p >= 0; --p) suffix[p] = suffix[p + 1] * x[digits[p]];
        for (int p = 0; p < len; ++p) {
          jac(i, digits[p]) += v * prefix[p] * suffix[p + 1];
        }
      }
      for (int p = len - 1; p >= 0; --p) {
        if (++digits[p] < n) break;
        digits[p] = 0;
      }
    }
  }
  return jac;
}

// Newton on F(x, lambda) = A x^(m-1) - lambda x^[m-1] with the largest
// component of x pinned to 1. Returns the polished direction.
Vector newton_polish(const Tensor& a, Vector x, double lambda, double scale) {
  const int n = a.dim();
  const int k1 = a.order() - 1;
  const Eigen::Index pin = argmax_abs(x);
  if (x[pin] == 0.0) return x;
  x /= x[pin];

  auto eval = [&](const Vector& v, double lam) {
    return Vector(contract(a, v) - lam * power_vector(v, k1));
  };
  Vector f = eval(x, lambda);
  double fnorm = f.cwiseAbs().maxCoeff();
  for (int it = 0; it < kNewtonIterationCap; ++it) {
    if (fnorm <= 1e-15 * scale) break;
    Eigen::MatrixXd jac = contract_jacobian(a, x);
    for (int i = 0; i < n; ++i) {
      jac(i, i) -= lambda * k1 * pow_int(x[i], k1 - 1);
    }
    for (int i = 0; i < n; ++i) jac(i, pin) = -pow_int(x[i], k1);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
    const Vector delta =
        lu.isInvertible() ? Vector(lu.solve(-f))
                          : Vector(jac.colPivHouseholderQr().solve(-f));
    if (!delta.allFinite()) break;

    bool improved = false;
    double step = 1.0;
    for (int halving = 0; halving < 30; ++halving, step *= 0.5) {
      Vector x_try = x + step * delta;
      x_try[pin] = 1.0;
      const double lambda_try = lambda + step * delta[pin];
      const Vector f_try = eval(x_try, lambda_try);
      const double norm_try = f_try.cwiseAbs().maxCoeff();
      if (norm_try < fnorm) {
        x = std::move(x_try);
        lambda = lambda_try;
        f = f_try;
        fnorm = norm_try;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return x;
}

// Real (m-1)-th root used by the fixed-point map. For even roots the sign
// is carried over from the previous iterate.
double signed_root(double y, int k, double previous) {
  const double mag = std::pow(std::abs(y), 1.0 / k);
  if (k % 2 == 1) return y < 0 ? -mag : mag;
  return previous < 0 ? -mag : mag;
}

// Shifted fixed-point iteration x <- (s A x^(m-1) + alpha x^[m-1])^[1/(m-1)].
// direction = +1 drifts toward large eigenvalues, -1 toward small ones.
// Stops early once the best residual stalls; Newton polishing finishes.
Vector shifted_iteration(const Tensor& a, Vector x, int direction,
                         double bound) {
  const int k1 = a.order() - 1;
  double alpha = bound;
  double previous_progress = -std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  int best_at = 0;
  for (int it = 0; it < kPowerIterationCap; ++it) {
    const Vector ax = contract(a, x);
    const Eigen::Index k = argmax_abs(x);
    const double lambda = ax[k] / pow_int(x[k], k1);
    const double res = (ax - lambda * power_vector(x, k1)).cwiseAbs().maxCoeff();
    if (res <= 1e-6 * bound) break;
    if (res < 0.99 * best) {
      best = res;
      best_at = it;
    } else if (it - best_at > kStallWindow) {
      break;
    }
    const double progress = direction * lambda;
    if (progress < previous_progress - 1e-12 * bound && alpha < kMaxShift * bound) {
      alpha *= 2.0;
    }
    previous_progress = progress;

    const Vector y = direction * ax + alpha * power_vector(x, k1);
    Vector next(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      next[i] = signed_root(y[i], k1, x[i]);
    }
    const double norm = next.cwiseAbs().maxCoeff();
    if (!(norm > 0) || !next.allFinite()) break;
    next /= norm;
    const double change = (next - x).cwiseAbs().maxCoeff();
    x = std::move(next);
    if (change <= 1e-15) break;
  }
  return x;
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Vector canonical_direction(const Vector& x) {
  const double norm = x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
  if (!(norm > 0)) throw InputError("eigenvector must be nonzero");
  Vector out = x / norm;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] != 0.0) {
      if (out[i] < 0) out = -out;
      break;
    }
  }
  return out;
}

double residual(const Tensor& a, double lambda, const Vector& x) {
  if (x.size() != a.dim()) {
    throw InputError("vector length " + std::to_string(x.size()) +
                     " does not match tensor dimension " +
                     std::to_string(a.dim()));
  }
  const double norm = x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
  if (!(norm > 0)) throw InputError("eigenvector must be nonzero");
  const Vector v = x / norm;
  const Vector r = contract(a, v) - lambda * power_vector(v, a.order() - 1);
  return r.cwiseAbs().maxCoeff();
}

std::vector<EigenPair> eigenpairs_n2(const Tensor& a, double tol) {
  if (a.dim() != 2) {
    throw PreconditionError("exhaustive eigenpairs need dimension 2, got " +
                            std::to_string(a.dim()));
  }
  const int m = a.order();
  // Row r of A applied to (1, t)^(m-1): the tuple at row offset `off` has
  // one factor t per 1-bit of `off`.
  std::vector<double> first(m, 0.0);
  std::vector<double> second(m, 0.0);
  for (std::size_t off = 0; off < a.row_size(); ++off) {
    const int power = std::popcount(off);
    first[power] += a.row(0)[off];
    second[power] += a.row(1)[off];
  }
  std::vector<double> g(2 * m - 1, 0.0);
  for (int k = 0; k < m; ++k) {
    g[k] += second[k];
    g[k + m - 1] -= first[k];
  }
  const Polynomial poly(std::move(g), kCoefficientCutoff);

  std::vector<double> ts;
  if (poly.is_zero()) {
    ts = {-1.0, 0.0, 1.0};
  } else {
    ts = real_roots(poly);
    // Roots of even multiplicity are extrema of g.
    for (double t : real_roots(poly.derivative())) ts.push_back(t);
  }

  const double scale = std::max(1.0, max_abs_row_sum(a));
  std::vector<EigenPair> candidates;
  for (double t : ts) {
    const Vector x{{1.0, t}};
    candidates.push_back(make_pair(a, x));
    const Vector polished = newton_polish(a, x, component_lambda(a, x), scale);
    if (polished.allFinite()) candidates.push_back(make_pair(a, polished));
  }
  candidates.push_back(make_pair(a, Vector{{0.0, 1.0}}));
  return finalize(std::move(candidates), tol);
}

std::vector<EigenPair> eigen_search(const Tensor& a, int restarts,
                                    std::uint64_t seed, double tol) {
  if (restarts < 1) {
    throw PreconditionError("eigen_search needs at least one restart");
  }
  const int n = a.dim();
  const double bound = max_abs_row_sum(a);
  const double scale = std::max(1.0, bound);
  std::mt19937_64 rng(seed);

  std::vector<EigenPair> candidates;
  auto consider = [&](const Vector& x) {
    if (!x.allFinite() || !(x.cwiseAbs().maxCoeff() > 0)) return;
    const Vector polished =
        newton_polish(a, x, component_lambda(a, canonical_direction(x)), scale);
    if (!polished.allFinite() || !(polished.cwiseAbs().maxCoeff() > 0)) return;
    candidates.push_back(make_pair(a, polished));
  };

  for (int r = 0; r < restarts; ++r) {
    Vector start(n);
    for (int i = 0; i < n; ++i) start[i] = 2.0 * unit_uniform(rng) - 1.0;
    if (!(start.cwiseAbs().maxCoeff() > 0)) start[0] = 1.0;
    start /= start.cwiseAbs().maxCoeff();

    if (bound == 0.0) {
      candidates.push_back(make_pair(a, start));
      continue;
    }
    consider(shifted_iteration(a, start, +1, bound));
    consider(shifted_iteration(a, start, -1, bound));
    consider(start);
  }
  return finalize(std::move(candidates), tol);
}

}  // namespace btensor
