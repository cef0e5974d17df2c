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

#include "btensor/classes.hpp"

#include <cmath>

namespace btensor {
namespace {

double sign_of(double v) { return (v > 0) - (v < 0); }

Witness row_witness(int i, double lhs, double rhs) {
  return Witness{i, std::nullopt, lhs, rhs};
}

Witness pair_witness(int i, int j, double lhs, double rhs) {
  return Witness{i, j, lhs, rhs};
}

// Sum over off-diagonal entries of row i of |r - a|.
double signed_deficit(const Tensor& a, int i, double r) {
  const auto row = a.row(i);
  const std::size_t diag_off = a.diagonal_offset_in_row(i);
  double sum = 0.0;
  for (std::size_t off = 0; off < row.size(); ++off) {
    if (off != diag_off) sum += std::abs(r - row[off]);
  }
  return sum;
}

}  // namespace

std::optional<Witness> z_violation(const Tensor& a) {
  for (int i = 0; i < a.dim(); ++i) {
    const auto row = a.row(i);
    const std::size_t diag_off = a.diagonal_offset_in_row(i);
    for (std::size_t off = 0; off < row.size(); ++off) {
      if (off != diag_off && row[off] > 0) return row_witness(i, 0.0, row[off]);
    }
  }
  return std::nullopt;
}

bool is_z(const Tensor& a) { return !z_violation(a); }

std::optional<Witness> b_violation(const Tensor& a, const RowStats& stats) {
  const double scale = static_cast<double>(a.row_size());
  for (int i = 0; i < a.dim(); ++i) {
    const double rhs = scale * stats[i].r_plus;
    if (!(stats[i].row_sum > rhs)) return row_witness(i, stats[i].row_sum, rhs);
  }
  return std::nullopt;
}

bool is_b(const Tensor& a) { return !b_violation(a, row_stats(a)); }

std::optional<Witness> b0_violation(const Tensor& a, const RowStats& stats) {
  const double scale = static_cast<double>(a.row_size());
  for (int i = 0; i < a.dim(); ++i) {
    const double rhs = scale * stats[i].r_plus;
    if (!(stats[i].row_sum >= rhs)) {
      return row_witness(i, stats[i].row_sum, rhs);
    }
  }
  return std::nullopt;
}

bool is_b0(const Tensor& a) { return !b0_violation(a, row_stats(a)); }

std::optional<Witness> doubly_b_violation(const RowStats& stats) {
  const int n = static_cast<int>(stats.size());
  for (int i = 0; i < n; ++i) {
    if (!(stats[i].diag > stats[i].r_plus)) {
      return row_witness(i, stats[i].diag, stats[i].r_plus);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double lhs = (stats[i].diag - stats[i].r_plus) *
                         (stats[j].diag - stats[j].r_plus);
      const double rhs = stats[i].plus_deficit * stats[j].plus_deficit;
      if (!(lhs > rhs)) return pair_witness(i, j, lhs, rhs);
    }
  }
  return std::nullopt;
}

bool is_doubly_b(const Tensor& a) { return !doubly_b_violation(row_stats(a)); }

std::optional<Witness> sdd_violation(const RowStats& stats) {
  for (std::size_t i = 0; i < stats.size(); ++i) {
    if (!(stats[i].diag > stats[i].off_diag_abs_sum)) {
      return row_witness(static_cast<int>(i), stats[i].diag,
                         stats[i].off_diag_abs_sum);
    }
  }
  return std::nullopt;
}

bool is_sdd(const Tensor& a) { return !sdd_violation(row_stats(a)); }

std::optional<Witness> sddd_violation(const RowStats& stats) {
  const int n = static_cast<int>(stats.size());
  for (int i = 0; i < n; ++i) {
    if (!(stats[i].diag > 0)) return row_witness(i, stats[i].diag, 0.0);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double lhs = stats[i].diag * stats[j].diag;
      const double rhs = stats[i].off_diag_abs_sum * stats[j].off_diag_abs_sum;
      if (!(lhs > rhs)) return pair_witness(i, j, lhs, rhs);
    }
  }
  return std::nullopt;
}

bool is_sddd(const Tensor& a) { return !sddd_violation(row_stats(a)); }

Tensor a_plus(const Tensor& a) {
  Tensor out = a;
  for (int i = 0; i < a.dim(); ++i) {
    const double r_plus = row_stat(a, i).r_plus;
    for (double& v : out.row(i)) v -= r_plus;
  }
  return out;
}

Tensor f_transform(const Tensor& a) {
  Tensor out = a;
  for (int i = 0; i < a.dim(); ++i) {
    const double s = sign_of(a.diagonal(i));
    for (double& v : out.row(i)) v = s == 0 ? 0.0 : s * v;
  }
  return out;
}

std::optional<Witness> f_b_violation(const Tensor& a, const RowStats& stats) {
  for (int i = 0; i < a.dim(); ++i) {
    const double d = stats[i].diag;
    const double r = stats[i].r_signed;
    if (!(std::abs(d) > std::abs(r))) {
      return row_witness(i, std::abs(d), std::abs(r));
    }
    const double lhs = std::abs(d - r);
    const double rhs = signed_deficit(a, i, r);
    if (!(lhs > rhs)) return row_witness(i, lhs, rhs);
  }
  return std::nullopt;
}

bool check_f_b(const Tensor& a) { return !f_b_violation(a, row_stats(a)); }

std::optional<Witness> f_doubly_b_violation(const Tensor& a,
                                            const RowStats& stats) {
  const int n = a.dim();
  std::vector<double> gap(n);
  std::vector<double> deficit(n);
  for (int i = 0; i < n; ++i) {
    const double d = stats[i].diag;
    const double r = stats[i].r_signed;
    if (!(std::abs(d) > std::abs(r))) {
      return row_witness(i, std::abs(d), std::abs(r));
    }
    gap[i] = std::abs(d - r);
    deficit[i] = signed_deficit(a, i, r);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double lhs = gap[i] * gap[j];
      const double rhs = deficit[i] * deficit[j];
      if (!(lhs > rhs)) return pair_witness(i, j, lhs, rhs);
    }
  }
  return std::nullopt;
}

bool check_f_doubly_b(const Tensor& a) {
  return !f_doubly_b_violation(a, row_stats(a));
}

ClassReport classify(const Tensor& a) {
  const RowStats stats = row_stats(a);
  ClassReport report;
  auto record = [&report](const char* name, std::optional<Witness> w) {
    report.flags[name] = !w.has_value();
    if (w) report.witnesses.emplace(name, *w);
  };
  record("Z", z_violation(a));
  record("B", b_violation(a, stats));
  record("B0", b0_violation(a, stats));
  record("doublyB", doubly_b_violation(stats));
  record("SDD", sdd_violation(stats));
  record("SDDD", sddd_violation(stats));
  record("F_B", f_b_violation(a, stats));
  record("F_doublyB", f_doubly_b_violation(a, stats));
  return report;
}

}  // namespace btensor
