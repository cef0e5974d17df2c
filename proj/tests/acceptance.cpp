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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "btensor/classes.hpp"
#include "btensor/decompose.hpp"
#include "btensor/eigenloc.hpp"
#include "btensor/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

namespace {

using namespace btensor;
using testing::SuiteResult;

struct Outcome {
  bool ok = true;
  std::string failure;
  std::string summary;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
  void absorb(const std::string& name, const SuiteResult& r) {
    require(r.passed(), name + ": " + std::to_string(r.violations) + " of " +
                            std::to_string(r.checks) + " checks failed, first: " +
                            r.first_violation);
    if (!summary.empty()) summary += ", ";
    summary += name + " " + std::to_string(r.checks) + " checks";
    if (r.pairs > 0) summary += " over " + std::to_string(r.pairs) + " pairs";
  }
  const std::string& note() const { return ok ? summary : failure; }
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;  // 0 for no limit
  std::function<Outcome()> body;
};

Outcome all_ones_example() {
  Outcome v;
  const Tensor a = testing::all_ones(4, 3);
  const IntervalUnion even = intervals_even_symmetric(a);
  v.require(even == IntervalUnion({{0.0, 27.0}}), "even-order interval is not [0, 27]");
  const IntervalUnion ger = intervals_gerschgorin(a);
  v.require(ger == IntervalUnion({{-25.0, 27.0}}), "Gerschgorin interval is not [-25, 27]");
  const auto pairs = eigenpairs_n2(testing::all_ones(4, 2), 1e-8);
  v.require(pairs.size() == 2, "expected exactly two eigenpairs at n = 2");
  if (pairs.size() == 2) {
    v.require(pairs[0].lambda == 0.0 && pairs[1].lambda == 8.0, "eigenvalues are not {0, 8}");
    for (const auto& p : pairs) v.require(p.residual <= 1e-10, "residual above 1e-10");
  }
  return v;
}

Outcome kernel_example() {
  Outcome v;
  const Tensor a = testing::kernel_b_tensor();
  v.require(is_b(a), "not classified as B");
  v.require(residual(a, 0.0, Vector{{-4.0, 2.0, 3.0}}) <= 1e-9, "kernel residual above 1e-9");
  const Decomposition d = decompose_b(a);
  v.require(is_valid_decomposition(a, d), "B split fails its invariants");
  v.require(d.part_b + d.part_c == a, "B + C does not reproduce A");
  v.require(is_z(d.part_b) && is_b(d.part_b), "B part is not a Z B-tensor");
  v.require(is_b(d.part_c), "C part is not a B-tensor");
  for (std::size_t k = 0; k < a.size(); ++k) {
    v.require(d.part_c[k] >= 0.0, "C part has a negative entry");
  }
  return v;
}

Outcome counterexample() {
  Outcome v;
  const Tensor a = testing::doubly_b_counterexample();
  const ClassReport r = classify(a);
  v.require(r.flag("Z") && !r.flag("B") && r.flag("doublyB") && r.flag("SDDD") &&
                !r.flag("SDD"),
            "classification differs from {Z, not B, doubly B, SDDD, not SDD}");
  v.require(std::abs(polyeval(a, Vector{{0.9, 1.0}}) - (-0.2878)) <= 1e-10,
            "form at (0.9, 1) is not -0.2878");
  const Decomposition d = decompose_doubly_b(a);
  v.require(is_valid_decomposition(a, d), "doubly B split fails its invariants");
  for (int i = 0; i < a.dim(); ++i) {
    const auto row = d.part_c.row(i);
    for (std::size_t off = 0; off < row.size(); ++off) {
      const double expected = d.row_constants[i] +
                              (off == a.diagonal_offset_in_row(i) ? d.epsilon : 0.0);
      v.require(std::abs(row[off] - expected) <= 1e-15, "C is not row constant plus eps I");
    }
  }
  v.require(std::abs(d.epsilon - (2.0 - std::sqrt(3.0)) / 2.0) <= 1e-15,
            "epsilon differs from (2 - sqrt 3) / 2");
  return v;
}

Outcome ladder() {
  Outcome v;
  v.absorb("ladder", testing::equivalence_ladder(1000, 2024));
  return v;
}

Outcome heredity_and_cone() {
  Outcome v;
  v.absorb("heredity", testing::heredity(500, 7));
  v.absorb("cone", testing::cone(500, 8));
  v.absorb("lemmas", testing::converse_decomposition(500, 9));
  return v;
}

Outcome soundness() {
  Outcome v;
  v.absorb("n=2", testing::soundness_n2(300, 11));
  v.absorb("Z", testing::soundness_z(300, 12, 64));
  v.absorb("even symmetric", testing::soundness_even_symmetric(300, 13, 64));
  return v;
}

Outcome laplacian() {
  Outcome v;
  v.absorb("hypergraphs", testing::laplacian_suite(50, 14, 64));
  return v;
}

Outcome definiteness_verdicts() {
  Outcome v;
  const DefinitenessVerdict id = definiteness(Tensor::identity(4, 3));
  v.require(id.verdict == Verdict::PositiveDefinite &&
                id.method == VerdictMethod::BTest,
            "identity is not positive definite via the B test");
  const DefinitenessVerdict ones = definiteness(testing::all_ones(4, 3));
  v.require(ones.verdict == Verdict::PositiveSemidefinite,
            "all-ones is not positive semidefinite");
  v.absorb("symmetric B", testing::symmetric_b_definiteness(500, 15));
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "all-ones tensor intervals and n=2 spectrum", 1.0, all_ones_example},
      {"AC2", "order-4 kernel B-tensor and its B split", 1.0, kernel_example},
      {"AC3", "doubly B counterexample", 0.0, counterexample},
      {"AC4", "equivalence ladder on 1000 random tensors", 30.0, ladder},
      {"AC5", "heredity, cone and split-converse suites", 0.0, heredity_and_cone},
      {"AC6", "interval soundness against the eigenpair oracle", 300.0, soundness},
      {"AC7", "hypergraph Laplacian bounds", 0.0, laplacian},
      {"AC8", "definiteness verdicts", 0.0, definiteness_verdicts},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      v.require(false, "runtime " + std::to_string(seconds) + " s over the limit");
    }
    if (!v.ok) ++failures;
    std::printf("[%s] %s %s (%.2f s)%s%s\n", v.ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                v.note().empty() ? "" : ": ", v.note().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
