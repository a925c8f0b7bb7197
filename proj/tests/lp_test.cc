// Copyright 2026 The ICBD Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "icbd/lp.h"

#include <random>
#include <vector>

#include "doctest.h"

namespace icbd {
namespace {

LpRow Row(std::vector<Rational> coeffs, LpSense sense, Rational rhs) {
  LpRow row;
  row.coeffs = std::move(coeffs);
  row.sense = sense;
  row.rhs = rhs;
  return row;
}

TEST_CASE("two-variable optimum at a fractional vertex") {
  LpProblem p;
  p.num_vars = 2;
  p.objective = {1, 1};
  p.rows = {Row({1, 2}, LpSense::kLe, 4), Row({3, 1}, LpSense::kLe, 6)};
  const LpSolution s = SolveLp(p);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.value == Rational(14, 5));
  CHECK(s.x[0] == Rational(8, 5));
  CHECK(s.x[1] == Rational(6, 5));
}

TEST_CASE("infeasible and unbounded programs") {
  LpProblem p;
  p.num_vars = 2;
  p.objective = {1, 0};
  p.rows = {Row({1, 1}, LpSense::kLe, 1), Row({1, 1}, LpSense::kGe, 2)};
  CHECK(SolveLp(p).status == LpStatus::kInfeasible);

  LpProblem q;
  q.num_vars = 2;
  q.objective = {1, 1};
  q.rows = {Row({1, -1}, LpSense::kLe, 1)};
  CHECK(SolveLp(q).status == LpStatus::kUnbounded);
}

TEST_CASE("equality and negative right-hand sides") {
  LpProblem p;
  p.num_vars = 3;
  p.objective = {-1, -2, 0};
  p.rows = {Row({1, 1, 1}, LpSense::kEq, 1), Row({-1, 0, 0}, LpSense::kLe, Rational(-1, 3))};
  const LpSolution s = SolveLp(p);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.value == Rational(-1, 3));
  CHECK(s.x[0] + s.x[1] + s.x[2] == 1);
  CHECK(s.x[0] >= Rational(1, 3));
}

TEST_CASE("a classic cycling example terminates") {
  LpProblem p;
  p.num_vars = 4;
  p.objective = {Rational(3, 4), -20, Rational(1, 2), -6};
  p.rows = {Row({Rational(1, 4), -8, -1, 9}, LpSense::kLe, 0),
            Row({Rational(1, 2), -12, Rational(-1, 2), 3}, LpSense::kLe, 0),
            Row({0, 0, 1, 0}, LpSense::kLe, 1)};
  const LpSolution s = SolveLp(p);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.value == Rational(5, 4));
}

// Brute force over intersections of constraint lines, including the axes.
Rational VertexOptimum(const LpProblem& p) {
  std::vector<LpRow> lines = p.rows;
  lines.push_back(Row({1, 0}, LpSense::kGe, 0));
  lines.push_back(Row({0, 1}, LpSense::kGe, 0));
  bool found = false;
  Rational best;
  for (size_t a = 0; a < lines.size(); ++a) {
    for (size_t b = a + 1; b < lines.size(); ++b) {
      const Rational det = lines[a].coeffs[0] * lines[b].coeffs[1] -
                           lines[a].coeffs[1] * lines[b].coeffs[0];
      if (det == 0) continue;
      const Rational x = (lines[a].rhs * lines[b].coeffs[1] - lines[a].coeffs[1] * lines[b].rhs) / det;
      const Rational y = (lines[a].coeffs[0] * lines[b].rhs - lines[a].rhs * lines[b].coeffs[0]) / det;
      bool ok = x >= 0 && y >= 0;
      for (const auto& r : p.rows) {
        const Rational lhs = r.coeffs[0] * x + r.coeffs[1] * y;
        ok = ok && (r.sense == LpSense::kLe ? lhs <= r.rhs : lhs >= r.rhs);
      }
      if (!ok) continue;
      const Rational v = p.objective[0] * x + p.objective[1] * y;
      if (!found || v > best) best = v;
      found = true;
    }
  }
  return best;
}

TEST_CASE("random bounded programs match vertex enumeration") {
  std::mt19937_64 rng(21);
  auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
  for (int t = 0; t < 300; ++t) {
    LpProblem p;
    p.num_vars = 2;
    p.objective = {draw(-5, 5), draw(-5, 5)};
    // A box keeps the program bounded and the origin keeps it feasible.
    p.rows = {Row({1, 0}, LpSense::kLe, draw(1, 9)), Row({0, 1}, LpSense::kLe, draw(1, 9))};
    const int extra = draw(1, 4);
    for (int k = 0; k < extra; ++k) {
      p.rows.push_back(Row({draw(-4, 6), draw(-4, 6)}, LpSense::kLe, draw(0, 12)));
    }
    const LpSolution s = SolveLp(p);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.value == VertexOptimum(p));
    CHECK(p.objective[0] * s.x[0] + p.objective[1] * s.x[1] == s.value);
  }
}

}  // namespace
}  // namespace icbd
