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

#include <string>
#include <vector>

#include "icbd/errors.h"

namespace icbd {
namespace {

constexpr int kMaxPivots = 1000000;

class Tableau {
 public:
  Tableau(int rows, int cols) : t_(rows, std::vector<Rational>(cols + 1)), basis_(rows, -1) {}

  std::vector<Rational>& row(int r) { return t_[r]; }
  int rows() const { return static_cast<int>(t_.size()); }
  int cols() const { return static_cast<int>(t_.empty() ? 0 : t_[0].size() - 1); }
  int& basis(int r) { return basis_[r]; }
  const Rational& rhs(int r) const { return t_[r].back(); }

  void Pivot(int pr, int pc) {
    Rational piv = t_[pr][pc];
    for (auto& v : t_[pr]) v /= piv;
    for (int r = 0; r < rows(); ++r) {
      if (r == pr || t_[r][pc] == 0) continue;
      Rational f = t_[r][pc];
      for (size_t c = 0; c < t_[r].size(); ++c) {
        if (t_[pr][c] != 0) t_[r][c] -= f * t_[pr][c];
      }
    }
    basis_[pr] = pc;
  }

  // Maximizes cost . x over columns with allowed[c]. False if unbounded.
  bool Optimize(const std::vector<Rational>& cost, const std::vector<char>& allowed,
                int& pivots) {
    while (true) {
      if (++pivots > kMaxPivots) Fail(ErrorCode::kLpDegenerate, "pivot bound exceeded");
      std::vector<char> is_basic(cols(), 0);
      for (int b : basis_) is_basic[b] = 1;
      int enter = -1;
      for (int c = 0; c < cols() && enter < 0; ++c) {
        if (!allowed[c] || is_basic[c]) continue;
        Rational d = cost[c];
        for (int r = 0; r < rows(); ++r) {
          if (t_[r][c] != 0) d -= cost[basis_[r]] * t_[r][c];
        }
        if (d > 0) enter = c;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int r = 0; r < rows(); ++r) {
        if (t_[r][enter] <= 0) continue;
        Rational ratio = rhs(r) / t_[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  void DropRow(int r) {
    t_.erase(t_.begin() + r);
    basis_.erase(basis_.begin() + r);
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution SolveLp(const LpProblem& p) {
  const int n = p.num_vars;
  const int m = static_cast<int>(p.rows.size());
  // Column layout: structural, one slack/surplus per inequality, artificials.
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  int next = n;
  for (int r = 0; r < m; ++r) {
    if (p.rows[r].sense != LpSense::kEq) slack_col[r] = next++;
  }
  const int first_art = next;
  for (int r = 0; r < m; ++r) art_col[r] = next++;
  const int total = next;

  Tableau tab(m, total);
  for (int r = 0; r < m; ++r) {
    const LpRow& src = p.rows[r];
    Rational sign = src.rhs < 0 ? -1 : 1;
    auto& row = tab.row(r);
    for (int c = 0; c < n && c < static_cast<int>(src.coeffs.size()); ++c) {
      row[c] = sign * src.coeffs[c];
    }
    if (src.sense == LpSense::kLe) row[slack_col[r]] = sign;
    if (src.sense == LpSense::kGe) row[slack_col[r]] = -sign;
    row[art_col[r]] = 1;
    row[total] = sign * src.rhs;
    tab.basis(r) = art_col[r];
  }

  int pivots = 0;
  std::vector<char> allowed(total, 1);
  std::vector<Rational> phase1(total);
  for (int c = first_art; c < total; ++c) phase1[c] = -1;
  tab.Optimize(phase1, allowed, pivots);
  Rational infeas = 0;
  for (int r = 0; r < tab.rows(); ++r) {
    if (tab.basis(r) >= first_art) infeas += tab.rhs(r);
  }
  LpSolution sol;
  if (infeas != 0) {
    sol.status = LpStatus::kInfeasible;
    return sol;
  }
  // Drive zero-valued artificials out of the basis; drop redundant rows.
  for (int r = tab.rows() - 1; r >= 0; --r) {
    if (tab.basis(r) < first_art) continue;
    int col = -1;
    for (int c = 0; c < first_art && col < 0; ++c) {
      if (tab.row(r)[c] != 0) col = c;
    }
    if (col >= 0) {
      tab.Pivot(r, col);
    } else {
      tab.DropRow(r);
    }
  }
  for (int c = first_art; c < total; ++c) allowed[c] = 0;
  std::vector<Rational> phase2(total);
  for (int c = 0; c < n && c < static_cast<int>(p.objective.size()); ++c) {
    phase2[c] = p.objective[c];
  }
  if (!tab.Optimize(phase2, allowed, pivots)) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }
  sol.status = LpStatus::kOptimal;
  sol.x.assign(n, Rational(0));
  for (int r = 0; r < tab.rows(); ++r) {
    if (tab.basis(r) < n) sol.x[tab.basis(r)] = tab.rhs(r);
  }
  sol.value = 0;
  for (int c = 0; c < n; ++c) sol.value += phase2[c] * sol.x[c];
  return sol;
}

}  // namespace icbd
