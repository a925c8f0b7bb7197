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

#include "icbd/generator.h"

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "icbd/errors.h"
#include "icbd/solvers.h"

namespace icbd {
namespace {

constexpr int kMaxAttempts = 100;

class Draw {
 public:
  explicit Draw(uint64_t seed) : rng_(seed) {}
  // Uniform in [0, n).
  int Below(int n) { return static_cast<int>(rng_() % static_cast<uint64_t>(n)); }
  // True with probability p.
  bool Chance(const Rational& p) {
    Rational q = p;
    q.canonicalize();
    const uint64_t den = q.get_den().get_ui();
    return rng_() % den < q.get_num().get_ui();
  }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

DynamicGame Attempt(const GeneratorSpec& spec, Draw& d) {
  std::vector<std::string> players;
  for (int i = 0; i < spec.player_count; ++i) players.push_back("P" + std::to_string(i + 1));
  GameBuilder b(players);
  std::vector<std::string> labels;
  int info = 0;
  std::function<int(int)> grow = [&](int depth) {
    const bool stop = depth >= spec.max_depth || (depth > 0 && d.Below(4) == 0);
    if (stop) {
      labels.push_back("z" + std::to_string(labels.size() + 1));
      return b.Terminal(labels.back());
    }
    std::vector<int> movers;
    if (spec.force_perfect_info || spec.player_count == 1) {
      movers.push_back(d.Below(spec.player_count));
    } else {
      for (int i = 0; i < spec.player_count; ++i) {
        if (d.Below(3) == 0) movers.push_back(i);
      }
      if (movers.empty()) movers.push_back(d.Below(spec.player_count));
    }
    std::vector<RawMove> moves;
    int total = 1;
    for (int i : movers) {
      const int n = 2 + d.Below(std::max(1, spec.max_actions - 1));
      RawMove m{players[i], "h" + std::to_string(++info), {}};
      for (int a = 0; a < n; ++a) m.actions.push_back(std::string(1, static_cast<char>('a' + a)));
      total *= n;
      moves.push_back(std::move(m));
    }
    // Distinct action letters per node keep strategy names readable.
    int shift = 0;
    for (auto& m : moves) {
      for (auto& a : m.actions) a = std::string(1, static_cast<char>(a[0] + shift));
      shift += static_cast<int>(m.actions.size());
    }
    std::vector<int> children;
    for (int c = 0; c < total; ++c) children.push_back(grow(depth + 1));
    return b.Decision(moves, children);
  };
  const int root = grow(0);
  for (int i = 0; i < spec.player_count; ++i) {
    std::vector<std::string> order = labels;
    std::shuffle(order.begin(), order.end(), d.rng());
    std::vector<std::vector<std::string>> tiers;
    for (const auto& z : order) {
      if (!tiers.empty() && d.Chance(spec.tie_probability)) {
        tiers.back().push_back(z);
      } else {
        tiers.push_back({z});
      }
    }
    b.Tiers(players[i], tiers);
  }
  return b.Build(root);
}

}  // namespace

DynamicGame GenerateGame(const GeneratorSpec& spec) {
  if (spec.player_count < 1 || spec.max_depth < 1 || spec.max_actions < 2 ||
      spec.tie_probability < 0 || spec.tie_probability > 1) {
    Fail(ErrorCode::kPreconditionViolated, "generator spec out of range");
  }
  GeneratorSpec s = spec;
  if (s.force_nrt) s.force_perfect_info = true;
  Draw d(spec.seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    DynamicGame g = Attempt(s, d);
    if (s.max_terminals > 0 && g.NumTerminals() > s.max_terminals) continue;
    if (s.force_nrt && CheckNrt(g).has_value()) continue;
    return g;
  }
  Fail(ErrorCode::kGenerationFailed,
       "no game met the flags after " + std::to_string(kMaxAttempts) + " draws");
}

}  // namespace icbd
