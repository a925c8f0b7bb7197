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

#ifndef ICBD_TESTS_TEST_UTIL_H_
#define ICBD_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "icbd/errors.h"
#include "icbd/generator.h"
#include "icbd/strategies.h"

namespace icbd {
namespace testing {

inline DynamicGame SmallGame(uint64_t seed, int players = 2, int depth = 3, int actions = 3,
                             bool perfect_info = false) {
  GeneratorSpec spec;
  spec.seed = seed;
  spec.player_count = players;
  spec.max_depth = depth;
  spec.max_actions = actions;
  spec.force_perfect_info = perfect_info;
  return GenerateGame(spec);
}

inline std::vector<std::string> Names(const StrategySpace& sp, int i, const std::vector<int>& set) {
  std::vector<std::string> out;
  for (int s : set) out.push_back(sp.Name(i, s));
  return out;
}

inline std::vector<int> Ids(const StrategySpace& sp, int i, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) out.push_back(sp.Find(i, n));
  return out;
}

// Returned by CodeOf when nothing was thrown.
inline constexpr ErrorCode kNoError = static_cast<ErrorCode>(-1);

inline ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const IcbdError& e) {
    return e.code();
  }
  return kNoError;
}

}  // namespace testing
}  // namespace icbd

#endif  // ICBD_TESTS_TEST_UTIL_H_
