// Copyright 2026 The Interlace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/dp_engine.hpp"

#include <array>
#include <mutex>
#include <set>

namespace interlace {

const std::vector<Scenario>& scenario_classes(std::size_t k) {
  static std::array<std::vector<Scenario>, kFullEnumerationBagLimit + 1> cache;
  static std::once_flag once;
  if (k > kFullEnumerationBagLimit) {
    fail(ErrorKind::kGuard, "full enumeration supports bags of at most " + std::to_string(kFullEnumerationBagLimit) +
                                " vertices");
  }
  std::call_once(once, [] {
    for (std::size_t i = 0; i <= kFullEnumerationBagLimit; ++i) {
      std::set<std::string> seen;
      for (const auto& s : enumerate_scenarios(i)) {
        const auto c = canonical(s);
        if (seen.insert(encode(c)).second) cache[i].push_back(c);
      }
    }
  });
  return cache[k];
}

void check_bag_guard(const NiceTreeDecomposition& ntd, const EvalOptions& opt) {
  const std::size_t limit = std::min(opt.bag_limit, kMaxExtension);
  if (ntd.max_bag() > limit) {
    fail(ErrorKind::kGuard, "largest bag has " + std::to_string(ntd.max_bag()) + " vertices; limit is " +
                                std::to_string(limit));
  }
  if (opt.full_enumeration && ntd.max_bag() > kFullEnumerationBagLimit) {
    fail(ErrorKind::kGuard, "full enumeration supports bags of at most " + std::to_string(kFullEnumerationBagLimit) +
                                " vertices");
  }
}

}  // namespace interlace
