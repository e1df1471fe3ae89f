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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace interlace {

/// Values for every indeterminate of C(G): x_a, y_a per vertex, u and v.
struct Assignment {
  std::vector<mpq_class> x;
  std::vector<mpq_class> y;
  mpq_class u = 1;
  mpq_class v = 1;

  static Assignment uniform(std::size_t n, const mpq_class& x, const mpq_class& y, const mpq_class& u,
                            const mpq_class& v);
  static Assignment ones(std::size_t n) { return uniform(n, 1, 1, 1, 1); }
};

/// Accepts "p/q" or an integer, optionally signed. Throws on anything else.
mpq_class parse_rational(std::string_view text);
std::string format_rational(const mpq_class& q);

}  // namespace interlace
