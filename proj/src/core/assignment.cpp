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

#include "core/assignment.hpp"

#include <cctype>

#include "core/error.hpp"

namespace interlace {

Assignment Assignment::uniform(std::size_t n, const mpq_class& x, const mpq_class& y, const mpq_class& u,
                               const mpq_class& v) {
  Assignment a;
  a.x.assign(n, x);
  a.y.assign(n, y);
  a.u = u;
  a.v = v;
  return a;
}

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    fail(ErrorKind::kInvalidArgument, "not a rational number: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) fail(ErrorKind::kInvalidArgument, "zero denominator in '" + std::string(text) + "'");
  mpq_class out(p, q);
  out.canonicalize();
  return out;
}

std::string format_rational(const mpq_class& q) { return q.get_str(10); }

}  // namespace interlace
