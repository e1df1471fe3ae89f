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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace interlace {

/// x_A y_B u^du v^dv with A, B sorted vertex lists.
struct Monomial {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::uint32_t du = 0;
  std::uint32_t dv = 0;

  /// Number of vertices indexing the monomial's indeterminates.
  std::size_t quasi_degree() const { return a.size() + b.size(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Ordered by (quasi-degree, A, B, du, dv).
struct MonomialLess {
  bool operator()(const Monomial& l, const Monomial& r) const;
};

/// Sparse polynomial with big-integer coefficients that drops every
/// monomial of quasi-degree above `cap`. Zero coefficients are never stored.
class TruncPoly {
 public:
  using Terms = std::map<Monomial, mpz_class, MonomialLess>;

  TruncPoly() = default;
  explicit TruncPoly(std::size_t cap) : cap_(cap) {}
  static TruncPoly constant(std::size_t cap, const mpz_class& c);

  std::size_t cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const mpz_class& c);
  TruncPoly& operator+=(const TruncPoly& other);
  TruncPoly operator*(const TruncPoly& other) const;

  /// Multiplies by x_a (in_b false) or y_a (in_b true), u^du and v^dv.
  /// dv = -1 divides by v and requires every monomial to carry a v.
  TruncPoly times_vertex(Vertex a, bool in_b, int du, int dv) const;

  /// JSON array of {"A","B","u","v","coeff"} in monomial order, vertices as labels.
  std::string to_json(const Graph& g) const;
  static TruncPoly from_json(const std::string& text, const Graph& g, std::size_t cap);

  friend bool operator==(const TruncPoly& l, const TruncPoly& r) { return l.terms_ == r.terms_; }

 private:
  std::size_t cap_ = 0;
  Terms terms_;
};

}  // namespace interlace
