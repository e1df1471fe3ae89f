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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace interlace::gf2 {

/// Packed vector over GF(2). Bits at positions >= size() are always zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

  std::size_t size() const { return len_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool bit) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (bit) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& other);
  bool any() const;
  std::size_t count() const;
  /// Lowest set position, or size() if the vector is zero.
  std::size_t first_set() const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Square GF(2) matrix whose rows/columns are labelled by vertex ids.
/// Symmetry is an invariant of every matrix produced by the elimination
/// steps below; set() writes a single entry, set_sym() writes both.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim);
  SymMatrix(std::size_t dim, std::vector<std::uint32_t> labels);

  /// Builds a matrix from dense 0/1 rows. Throws if the rows are not square.
  static SymMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t dim() const { return rows_.size(); }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool bit) { rows_[r].set(c, bit); }
  void set_sym(std::size_t r, std::size_t c, bool bit) {
    rows_[r].set(c, bit);
    rows_[c].set(r, bit);
  }
  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }

  const std::vector<std::uint32_t>& labels() const { return labels_; }

  bool is_symmetric() const;
  void add_row(std::size_t src, std::size_t dst) { rows_[dst] ^= rows_[src]; }
  void add_column(std::size_t src, std::size_t dst);

  std::string to_string() const;

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<BitVec> rows_;
  std::vector<std::uint32_t> labels_;
};

/// Rank over GF(2) by plain Gaussian elimination; symmetry not required.
std::size_t rank(const SymMatrix& m);
inline std::size_t nullity(const SymMatrix& m) { return m.dim() - rank(m); }

/// M*a: elimination step with the self loop at position a. Requires (a,a)=1.
SymMatrix eliminate_loop(const SymMatrix& m, std::size_t a);

/// M*ab: elimination step with the edge ab where a carries no loop.
/// Requires (a,a)=0 and (a,b)=1. Never swaps rows or columns.
SymMatrix eliminate_edge(const SymMatrix& m, std::size_t a, std::size_t b);

/// Symmetric elimination using the positions in `vprime`, which must be
/// listed in increasing global vertex order.
SymMatrix sge_with_set(const SymMatrix& m, std::span<const std::size_t> vprime);

void eliminate_loop_in_place(SymMatrix& m, std::size_t a);
void eliminate_edge_in_place(SymMatrix& m, std::size_t a, std::size_t b);
void sge_with_set_in_place(SymMatrix& m, std::span<const std::size_t> vprime);

}  // namespace interlace::gf2
