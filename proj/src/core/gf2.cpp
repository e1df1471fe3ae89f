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

#include "core/gf2.hpp"

#include <algorithm>
#include <bit>

#include "core/error.hpp"

namespace interlace::gf2 {

BitVec& BitVec::operator^=(const BitVec& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVec::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVec::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return len_;
}

SymMatrix::SymMatrix(std::size_t dim) : rows_(dim, BitVec(dim)), labels_(dim) {
  for (std::size_t i = 0; i < dim; ++i) labels_[i] = static_cast<std::uint32_t>(i);
}

SymMatrix::SymMatrix(std::size_t dim, std::vector<std::uint32_t> labels)
    : rows_(dim, BitVec(dim)), labels_(std::move(labels)) {
  if (labels_.size() != dim) fail(ErrorKind::kInvalidArgument, "label count does not match dimension");
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  SymMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) fail(ErrorKind::kInvalidArgument, "matrix is not square");
    for (std::size_t c = 0; c < rows.size(); ++c) m.set(r, c, rows[r][c] & 1);
  }
  return m;
}

bool SymMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = r + 1; c < dim(); ++c) {
      if (get(r, c) != get(c, r)) return false;
    }
  }
  return true;
}

void SymMatrix::add_column(std::size_t src, std::size_t dst) {
  for (auto& row : rows_) {
    if (row.get(src)) row.flip(dst);
  }
}

std::string SymMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = 0; c < dim(); ++c) out += get(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::size_t rank(const SymMatrix& m) {
  std::vector<BitVec> rows;
  rows.reserve(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) rows.push_back(m.row(r));
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.dim() && rk < rows.size(); ++col) {
    std::size_t pivot = rk;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rk], rows[pivot]);
    for (std::size_t r = rk + 1; r < rows.size(); ++r) {
      if (rows[r].get(col)) rows[r] ^= rows[rk];
    }
    ++rk;
  }
  return rk;
}

void eliminate_loop_in_place(SymMatrix& m, std::size_t a) {
  if (!m.get(a, a)) fail(ErrorKind::kInvalidArgument, "eliminate_loop: no self loop at pivot");
  std::vector<std::size_t> neighbors;
  for (std::size_t u = 0; u < m.dim(); ++u) {
    if (u != a && m.get(a, u)) neighbors.push_back(u);
  }
  for (auto u : neighbors) {
    m.add_column(a, u);
    m.add_row(a, u);
  }
}

void eliminate_edge_in_place(SymMatrix& m, std::size_t a, std::size_t b) {
  if (m.get(a, a)) fail(ErrorKind::kInvalidArgument, "eliminate_edge: pivot vertex carries a loop");
  if (a == b || !m.get(a, b)) fail(ErrorKind::kInvalidArgument, "eliminate_edge: pivot pair is not an edge");

  // Stage one: clear the a-row/column except at b, using the b-column/row.
  std::vector<std::size_t> others;
  for (std::size_t x = 0; x < m.dim(); ++x) {
    if (x != b && m.get(a, x)) others.push_back(x);
  }
  for (auto x : others) {
    m.add_column(b, x);
    m.add_row(b, x);
  }

  // Stage two: the a-column is now e_b, so it clears the b-row/column.
  std::vector<std::size_t> cols;
  for (std::size_t x = 0; x < m.dim(); ++x) {
    if (x != a && x != b && m.get(b, x)) cols.push_back(x);
  }
  for (auto x : cols) m.add_column(a, x);
  std::vector<std::size_t> rows;
  for (std::size_t y = 0; y < m.dim(); ++y) {
    if (y != a && y != b && m.get(y, b)) rows.push_back(y);
  }
  for (auto y : rows) m.add_row(a, y);
  // Loop at b: column a touches only (b,b) at this point.
  if (m.get(b, b)) m.add_column(a, b);
}

void sge_with_set_in_place(SymMatrix& m, std::span<const std::size_t> vprime) {
  for (std::size_t i = 0; i < vprime.size(); ++i) {
    const std::size_t v = vprime[i];
    if (m.get(v, v)) {
      eliminate_loop_in_place(m, v);
      continue;
    }
    for (std::size_t j = i + 1; j < vprime.size(); ++j) {
      if (m.get(v, vprime[j])) {
        eliminate_edge_in_place(m, v, vprime[j]);
        break;
      }
    }
  }
}

SymMatrix eliminate_loop(const SymMatrix& m, std::size_t a) {
  SymMatrix out = m;
  eliminate_loop_in_place(out, a);
  return out;
}

SymMatrix eliminate_edge(const SymMatrix& m, std::size_t a, std::size_t b) {
  SymMatrix out = m;
  eliminate_edge_in_place(out, a, b);
  return out;
}

SymMatrix sge_with_set(const SymMatrix& m, std::span<const std::size_t> vprime) {
  SymMatrix out = m;
  sge_with_set_in_place(out, vprime);
  return out;
}

}  // namespace interlace::gf2
