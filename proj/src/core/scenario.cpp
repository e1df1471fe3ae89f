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

#include "core/scenario.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "core/error.hpp"
#include "core/gf2.hpp"

namespace interlace {

Mask insert_bit(Mask m, std::size_t pos, bool bit) {
  const Mask low = static_cast<Mask>(m & ((1U << pos) - 1U));
  const Mask high = static_cast<Mask>((m >> pos) << (pos + 1));
  return static_cast<Mask>(low | high | (bit ? (1U << pos) : 0U));
}

Mask remove_bit(Mask m, std::size_t pos) {
  const Mask low = static_cast<Mask>(m & ((1U << pos) - 1U));
  const Mask high = static_cast<Mask>((m >> (pos + 1)) << pos);
  return static_cast<Mask>(low | high);
}

namespace {

// Echelon basis indexed by pivot; kept fully reduced on every insertion.
struct Echelon {
  std::array<Mask, kMaxExtension> by_pivot{};
  std::size_t count = 0;

  Mask reduce(Mask v) const {
    for (std::size_t p = 0; p < kMaxExtension && v != 0; ++p) {
      if (((v >> p) & 1U) && by_pivot[p] != 0) v ^= by_pivot[p];
    }
    return v;
  }

  bool insert(Mask v) {
    v = reduce(v);
    if (v == 0) return false;
    const int p = __builtin_ctz(v);
    for (auto& b : by_pivot) {
      if (b != 0 && ((b >> p) & 1U)) b ^= v;
    }
    by_pivot[p] = v;
    ++count;
    return true;
  }

  std::vector<Mask> sorted() const {
    std::vector<Mask> out;
    for (auto b : by_pivot) {
      if (b != 0) out.push_back(b);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }
};

void set_basis(Scenario& s, const std::vector<Mask>& basis) {
  s.basis.fill(0);
  s.rank = static_cast<std::uint8_t>(basis.size());
  std::copy(basis.begin(), basis.end(), s.basis.begin());
}

void delete_uu(Scenario& s, std::size_t pos) {
  for (std::size_t i = pos; i + 1 < s.dim; ++i) s.uu[i] = s.uu[i + 1];
  s.uu[s.dim - 1] = 0;
  for (std::size_t i = 0; i + 1 < s.dim; ++i) s.uu[i] = remove_bit(s.uu[i], pos);
}

void check_dim(std::size_t dim) {
  if (dim > kMaxExtension) fail(ErrorKind::kGuard, "extension larger than " + std::to_string(kMaxExtension));
}

}  // namespace

std::vector<Mask> reduced_basis(std::span<const Mask> vectors) {
  Echelon e;
  for (auto v : vectors) e.insert(v);
  return e.sorted();
}

bool in_span(std::span<const Mask> reduced, Mask v) {
  for (auto b : reduced) {
    if ((v >> __builtin_ctz(b)) & 1U) v ^= b;
  }
  return v == 0;
}

std::string to_string(const Scenario& s) {
  std::ostringstream os;
  auto bits = [&](Mask m) {
    std::string out;
    for (std::size_t i = 0; i < s.dim; ++i) out += ((m >> i) & 1U) ? '1' : '0';
    return out;
  };
  os << '{';
  for (std::size_t i = 0; i < s.rank; ++i) os << (i ? "," : "") << '(' << bits(s.basis[i]) << ')';
  os << "} [";
  for (std::size_t i = 0; i < s.dim; ++i) os << (i ? " " : "") << bits(s.uu[i]);
  os << ']';
  return os.str();
}

std::string encode(const Scenario& s) {
  std::string out;
  out.push_back(static_cast<char>(s.dim));
  out.push_back(static_cast<char>(s.rank));
  for (auto v : s.vectors()) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>(v >> 8));
  }
  std::uint8_t acc = 0;
  int filled = 0;
  for (std::size_t i = 0; i < s.dim; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (s.uu_get(i, j)) acc = static_cast<std::uint8_t>(acc | (1U << filled));
      if (++filled == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(acc));
  return out;
}

Scenario decode(std::string_view key) {
  if (key.size() < 2) fail(ErrorKind::kInvalidArgument, "scenario key too short");
  Scenario s;
  s.dim = static_cast<std::uint8_t>(key[0]);
  s.rank = static_cast<std::uint8_t>(key[1]);
  check_dim(s.dim);
  if (s.rank > s.dim) fail(ErrorKind::kInvalidArgument, "scenario key rank exceeds dimension");
  const std::size_t tri = static_cast<std::size_t>(s.dim) * (s.dim + 1) / 2;
  if (key.size() != 2 + 2 * s.rank + (tri + 7) / 8) fail(ErrorKind::kInvalidArgument, "scenario key has wrong length");
  std::size_t at = 2;
  for (std::size_t i = 0; i < s.rank; ++i, at += 2) {
    s.basis[i] = static_cast<Mask>(static_cast<std::uint8_t>(key[at]) | (static_cast<std::uint8_t>(key[at + 1]) << 8));
  }
  std::size_t bit = 0;
  for (std::size_t i = 0; i < s.dim; ++i) {
    for (std::size_t j = 0; j <= i; ++j, ++bit) {
      if ((static_cast<std::uint8_t>(key[at + bit / 8]) >> (bit % 8)) & 1U) {
        s.uu[i] = static_cast<Mask>(s.uu[i] | (1U << j));
        s.uu[j] = static_cast<Mask>(s.uu[j] | (1U << i));
      }
    }
  }
  return s;
}

std::string to_hex(std::string_view bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

Scenario scenario_of(const Graph& g, std::span<const Vertex> vprime, std::span<const Vertex> u) {
  check_dim(u.size());
  std::vector<Vertex> order(vprime.begin(), vprime.end());
  order.insert(order.end(), u.begin(), u.end());
  auto m = g.adjacency(order);
  std::vector<std::size_t> positions(vprime.size());
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i;
  gf2::sge_with_set_in_place(m, positions);

  const std::size_t off = vprime.size();
  std::vector<Mask> columns;
  for (std::size_t c = 0; c < vprime.size(); ++c) {
    Mask col = 0;
    for (std::size_t r = 0; r < u.size(); ++r) {
      if (m.get(off + r, c)) col = static_cast<Mask>(col | (1U << r));
    }
    columns.push_back(col);
  }
  std::sort(columns.begin(), columns.end(), lex_less);
  Echelon span;
  std::vector<Mask> basis;
  for (auto c : columns) {
    if (span.insert(c)) basis.push_back(c);
  }

  Scenario s;
  s.dim = static_cast<std::uint8_t>(u.size());
  set_basis(s, basis);
  for (std::size_t r = 0; r < u.size(); ++r) {
    Mask row = 0;
    for (std::size_t c = 0; c < u.size(); ++c) {
      if (m.get(off + r, off + c)) row = static_cast<Mask>(row | (1U << c));
    }
    s.uu[r] = row;
  }
  return s;
}

Scenario canonical(const Scenario& s) {
  Scenario out;
  out.dim = s.dim;
  out.uu = s.uu;
  Echelon e;
  for (auto v : s.vectors()) e.insert(v);
  const auto basis = e.sorted();
  set_basis(out, basis);
  for (auto b : basis) {
    const int p = __builtin_ctz(b);
    if ((out.uu[p] >> p) & 1U) {
      for (std::size_t i = 0; i < out.dim; ++i) {
        if ((b >> i) & 1U) out.uu[i] ^= b;
      }
    }
    Mask others = static_cast<Mask>(out.uu[p] & ~(1U << p));
    while (others != 0) {
      const int k = __builtin_ctz(others);
      others = static_cast<Mask>(others & ~(1U << k));
      for (std::size_t i = 0; i < out.dim; ++i) {
        if ((b >> i) & 1U) out.uu[i] ^= static_cast<Mask>(1U << k);
      }
      out.uu[k] ^= b;
    }
  }
  return out;
}

bool is_canonical(const Scenario& s) { return canonical(s) == s; }

JoinResult join(const Scenario& s1, const Scenario& s2, std::span<const Mask> gu) {
  if (s1.dim != s2.dim || gu.size() != s1.dim) fail(ErrorKind::kInvalidArgument, "join of scenarios of different size");
  Scenario raw;
  raw.dim = s1.dim;
  std::vector<Mask> vectors(s1.vectors().begin(), s1.vectors().end());
  vectors.insert(vectors.end(), s2.vectors().begin(), s2.vectors().end());
  for (std::size_t i = 0; i < raw.dim; ++i) raw.uu[i] = static_cast<Mask>(s1.uu[i] ^ s2.uu[i] ^ gu[i]);
  set_basis(raw, reduced_basis(vectors));
  JoinResult r;
  r.scenario = canonical(raw);
  r.preserves_full_rank = r.scenario.rank == s1.rank + s2.rank;
  return r;
}

Scenario introduce(const Scenario& s, std::size_t pos, Mask row) {
  check_dim(s.dim + 1U);
  if (pos > s.dim) fail(ErrorKind::kInvalidArgument, "introduce position out of range");
  Scenario raw;
  raw.dim = static_cast<std::uint8_t>(s.dim + 1);
  raw.rank = s.rank;
  for (std::size_t i = 0; i < s.rank; ++i) raw.basis[i] = insert_bit(s.basis[i], pos, false);
  for (std::size_t i = 0; i < raw.dim; ++i) {
    if (i == pos) {
      raw.uu[i] = row;
      continue;
    }
    const std::size_t old = i < pos ? i : i - 1;
    raw.uu[i] = insert_bit(s.uu[old], pos, (row >> i) & 1U);
  }
  return canonical(raw);
}

ForgetResult forget(const Scenario& s) {
  if (s.dim == 0) fail(ErrorKind::kInvalidArgument, "forget on an empty extension");
  ForgetResult r;
  Scenario work = s;
  std::vector<Mask> rest;
  Mask w = 0;
  for (auto v : s.vectors()) {
    if ((v & 1U) && (w == 0 || lex_less(v, w))) w = v;
  }
  for (auto v : s.vectors()) {
    if (v != w) rest.push_back(v);
  }

  if (w != 0) {
    // Case 1: eliminate with the edge to the vertex behind w.
    for (std::size_t i = 1; i < work.dim; ++i) {
      if (!((w >> i) & 1U)) continue;
      for (auto& c : rest) {
        if (c & 1U) c ^= static_cast<Mask>(1U << i);
      }
      for (std::size_t y = 0; y < work.dim; ++y) {
        if (work.uu[y] & 1U) work.uu[y] ^= static_cast<Mask>(1U << i);
      }
      work.uu[i] ^= work.uu[0];
    }
    r.rank_delta = 2;
    r.nullity_delta = -1;
    r.full_rank = true;
  } else {
    if (work.uu[0] & 1U) {
      // Case 2: eliminate with the loop at position 0 first.
      const Mask nb = static_cast<Mask>(work.uu[0] & ~1U);
      for (std::size_t x = 1; x < work.dim; ++x) {
        if (!((nb >> x) & 1U)) continue;
        for (std::size_t y = 0; y < work.dim; ++y) {
          if (work.uu[y] & 1U) work.uu[y] ^= static_cast<Mask>(1U << x);
        }
        work.uu[x] ^= work.uu[0];
      }
      r.rank_delta = 1;
      r.nullity_delta = 0;
      r.full_rank = true;
    } else {
      r.rank_delta = 0;
      r.nullity_delta = 1;
    }
    // Case 3 tail: the column of position 0 joins the eliminated columns.
    const Mask a = static_cast<Mask>(work.uu[0] >> 1);
    for (auto& c : rest) c = static_cast<Mask>(c >> 1);
    const bool fresh = a != 0 && !in_span(reduced_basis(rest), a);
    if (r.rank_delta == 0) r.full_rank = fresh;
    if (fresh) rest.push_back(a);
    for (auto& c : rest) c = static_cast<Mask>(c << 1);
  }

  delete_uu(work, 0);
  work.dim = static_cast<std::uint8_t>(work.dim - 1);
  for (auto& c : rest) c = static_cast<Mask>(c >> 1);
  set_basis(work, reduced_basis(rest));
  r.scenario = canonical(work);
  return r;
}

IgnoreResult ignore(const Scenario& s, std::size_t pos) {
  if (pos >= s.dim) fail(ErrorKind::kInvalidArgument, "ignore position out of range");
  Scenario raw = s;
  delete_uu(raw, pos);
  raw.dim = static_cast<std::uint8_t>(s.dim - 1);
  std::vector<Mask> stripped;
  for (auto v : s.vectors()) stripped.push_back(remove_bit(v, pos));
  set_basis(raw, reduced_basis(stripped));
  IgnoreResult r;
  r.scenario = canonical(raw);
  r.full_rank = r.scenario.rank == s.rank;
  return r;
}

namespace {

void independent_sets(std::size_t k, std::vector<std::vector<Mask>>& out) {
  const std::size_t vectors = (std::size_t{1} << k) - 1;
  // Sets are grown in increasing lexicographic order of their elements.
  std::vector<Mask> nonzero;
  for (std::size_t v = 1; v <= vectors; ++v) nonzero.push_back(static_cast<Mask>(v));
  std::sort(nonzero.begin(), nonzero.end(), lex_less);
  std::vector<Mask> current;
  auto rec = [&](auto&& self, std::size_t start, const Echelon& span) -> void {
    out.push_back(current);
    for (std::size_t i = start; i < nonzero.size(); ++i) {
      Echelon next = span;
      if (!next.insert(nonzero[i])) continue;
      current.push_back(nonzero[i]);
      self(self, i + 1, next);
      current.pop_back();
    }
  };
  rec(rec, 0, Echelon{});
}

}  // namespace

std::vector<Scenario> enumerate_scenarios(std::size_t k) {
  check_dim(k);
  if (k > 4) fail(ErrorKind::kGuard, "scenario enumeration is limited to k <= 4");
  std::vector<std::vector<Mask>> sets;
  independent_sets(k, sets);
  const std::size_t free_bits = k * (k + 1) / 2;
  std::vector<Scenario> out;
  out.reserve(sets.size() << free_bits);
  for (const auto& set : sets) {
    for (std::size_t code = 0; code < (std::size_t{1} << free_bits); ++code) {
      Scenario s;
      s.dim = static_cast<std::uint8_t>(k);
      set_basis(s, set);
      std::size_t bit = 0;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
          if ((code >> bit++) & 1U) {
            s.uu[i] = static_cast<Mask>(s.uu[i] | (1U << j));
            s.uu[j] = static_cast<Mask>(s.uu[j] | (1U << i));
          }
        }
      }
      out.push_back(s);
    }
  }
  return out;
}

std::size_t count_canonical_scenarios(std::size_t k) {
  std::set<std::vector<Mask>> classes;
  for (const auto& s : enumerate_scenarios(k)) {
    const auto c = canonical(s);
    std::vector<Mask> key(c.basis.begin(), c.basis.begin() + c.rank);
    key.push_back(0xFFFF);
    key.insert(key.end(), c.uu.begin(), c.uu.begin() + c.dim);
    classes.insert(std::move(key));
  }
  return classes.size();
}

}  // namespace interlace
