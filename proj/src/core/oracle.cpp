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

#include "core/oracle.hpp"

#include <algorithm>
#include <map>

#include "core/error.hpp"
#include "core/gf2.hpp"

namespace interlace {

namespace {

using Dense = std::vector<std::vector<std::uint8_t>>;

Dense dense_adjacency(const Graph& g, std::span<const Vertex> order) {
  Dense m(order.size(), std::vector<std::uint8_t>(order.size(), 0));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) m[i][j] = g.has_edge(order[i], order[j]) ? 1 : 0;
  }
  return m;
}

void add_col(Dense& m, std::size_t src, std::size_t dst) {
  for (auto& row : m) row[dst] ^= row[src];
}

void add_row(Dense& m, std::size_t src, std::size_t dst) {
  for (std::size_t c = 0; c < m.size(); ++c) m[dst][c] ^= m[src][c];
}

// Elimination with the loop at v: clear row v by column additions, then
// column v by row additions.
void loop_step(Dense& m, std::size_t v) {
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (x != v && m[v][x]) {
      add_col(m, v, x);
      add_row(m, v, x);
    }
  }
}

// Elimination with edge vu, v unlooped: stage one clears v's row/column
// except at u, stage two clears u's row/column except at v.
void edge_step(Dense& m, std::size_t v, std::size_t u) {
  const std::size_t n = m.size();
  for (std::size_t w = 0; w < n; ++w) {
    if (w != u && m[v][w]) {
      add_col(m, u, w);
      add_row(m, u, w);
    }
  }
  std::vector<std::size_t> cols;
  std::vector<std::size_t> rows;
  for (std::size_t w = 0; w < n; ++w) {
    if (w != u && w != v && m[u][w]) cols.push_back(w);
    if (w != u && w != v && m[w][u]) rows.push_back(w);
  }
  for (auto w : cols) add_col(m, v, w);
  for (auto w : rows) add_row(m, v, w);
  if (m[u][u]) add_col(m, v, u);
}

std::size_t dense_rank(Dense m) {
  std::size_t r = 0;
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && !m[p][c]) ++p;
    if (p == n) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != r && m[i][c]) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] ^= m[r][j];
      }
    }
    ++r;
  }
  return r;
}

std::size_t mask_rank(std::vector<Mask> v) {
  std::size_t r = 0;
  for (std::size_t bit = 0; bit < kMaxExtension; ++bit) {
    auto it = std::find_if(v.begin() + static_cast<std::ptrdiff_t>(r), v.end(),
                           [&](Mask m) { return (m >> bit) & 1U; });
    if (it == v.end()) continue;
    std::iter_swap(v.begin() + static_cast<std::ptrdiff_t>(r), it);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != r && ((v[i] >> bit) & 1U)) v[i] ^= v[r];
    }
    ++r;
  }
  return r;
}

// Rank of (G toggled on `toggled`)[members] through gf2-core.
std::size_t subset_rank(const Graph& g, const std::vector<Vertex>& members, const std::vector<char>& toggled) {
  gf2::SymMatrix m(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Vertex a = members[i];
    if (g.has_loop(a) != static_cast<bool>(toggled[a])) m.set(i, i, true);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (g.has_edge(a, members[j])) m.set_sym(i, j, true);
    }
  }
  return gf2::rank(m);
}

std::vector<mpq_class> powers(const mpq_class& base, std::size_t up_to) {
  std::vector<mpq_class> out(up_to + 1);
  out[0] = 1;  // 0^0 = 1
  for (std::size_t i = 1; i <= up_to; ++i) out[i] = out[i - 1] * base;
  return out;
}

// Calls f(members, in_b, product-of-x-and-y) for every disjoint (A, B) over `pool`.
template <typename F>
void for_each_pair(const Graph& g, std::span<const Vertex> pool, const Assignment* asg, F&& f) {
  std::vector<Vertex> members;
  std::vector<char> in_b(g.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, const mpq_class& weight) -> void {
    if (i == pool.size()) {
      f(members, in_b, weight);
      return;
    }
    const Vertex a = pool[i];
    self(self, i + 1, weight);
    members.push_back(a);
    self(self, i + 1, asg ? mpq_class(weight * asg->x[a]) : weight);
    in_b[a] = 1;
    self(self, i + 1, asg ? mpq_class(weight * asg->y[a]) : weight);
    in_b[a] = 0;
    members.pop_back();
  };
  rec(rec, 0, mpq_class(1));
}

void check_assignment(const Graph& g, const Assignment& asg) {
  if (asg.x.size() != g.size() || asg.y.size() != g.size()) {
    fail(ErrorKind::kInvalidArgument, "assignment does not cover every vertex");
  }
}

}  // namespace

mpq_class oracle_evaluate(const Graph& g, const Assignment& asg) {
  if (g.size() > kOracleEvalLimit) {
    fail(ErrorKind::kGuard, "oracle evaluation is limited to " + std::to_string(kOracleEvalLimit) + " vertices");
  }
  check_assignment(g, asg);
  const auto pu = powers(asg.u, g.size());
  const auto pv = powers(asg.v, g.size());
  std::vector<Vertex> all(g.size());
  for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
  mpq_class total = 0;
  for_each_pair(g, all, &asg, [&](const std::vector<Vertex>& members, const std::vector<char>& in_b,
                                  const mpq_class& weight) {
    if (weight == 0) return;
    const auto r = subset_rank(g, members, in_b);
    total += weight * pu[r] * pv[members.size() - r];
  });
  return total;
}

TruncPoly oracle_coefficients(const Graph& g, std::size_t d) {
  if (g.size() > kOracleCoeffLimit) {
    fail(ErrorKind::kGuard, "oracle coefficients are limited to " + std::to_string(kOracleCoeffLimit) + " vertices");
  }
  std::vector<Vertex> all(g.size());
  for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
  TruncPoly out(d);
  for_each_pair(g, all, nullptr, [&](const std::vector<Vertex>& members, const std::vector<char>& in_b,
                                     const mpq_class&) {
    if (members.size() > d) return;
    Monomial m;
    for (auto a : members) (in_b[a] ? m.b : m.a).push_back(a);
    std::sort(m.a.begin(), m.a.end());
    std::sort(m.b.begin(), m.b.end());
    const auto r = subset_rank(g, members, in_b);
    m.du = static_cast<std::uint32_t>(r);
    m.dv = static_cast<std::uint32_t>(members.size() - r);
    out.add_term(m, 1);
  });
  return out;
}

OracleScenario oracle_scenario(const Graph& g, std::span<const Vertex> vprime, std::span<const Vertex> u) {
  if (u.size() > kMaxExtension) fail(ErrorKind::kGuard, "extension too large");
  std::vector<Vertex> order(vprime.begin(), vprime.end());
  order.insert(order.end(), u.begin(), u.end());
  Dense m = dense_adjacency(g, order);
  const std::size_t k = vprime.size();

  OracleScenario out;
  {
    Dense sub(k, std::vector<std::uint8_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
    }
    out.vprime_rank = dense_rank(sub);
  }

  for (std::size_t v = 0; v < k; ++v) {
    if (m[v][v]) {
      loop_step(m, v);
      continue;
    }
    for (std::size_t w = v + 1; w < k; ++w) {
      if (m[v][w]) {
        edge_step(m, v, w);
        break;
      }
    }
  }

  std::vector<Mask> columns;
  std::vector<Mask> unruled;
  for (std::size_t c = 0; c < k; ++c) {
    Mask col = 0;
    for (std::size_t r = 0; r < u.size(); ++r) {
      if (m[k + r][c]) col = static_cast<Mask>(col | (1U << r));
    }
    columns.push_back(col);
    bool ruled = false;
    for (std::size_t r = 0; r < k; ++r) ruled = ruled || m[r][c];
    if (!ruled) unruled.push_back(col);
  }
  out.full_rank = mask_rank(unruled) == unruled.size();

  // Repeatedly take the minimum column outside the span collected so far.
  std::vector<Mask> basis;
  std::vector<char> used(columns.size(), 0);
  for (;;) {
    std::int64_t best = -1;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (used[i]) continue;
      auto trial = basis;
      trial.push_back(columns[i]);
      if (mask_rank(trial) != trial.size()) continue;
      if (best < 0 || lex_less(columns[i], columns[static_cast<std::size_t>(best)])) best = static_cast<std::int64_t>(i);
    }
    if (best < 0) break;
    used[static_cast<std::size_t>(best)] = 1;
    basis.push_back(columns[static_cast<std::size_t>(best)]);
  }

  Scenario& s = out.scenario;
  s.dim = static_cast<std::uint8_t>(u.size());
  s.rank = static_cast<std::uint8_t>(basis.size());
  std::copy(basis.begin(), basis.end(), s.basis.begin());
  for (std::size_t r = 0; r < u.size(); ++r) {
    for (std::size_t c = 0; c < u.size(); ++c) {
      if (m[k + r][k + c]) s.uu[r] = static_cast<Mask>(s.uu[r] | (1U << c));
    }
  }
  return out;
}

std::vector<OraclePart> oracle_parts(const Graph& g, std::span<const Vertex> forgotten, std::span<const Vertex> bag,
                                     const Assignment& asg) {
  check_assignment(g, asg);
  if (bag.size() > kMaxExtension) fail(ErrorKind::kGuard, "bag too large");
  std::map<std::pair<Mask, std::string>, std::pair<Scenario, mpq_class>> parts;
  const auto pu = powers(asg.u, forgotten.size());
  const auto pv = powers(asg.v, forgotten.size());
  std::vector<Vertex> order_index(g.size(), 0);
  for (std::size_t i = 0; i < forgotten.size(); ++i) order_index[forgotten[i]] = static_cast<Vertex>(i);

  for (std::size_t d = 0; d < (std::size_t{1} << bag.size()); ++d) {
    for_each_pair(g, forgotten, &asg, [&](const std::vector<Vertex>& members, const std::vector<char>& in_b,
                                          const mpq_class& weight) {
      if (weight == 0) return;
      std::vector<Vertex> toggled;
      for (auto a : members) {
        if (in_b[a]) toggled.push_back(a);
      }
      for (std::size_t i = 0; i < bag.size(); ++i) {
        if ((d >> i) & 1U) toggled.push_back(bag[i]);
      }
      const Graph gt = g.toggle_loops(toggled);
      std::vector<Vertex> vprime = members;
      std::sort(vprime.begin(), vprime.end(), [&](Vertex l, Vertex r) { return order_index[l] < order_index[r]; });
      const auto lit = oracle_scenario(gt, vprime, bag);
      const auto s = canonical(lit.scenario);
      const auto r = lit.vprime_rank;
      auto& slot = parts[{static_cast<Mask>(d), encode(s)}];
      slot.first = s;
      slot.second += weight * pu[r] * pv[members.size() - r];
    });
  }
  std::vector<OraclePart> out;
  for (auto& [key, val] : parts) {
    if (val.second == 0) continue;
    out.push_back(OraclePart{key.first, val.first, val.second});
  }
  return out;
}

}  // namespace interlace
