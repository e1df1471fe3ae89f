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

#include <algorithm>
#include <functional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "core/error.hpp"
#include "core/graph.hpp"
#include "core/scenario.hpp"
#include "core/tdecomp.hpp"

namespace interlace {

inline constexpr std::size_t kDefaultBagLimit = 8;
inline constexpr std::size_t kBagWarnThreshold = 5;
inline constexpr std::size_t kFullEnumerationBagLimit = 3;

enum class Mode { kStandard, kFullRank };

/// Table key: the set D of toggled bag vertices (bit i = position i of the
/// bag in vertex order) and the canonical scenario of the bag.
struct PartKey {
  Mask d = 0;
  Scenario s;
  friend bool operator==(const PartKey&, const PartKey&) = default;
};
static_assert(sizeof(PartKey) == sizeof(Mask) + sizeof(Scenario));

struct PartKeyHash {
  std::size_t operator()(const PartKey& k) const {
    return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(&k), sizeof(PartKey)));
  }
};

template <typename Value>
using PartsTable = std::unordered_map<PartKey, Value, PartKeyHash>;

struct EvalStats {
  std::size_t nodes = 0;
  std::size_t max_bag = 0;
  std::size_t parts_max = 0;
  std::size_t parts_total = 0;
  std::size_t join_pairs = 0;
};

struct EvalOptions {
  std::size_t threads = 1;
  std::size_t bag_limit = kDefaultBagLimit;
  bool full_enumeration = false;
};

/// Canonical scenario classes for k <= kFullEnumerationBagLimit vertices.
const std::vector<Scenario>& scenario_classes(std::size_t k);

void check_bag_guard(const NiceTreeDecomposition& ntd, const EvalOptions& opt);

/// Bottom-up evaluation of the parts tables over `ntd` in an arbitrary value
/// domain. A domain supplies:
///   Value one();  bool is_zero(const Value&);
///   void accumulate(Value& acc, const Value& x);
///   Value product(const Value&, const Value&);
///   Value forget_term(const Value&, Vertex a, bool in_b, int rank_delta, int nullity_delta);
///   static constexpr bool kThreadSafe;
template <typename Domain>
class DpEngine {
 public:
  using Value = typename Domain::Value;
  using Table = PartsTable<Value>;
  using Observer = std::function<void(std::size_t node, const std::vector<Vertex>& bag, const Table&)>;

  DpEngine(const Graph& g, const NiceTreeDecomposition& ntd, Domain& domain, Mode mode, const EvalOptions& opt)
      : g_(g), ntd_(ntd), dom_(domain), mode_(mode), opt_(opt) {}

  void set_observer(Observer obs) { observer_ = std::move(obs); }
  const EvalStats& stats() const { return stats_; }

  /// Value of the single root part, or nullopt-like zero flag when empty.
  Value run(bool& empty) {
    check_bag_guard(ntd_, opt_);
    check_nice(g_, ntd_);
    order_ = vertex_order(ntd_, g_.size());
    std::vector<Table> tables(ntd_.size());
    stats_ = EvalStats{};
    stats_.max_bag = ntd_.max_bag();
    for (std::size_t i = 0; i < ntd_.size(); ++i) {
      const auto& node = ntd_.node(i);
      const auto bag = ordered_bag(node.bag);
      Table out;
      switch (node.kind) {
        case NodeKind::kLeaf:
          out.emplace(PartKey{}, dom_.one());
          break;
        case NodeKind::kIntroduce:
          out = introduce_node(node, bag, tables[node.children[0]]);
          break;
        case NodeKind::kForget:
          out = forget_node(node, tables[node.children[0]]);
          break;
        case NodeKind::kJoin:
          out = join_node(bag, tables[node.children[0]], tables[node.children[1]]);
          break;
      }
      for (auto c : node.children) {
        if (c >= 0) Table().swap(tables[c]);
      }
      std::erase_if(out, [&](const auto& kv) { return dom_.is_zero(kv.second); });
      ++stats_.nodes;
      stats_.parts_max = std::max(stats_.parts_max, out.size());
      stats_.parts_total += out.size();
      if (observer_) observer_(i, bag, out);
      tables[i] = std::move(out);
    }
    auto& root = tables[ntd_.root()];
    auto it = root.find(PartKey{});
    if (root.size() > 1 || (it == root.end() && !root.empty())) {
      fail(ErrorKind::kInternal, "root table holds a non-empty scenario");
    }
    empty = it == root.end();
    if (empty) return dom_.one();
    return it->second;
  }

 private:
  std::vector<Vertex> ordered_bag(const std::vector<Vertex>& bag) const {
    auto out = bag;
    std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return order_.less(a, b); });
    return out;
  }

  void add(Table& t, const PartKey& key, Value v) {
    auto [it, fresh] = t.try_emplace(key, v);
    if (!fresh) dom_.accumulate(it->second, v);
  }

  // Calls f(key, value) for each child entry; in full-enumeration mode the
  // loop runs over every (D, scenario class) and looks the entry up.
  template <typename F>
  void for_each_child(const Table& child, std::size_t child_bag, F&& f) const {
    if (!opt_.full_enumeration) {
      for (const auto& [k, v] : child) f(k, v);
      return;
    }
    for (std::size_t d = 0; d < (std::size_t{1} << child_bag); ++d) {
      for (const auto& s : scenario_classes(child_bag)) {
        const PartKey k{static_cast<Mask>(d), s};
        auto it = child.find(k);
        if (it != child.end()) f(k, it->second);
      }
    }
  }

  Table introduce_node(const NiceNode& node, const std::vector<Vertex>& bag, const Table& child) {
    const Vertex a = node.vertex;
    const auto pos = static_cast<std::size_t>(std::find(bag.begin(), bag.end(), a) - bag.begin());
    Mask row = 0;
    for (std::size_t q = 0; q < bag.size(); ++q) {
      if (q != pos && g_.has_edge(a, bag[q])) row = static_cast<Mask>(row | (1U << q));
    }
    Table out;
    for_each_child(child, bag.size() - 1, [&](const PartKey& k, const Value& v) {
      for (int in_d = 0; in_d < 2; ++in_d) {
        const bool loop = g_.has_loop(a) != static_cast<bool>(in_d);
        const Mask r = static_cast<Mask>(row | (loop ? (1U << pos) : 0U));
        add(out, PartKey{insert_bit(k.d, pos, in_d != 0), interlace::introduce(k.s, pos, r)}, v);
      }
    });
    return out;
  }

  Table forget_node(const NiceNode& node, const Table& child) {
    const Vertex a = node.vertex;
    const auto& child_bag = ntd_.node(static_cast<std::size_t>(node.children[0])).bag;
    const auto ordered = ordered_bag(child_bag);
    if (ordered.empty() || ordered[0] != a) fail(ErrorKind::kInternal, "forgotten vertex is not the smallest in its bag");
    const bool standard = mode_ == Mode::kStandard;
    Table out;
    for_each_child(child, ordered.size(), [&](const PartKey& k, const Value& v) {
      const bool in_b = k.d & 1U;
      const Mask d = static_cast<Mask>(k.d >> 1);
      const auto f = interlace::forget(k.s);
      if (!in_b) {
        const auto ig = interlace::ignore(k.s, 0);
        if (standard || ig.full_rank) add(out, PartKey{d, ig.scenario}, v);
      }
      if (standard || f.full_rank) {
        add(out, PartKey{d, f.scenario},
            dom_.forget_term(v, a, in_b, f.rank_delta, standard ? f.nullity_delta : 0));
      }
    });
    return out;
  }

  Table join_node(const std::vector<Vertex>& bag, const Table& left, const Table& right) {
    const std::size_t k = bag.size();
    std::vector<Mask> base(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (g_.has_edge(bag[i], bag[j])) base[i] = static_cast<Mask>(base[i] | (1U << j));
      }
    }
    auto rows_for = [&](Mask d) {
      auto rows = base;
      for (std::size_t i = 0; i < k; ++i) {
        if ((d >> i) & 1U) rows[i] ^= static_cast<Mask>(1U << i);
      }
      return rows;
    };
    const bool standard = mode_ == Mode::kStandard;

    Table out;
    if (opt_.full_enumeration) {
      const auto& classes = scenario_classes(k);
      for (std::size_t d = 0; d < (std::size_t{1} << k); ++d) {
        const auto rows = rows_for(static_cast<Mask>(d));
        for (const auto& s1 : classes) {
          auto i1 = left.find(PartKey{static_cast<Mask>(d), s1});
          if (i1 == left.end()) continue;
          for (const auto& s2 : classes) {
            auto i2 = right.find(PartKey{static_cast<Mask>(d), s2});
            if (i2 == right.end()) continue;
            ++stats_.join_pairs;
            const auto j = interlace::join(s1, s2, rows);
            if (!standard && !j.preserves_full_rank) continue;
            add(out, PartKey{static_cast<Mask>(d), j.scenario}, dom_.product(i1->second, i2->second));
          }
        }
      }
      return out;
    }

    using Entry = std::pair<const PartKey*, const Value*>;
    std::vector<Entry> lefts;
    std::unordered_map<Mask, std::vector<Entry>> rights;
    const Table& l = left;
    const Table& r = right;
    for (const auto& kv : l) lefts.emplace_back(&kv.first, &kv.second);
    for (const auto& kv : r) rights[kv.first.d].emplace_back(&kv.first, &kv.second);
    std::sort(lefts.begin(), lefts.end(), [](const Entry& x, const Entry& y) { return x.first->d < y.first->d; });

    auto work = [&](std::size_t begin, std::size_t end, Table& out, std::size_t& pairs) {
      Mask cached_d = 0;
      auto rows = rows_for(0);
      for (std::size_t i = begin; i < end; ++i) {
        const auto& [k1, v1] = lefts[i];
        auto it = rights.find(k1->d);
        if (it == rights.end()) continue;
        if (k1->d != cached_d) {
          cached_d = k1->d;
          rows = rows_for(cached_d);
        }
        for (const auto& [k2, v2] : it->second) {
          ++pairs;
          const auto j = interlace::join(k1->s, k2->s, rows);
          if (!standard && !j.preserves_full_rank) continue;
          add(out, PartKey{k1->d, j.scenario}, dom_.product(*v1, *v2));
        }
      }
    };

    std::size_t threads = Domain::kThreadSafe ? std::max<std::size_t>(1, opt_.threads) : 1;
    if (lefts.size() < 64) threads = 1;
    if (threads == 1) {
      work(0, lefts.size(), out, stats_.join_pairs);
      return out;
    }
    std::vector<Table> partial(threads);
    std::vector<std::size_t> pairs(threads, 0);
    std::vector<std::thread> pool;
    const std::size_t chunk = (lefts.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(lefts.size(), t * chunk);
      const std::size_t end = std::min(lefts.size(), begin + chunk);
      pool.emplace_back([&, t, begin, end] { work(begin, end, partial[t], pairs[t]); });
    }
    for (auto& th : pool) th.join();
    for (std::size_t t = 0; t < threads; ++t) {
      stats_.join_pairs += pairs[t];
      for (auto& [key, v] : partial[t]) add(out, key, v);
    }
    return out;
  }

  const Graph& g_;
  const NiceTreeDecomposition& ntd_;
  Domain& dom_;
  Mode mode_;
  EvalOptions opt_;
  VertexOrder order_;
  Observer observer_;
  EvalStats stats_;
};

}  // namespace interlace
