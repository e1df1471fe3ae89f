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

#include "core/truncpoly.hpp"

#include <algorithm>
#include <json.hpp>

#include "core/error.hpp"

namespace interlace {

bool MonomialLess::operator()(const Monomial& l, const Monomial& r) const {
  const auto dl = l.quasi_degree();
  const auto dr = r.quasi_degree();
  if (dl != dr) return dl < dr;
  if (l.a != r.a) return l.a < r.a;
  if (l.b != r.b) return l.b < r.b;
  if (l.du != r.du) return l.du < r.du;
  return l.dv < r.dv;
}

TruncPoly TruncPoly::constant(std::size_t cap, const mpz_class& c) {
  TruncPoly p(cap);
  p.add_term(Monomial{}, c);
  return p;
}

void TruncPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0 || m.quasi_degree() > cap_) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

namespace {

std::vector<Vertex> merge_disjoint(const std::vector<Vertex>& l, const std::vector<Vertex>& r) {
  std::vector<Vertex> out;
  out.reserve(l.size() + r.size());
  std::merge(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TruncPoly TruncPoly::operator*(const TruncPoly& other) const {
  TruncPoly out(std::min(cap_, other.cap_));
  for (const auto& [ml, cl] : terms_) {
    for (const auto& [mr, cr] : other.terms_) {
      if (ml.quasi_degree() + mr.quasi_degree() > out.cap_) continue;
      Monomial m;
      m.a = merge_disjoint(ml.a, mr.a);
      m.b = merge_disjoint(ml.b, mr.b);
      m.du = ml.du + mr.du;
      m.dv = ml.dv + mr.dv;
      out.add_term(m, cl * cr);
    }
  }
  return out;
}

TruncPoly TruncPoly::times_vertex(Vertex a, bool in_b, int du, int dv) const {
  TruncPoly out(cap_);
  for (const auto& [m, c] : terms_) {
    if (m.quasi_degree() + 1 > cap_) continue;
    Monomial next = m;
    auto& side = in_b ? next.b : next.a;
    side.insert(std::lower_bound(side.begin(), side.end(), a), a);
    if (static_cast<std::int64_t>(next.du) + du < 0 || static_cast<std::int64_t>(next.dv) + dv < 0) {
      fail(ErrorKind::kInternal, "negative exponent while multiplying a part; nullity bookkeeping is broken");
    }
    next.du = static_cast<std::uint32_t>(static_cast<std::int64_t>(next.du) + du);
    next.dv = static_cast<std::uint32_t>(static_cast<std::int64_t>(next.dv) + dv);
    out.add_term(next, c);
  }
  return out;
}

std::string TruncPoly::to_json(const Graph& g) const {
  using nlohmann::json;
  auto labels = [&](const std::vector<Vertex>& vs) {
    json arr = json::array();
    for (auto v : vs) arr.push_back(g.label(v));
    return arr;
  };
  json out = json::array();
  for (const auto& [m, c] : terms_) {
    json item;
    item["A"] = labels(m.a);
    item["B"] = labels(m.b);
    item["u"] = m.du;
    item["v"] = m.dv;
    item["coeff"] = c.get_str(10);
    out.push_back(std::move(item));
  }
  return out.dump() + "\n";
}

TruncPoly TruncPoly::from_json(const std::string& text, const Graph& g, std::size_t cap) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("invalid polynomial JSON: ") + e.what());
  }
  if (!doc.is_array()) fail(ErrorKind::kParse, "polynomial JSON must be an array");
  std::map<std::int64_t, Vertex> by_label;
  for (Vertex v = 0; v < g.size(); ++v) by_label[g.label(v)] = v;
  TruncPoly out(cap);
  try {
    for (const auto& item : doc) {
      Monomial m;
      for (const auto& l : item.at("A")) m.a.push_back(by_label.at(l.get<std::int64_t>()));
      for (const auto& l : item.at("B")) m.b.push_back(by_label.at(l.get<std::int64_t>()));
      std::sort(m.a.begin(), m.a.end());
      std::sort(m.b.begin(), m.b.end());
      m.du = item.at("u").get<std::uint32_t>();
      m.dv = item.at("v").get<std::uint32_t>();
      out.add_term(m, mpz_class(item.at("coeff").get<std::string>(), 10));
    }
  } catch (const std::exception& e) {
    fail(ErrorKind::kParse, std::string("malformed polynomial term: ") + e.what());
  }
  return out;
}

}  // namespace interlace
