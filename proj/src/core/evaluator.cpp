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

#include "core/evaluator.hpp"

#include <array>

#include "core/error.hpp"

namespace interlace {

namespace {

void check_assignment(const Graph& g, const Assignment& asg) {
  if (asg.x.size() != g.size() || asg.y.size() != g.size()) {
    fail(ErrorKind::kInvalidArgument, "assignment has " + std::to_string(asg.x.size()) + "/" +
                                          std::to_string(asg.y.size()) + " vertex values for a graph with " +
                                          std::to_string(g.size()) + " vertices");
  }
}

// Forget multipliers indexed by [vertex][in B][rank delta]:
// (x_a or y_a) * u^r * v^(1 - r), or without the v factor in full-rank mode.
template <typename T, typename Mul>
std::vector<std::array<std::array<T, 3>, 2>> forget_factors(std::size_t n, const std::vector<T>& x,
                                                            const std::vector<T>& y, const T& u, const T* v,
                                                            const T& one, const T* v_inverse, Mul mul) {
  std::array<T, 3> tail{one, u, mul(u, u)};
  if (v != nullptr) {
    tail[0] = mul(tail[0], *v);
    tail[2] = mul(tail[2], *v_inverse);
  }
  std::vector<std::array<std::array<T, 3>, 2>> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (int r = 0; r < 3; ++r) {
      out[a][0][r] = mul(x[a], tail[r]);
      out[a][1][r] = mul(y[a], tail[r]);
    }
  }
  return out;
}

struct RationalDomain {
  using Value = mpq_class;
  static constexpr bool kThreadSafe = true;

  RationalDomain(const Assignment& asg, bool with_v) {
    const mpq_class one = 1;
    const mpq_class v_inverse = with_v ? mpq_class(1 / asg.v) : mpq_class(0);
    factors = forget_factors<mpq_class>(asg.x.size(), asg.x, asg.y, asg.u, with_v ? &asg.v : nullptr, one,
                                        &v_inverse, [](const mpq_class& a, const mpq_class& b) { return mpq_class(a * b); });
  }

  Value one() const { return 1; }
  bool is_zero(const Value& v) const { return v == 0; }
  void accumulate(Value& acc, const Value& x) const { acc += x; }
  Value product(const Value& a, const Value& b) const { return a * b; }
  Value forget_term(const Value& val, Vertex a, bool in_b, int r, int) const { return val * factors[a][in_b][r]; }

  std::vector<std::array<std::array<mpq_class, 3>, 2>> factors;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t reduce_mod(const mpq_class& q, std::uint64_t p) {
  const mpz_class pz(std::to_string(p), 10);
  mpz_class num = q.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0) fail(ErrorKind::kInvalidArgument, "denominator of " + q.get_str() + " vanishes modulo the prime");
  const auto n = static_cast<std::uint64_t>(std::stoull(num.get_str()));
  const auto d = static_cast<std::uint64_t>(std::stoull(den.get_str()));
  return mul_mod(n, pow_mod(d, p - 2, p), p);
}

struct ModularDomain {
  using Value = std::uint64_t;
  static constexpr bool kThreadSafe = true;

  ModularDomain(const Assignment& asg, std::uint64_t prime) : p(prime) {
    std::vector<Value> x;
    std::vector<Value> y;
    for (const auto& q : asg.x) x.push_back(reduce_mod(q, p));
    for (const auto& q : asg.y) y.push_back(reduce_mod(q, p));
    const Value u = reduce_mod(asg.u, p);
    const Value v = reduce_mod(asg.v, p);
    if (v == 0) fail(ErrorKind::kGuard, "v vanishes modulo the prime");
    const Value v_inverse = pow_mod(v, p - 2, p);
    factors = forget_factors<Value>(x.size(), x, y, u, &v, 1, &v_inverse,
                                    [this](Value a, Value b) { return mul_mod(a, b, p); });
  }

  Value one() const { return 1; }
  bool is_zero(const Value& v) const { return v == 0; }
  void accumulate(Value& acc, const Value& x) const {
    acc += x;
    if (acc >= p) acc -= p;
  }
  Value product(const Value& a, const Value& b) const { return mul_mod(a, b, p); }
  Value forget_term(const Value& val, Vertex a, bool in_b, int r, int) const {
    return mul_mod(val, factors[a][in_b][r], p);
  }

  std::uint64_t p;
  std::vector<std::array<std::array<Value, 3>, 2>> factors;
};

struct TruncDomain {
  using Value = TruncPoly;
  static constexpr bool kThreadSafe = true;

  std::size_t cap;

  Value one() const { return TruncPoly::constant(cap, 1); }
  bool is_zero(const Value& v) const { return v.is_zero(); }
  void accumulate(Value& acc, const Value& x) const { acc += x; }
  Value product(const Value& a, const Value& b) const { return a * b; }
  Value forget_term(const Value& val, Vertex a, bool in_b, int r, int n) const {
    return val.times_vertex(a, in_b, r, n);
  }
};

// Polynomial in v (index = exponent) with x, y, u fixed.
struct VPolyDomain {
  using Value = std::vector<mpq_class>;
  static constexpr bool kThreadSafe = true;

  explicit VPolyDomain(const Assignment& asg) : x(asg.x), y(asg.y) {
    u_pow = {1, asg.u, asg.u * asg.u};
  }

  static void trim(Value& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
  Value one() const { return {1}; }
  bool is_zero(const Value& v) const { return v.empty(); }
  void accumulate(Value& acc, const Value& other) const {
    if (acc.size() < other.size()) acc.resize(other.size(), 0);
    for (std::size_t i = 0; i < other.size(); ++i) acc[i] += other[i];
    trim(acc);
  }
  Value product(const Value& a, const Value& b) const {
    if (a.empty() || b.empty()) return {};
    Value out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
  }
  Value forget_term(const Value& val, Vertex a, bool in_b, int r, int n) const {
    Value out = val;
    const mpq_class f = (in_b ? y[a] : x[a]) * u_pow[r];
    for (auto& c : out) c *= f;
    if (n == 1) out.insert(out.begin(), 0);
    if (n == -1 && !out.empty()) {
      if (out.front() != 0) fail(ErrorKind::kInternal, "part with a v^0 term under a nullity decrease");
      out.erase(out.begin());
    }
    trim(out);
    return out;
  }

  std::vector<mpq_class> x;
  std::vector<mpq_class> y;
  std::array<mpq_class, 3> u_pow;
};

template <typename Domain>
typename Domain::Value run_engine(const Graph& g, const NiceTreeDecomposition& ntd, Domain& dom, Mode mode,
                                  const EvalOptions& opt, EvalStats* stats, typename Domain::Value zero,
                                  typename DpEngine<Domain>::Observer observer = {}) {
  DpEngine<Domain> engine(g, ntd, dom, mode, opt);
  if (observer) engine.set_observer(std::move(observer));
  bool empty = false;
  auto value = engine.run(empty);
  if (stats) *stats = engine.stats();
  return empty ? zero : value;
}

}  // namespace

mpq_class evaluate(const Graph& g, const NiceTreeDecomposition& ntd, const Assignment& asg, const EvalOptions& opt,
                   EvalStats* stats, const PartsObserver& observer) {
  if (asg.v == 0) return evaluate_v0(g, ntd, asg, opt, stats);
  return evaluate_standard(g, ntd, asg, opt, stats, observer);
}

mpq_class evaluate_standard(const Graph& g, const NiceTreeDecomposition& ntd, const Assignment& asg,
                            const EvalOptions& opt, EvalStats* stats, const PartsObserver& observer) {
  check_assignment(g, asg);
  if (asg.v == 0) fail(ErrorKind::kGuard, "v = 0 needs the full-rank evaluation (evaluate_v0)");
  RationalDomain dom(asg, true);
  return run_engine(g, ntd, dom, Mode::kStandard, opt, stats, mpq_class(0), observer);
}

mpq_class evaluate_v0(const Graph& g, const NiceTreeDecomposition& ntd, const Assignment& asg,
                      const EvalOptions& opt, EvalStats* stats) {
  check_assignment(g, asg);
  if (asg.v != 0) fail(ErrorKind::kGuard, "full-rank evaluation requires v = 0");
  RationalDomain dom(asg, false);
  return run_engine(g, ntd, dom, Mode::kFullRank, opt, stats, mpq_class(0));
}

mpq_class evaluate_v0_symbolic(const Graph& g, const NiceTreeDecomposition& ntd, const Assignment& asg,
                               const EvalOptions& opt) {
  check_assignment(g, asg);
  VPolyDomain dom(asg);
  const auto poly = run_engine(g, ntd, dom, Mode::kStandard, opt, nullptr, VPolyDomain::Value{});
  return poly.empty() ? mpq_class(0) : poly.front();
}

std::uint64_t evaluate_modular(const Graph& g, const NiceTreeDecomposition& ntd, const Assignment& asg,
                               std::uint64_t p, const EvalOptions& opt, EvalStats* stats) {
  check_assignment(g, asg);
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
    fail(ErrorKind::kInvalidArgument, "modulus must be a prime below 2^62");
  }
  ModularDomain dom(asg, p);
  return run_engine(g, ntd, dom, Mode::kStandard, opt, stats, std::uint64_t{0});
}

TruncPoly truncate(const Graph& g, const NiceTreeDecomposition& ntd, std::size_t d, const EvalOptions& opt,
                   EvalStats* stats) {
  TruncDomain dom{d};
  return run_engine(g, ntd, dom, Mode::kStandard, opt, stats, TruncPoly(d));
}

mpq_class specialize(const Graph& g, const NiceTreeDecomposition& ntd, Substitution form, const mpq_class& x,
                     const mpq_class& y, const EvalOptions& opt) {
  const mpq_class xx = form == Substitution::kVertexNullity ? mpq_class(2) : x;
  const auto asg = Assignment::uniform(g.size(), 1, 0, xx - 1, y - 1);
  return evaluate(g, ntd, asg, opt);
}

}  // namespace interlace
