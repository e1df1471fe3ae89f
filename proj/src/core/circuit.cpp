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

#include "core/circuit.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "core/error.hpp"

namespace interlace {

std::uint32_t Circuit::push(Gate g) {
  gates_.push_back(std::move(g));
  return static_cast<std::uint32_t>(gates_.size() - 1);
}

std::uint32_t Circuit::input(std::string name) {
  if (name.empty()) fail(ErrorKind::kInvalidArgument, "circuit input needs a name or constant");
  Gate g;
  g.input = std::move(name);
  return push(std::move(g));
}

std::uint32_t Circuit::add(std::uint32_t l, std::uint32_t r) {
  if (l >= gates_.size() || r >= gates_.size()) fail(ErrorKind::kInvalidArgument, "gate refers to a later gate");
  return push(Gate{GateOp::kAdd, l, r, {}});
}

std::uint32_t Circuit::mul(std::uint32_t l, std::uint32_t r) {
  if (l >= gates_.size() || r >= gates_.size()) fail(ErrorKind::kInvalidArgument, "gate refers to a later gate");
  return push(Gate{GateOp::kMul, l, r, {}});
}

void Circuit::set_output(std::uint32_t id) {
  if (id >= gates_.size()) fail(ErrorKind::kInvalidArgument, "output gate does not exist");
  output_ = id;
  has_output_ = true;
}

std::size_t Circuit::operation_count() const {
  std::size_t n = 0;
  for (const auto& g : gates_) n += g.op != GateOp::kInput;
  return n;
}

std::string Circuit::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const auto& g = gates_[i];
    switch (g.op) {
      case GateOp::kInput:
        os << i << " IN " << g.input << '\n';
        break;
      case GateOp::kAdd:
        os << i << " ADD " << g.left << ' ' << g.right << '\n';
        break;
      case GateOp::kMul:
        os << i << " MUL " << g.left << ' ' << g.right << '\n';
        break;
    }
  }
  os << "OUT " << output_ << '\n';
  return os.str();
}

namespace {

std::vector<std::string_view> words_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint32_t gate_id(std::string_view w, std::size_t line) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || ptr != w.data() + w.size()) throw ParseError(line, "bad gate id '" + std::string(w) + "'");
  return v;
}

bool is_integer(std::string_view s) {
  if (!s.empty() && s[0] == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Circuit Circuit::parse(std::string_view text) {
  Circuit c;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool done = false;
  while (pos < text.size()) {
    auto next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    ++line_no;
    const auto words = words_of(text.substr(pos, next - pos));
    pos = next + 1;
    if (words.empty()) continue;
    if (done) throw ParseError(line_no, "content after OUT");
    if (words[0] == "OUT") {
      if (words.size() != 2) throw ParseError(line_no, "OUT takes one gate id");
      const auto id = gate_id(words[1], line_no);
      if (id >= c.gates_.size()) throw ParseError(line_no, "OUT refers to a missing gate");
      c.set_output(id);
      done = true;
      continue;
    }
    const auto id = gate_id(words[0], line_no);
    if (id != c.gates_.size()) throw ParseError(line_no, "gate ids must be consecutive from 0");
    if (words.size() == 3 && words[1] == "IN") {
      c.input(std::string(words[2]));
      continue;
    }
    if (words.size() == 4 && (words[1] == "ADD" || words[1] == "MUL")) {
      const auto l = gate_id(words[2], line_no);
      const auto r = gate_id(words[3], line_no);
      if (l >= id || r >= id) throw ParseError(line_no, "gate operands must precede the gate");
      if (words[1] == "ADD") {
        c.add(l, r);
      } else {
        c.mul(l, r);
      }
      continue;
    }
    throw ParseError(line_no, "expected '<id> IN <x>', '<id> ADD <l> <r>' or '<id> MUL <l> <r>'");
  }
  if (!done) throw ParseError(line_no, "missing OUT line");
  return c;
}

mpq_class eval_circuit(const Circuit& c, const std::function<mpq_class(std::string_view)>& resolve) {
  const auto& gates = c.gates();
  if (gates.empty()) fail(ErrorKind::kInvalidArgument, "empty circuit");
  std::vector<mpq_class> val(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& g = gates[i];
    switch (g.op) {
      case GateOp::kInput:
        val[i] = is_integer(g.input) ? mpq_class(mpz_class(g.input, 10)) : resolve(g.input);
        break;
      case GateOp::kAdd:
        val[i] = val[g.left] + val[g.right];
        break;
      case GateOp::kMul:
        val[i] = val[g.left] * val[g.right];
        break;
    }
  }
  return val[c.output()];
}

mpq_class eval_circuit(const Circuit& c, const Graph& g, const Assignment& asg) {
  std::map<std::string, mpq_class, std::less<>> names;
  names["u"] = asg.u;
  names["v"] = asg.v;
  for (Vertex a = 0; a < g.size(); ++a) {
    names["x_" + std::to_string(g.label(a))] = asg.x.at(a);
    names["y_" + std::to_string(g.label(a))] = asg.y.at(a);
  }
  return eval_circuit(c, [&](std::string_view name) -> mpq_class {
    auto it = names.find(name);
    if (it == names.end()) fail(ErrorKind::kInvalidArgument, "unbound circuit variable '" + std::string(name) + "'");
    return it->second;
  });
}

namespace {

// A part is gate * v^offset; offsets are settled when parts are added and
// once more at the root, so no gate ever divides by v.
struct CircuitValue {
  std::uint32_t gate = 0;
  std::int32_t voff = 0;
};

class CircuitDomain {
 public:
  using Value = CircuitValue;
  static constexpr bool kThreadSafe = false;

  CircuitDomain(Circuit& c, const Graph& g) : c_(c), g_(g) {}

  Value one() { return {constant(1), 0}; }
  bool is_zero(const Value&) const { return false; }

  void accumulate(Value& acc, const Value& x) {
    const auto low = std::min(acc.voff, x.voff);
    const auto l = times_vpow(acc.gate, acc.voff - low);
    const auto r = times_vpow(x.gate, x.voff - low);
    acc = {c_.add(l, r), low};
  }

  Value product(const Value& a, const Value& b) { return {times(a.gate, b.gate), a.voff + b.voff}; }

  Value forget_term(const Value& val, Vertex a, bool in_b, int r, int n) {
    auto gate = times(val.gate, variable(in_b ? 'y' : 'x', a));
    if (r > 0) gate = times(gate, upow(r));
    const Value out{gate, val.voff + n};
    if (out.voff < 0) fail(ErrorKind::kInternal, "negative v offset in circuit part");
    return out;
  }

  std::uint32_t materialize(const Value& v) { return times_vpow(v.gate, v.voff); }
  std::uint32_t constant(int k) {
    auto& slot = k == 0 ? zero_ : one_;
    if (!slot) slot = c_.input(std::to_string(k));
    return *slot;
  }

 private:
  bool is_one(std::uint32_t gate) const { return one_ && *one_ == gate; }

  std::uint32_t times(std::uint32_t l, std::uint32_t r) {
    if (is_one(l)) return r;
    if (is_one(r)) return l;
    return c_.mul(l, r);
  }

  std::uint32_t variable(char kind, Vertex a) {
    auto& cache = kind == 'x' ? x_ : y_;
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    const auto id = c_.input(std::string(1, kind) + "_" + std::to_string(g_.label(a)));
    cache.emplace(a, id);
    return id;
  }

  std::uint32_t pow_gate(std::vector<std::uint32_t>& powers, const char* name, std::size_t k) {
    if (powers.empty()) powers.push_back(c_.input(name));
    while (powers.size() < k) powers.push_back(c_.mul(powers.back(), powers.front()));
    return powers[k - 1];
  }
  std::uint32_t upow(int k) { return pow_gate(u_pow_, "u", static_cast<std::size_t>(k)); }
  std::uint32_t times_vpow(std::uint32_t gate, int k) {
    if (k <= 0) return gate;
    return times(gate, pow_gate(v_pow_, "v", static_cast<std::size_t>(k)));
  }

  Circuit& c_;
  const Graph& g_;
  std::optional<std::uint32_t> zero_;
  std::optional<std::uint32_t> one_;
  std::unordered_map<Vertex, std::uint32_t> x_;
  std::unordered_map<Vertex, std::uint32_t> y_;
  std::vector<std::uint32_t> u_pow_;  // u_pow_[k-1] = u^k
  std::vector<std::uint32_t> v_pow_;
};

}  // namespace

Circuit build_circuit(const Graph& g, const NiceTreeDecomposition& ntd, const EvalOptions& opt, EvalStats* stats) {
  Circuit c;
  CircuitDomain dom(c, g);
  DpEngine<CircuitDomain> engine(g, ntd, dom, Mode::kStandard, opt);
  bool empty = false;
  const auto root = engine.run(empty);
  if (stats) *stats = engine.stats();
  c.set_output(empty ? dom.constant(0) : dom.materialize(root));
  return c;
}

}  // namespace interlace
