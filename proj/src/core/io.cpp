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

#include "core/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "core/error.hpp"

namespace interlace {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view word, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected a non-negative integer, got '" + std::string(word) + "'");
  return value;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    ++line_no;
    f(line_no, text.substr(pos, next - pos));
    pos = next + 1;
  }
}

}  // namespace

GraphFile parse_gr(std::string_view text) {
  GraphFile out;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t declared_m = 0;
  std::size_t edge_lines = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto words = split_words(line);
    if (words.empty() || words[0] == "c") return;
    if (words[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (words.size() != 4 || words[1] != "tw") throw ParseError(line_no, "header must be 'p tw n m'");
      n = parse_uint(words[2], line_no);
      declared_m = parse_uint(words[3], line_no);
      have_header = true;
      return;
    }
    if (!have_header) throw ParseError(line_no, "edge before header");
    if (words.size() != 2) throw ParseError(line_no, "edge line must have two vertex ids");
    const auto a = parse_uint(words[0], line_no);
    const auto b = parse_uint(words[1], line_no);
    if (a < 1 || a > n || b < 1 || b > n) throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
    ++edge_lines;
    const std::pair<Vertex, Vertex> key = std::minmax(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    if (!seen.insert(key).second) {
      out.warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(a) + " " +
                             std::to_string(b) + " ignored");
      return;
    }
    edges.push_back(key);
  });
  if (!have_header) throw ParseError(1, "missing 'p tw n m' header");
  if (edge_lines != declared_m) {
    out.warnings.push_back("header declares " + std::to_string(declared_m) + " edges, file has " +
                           std::to_string(edge_lines));
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

std::string write_gr(const Graph& g) {
  std::vector<std::pair<std::int64_t, std::int64_t>> lines;
  for (Vertex a = 0; a < g.size(); ++a) {
    if (g.has_loop(a)) lines.emplace_back(a + 1, a + 1);
    for (auto b : g.neighbors(a)) {
      if (b > a) lines.emplace_back(a + 1, b + 1);
    }
  }
  std::ostringstream os;
  os << "p tw " << g.size() << ' ' << lines.size() << '\n';
  for (const auto& [a, b] : lines) os << a << ' ' << b << '\n';
  return os.str();
}

TreeDecomposition parse_td(std::string_view text, const Graph& g) {
  TreeDecomposition td;
  bool have_header = false;
  std::size_t bag_count = 0;
  std::vector<char> bag_seen;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto words = split_words(line);
    if (words.empty() || words[0] == "c") return;
    if (words[0] == "s") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (words.size() != 5 || words[1] != "td") throw ParseError(line_no, "header must be 's td N w+1 n'");
      bag_count = parse_uint(words[2], line_no);
      parse_uint(words[3], line_no);
      const auto n = parse_uint(words[4], line_no);
      if (n != g.size()) {
        throw ParseError(line_no, "decomposition is for " + std::to_string(n) + " vertices, graph has " +
                                      std::to_string(g.size()));
      }
      td.bags.assign(bag_count, {});
      bag_seen.assign(bag_count, 0);
      have_header = true;
      return;
    }
    if (!have_header) throw ParseError(line_no, "content before 's td' header");
    if (words[0] == "b") {
      if (words.size() < 2) throw ParseError(line_no, "bag line needs an id");
      const auto id = parse_uint(words[1], line_no);
      if (id < 1 || id > bag_count) throw ParseError(line_no, "bag id out of range");
      if (bag_seen[id - 1]) throw ParseError(line_no, "bag " + std::to_string(id) + " defined twice");
      bag_seen[id - 1] = 1;
      for (std::size_t i = 2; i < words.size(); ++i) {
        const auto v = parse_uint(words[i], line_no);
        if (v < 1 || v > g.size()) throw ParseError(line_no, "vertex id out of range");
        td.bags[id - 1].push_back(static_cast<Vertex>(v - 1));
      }
      return;
    }
    if (words.size() != 2) throw ParseError(line_no, "tree edge line must have two node ids");
    const auto a = parse_uint(words[0], line_no);
    const auto b = parse_uint(words[1], line_no);
    if (a < 1 || a > bag_count || b < 1 || b > bag_count) throw ParseError(line_no, "node id out of range");
    td.edges.emplace_back(a - 1, b - 1);
  });
  if (!have_header) throw ParseError(1, "missing 's td' header");
  for (std::size_t i = 0; i < bag_count; ++i) {
    if (!bag_seen[i]) throw ParseError(1, "bag " + std::to_string(i + 1) + " is never defined");
  }
  return td;
}

std::string write_td(const Graph& g, const TreeDecomposition& td) {
  std::ostringstream os;
  os << "s td " << td.bags.size() << ' ' << td.max_bag() << ' ' << g.size() << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    os << "b " << i + 1;
    for (auto v : td.bags[i]) os << ' ' << v + 1;
    os << '\n';
  }
  for (const auto& [a, b] : td.edges) os << a + 1 << ' ' << b + 1 << '\n';
  return os.str();
}

std::string write_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
  std::ostringstream os;
  os << "s ntd " << ntd.size() << ' ' << ntd.max_bag() << ' ' << g.size() << '\n';
  for (std::size_t i = 0; i < ntd.size(); ++i) {
    const auto& node = ntd.node(i);
    os << i + 1;
    switch (node.kind) {
      case NodeKind::kLeaf:
        os << " leaf";
        break;
      case NodeKind::kIntroduce:
        os << " introduce " << g.label(node.vertex) << ' ' << node.children[0] + 1;
        break;
      case NodeKind::kForget:
        os << " forget " << g.label(node.vertex) << ' ' << node.children[0] + 1;
        break;
      case NodeKind::kJoin:
        os << " join " << node.children[0] + 1 << ' ' << node.children[1] + 1;
        break;
    }
    os << '\n';
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kIo, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kIo, "cannot write " + path);
  out << text;
  if (!out) fail(ErrorKind::kIo, "error writing " + path);
}

GraphFile read_gr(const std::string& path) { return parse_gr(read_text_file(path)); }

TreeDecomposition read_td(const std::string& path, const Graph& g) { return parse_td(read_text_file(path), g); }

}  // namespace interlace
