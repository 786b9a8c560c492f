// Copyright 2026 The lincol Authors
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

#include "lincol/io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

namespace lincol {
namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto t = trim(raw);
    if (!t.empty()) out.push_back({number, t});
  }
  return out;
}

std::vector<long long> integers(const Line& line, std::string_view what) {
  std::vector<long long> out;
  std::string_view s = line.text;
  while (true) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    if (s.empty()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || (ptr != s.data() + s.size() && !std::isspace(static_cast<unsigned char>(*ptr)))) {
      throw ParseError(line.number, "malformed " + std::string(what) + " line");
    }
    out.push_back(value);
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  }
  return out;
}

// Splits "v: rest" into the vertex and the integers after the colon.
std::pair<Vertex, std::vector<long long>> keyed(const Line& line, int vertex_count, std::string_view what) {
  auto colon = line.text.find(':');
  if (colon == std::string_view::npos) throw ParseError(line.number, "malformed " + std::string(what) + " line");
  auto key = integers({line.number, line.text.substr(0, colon)}, what);
  if (key.size() != 1) throw ParseError(line.number, "malformed " + std::string(what) + " line");
  if (key[0] < 0 || key[0] >= vertex_count) throw ParseError(line.number, "vertex id out of range");
  return {static_cast<Vertex>(key[0]), integers({line.number, line.text.substr(colon + 1)}, what)};
}

std::pair<int, int> header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  auto h = integers(lines[0], "header");
  if (h.size() != 2 || h[0] < 0 || h[1] < 0 || h[0] > 100'000'000) {
    throw ParseError(lines[0].number, "malformed header, expected 'n m'");
  }
  return {static_cast<int>(h[0]), static_cast<int>(h[1])};
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? what + " at line " + std::to_string(line) : what), line_(line) {}

Graph parse_graph(std::string_view text) {
  auto lines = content_lines(text);
  auto [n, m] = header(lines);
  if (static_cast<int>(lines.size()) - 1 != m) {
    int where = static_cast<int>(lines.size()) - 1 > m ? lines[m + 1].number : 0;
    throw ParseError(where, "expected " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  Graph g(n);
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto e = integers(lines[i], "edge");
    if (e.size() != 2) throw ParseError(lines[i].number, "malformed edge line");
    if (e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n) throw ParseError(lines[i].number, "vertex id out of range");
    if (e[0] == e[1]) throw ParseError(lines[i].number, "self-loop");
    Edge edge{static_cast<Vertex>(std::min(e[0], e[1])), static_cast<Vertex>(std::max(e[0], e[1]))};
    if (!seen.insert(edge).second) throw ParseError(lines[i].number, "duplicate edge");
    g.add_edge(edge.first, edge.second);
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

RotationSystem parse_rotation(std::string_view text, const Graph& g) {
  auto lines = content_lines(text);
  auto [n, m] = header(lines);
  if (n != g.vertex_count() || m != g.edge_count()) {
    throw ParseError(lines[0].number, "rotation header does not match the graph");
  }
  RotationSystem rot;
  rot.order.resize(n);
  std::vector<char> given(n, 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [v, rest] = keyed(lines[i], n, "rotation");
    if (given[v]) throw ParseError(lines[i].number, "vertex listed twice");
    given[v] = 1;
    for (long long w : rest) {
      if (w < 0 || w >= n) throw ParseError(lines[i].number, "vertex id out of range");
      rot.order[v].push_back(static_cast<Vertex>(w));
    }
  }
  try {
    rot.validate(g);
  } catch (const EmbeddingError& e) {
    throw ParseError(0, e.what());
  }
  return rot;
}

std::string serialize_rotation(const Graph& g, const RotationSystem& rot) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << v << ':';
    for (Vertex w : rot.order[v]) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

LinearColoring parse_coloring(std::string_view text, int vertex_count) {
  LinearColoring col;
  col.color.assign(vertex_count, 0);
  for (const auto& line : content_lines(text)) {
    auto vc = integers(line, "coloring");
    if (vc.size() != 2) throw ParseError(line.number, "malformed coloring line");
    if (vc[0] < 0 || vc[0] >= vertex_count) throw ParseError(line.number, "vertex id out of range");
    if (vc[1] <= 0 || vc[1] > std::numeric_limits<int>::max()) throw ParseError(line.number, "colors must be positive");
    if (col.color[vc[0]] != 0) throw ParseError(line.number, "vertex colored twice");
    col.color[vc[0]] = static_cast<Color>(vc[1]);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (col.color[v] == 0) throw ParseError(0, "vertex " + std::to_string(v) + " has no color");
  }
  return col;
}

std::string serialize_coloring(const LinearColoring& col) {
  std::ostringstream out;
  for (std::size_t v = 0; v < col.color.size(); ++v) out << v << ' ' << col.color[v] << '\n';
  return out.str();
}

ListAssignment parse_lists(std::string_view text, int vertex_count) {
  std::vector<std::vector<Color>> lists(vertex_count);
  std::vector<char> given(vertex_count, 0);
  for (const auto& line : content_lines(text)) {
    auto [v, rest] = keyed(line, vertex_count, "list");
    if (given[v]) throw ParseError(line.number, "vertex listed twice");
    given[v] = 1;
    for (long long c : rest) {
      if (c <= 0 || c > std::numeric_limits<int>::max()) throw ParseError(line.number, "colors must be positive");
      lists[v].push_back(static_cast<Color>(c));
    }
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (!given[v]) throw ParseError(0, "vertex " + std::to_string(v) + " has no list");
  }
  return ListAssignment(std::move(lists));
}

std::string serialize_lists(const ListAssignment& lists) {
  std::ostringstream out;
  for (Vertex v = 0; v < lists.vertex_count(); ++v) {
    out << v << ':';
    for (Color c : lists.at(v)) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace lincol
