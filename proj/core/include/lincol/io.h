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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lincol/graph.h"
#include "lincol/planar.h"
#include "lincol/verify.h"

namespace lincol {

// Malformed input; `line` is 1-based (0 when the problem is not tied to a
// single line, such as a missing edge).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Edge list: "n m" then m lines "u v". Blank lines and '#' comments are
// skipped.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// "n m" header followed by one "v: n1 n2 ... nd" line per vertex, listing
// its neighbors clockwise. Validated against `g`.
RotationSystem parse_rotation(std::string_view text, const Graph& g);
std::string serialize_rotation(const Graph& g, const RotationSystem& rot);

// One "v c" line per vertex.
LinearColoring parse_coloring(std::string_view text, int vertex_count);
std::string serialize_coloring(const LinearColoring& col);

// One "v: c1 c2 ..." line per vertex.
ListAssignment parse_lists(std::string_view text, int vertex_count);
std::string serialize_lists(const ListAssignment& lists);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace lincol
