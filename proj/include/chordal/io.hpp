// Copyright 2026 The Chordal Transversals Authors
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

#ifndef CHORDAL_IO_HPP_
#define CHORDAL_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "chordal/chordal_rep.hpp"

namespace chordal {

// Text edge list: a line "n m", then m lines "u v" with 0-based ids. Blank
// lines and lines starting with '#' are skipped. Throws kParseError.
Graph ParseEdgeList(std::string_view text);
std::string FormatEdgeList(const Graph& g);

// Same format; the edges must form a tree (kNotATree otherwise).
Tree ParseTree(std::string_view text);

struct GraphInput {
  Graph graph;
  std::optional<TreeRep> rep;
};

// An edge list, or a JSON object {"n", "edges", optional "rep"} when the
// text starts with '{'. A report whose result is such an object is accepted
// too.
GraphInput ParseGraphInput(std::string_view text);

// Reads a whole file, or standard input for "-". Throws kParseError when
// the file cannot be opened.
std::string ReadInput(const std::string& path);

}  // namespace chordal

#endif  // CHORDAL_IO_HPP_
