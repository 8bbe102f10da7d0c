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

#include "chordal/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chordal/error.hpp"
#include "chordal/report.hpp"

namespace chordal {

namespace {

// Non-empty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> ContentLines(std::string_view text) {
  std::vector<std::pair<int, std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.emplace_back(number, line);
  }
  return lines;
}

std::pair<int, int> ReadPair(const std::pair<int, std::string>& line) {
  std::istringstream in(line.second);
  long long a = 0, b = 0;
  std::string rest;
  if (!(in >> a >> b) || (in >> rest) || a < 0 || b < 0 || a > 1 << 20 ||
      b > 1 << 26) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line.first) +
                    ": expected two non-negative integers");
  }
  return {static_cast<int>(a), static_cast<int>(b)};
}

std::pair<int, std::vector<Edge>> ReadEdgeList(std::string_view text) {
  const auto lines = ContentLines(text);
  if (lines.empty()) throw Error(ErrorCode::kParseError, "empty input");
  const auto [n, m] = ReadPair(lines.front());
  if (static_cast<int>(lines.size()) - 1 != m) {
    throw Error(ErrorCode::kParseError,
                "header promises " + std::to_string(m) + " edges, found " +
                    std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) edges.push_back(ReadPair(lines[i]));
  return {n, edges};
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  auto [n, edges] = ReadEdgeList(text);
  return Graph(n, edges);
}

std::string FormatEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Tree ParseTree(std::string_view text) {
  auto [n, edges] = ReadEdgeList(text);
  return Tree(n, edges);
}

GraphInput ParseGraphInput(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || text[first] != '{') {
    return {ParseEdgeList(text), std::nullopt};
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  // A report from `gen` carries the graph as its result.
  if (j.is_object() && j.contains("schema_version") && j.contains("result")) {
    j = Json(j.at("result"));
  }
  GraphInput input{GraphFromJson(j), std::nullopt};
  if (j.contains("rep")) input.rep = TreeRepFromJson(j.at("rep"));
  return input;
}

std::string ReadInput(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace chordal
