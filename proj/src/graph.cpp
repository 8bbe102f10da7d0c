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

#include "chordal/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "chordal/error.hpp"
#include "max_flow.hpp"

namespace chordal {

Graph::Graph(int vertex_count, std::span<const Edge> edges)
    : adjacency_(vertex_count) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::kInvalidGraph, "negative vertex count");
  }
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::kInvalidGraph,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidGraph,
                  "self-loop at " + std::to_string(u));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorCode::kInvalidGraph, "parallel edge");
    }
  }
  edge_count_ = static_cast<int>(edges.size());
  if (vertex_count <= 64) {
    masks_.assign(vertex_count, 0);
    for (Vertex v = 0; v < vertex_count; ++v) {
      for (Vertex u : adjacency_[v]) masks_[v] |= std::uint64_t{1} << u;
    }
  }
}

Graph Graph::Complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph Graph::Path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph Graph::Cycle(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  if (n >= 3) edges.emplace_back(n - 1, 0);
  return Graph(n, edges);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!masks_.empty()) return (masks_[u] >> v) & 1U;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::InducedSubgraph(std::span<const Vertex> vertices) const {
  std::vector<int> index(vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : adjacency_[vertices[i]]) {
      int j = index[w];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

bool IsPath(const Graph& g, const VertexPath& p) {
  if (p.vertices.empty()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Vertex v = p.vertices[i];
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool IsCycle(const Graph& g, const VertexCycle& c) {
  if (c.size() < 3) return false;
  if (!IsPath(g, VertexPath{c.vertices})) return false;
  return g.adjacent(c.vertices.back(), c.vertices.front());
}

std::vector<Edge> PathEdges(std::span<const Vertex> path) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    out.emplace_back(path[i], path[i + 1]);
  }
  return out;
}

std::vector<Edge> CycleEdges(std::span<const Vertex> cycle) {
  std::vector<Edge> out = PathEdges(cycle);
  if (cycle.size() >= 3) out.emplace_back(cycle.back(), cycle.front());
  return out;
}

std::vector<int> ConnectedComponents(const Graph& g) {
  std::vector<int> label(g.vertex_count(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (label[s] >= 0) continue;
    std::queue<Vertex> queue;
    label[s] = next;
    queue.push(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (label[w] < 0) {
          label[w] = next;
          queue.push(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool IsConnected(const Graph& g) {
  auto label = ConnectedComponents(g);
  return std::all_of(label.begin(), label.end(),
                     [](int l) { return l == 0; });
}

namespace {

// Split digraph: v_in = 2v, v_out = 2v + 1.
int In(Vertex v) { return 2 * v; }
int Out(Vertex v) { return 2 * v + 1; }

// Builds the split network for x-y paths. Arcs into x_in and out of y_out
// are omitted so flow never loops back through the terminals.
detail::MaxFlow BuildPairNetwork(const Graph& g, Vertex x, Vertex y) {
  detail::MaxFlow flow(2 * g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == x || v == y) continue;
    flow.AddArc(In(v), Out(v), 1);
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (u == y) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v == x) continue;
      flow.AddArc(Out(u), In(v), 1);
    }
  }
  return flow;
}

// Follows one unit of flow from `start` to `stop`, consuming it. Each split
// node pair contributes its vertex once.
std::vector<Vertex> TakeFlowPath(const detail::MaxFlow& flow,
                                 std::vector<std::vector<int>>& remaining,
                                 int start, int stop, int vertex_nodes) {
  std::vector<Vertex> vertices;
  int node = start;
  while (node != stop) {
    const auto& arcs = flow.arcs(node);
    int chosen = -1;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (remaining[node][i] > 0) {
        chosen = static_cast<int>(i);
        break;
      }
    }
    if (chosen < 0) break;
    --remaining[node][chosen];
    int next = arcs[chosen].to;
    if (next < vertex_nodes && next % 2 == 0) vertices.push_back(next / 2);
    node = next;
  }
  return vertices;
}

std::vector<std::vector<int>> FlowTable(const detail::MaxFlow& flow) {
  std::vector<std::vector<int>> table(flow.node_count());
  for (int node = 0; node < flow.node_count(); ++node) {
    const auto& arcs = flow.arcs(node);
    table[node].resize(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      table[node][i] = flow.FlowOn(node, static_cast<int>(i));
    }
  }
  return table;
}

}  // namespace

int LocalConnectivity(const Graph& g, Vertex x, Vertex y) {
  auto flow = BuildPairNetwork(g, x, y);
  return flow.Run(Out(x), In(y));
}

int VertexConnectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (!IsConnected(g)) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;
  int best = n - 1;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      best = std::min(best, LocalConnectivity(g, u, v));
      if (best == 1) return best;
    }
  }
  return best;
}

std::vector<VertexPath> InternallyDisjointPaths(const Graph& g, Vertex x,
                                                Vertex y, int k) {
  if (x == y) {
    throw Error(ErrorCode::kPreconditionViolated, "endpoints must differ");
  }
  auto flow = BuildPairNetwork(g, x, y);
  int value = flow.Run(Out(x), In(y), k);
  if (value < k) {
    throw Error(ErrorCode::kInsufficientConnectivity,
                "only " + std::to_string(value) + " internally disjoint paths");
  }
  auto remaining = FlowTable(flow);
  std::vector<VertexPath> paths;
  for (int i = 0; i < k; ++i) {
    VertexPath path;
    path.vertices.push_back(x);
    for (Vertex v : TakeFlowPath(flow, remaining, Out(x), In(y),
                                 2 * g.vertex_count())) {
      path.vertices.push_back(v);
    }
    paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::vector<VertexPath> DisjointSetPaths(const Graph& g,
                                         std::span<const Vertex> s,
                                         std::span<const Vertex> t) {
  const int n = g.vertex_count();
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  detail::MaxFlow flow(2 * n + 2);
  std::vector<char> in_s(n, 0), in_t(n, 0);
  for (Vertex v : s) in_s[v] = 1;
  for (Vertex v : t) in_t[v] = 1;
  for (Vertex v = 0; v < n; ++v) {
    flow.AddArc(In(v), Out(v), 1);
    if (in_s[v]) flow.AddArc(source, In(v), 1);
    if (in_t[v]) flow.AddArc(Out(v), sink, 1);
    for (Vertex w : g.neighbors(v)) flow.AddArc(Out(v), In(w), 1);
  }
  int value = flow.Run(source, sink);
  auto remaining = FlowTable(flow);
  std::vector<VertexPath> paths;
  for (int i = 0; i < value; ++i) {
    auto walk = TakeFlowPath(flow, remaining, source, sink, 2 * n);
    // Shorten to an (S,T)-path: last S vertex, then first T vertex after it.
    std::size_t first = 0;
    for (std::size_t j = 0; j < walk.size(); ++j) {
      if (in_s[walk[j]]) first = j;
    }
    std::size_t last = first;
    while (!in_t[walk[last]]) ++last;
    paths.push_back(VertexPath{
        std::vector<Vertex>(walk.begin() + first, walk.begin() + last + 1)});
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

}  // namespace chordal
