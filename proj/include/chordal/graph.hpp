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

#ifndef CHORDAL_GRAPH_HPP_
#define CHORDAL_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace chordal {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

// Simple undirected graph on dense ids 0..n-1. Immutable once built;
// neighbor lists are sorted so every traversal is deterministic.
class Graph {
 public:
  Graph() = default;
  // Throws kInvalidGraph on self-loops, parallel edges or ids out of range.
  Graph(int vertex_count, std::span<const Edge> edges);

  static Graph Complete(int n);
  static Graph Path(int n);
  static Graph Cycle(int n);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  // Neighborhood as a bitmask; only valid when vertex_count() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return masks_[v]; }
  bool has_masks() const { return !masks_.empty() || adjacency_.empty(); }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
  Graph InducedSubgraph(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> masks_;
  int edge_count_ = 0;
};

struct VertexPath {
  std::vector<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  friend auto operator<=>(const VertexPath&, const VertexPath&) = default;
};

// Interpreted cyclically; at least three vertices.
struct VertexCycle {
  std::vector<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
  friend auto operator<=>(const VertexCycle&, const VertexCycle&) = default;
};

bool IsPath(const Graph& g, const VertexPath& p);
bool IsCycle(const Graph& g, const VertexCycle& c);

std::vector<Edge> PathEdges(std::span<const Vertex> path);
std::vector<Edge> CycleEdges(std::span<const Vertex> cycle);

bool IsConnected(const Graph& g);
// Component label per vertex, labels numbered in order of smallest member.
std::vector<int> ConnectedComponents(const Graph& g);

// Largest k such that |V| > k and G - S is connected whenever |S| < k.
// Complete graphs return n - 1; the empty graph returns 0.
int VertexConnectivity(const Graph& g);

// Maximum number of internally disjoint x-y paths, via unit vertex
// capacities on the split digraph.
int LocalConnectivity(const Graph& g, Vertex x, Vertex y);

// k pairwise internally disjoint x-y paths. Throws
// kInsufficientConnectivity if fewer exist.
std::vector<VertexPath> InternallyDisjointPaths(const Graph& g, Vertex x,
                                                Vertex y, int k);

// A maximum family of pairwise vertex-disjoint (S,T)-paths whose interiors
// avoid S and T. The count equals the max-flow value, which is at least
// min{|S|, |T|, kappa(G)}.
std::vector<VertexPath> DisjointSetPaths(const Graph& g,
                                         std::span<const Vertex> s,
                                         std::span<const Vertex> t);

}  // namespace chordal

#endif  // CHORDAL_GRAPH_HPP_
