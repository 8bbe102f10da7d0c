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

#include "chordal/chordal_rep.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

#include "chordal/error.hpp"

namespace chordal {

namespace {

std::vector<Vertex> MaximumCardinalitySearch(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
    }
    numbered[best] = 1;
    visit.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!numbered[w]) ++weight[w];
    }
  }
  // The reverse of the visit order is the elimination order.
  std::reverse(visit.begin(), visit.end());
  return visit;
}

bool IsEliminationOrder(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> position(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) later.push_back(w);
    }
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        if (!g.adjacent(later[i], later[j])) return false;
      }
    }
  }
  return true;
}

// Shortest a-b path avoiding `blocked`; empty if none.
std::vector<Vertex> ShortestPathAvoiding(const Graph& g, Vertex a, Vertex b,
                                         const std::vector<char>& blocked) {
  std::vector<Vertex> previous(g.vertex_count(), -1);
  std::queue<Vertex> queue;
  previous[a] = a;
  queue.push(a);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    if (u == b) break;
    for (Vertex w : g.neighbors(u)) {
      if (!blocked[w] && previous[w] < 0) {
        previous[w] = u;
        queue.push(w);
      }
    }
  }
  if (previous[b] < 0) return {};
  std::vector<Vertex> path;
  for (Vertex u = b; u != a; u = previous[u]) path.push_back(u);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

VertexCycle FindChordlessCycle(const Graph& g) {
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Vertex a = nb[i];
        Vertex b = nb[j];
        if (g.adjacent(a, b)) continue;
        std::vector<char> blocked(n, 0);
        blocked[v] = 1;
        for (Vertex w : nb) {
          if (w != a && w != b) blocked[w] = 1;
        }
        auto path = ShortestPathAvoiding(g, a, b, blocked);
        if (path.empty()) continue;
        VertexCycle cycle;
        cycle.vertices.push_back(v);
        cycle.vertices.insert(cycle.vertices.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  throw Error(ErrorCode::kInvariantViolation,
              "elimination check failed but no chordless cycle exists");
}

}  // namespace

ChordalityResult RecognizeChordal(const Graph& g) {
  auto order = MaximumCardinalitySearch(g);
  if (IsEliminationOrder(g, order)) return PerfectEliminationOrder{order};
  return ChordlessCycleWitness{FindChordlessCycle(g)};
}

bool IsChordal(const Graph& g) {
  return IsEliminationOrder(g, MaximumCardinalitySearch(g));
}

std::vector<VertexSet> MaximalCliques(const Graph& g,
                                      const PerfectEliminationOrder& peo) {
  std::vector<int> position(g.vertex_count());
  for (std::size_t i = 0; i < peo.order.size(); ++i) {
    position[peo.order[i]] = static_cast<int>(i);
  }
  std::vector<VertexSet> candidates;
  for (Vertex v : peo.order) {
    VertexSet clique{v};
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) clique.push_back(w);
    }
    std::sort(clique.begin(), clique.end());
    candidates.push_back(std::move(clique));
  }
  std::vector<VertexSet> maximal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < candidates.size() && !contained; ++j) {
      if (i == j || candidates[j].size() < candidates[i].size()) continue;
      if (candidates[j].size() == candidates[i].size() && j > i) continue;
      contained = std::includes(candidates[j].begin(), candidates[j].end(),
                                candidates[i].begin(), candidates[i].end());
    }
    if (!contained) maximal.push_back(candidates[i]);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

TreeRep::TreeRep(Tree host, std::vector<NodeSet> subtrees, bool minimal)
    : host_(std::move(host)), subtrees_(std::move(subtrees)),
      minimal_(minimal) {
  const int nodes = host_.node_count();
  bags_.assign(nodes, {});
  member_.assign(subtrees_.size() * nodes, 0);
  for (Vertex v = 0; v < vertex_count(); ++v) {
    auto& s = subtrees_[v];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "vertex " + std::to_string(v) + " has an empty subtree");
    }
    for (Node x : s) {
      if (x < 0 || x >= nodes) {
        throw Error(ErrorCode::kPreconditionViolated,
                    "subtree node out of range");
      }
      member_[static_cast<std::size_t>(v) * nodes + x] = 1;
      bags_[x].push_back(v);
    }
  }
}

TreeRep MinimalTreeRepresentation(const Graph& g) {
  if (g.vertex_count() == 0) throw Error(ErrorCode::kTooSmall, "empty graph");
  if (!IsConnected(g)) throw Error(ErrorCode::kNotConnected, "graph");
  auto recognition = RecognizeChordal(g);
  const auto* peo = std::get_if<PerfectEliminationOrder>(&recognition);
  if (peo == nullptr) throw Error(ErrorCode::kNotChordal, "graph");
  auto cliques = MaximalCliques(g, *peo);
  const int k = static_cast<int>(cliques.size());

  std::vector<std::tuple<int, int, int>> candidates;  // (-weight, i, j)
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::vector<Vertex> common;
      std::set_intersection(cliques[i].begin(), cliques[i].end(),
                            cliques[j].begin(), cliques[j].end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        candidates.emplace_back(-static_cast<int>(common.size()), i, j);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Edge> host_edges;
  for (auto [weight, i, j] : candidates) {
    int a = find(i);
    int b = find(j);
    if (a == b) continue;
    parent[a] = b;
    host_edges.emplace_back(i, j);
  }
  std::vector<NodeSet> subtrees(g.vertex_count());
  for (int x = 0; x < k; ++x) {
    for (Vertex v : cliques[x]) subtrees[v].push_back(x);
  }
  return TreeRep(Tree(k, host_edges), std::move(subtrees), true);
}

TreeRep MinimizeRepresentation(const TreeRep& rep) {
  std::vector<Edge> edges = rep.host().edges();
  std::vector<NodeSet> subtrees(rep.vertex_count());
  for (Vertex v = 0; v < rep.vertex_count(); ++v) subtrees[v] = rep.subtree(v);
  int nodes = rep.node_count();

  for (;;) {
    std::vector<VertexSet> bags(nodes);
    for (Vertex v = 0; v < rep.vertex_count(); ++v) {
      for (Node x : subtrees[v]) bags[x].push_back(v);
    }
    // Find an edge (from, into) with B(from) a subset of B(into).
    Node from = -1;
    Node into = -1;
    for (auto [a, b] : edges) {
      if (std::includes(bags[b].begin(), bags[b].end(), bags[a].begin(),
                        bags[a].end())) {
        from = a;
        into = b;
      } else if (std::includes(bags[a].begin(), bags[a].end(),
                               bags[b].begin(), bags[b].end())) {
        from = b;
        into = a;
      }
      if (from >= 0) break;
    }
    if (from < 0) break;
    // Every subtree through `from` also passes `into`, so dropping `from`
    // and re-hanging its other neighbours on `into` keeps subtrees connected.
    auto renumber = [from](Node x) { return x > from ? x - 1 : x; };
    std::vector<Edge> next_edges;
    for (auto [a, b] : edges) {
      if ((a == from && b == into) || (a == into && b == from)) continue;
      if (a == from) a = into;
      if (b == from) b = into;
      next_edges.emplace_back(std::min(renumber(a), renumber(b)),
                              std::max(renumber(a), renumber(b)));
    }
    std::sort(next_edges.begin(), next_edges.end());
    edges = std::move(next_edges);
    for (auto& s : subtrees) {
      NodeSet next;
      for (Node x : s) {
        if (x != from) next.push_back(renumber(x));
      }
      s = std::move(next);
    }
    --nodes;
  }
  return TreeRep(Tree(nodes, edges), std::move(subtrees), true);
}

std::vector<std::string> CheckRepresentation(const Graph& g,
                                             const TreeRep& rep) {
  std::vector<std::string> problems;
  const int n = g.vertex_count();
  if (rep.vertex_count() != n) {
    problems.push_back("vertex count mismatch");
    return problems;
  }
  const Tree& host = rep.host();
  for (Vertex v = 0; v < n; ++v) {
    const NodeSet& s = rep.subtree(v);
    // Connected iff BFS inside S(v) reaches every member.
    std::vector<char> seen(host.node_count(), 0);
    std::queue<Node> queue;
    seen[s.front()] = 1;
    queue.push(s.front());
    std::size_t reached = 1;
    while (!queue.empty()) {
      Node x = queue.front();
      queue.pop();
      for (Node y : host.neighbors(x)) {
        if (!seen[y] && rep.Contains(v, y)) {
          seen[y] = 1;
          ++reached;
          queue.push(y);
        }
      }
    }
    if (reached != s.size()) {
      problems.push_back("S(" + std::to_string(v) + ") is not connected");
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      bool meet = false;
      for (Node x : rep.subtree(u)) meet = meet || rep.Contains(v, x);
      if (meet != g.adjacent(u, v)) {
        problems.push_back("edge coverage fails for " + std::to_string(u) +
                           "," + std::to_string(v));
      }
    }
  }
  for (Node x = 0; x < rep.node_count(); ++x) {
    for (Vertex v : rep.bag(x)) {
      if (!rep.Contains(v, x)) problems.push_back("bag/subtree mismatch");
    }
  }
  if (!rep.minimal()) return problems;

  if (rep.node_count() > std::max(n, 1)) {
    problems.push_back("more host nodes than vertices");
  }
  for (Node x = 0; x < rep.node_count(); ++x) {
    const VertexSet& bag = rep.bag(x);
    for (Node y = 0; y < rep.node_count(); ++y) {
      if (x != y && std::includes(rep.bag(y).begin(), rep.bag(y).end(),
                                  bag.begin(), bag.end())) {
        problems.push_back("bag " + std::to_string(x) + " inside bag " +
                           std::to_string(y));
      }
    }
    for (Vertex w = 0; w < n; ++w) {
      if (std::binary_search(bag.begin(), bag.end(), w)) continue;
      bool extends = std::all_of(bag.begin(), bag.end(),
                                 [&](Vertex v) { return g.adjacent(v, w); });
      if (extends) {
        problems.push_back("bag " + std::to_string(x) +
                           " is not a maximal clique");
        break;
      }
    }
    if (n >= 2 && IsConnected(g) && bag.size() < 2) {
      problems.push_back("bag " + std::to_string(x) + " has fewer than two "
                         "vertices");
    }
  }
  return problems;
}

NodeSet Core(const TreeRep& rep, std::span<const Edge> edges) {
  std::vector<char> in_core(rep.node_count(), 0);
  for (auto [u, v] : edges) {
    for (Node x : rep.subtree(u)) {
      if (rep.Contains(v, x)) in_core[x] = 1;
    }
  }
  NodeSet out;
  for (Node x = 0; x < rep.node_count(); ++x) {
    if (in_core[x]) out.push_back(x);
  }
  return out;
}

NodeSet PathCore(const TreeRep& rep, std::span<const Vertex> path) {
  auto edges = PathEdges(path);
  return Core(rep, edges);
}

NodeSet CycleCore(const TreeRep& rep, std::span<const Vertex> cycle) {
  auto edges = CycleEdges(cycle);
  return Core(rep, edges);
}

bool CoreCapture(std::span<const Node> w, std::span<const NodeSet> cores) {
  NodeSet sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  for (const NodeSet& core : cores) {
    bool meets = std::any_of(core.begin(), core.end(), [&](Node x) {
      return std::binary_search(sorted.begin(), sorted.end(), x);
    });
    if (!meets) return false;
  }
  return true;
}

bool CoreCapture(const TreeRep& rep, std::span<const Node> w,
                 std::span<const std::vector<Edge>> family) {
  std::vector<NodeSet> cores;
  for (const auto& edges : family) cores.push_back(Core(rep, edges));
  return CoreCapture(w, cores);
}

namespace {

// For each core, the indices along q of the nodes whose component, once the
// edges of q are cut, holds one of its nodes. Core nodes outside the view
// contribute nothing.
std::vector<std::vector<int>> AttachIndices(const RootedView& view,
                                            const TreePath& q,
                                            std::span<const NodeSet> cores) {
  const RootedTree& t = view.tree();
  std::vector<int> index_on_q(t.node_count(), -1);
  for (std::size_t i = 0; i < q.size(); ++i) index_on_q[q.nodes[i]] = i;
  std::vector<int> attach(t.node_count(), -1);
  for (Node x : view.nodes()) {
    Node u = x;
    while (index_on_q[u] < 0) u = t.parent(u);
    attach[x] = index_on_q[u];
  }
  std::vector<std::vector<int>> out;
  out.reserve(cores.size());
  for (const NodeSet& core : cores) {
    std::vector<int> indices;
    for (Node x : core) {
      if (attach[x] >= 0) indices.push_back(attach[x]);
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    out.push_back(std::move(indices));
  }
  return out;
}

bool CapturedRange(const std::vector<std::vector<int>>& attach, int lo,
                   int hi) {
  for (const auto& indices : attach) {
    auto it = std::lower_bound(indices.begin(), indices.end(), lo);
    if (it == indices.end() || *it > hi) return false;
  }
  return true;
}

std::pair<int, int> LocateSubpath(const TreePath& q, const TreePath& sub) {
  auto it = std::find(q.nodes.begin(), q.nodes.end(), sub.front());
  if (it == q.nodes.end()) {
    throw Error(ErrorCode::kPreconditionViolated, "subpath not on q");
  }
  int lo = static_cast<int>(it - q.nodes.begin());
  int hi = lo + static_cast<int>(sub.size()) - 1;
  if (hi >= static_cast<int>(q.size()) ||
      !std::equal(sub.nodes.begin(), sub.nodes.end(), q.nodes.begin() + lo)) {
    throw Error(ErrorCode::kPreconditionViolated, "subpath not on q");
  }
  return {lo, hi};
}

}  // namespace

bool DescendantsCapture(const RootedView& view, const TreePath& q,
                        const TreePath& q0, std::span<const NodeSet> cores) {
  auto [lo, hi] = LocateSubpath(q, q0);
  return CapturedRange(AttachIndices(view, q, cores), lo, hi);
}

TreePath MinimalCaptureSubpath(const RootedView& view, const TreePath& q,
                               const TreePath& within,
                               std::span<const NodeSet> cores) {
  auto attach = AttachIndices(view, q, cores);
  auto [lo, hi] = LocateSubpath(q, within);
  if (!CapturedRange(attach, lo, hi)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "the search path itself lacks core capture");
  }
  while (hi > lo && CapturedRange(attach, lo, hi - 1)) --hi;
  while (lo < hi && CapturedRange(attach, lo + 1, hi)) ++lo;
  return TreePath{
      std::vector<Node>(q.nodes.begin() + lo, q.nodes.begin() + hi + 1)};
}

TreePath MinimalCaptureSubpath(const RootedView& view, const TreePath& q,
                               std::span<const NodeSet> cores) {
  return MinimalCaptureSubpath(view, q, q, cores);
}

VertexSet SpanningVertices(const TreeRep& rep, const TreePath& q0, int k,
                           std::span<const Vertex> forbidden) {
  VertexSet out;
  for (Vertex v = 0; v < rep.vertex_count() && static_cast<int>(out.size()) < k;
       ++v) {
    if (std::find(forbidden.begin(), forbidden.end(), v) != forbidden.end()) {
      continue;
    }
    bool spans = std::all_of(q0.nodes.begin(), q0.nodes.end(),
                             [&](Node x) { return rep.Contains(v, x); });
    if (spans) out.push_back(v);
  }
  if (static_cast<int>(out.size()) < k) {
    throw Error(ErrorCode::kSpanDeficit,
                "only " + std::to_string(out.size()) + " of " +
                    std::to_string(k) + " spanning vertices");
  }
  return out;
}

NodeSet SubtreeUnion(const TreeRep& rep, std::span<const Vertex> vertices) {
  std::vector<char> on(rep.node_count(), 0);
  for (Vertex v : vertices) {
    for (Node x : rep.subtree(v)) on[x] = 1;
  }
  NodeSet out;
  for (Node x = 0; x < rep.node_count(); ++x) {
    if (on[x]) out.push_back(x);
  }
  return out;
}

}  // namespace chordal
