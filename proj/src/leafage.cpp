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

#include "chordal/leafage.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "chordal/error.hpp"
#include "detour.hpp"

namespace chordal {

namespace {

using Mask = std::uint64_t;

constexpr Mask Bit(Vertex v) { return Mask{1} << v; }

int ReachableCount(const Graph& g, Vertex from, Mask allowed) {
  Mask reach = Bit(from);
  Mask frontier = reach;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbor_mask(std::countr_zero(f));
    }
    next &= allowed & ~reach;
    reach |= next;
    frontier = next;
  }
  return std::popcount(reach);
}

// Depth-first over paths in lexicographic order; a path replaces the best
// only when strictly longer, so the first longest one is kept.
class HandySearch {
 public:
  HandySearch(const Graph& g, Mask outside) : g_(g), outside_(outside) {}

  std::vector<Vertex> Run(std::span<const Vertex> starts) {
    for (Vertex s : starts) {
      path_.assign(1, s);
      Extend(Bit(s));
    }
    return best_;
  }

 private:
  void Extend(Mask used) {
    const int length = static_cast<int>(path_.size());
    if (length > static_cast<int>(best_.size())) best_ = path_;
    const Vertex end = path_.back();
    const Mask free = outside_ & ~used;
    if (length - 1 + ReachableCount(g_, end, free | Bit(end)) <=
        static_cast<int>(best_.size())) {
      return;
    }
    for (Mask options = g_.neighbor_mask(end) & free; options != 0;
         options &= options - 1) {
      Vertex next = std::countr_zero(options);
      path_.push_back(next);
      Extend(used | Bit(next));
      path_.pop_back();
    }
  }

  const Graph& g_;
  Mask outside_;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
};

// Label of the component of T - x holding each node, by the neighbour of x
// it hangs from; x itself maps to x.
std::vector<Node> BranchOf(const Tree& host, Node x) {
  std::vector<Node> branch(host.node_count(), -1);
  branch[x] = x;
  for (Node start : host.neighbors(x)) {
    std::vector<Node> stack{start};
    branch[start] = start;
    while (!stack.empty()) {
      Node a = stack.back();
      stack.pop_back();
      for (Node b : host.neighbors(a)) {
        if (branch[b] == -1) {
          branch[b] = start;
          stack.push_back(b);
        }
      }
    }
  }
  return branch;
}

std::optional<AuxArc> ArcFrom(const Graph& g, const TreeRep& rep, Node x) {
  if (!MeetsAllLongestPaths(g, rep.bag(x))) return std::nullopt;
  AuxArc arc;
  arc.from = x;
  arc.handy = MaxHandyPath(g, rep, x);
  detail::Ensure(arc.handy.path.size() >= 2, "handy path with one vertex");
  const std::vector<Node> branch = BranchOf(rep.host(), x);
  arc.to = branch[rep.subtree(arc.handy.path[1]).front()];
  for (std::size_t i = 1; i < arc.handy.path.size(); ++i) {
    for (Node y : rep.subtree(arc.handy.path[i])) {
      detail::Ensure(branch[y] == arc.to, "handy tail spans two branches");
    }
  }
  return arc;
}

int LeafCountOnSide(const Tree& host, Node side, Node other,
                    NodeSet* leaves) {
  const std::vector<Node> branch = BranchOf(host, other);
  int count = 0;
  for (Node leaf : host.leaves()) {
    if (branch[leaf] == side) {
      ++count;
      if (leaves) leaves->push_back(leaf);
    }
  }
  return count;
}

void CheckInput(const Graph& g) {
  if (!IsConnected(g)) throw Error(ErrorCode::kNotConnected, "graph");
  if (!IsChordal(g)) throw Error(ErrorCode::kNotChordal, "graph");
}

}  // namespace

Node LptBag(const TreeRep& rep, const LongestFamily& paths) {
  if (paths.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "empty family");
  }
  std::vector<NodeSet> spans;
  spans.reserve(paths.size());
  for (const auto& p : paths.members) spans.push_back(SubtreeUnion(rep, p));
  return HellyPoint(rep.node_count(), spans);
}

HandyPath MaxHandyPath(const Graph& g, const TreeRep& rep, Node x) {
  if (rep.node_count() < 2) {
    throw Error(ErrorCode::kHostTooSmall, "single-node host");
  }
  const VertexSet& bag = rep.bag(x);
  const int n = g.vertex_count();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  HandySearch search(g, all & ~VertexMask(bag));
  return {search.Run(bag), x};
}

Vertex MaximalToward(const TreeRep& rep, Node x, Node y,
                     std::span<const Vertex> exclude) {
  const TreePath route = rep.host().PathBetween(x, y);
  std::optional<Vertex> best;
  std::size_t best_cover = 0;
  for (Vertex w : rep.bag(x)) {
    if (std::find(exclude.begin(), exclude.end(), w) != exclude.end()) {
      continue;
    }
    // S(w) is connected and holds x, so it covers a prefix of the route.
    std::size_t cover = 0;
    while (cover < route.size() && rep.Contains(w, route.nodes[cover])) {
      ++cover;
    }
    if (!best || cover > best_cover) {
      best = w;
      best_cover = cover;
    }
  }
  if (!best) throw Error(ErrorCode::kEmptyBag, "no eligible bag vertex");
  return *best;
}

std::vector<AuxArc> AuxDigraph(const Graph& g, const TreeRep& rep,
                               bool parallel) {
  const int nodes = rep.node_count();
  std::vector<std::optional<AuxArc>> per_node(nodes);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (int x = 0; x < nodes; ++x) {
    per_node[x] = ArcFrom(g, rep, x);
  }
  std::vector<AuxArc> arcs;
  for (auto& arc : per_node) {
    if (arc) arcs.push_back(std::move(*arc));
  }
  return arcs;
}

LeafageReport LeafageTransversal(const Graph& g, const OracleConfig& config) {
  if (g.vertex_count() == 0) {
    LeafageReport report;
    report.verified = true;
    return report;
  }
  CheckInput(g);
  return LeafageTransversal(g, MinimalTreeRepresentation(g), config);
}

LeafageReport LeafageTransversal(const Graph& g, const TreeRep& rep,
                                 const OracleConfig& config) {
  LeafageReport report;
  if (g.vertex_count() == 0) {
    report.verified = true;
    return report;
  }
  CheckInput(g);
  if (!rep.minimal() || !CheckRepresentation(g, rep).empty()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "representation is not a minimal representation of the graph");
  }
  report.member_length = LongestPathLength(g);

  if (rep.node_count() == 1) {
    report.complete = true;
    report.transversal = {rep.bag(0).front()};
    report.verified = MeetsAllLongestPaths(g, report.transversal);
    return report;
  }
  const Tree& host = rep.host();
  report.mmf = Mmf(host);

  LeafageTrace& trace = report.trace;
  trace.arcs = AuxDigraph(g, rep, config.parallel);
  detail::Ensure(!trace.arcs.empty(), "no node has a transversal bag");
  std::map<Node, Node> head;
  for (const AuxArc& arc : trace.arcs) head[arc.from] = arc.to;
  for (const AuxArc& arc : trace.arcs) {
    auto back = head.find(arc.to);
    if (arc.from < arc.to && back != head.end() && back->second == arc.from) {
      trace.two_cycles.emplace_back(arc.from, arc.to);
    }
  }
  detail::Ensure(!trace.two_cycles.empty(), "auxiliary digraph has no 2-cycle");

  const auto [x, y] = trace.two_cycles.front();
  NodeSet x_leaves, y_leaves;
  const int mx = LeafCountOnSide(host, x, y, &x_leaves);
  const int my = LeafCountOnSide(host, y, x, &y_leaves);
  if (my <= mx) {
    trace.anchor = x;
    trace.toward = y;
    trace.leaves = y_leaves;
  } else {
    trace.anchor = y;
    trace.toward = x;
    trace.leaves = x_leaves;
  }
  for (Node leaf : trace.leaves) {
    report.transversal.push_back(MaximalToward(rep, trace.anchor, leaf));
  }
  std::sort(report.transversal.begin(), report.transversal.end());
  report.transversal.erase(
      std::unique(report.transversal.begin(), report.transversal.end()),
      report.transversal.end());
  detail::Ensure(static_cast<int>(report.transversal.size()) <= report.mmf,
                 "transversal exceeds mmf");

  auto anchor_arc = std::find_if(
      trace.arcs.begin(), trace.arcs.end(),
      [&](const AuxArc& arc) { return arc.from == trace.anchor; });
  trace.handy = anchor_arc->handy;
  std::vector<Vertex>& q = trace.handy.path;
  if (!detail::Contains(report.transversal, q[0])) {
    auto triangle = std::find_if(
        report.transversal.begin(), report.transversal.end(), [&](Vertex u) {
          return g.adjacent(u, q[0]) && g.adjacent(u, q[1]);
        });
    detail::Ensure(triangle != report.transversal.end(),
                   "no transversal vertex closes a triangle on the handy path");
    q[0] = *triangle;
  }
  report.verified = MeetsAllLongestPaths(g, report.transversal);
  return report;
}

}  // namespace chordal
