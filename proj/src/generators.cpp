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

#include "chordal/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "chordal/error.hpp"

namespace chordal {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr int kRetryBudget = 1000;

std::uint64_t Mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::Next() {
  state_ += kGolden;
  return Mix(state_);
}

std::uint64_t SplitMix64::Uniform(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = Next();
  while (x >= limit) x = Next();
  return x % bound;
}

bool SplitMix64::Bernoulli(double p) {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53 < p;
}

SplitMix64 SplitMix64::Split(std::uint64_t index) const {
  return SplitMix64(Mix(state_ ^ Mix(index + kGolden)));
}

std::string_view GenKindName(GenKind kind) {
  switch (kind) {
    case GenKind::kChordal:
      return "chordal";
    case GenKind::kChordal2Conn:
      return "chordal2conn";
    case GenKind::kInterval:
      return "interval";
    case GenKind::kSplit:
      return "split";
    case GenKind::kSubstarHost:
      return "substar_host";
    case GenKind::kCaterpillarHost:
      return "caterpillar_host";
    case GenKind::kNamed:
      return "named";
  }
  return "unknown";
}

GenKind ParseGenKind(std::string_view name) {
  for (auto kind : {GenKind::kChordal, GenKind::kChordal2Conn,
                    GenKind::kInterval, GenKind::kSplit, GenKind::kSubstarHost,
                    GenKind::kCaterpillarHost, GenKind::kNamed}) {
    if (GenKindName(kind) == name) return kind;
  }
  throw Error(ErrorCode::kParseError,
              "unknown generator kind '" + std::string(name) + "'");
}

Graph PetersenFragment() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 9; ++v) edges.emplace_back(v, (v + 1) % 9);
  for (Edge e : {Edge{1, 5}, Edge{2, 7}, Edge{4, 8}, Edge{0, 9}, Edge{3, 10},
                 Edge{6, 11}}) {
    edges.push_back(e);
  }
  return Graph(12, edges);
}

namespace {

Graph Relabel(SplitMix64& rng, int n, const std::vector<Edge>& edges) {
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(label[i], label[rng.Uniform(i + 1)]);
  }
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) out.emplace_back(label[u], label[v]);
  return Graph(n, out);
}

// Each new vertex joins a random clique inside the closed neighbourhood of a
// random earlier vertex, so the insertion order reversed eliminates
// perfectly.
Graph SequentialChordal(SplitMix64& rng, int n, double density,
                        bool two_connected) {
  std::vector<std::vector<Vertex>> adjacency(n);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const Vertex u = static_cast<Vertex>(rng.Uniform(v));
    std::vector<Vertex> candidates = adjacency[u];
    for (int i = static_cast<int>(candidates.size()) - 1; i > 0; --i) {
      std::swap(candidates[i], candidates[rng.Uniform(i + 1)]);
    }
    std::vector<Vertex> clique{u};
    for (Vertex w : candidates) {
      bool joins = std::all_of(clique.begin(), clique.end(), [&](Vertex c) {
        return std::count(adjacency[w].begin(), adjacency[w].end(), c) > 0;
      });
      if (joins && rng.Bernoulli(density)) clique.push_back(w);
    }
    if (two_connected && clique.size() < 2 && !candidates.empty()) {
      clique.push_back(candidates.front());
    }
    for (Vertex c : clique) {
      adjacency[c].push_back(v);
      adjacency[v].push_back(c);
      edges.emplace_back(c, v);
    }
  }
  return Relabel(rng, n, edges);
}

// Intervals sorted by left end; each starts no later than the furthest right
// end so far, which keeps the graph connected.
Graph RandomInterval(SplitMix64& rng, int n) {
  const int max_length = std::max(2, n / 2);
  std::vector<std::pair<int, int>> intervals;
  int left = 0;
  int reach = static_cast<int>(rng.Uniform(max_length)) + 1;
  intervals.emplace_back(0, reach);
  for (int i = 1; i < n; ++i) {
    left += static_cast<int>(rng.Uniform(reach - left + 1));
    int right = left + 1 + static_cast<int>(rng.Uniform(max_length));
    intervals.emplace_back(left, right);
    reach = std::max(reach, right);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::max(intervals[i].first, intervals[j].first) <=
          std::min(intervals[i].second, intervals[j].second)) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Relabel(rng, n, edges);
}

// Clique on the first k vertices; every other vertex sees a nonempty random
// subset of the clique.
Graph RandomSplit(SplitMix64& rng, int n, double density) {
  const int k = 1 + static_cast<int>(rng.Uniform(n));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  for (Vertex v = k; v < n; ++v) {
    std::vector<Vertex> seen;
    for (Vertex c = 0; c < k; ++c) {
      if (rng.Bernoulli(density)) seen.push_back(c);
    }
    if (seen.empty()) seen.push_back(static_cast<Vertex>(rng.Uniform(k)));
    for (Vertex c : seen) edges.emplace_back(c, v);
  }
  return Relabel(rng, n, edges);
}

NodeSet GrowSubtree(SplitMix64& rng, const Tree& host, int target) {
  std::set<Node> nodes{static_cast<Node>(rng.Uniform(host.node_count()))};
  while (static_cast<int>(nodes.size()) < target) {
    std::vector<Node> frontier;
    for (Node x : nodes) {
      for (Node y : host.neighbors(x)) {
        if (!nodes.count(y)) frontier.push_back(y);
      }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()),
                   frontier.end());
    if (frontier.empty()) break;
    nodes.insert(frontier[rng.Uniform(frontier.size())]);
  }
  return {nodes.begin(), nodes.end()};
}

Instance HostShaped(SplitMix64& rng, const Tree& host, int n) {
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    SplitMix64 trial = rng.Split(attempt);
    std::vector<NodeSet> subtrees;
    for (int v = 0; v < n; ++v) {
      subtrees.push_back(
          GrowSubtree(trial, host, 1 + static_cast<int>(trial.Uniform(4))));
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        std::vector<Node> common;
        std::set_intersection(subtrees[u].begin(), subtrees[u].end(),
                              subtrees[v].begin(), subtrees[v].end(),
                              std::back_inserter(common));
        if (!common.empty()) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    if (!IsConnected(g)) continue;
    return {g, TreeRep(host, std::move(subtrees), false)};
  }
  throw Error(ErrorCode::kGenerationFailed,
              "no connected host-shaped instance within the retry budget");
}

void RequireSize(const GenSpec& spec, int minimum) {
  if (spec.n < minimum) {
    throw Error(ErrorCode::kGenerationFailed,
                std::string(GenKindName(spec.kind)) + " needs n >= " +
                    std::to_string(minimum));
  }
}

}  // namespace

Instance Generate(const GenSpec& spec) {
  SplitMix64 rng(spec.seed);
  Instance instance;
  switch (spec.kind) {
    case GenKind::kChordal:
      RequireSize(spec, 1);
      instance.graph = SequentialChordal(rng, spec.n, spec.density, false);
      break;
    case GenKind::kChordal2Conn: {
      RequireSize(spec, 3);
      bool found = false;
      for (int attempt = 0; attempt < kRetryBudget && !found; ++attempt) {
        SplitMix64 trial = rng.Split(attempt);
        instance.graph = SequentialChordal(trial, spec.n, spec.density, true);
        found = VertexConnectivity(instance.graph) >= 2;
      }
      if (!found) {
        throw Error(ErrorCode::kGenerationFailed,
                    "no 2-connected instance within the retry budget");
      }
      break;
    }
    case GenKind::kInterval:
      RequireSize(spec, 1);
      instance.graph = RandomInterval(rng, spec.n);
      break;
    case GenKind::kSplit:
      RequireSize(spec, 1);
      instance.graph = RandomSplit(rng, spec.n, spec.density);
      break;
    case GenKind::kSubstarHost:
      RequireSize(spec, 1);
      instance = HostShaped(rng, Tree::Spider(spec.legs, spec.leg_length),
                            spec.n);
      break;
    case GenKind::kCaterpillarHost:
      RequireSize(spec, 1);
      instance =
          HostShaped(rng, Tree::Caterpillar(spec.spine, spec.legs), spec.n);
      break;
    case GenKind::kNamed:
      if (spec.name != "petersen_fragment") {
        throw Error(ErrorCode::kGenerationFailed,
                    "unknown named instance '" + spec.name + "'");
      }
      instance.graph = PetersenFragment();
      return instance;
  }
  if (!IsChordal(instance.graph)) {
    throw Error(ErrorCode::kGenerationFailed, "generated graph is not chordal");
  }
  return instance;
}

}  // namespace chordal
