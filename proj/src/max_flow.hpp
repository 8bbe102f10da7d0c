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

#ifndef CHORDAL_SRC_MAX_FLOW_HPP_
#define CHORDAL_SRC_MAX_FLOW_HPP_

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace chordal::detail {

// Dinic on a small integer-capacity digraph. Private to the graph module.
class MaxFlow {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

  explicit MaxFlow(int nodes) : graph_(nodes), level_(nodes), next_(nodes) {}

  int AddArc(int from, int to, int capacity) {
    graph_[from].push_back(
        {to, capacity, static_cast<int>(graph_[to].size()), capacity, true});
    graph_[to].push_back(
        {from, 0, static_cast<int>(graph_[from].size()) - 1, 0, false});
    return static_cast<int>(graph_[from].size()) - 1;
  }

  // Pushes at most `limit` units from source to sink.
  int Run(int source, int sink, int limit = kInfinite) {
    int flow = 0;
    while (flow < limit && Bfs(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (flow < limit) {
        int pushed = Dfs(source, sink, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  struct Arc {
    int to;
    int capacity;
    int reverse;
    int original;
    bool forward;
  };

  const std::vector<Arc>& arcs(int node) const { return graph_[node]; }
  int node_count() const { return static_cast<int>(graph_.size()); }

  // Flow currently routed along forward arc `index` out of `node`.
  int FlowOn(int node, int index) const {
    const Arc& arc = graph_[node][index];
    return arc.forward ? arc.original - arc.capacity : 0;
  }

 private:
  bool Bfs(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (const Arc& arc : graph_[u]) {
        if (arc.capacity > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[u] + 1;
          queue.push(arc.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  int Dfs(int u, int sink, int limit) {
    if (u == sink) return limit;
    for (int& i = next_[u]; i < static_cast<int>(graph_[u].size()); ++i) {
      Arc& arc = graph_[u][i];
      if (arc.capacity <= 0 || level_[arc.to] != level_[u] + 1) continue;
      int pushed = Dfs(arc.to, sink, std::min(limit, arc.capacity));
      if (pushed > 0) {
        arc.capacity -= pushed;
        graph_[arc.to][arc.reverse].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace chordal::detail

#endif  // CHORDAL_SRC_MAX_FLOW_HPP_
