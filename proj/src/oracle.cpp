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

#include "chordal/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>

#include "chordal/error.hpp"

namespace chordal {

namespace {

using Mask = std::uint64_t;

constexpr Mask Bit(Vertex v) { return Mask{1} << v; }

Mask NeighborsOf(const Graph& g, Mask set) {
  Mask out = 0;
  while (set != 0) {
    out |= g.neighbor_mask(std::countr_zero(set));
    set &= set - 1;
  }
  return out;
}

// Number of vertices in `allowed` reachable from `from` through `allowed`,
// counting `from` itself.
int ReachableCount(const Graph& g, Vertex from, Mask allowed) {
  Mask reach = Bit(from);
  Mask frontier = reach;
  while (frontier != 0) {
    Mask next = NeighborsOf(g, frontier) & allowed & ~reach;
    reach |= next;
    frontier = next;
  }
  return std::popcount(reach);
}

void CheckCap(const Graph& g, int cap, const char* what) {
  if (g.vertex_count() > cap || g.vertex_count() > 64) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(g.vertex_count()) + " vertices exceed the " +
                    what + " oracle cap of " + std::to_string(cap));
  }
}

// Depth-first enumeration of longest paths starting at one vertex. Only the
// orientation with the smaller first vertex is kept.
class PathSearch {
 public:
  PathSearch(const Graph& g, int target, std::atomic<std::size_t>& budget)
      : g_(g), target_(target), budget_(budget) {}

  std::vector<std::vector<Vertex>> Run(Vertex start) {
    found_.clear();
    path_.assign(1, start);
    Extend(Bit(start));
    return std::move(found_);
  }

 private:
  void Extend(Mask used) {
    const Vertex end = path_.back();
    const int length = static_cast<int>(path_.size());
    if (length == target_) {
      if (path_.front() <= end && Take()) found_.push_back(path_);
      return;
    }
    if (budget_.load(std::memory_order_relaxed) == 0) return;
    const Mask all = g_.vertex_count() == 64
                         ? ~Mask{0}
                         : (Mask{1} << g_.vertex_count()) - 1;
    if (length - 1 + ReachableCount(g_, end, (all & ~used) | Bit(end)) <
        target_) {
      return;
    }
    Mask options = g_.neighbor_mask(end) & ~used;
    while (options != 0) {
      Vertex next = std::countr_zero(options);
      options &= options - 1;
      path_.push_back(next);
      Extend(used | Bit(next));
      path_.pop_back();
    }
  }

  // Claims one slot of the shared member budget.
  bool Take() {
    std::size_t left = budget_.load(std::memory_order_relaxed);
    while (left > 0 && !budget_.compare_exchange_weak(left, left - 1)) {
    }
    return left > 0;
  }

  const Graph& g_;
  int target_;
  std::atomic<std::size_t>& budget_;
  std::vector<Vertex> path_;
  std::vector<std::vector<Vertex>> found_;
};

// Longest cycles whose smallest vertex is `start`, oriented so the second
// vertex is smaller than the last.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, int target, std::atomic<std::size_t>& budget)
      : g_(g), target_(target), budget_(budget) {}

  std::vector<std::vector<Vertex>> Run(Vertex start) {
    found_.clear();
    path_.assign(1, start);
    const Mask all = g_.vertex_count() == 64
                         ? ~Mask{0}
                         : (Mask{1} << g_.vertex_count()) - 1;
    allowed_ = all & ~(Bit(start + 1) - 1);
    Extend(Bit(start));
    return std::move(found_);
  }

 private:
  void Extend(Mask used) {
    const Vertex end = path_.back();
    const int length = static_cast<int>(path_.size());
    if (length == target_) {
      if (g_.adjacent(end, path_.front()) && path_[1] < end && Take()) {
        found_.push_back(path_);
      }
      return;
    }
    if (budget_.load(std::memory_order_relaxed) == 0) return;
    if (length - 1 + ReachableCount(g_, end, (allowed_ & ~used) | Bit(end)) <
        target_) {
      return;
    }
    Mask options = g_.neighbor_mask(end) & allowed_ & ~used;
    while (options != 0) {
      Vertex next = std::countr_zero(options);
      options &= options - 1;
      path_.push_back(next);
      Extend(used | Bit(next));
      path_.pop_back();
    }
  }

  // Claims one slot of the shared member budget.
  bool Take() {
    std::size_t left = budget_.load(std::memory_order_relaxed);
    while (left > 0 && !budget_.compare_exchange_weak(left, left - 1)) {
    }
    return left > 0;
  }

  const Graph& g_;
  int target_;
  std::atomic<std::size_t>& budget_;
  Mask allowed_ = 0;
  std::vector<Vertex> path_;
  std::vector<std::vector<Vertex>> found_;
};

// A budget of max_members + 1 lets an overflow be told apart from a family
// of exactly max_members.
template <typename Search>
std::vector<std::vector<Vertex>> EnumerateSerial(
    const Graph& g, int target, std::atomic<std::size_t>& budget) {
  std::vector<std::vector<Vertex>> all;
  Search search(g, target, budget);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    auto found = search.Run(s);
    all.insert(all.end(), found.begin(), found.end());
  }
  return all;
}

template <typename Search>
std::vector<std::vector<Vertex>> EnumerateParallel(
    const Graph& g, int target, std::atomic<std::size_t>& budget) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::vector<Vertex>>> per_start(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 0; s < n; ++s) {
    Search search(g, target, budget);
    per_start[s] = search.Run(s);
  }
  std::vector<std::vector<Vertex>> all;
  for (auto& found : per_start) {
    all.insert(all.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  }
  return all;
}

template <typename Search>
std::vector<std::vector<Vertex>> Enumerate(const Graph& g, int target,
                                           const OracleConfig& config,
                                           const char* what) {
  std::atomic<std::size_t> budget(config.max_members + 1);
  auto members = config.parallel ? EnumerateParallel<Search>(g, target, budget)
                                 : EnumerateSerial<Search>(g, target, budget);
  if (members.size() > config.max_members) {
    throw Error(ErrorCode::kTooLarge,
                std::string("more than ") +
                    std::to_string(config.max_members) + " longest " + what);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

int LongestPathLength(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  CheckCap(g, 24, "path-length");
  // ends[mask]: vertices at which a path covering exactly `mask` can end.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (Vertex v = 0; v < n; ++v) ends[Bit(v)] = 1U << v;
  int best = 1;
  for (Mask mask = 1; mask < ends.size(); ++mask) {
    std::uint32_t current = ends[mask];
    if (current == 0) continue;
    best = std::max(best, std::popcount(mask));
    while (current != 0) {
      Vertex v = std::countr_zero(current);
      current &= current - 1;
      Mask options = g.neighbor_mask(v) & ~mask;
      while (options != 0) {
        Vertex w = std::countr_zero(options);
        options &= options - 1;
        ends[mask | Bit(w)] |= 1U << w;
      }
    }
  }
  return best;
}

int LongestCycleLength(const Graph& g) {
  const int n = g.vertex_count();
  CheckCap(g, 24, "cycle-length");
  int best = 0;
  for (Vertex s = 0; s + 2 < n; ++s) {
    // Paths from s through vertices above s; indices relative to s.
    const int m = n - s;
    std::vector<std::uint32_t> ends(std::size_t{1} << m, 0);
    ends[1] = 1;
    for (Mask mask = 1; mask < ends.size(); mask += 2) {
      std::uint32_t current = ends[mask];
      while (current != 0) {
        int i = std::countr_zero(current);
        current &= current - 1;
        if (std::popcount(mask) >= 3 && g.adjacent(s + i, s)) {
          best = std::max(best, std::popcount(mask));
        }
        Mask options = (g.neighbor_mask(s + i) >> s) & ~mask &
                       ((Mask{1} << m) - 1);
        while (options != 0) {
          int j = std::countr_zero(options);
          options &= options - 1;
          ends[mask | Bit(j)] |= 1U << j;
        }
      }
    }
  }
  return best;
}

LongestFamily LongestPaths(const Graph& g, const OracleConfig& config) {
  CheckCap(g, config.max_path_vertices, "path");
  LongestFamily family;
  family.kind = FamilyKind::kPath;
  if (g.vertex_count() == 0) return family;
  family.length = LongestPathLength(g);
  family.members = Enumerate<PathSearch>(g, family.length, config, "paths");
  return family;
}

LongestFamily LongestCycles(const Graph& g, const OracleConfig& config) {
  CheckCap(g, config.max_cycle_vertices, "cycle");
  LongestFamily family;
  family.kind = FamilyKind::kCycle;
  family.length = LongestCycleLength(g);
  if (family.length == 0) return family;
  family.members = Enumerate<CycleSearch>(g, family.length, config, "cycles");
  return family;
}

std::uint64_t VertexMask(std::span<const Vertex> vertices) {
  Mask mask = 0;
  for (Vertex v : vertices) mask |= Bit(v);
  return mask;
}

bool HitsAll(std::span<const Vertex> set, const LongestFamily& family) {
  const Mask chosen = VertexMask(set);
  return std::all_of(family.members.begin(), family.members.end(),
                     [&](const auto& m) { return (VertexMask(m) & chosen) != 0; });
}

namespace {

bool HittingSetSearch(const std::vector<Mask>& members, Mask chosen,
                      int budget, Mask& result) {
  auto unhit = std::find_if(members.begin(), members.end(),
                            [&](Mask m) { return (m & chosen) == 0; });
  if (unhit == members.end()) {
    result = chosen;
    return true;
  }
  if (budget == 0) return false;
  Mask options = *unhit;
  while (options != 0) {
    Vertex v = std::countr_zero(options);
    options &= options - 1;
    if (HittingSetSearch(members, chosen | Bit(v), budget - 1, result)) {
      return true;
    }
  }
  return false;
}

}  // namespace

VertexSet MinTransversal(const LongestFamily& family) {
  if (family.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "empty family");
  }
  std::vector<Mask> members;
  members.reserve(family.size());
  for (const auto& m : family.members) members.push_back(VertexMask(m));
  // Supersets of another member never change the answer.
  std::sort(members.begin(), members.end(), [](Mask a, Mask b) {
    return std::popcount(a) != std::popcount(b)
               ? std::popcount(a) < std::popcount(b)
               : a < b;
  });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int size = 1;; ++size) {
    Mask result = 0;
    if (HittingSetSearch(members, 0, size, result)) {
      VertexSet out;
      while (result != 0) {
        out.push_back(std::countr_zero(result));
        result &= result - 1;
      }
      return out;
    }
  }
}

namespace {

Graph WithoutSet(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> removed(g.vertex_count(), 0);
  for (Vertex v : set) removed[v] = 1;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!removed[v]) rest.push_back(v);
  }
  return g.InducedSubgraph(rest);
}

}  // namespace

bool MeetsAllLongestPaths(const Graph& g, std::span<const Vertex> set) {
  return LongestPathLength(WithoutSet(g, set)) < LongestPathLength(g);
}

bool MeetsAllLongestCycles(const Graph& g, std::span<const Vertex> set) {
  const int length = LongestCycleLength(g);
  return length == 0 || LongestCycleLength(WithoutSet(g, set)) < length;
}

std::optional<Vertex> GallaiVertex(const Graph& g) {
  if (!IsConnected(g)) throw Error(ErrorCode::kNotConnected, "graph");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Vertex single[] = {v};
    if (MeetsAllLongestPaths(g, single)) return v;
  }
  return std::nullopt;
}

}  // namespace chordal
