// Copyright 2026 The hausdorff-trees Authors
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

#ifndef HAUSDORFF_MATCHING_HPP
#define HAUSDORFF_MATCHING_HPP

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hausdorff {

constexpr int kDummyId = -1;

/// Complete weighted bipartite instance on p slots per side.
///
/// Slots carry the original tree-vertex id they stand for, or kDummyId for
/// the padding slots on the smaller side. At most one side has dummies.
struct WeightedBipartiteInstance {
  int p = 0;
  int left_real = 0;
  int right_real = 0;
  std::vector<std::vector<int>> weight;  // p x p, weight[left][right]
  std::vector<int> left_ids;
  std::vector<int> right_ids;

  bool left_is_dummy(int i) const { return left_ids[i] == kDummyId; }
  bool right_is_dummy(int j) const { return right_ids[j] == kDummyId; }
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (left slot, right slot)
  int bottleneck = 0;  // largest matched weight, for weighted use

  int size() const { return static_cast<int>(pairs.size()); }
};

namespace detail {

/// Layered augmenting-path search (Hopcroft-Karp). Deterministic: left slots
/// are processed in ascending order and adjacency lists are scanned as given.
class HopcroftKarp {
 public:
  HopcroftKarp(int p, const std::vector<std::vector<int>>& allowed)
      : p_(p), allowed_(allowed), match_left_(p, -1), match_right_(p, -1),
        layer_(p, 0), scan_(p, 0) {}

  int run() {
    int matched = 0;
    while (bfs_layers()) {
      std::fill(scan_.begin(), scan_.end(), 0);
      for (int u = 0; u < p_; ++u) {
        if (match_left_[u] < 0 && augment(u)) ++matched;
      }
    }
    return matched;
  }

  const std::vector<int>& match_left() const { return match_left_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs_layers() {
    std::vector<int> queue;
    queue.reserve(p_);
    for (int u = 0; u < p_; ++u) {
      if (match_left_[u] < 0) {
        layer_[u] = 0;
        queue.push_back(u);
      } else {
        layer_[u] = kInf;
      }
    }
    bool reachable_free_right = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : allowed_[u]) {
        int next = match_right_[v];
        if (next < 0) {
          reachable_free_right = true;
        } else if (layer_[next] == kInf) {
          layer_[next] = layer_[u] + 1;
          queue.push_back(next);
        }
      }
    }
    return reachable_free_right;
  }

  // Per-phase scan cursors keep the DFS work of one phase linear in the edges.
  bool augment(int u) {
    for (std::size_t& k = scan_[u]; k < allowed_[u].size(); ++k) {
      int v = allowed_[u][k];
      int next = match_right_[v];
      if (next < 0 || (layer_[next] == layer_[u] + 1 && augment(next))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    layer_[u] = kInf;
    return false;
  }

  int p_;
  const std::vector<std::vector<int>>& allowed_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> layer_;
  std::vector<std::size_t> scan_;
};

}  // namespace detail

/// Maximum-cardinality matching of the bipartite graph on p+p slots where
/// left slot i may be matched to any right slot in allowed[i].
inline Matching hopcroft_karp(int p, const std::vector<std::vector<int>>& allowed) {
  if (static_cast<int>(allowed.size()) != p) {
    throw std::invalid_argument("allowed must list exactly p left slots");
  }
  for (const auto& row : allowed) {
    for (int v : row) {
      if (v < 0 || v >= p) {
        throw std::invalid_argument("right slot index out of range");
      }
    }
  }
  detail::HopcroftKarp solver(p, allowed);
  solver.run();
  Matching m;
  const auto& match_left = solver.match_left();
  for (int u = 0; u < p; ++u) {
    if (match_left[u] >= 0) m.pairs.emplace_back(u, match_left[u]);
  }
  return m;
}

/// Perfect matching of a complete instance minimizing the largest matched
/// weight. Binary search over the sorted distinct weights; each probe runs
/// Hopcroft-Karp on the subgraph of edges with weight <= the pivot.
inline Matching solve_optimal_perfect_matching(const WeightedBipartiteInstance& inst) {
  const int p = inst.p;
  std::vector<int> weights;
  weights.reserve(static_cast<std::size_t>(p) * p);
  for (const auto& row : inst.weight) {
    weights.insert(weights.end(), row.begin(), row.end());
  }
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());

  auto solve_at = [&](int w) {
    std::vector<std::vector<int>> allowed(p);
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        if (inst.weight[i][j] <= w) allowed[i].push_back(j);
      }
    }
    detail::HopcroftKarp solver(p, allowed);
    int size = solver.run();
    return std::make_pair(size, solver.match_left());
  };

  std::vector<int> best_match;
  int lo = 0;
  int hi = static_cast<int>(weights.size()) - 1;
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    auto [size, match] = solve_at(weights[mid]);
    if (size == p) {
      best_match = std::move(match);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (best_match.empty() && p > 0) {
    auto [size, match] = solve_at(weights[lo]);
    if (size != p) {
      throw std::logic_error("complete bipartite instance has no perfect matching");
    }
    best_match = std::move(match);
  }

  Matching m;
  for (int i = 0; i < p; ++i) {
    m.pairs.emplace_back(i, best_match[i]);
    m.bottleneck = std::max(m.bottleneck, inst.weight[i][best_match[i]]);
  }
  return m;
}

/// Exhaustive bottleneck oracle: min over all p! assignments of the largest
/// matched weight. Guarded to p <= 8.
inline int brute_force_bottleneck(const WeightedBipartiteInstance& inst) {
  if (inst.p > 8) {
    throw std::invalid_argument("brute_force_bottleneck limited to p <= 8, got " +
                                std::to_string(inst.p));
  }
  std::vector<int> perm(inst.p);
  std::iota(perm.begin(), perm.end(), 0);
  int best = std::numeric_limits<int>::max();
  do {
    int worst = 0;
    for (int i = 0; i < inst.p; ++i) {
      worst = std::max(worst, inst.weight[i][perm[i]]);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace hausdorff

#endif  // HAUSDORFF_MATCHING_HPP
