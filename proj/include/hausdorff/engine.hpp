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

#ifndef HAUSDORFF_ENGINE_HPP
#define HAUSDORFF_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hausdorff/matching.hpp"
#include "hausdorff/tree.hpp"

namespace hausdorff {

/// Set of ordered (left-tree vertex, right-tree vertex) pairs. Used both as
/// the accumulator of matching solutions and as the final mapping.
class PairSet {
 public:
  void insert(int v, int w) {
    if (index_.insert(key(v, w)).second) pairs_.emplace_back(v, w);
  }

  bool contains(int v, int w) const { return index_.count(key(v, w)) > 0; }

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  void clear() {
    pairs_.clear();
    index_.clear();
  }

 private:
  static std::uint64_t key(int v, int w) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) << 32) |
           static_cast<std::uint32_t>(w);
  }

  std::vector<std::pair<int, int>> pairs_;
  std::unordered_set<std::uint64_t> index_;
};

struct HausdorffResult {
  int distance = 0;
  int root1 = 0;  // mapped root in the first input tree
  int root2 = 0;  // mapped root in the second input tree
  std::vector<std::pair<int, int>> mapping;  // sorted by first coordinate
  bool swapped = false;  // inputs exchanged so the first engine tree had the
                         // larger diameter; mapping is reported unswapped
};

struct CoverDistanceReport {
  bool valid = false;
  int cover_distance = -1;
};

/// Bipartite instance over children(v) x children(u); the smaller child set
/// is padded with dummy slots so both sides have p = max(|children(v)|,
/// |children(u)|) slots. An edge touching a dummy costs the real endpoint's
/// height + 1 (the price of leaving that whole child subtree unmapped);
/// real-real edges get child_weight(x, y).
template <typename WeightFn>
WeightedBipartiteInstance build_child_instance(const RootedTree& rt1, int v,
                                               const RootedTree& rt2, int u,
                                               WeightFn&& child_weight) {
  const auto& left = rt1.children[v];
  const auto& right = rt2.children[u];
  if (left.empty() || right.empty()) {
    throw std::logic_error("build_child_instance called on a leaf pair");
  }
  WeightedBipartiteInstance inst;
  inst.left_real = static_cast<int>(left.size());
  inst.right_real = static_cast<int>(right.size());
  inst.p = std::max(inst.left_real, inst.right_real);
  inst.left_ids.assign(inst.p, kDummyId);
  inst.right_ids.assign(inst.p, kDummyId);
  std::copy(left.begin(), left.end(), inst.left_ids.begin());
  std::copy(right.begin(), right.end(), inst.right_ids.begin());
  inst.weight.assign(inst.p, std::vector<int>(inst.p, 0));
  for (int i = 0; i < inst.p; ++i) {
    for (int j = 0; j < inst.p; ++j) {
      int x = inst.left_ids[i];
      int y = inst.right_ids[j];
      if (x == kDummyId) {
        inst.weight[i][j] = rt2.height[y] + 1;
      } else if (y == kDummyId) {
        inst.weight[i][j] = rt1.height[x] + 1;
      } else {
        inst.weight[i][j] = child_weight(x, y);
      }
    }
  }
  return inst;
}

/// Distance between the covers of an optimal top-down amalgam of the subtree
/// of rt1 rooted at v and the subtree of rt2 rooted at u.
///
/// Recurses over child pairs, prices each pairing by this same distance, and
/// combines them through a bottleneck perfect matching. Every real pair of a
/// solved matching (dummy-incident edges dropped) is unioned into `acc`.
inline int optimal_top_down_common_subtree(const RootedTree& rt1, int v,
                                           const RootedTree& rt2, int u,
                                           PairSet& acc) {
  if (rt1.is_leaf(v) || rt2.is_leaf(u)) {
    return std::max(rt1.height[v], rt2.height[u]);
  }
  auto inst = build_child_instance(rt1, v, rt2, u, [&](int x, int y) {
    return optimal_top_down_common_subtree(rt1, x, rt2, y, acc);
  });
  Matching matching = solve_optimal_perfect_matching(inst);
  for (const auto& [i, j] : matching.pairs) {
    if (!inst.left_is_dummy(i) && !inst.right_is_dummy(j)) {
      acc.insert(inst.left_ids[i], inst.right_ids[j]);
    }
  }
  return matching.bottleneck;
}

/// Filters the accumulator down to the unique rooted-isomorphism mapping:
/// starting from the root pair, a pair (v, w) survives iff its parent pair
/// already survived, with the first tree scanned in preorder.
inline PairSet reconstruction_of_mapping(const RootedTree& rt1,
                                         const RootedTree& rt2,
                                         const PairSet& m_prime) {
  PairSet mapping;
  mapping.insert(rt1.root, rt2.root);
  std::vector<std::vector<int>> partners(rt1.base.vertex_count());
  for (const auto& [v, w] : m_prime.pairs()) partners[v].push_back(w);
  for (auto& list : partners) std::sort(list.begin(), list.end());
  for (int v : rt1.preorder) {
    if (v == rt1.root) continue;
    int chosen = -1;
    for (int w : partners[v]) {
      if (w == rt2.root) continue;
      if (mapping.contains(rt1.parent[v], rt2.parent[w])) {
        if (chosen >= 0) {
          throw std::logic_error(
              "ambiguous reconstruction: two partners share a parent pair");
        }
        chosen = w;
      }
    }
    if (chosen >= 0) mapping.insert(v, chosen);
  }
  return mapping;
}

namespace detail {

struct RootCandidateResult {
  int distance = std::numeric_limits<int>::max();
  int root = -1;
  PairSet accumulator;

  bool better_than(const RootCandidateResult& other) const {
    if (distance != other.distance) return distance < other.distance;
    return root < other.root;
  }
};

/// Runs the rooted procedure for every candidate root of `small` and keeps
/// the minimizer (smallest root id on ties).
inline RootCandidateResult best_root_scan(const RootedTree& rt_big,
                                          const Tree& small, int thread_count) {
  const int n = small.vertex_count();
  auto scan_range = [&](int begin, int end, RootCandidateResult& best) {
    PairSet acc;
    for (int u = begin; u < end; ++u) {
      acc.clear();
      RootedTree rt_small = root_at(small, u);
      int d = optimal_top_down_common_subtree(rt_big, rt_big.root, rt_small, u, acc);
      if (d < best.distance) {
        best.distance = d;
        best.root = u;
        best.accumulator = std::move(acc);
        acc = PairSet();
      }
    }
  };

  if (thread_count <= 1 || n < 2) {
    RootCandidateResult best;
    scan_range(0, n, best);
    return best;
  }

  const int workers = std::min(thread_count, n);
  std::vector<RootCandidateResult> results(workers);
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    const int begin = static_cast<int>(static_cast<std::int64_t>(n) * t / workers);
    const int end = static_cast<int>(static_cast<std::int64_t>(n) * (t + 1) / workers);
    pool.emplace_back([&, begin, end, t] {
      try {
        scan_range(begin, end, results[t]);
      } catch (...) {
        failures[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  // Chunks are in ascending root order, so this reduction is deterministic
  // regardless of thread completion order.
  RootCandidateResult best = std::move(results[0]);
  for (int t = 1; t < workers; ++t) {
    if (results[t].better_than(best)) best = std::move(results[t]);
  }
  return best;
}

}  // namespace detail

/// Hausdorff distance between two trees with a witnessing common-subtree
/// isomorphism.
///
/// The larger-diameter tree is rooted at its smallest central vertex; the
/// other tree is rooted at every vertex in turn and the best rooted result
/// is kept. `thread_count` > 1 distributes the root loop; 0 means one thread
/// per hardware core. Results are identical for every thread count.
inline HausdorffResult hausdorff_distance(const Tree& t1, const Tree& t2,
                                          int thread_count = 1) {
  if (thread_count == 0) {
    thread_count = static_cast<int>(std::thread::hardware_concurrency());
    if (thread_count < 1) thread_count = 1;
  }
  const MetricSummary m1 = metric_summary(t1);
  const MetricSummary m2 = metric_summary(t2);
  const bool swapped = m1.diameter < m2.diameter;
  const Tree& big = swapped ? t2 : t1;
  const Tree& small = swapped ? t1 : t2;
  const int r1 = (swapped ? m2 : m1).center.front();

  RootedTree rt_big = root_at(big, r1);
  detail::RootCandidateResult best = detail::best_root_scan(rt_big, small, thread_count);

  RootedTree rt_small = root_at(small, best.root);
  PairSet mapping = reconstruction_of_mapping(rt_big, rt_small, best.accumulator);

  HausdorffResult result;
  result.distance = best.distance;
  result.swapped = swapped;
  result.root1 = swapped ? best.root : r1;
  result.root2 = swapped ? r1 : best.root;
  result.mapping.reserve(mapping.size());
  for (const auto& [v, w] : mapping.pairs()) {
    result.mapping.emplace_back(swapped ? w : v, swapped ? v : w);
  }
  std::sort(result.mapping.begin(), result.mapping.end());
  return result;
}

/// Independent check of a result: validates that the mapping is a rooted-tree
/// isomorphism of top-down subtrees under the reported roots, and recomputes
/// the distance between the covers as the larger of the two per-tree maxima
/// of the hop distance to the mapped vertex set.
inline CoverDistanceReport verify_mapping(const Tree& t1, const Tree& t2,
                                          const HausdorffResult& result) {
  CoverDistanceReport report;
  const auto& mapping = result.mapping;
  if (mapping.empty()) return report;

  const int n1 = t1.vertex_count();
  const int n2 = t2.vertex_count();
  std::vector<int> image_of(n1, -1);
  std::vector<int> preimage_of(n2, -1);
  for (const auto& [v, w] : mapping) {
    if (v < 0 || v >= n1 || w < 0 || w >= n2) return report;
    if (image_of[v] != -1 || preimage_of[w] != -1) return report;  // not injective
    image_of[v] = w;
    preimage_of[w] = v;
  }

  std::vector<int> mapped1;
  std::vector<int> mapped2;
  for (const auto& [v, w] : mapping) {
    mapped1.push_back(v);
    mapped2.push_back(w);
  }
  const auto d1 = multi_source_bfs(t1, mapped1);
  const auto d2 = multi_source_bfs(t2, mapped2);
  report.cover_distance = std::max(*std::max_element(d1.begin(), d1.end()),
                                   *std::max_element(d2.begin(), d2.end()));

  if (result.root1 < 0 || result.root1 >= n1 || result.root2 < 0 ||
      result.root2 >= n2) {
    return report;
  }
  if (image_of[result.root1] != result.root2) return report;
  const RootedTree rt1 = root_at(t1, result.root1);
  const RootedTree rt2 = root_at(t2, result.root2);
  for (const auto& [v, w] : mapping) {
    if (v == result.root1) continue;
    if (w == result.root2) return report;
    const int pv = rt1.parent[v];
    const int pw = rt2.parent[w];
    if (image_of[pv] != pw) return report;  // parent pair missing
  }
  report.valid = true;
  return report;
}

}  // namespace hausdorff

#endif  // HAUSDORFF_ENGINE_HPP
