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

#ifndef HAUSDORFF_ORACLE_HPP
#define HAUSDORFF_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hausdorff/tree.hpp"

namespace hausdorff {

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleConfig {
  int max_vertices = 9;                    // cap per input tree
  std::uint64_t node_budget = 200'000'000; // recursion-state cap
};

namespace detail {

/// Exhaustive minimizer over rooted top-down common subtree isomorphisms.
///
/// For a matched pair (v, u) it enumerates every injective partial assignment
/// of children(v) to children(u); a child left out on either side puts its
/// whole subtree outside the common part, and the farthest vertex of that
/// subtree sits height+1 hops from the nearest mapped vertex. Branches whose
/// running maximum already reaches the best known value are abandoned.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const RootedTree& a, const RootedTree& b,
                   std::uint64_t node_budget)
      : a_(a), b_(b), budget_(node_budget) {}

  int best_cover_distance(int v, int u) {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) << 32) |
        static_cast<std::uint32_t>(u);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    spend();
    // Assigning nothing charges every child subtree on both sides.
    int best = std::max(a_.height[v], b_.height[u]);
    std::vector<char> used(b_.children[u].size(), 0);
    descend(v, u, 0, used, 0, best);
    memo_.emplace(key, best);
    return best;
  }

 private:
  void spend() {
    if (++states_ > budget_) {
      throw OracleLimitError("oracle recursion budget exceeded");
    }
  }

  void descend(int v, int u, std::size_t idx, std::vector<char>& used,
               int running_max, int& best) {
    if (running_max >= best) return;  // cannot improve
    spend();
    const auto& cv = a_.children[v];
    const auto& cu = b_.children[u];
    if (idx == cv.size()) {
      int total = running_max;
      for (std::size_t j = 0; j < cu.size(); ++j) {
        if (!used[j]) total = std::max(total, b_.height[cu[j]] + 1);
      }
      best = std::min(best, total);
      return;
    }
    const int child = cv[idx];
    for (std::size_t j = 0; j < cu.size(); ++j) {
      if (used[j]) continue;
      const int sub = best_cover_distance(child, cu[j]);
      used[j] = 1;
      descend(v, u, idx + 1, used, std::max(running_max, sub), best);
      used[j] = 0;
    }
    // Drop this child entirely.
    descend(v, u, idx + 1, used, std::max(running_max, a_.height[child] + 1), best);
  }

  const RootedTree& a_;
  const RootedTree& b_;
  std::uint64_t budget_;
  std::uint64_t states_ = 0;
  std::unordered_map<std::uint64_t, int> memo_;
};

inline void check_caps(const Tree& t1, const Tree& t2, const OracleConfig& config) {
  if (t1.vertex_count() > config.max_vertices ||
      t2.vertex_count() > config.max_vertices) {
    throw OracleLimitError(
        "oracle limited to " + std::to_string(config.max_vertices) +
        " vertices per tree");
  }
}

}  // namespace detail

/// Minimum cover distance over all rooted top-down common subtree
/// isomorphisms of (t1 rooted at a) and (t2 rooted at b) that map a to b.
inline int oracle_rooted(const Tree& t1, int a, const Tree& t2, int b,
                         const OracleConfig& config = {}) {
  detail::check_caps(t1, t2, config);
  const RootedTree rt1 = root_at(t1, a);
  const RootedTree rt2 = root_at(t2, b);
  detail::ExhaustiveSearch search(rt1, rt2, config.node_budget);
  return search.best_cover_distance(a, b);
}

/// Exhaustive Hausdorff distance: zero for isomorphic trees, otherwise the
/// minimum of the rooted search over every pair of roots.
inline int oracle_hausdorff(const Tree& t1, const Tree& t2,
                            const OracleConfig& config = {}) {
  detail::check_caps(t1, t2, config);
  if (is_isomorphic(t1, t2)) return 0;
  int best = std::numeric_limits<int>::max();
  for (int a = 0; a < t1.vertex_count(); ++a) {
    for (int b = 0; b < t2.vertex_count(); ++b) {
      best = std::min(best, oracle_rooted(t1, a, t2, b, config));
    }
  }
  return best;
}

}  // namespace hausdorff

#endif  // HAUSDORFF_ORACLE_HPP
