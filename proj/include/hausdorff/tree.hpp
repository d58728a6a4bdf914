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

#ifndef HAUSDORFF_TREE_HPP
#define HAUSDORFF_TREE_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hausdorff {

enum class TreeErrorKind {
  kEmpty,            // n < 1
  kVertexOutOfRange, // edge endpoint or root outside [0, n)
  kSelfLoop,
  kDuplicateEdge,
  kEdgeCountMismatch, // |E| != n - 1
  kDisconnected,
};

class TreeError : public std::runtime_error {
 public:
  TreeError(TreeErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  TreeErrorKind kind() const { return kind_; }

 private:
  TreeErrorKind kind_;
};

/// Immutable unrooted simple tree over dense 0-based vertex ids.
///
/// Construction validates the full tree contract (connected, acyclic,
/// simple); edges are stored normalized (min,max) and sorted, and every
/// adjacency list is sorted ascending, so identical inputs always produce
/// bit-identical trees.
class Tree {
 public:
  Tree(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1) {
      throw TreeError(TreeErrorKind::kEmpty, "tree needs at least one vertex");
    }
    for (auto& [a, b] : edges) {
      if (a < 0 || a >= n || b < 0 || b >= n) {
        throw TreeError(TreeErrorKind::kVertexOutOfRange,
                        "edge endpoint " + std::to_string(a < 0 || a >= n ? a : b) +
                            " outside [0, " + std::to_string(n) + ")");
      }
      if (a == b) {
        throw TreeError(TreeErrorKind::kSelfLoop,
                        "self-loop at vertex " + std::to_string(a));
      }
      if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw TreeError(TreeErrorKind::kDuplicateEdge, "duplicate edge");
    }
    if (static_cast<int>(edges.size()) != n - 1) {
      throw TreeError(TreeErrorKind::kEdgeCountMismatch,
                      "expected " + std::to_string(n - 1) + " edges, found " +
                          std::to_string(edges.size()));
    }
    edges_ = std::move(edges);
    adjacency_.assign(n_, {});
    for (const auto& [a, b] : edges_) {
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    // n-1 edges + connected => acyclic.
    if (reachable_from_zero() != n_) {
      throw TreeError(TreeErrorKind::kDisconnected, "graph is not connected");
    }
  }

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  bool operator==(const Tree& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }
  bool operator!=(const Tree& other) const { return !(*this == other); }

 private:
  int reachable_from_zero() const {
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          q.push(w);
        }
      }
    }
    return count;
  }

  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

inline Tree build_tree(int n, std::vector<std::pair<int, int>> edges) {
  return Tree(n, std::move(edges));
}

/// Hop distances from `source` to every vertex.
inline std::vector<int> bfs_distances(const Tree& tree, int source) {
  std::vector<int> dist(tree.vertex_count(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : tree.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

/// Hop distance from every vertex to the nearest vertex of `sources`.
inline std::vector<int> multi_source_bfs(const Tree& tree,
                                         const std::vector<int>& sources) {
  std::vector<int> dist(tree.vertex_count(), -1);
  std::queue<int> q;
  for (int s : sources) {
    if (dist[s] == 0) continue;
    dist[s] = 0;
    q.push(s);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : tree.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

/// Per-vertex eccentricities plus the derived radius, diameter and center.
struct MetricSummary {
  std::vector<int> eccentricity;
  int radius = 0;
  int diameter = 0;
  std::vector<int> center;  // sorted ascending, size 1 or 2
};

inline MetricSummary metric_summary(const Tree& tree) {
  MetricSummary m;
  const int n = tree.vertex_count();
  m.eccentricity.resize(n);
  for (int v = 0; v < n; ++v) {
    const auto dist = bfs_distances(tree, v);
    m.eccentricity[v] = *std::max_element(dist.begin(), dist.end());
  }
  m.radius = *std::min_element(m.eccentricity.begin(), m.eccentricity.end());
  m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
  for (int v = 0; v < n; ++v) {
    if (m.eccentricity[v] == m.radius) m.center.push_back(v);
  }
  return m;
}

/// A Tree together with a root and the arrays derived from that rooting.
///
/// `parent[root] == -1`; children lists are sorted ascending; `preorder`
/// visits every parent before all of its children, starting at the root.
struct RootedTree {
  Tree base;
  int root = 0;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<int> depth;
  std::vector<int> height;
  std::vector<int> preorder;

  bool is_leaf(int v) const { return children[v].empty(); }
};

inline RootedTree root_at(const Tree& tree, int root) {
  const int n = tree.vertex_count();
  if (root < 0 || root >= n) {
    throw TreeError(TreeErrorKind::kVertexOutOfRange,
                    "root " + std::to_string(root) + " outside [0, " +
                        std::to_string(n) + ")");
  }
  RootedTree rt{tree, root, std::vector<int>(n, -1), {}, std::vector<int>(n, 0),
                std::vector<int>(n, 0), {}};
  rt.children.assign(n, {});
  rt.preorder.reserve(n);
  // Iterative DFS; neighbors are sorted, so pushing them reversed keeps the
  // preorder visit order ascending among siblings.
  std::vector<int> stack{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    rt.preorder.push_back(v);
    const auto& nbrs = tree.neighbors(v);
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
      int w = *it;
      if (seen[w]) continue;
      seen[w] = 1;
      rt.parent[w] = v;
      rt.depth[w] = rt.depth[v] + 1;
      stack.push_back(w);
    }
    for (int w : nbrs) {
      if (w != rt.parent[v]) rt.children[v].push_back(w);
    }
  }
  // Children before parents in reverse preorder.
  for (auto it = rt.preorder.rbegin(); it != rt.preorder.rend(); ++it) {
    int v = *it;
    int h = 0;
    for (int c : rt.children[v]) h = std::max(h, rt.height[c] + 1);
    rt.height[v] = h;
  }
  return rt;
}

namespace detail {

/// AHU canonical form of the subtree rooted at v: "(" + sorted child forms + ")".
inline std::string canonical_rooted_form(const RootedTree& rt) {
  const int n = rt.base.vertex_count();
  std::vector<std::string> form(n);
  for (auto it = rt.preorder.rbegin(); it != rt.preorder.rend(); ++it) {
    int v = *it;
    std::vector<std::string> parts;
    parts.reserve(rt.children[v].size());
    for (int c : rt.children[v]) parts.push_back(std::move(form[c]));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    s += ")";
    form[v] = std::move(s);
  }
  return form[rt.root];
}

inline std::string canonical_form(const Tree& tree) {
  const auto m = metric_summary(tree);
  std::string best;
  for (int c : m.center) {
    std::string s = canonical_rooted_form(root_at(tree, c));
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

}  // namespace detail

/// Unrooted tree isomorphism via center-rooted canonical forms.
inline bool is_isomorphic(const Tree& a, const Tree& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  return detail::canonical_form(a) == detail::canonical_form(b);
}

}  // namespace hausdorff

#endif  // HAUSDORFF_TREE_HPP
