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

#ifndef HAUSDORFF_RANDOM_TREE_HPP
#define HAUSDORFF_RANDOM_TREE_HPP

#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "hausdorff/tree.hpp"

namespace hausdorff {

/// Uniform random labeled tree on n vertices, decoded from a random Prüfer
/// sequence. Bit-reproducible for a fixed (n, seed) on every platform: the
/// sequence entries are mt19937_64 outputs reduced mod n.
inline Tree gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) {
    throw TreeError(TreeErrorKind::kEmpty, "tree needs at least one vertex");
  }
  if (n == 1) return Tree(1, {});
  if (n == 2) return Tree(2, {{0, 1}});

  std::mt19937_64 rng(seed);
  std::vector<int> sequence(n - 2);
  for (int& s : sequence) {
    s = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  }

  std::vector<int> degree(n, 1);
  for (int s : sequence) ++degree[s];
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int s : sequence) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1) leaves.push(s);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(a, b);
  return Tree(n, std::move(edges));
}

}  // namespace hausdorff

#endif  // HAUSDORFF_RANDOM_TREE_HPP
