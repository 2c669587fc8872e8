// Copyright 2026 The liecx Authors
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
//
// Rauzy graphs of order n (vertices = factors of length n-1, edges = factors
// of length n) and enumeration of the simple cycles whose lengths divide n.

#ifndef LIECX_RAUZY_HPP
#define LIECX_RAUZY_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "liecx/word.hpp"

namespace liecx {

/// A directed multigraph on factor sets. Vertices and edges are kept in
/// sorted word order, so ids are deterministic. Parallel edges occur only at
/// order 1, where every letter loops on the empty vertex.
class RauzyGraph {
 public:
  struct Edge {
    Word word;
    std::size_t from;
    std::size_t to;
  };

  /// Builds the order-n graph from the two factor sets. Every edge's prefix
  /// and suffix must be present in `vertices`.
  static RauzyGraph build(std::size_t order, const std::set<Word>& vertices,
                          const std::set<Word>& edges);

  std::size_t order() const { return order_; }
  const std::vector<Word>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Edge ids leaving each vertex.
  const std::vector<std::vector<std::size_t>>& out_edges() const {
    return out_edges_;
  }
  std::size_t out_degree(std::size_t vertex) const {
    return out_edges_[vertex].size();
  }

 private:
  std::size_t order_ = 0;
  std::vector<Word> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_edges_;
};

/// A simple cycle whose length divides the graph order, identified by its
/// edge set (start vertex is immaterial).
struct LieCycle {
  std::vector<std::size_t> edge_ids;  // sorted
  std::set<Word> edge_words;

  std::size_t length() const { return edge_ids.size(); }

  friend bool operator==(const LieCycle&, const LieCycle&) = default;
};

/// All simple cycles of the graph with length dividing the order. Cycles are
/// found by depth-bounded search from each vertex (smallest vertex id first)
/// and returned in a deterministic order.
std::vector<LieCycle> lie_cycles(const RauzyGraph& graph);

}  // namespace liecx

#endif  // LIECX_RAUZY_HPP
