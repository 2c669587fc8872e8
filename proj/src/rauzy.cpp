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

#include "liecx/rauzy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liecx {

RauzyGraph RauzyGraph::build(std::size_t order, const std::set<Word>& vertices,
                             const std::set<Word>& edges) {
  if (order < 1) throw std::invalid_argument("Rauzy graph order must be >= 1");
  RauzyGraph g;
  g.order_ = order;
  g.vertices_.assign(vertices.begin(), vertices.end());
  std::map<Word, std::size_t> vertex_id;
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    if (g.vertices_[i].size() != order - 1)
      throw std::invalid_argument("Rauzy vertex has wrong length");
    vertex_id.emplace(g.vertices_[i], i);
  }
  g.out_edges_.assign(g.vertices_.size(), {});
  for (const Word& e : edges) {
    if (e.size() != order)
      throw std::invalid_argument("Rauzy edge has wrong length");
    auto from = vertex_id.find(e.subword(0, order - 1));
    auto to = vertex_id.find(e.subword(1, order - 1));
    if (from == vertex_id.end() || to == vertex_id.end())
      throw std::invalid_argument("Rauzy edge endpoint missing from vertex set");
    g.out_edges_[from->second].push_back(g.edges_.size());
    g.edges_.push_back(Edge{e, from->second, to->second});
  }
  return g;
}

namespace {

class CycleSearch {
 public:
  CycleSearch(const RauzyGraph& graph, std::vector<LieCycle>& out)
      : graph_(graph), out_(out), on_path_(graph.vertices().size(), false) {}

  void run() {
    // Self-loops are the length-1 cycles; 1 divides every order.
    for (std::size_t id = 0; id < graph_.edges().size(); ++id) {
      const auto& e = graph_.edges()[id];
      if (e.from == e.to) out_.push_back(make_cycle({id}));
    }
    // Longer simple cycles, each found once: the start vertex is the
    // smallest vertex id on the cycle.
    for (std::size_t start = 0; start < graph_.vertices().size(); ++start) {
      start_ = start;
      on_path_[start] = true;
      extend(start);
      on_path_[start] = false;
    }
  }

 private:
  void extend(std::size_t v) {
    for (std::size_t id : graph_.out_edges()[v]) {
      const auto& e = graph_.edges()[id];
      if (e.to == e.from) continue;
      if (e.to == start_) {
        std::size_t len = path_.size() + 1;
        if (len >= 2 && graph_.order() % len == 0) {
          path_.push_back(id);
          out_.push_back(make_cycle(path_));
          path_.pop_back();
        }
        continue;
      }
      if (e.to < start_ || on_path_[e.to]) continue;
      if (path_.size() + 1 >= graph_.order()) continue;  // cannot close within bound
      on_path_[e.to] = true;
      path_.push_back(id);
      extend(e.to);
      path_.pop_back();
      on_path_[e.to] = false;
    }
  }

  LieCycle make_cycle(std::vector<std::size_t> ids) const {
    LieCycle c;
    c.edge_ids = std::move(ids);
    std::sort(c.edge_ids.begin(), c.edge_ids.end());
    for (std::size_t id : c.edge_ids)
      c.edge_words.insert(graph_.edges()[id].word);
    return c;
  }

  const RauzyGraph& graph_;
  std::vector<LieCycle>& out_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
  std::size_t start_ = 0;
};

}  // namespace

std::vector<LieCycle> lie_cycles(const RauzyGraph& graph) {
  std::vector<LieCycle> out;
  CycleSearch(graph, out).run();
  std::sort(out.begin(), out.end(), [](const LieCycle& a, const LieCycle& b) {
    if (a.edge_ids.size() != b.edge_ids.size())
      return a.edge_ids.size() < b.edge_ids.size();
    return a.edge_ids < b.edge_ids;
  });
  return out;
}

}  // namespace liecx
