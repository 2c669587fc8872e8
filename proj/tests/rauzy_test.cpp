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

#include <doctest.h>

#include <set>
#include <string>

#include "liecx/complexity.hpp"
#include "liecx/word_source.hpp"
#include "support.hpp"

using namespace liecx;
namespace ts = liecx::testsupport;

namespace {

std::set<Word> words(std::initializer_list<const char*> texts) {
  std::set<Word> out;
  for (const char* t : texts) out.insert(Word::from_text(t));
  return out;
}

std::set<std::set<Word>> cycle_edge_sets(const std::vector<LieCycle>& cycles) {
  std::set<std::set<Word>> out;
  for (const auto& c : cycles) out.insert(c.edge_words);
  return out;
}

}  // namespace

TEST_CASE("order-2 Fibonacci graph: two Lie cycles, frozen by hand") {
  // Vertices {0,1}; edges 00:0->0, 01:0->1, 10:1->0. The hand enumeration
  // finds the loop {00} (length 1 | 2) and the 2-cycle {01,10}.
  RauzyGraph g = RauzyGraph::build(2, words({"0", "1"}), words({"00", "01", "10"}));
  CHECK(g.vertices().size() == 2);
  CHECK(g.edges().size() == 3);

  auto cycles = lie_cycles(g);
  CHECK(cycle_edge_sets(cycles) ==
        std::set<std::set<Word>>{words({"00"}), words({"01", "10"})});
}

TEST_CASE("order-3 Fibonacci graph: one Lie cycle, frozen by hand") {
  // Edges 001: 00->01, 010: 01->10, 100: 10->00, 101: 10->01. The 3-cycle
  // {001,010,100} divides 3; the 2-cycle {010,101} does not.
  RauzyGraph g = RauzyGraph::build(3, words({"00", "01", "10"}),
                                   words({"001", "010", "100", "101"}));
  auto cycles = lie_cycles(g);
  CHECK(cycle_edge_sets(cycles) ==
        std::set<std::set<Word>>{words({"001", "010", "100"})});
}

TEST_CASE("order-1 graph: every letter is its own loop") {
  RauzyGraph g = RauzyGraph::build(1, std::set<Word>{Word()}, words({"0", "1"}));
  CHECK(g.vertices().size() == 1);
  CHECK(g.edges().size() == 2);
  CHECK(lie_cycles(g).size() == 2);
}

TEST_CASE("literal 0101 at order 2") {
  LiteralSource src(Word::from_text("0101"));
  RauzyGraph g = rauzy_graph(src, 2);
  CHECK(g.vertices().size() == 2);
  CHECK(g.edges().size() == 2);
  auto cycles = lie_cycles(g);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].edge_words == words({"01", "10"}));
}

TEST_CASE("graph construction from a source") {
  SturmianSource fib(SlopeSpec::parse("2;(1)"));
  RauzyGraph g2 = rauzy_graph(fib, 2);
  CHECK(g2.vertices().size() == 2);
  CHECK(g2.edges().size() == 3);

  RauzyGraph g1 = rauzy_graph(fib, 1);
  CHECK(g1.vertices().size() == 1);
  CHECK(g1.edges().size() == 2);
  for (const auto& e : g1.edges()) {
    CHECK(e.from == e.to);
  }

  CHECK_THROWS_AS(rauzy_graph(fib, 0), std::invalid_argument);
}

TEST_CASE("rejects malformed vertex/edge sets") {
  CHECK_THROWS_AS(RauzyGraph::build(2, words({"0"}), words({"01"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(RauzyGraph::build(2, words({"0", "1"}), words({"011"})),
                  std::invalid_argument);
}

TEST_CASE("graph size accounting matches factor complexity") {
  SturmianSource src(SlopeSpec::parse("3;(2)"));
  for (std::size_t n = 1; n <= 20; ++n) {
    RauzyGraph g = rauzy_graph(src, n);
    CHECK(g.edges().size() == factor_complexity(src, n));
    CHECK(g.vertices().size() == factor_complexity(src, n - 1));
  }
}

TEST_CASE("distinct Lie cycles have disjoint edge sets") {
  ts::SplitMix64 rng(0x5eed0003u);
  for (int trial = 0; trial < 12; ++trial) {
    std::string alpha = trial % 2 ? "01" : "012";
    LiteralSource src(Word::from_text(rng.word(300, alpha), Alphabet(alpha)),
                      Alphabet(alpha));
    for (std::size_t n = 1; n <= 12; ++n) {
      RauzyGraph g = rauzy_graph(src, n);
      auto cycles = lie_cycles(g);
      std::set<std::size_t> seen;
      std::size_t total = 0;
      for (const auto& c : cycles) {
        CHECK(c.length() >= 1);
        CHECK(g.order() % c.length() == 0);
        for (std::size_t id : c.edge_ids) seen.insert(id);
        total += c.edge_ids.size();
      }
      CHECK(seen.size() == total);  // no edge shared between cycles
    }
  }
}
