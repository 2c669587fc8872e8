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

#include "liecx/report.hpp"

#include <doctest.h>

#include <string>

using namespace liecx;

namespace {

std::vector<ComplexityRow> fib_rows(std::size_t n_max) {
  SlopeSpec spec = SlopeSpec::parse("2;(1)");
  SturmianSource src(spec);
  std::vector<ComplexityRow> rows;
  for (std::size_t n = 0; n <= n_max; ++n)
    rows.push_back(compute_row(src, n, MethodSet{true, true, true}, &spec));
  return rows;
}

}  // namespace

TEST_CASE("profile CSV layout and cells") {
  auto rows = fib_rows(3);
  std::string csv = profile_csv(rows);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "n,p,delta_p,lie_bruteforce,lie_rauzy,lie_formula,bound_ok,case_tag");
  // n = 0: no delta_p, no rauzy cell.
  CHECK(csv.find("0,1,,1,,1,true,Zero\n") != std::string::npos);
  CHECK(csv.find("2,3,1,2,2,2,true,Small\n") != std::string::npos);
  CHECK(csv.find("3,4,1,1,1,1,true,PowerOfStandard(k=2,m=1)\n") !=
        std::string::npos);
}

TEST_CASE("profile output is byte-stable across recomputation") {
  std::string a = profile_csv(fib_rows(12));
  std::string b = profile_csv(fib_rows(12));
  CHECK(a == b);
  auto ja = profile_json("x", fib_rows(8)).dump(2);
  auto jb = profile_json("x", fib_rows(8)).dump(2);
  CHECK(ja == jb);
}

TEST_CASE("formula CSV rows") {
  std::vector<FormulaRow> rows = {{4, 1, "Semistandard(k=2,l=1)"}};
  CHECK(formula_csv(rows) ==
        "n,lie_formula,case_tag\n4,1,Semistandard(k=2,l=1)\n");
}

TEST_CASE("DOT export labels vertices, edges and Lie cycles") {
  SturmianSource src(SlopeSpec::parse("2;(1)"));
  RauzyGraph g = rauzy_graph(src, 2);
  auto cycles = lie_cycles(g);
  std::string dot = rauzy_dot(g, cycles, Alphabet::binary(), "rauzy_2");
  CHECK(dot.find("digraph rauzy_2 {") == 0);
  CHECK(dot.find("\"0\";") != std::string::npos);
  CHECK(dot.find("\"0\" -> \"0\" [label=\"00\", liecycle=0];") != std::string::npos);
  CHECK(dot.find("\"0\" -> \"1\" [label=\"01\", liecycle=1];") != std::string::npos);
  CHECK(dot.find("\"1\" -> \"0\" [label=\"10\", liecycle=1];") != std::string::npos);

  // A non-cycle edge carries no liecycle attribute.
  SturmianSource src3(SlopeSpec::parse("2;(1)"));
  RauzyGraph g3 = rauzy_graph(src3, 3);
  std::string dot3 = rauzy_dot(g3, lie_cycles(g3), Alphabet::binary(), "rauzy_3");
  CHECK(dot3.find("[label=\"101\"];") != std::string::npos);
  CHECK(dot3.find("[label=\"001\", liecycle=0];") != std::string::npos);
}

TEST_CASE("JSON graph mirror") {
  SturmianSource src(SlopeSpec::parse("2;(1)"));
  RauzyGraph g = rauzy_graph(src, 2);
  auto j = rauzy_json(g, lie_cycles(g), Alphabet::binary());
  CHECK(j["order"] == 2);
  CHECK(j["vertices"].size() == 2);
  CHECK(j["edges"].size() == 3);
  CHECK(j["lie_cycles"].size() == 2);
  bool found_null = false;
  for (const auto& e : j["edges"])
    if (e["liecycle"].is_null()) found_null = true;
  CHECK_FALSE(found_null);  // at order 2 every edge lies on a cycle
}
