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
// Deterministic CSV / JSON / DOT rendering of profiles, formula tables and
// Rauzy graphs. Identical inputs produce byte-identical artifacts.

#ifndef LIECX_REPORT_HPP
#define LIECX_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "liecx/complexity.hpp"
#include "liecx/rauzy.hpp"
#include "liecx/word.hpp"

namespace liecx {

/// CSV schema: n,p,delta_p,lie_bruteforce,lie_rauzy,lie_formula,bound_ok,case_tag
/// with empty cells for methods not requested (and delta_p empty at n = 0).
std::string profile_csv(const std::vector<ComplexityRow>& rows);

nlohmann::ordered_json profile_json(const std::string& source_description,
                                    const std::vector<ComplexityRow>& rows);

struct FormulaRow {
  std::uint64_t n;
  int lie;
  std::string case_tag;
};

/// CSV schema: n,lie_formula,case_tag
std::string formula_csv(const std::vector<FormulaRow>& rows);

nlohmann::ordered_json formula_json(const std::string& cf,
                                    const std::vector<FormulaRow>& rows);

/// DOT graph: vertex ids/labels are the factor texts, edge labels the edge
/// factor texts; edges on a Lie cycle carry a liecycle=<id> attribute.
std::string rauzy_dot(const RauzyGraph& graph,
                      const std::vector<LieCycle>& cycles,
                      const Alphabet& alphabet, const std::string& name);

nlohmann::ordered_json rauzy_json(const RauzyGraph& graph,
                                  const std::vector<LieCycle>& cycles,
                                  const Alphabet& alphabet);

}  // namespace liecx

#endif  // LIECX_REPORT_HPP
