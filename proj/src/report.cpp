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

#include <map>

namespace liecx {

namespace {

std::string opt_cell(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

nlohmann::ordered_json opt_json(const std::optional<std::size_t>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace

std::string profile_csv(const std::vector<ComplexityRow>& rows) {
  std::string out =
      "n,p,delta_p,lie_bruteforce,lie_rauzy,lie_formula,bound_ok,case_tag\n";
  for (const ComplexityRow& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.p);
    out += ',';
    out += opt_cell(r.delta_p);
    out += ',';
    out += opt_cell(r.lie_bruteforce);
    out += ',';
    out += opt_cell(r.lie_rauzy);
    out += ',';
    out += opt_cell(r.lie_formula);
    out += ',';
    out += r.bound_ok ? "true" : "false";
    out += ',';
    out += r.case_tag;
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json profile_json(const std::string& source_description,
                                    const std::vector<ComplexityRow>& rows) {
  nlohmann::ordered_json j;
  j["source"] = source_description;
  j["rows"] = nlohmann::ordered_json::array();
  for (const ComplexityRow& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["p"] = r.p;
    row["delta_p"] = opt_json(r.delta_p);
    row["lie_bruteforce"] = opt_json(r.lie_bruteforce);
    row["lie_rauzy"] = opt_json(r.lie_rauzy);
    row["lie_formula"] = opt_json(r.lie_formula);
    row["bound_ok"] = r.bound_ok;
    row["case_tag"] = r.case_tag.empty() ? nlohmann::ordered_json(nullptr)
                                         : nlohmann::ordered_json(r.case_tag);
    row["certified"] = r.certified;
    j["rows"].push_back(std::move(row));
  }
  return j;
}

std::string formula_csv(const std::vector<FormulaRow>& rows) {
  std::string out = "n,lie_formula,case_tag\n";
  for (const FormulaRow& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.lie);
    out += ',';
    out += r.case_tag;
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json formula_json(const std::string& cf,
                                    const std::vector<FormulaRow>& rows) {
  nlohmann::ordered_json j;
  j["cf"] = cf;
  j["rows"] = nlohmann::ordered_json::array();
  for (const FormulaRow& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["lie_formula"] = r.lie;
    row["case_tag"] = r.case_tag;
    j["rows"].push_back(std::move(row));
  }
  return j;
}

namespace {

// Edge id -> Lie cycle id; edge-disjointness of Lie cycles makes this a map.
std::map<std::size_t, std::size_t> cycle_of_edge(
    const std::vector<LieCycle>& cycles) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (std::size_t id : cycles[c].edge_ids) out.emplace(id, c);
  return out;
}

}  // namespace

std::string rauzy_dot(const RauzyGraph& graph,
                      const std::vector<LieCycle>& cycles,
                      const Alphabet& alphabet, const std::string& name) {
  auto in_cycle = cycle_of_edge(cycles);
  std::string out = "digraph " + name + " {\n";
  for (const Word& v : graph.vertices())
    out += "  \"" + v.text(alphabet) + "\";\n";
  for (std::size_t id = 0; id < graph.edges().size(); ++id) {
    const auto& e = graph.edges()[id];
    out += "  \"" + graph.vertices()[e.from].text(alphabet) + "\" -> \"" +
           graph.vertices()[e.to].text(alphabet) + "\" [label=\"" +
           e.word.text(alphabet) + "\"";
    auto it = in_cycle.find(id);
    if (it != in_cycle.end()) out += ", liecycle=" + std::to_string(it->second);
    out += "];\n";
  }
  out += "}\n";
  return out;
}

nlohmann::ordered_json rauzy_json(const RauzyGraph& graph,
                                  const std::vector<LieCycle>& cycles,
                                  const Alphabet& alphabet) {
  auto in_cycle = cycle_of_edge(cycles);
  nlohmann::ordered_json j;
  j["order"] = graph.order();
  j["vertices"] = nlohmann::ordered_json::array();
  for (const Word& v : graph.vertices()) j["vertices"].push_back(v.text(alphabet));
  j["edges"] = nlohmann::ordered_json::array();
  for (std::size_t id = 0; id < graph.edges().size(); ++id) {
    const auto& e = graph.edges()[id];
    nlohmann::ordered_json edge;
    edge["word"] = e.word.text(alphabet);
    edge["from"] = graph.vertices()[e.from].text(alphabet);
    edge["to"] = graph.vertices()[e.to].text(alphabet);
    auto it = in_cycle.find(id);
    edge["liecycle"] = it == in_cycle.end() ? nlohmann::ordered_json(nullptr)
                                            : nlohmann::ordered_json(it->second);
    j["edges"].push_back(std::move(edge));
  }
  j["lie_cycles"] = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    nlohmann::ordered_json cyc;
    cyc["id"] = c;
    cyc["length"] = cycles[c].length();
    cyc["edges"] = nlohmann::ordered_json::array();
    for (const Word& w : cycles[c].edge_words)
      cyc["edges"].push_back(w.text(alphabet));
    j["lie_cycles"].push_back(std::move(cyc));
  }
  return j;
}

}  // namespace liecx
