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

#include "liecx/complexity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "liecx/errors.hpp"

namespace liecx {

namespace {

std::size_t initial_prefix_len(std::size_t n, std::size_t cap) {
  std::size_t len = std::max<std::size_t>(4 * n, 16);
  len = std::min(len, cap);
  if (len < n)
    throw std::invalid_argument("prefix cap " + std::to_string(cap) +
                                " is smaller than the window " + std::to_string(n));
  return len;
}

FactorSet scan(WordSource& source, std::size_t n, std::size_t len) {
  Word w = source.prefix(len);
  if (n > w.size())
    throw std::invalid_argument("factors_of_length: window exceeds word");
  FactorSet fs;
  fs.prefix_len = w.size();
  fs.factors = factors_of_length(w, n);
  return fs;
}

// Grows the prefix until every requested window length meets its stopping
// rule, then rescans all lengths from the final prefix. Sturmian sources
// certify each length at exactly n+1 factors; other sources stop when all
// sets are stable across one doubling.
std::vector<FactorSet> saturate_lengths(WordSource& source,
                                        const std::vector<std::size_t>& lengths,
                                        const SaturationConfig& cfg) {
  std::size_t n_max = *std::max_element(lengths.begin(), lengths.end());
  std::vector<FactorSet> out(lengths.size());

  if (source.sturmian()) {
    std::size_t len = initial_prefix_len(n_max, cfg.prefix_cap);
    while (true) {
      bool all_certified = true;
      std::size_t worst = 0;
      for (std::size_t i = 0; i < lengths.size(); ++i) {
        out[i] = scan(source, lengths[i], len);
        std::size_t want = lengths[i] + 1;
        if (out[i].count() > want)
          throw Error("source " + source.describe() +
                      " is not Sturmian: found " + std::to_string(out[i].count()) +
                      " factors of length " + std::to_string(lengths[i]));
        out[i].certified = out[i].count() == want;
        if (!out[i].certified) {
          all_certified = false;
          worst = lengths[i];
        }
      }
      if (all_certified) return out;
      if (len >= cfg.prefix_cap)
        throw SaturationError("saturation failed: factor set of length " +
                              std::to_string(worst) +
                              " incomplete at prefix cap " +
                              std::to_string(cfg.prefix_cap));
      len = std::min(len * 2, cfg.prefix_cap);
    }
  }

  // Finite sources are their own ground truth: scan the whole word.
  if (auto whole = source.finite_size()) {
    for (std::size_t i = 0; i < lengths.size(); ++i)
      out[i] = scan(source, lengths[i], *whole);
    return out;
  }

  // Morphic sources: grow until the sets are stable across one doubling.
  // Uncertified by construction.
  std::size_t len = initial_prefix_len(n_max, cfg.prefix_cap);
  for (std::size_t i = 0; i < lengths.size(); ++i)
    out[i] = scan(source, lengths[i], len);
  while (len < cfg.prefix_cap) {
    std::size_t next_len = std::min(len * 2, cfg.prefix_cap);
    std::vector<FactorSet> next(lengths.size());
    bool stable = true;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      next[i] = scan(source, lengths[i], next_len);
      if (next[i].count() != out[i].count()) stable = false;
    }
    out = std::move(next);
    if (stable) break;
    len = next_len;
  }
  return out;
}

}  // namespace

FactorSet saturated_factors(WordSource& source, std::size_t n,
                            const SaturationConfig& cfg) {
  if (n == 0) {
    FactorSet fs;
    fs.factors.insert(Word());
    fs.certified = true;
    return fs;
  }
  return saturate_lengths(source, {n}, cfg)[0];
}

std::pair<FactorSet, FactorSet> saturated_factor_pair(WordSource& source,
                                                      std::size_t n,
                                                      const SaturationConfig& cfg) {
  if (n < 1)
    throw std::invalid_argument("saturated_factor_pair: n >= 1 required");
  if (n == 1) {
    FactorSet eps;
    eps.factors.insert(Word());
    eps.certified = true;
    return {eps, saturate_lengths(source, {1}, cfg)[0]};
  }
  auto both = saturate_lengths(source, {n - 1, n}, cfg);
  return {std::move(both[0]), std::move(both[1])};
}

std::size_t factor_complexity(WordSource& source, std::size_t n,
                              const SaturationConfig& cfg) {
  return saturated_factors(source, n, cfg).count();
}

std::vector<ConjugacyClass> lie_classes_from_factors(const std::set<Word>& factors,
                                                     std::size_t n) {
  std::vector<ConjugacyClass> out;
  if (n == 0) {
    out.push_back(conjugates(Word()));
    return out;
  }
  std::set<Word> seen;
  for (const Word& w : factors) {
    if (seen.count(w)) continue;
    ConjugacyClass cls = conjugates(w);
    for (const Word& m : cls.members) seen.insert(m);
    if (class_fully_present(w, factors)) out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) {
              return a.representative < b.representative;
            });
  return out;
}

std::vector<ConjugacyClass> lie_classes_bruteforce(WordSource& source,
                                                   std::size_t n,
                                                   const SaturationConfig& cfg) {
  return lie_classes_from_factors(saturated_factors(source, n, cfg).factors, n);
}

RauzyGraph rauzy_graph(WordSource& source, std::size_t n,
                       const SaturationConfig& cfg) {
  if (n < 1) throw std::invalid_argument("Rauzy graph order must be >= 1");
  auto [vertices, edges] = saturated_factor_pair(source, n, cfg);
  return RauzyGraph::build(n, vertices.factors, edges.factors);
}

std::size_t lie_complexity_via_rauzy(WordSource& source, std::size_t n,
                                     const SaturationConfig& cfg) {
  return lie_cycles(rauzy_graph(source, n, cfg)).size();
}

bool class_fully_present(const Word& w, const std::set<Word>& factors) {
  if (w.empty()) return true;
  for (std::size_t r = 0; r < w.size(); ++r)
    if (!factors.count(w.rotated(r))) return false;
  return true;
}

namespace {

// Convergent denominators q_0..q_K with q_K <= n < q_{K+1}, as machine
// integers (they are bounded by n). Computing the crossing value consumes
// one digit beyond the covering convergent, by design: finite specs must
// fail loudly rather than silently truncate the case analysis.
std::vector<std::uint64_t> denominators_up_to(const SlopeSpec& spec,
                                              std::uint64_t n) {
  std::vector<std::uint64_t> q;
  q.push_back(1);
  std::uint64_t q1 = spec.a(1);
  if (q1 > n) return q;
  q.push_back(q1);
  for (std::size_t k = 2;; ++k) {
    unsigned __int128 next =
        static_cast<unsigned __int128>(spec.d(k)) * q[k - 1] + q[k - 2];
    if (next > n) break;
    q.push_back(static_cast<std::uint64_t>(next));
  }
  return q;
}

}  // namespace

std::string LengthCase::to_string() const {
  switch (kind) {
    case Kind::kSmall:
      return "Small";
    case Kind::kPowerOfStandard:
      return "PowerOfStandard(k=" + std::to_string(k) +
             ",m=" + std::to_string(value) + ")";
    case Kind::kSemistandard:
      return "Semistandard(k=" + std::to_string(k) +
             ",l=" + std::to_string(value) + ")";
    case Kind::kNone:
      return "None";
  }
  return "None";
}

LengthCase classify_length(const SlopeSpec& spec, std::uint64_t n) {
  if (!spec.normalized())
    throw std::invalid_argument("normalize first: the formula needs a_1 >= 2");
  if (n < 1) throw std::invalid_argument("classify_length: n >= 1 required");

  if (n <= spec.a(1)) return LengthCase{LengthCase::Kind::kSmall, 0, 0};

  std::vector<std::uint64_t> q = denominators_up_to(spec, n);
  const std::size_t K = q.size() - 1;
  std::vector<LengthCase> hits;

  // n = m q_k with 1 <= m <= d_{k+1} + 1, k >= 1.
  for (std::size_t k = 1; k <= K; ++k) {
    if (n % q[k] != 0) continue;
    std::uint64_t m = n / q[k];
    if (m >= 1 && m - 1 <= spec.d(k + 1))
      hits.push_back(LengthCase{LengthCase::Kind::kPowerOfStandard, k, m});
  }

  // n = q_{k,l} = l q_{k-1} + q_{k-2} with 1 <= l < d_k, k >= 2.
  for (std::size_t k = 2; k <= K + 1; ++k) {
    std::uint64_t base = q[k - 2];
    std::uint64_t step = q[k - 1];
    if (n <= base || (n - base) % step != 0) continue;
    std::uint64_t l = (n - base) / step;
    if (l >= 1 && l < spec.d(k))
      hits.push_back(LengthCase{LengthCase::Kind::kSemistandard, k, l});
  }

  if (hits.empty()) return LengthCase{LengthCase::Kind::kNone, 0, 0};
  if (hits.size() > 1)
    throw Error("length classification for n=" + std::to_string(n) +
                " is not unique; this should be impossible");
  return hits[0];
}

int sturmian_lie_formula(const SlopeSpec& spec, std::uint64_t n) {
  if (!spec.normalized())
    throw std::invalid_argument("normalize first: the formula needs a_1 >= 2");
  if (n == 0) return 1;
  LengthCase c = classify_length(spec, n);
  switch (c.kind) {
    case LengthCase::Kind::kSmall:
      return 2;
    case LengthCase::Kind::kNone:
      return 0;
    default:
      return 1;
  }
}

ComplexityRow compute_row(WordSource& source, std::size_t n, MethodSet methods,
                          const SlopeSpec* formula_spec,
                          const SaturationConfig& cfg) {
  ComplexityRow row;
  row.n = n;

  FactorSet factors_n;
  FactorSet factors_prev;
  if (n == 0) {
    factors_n = saturated_factors(source, 0, cfg);
  } else {
    auto pair = saturated_factor_pair(source, n, cfg);
    factors_prev = std::move(pair.first);
    factors_n = std::move(pair.second);
    row.delta_p = factors_n.count() - factors_prev.count();
  }
  row.p = factors_n.count();
  row.certified = factors_n.certified && (n == 0 || factors_prev.certified);

  if (methods.bruteforce)
    row.lie_bruteforce = lie_classes_from_factors(factors_n.factors, n).size();

  if (methods.rauzy && n >= 1) {
    RauzyGraph g = RauzyGraph::build(n, factors_prev.factors, factors_n.factors);
    row.lie_rauzy = lie_cycles(g).size();
  }

  if (methods.formula) {
    if (formula_spec == nullptr)
      throw std::invalid_argument("formula method requires a CF slope spec");
    NormalizeResult norm = normalize(*formula_spec);
    row.lie_formula = static_cast<std::size_t>(sturmian_lie_formula(norm.spec, n));
    row.case_tag =
        n == 0 ? "Zero" : classify_length(norm.spec, n).to_string();
  }

  std::vector<std::size_t> present;
  for (const auto& v : {row.lie_bruteforce, row.lie_rauzy, row.lie_formula})
    if (v) present.push_back(*v);
  for (std::size_t i = 1; i < present.size(); ++i) {
    if (present[i] != present[0])
      throw DisagreementError(
          "Lie complexity methods disagree at n=" + std::to_string(n) +
          " for " + source.describe() + ": bruteforce=" +
          (row.lie_bruteforce ? std::to_string(*row.lie_bruteforce) : "-") +
          " rauzy=" + (row.lie_rauzy ? std::to_string(*row.lie_rauzy) : "-") +
          " formula=" + (row.lie_formula ? std::to_string(*row.lie_formula) : "-"));
  }

  if (n >= 1 && row.delta_p) {
    for (std::size_t v : present)
      if (v > *row.delta_p + 1) row.bound_ok = false;
  }
  return row;
}

ComplexityRow verify_bound(WordSource& source, std::size_t n,
                           const SaturationConfig& cfg) {
  if (n < 1) throw std::invalid_argument("verify_bound: n >= 1 required");
  return compute_row(source, n, MethodSet{true, false, false}, nullptr, cfg);
}

IndexSetResult index_set_of_conjugates(WordSource& source, const Word& v,
                                       std::size_t prefix_cap) {
  if (v.empty())
    throw std::invalid_argument("index_set_of_conjugates: empty word");
  if (!is_primitive(v))
    throw std::invalid_argument("index_set_of_conjugates: word must be primitive");

  ConjugacyClass cls = conjugates(v);
  auto indexes_at = [&](std::size_t len) {
    Word prefix = source.prefix(len);
    std::set<std::size_t> out;
    for (const Word& c : cls.members) out.insert(index_in(c, prefix));
    return std::pair(out, prefix.size());
  };

  // Finite sources evaluate on the whole word, exactly.
  if (auto whole = source.finite_size()) {
    IndexSetResult res;
    auto [indexes, got] = indexes_at(*whole);
    res.indexes = std::move(indexes);
    res.prefix_len = got;
    res.certified = true;
    return res;
  }

  // Sturmian sources certify exactly: c^m is a factor iff it lies in the
  // certified factor set of length m|v|. Prefix-stability heuristics can
  // lie here (a higher power may first occur far beyond a stable window).
  if (source.sturmian()) {
    SaturationConfig cfg{prefix_cap};
    IndexSetResult res;
    try {
      std::map<Word, std::size_t> index_of;
      std::vector<Word> alive(cls.members.begin(), cls.members.end());
      for (const Word& c : alive) index_of[c] = 0;
      for (std::size_t m = 1; !alive.empty(); ++m) {
        FactorSet fs = saturated_factors(source, m * v.size(), cfg);
        res.prefix_len = std::max(res.prefix_len, fs.prefix_len);
        std::vector<Word> next_alive;
        for (const Word& c : alive) {
          if (fs.factors.count(c.repeated(m))) {
            index_of[c] = m;
            next_alive.push_back(c);
          }
        }
        alive = std::move(next_alive);
      }
      for (const auto& [c, m] : index_of) res.indexes.insert(m);
      res.certified = true;
      return res;
    } catch (const SaturationError&) {
      // Cap too small to certify; fall through to the capped evaluation.
    }
    auto [indexes, got] = indexes_at(prefix_cap);
    res.indexes = std::move(indexes);
    res.prefix_len = got;
    res.certified = false;
    return res;
  }

  // Morphic sources: grow until the set is stable across one doubling, a
  // heuristic flagged as such via `certified`.
  std::size_t len = std::min(std::max<std::size_t>(8 * v.size(), 64), prefix_cap);
  auto [cur, got] = indexes_at(len);
  IndexSetResult res;
  res.indexes = std::move(cur);
  res.prefix_len = got;
  while (len < prefix_cap) {
    std::size_t next_len = std::min(2 * len, prefix_cap);
    auto [next, next_got] = indexes_at(next_len);
    bool stable = next == res.indexes;
    res.indexes = std::move(next);
    res.prefix_len = next_got;
    if (stable) {
      res.certified = true;
      return res;
    }
    len = next_len;
  }
  res.certified = false;  // cap reached without stability
  return res;
}

ClosureReport verify_conjugate_closure(WordSource& source, std::size_t n,
                                       const SlopeSpec& spec,
                                       const SaturationConfig& cfg) {
  if (n < 2)
    throw std::invalid_argument("verify_conjugate_closure: n >= 2 required");
  NormalizeResult norm = normalize(spec);
  const SlopeSpec& nspec = norm.spec;

  ClosureReport report;
  report.n = n;

  FactorSet fs = saturated_factors(source, n, cfg);
  report.certified = fs.certified;

  // Letter exchange commutes with rotation, so closure checks can run on
  // the normalized word's factors.
  std::set<Word> factors;
  if (norm.letters_swapped) {
    for (const Word& w : fs.factors) {
      std::vector<Symbol> flipped;
      flipped.reserve(w.size());
      for (Symbol s : w.symbols()) flipped.push_back(static_cast<Symbol>(1 - s));
      factors.insert(Word(std::move(flipped)));
    }
  } else {
    factors = fs.factors;
  }
  std::vector<ConjugacyClass> classes = lie_classes_from_factors(factors, n);

  std::vector<PrefixCatalogEntry> s_members = prefixes_of_length(nspec, n);
  std::set<Word> conj_of_s;
  for (const auto& entry : s_members) {
    for (const Word& c : conjugates(entry.word).members) conj_of_s.insert(c);
  }

  // Primitive closure, forward: every primitive factor whose class is fully
  // present is a conjugate of a catalog prefix.
  {
    ClosureCheck check{"primitive-closure-forward", true, ""};
    for (const ConjugacyClass& cls : classes) {
      if (!is_primitive(cls.representative)) continue;
      if (!conj_of_s.count(cls.representative)) {
        check.passed = false;
        check.detail = "class of " + cls.representative.text() +
                       " is Lie but not conjugate to any catalog prefix";
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }

  // Primitive closure, backward: catalog prefixes of length n are primitive
  // and their whole class occurs.
  {
    ClosureCheck check{"primitive-closure-backward", true, ""};
    for (const auto& entry : s_members) {
      if (!is_primitive(entry.word)) {
        check.passed = false;
        check.detail = entry.tag() + " is not primitive";
        break;
      }
      if (!class_fully_present(entry.word, factors)) {
        check.passed = false;
        check.detail = "class of " + entry.tag() + " = " + entry.word.text() +
                       " is not fully present";
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }

  // Power closure: Lie class representatives are powers of conjugates of
  // catalog prefixes.
  {
    ClosureCheck check{"power-closure", true, ""};
    for (const ConjugacyClass& cls : classes) {
      PrimitiveRoot pr = primitive_root(cls.representative);
      std::vector<PrefixCatalogEntry> root_members =
          prefixes_of_length(nspec, pr.root.size());
      bool found = false;
      for (const auto& entry : root_members)
        if (conjugates(entry.word).contains(pr.root)) found = true;
      if (!found) {
        check.passed = false;
        check.detail = "root " + pr.root.text() + " of Lie class " +
                       cls.representative.text() +
                       " is not a conjugate of a catalog prefix";
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }

  // Power instances at this length: s_k^m is Lie iff m <= d_{k+1} + 1.
  {
    ClosureCheck check{"power-instances", true, ""};
    std::vector<std::uint64_t> q = denominators_up_to(nspec, n);
    for (std::size_t k = 1; k < q.size() && check.passed; ++k) {
      if (n % q[k] != 0) continue;
      std::uint64_t m = n / q[k];
      Word power = standard_prefix(nspec, static_cast<long>(k)).word.repeated(m);
      bool lie = class_fully_present(power, factors);
      bool expected = m - 1 <= nspec.d(k + 1);
      if (lie != expected) {
        check.passed = false;
        check.detail = "class of s_" + std::to_string(k) + "^" +
                       std::to_string(m) + (lie ? " is" : " is not") +
                       " Lie, expected the opposite";
      }
    }
    report.checks.push_back(std::move(check));
  }

  // Semistandard instances: s_{k,l} classes are Lie; s_{k,l}^2 classes are not.
  {
    ClosureCheck check{"semistandard-instances", true, ""};
    for (const auto& entry : s_members) {
      if (entry.kind != PrefixKind::kSemistandard || entry.k < 2) continue;
      if (!class_fully_present(entry.word, factors)) {
        check.passed = false;
        check.detail = "class of " + entry.tag() + " is not Lie";
        break;
      }
    }
    if (check.passed && n % 2 == 0) {
      for (const auto& entry : prefixes_of_length(nspec, n / 2)) {
        if (entry.kind != PrefixKind::kSemistandard || entry.k < 2) continue;
        if (class_fully_present(entry.word.repeated(2), factors)) {
          check.passed = false;
          check.detail = "class of " + entry.tag() + "^2 is Lie, expected not";
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const ClosureCheck& c) { return c.passed; });
  return report;
}

}  // namespace liecx
