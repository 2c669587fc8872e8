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
// Factor complexity and Lie complexity by three mutually cross-checking
// routes: brute-force conjugacy-class enumeration, Lie-cycle counting in
// Rauzy graphs, and the closed-form evaluation for Sturmian slopes; plus
// the first-difference bound checker and the closure/index-set verifiers.

#ifndef LIECX_COMPLEXITY_HPP
#define LIECX_COMPLEXITY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liecx/rauzy.hpp"
#include "liecx/sturmian.hpp"
#include "liecx/word.hpp"
#include "liecx/word_source.hpp"

namespace liecx {

struct SaturationConfig {
  std::size_t prefix_cap = kDefaultPrefixCap;
};

/// A length-n factor set believed complete for the infinite word.
/// Sturmian sources certify completeness via the p(n) = n + 1 criterion;
/// literal and morphic sources report their best effort, uncertified.
struct FactorSet {
  std::set<Word> factors;
  bool certified = false;
  std::size_t prefix_len = 0;

  std::size_t count() const { return factors.size(); }
};

/// The factor set of length n. Sturmian sources grow the prefix (doubling
/// from 4n) until exactly n + 1 factors are found and throw SaturationError
/// when the cap is reached first. Morphic sources grow until the set is
/// stable across one doubling; literal sources use the whole word.
FactorSet saturated_factors(WordSource& source, std::size_t n,
                            const SaturationConfig& cfg = {});

/// Factor sets of lengths n-1 and n taken from one consistent snapshot, so
/// every edge of the order-n Rauzy graph finds its endpoints.
std::pair<FactorSet, FactorSet> saturated_factor_pair(
    WordSource& source, std::size_t n, const SaturationConfig& cfg = {});

/// p(n) = number of distinct length-n factors.
std::size_t factor_complexity(WordSource& source, std::size_t n,
                              const SaturationConfig& cfg = {});

/// The conjugacy classes of length-n factors all of whose members occur:
/// the Lie classes. Sorted by representative. For n = 0 the single class
/// of the empty word.
std::vector<ConjugacyClass> lie_classes_bruteforce(
    WordSource& source, std::size_t n, const SaturationConfig& cfg = {});

/// Lie classes taken directly from a known-complete factor set.
std::vector<ConjugacyClass> lie_classes_from_factors(
    const std::set<Word>& factors, std::size_t n);

/// The order-n Rauzy graph of the source's factor sets (n >= 1).
RauzyGraph rauzy_graph(WordSource& source, std::size_t n,
                       const SaturationConfig& cfg = {});

/// Lie complexity as the number of Lie cycles of the order-n Rauzy graph.
/// Independent of the brute-force route; the two are cross-checked by
/// compute_row and by the test suite, never merged.
std::size_t lie_complexity_via_rauzy(WordSource& source, std::size_t n,
                                     const SaturationConfig& cfg = {});

/// One profile row. Present lie_* values must agree; compute_row throws
/// DisagreementError otherwise.
struct ComplexityRow {
  std::size_t n = 0;
  std::size_t p = 0;
  std::optional<std::size_t> delta_p;  // absent at n = 0
  std::optional<std::size_t> lie_bruteforce;
  std::optional<std::size_t> lie_rauzy;
  std::optional<std::size_t> lie_formula;
  bool bound_ok = true;
  std::string case_tag;  // set when the formula method ran
  bool certified = false;
};

struct MethodSet {
  bool bruteforce = false;
  bool rauzy = false;
  bool formula = false;
};

/// Computes the requested methods for one n and cross-checks them.
/// formula_spec must be given (and is normalized internally) when
/// methods.formula is set.
ComplexityRow compute_row(WordSource& source, std::size_t n, MethodSet methods,
                          const SlopeSpec* formula_spec = nullptr,
                          const SaturationConfig& cfg = {});

/// Brute-force row with the first-difference bound verdict:
/// L(n) <= p(n) - p(n-1) + 1.
ComplexityRow verify_bound(WordSource& source, std::size_t n,
                           const SaturationConfig& cfg = {});

/// Closed-form Lie complexity of the Sturmian word of the (normalized)
/// slope spec:
///   2 when 1 <= n <= q_1;
///   1 when n = 0, n = q_{k,l} (k >= 2), or n = m q_k (k >= 1,
///     1 <= m <= d_{k+1} + 1);
///   0 otherwise.
/// Throws CfExhaustedError when the digits run out before n is decided and
/// std::invalid_argument ("normalize first") on unnormalized specs.
int sturmian_lie_formula(const SlopeSpec& spec, std::uint64_t n);

/// The case analysis behind the formula value for n >= 1.
struct LengthCase {
  enum class Kind { kSmall, kPowerOfStandard, kSemistandard, kNone };
  Kind kind = Kind::kNone;
  std::size_t k = 0;       // set for power/semistandard
  std::uint64_t value = 0; // m for powers, l for semistandard

  std::string to_string() const;
};

LengthCase classify_length(const SlopeSpec& spec, std::uint64_t n);

/// The set of indexes (largest powers) of all conjugates of v. Sturmian
/// sources decide each power membership against certified factor sets, so
/// the result is exact; morphic sources grow the prefix until the set is
/// stable across one doubling; literal words are evaluated whole.
/// `certified` is false when the cap was hit first.
struct IndexSetResult {
  std::set<std::size_t> indexes;
  bool certified = false;
  std::size_t prefix_len = 0;
};

IndexSetResult index_set_of_conjugates(WordSource& source, const Word& v,
                                       std::size_t prefix_cap = kDefaultPrefixCap);

/// One named check inside a closure report.
struct ClosureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Structural verification at one length n >= 2 for a Sturmian source:
///  - primitive-closure: the primitive factors whose whole conjugacy class
///    occurs are exactly the conjugates of the standard/semistandard
///    prefixes of length n (both directions);
///  - power-closure: every Lie class representative is a power of a
///    conjugate of a standard/semistandard prefix;
///  - power-instances: s_k^m classes are Lie exactly for m <= d_{k+1} + 1,
///    and s_{k,l} classes are Lie while s_{k,l}^2 classes are not.
struct ClosureReport {
  std::size_t n = 0;
  bool passed = false;
  bool certified = false;
  std::vector<ClosureCheck> checks;
};

ClosureReport verify_conjugate_closure(WordSource& source, std::size_t n,
                                       const SlopeSpec& spec,
                                       const SaturationConfig& cfg = {});

/// True when every rotation of w lies in `factors`.
bool class_fully_present(const Word& w, const std::set<Word>& factors);

}  // namespace liecx

#endif  // LIECX_COMPLEXITY_HPP
