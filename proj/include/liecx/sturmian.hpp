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
// Continued-fraction slope descriptions and the word machinery they drive:
// convergent and semiconvergent denominators, standard and semistandard
// prefixes, and exact generation of characteristic Sturmian prefixes.

#ifndef LIECX_STURMIAN_HPP
#define LIECX_STURMIAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liecx/bigint.hpp"
#include "liecx/word.hpp"

namespace liecx {

/// A continued-fraction description of a Sturmian slope: the partial
/// quotients of [0; a_1, a_2, ...] as a finite head plus an optional
/// periodic tail, the exact stand-in for the irrational slope.
///
/// Internally d_1 = a_1 - 1 and d_k = a_k for k >= 2; a normalized spec has
/// a_1 >= 2 (slope < 1/2, so the word has no "11" factor).
class SlopeSpec {
 public:
  SlopeSpec(std::vector<std::uint64_t> head, std::vector<std::uint64_t> period);

  /// Parses the CLI syntax "a1,a2,...,aK" optionally followed by
  /// ";(p1,...,pM)", e.g. "2;(1)" for the Fibonacci slope. Errors name the
  /// offending token.
  static SlopeSpec parse(std::string_view text);

  const std::vector<std::uint64_t>& head() const { return head_; }
  const std::vector<std::uint64_t>& period() const { return period_; }
  bool eventually_periodic() const { return !period_.empty(); }

  /// Partial quotient a_k (1-based). Throws CfExhaustedError past a finite
  /// head with no period.
  std::uint64_t a(std::size_t k) const;
  /// The shifted digit: d_1 = a_1 - 1, d_k = a_k for k >= 2, so that the
  /// word recurrence s_n = s_{n-1}^{d_n} s_{n-2} uses d directly.
  std::uint64_t d(std::size_t k) const;
  /// True when digit a_k is available.
  bool has_digit(std::size_t k) const;

  bool normalized() const { return a(1) >= 2; }

  /// Round-trips to the parse syntax.
  std::string to_string() const;

  friend bool operator==(const SlopeSpec&, const SlopeSpec&) = default;

 private:
  std::vector<std::uint64_t> head_;
  std::vector<std::uint64_t> period_;
};

struct NormalizeResult {
  SlopeSpec spec;
  bool letters_swapped;
};

/// Reduces a slope > 1/2 (a_1 = 1) to its letter-exchanged twin
/// [0; d_2+1, d_3, ...]; specs with a_1 >= 2 pass through unchanged.
/// Throws when a_1 = 1 and no second quotient is available.
NormalizeResult normalize(const SlopeSpec& spec);

/// Convergent denominators q_0..q_K of a normalized spec: q_0 = 1,
/// q_1 = d_1 + 1 and q_{k+1} = d_{k+1} q_k + q_{k-1}, exact at any size.
class DenominatorTable {
 public:
  DenominatorTable(SlopeSpec spec, std::vector<BigUint> q);

  const SlopeSpec& spec() const { return spec_; }
  const std::vector<BigUint>& q() const { return q_; }
  const BigUint& q_at(std::size_t k) const;
  std::size_t k_max() const { return q_.size() - 1; }

 private:
  SlopeSpec spec_;
  std::vector<BigUint> q_;
};

/// Builds the table up to q_{k_max}. Requires a normalized spec and digits
/// through k_max (throws CfExhaustedError otherwise).
DenominatorTable denominators(const SlopeSpec& spec, std::size_t k_max);

/// Semiconvergent denominator q_{k,l} = l q_{k-1} + q_{k-2} for
/// 1 <= l < d_k, with q_{-1} = 1 so the formula is total at k = 1
/// (q_{1,l} = l + 1, the length of 0^l 1). Throws when l is out of range.
BigUint semiconvergent_denominator(const DenominatorTable& table, std::size_t k,
                                   std::uint64_t l);

enum class PrefixKind { kStandard, kSemistandard };

/// A standard prefix s_k or semistandard prefix s_{k,l}, together with the
/// indices that generated it. Lengths always match the corresponding
/// (semi)convergent denominator.
struct PrefixCatalogEntry {
  PrefixKind kind;
  long k;  // -1 allowed for s_{-1} = "1"
  std::optional<std::uint64_t> l;
  Word word;

  std::size_t length() const { return word.size(); }
  std::string tag() const;

  friend bool operator==(const PrefixCatalogEntry&, const PrefixCatalogEntry&) = default;
};

/// The standard word s_k from s_{-1} = 1, s_0 = 0, s_n = s_{n-1}^{d_n} s_{n-2}.
/// |s_k| = q_k for k >= 0.
PrefixCatalogEntry standard_prefix(const SlopeSpec& spec, long k);

/// The semistandard word s_{k,l} = s_{k-1}^l s_{k-2}, defined when d_k > 1
/// and 1 <= l < d_k. |s_{k,l}| = q_{k,l}.
PrefixCatalogEntry semistandard_prefix(const SlopeSpec& spec, std::size_t k,
                                       std::uint64_t l);

/// The length-len prefix of the characteristic Sturmian word of the spec's
/// slope: builds the smallest covering s_k and truncates. Requires a
/// normalized spec; throws CfExhaustedError when the digits run out first.
Word characteristic_prefix(const SlopeSpec& spec, std::size_t len);

/// The mechanical word of rational slope p/q and intercept rho, evaluated
/// with exact integer arithmetic:
///   s(n) = floor(alpha(n+1) + rho) - floor(alpha n + rho).
/// An independent cross-check generator; irrational slopes go through
/// SlopeSpec instead.
Word mechanical_word(std::int64_t p, std::int64_t q, std::int64_t rho_num,
                     std::int64_t rho_den, std::size_t len);

/// All standard prefixes with q_k = n and semistandard prefixes with
/// q_{k,l} = n, for k <= k_cap. Empty when no such prefix exists.
std::vector<PrefixCatalogEntry> prefixes_of_length(const SlopeSpec& spec,
                                                   std::size_t n,
                                                   std::size_t k_cap = 128);

}  // namespace liecx

#endif  // LIECX_STURMIAN_HPP
