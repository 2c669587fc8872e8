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

#include "liecx/sturmian.hpp"

#include <charconv>
#include <stdexcept>

#include "liecx/errors.hpp"

namespace liecx {

namespace {

std::uint64_t parse_quotient(std::string_view token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw std::invalid_argument("CF spec: invalid partial quotient '" +
                                std::string(token) + "'");
  if (value == 0)
    throw std::invalid_argument("CF spec: partial quotient '" +
                                std::string(token) + "' must be >= 1");
  return value;
}

std::vector<std::uint64_t> parse_quotient_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    out.push_back(parse_quotient(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

SlopeSpec::SlopeSpec(std::vector<std::uint64_t> head,
                     std::vector<std::uint64_t> period)
    : head_(std::move(head)), period_(std::move(period)) {
  if (head_.empty() && period_.empty())
    throw std::invalid_argument("CF spec: no partial quotients");
  for (std::uint64_t v : head_)
    if (v == 0) throw std::invalid_argument("CF spec: partial quotients must be >= 1");
  for (std::uint64_t v : period_)
    if (v == 0) throw std::invalid_argument("CF spec: partial quotients must be >= 1");
}

SlopeSpec SlopeSpec::parse(std::string_view text) {
  std::vector<std::uint64_t> head;
  std::vector<std::uint64_t> period;
  std::size_t semi = text.find(';');
  std::string_view head_part = text.substr(0, semi);
  if (!head_part.empty()) head = parse_quotient_list(head_part);
  if (semi != std::string_view::npos) {
    std::string_view tail = text.substr(semi + 1);
    if (tail.size() < 3 || tail.front() != '(' || tail.back() != ')')
      throw std::invalid_argument("CF spec: periodic tail '" + std::string(tail) +
                                  "' must have the form (p1,...,pM)");
    period = parse_quotient_list(tail.substr(1, tail.size() - 2));
  }
  return SlopeSpec(std::move(head), std::move(period));
}

std::uint64_t SlopeSpec::a(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("CF quotients are 1-based");
  if (k <= head_.size()) return head_[k - 1];
  if (period_.empty())
    throw CfExhaustedError("CF digits exhausted: a_" + std::to_string(k) +
                           " requested but spec has only " +
                           std::to_string(head_.size()) + " quotients");
  return period_[(k - 1 - head_.size()) % period_.size()];
}

std::uint64_t SlopeSpec::d(std::size_t k) const {
  return k == 1 ? a(1) - 1 : a(k);
}

bool SlopeSpec::has_digit(std::size_t k) const {
  return k >= 1 && (k <= head_.size() || !period_.empty());
}

std::string SlopeSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < head_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(head_[i]);
  }
  if (!period_.empty()) {
    out += ";(";
    for (std::size_t i = 0; i < period_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(period_[i]);
    }
    out += ')';
  }
  return out;
}

NormalizeResult normalize(const SlopeSpec& spec) {
  if (spec.a(1) >= 2) return {spec, false};
  if (!spec.has_digit(2))
    throw std::invalid_argument(
        "cannot normalize: slope [0;1] needs a second partial quotient");

  const auto& head = spec.head();
  const auto& period = spec.period();
  std::vector<std::uint64_t> new_head;
  std::vector<std::uint64_t> new_period;
  auto rotated = [&](std::size_t by) {
    std::vector<std::uint64_t> r;
    r.reserve(period.size());
    for (std::size_t i = 0; i < period.size(); ++i)
      r.push_back(period[(by + i) % period.size()]);
    return r;
  };
  // The normalized digits are a_2 + 1, a_3, a_4, ...
  if (head.size() >= 2) {
    new_head.push_back(head[1] + 1);
    new_head.insert(new_head.end(), head.begin() + 2, head.end());
    new_period = period;
  } else if (head.size() == 1) {
    new_head.push_back(period[0] + 1);
    new_period = rotated(1);
  } else {
    new_head.push_back(period[1 % period.size()] + 1);
    new_period = rotated(2 % period.size());
  }
  return {SlopeSpec(std::move(new_head), std::move(new_period)), true};
}

DenominatorTable::DenominatorTable(SlopeSpec spec, std::vector<BigUint> q)
    : spec_(std::move(spec)), q_(std::move(q)) {}

const BigUint& DenominatorTable::q_at(std::size_t k) const {
  if (k >= q_.size())
    throw std::invalid_argument("q_" + std::to_string(k) + " not in table (k_max=" +
                                std::to_string(q_.size() - 1) + ")");
  return q_[k];
}

DenominatorTable denominators(const SlopeSpec& spec, std::size_t k_max) {
  if (!spec.normalized())
    throw std::invalid_argument("denominators: normalize the spec first (a_1 >= 2)");
  std::vector<BigUint> q;
  q.reserve(k_max + 1);
  q.emplace_back(1);  // q_0
  if (k_max >= 1) q.emplace_back(spec.d(1) + 1);
  for (std::size_t k = 2; k <= k_max; ++k)
    q.push_back(q[k - 1] * spec.d(k) + q[k - 2]);
  return DenominatorTable(spec, std::move(q));
}

BigUint semiconvergent_denominator(const DenominatorTable& table, std::size_t k,
                                   std::uint64_t l) {
  if (k < 1 || k > table.k_max())
    throw std::invalid_argument("no such semiconvergent: k=" + std::to_string(k) +
                                " outside table");
  std::uint64_t dk = table.spec().d(k);
  if (dk <= 1 || l < 1 || l >= dk)
    throw std::invalid_argument("no such semiconvergent: l=" + std::to_string(l) +
                                " not in [1," + std::to_string(dk) + ")");
  // q_{-1} = 1 = |s_{-1}| keeps |s_{k,l}| = q_{k,l} at k = 1.
  const BigUint& qk1 = table.q_at(k - 1);
  BigUint qk2 = k >= 2 ? table.q_at(k - 2) : BigUint(1);
  return qk1 * l + qk2;
}

std::string PrefixCatalogEntry::tag() const {
  std::string out = "s_" + std::to_string(k);
  if (l) out += "," + std::to_string(*l);
  return out;
}

namespace {

const Word& word_zero() {
  static const Word w = Word::from_text("0");
  return w;
}
const Word& word_one() {
  static const Word w = Word::from_text("1");
  return w;
}

void require_normalized(const SlopeSpec& spec, const char* who) {
  if (!spec.normalized())
    throw std::invalid_argument(std::string(who) +
                                ": normalize the spec first (a_1 >= 2)");
}

// s_k by the recurrence, iterating from s_{-1} = 1, s_0 = 0.
Word standard_word(const SlopeSpec& spec, long k) {
  if (k == -1) return word_one();
  Word prev = word_one();   // s_{j-2}
  Word cur = word_zero();   // s_{j-1}
  for (long j = 1; j <= k; ++j) {
    Word next = cur.repeated(spec.d(static_cast<std::size_t>(j))) + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

PrefixCatalogEntry standard_prefix(const SlopeSpec& spec, long k) {
  require_normalized(spec, "standard_prefix");
  if (k < -1) throw std::invalid_argument("standard_prefix: k >= -1 required");
  return PrefixCatalogEntry{PrefixKind::kStandard, k, std::nullopt,
                            standard_word(spec, k)};
}

PrefixCatalogEntry semistandard_prefix(const SlopeSpec& spec, std::size_t k,
                                       std::uint64_t l) {
  require_normalized(spec, "semistandard_prefix");
  if (k < 1) throw std::invalid_argument("semistandard_prefix: k >= 1 required");
  std::uint64_t dk = spec.d(k);
  if (dk <= 1 || l < 1 || l >= dk)
    throw std::invalid_argument("no such semiconvergent: l=" + std::to_string(l) +
                                " not in [1," + std::to_string(dk) + ")");
  Word sk1 = standard_word(spec, static_cast<long>(k) - 1);
  Word sk2 = standard_word(spec, static_cast<long>(k) - 2);
  return PrefixCatalogEntry{PrefixKind::kSemistandard, static_cast<long>(k), l,
                            sk1.repeated(l) + sk2};
}

Word characteristic_prefix(const SlopeSpec& spec, std::size_t len) {
  require_normalized(spec, "characteristic_prefix");
  if (len == 0) return Word();
  Word prev = word_one();  // s_{j-2}
  Word cur = word_zero();  // s_{j-1}
  std::size_t j = 1;
  while (cur.size() < len) {
    // Build s_j but never materialize more than len + |s_{j-1}| symbols.
    std::uint64_t dj = spec.d(j);
    Word next = cur;
    for (std::uint64_t rep = 1; rep < dj && next.size() < len; ++rep)
      next = next + cur;
    next = next + prev;
    prev = std::move(cur);
    cur = std::move(next);
    ++j;
  }
  return cur.subword(0, len);
}

Word mechanical_word(std::int64_t p, std::int64_t q, std::int64_t rho_num,
                     std::int64_t rho_den, std::size_t len) {
  if (q == 0 || rho_den == 0)
    throw std::invalid_argument("mechanical_word: zero denominator");
  if (q < 0) { q = -q; p = -p; }
  if (rho_den < 0) { rho_den = -rho_den; rho_num = -rho_num; }
  if (p <= 0 || p >= q)
    throw std::invalid_argument("mechanical_word: slope must satisfy 0 < p/q < 1");

  using I = __int128;
  const I denom = static_cast<I>(q) * rho_den;
  auto floor_term = [&](std::size_t n) {
    I num = static_cast<I>(p) * static_cast<I>(n) * rho_den +
            static_cast<I>(rho_num) * q;
    I quot = num / denom;
    if (num % denom != 0 && (num < 0)) --quot;  // floor toward -inf
    return quot;
  };

  std::vector<Symbol> syms;
  syms.reserve(len);
  for (std::size_t n = 0; n < len; ++n) {
    I diff = floor_term(n + 1) - floor_term(n);
    syms.push_back(static_cast<Symbol>(diff));
  }
  return Word(std::move(syms));
}

std::vector<PrefixCatalogEntry> prefixes_of_length(const SlopeSpec& spec,
                                                   std::size_t n,
                                                   std::size_t k_cap) {
  require_normalized(spec, "prefixes_of_length");
  std::vector<PrefixCatalogEntry> out;
  if (n == 0) return out;
  const BigUint target(n);

  // Standard prefixes: q_k = n. The q sequence is strictly increasing, so
  // the scan stops at the first q beyond n.
  BigUint qk2(1);  // q_{-1}
  BigUint qk1(1);  // q_0
  if (qk1 == target) out.push_back(standard_prefix(spec, 0));
  for (std::size_t k = 1; k <= k_cap; ++k) {
    BigUint qk = k == 1 ? BigUint(spec.d(1) + 1) : qk1 * spec.d(k) + qk2;
    if (qk == target) out.push_back(standard_prefix(spec, static_cast<long>(k)));
    if (qk >= target) break;
    qk2 = std::move(qk1);
    qk1 = std::move(qk);
  }

  // Semistandard prefixes: q_{k,l} = l q_{k-1} + q_{k-2} = n with 1 <= l < d_k.
  qk2 = BigUint(1);  // q_{k-2}, starting at q_{-1}
  qk1 = BigUint(1);  // q_{k-1}, starting at q_0
  for (std::size_t k = 1; k <= k_cap; ++k) {
    if (qk1 + qk2 > target) break;  // q_{k,l} >= q_{k-1} + q_{k-2}
    std::uint64_t dk = spec.d(k);
    if (dk > 1 && qk2 <= target) {
      std::uint64_t base = qk2.to_u64();
      std::uint64_t step = qk1.to_u64();
      if (n >= base + step && (n - base) % step == 0) {
        std::uint64_t l = (n - base) / step;
        if (l >= 1 && l < dk)
          out.push_back(semistandard_prefix(spec, k, l));
      }
    }
    BigUint qk = k == 1 ? BigUint(spec.d(1) + 1) : qk1 * dk + qk2;
    qk2 = std::move(qk1);
    qk1 = std::move(qk);
  }
  return out;
}

}  // namespace liecx
