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

#include "liecx/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecx {

Alphabet::Alphabet(std::string chars) : chars_(std::move(chars)) {
  if (chars_.empty() || chars_.size() > 255)
    throw std::invalid_argument("alphabet must have 1..255 characters");
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    for (std::size_t j = i + 1; j < chars_.size(); ++j) {
      if (chars_[i] == chars_[j])
        throw std::invalid_argument(std::string("duplicate alphabet character '") +
                                    chars_[i] + "'");
    }
  }
}

const Alphabet& Alphabet::binary() {
  static const Alphabet a("01");
  return a;
}

char Alphabet::display(Symbol s) const {
  if (s >= chars_.size())
    throw std::invalid_argument("symbol code " + std::to_string(s) +
                                " outside alphabet of size " +
                                std::to_string(chars_.size()));
  return chars_[s];
}

Symbol Alphabet::code(char c) const {
  auto pos = chars_.find(c);
  if (pos == std::string::npos)
    throw std::invalid_argument(std::string("character '") + c +
                                "' is not in alphabet \"" + chars_ + "\"");
  return static_cast<Symbol>(pos);
}

Word Word::from_text(std::string_view text, const Alphabet& alphabet) {
  std::vector<Symbol> syms;
  syms.reserve(text.size());
  for (char c : text) syms.push_back(alphabet.code(c));
  return Word(std::move(syms));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos + len > symbols_.size())
    throw std::invalid_argument("subword out of range");
  return Word(std::vector<Symbol>(symbols_.begin() + pos,
                                  symbols_.begin() + pos + len));
}

Word Word::rotated(std::size_t r) const {
  if (symbols_.empty()) return *this;
  r %= symbols_.size();
  std::vector<Symbol> out;
  out.reserve(symbols_.size());
  out.insert(out.end(), symbols_.begin() + r, symbols_.end());
  out.insert(out.end(), symbols_.begin(), symbols_.begin() + r);
  return Word(std::move(out));
}

Word Word::repeated(std::size_t m) const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size() * m);
  for (std::size_t i = 0; i < m; ++i)
    out.insert(out.end(), symbols_.begin(), symbols_.end());
  return Word(std::move(out));
}

bool Word::starts_with(const Word& prefix) const {
  return prefix.size() <= size() &&
         std::equal(prefix.symbols_.begin(), prefix.symbols_.end(),
                    symbols_.begin());
}

bool Word::ends_with(const Word& suffix) const {
  return suffix.size() <= size() &&
         std::equal(suffix.symbols_.rbegin(), suffix.symbols_.rend(),
                    symbols_.rbegin());
}

std::string Word::text(const Alphabet& alphabet) const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(alphabet.display(s));
  return out;
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Symbol> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.symbols_.begin(), a.symbols_.end());
  out.insert(out.end(), b.symbols_.begin(), b.symbols_.end());
  return Word(std::move(out));
}

ConjugacyClass conjugates(const Word& w) {
  ConjugacyClass cls;
  if (w.empty()) {
    cls.members.insert(w);
    cls.representative = w;
    return cls;
  }
  for (std::size_t r = 0; r < w.size(); ++r) cls.members.insert(w.rotated(r));
  cls.representative = *cls.members.begin();
  return cls;
}

namespace {

std::vector<std::size_t> border_table(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t b = border[i - 1];
    while (b > 0 && w[i] != w[b]) b = border[b - 1];
    if (w[i] == w[b]) ++b;
    border[i] = b;
  }
  return border;
}

// Smallest period of w via its border.
std::size_t smallest_period(const Word& w) {
  return w.size() - border_table(w)[w.size() - 1];
}

// Start positions of v in w (linear-time matcher). first_only stops at the
// first hit.
std::vector<std::size_t> occurrences(const Word& v, const Word& w,
                                     bool first_only = false) {
  std::vector<std::size_t> out;
  if (v.empty() || v.size() > w.size()) return out;
  std::vector<std::size_t> border = border_table(v);
  std::size_t match = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    while (match > 0 && w[i] != v[match]) match = border[match - 1];
    if (w[i] == v[match]) ++match;
    if (match == v.size()) {
      out.push_back(i + 1 - v.size());
      if (first_only) return out;
      match = border[match - 1];
    }
  }
  return out;
}

}  // namespace

bool is_primitive(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_primitive: undefined for empty word");
  std::size_t p = smallest_period(w);
  return !(w.size() % p == 0 && p < w.size());
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty())
    throw std::invalid_argument("primitive_root: undefined for empty word");
  std::size_t p = smallest_period(w);
  if (w.size() % p != 0) p = w.size();  // non-dividing period: w itself primitive
  return PrimitiveRoot{w.subword(0, p), w.size() / p};
}

std::set<Word> factors_of_length(const Word& w, std::size_t n) {
  if (n > w.size())
    throw std::invalid_argument("factors_of_length: window exceeds word");
  std::set<Word> out;
  if (n == 0) {
    out.insert(Word());
    return out;
  }
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.subword(i, n));
  return out;
}

bool contains_factor(const Word& w, const Word& v) {
  if (v.empty()) return true;
  return !occurrences(v, w, /*first_only=*/true).empty();
}

std::size_t index_in(const Word& v, const Word& w) {
  if (v.empty()) throw std::invalid_argument("index_in: empty factor");
  if (v.size() > w.size()) return 0;

  // Occurrence positions of v in w, then the longest chain stepping by |v|.
  std::vector<std::size_t> occ = occurrences(v, w);
  if (occ.empty()) return 0;

  std::set<std::size_t> at(occ.begin(), occ.end());
  std::size_t best = 1;
  for (std::size_t p : occ) {
    if (p >= v.size() && at.count(p - v.size())) continue;  // not a chain start
    std::size_t run = 1;
    std::size_t q = p + v.size();
    while (at.count(q)) {
      ++run;
      q += v.size();
    }
    best = std::max(best, run);
  }
  return best;
}

}  // namespace liecx
