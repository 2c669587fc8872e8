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
// Finite-word primitives: symbols, rotation, conjugacy classes, primitivity,
// factor sets and the index (largest power) of a factor.

#ifndef LIECX_WORD_HPP
#define LIECX_WORD_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace liecx {

/// Symbols are opaque small integers; display mapping lives in Alphabet.
using Symbol = std::uint8_t;

/// Bidirectional mapping between symbol codes 0..k-1 and display characters.
/// At most 255 distinct symbols; duplicate characters are rejected.
class Alphabet {
 public:
  explicit Alphabet(std::string chars);

  /// The binary alphabet "01" used by all Sturmian machinery.
  static const Alphabet& binary();

  std::size_t size() const { return chars_.size(); }
  char display(Symbol s) const;
  /// Symbol code of a character; throws std::invalid_argument naming the
  /// offending character when it is not in the alphabet.
  Symbol code(char c) const;
  const std::string& chars() const { return chars_; }

 private:
  std::string chars_;
};

/// An immutable finite word over symbol codes. The empty word is valid.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  /// Decodes display text, e.g. Word::from_text("0100101"). Rejects
  /// characters outside the alphabet.
  static Word from_text(std::string_view text,
                        const Alphabet& alphabet = Alphabet::binary());

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  Word subword(std::size_t pos, std::size_t len) const;
  /// Left rotation by r positions: w[r..] w[..r].
  Word rotated(std::size_t r) const;
  /// The m-th power w^m (w repeated m times); w^0 = empty word.
  Word repeated(std::size_t m) const;
  bool starts_with(const Word& prefix) const;
  bool ends_with(const Word& suffix) const;

  std::string text(const Alphabet& alphabet = Alphabet::binary()) const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
};

/// The orbit of a word under cyclic rotation. The representative is the
/// lexicographically least rotation, so classes compare and hash stably.
struct ConjugacyClass {
  Word representative;
  std::set<Word> members;

  std::size_t size() const { return members.size(); }
  bool contains(const Word& w) const { return members.count(w) != 0; }

  friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
};

/// All distinct rotations of w. conjugates("") is {empty}.
ConjugacyClass conjugates(const Word& w);

/// True iff w is not a proper power v^m, m >= 2. Throws on the empty word.
bool is_primitive(const Word& w);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent;
};

/// The primitive root v and maximal exponent e with v^e = w. Throws on the
/// empty word.
PrimitiveRoot primitive_root(const Word& w);

/// The set of distinct length-n windows of w; {empty} for n = 0.
/// Throws std::invalid_argument when n exceeds |w|.
std::set<Word> factors_of_length(const Word& w, std::size_t n);

/// True iff v occurs in w as a contiguous block.
bool contains_factor(const Word& w, const Word& v);

/// Largest m >= 0 such that v^m is a factor of the finite word w. This is the
/// index within the supplied word only; callers approximating an infinite
/// word must saturate the prefix first. Throws on empty v.
std::size_t index_in(const Word& v, const Word& w);

}  // namespace liecx

#endif  // LIECX_WORD_HPP
