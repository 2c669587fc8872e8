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
// Producers of arbitrarily long prefixes of an infinite word: literal finite
// words, fixed points of morphisms, and characteristic Sturmian words from a
// slope spec.

#ifndef LIECX_WORD_SOURCE_HPP
#define LIECX_WORD_SOURCE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liecx/sturmian.hpp"
#include "liecx/word.hpp"

namespace liecx {

/// Default hard cap on generated prefix length (symbols).
inline constexpr std::size_t kDefaultPrefixCap = std::size_t{1} << 22;

/// A producer of prefixes of a (conceptually infinite) word. Prefixes are
/// coherent: prefix(m) is a prefix of prefix(m') for m <= m'. Growth mutates
/// internal state; freeze the prefix before any parallel fan-out.
class WordSource {
 public:
  virtual ~WordSource() = default;

  /// The first min(len, available) symbols. Finite sources return what they
  /// have; unbounded sources extend as needed (up to any internal limit such
  /// as CF digit exhaustion).
  virtual Word prefix(std::size_t len) = 0;

  /// True when the source can certify complete factor sets by the
  /// p(n) = n + 1 criterion (Sturmian sources only).
  virtual bool sturmian() const { return false; }

  /// Total length for finite sources, which are their own ground truth;
  /// nullopt for unbounded ones.
  virtual std::optional<std::size_t> finite_size() const { return std::nullopt; }

  /// Display alphabet of the produced symbols.
  virtual const Alphabet& alphabet() const { return Alphabet::binary(); }

  virtual std::string describe() const = 0;
};

/// A finite word, its own ground truth.
class LiteralSource final : public WordSource {
 public:
  explicit LiteralSource(Word word, Alphabet alphabet = Alphabet::binary());

  Word prefix(std::size_t len) override;
  const Alphabet& alphabet() const override { return alphabet_; }
  std::optional<std::size_t> finite_size() const override { return word_.size(); }
  std::string describe() const override;
  std::size_t size() const { return word_.size(); }

 private:
  Word word_;
  Alphabet alphabet_;
};

/// A substitution on symbols, e.g. "0->01,1->0".
class Morphism {
 public:
  Morphism(std::vector<Word> images, Alphabet alphabet);

  /// Parses rule syntax "0->01,1->0". Every right-hand symbol must have a
  /// rule of its own; the alphabet is the rule left-hand sides in order.
  static Morphism parse(std::string_view rules);

  const Word& image(Symbol s) const;
  const Alphabet& alphabet() const { return alphabet_; }
  std::string to_string() const;

 private:
  std::vector<Word> images_;
  Alphabet alphabet_;
};

/// The fixed point of a morphism prolongable on the seed symbol: the rule
/// for the seed must start with the seed and have length >= 2. Generation is
/// the usual online expansion; a stalling (non-growing) morphism is an error.
class MorphismSource final : public WordSource {
 public:
  MorphismSource(Morphism morphism, Symbol seed);

  Word prefix(std::size_t len) override;
  const Alphabet& alphabet() const override { return morphism_.alphabet(); }
  std::string describe() const override;

 private:
  Morphism morphism_;
  Symbol seed_;
  std::vector<Symbol> buffer_;
  std::size_t expand_pos_ = 0;
};

/// The characteristic Sturmian word of the spec's slope. Unnormalized specs
/// (a_1 = 1, slope > 1/2) are normalized internally and the output letters
/// are exchanged back, so the word really has the requested slope.
class SturmianSource final : public WordSource {
 public:
  explicit SturmianSource(const SlopeSpec& spec);

  Word prefix(std::size_t len) override;
  bool sturmian() const override { return true; }
  std::string describe() const override;

  /// The normalized spec driving generation.
  const SlopeSpec& normalized_spec() const { return normalized_; }
  bool letters_swapped() const { return swapped_; }

 private:
  SlopeSpec original_;
  SlopeSpec normalized_;
  bool swapped_;
  std::vector<Symbol> cache_;
};

}  // namespace liecx

#endif  // LIECX_WORD_SOURCE_HPP
