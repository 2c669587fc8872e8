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

#include "liecx/word_source.hpp"

#include <stdexcept>

namespace liecx {

LiteralSource::LiteralSource(Word word, Alphabet alphabet)
    : word_(std::move(word)), alphabet_(std::move(alphabet)) {
  for (Symbol s : word_.symbols()) alphabet_.display(s);  // validates range
}

Word LiteralSource::prefix(std::size_t len) {
  if (len >= word_.size()) return word_;
  return word_.subword(0, len);
}

std::string LiteralSource::describe() const {
  return "literal(length=" + std::to_string(word_.size()) + ")";
}

Morphism::Morphism(std::vector<Word> images, Alphabet alphabet)
    : images_(std::move(images)), alphabet_(std::move(alphabet)) {
  if (images_.size() != alphabet_.size())
    throw std::invalid_argument("morphism: one image per alphabet symbol required");
  for (const Word& img : images_)
    for (Symbol s : img.symbols())
      if (s >= images_.size())
        throw std::invalid_argument(
            "morphism: image uses a symbol without a rule");
}

Morphism Morphism::parse(std::string_view rules) {
  std::string alphabet_chars;
  std::vector<std::string> rhs_texts;
  std::size_t pos = 0;
  while (pos <= rules.size()) {
    std::size_t comma = rules.find(',', pos);
    std::string_view rule = rules.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::size_t arrow = rule.find("->");
    if (arrow == std::string_view::npos || arrow != 1)
      throw std::invalid_argument("morphism rule '" + std::string(rule) +
                                  "' must have the form c->word");
    char lhs = rule[0];
    if (alphabet_chars.find(lhs) != std::string::npos)
      throw std::invalid_argument(std::string("duplicate morphism rule for '") +
                                  lhs + "'");
    alphabet_chars.push_back(lhs);
    rhs_texts.emplace_back(rule.substr(arrow + 2));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  Alphabet alphabet(alphabet_chars);
  std::vector<Word> images;
  images.reserve(rhs_texts.size());
  for (const std::string& rhs : rhs_texts)
    images.push_back(Word::from_text(rhs, alphabet));
  return Morphism(std::move(images), std::move(alphabet));
}

const Word& Morphism::image(Symbol s) const {
  if (s >= images_.size())
    throw std::invalid_argument("morphism: no rule for symbol " + std::to_string(s));
  return images_[s];
}

std::string Morphism::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += alphabet_.chars()[i];
    out += "->";
    out += images_[i].text(alphabet_);
  }
  return out;
}

MorphismSource::MorphismSource(Morphism morphism, Symbol seed)
    : morphism_(std::move(morphism)), seed_(seed) {
  const Word& img = morphism_.image(seed_);
  if (img.size() < 2 || img[0] != seed_)
    throw std::invalid_argument(
        "morphism is not prolongable on the seed: rule must start with the "
        "seed and have length >= 2");
  buffer_ = img.symbols();
  expand_pos_ = 1;
}

Word MorphismSource::prefix(std::size_t len) {
  while (buffer_.size() < len) {
    if (expand_pos_ >= buffer_.size())
      throw std::invalid_argument(
          "morphism fixed point stalls: expansion stopped growing");
    const Word& img = morphism_.image(buffer_[expand_pos_]);
    buffer_.insert(buffer_.end(), img.symbols().begin(), img.symbols().end());
    ++expand_pos_;
  }
  return Word(std::vector<Symbol>(buffer_.begin(), buffer_.begin() + len));
}

std::string MorphismSource::describe() const {
  return "morphism(" + morphism_.to_string() + ", seed=" +
         std::string(1, morphism_.alphabet().display(seed_)) + ")";
}

SturmianSource::SturmianSource(const SlopeSpec& spec)
    : original_(spec),
      normalized_(spec),
      swapped_(false) {
  NormalizeResult n = normalize(spec);
  normalized_ = n.spec;
  swapped_ = n.letters_swapped;
}

Word SturmianSource::prefix(std::size_t len) {
  if (cache_.size() < len) {
    Word w = characteristic_prefix(normalized_, len);
    cache_ = w.symbols();
    if (swapped_)
      for (Symbol& s : cache_) s = static_cast<Symbol>(1 - s);
  }
  return Word(std::vector<Symbol>(cache_.begin(), cache_.begin() + len));
}

std::string SturmianSource::describe() const {
  return "sturmian(cf=" + original_.to_string() + ")";
}

}  // namespace liecx
