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
// Test-only oracles, independent of the library code paths they check.

#ifndef LIECX_TESTS_SUPPORT_HPP
#define LIECX_TESTS_SUPPORT_HPP

#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>

namespace liecx::testsupport {

// Sliding-window factor scan over plain text.
inline std::set<std::string> window_factors(std::string_view text, std::size_t n) {
  std::set<std::string> out;
  if (n == 0) {
    out.insert("");
    return out;
  }
  for (std::size_t i = 0; i + n <= text.size(); ++i)
    out.insert(std::string(text.substr(i, n)));
  return out;
}

// The Thue–Morse word by bit-parity, nothing shared with the morphism route.
inline std::string thue_morse_text(std::size_t len) {
  std::string out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(std::popcount(i) % 2 ? '1' : '0');
  return out;
}

// Deterministic word generator for property tests and the fixed "random"
// corpus; the seeds live in the test sources, never at runtime.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::string word(std::size_t len, std::string_view alphabet) {
    std::string out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
      out.push_back(alphabet[next() % alphabet.size()]);
    return out;
  }

 private:
  std::uint64_t state_;
};

// Schoolbook addition on decimal strings, an oracle for BigUint.
inline std::string add_decimal(const std::string& a, const std::string& b) {
  std::string out;
  int carry = 0;
  std::size_t i = a.size(), j = b.size();
  while (i > 0 || j > 0 || carry) {
    int s = carry;
    if (i > 0) s += a[--i] - '0';
    if (j > 0) s += b[--j] - '0';
    out.push_back(static_cast<char>('0' + s % 10));
    carry = s / 10;
  }
  return std::string(out.rbegin(), out.rend());
}

}  // namespace liecx::testsupport

#endif  // LIECX_TESTS_SUPPORT_HPP
