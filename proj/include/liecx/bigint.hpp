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

#ifndef LIECX_BIGINT_HPP
#define LIECX_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecx {

/// Unsigned arbitrary-precision integer. Only the operations the
/// convergent-denominator recurrence needs: addition, multiplication by a
/// machine word, comparison, decimal printing. Little-endian 32-bit limbs.
class BigUint {
 public:
  BigUint() : limbs_{0} {}
  BigUint(std::uint64_t v) {  // NOLINT: implicit by design, q tables mix literals in
    limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
  }

  friend BigUint operator+(const BigUint& a, const BigUint& b) {
    BigUint r;
    r.limbs_.assign(std::max(a.limbs_.size(), b.limbs_.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
      std::uint64_t s = carry;
      if (i < a.limbs_.size()) s += a.limbs_[i];
      if (i < b.limbs_.size()) s += b.limbs_[i];
      r.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
      carry = s >> 32;
    }
    r.trim();
    return r;
  }

  friend BigUint operator*(const BigUint& a, std::uint64_t m) {
    if (m == 0) return BigUint();
    BigUint lo = a.mul_u32(static_cast<std::uint32_t>(m & 0xffffffffu));
    std::uint32_t hi = static_cast<std::uint32_t>(m >> 32);
    if (hi == 0) return lo;
    BigUint hipart = a.mul_u32(hi);
    hipart.limbs_.insert(hipart.limbs_.begin(), 0);  // shift by one limb
    return lo + hipart;
  }

  friend bool operator==(const BigUint& a, const BigUint& b) {
    return a.limbs_ == b.limbs_;
  }

  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
  }

  bool fits_u64() const {
    return limbs_.size() <= 2;
  }

  std::uint64_t to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint does not fit in 64 bits");
    std::uint64_t v = limbs_[0];
    if (limbs_.size() == 2) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return v;
  }

  std::string to_string() const {
    std::vector<std::uint32_t> work(limbs_);
    std::string digits;
    while (!(work.size() == 1 && work[0] == 0)) {
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 10);
        rem = cur % 10;
      }
      digits.push_back(static_cast<char>('0' + rem));
      while (work.size() > 1 && work.back() == 0) work.pop_back();
    }
    if (digits.empty()) digits.push_back('0');
    return std::string(digits.rbegin(), digits.rend());
  }

 private:
  BigUint mul_u32(std::uint32_t m) const {
    BigUint r;
    r.limbs_.assign(limbs_.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t p = static_cast<std::uint64_t>(limbs_[i]) * m + carry;
      r.limbs_[i] = static_cast<std::uint32_t>(p & 0xffffffffu);
      carry = p >> 32;
    }
    r.limbs_[limbs_.size()] = static_cast<std::uint32_t>(carry);
    r.trim();
    return r;
  }

  void trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

}  // namespace liecx

#endif  // LIECX_BIGINT_HPP
