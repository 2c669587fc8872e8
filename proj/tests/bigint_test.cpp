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

#include "liecx/bigint.hpp"

#include <doctest.h>

#include "support.hpp"

using liecx::BigUint;
namespace ts = liecx::testsupport;

TEST_CASE("small values round-trip") {
  CHECK(BigUint().to_string() == "0");
  CHECK(BigUint(0).to_string() == "0");
  CHECK(BigUint(42).to_string() == "42");
  CHECK(BigUint(0xffffffffull).to_string() == "4294967295");
  CHECK(BigUint(0x100000000ull).to_string() == "4294967296");
  CHECK(BigUint(18446744073709551615ull).to_string() == "18446744073709551615");
  CHECK(BigUint(18446744073709551615ull).to_u64() == 18446744073709551615ull);
}

TEST_CASE("addition and multiplication against the decimal oracle") {
  CHECK((BigUint(7) + BigUint(8)).to_string() == "15");
  CHECK((BigUint(3) * 0x100000001ull).to_string() ==
        ts::add_decimal("12884901888", "3"));  // 3 * (2^32 + 1)

  // Powers of two by repeated doubling, against repeated decimal addition.
  BigUint pow(1);
  std::string dec = "1";
  for (int i = 0; i < 200; ++i) {
    pow = pow + pow;
    dec = ts::add_decimal(dec, dec);
  }
  CHECK(pow.to_string() == dec);
  CHECK_FALSE(pow.fits_u64());
  CHECK_THROWS_AS(pow.to_u64(), std::overflow_error);

  // Multiplication by a scalar equals repeated addition.
  BigUint sevenfold;
  for (int i = 0; i < 7; ++i) sevenfold = sevenfold + pow;
  CHECK((pow * 7).to_string() == sevenfold.to_string());
  CHECK((pow * 0).to_string() == "0");
}

TEST_CASE("ordering") {
  CHECK(BigUint(5) < BigUint(6));
  CHECK(BigUint(0x1ffffffffull) > BigUint(0xffffffffull));
  BigUint big = BigUint(1);
  for (int i = 0; i < 10; ++i) big = big * 0xffffffffffull + 17;
  CHECK(big > BigUint(18446744073709551615ull));
  CHECK(big == big);
}
