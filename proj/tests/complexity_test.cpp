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

#include "liecx/complexity.hpp"

#include <doctest.h>

#include <string>

#include "liecx/errors.hpp"
#include "support.hpp"

using namespace liecx;
namespace ts = liecx::testsupport;

namespace {

const SlopeSpec kFibSpec = SlopeSpec::parse("2;(1)");
const SlopeSpec kSpec32 = SlopeSpec::parse("3;(2)");

SturmianSource fib_source() { return SturmianSource(kFibSpec); }

MorphismSource thue_morse() {
  return MorphismSource(Morphism::parse("0->01,1->10"), 0);
}

}  // namespace

TEST_CASE("word sources produce coherent prefixes") {
  SturmianSource fib = fib_source();
  CHECK(fib.prefix(13).text() == "0100101001001");
  MorphismSource tm = thue_morse();
  CHECK(tm.prefix(16).text() == ts::thue_morse_text(16));
  CHECK(tm.prefix(1024).text() == ts::thue_morse_text(1024));
  LiteralSource lit(Word::from_text("0011"));
  CHECK(lit.prefix(2).text() == "00");
  CHECK(lit.prefix(99).text() == "0011");

  for (std::size_t m = 1; m <= 64; m += 7) {
    CHECK(fib.prefix(m + 3).starts_with(fib.prefix(m)));
    CHECK(tm.prefix(m + 3).starts_with(tm.prefix(m)));
  }

  // Fibonacci as a morphism fixed point matches the CF route.
  MorphismSource fib_morph(Morphism::parse("0->01,1->0"), 0);
  CHECK(fib_morph.prefix(200) == fib.prefix(200));

  CHECK_THROWS_AS(MorphismSource(Morphism::parse("0->10,1->0"), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse("0->01,zz"), std::invalid_argument);
}

TEST_CASE("sturmian sources accept slopes above 1/2 by letter exchange") {
  // [0;1,1,1,...] is the golden slope 1/phi; its word is the Fibonacci word
  // with 0 and 1 exchanged.
  SturmianSource swapped(SlopeSpec::parse("1;(1)"));
  CHECK(swapped.letters_swapped());
  SturmianSource fib = fib_source();
  Word a = swapped.prefix(100);
  Word b = fib.prefix(100);
  for (std::size_t i = 0; i < 100; ++i) CHECK(a[i] == 1 - b[i]);
}

TEST_CASE("saturated factor sets") {
  SturmianSource fib = fib_source();
  FactorSet fs = saturated_factors(fib, 3);
  CHECK(fs.certified);
  CHECK(fs.count() == 4);
  auto expected = ts::window_factors("01001010010010100101", 3);
  std::set<std::string> got;
  for (const Word& w : fs.factors) got.insert(w.text());
  CHECK(got == expected);

  FactorSet eps = saturated_factors(fib, 0);
  CHECK(eps.certified);
  CHECK(eps.count() == 1);

  LiteralSource lit(Word::from_text("0011"));
  FactorSet lf = saturated_factors(lit, 2);
  CHECK_FALSE(lf.certified);
  CHECK(lf.count() == 3);

  // Saturation cap failure is a distinct, loud error.
  SturmianSource capped = fib_source();
  SaturationConfig tight;
  tight.prefix_cap = 64;
  CHECK_THROWS_AS(saturated_factors(capped, 60, tight), SaturationError);
}

TEST_CASE("factor complexity") {
  SturmianSource fib = fib_source();
  CHECK(factor_complexity(fib, 5) == 6);
  CHECK(factor_complexity(fib, 0) == 1);
  for (std::size_t n = 0; n <= 40; ++n) CHECK(factor_complexity(fib, n) == n + 1);

  MorphismSource tm = thue_morse();
  CHECK(factor_complexity(tm, 2) == 4);
  // Oracle: independent bit-parity generation, windows of a long prefix.
  CHECK(factor_complexity(tm, 5) ==
        ts::window_factors(ts::thue_morse_text(4096), 5).size());
}

TEST_CASE("brute-force Lie classes of the Fibonacci word") {
  SturmianSource fib = fib_source();

  auto classes2 = lie_classes_bruteforce(fib, 2);
  REQUIRE(classes2.size() == 2);
  CHECK(classes2[0].representative.text() == "00");
  CHECK(classes2[1].representative.text() == "01");
  CHECK(classes2[1].members.size() == 2);

  auto classes3 = lie_classes_bruteforce(fib, 3);
  REQUIRE(classes3.size() == 1);
  CHECK(classes3[0].representative.text() == "001");
  CHECK(classes3[0].members.size() == 3);

  CHECK(lie_classes_bruteforce(fib, 7).empty());
  CHECK(lie_classes_bruteforce(fib, 0).size() == 1);
}

TEST_CASE("Rauzy-cycle route matches the values of the worked example") {
  SturmianSource fib = fib_source();
  CHECK(lie_complexity_via_rauzy(fib, 2) == 2);
  CHECK(lie_complexity_via_rauzy(fib, 8) == 1);
  CHECK(lie_complexity_via_rauzy(fib, 9) == 0);
}

TEST_CASE("cycle route equals brute force on a mixed corpus") {
  SturmianSource fib = fib_source();
  MorphismSource tm = thue_morse();
  ts::SplitMix64 rng(0x5eed0004u);
  LiteralSource rnd(Word::from_text(rng.word(512, "01")));

  for (std::size_t n = 1; n <= 25; ++n) {
    CHECK(lie_complexity_via_rauzy(fib, n) == lie_classes_bruteforce(fib, n).size());
    CHECK(lie_complexity_via_rauzy(tm, n) == lie_classes_bruteforce(tm, n).size());
    CHECK(lie_complexity_via_rauzy(rnd, n) == lie_classes_bruteforce(rnd, n).size());
  }
}

TEST_CASE("first-difference bound") {
  SturmianSource fib = fib_source();
  ComplexityRow row = verify_bound(fib, 10);
  CHECK(row.p == 11);
  CHECK(row.delta_p == 1);
  CHECK(row.lie_bruteforce == 1);
  CHECK(row.bound_ok);

  MorphismSource tm = thue_morse();
  CHECK(verify_bound(tm, 4).bound_ok);

  LiteralSource zeros(Word::from_text(std::string(20, '0')));
  ComplexityRow zrow = verify_bound(zeros, 5);
  CHECK(zrow.p == 1);
  CHECK(zrow.lie_bruteforce == 1);
  CHECK(zrow.bound_ok);
}

TEST_CASE("closed-form Lie complexity") {
  CHECK(sturmian_lie_formula(kFibSpec, 0) == 1);
  CHECK(sturmian_lie_formula(kFibSpec, 2) == 2);
  CHECK(sturmian_lie_formula(kFibSpec, 7) == 0);
  CHECK(sturmian_lie_formula(kFibSpec, 8) == 1);
  CHECK(sturmian_lie_formula(kSpec32, 4) == 1);
  CHECK_THROWS_AS(sturmian_lie_formula(SlopeSpec::parse("1;(1)"), 3),
                  std::invalid_argument);
  // Deciding n = q_K needs one digit beyond the covering convergent.
  CHECK_THROWS_AS(sturmian_lie_formula(SlopeSpec::parse("2,1"), 3),
                  CfExhaustedError);
}

TEST_CASE("length classification") {
  LengthCase c = classify_length(kFibSpec, 10);
  CHECK(c.kind == LengthCase::Kind::kPowerOfStandard);
  CHECK(c.k == 3);
  CHECK(c.value == 2);
  CHECK(c.to_string() == "PowerOfStandard(k=3,m=2)");

  c = classify_length(kSpec32, 4);
  CHECK(c.kind == LengthCase::Kind::kSemistandard);
  CHECK(c.k == 2);
  CHECK(c.value == 1);
  CHECK(c.to_string() == "Semistandard(k=2,l=1)");

  CHECK(classify_length(kFibSpec, 7).kind == LengthCase::Kind::kNone);
  CHECK(classify_length(kFibSpec, 2).kind == LengthCase::Kind::kSmall);
  CHECK(classify_length(kSpec32, 3).kind == LengthCase::Kind::kSmall);
}

TEST_CASE("formula case analysis is exclusive and matches brute force") {
  for (const char* text :
       {"2;(1)", "3;(2)", "4;(1)", "2,3;(1,2)", "5,7;(2,6)", "6;(1)"}) {
    SlopeSpec spec = SlopeSpec::parse(text);
    SturmianSource src(spec);
    for (std::uint64_t n = 0; n <= 45; ++n) {
      int formula = sturmian_lie_formula(spec, n);
      auto brute = lie_classes_bruteforce(src, static_cast<std::size_t>(n));
      CHECK(formula == static_cast<int>(brute.size()));
      if (n >= 1) {
        LengthCase c = classify_length(spec, n);
        if (formula == 0) CHECK(c.kind == LengthCase::Kind::kNone);
        if (formula == 2) CHECK(c.kind == LengthCase::Kind::kSmall);
        if (formula == 1) {
          bool tagged = c.kind == LengthCase::Kind::kPowerOfStandard ||
                        c.kind == LengthCase::Kind::kSemistandard;
          CHECK(tagged);
        }
      }
    }
  }
}

TEST_CASE("letter-exchange equivariance of the Lie profile") {
  SlopeSpec above(SlopeSpec::parse("1,2;(3)"));
  SturmianSource original(above);
  SturmianSource normalized_src(normalize(above).spec);
  for (std::size_t n = 0; n <= 25; ++n) {
    CHECK(lie_classes_bruteforce(original, n).size() ==
          lie_classes_bruteforce(normalized_src, n).size());
  }
  // The formula on the normalized twin gives the profile of the original.
  for (std::uint64_t n = 0; n <= 25; ++n) {
    CHECK(sturmian_lie_formula(normalize(above).spec, n) ==
          static_cast<int>(lie_classes_bruteforce(original, n).size()));
  }
}

TEST_CASE("compute_row cross-checks methods") {
  SturmianSource fib = fib_source();
  MethodSet all{true, true, true};
  for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 8u, 10u}) {
    ComplexityRow row = compute_row(fib, n, all, &kFibSpec);
    CHECK(row.certified);
    CHECK(row.bound_ok);
    if (n >= 1) {
      CHECK(row.lie_bruteforce == row.lie_rauzy);
      CHECK(row.lie_bruteforce == row.lie_formula);
    }
  }
  ComplexityRow zero = compute_row(fib, 0, all, &kFibSpec);
  CHECK(zero.p == 1);
  CHECK_FALSE(zero.delta_p.has_value());
  CHECK_FALSE(zero.lie_rauzy.has_value());
  CHECK(zero.case_tag == "Zero");

  // The formula method on a wrong spec must trip the disagreement gate.
  SlopeSpec wrong = SlopeSpec::parse("4;(1)");
  bool tripped = false;
  for (std::size_t n = 2; n <= 6 && !tripped; ++n) {
    try {
      compute_row(fib, n, all, &wrong);
    } catch (const DisagreementError&) {
      tripped = true;
    }
  }
  CHECK(tripped);
}

TEST_CASE("index sets of conjugates") {
  SturmianSource fib = fib_source();
  Word s1 = standard_prefix(kFibSpec, 1).word;
  IndexSetResult r = index_set_of_conjugates(fib, s1);
  CHECK(r.certified);
  CHECK(r.indexes == std::set<std::size_t>{2});

  Word s2 = standard_prefix(kFibSpec, 2).word;
  r = index_set_of_conjugates(fib, s2);
  CHECK(r.certified);
  CHECK(r.indexes == std::set<std::size_t>{2, 3});

  SturmianSource src32(kSpec32);
  Word s21 = semistandard_prefix(kSpec32, 2, 1).word;
  r = index_set_of_conjugates(src32, s21);
  CHECK(r.certified);
  CHECK(r.indexes == std::set<std::size_t>{1, 2});

  CHECK_THROWS_AS(index_set_of_conjugates(fib, Word()), std::invalid_argument);
  CHECK_THROWS_AS(index_set_of_conjugates(fib, Word::from_text("0101")),
                  std::invalid_argument);
}

TEST_CASE("index sets are exact even when short prefixes look stable") {
  // For this slope, prefixes of length 288 and 576 agree on the wrong set
  // {2,3} for s_2; the certified answer is {3,4} (= {d_3+1, d_3+2}).
  SlopeSpec spec = SlopeSpec::parse("5,7;(2,6)");
  SturmianSource src(spec);
  Word s2 = standard_prefix(spec, 2).word;
  REQUIRE(s2.size() == 36);

  std::set<std::size_t> at288, at576;
  for (const Word& c : conjugates(s2).members) {
    at288.insert(index_in(c, src.prefix(288)));
    at576.insert(index_in(c, src.prefix(576)));
  }
  CHECK(at288 == at576);  // the trap: one doubling looks stable
  CHECK(at288 == std::set<std::size_t>{2, 3});

  IndexSetResult r = index_set_of_conjugates(src, s2);
  CHECK(r.certified);
  CHECK(r.indexes == std::set<std::size_t>{3, 4});
}

TEST_CASE("conjugate closure reports") {
  SturmianSource fib = fib_source();
  ClosureReport r3 = verify_conjugate_closure(fib, 3, kFibSpec);
  CHECK(r3.passed);
  CHECK(r3.certified);

  // (010)^3 is a factor of the Fibonacci word but its class is not Lie.
  SturmianSource fib2 = fib_source();
  Word w = Word::from_text("010").repeated(3);
  FactorSet f9 = saturated_factors(fib2, 9);
  CHECK(f9.factors.count(w));
  CHECK_FALSE(class_fully_present(w, f9.factors));
  ClosureReport r9 = verify_conjugate_closure(fib2, 9, kFibSpec);
  CHECK(r9.passed);

  // (0010)^2: the square of a semistandard prefix is never a Lie class.
  SturmianSource src32(kSpec32);
  FactorSet f8 = saturated_factors(src32, 8);
  CHECK_FALSE(class_fully_present(Word::from_text("0010").repeated(2), f8.factors));
  ClosureReport r8 = verify_conjugate_closure(src32, 8, kSpec32);
  CHECK(r8.passed);

  for (std::size_t n = 2; n <= 30; ++n) {
    ClosureReport r = verify_conjugate_closure(src32, n, kSpec32);
    CHECK(r.passed);
  }
}

TEST_CASE("literal sources always scan the whole word") {
  // A factor appearing only at the far end must still be found.
  std::string text(4000, '0');
  text += '1';
  LiteralSource src(Word::from_text(text));
  FactorSet fs = saturated_factors(src, 2);
  CHECK(fs.count() == 2);
  CHECK(fs.prefix_len == 4001);
  CHECK_FALSE(fs.certified);
  auto classes = lie_classes_bruteforce(src, 2);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].representative.text() == "00");
}

TEST_CASE("profiles of eventually constant literals stay sane") {
  LiteralSource ones(Word::from_text("1111111111111111"));
  for (std::size_t n = 1; n <= 8; ++n) {
    ComplexityRow row = compute_row(ones, n, MethodSet{true, true, false});
    CHECK(row.p == 1);
    CHECK(row.lie_bruteforce == 1);
    CHECK(row.lie_rauzy == 1);
    CHECK(row.bound_ok);
  }
}
