// Copyright 2026 The mixsig Authors.
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

#include "mixsig/rational.h"

#include <gtest/gtest.h>

#include "mixsig/error.h"

namespace mixsig {
namespace {

TEST(RationalTest, ParsesExactForms) {
  EXPECT_EQ(ParseRational("3"), Rational(3));
  EXPECT_EQ(ParseRational("-2"), Rational(-2));
  EXPECT_EQ(ParseRational("0.5"), MakeRational(1, 2));
  EXPECT_EQ(ParseRational("0.1"), MakeRational(1, 10));
  EXPECT_EQ(ParseRational("1.5e-3"), MakeRational(3, 2000));
  EXPECT_EQ(ParseRational("2E2"), Rational(200));
  EXPECT_EQ(ParseRational("7/12"), MakeRational(7, 12));
  EXPECT_EQ(ParseRational("6/4"), MakeRational(3, 2));
  EXPECT_EQ(ParseRational(" .25 "), MakeRational(1, 4));
}

TEST(RationalTest, RejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "--1",
                          "0x10", "1/2/3"}) {
    try {
      ParseRational(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << bad;
    }
  }
}

TEST(RationalTest, Renders) {
  EXPECT_EQ(ToFraction(Rational(2)), "2/1");
  EXPECT_EQ(ToFraction(MakeRational(-3, 6)), "-1/2");
  EXPECT_EQ(ToDecimal(MakeRational(2, 3)), "0.666667");
  EXPECT_EQ(ToDecimal(MakeRational(-2, 3)), "-0.666667");
  EXPECT_EQ(ToDecimal(MakeRational(1, 2000000), 6), "0.000001");
  EXPECT_EQ(ToDecimal(MakeRational(-1, 3000000), 6), "0.000000");
  EXPECT_EQ(ToDecimal(Rational(1001), 2), "1001.00");
  EXPECT_EQ(ToDisplay(MakeRational(1, 2)), "1/2 (0.500000)");
  EXPECT_EQ(ToTerminatingDecimal(MakeRational(3, 8)), "0.375");
  EXPECT_EQ(ToTerminatingDecimal(Rational(-7)), "-7");
  EXPECT_EQ(ToTerminatingDecimal(MakeRational(1, 3)), "");
}

TEST(RationalTest, TerminatingDecimalRoundTrips) {
  for (long num = -40; num <= 40; ++num) {
    for (long den : {1, 2, 4, 5, 8, 16, 20, 25, 125, 1024}) {
      Rational q = MakeRational(num, den);
      EXPECT_EQ(ParseRational(ToTerminatingDecimal(q)), q);
      EXPECT_EQ(ParseRational(ToFraction(q)), q);
    }
  }
}

}  // namespace
}  // namespace mixsig
