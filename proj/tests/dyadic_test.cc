// Copyright 2026 The qparadox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qparadox/dyadic.hpp"

#include <cstdint>
#include <limits>
#include <random>

#include "gtest/gtest.h"

using namespace qparadox;

TEST(DyadicGaussian, normalizes) {
    DyadicGaussian a(2, 4, 3);  // (2 + 4i)/8 = (1 + 2i)/4
    ASSERT_EQ(a.re_numerator(), 1);
    ASSERT_EQ(a.im_numerator(), 2);
    ASSERT_EQ(a.exponent(), 2);
    ASSERT_EQ(DyadicGaussian(0, 0, 5), DyadicGaussian());
    ASSERT_EQ(DyadicGaussian(0, 0, 5).exponent(), 0);
    ASSERT_EQ(DyadicGaussian(3, 0, -2), DyadicGaussian(12));
}

TEST(DyadicGaussian, arithmetic) {
    DyadicGaussian quarter(1, 0, 2);
    ASSERT_EQ(quarter + quarter, DyadicGaussian(1, 0, 1));
    ASSERT_EQ(quarter - quarter, DyadicGaussian());
    ASSERT_EQ(quarter * quarter, DyadicGaussian(1, 0, 4));
    ASSERT_EQ(DyadicGaussian::i() * DyadicGaussian::i(), DyadicGaussian(-1));
    ASSERT_EQ(DyadicGaussian(1, 1, 0) * DyadicGaussian(1, -1, 0), DyadicGaussian(2));
    ASSERT_EQ(DyadicGaussian(3, -5, 2).conj(), DyadicGaussian(3, 5, 2));
    ASSERT_EQ(-DyadicGaussian(3, -5, 2), DyadicGaussian(-3, 5, 2));
    for (int k = -8; k <= 8; k++) {
        ASSERT_EQ(DyadicGaussian::i_pow(k) * DyadicGaussian::i_pow(-k), DyadicGaussian(1));
    }
    ASSERT_EQ(DyadicGaussian(3).scaled_pow2(-2), DyadicGaussian(3, 0, 2));
    ASSERT_EQ(DyadicGaussian(3, 0, 2).scaled_pow2(3), DyadicGaussian(6));
}

TEST(DyadicGaussian, power_of_two_detection) {
    ASSERT_EQ(DyadicGaussian(4).log2_if_power_of_two(), 2);
    ASSERT_EQ(DyadicGaussian(1).log2_if_power_of_two(), 0);
    ASSERT_EQ(DyadicGaussian(1, 0, 3).log2_if_power_of_two(), -3);
    ASSERT_FALSE(DyadicGaussian(3).log2_if_power_of_two());
    ASSERT_FALSE(DyadicGaussian(-4).log2_if_power_of_two());
    ASSERT_FALSE(DyadicGaussian(4, 1, 0).log2_if_power_of_two());
}

TEST(DyadicGaussian, text_round_trip) {
    ASSERT_EQ(DyadicGaussian(-1, 0, 2).str(), "-1/2^2 + 0/2^2 i");
    ASSERT_EQ(DyadicGaussian::parse("-1/2^2 + 0/2^2 i"), DyadicGaussian(-1, 0, 2));
    ASSERT_EQ(DyadicGaussian::parse("2/2^2+-6/2^2 i"), DyadicGaussian(1, -3, 1));
    ASSERT_THROW(DyadicGaussian::parse("1/4"), ParseError);
    ASSERT_THROW(DyadicGaussian::parse("1/2^2 + 1/2^3 i"), ParseError);
    ASSERT_THROW(DyadicGaussian::parse("1/2^2 + 1/2^2 i junk"), ParseError);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(-1000, 1000);
    std::uniform_int_distribution<int> ex(0, 20);
    for (int trial = 0; trial < 200; trial++) {
        DyadicGaussian v(num(rng), num(rng), ex(rng));
        ASSERT_EQ(DyadicGaussian::parse(v.str()), v);
    }
}

TEST(DyadicGaussian, field_laws_against_complex_doubles) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> ex(0, 6);
    for (int trial = 0; trial < 500; trial++) {
        DyadicGaussian a(num(rng), num(rng), ex(rng));
        DyadicGaussian b(num(rng), num(rng), ex(rng));
        ASSERT_LT(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())), 1e-12);
        ASSERT_LT(std::abs((a * b).to_complex() - (a.to_complex() * b.to_complex())), 1e-12);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) - b, a);
    }
}

TEST(DyadicGaussian, overflow_throws) {
    DyadicGaussian big(std::numeric_limits<std::int64_t>::max());
    ASSERT_THROW(big + DyadicGaussian(1), std::overflow_error);
    ASSERT_THROW(big * DyadicGaussian(2), std::overflow_error);
}
