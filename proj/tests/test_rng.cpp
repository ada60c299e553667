// Copyright 2026 The BornKit Authors
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

#include "bornkit/rng.hpp"

#include <concepts>
#include <random>

#include "gtest/gtest.h"

using bornkit::derive_stream;
using bornkit::SplitMix64;
using bornkit::Xoshiro256StarStar;

static_assert(std::uniform_random_bit_generator<Xoshiro256StarStar>);

TEST(splitmix64, reference_vector) {
    SplitMix64 sm(1234567);
    const std::uint64_t expected[] = {6457827717110365317ULL, 3203168211198807973ULL, 9817491932198370423ULL,
                                      4593380528125082431ULL, 16408922859458223821ULL};
    for (auto e : expected) EXPECT_EQ(sm.next(), e);
}

TEST(xoshiro256starstar, reference_vector_raw_state) {
    auto g = Xoshiro256StarStar::from_state(1, 2, 3, 4);
    const std::uint64_t expected[] = {11520ULL,
                                      0ULL,
                                      1509978240ULL,
                                      1215971899390074240ULL,
                                      1216172134540287360ULL,
                                      607988272756665600ULL,
                                      16172922978634559625ULL,
                                      8476171486693032832ULL,
                                      10595114339597558777ULL,
                                      2904607092377533576ULL};
    for (auto e : expected) EXPECT_EQ(g.next(), e);
}

TEST(xoshiro256starstar, reference_vector_seeded) {
    Xoshiro256StarStar g(42);
    EXPECT_EQ(g.next(), 1546998764402558742ULL);
    EXPECT_EQ(g.next(), 6990951692964543102ULL);
    EXPECT_EQ(g.next(), 12544586762248559009ULL);
    EXPECT_EQ(g.next(), 17057574109182124193ULL);
    EXPECT_EQ(g.next(), 18295552978065317476ULL);
}

TEST(xoshiro256starstar, uniform_in_unit_interval) {
    Xoshiro256StarStar g(9);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = g.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 100000.0, 0.5, 5.0 * std::sqrt(1.0 / 12.0 / 100000.0));
}

TEST(derive_stream, xor_of_seed_and_index) {
    auto a = derive_stream(42, 5);
    Xoshiro256StarStar b(42 ^ 5);
    for (int i = 0; i < 8; ++i) EXPECT_EQ(a.next(), b.next());
    auto s0 = derive_stream(42, 0);
    auto s1 = derive_stream(42, 1);
    EXPECT_NE(s0.next(), s1.next());
}
