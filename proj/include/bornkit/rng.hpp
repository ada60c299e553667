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

#pragma once

#include <cstdint>
#include <limits>

namespace bornkit {

/// SplitMix64 (Steele, Lea, Flood 2014). Used only to expand seeds.
///
/// Reference vector: seeded with 1234567 the first five outputs are
///   6457827717110365317, 3203168211198807973, 9817491932198370423,
///   4593380528125082431, 16408922859458223821.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();

private:
    std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman and Vigna). The state is filled with four
/// consecutive SplitMix64 outputs of the seed.
///
/// Reference vector: raw state {1, 2, 3, 4} yields
///   11520, 0, 1509978240, 1215971899390074240, 1216172134540287360, ...
/// and seed 42 (via SplitMix64) yields
///   1546998764402558742, 6990951692964543102, 12544586762248559009, ...
///
/// Satisfies std::uniform_random_bit_generator.
class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t seed);
    static Xoshiro256StarStar from_state(std::uint64_t s0, std::uint64_t s1, std::uint64_t s2, std::uint64_t s3);

    std::uint64_t next();
    std::uint64_t operator()() { return next(); }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

private:
    Xoshiro256StarStar() = default;
    std::uint64_t s_[4] = {0, 0, 0, 0};
};

/// Independent stream number `stream` of a seeded run: a generator seeded
/// with (seed XOR stream), expanded through SplitMix64.
Xoshiro256StarStar derive_stream(std::uint64_t seed, std::uint64_t stream);

}  // namespace bornkit
