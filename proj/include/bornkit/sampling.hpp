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
#include <span>
#include <string>
#include <vector>

#include "bornkit/measures.hpp"

namespace bornkit {

/// Detection counts from a seeded run.
struct EventLog {
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
    std::uint64_t seed = 0;
    std::string detector_id;
};

/// Draws are split into fixed blocks of this size; block b uses
/// derive_stream(seed, b). Counts therefore do not depend on thread count.
inline constexpr std::uint64_t kSampleBlockSize = 1u << 16;

/// n categorical draws from q by inverse CDF over the running sum of q in
/// element order. OpenMP over blocks.
std::vector<std::uint64_t> sample_categorical(std::span<const double> q, std::uint64_t n, std::uint64_t seed);

/// Single-threaded reference for sample_categorical; same output.
std::vector<std::uint64_t> sample_categorical_serial(std::span<const double> q, std::uint64_t n, std::uint64_t seed);

/// n detection events for a source rho (response probabilities p_k / I).
/// Errors: EmptyState, InvalidArgument (n = 0).
EventLog sample_events(const Detector& detector, const DensityOperator& rho, std::uint64_t n, std::uint64_t seed,
                       std::string detector_id = "");

/// counts / total. Errors: EmptyLog.
RealVector empirical_rates(const EventLog& log);

struct VerificationReport {
    std::vector<double> deviations;  // per element |freq - q| or per component |mean - <X>|
    std::vector<double> bounds;
    std::vector<double> expected;    // q_k, or |<X_j>|
    std::vector<Complex> sample_mean;    // scale-mean checks only
    std::vector<Complex> quantum_mean;   // scale-mean checks only
    bool passed = false;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
};

/// Compares frequencies of `log` with `expected` probabilities:
/// |freq_k - q_k| <= k_sigma sqrt(q_k (1 - q_k) / n) + 1/n.
VerificationReport verify_frequencies(const EventLog& log, std::span<const double> expected, double k_sigma = 5.0);

/// Samples and checks frequencies against tr(rho P_k) / tr(rho).
/// Errors: EmptyState, InvalidArgument (n < 100).
VerificationReport verify_born_povm(const Detector& detector, const DensityOperator& rho, std::uint64_t n,
                                    std::uint64_t seed, double k_sigma = 5.0);

/// Checks the sample mean of scale values against the quantum expectation
/// of the measured quantity, componentwise:
/// |mean_j - <X_j>| <= k_sigma std_j / sqrt(n) + 1e-12.
VerificationReport verify_born_c(const Detector& detector, const DensityOperator& rho, std::uint64_t n,
                                 std::uint64_t seed, double k_sigma = 5.0);

/// Same check as verify_born_c on an existing log.
VerificationReport verify_mean(const Detector& detector, const DensityOperator& rho, const EventLog& log,
                               double k_sigma = 5.0);

}  // namespace bornkit
