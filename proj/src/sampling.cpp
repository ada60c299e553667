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

#include "bornkit/sampling.hpp"

#include <cmath>

#include "bornkit/error.hpp"
#include "bornkit/rng.hpp"

namespace bornkit {
namespace {

std::vector<double> cumulative(std::span<const double> q) {
    if (q.empty()) throw Error(ErrorCode::InvalidArgument, "empty distribution");
    std::vector<double> cdf(q.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (!(q[k] >= 0.0)) throw Error(ErrorCode::InvalidArgument, "negative probability");
        acc += q[k];
        cdf[k] = acc;
    }
    if (!(acc > 0.0)) throw Error(ErrorCode::InvalidArgument, "distribution has zero mass");
    return cdf;
}

std::size_t last_supported(std::span<const double> q) {
    std::size_t last = 0;
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k] > 0.0) last = k;
    }
    return last;
}

// Draws of one block into `counts`.
void sample_block(const std::vector<double>& cdf, std::size_t fallback, std::uint64_t seed, std::uint64_t block,
                  std::uint64_t draws, std::uint64_t* counts) {
    Xoshiro256StarStar rng = derive_stream(seed, block);
    const std::size_t m = cdf.size();
    for (std::uint64_t i = 0; i < draws; ++i) {
        const double u = rng.uniform();
        std::size_t k = 0;
        while (k < m && !(u < cdf[k])) ++k;
        counts[k < m ? k : fallback] += 1;
    }
}

std::uint64_t block_count(std::uint64_t n) { return (n + kSampleBlockSize - 1) / kSampleBlockSize; }

std::uint64_t block_draws(std::uint64_t n, std::uint64_t b) {
    return std::min(kSampleBlockSize, n - b * kSampleBlockSize);
}

}  // namespace

std::vector<std::uint64_t> sample_categorical(std::span<const double> q, std::uint64_t n, std::uint64_t seed) {
    const std::vector<double> cdf = cumulative(q);
    const std::size_t fallback = last_supported(q);
    const std::size_t m = q.size();
    const auto blocks = static_cast<std::int64_t>(block_count(n));
    std::vector<std::uint64_t> counts(m, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(m, 0);
#pragma omp for schedule(static)
        for (std::int64_t b = 0; b < blocks; ++b) {
            const auto ub = static_cast<std::uint64_t>(b);
            sample_block(cdf, fallback, seed, ub, block_draws(n, ub), local.data());
        }
#pragma omp critical(bornkit_sample_merge)
        for (std::size_t k = 0; k < m; ++k) counts[k] += local[k];
    }
    return counts;
}

std::vector<std::uint64_t> sample_categorical_serial(std::span<const double> q, std::uint64_t n, std::uint64_t seed) {
    const std::vector<double> cdf = cumulative(q);
    const std::size_t fallback = last_supported(q);
    std::vector<std::uint64_t> counts(q.size(), 0);
    for (std::uint64_t b = 0; b < block_count(n); ++b) {
        sample_block(cdf, fallback, seed, b, block_draws(n, b), counts.data());
    }
    return counts;
}

EventLog sample_events(const Detector& detector, const DensityOperator& rho, std::uint64_t n, std::uint64_t seed,
                       std::string detector_id) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "number of events must be positive");
    const RealVector q = response_rates(detector.measure, rho.normalized());
    EventLog log;
    log.counts = sample_categorical(std::span<const double>(q.data(), static_cast<std::size_t>(q.size())), n, seed);
    log.total = n;
    log.seed = seed;
    log.detector_id = std::move(detector_id);
    return log;
}

RealVector empirical_rates(const EventLog& log) {
    if (log.total == 0) throw Error(ErrorCode::EmptyLog, "event log has no events");
    RealVector f(static_cast<Eigen::Index>(log.counts.size()));
    for (std::size_t k = 0; k < log.counts.size(); ++k) {
        f(static_cast<Eigen::Index>(k)) = static_cast<double>(log.counts[k]) / static_cast<double>(log.total);
    }
    return f;
}

VerificationReport verify_frequencies(const EventLog& log, std::span<const double> expected, double k_sigma) {
    if (expected.size() != log.counts.size()) {
        throw Error(ErrorCode::DimensionMismatch, "expected distribution length differs from log");
    }
    const RealVector freq = empirical_rates(log);
    const double n = static_cast<double>(log.total);
    VerificationReport report;
    report.n = log.total;
    report.seed = log.seed;
    report.passed = true;
    for (std::size_t k = 0; k < expected.size(); ++k) {
        const double q = expected[k];
        const double dev = std::abs(freq(static_cast<Eigen::Index>(k)) - q);
        const double bound = k_sigma * std::sqrt(std::max(q * (1.0 - q), 0.0) / n) + 1.0 / n;
        report.expected.push_back(q);
        report.deviations.push_back(dev);
        report.bounds.push_back(bound);
        if (!(dev <= bound)) report.passed = false;
    }
    return report;
}

VerificationReport verify_born_povm(const Detector& detector, const DensityOperator& rho, std::uint64_t n,
                                    std::uint64_t seed, double k_sigma) {
    if (n < 100) throw Error(ErrorCode::InvalidArgument, "verification needs n >= 100");
    const RealVector q = response_rates(detector.measure, rho.normalized());
    const EventLog log = sample_events(detector, rho, n, seed);
    return verify_frequencies(log, std::span<const double>(q.data(), static_cast<std::size_t>(q.size())), k_sigma);
}

VerificationReport verify_mean(const Detector& detector, const DensityOperator& rho, const EventLog& log,
                               double k_sigma) {
    if (log.total == 0) throw Error(ErrorCode::EmptyLog, "event log has no events");
    if (log.counts.size() != detector.measure.size()) {
        throw Error(ErrorCode::DimensionMismatch, "log and detector element counts differ");
    }
    const std::size_t m = detector.scale.components();
    const double n = static_cast<double>(log.total);
    const std::vector<ComplexMatrix> quantity = measured_quantity(detector);

    VerificationReport report;
    report.n = log.total;
    report.seed = log.seed;
    report.passed = true;
    for (std::size_t j = 0; j < m; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        Complex mean = 0.0;
        for (std::size_t k = 0; k < log.counts.size(); ++k) {
            mean += static_cast<double>(log.counts[k]) * detector.scale.value(k)(jj);
        }
        mean /= n;
        double var = 0.0;
        for (std::size_t k = 0; k < log.counts.size(); ++k) {
            var += static_cast<double>(log.counts[k]) * std::norm(detector.scale.value(k)(jj) - mean);
        }
        var /= n;
        const Complex expected = quantum_expectation(rho, quantity[j]);
        const double dev = std::abs(mean - expected);
        const double bound = k_sigma * std::sqrt(var) / std::sqrt(n) + 1e-12;
        report.sample_mean.push_back(mean);
        report.quantum_mean.push_back(expected);
        report.expected.push_back(std::abs(expected));
        report.deviations.push_back(dev);
        report.bounds.push_back(bound);
        if (!(dev <= bound)) report.passed = false;
    }
    return report;
}

VerificationReport verify_born_c(const Detector& detector, const DensityOperator& rho, std::uint64_t n,
                                 std::uint64_t seed, double k_sigma) {
    if (n < 100) throw Error(ErrorCode::InvalidArgument, "verification needs n >= 100");
    const EventLog log = sample_events(detector, rho, n, seed);
    return verify_mean(detector, rho, log, k_sigma);
}

}  // namespace bornkit
