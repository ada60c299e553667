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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "bornkit/measures.hpp"
#include "bornkit/random.hpp"
#include "bornkit/sampling.hpp"

namespace {

const std::vector<double> kTrine = {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0};

void BM_SampleSerial(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bornkit::sample_categorical_serial(kTrine, n, 42));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleOpenMP(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bornkit::sample_categorical(kTrine, n, 42));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
    state.counters["threads"] = omp_get_max_threads();
}

std::vector<bornkit::DensityOperator> make_states(std::size_t dim, std::size_t count) {
    bornkit::Xoshiro256StarStar rng(7);
    std::vector<bornkit::DensityOperator> states;
    for (std::size_t i = 0; i < count; ++i) states.push_back(bornkit::random::density(dim, rng));
    return states;
}

void BM_RatesSerial(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    bornkit::Xoshiro256StarStar rng(3);
    const auto measure = bornkit::random::measure(dim, 6, rng);
    const auto states = make_states(dim, 512);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bornkit::response_rates_batch_serial(measure, states));
    }
}

void BM_RatesOpenMP(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    bornkit::Xoshiro256StarStar rng(3);
    const auto measure = bornkit::random::measure(dim, 6, rng);
    const auto states = make_states(dim, 512);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bornkit::response_rates_batch(measure, states));
    }
}

}  // namespace

BENCHMARK(BM_SampleSerial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_SampleOpenMP)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_RatesSerial)->Arg(4)->Arg(16);
BENCHMARK(BM_RatesOpenMP)->Arg(4)->Arg(16);

BENCHMARK_MAIN();
