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

#include "bornkit/measures.hpp"
#include "bornkit/rng.hpp"

namespace bornkit::random {

/// Seeded generators for property tests, acceptance runs and benchmarks.
/// Gaussian variates come from std::normal_distribution, so streams are
/// reproducible per standard library, not across them.

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Xoshiro256StarStar& rng);
ComplexVector unit_vector(std::size_t dim, Xoshiro256StarStar& rng);
ComplexMatrix hermitian(std::size_t dim, Xoshiro256StarStar& rng);
/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix unitary(std::size_t dim, Xoshiro256StarStar& rng);
/// Full-rank density operator with the given intensity.
DensityOperator density(std::size_t dim, Xoshiro256StarStar& rng, double intensity = 1.0);
DensityOperator pure_density(std::size_t dim, Xoshiro256StarStar& rng);
/// P_k = S^{-1/2} G_k S^{-1/2} with G_k Wishart and S = sum_k G_k.
QuantumMeasure measure(std::size_t dim, std::size_t elements, Xoshiro256StarStar& rng);
/// Projective measure from a random orthonormal basis grouped into
/// `elements` nonempty blocks.
QuantumMeasure projective_measure(std::size_t dim, std::size_t elements, Xoshiro256StarStar& rng);
/// Uniform integer in [lo, hi].
std::size_t uniform_int(std::size_t lo, std::size_t hi, Xoshiro256StarStar& rng);

}  // namespace bornkit::random
