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
#include <string>
#include <vector>

#include "bornkit/measures.hpp"

namespace bornkit {

/// Coordinates of a Hermitian matrix in the orthonormal basis
/// {E_ii} u {(E_jk + E_kj)/sqrt2} u {i(E_kj - E_jk)/sqrt2}, j < k, under the
/// trace inner product. Length d^2.
RealVector hermitian_coordinates(const ComplexMatrix& a);
ComplexMatrix from_hermitian_coordinates(const RealVector& c, std::size_t dim);

/// Known calibration states and observed mean rates, one row per state and
/// one column per detection element.
struct CalibrationSet {
    std::vector<DensityOperator> states;
    RealMatrix rates;
};

/// Validates dimensions, nonnegativity and that each row sums to the
/// intensity of its state within data_tol (relative).
/// Errors: InvalidArgument, DimensionMismatch, DataMismatch.
CalibrationSet make_calibration(std::vector<DensityOperator> states, RealMatrix rates, double data_tol = 1e-8);

struct CompletenessReport {
    std::size_t rank = 0;
    std::size_t required = 0;  // d^2
    bool complete = false;
};

/// Rank of the states as vectors in the real d^2-dimensional space of
/// Hermitian matrices.
CompletenessReport informational_completeness(const std::vector<DensityOperator>& states);

/// d^2 pure states |i>, (|j>+|k>)/sqrt2, (|j>+i|k>)/sqrt2 spanning the
/// Hermitian matrices.
std::vector<DensityOperator> standard_calibration_states(std::size_t dim);

/// Rates tr(rho_j P_k) for each calibration state. With n > 0 the rates are
/// estimated from n sampled events per state instead (seeded, row j uses
/// seed ^ j), scaled by the state intensity.
CalibrationSet simulate_calibration(const std::vector<DensityOperator>& states, const QuantumMeasure& measure,
                                    std::uint64_t n = 0, std::uint64_t seed = 0);

struct TomographyOptions {
    std::size_t max_iterations = 500;
    double exit_tol = 1e-10;
    std::vector<std::string> labels;
};

struct TomographyResult {
    QuantumMeasure measure;
    std::vector<ComplexMatrix> least_squares;  // unconstrained estimates
    double residual = 0.0;                     // ||tr(rho_j P_k) - p_jk||_F of the returned measure
    double projection_distance = 0.0;          // sqrt(sum_k ||P_k - P_k^ls||_F^2)
    std::size_t iterations = 0;
};

/// Least squares per element over Hermitian matrices, then Dykstra
/// alternating projection onto {P_k PSD} n {sum_k P_k = 1}.
/// Errors: RankDeficient, NoConvergence.
TomographyResult reconstruct_measure(const CalibrationSet& calibration, const TomographyOptions& options = {});

}  // namespace bornkit
