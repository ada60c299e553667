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

#include <cstddef>

#include "bornkit/linalg.hpp"

namespace bornkit {

/// A (not necessarily normalized) state vector psi.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {}

    const ComplexVector& amplitudes() const { return amplitudes_; }
    std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    double norm() const { return amplitudes_.norm(); }

private:
    ComplexVector amplitudes_;
};

struct DensityOptions {
    double hermitian_tol = kHermitianTol;
    double psd_tol = kPsdTol;
    // Clip eigenvalues in [-psd_tol, 0) to zero instead of keeping them.
    bool sanitize = false;
};

/// Hermitian positive semidefinite density operator. The trace is the
/// intensity of the source and is not forced to one; rho = 0 is the empty
/// state.
class DensityOperator {
public:
    static DensityOperator empty(std::size_t dim);

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
    double intensity() const { return intensity_; }
    bool is_empty() const { return intensity_ == 0.0; }

    /// rho / tr rho. Throws EmptyState for rho = 0.
    DensityOperator normalized() const;

    /// alpha * rho, alpha >= 0.
    DensityOperator scaled(double alpha) const;

private:
    DensityOperator(ComplexMatrix matrix, double intensity)
        : matrix_(std::move(matrix)), intensity_(intensity) {}

    friend DensityOperator make_density(const ComplexMatrix&, const DensityOptions&);
    friend DensityOperator pure_state(const StateVector&);
    friend DensityOperator mix(double, const DensityOperator&, double, const DensityOperator&);

    ComplexMatrix matrix_;
    double intensity_ = 0.0;
};

/// Validates a square matrix as a density operator.
/// Errors: NotSquare, NotHermitian, NotPSD.
DensityOperator make_density(const ComplexMatrix& matrix, const DensityOptions& options = {});

/// psi psi*; intensity is |psi|^2.
DensityOperator pure_state(const StateVector& psi);

/// alpha rho1 + beta rho2 for alpha, beta >= 0.
DensityOperator mix(double alpha, const DensityOperator& rho1, double beta, const DensityOperator& rho2);

/// <X> = tr(rho X), unnormalized.
Complex quantum_value(const DensityOperator& rho, const ComplexMatrix& x);

/// tr(rho X) / tr(rho). Throws EmptyState for rho = 0.
Complex quantum_expectation(const DensityOperator& rho, const ComplexMatrix& x);

/// sigma_X = sqrt(<(X - Xbar)*(X - Xbar)>) with intensity-normalized
/// expectations. Works for non-Hermitian X.
double uncertainty(const DensityOperator& rho, const ComplexMatrix& x);

struct UncertaintyReport {
    double sigma_a = 0.0;
    double sigma_b = 0.0;
    double commutator_bound = 0.0;  // |<[A,B]>| / 2
};

/// Robertson data for Hermitian A and B. Callers check
/// sigma_a * sigma_b >= commutator_bound.
UncertaintyReport uncertainty_product_report(const DensityOperator& rho, const ComplexMatrix& a,
                                             const ComplexMatrix& b);

/// Von Neumann entropy of rho / tr rho, natural log.
double von_neumann_entropy(const DensityOperator& rho);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace bornkit
