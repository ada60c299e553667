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

#include <functional>
#include <vector>

#include "bornkit/measures.hpp"

namespace bornkit {

/// Eigenvalue clusters of a normal operator with the orthogonal projectors
/// onto their eigenspaces. Clusters are ordered by descending real part,
/// then descending imaginary part.
struct SpectralDecomposition {
    std::vector<Complex> eigenvalues;
    QuantumMeasure projectors;
    double cluster_tol;
    bool hermitian;
};

/// Spectral measure of a normal matrix X. Eigenvalues closer than
/// cluster_tol * max|lambda| (single linkage) share one eigenspace.
/// Hermitian input uses the self-adjoint solver, other normal input a
/// complex Schur decomposition.
/// Errors: NotSquare, NotNormal.
SpectralDecomposition spectral_measure(const ComplexMatrix& x, double cluster_tol = 1e-8);

/// p_k = |phi_k* psi|^2 for a unit vector psi and orthonormal phi_k.
/// Errors: NotNormalized, NotOrthonormal, DimensionMismatch.
RealVector born_probabilities_pure(const StateVector& psi, const std::vector<ComplexVector>& basis);

/// f(X*, X) = sum_k f(conj(x_k), x_k) P_k.
ComplexMatrix function_calculus(const SpectralDecomposition& decomposition,
                                const std::function<Complex(Complex, Complex)>& f);

/// Scale assigning each projector its eigenvalue.
Scale eigenvalue_scale(const SpectralDecomposition& decomposition);

struct ProjectiveComparison {
    std::vector<Complex> eigenvalues;
    RealVector povm_rates;          // tr(rho P_k)
    RealVector squared_amplitudes;  // I |phi_k* psi|^2, empty unless applicable
    bool applicable = false;        // rho pure and all eigenspaces one-dimensional
    double max_deviation = 0.0;
};

/// Rates of the spectral measure of Hermitian X against the squared
/// amplitude form, where the latter applies.
/// Errors: NotHermitian, DimensionMismatch.
ProjectiveComparison projective_rates_equal_povm_rates(const ComplexMatrix& x, const DensityOperator& rho);

}  // namespace bornkit
