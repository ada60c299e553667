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

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace bornkit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kCompletenessTol = 1e-10;

/// Largest entrywise modulus |a_ij|.
double max_abs_entry(const ComplexMatrix& a);

/// max_ij |a_ij - conj(a_ji)|; zero for exactly Hermitian input.
double hermitian_deviation(const ComplexMatrix& a);

/// tr(a b) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEigen {
    RealVector values;     // ascending
    ComplexMatrix vectors;  // columns
};

/// Eigendecomposition of the Hermitian part (a + a*)/2.
HermitianEigen eigh(const ComplexMatrix& a);

/// sum_i f(lambda_i) v_i v_i* over the Hermitian part of `a`.
ComplexMatrix hermitian_function(const ComplexMatrix& a, const std::function<double(double)>& f);

/// Square root of a PSD matrix; eigenvalues below zero are clamped to 0.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

/// Nearest PSD matrix in Frobenius norm (eigenvalue clipping).
ComplexMatrix project_psd(const ComplexMatrix& a);

double min_eigenvalue(const ComplexMatrix& hermitian);
double max_eigenvalue(const ComplexMatrix& hermitian);

}  // namespace bornkit
