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

#include "bornkit/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bornkit/error.hpp"

namespace bornkit {
namespace {

void require_same_dim(const DensityOperator& rho, const ComplexMatrix& x) {
    if (x.rows() != x.cols() || static_cast<std::size_t>(x.rows()) != rho.dim()) {
        std::ostringstream msg;
        msg << "operator is " << x.rows() << "x" << x.cols() << ", state has dim " << rho.dim();
        throw Error(ErrorCode::DimensionMismatch, msg.str());
    }
}

void require_nonempty(const DensityOperator& rho) {
    if (rho.intensity() <= 0.0) {
        throw Error(ErrorCode::EmptyState, "state has zero intensity");
    }
}

}  // namespace

DensityOperator DensityOperator::empty(std::size_t dim) {
    if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
    const auto n = static_cast<Eigen::Index>(dim);
    return DensityOperator(ComplexMatrix::Zero(n, n), 0.0);
}

DensityOperator DensityOperator::normalized() const {
    require_nonempty(*this);
    return DensityOperator(matrix_ / intensity_, 1.0);
}

DensityOperator DensityOperator::scaled(double alpha) const {
    if (!(alpha >= 0.0)) throw Error(ErrorCode::InvalidArgument, "scale factor must be nonnegative");
    return DensityOperator(alpha * matrix_, alpha * intensity_);
}

DensityOperator make_density(const ComplexMatrix& matrix, const DensityOptions& options) {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
        throw Error(ErrorCode::NotSquare, "density matrix must be square and nonempty");
    }
    const double herm = hermitian_deviation(matrix);
    if (!(herm <= options.hermitian_tol)) {
        std::ostringstream msg;
        msg << "Hermitian deviation " << herm << " exceeds " << options.hermitian_tol;
        throw Error(ErrorCode::NotHermitian, msg.str());
    }
    const HermitianEigen e = eigh(matrix);
    const double lo = e.values.minCoeff();
    if (lo < -options.psd_tol) {
        std::ostringstream msg;
        msg << "smallest eigenvalue " << lo << " below " << -options.psd_tol;
        throw Error(ErrorCode::NotPSD, msg.str());
    }
    if (options.sanitize && lo < 0.0) {
        const RealVector clipped = e.values.cwiseMax(0.0);
        ComplexMatrix repaired = e.vectors * clipped.cast<Complex>().asDiagonal() * e.vectors.adjoint();
        const double tr = repaired.trace().real();
        return DensityOperator(std::move(repaired), tr);
    }
    return DensityOperator(matrix, matrix.trace().real());
}

DensityOperator pure_state(const StateVector& psi) {
    if (psi.dim() == 0) throw Error(ErrorCode::InvalidArgument, "state vector is empty");
    const ComplexVector& a = psi.amplitudes();
    return DensityOperator(a * a.adjoint(), a.squaredNorm());
}

DensityOperator mix(double alpha, const DensityOperator& rho1, double beta, const DensityOperator& rho2) {
    if (!(alpha >= 0.0) || !(beta >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "mixture weights must be nonnegative");
    }
    if (rho1.dim() != rho2.dim()) throw Error(ErrorCode::DimensionMismatch, "mixture of states of different dim");
    return DensityOperator(alpha * rho1.matrix() + beta * rho2.matrix(),
                           alpha * rho1.intensity() + beta * rho2.intensity());
}

Complex quantum_value(const DensityOperator& rho, const ComplexMatrix& x) {
    require_same_dim(rho, x);
    return trace_product(rho.matrix(), x);
}

Complex quantum_expectation(const DensityOperator& rho, const ComplexMatrix& x) {
    require_same_dim(rho, x);
    require_nonempty(rho);
    return trace_product(rho.matrix(), x) / rho.intensity();
}

double uncertainty(const DensityOperator& rho, const ComplexMatrix& x) {
    const Complex mean = quantum_expectation(rho, x);
    const auto n = x.rows();
    const ComplexMatrix shifted = x - mean * ComplexMatrix::Identity(n, n);
    // Sum of lambda_i |(X - <X>) v_i|^2 over the eigenpairs of rho; eigenvalues at
    // rounding level are dropped so eigenstates come out with zero spread.
    const HermitianEigen e = eigh(rho.matrix());
    const double cutoff = 1e-13 * e.values.cwiseAbs().maxCoeff();
    double variance = 0.0;
    for (Eigen::Index i = 0; i < e.values.size(); ++i) {
        if (e.values(i) > cutoff) variance += e.values(i) * (shifted * e.vectors.col(i)).squaredNorm();
    }
    variance /= rho.intensity();
    return std::sqrt(std::max(variance, 0.0));
}

UncertaintyReport uncertainty_product_report(const DensityOperator& rho, const ComplexMatrix& a,
                                             const ComplexMatrix& b) {
    require_same_dim(rho, a);
    require_same_dim(rho, b);
    if (hermitian_deviation(a) > kHermitianTol || hermitian_deviation(b) > kHermitianTol) {
        throw Error(ErrorCode::NotHermitian, "uncertainty relation needs Hermitian A and B");
    }
    require_nonempty(rho);
    UncertaintyReport report;
    report.sigma_a = uncertainty(rho, a);
    report.sigma_b = uncertainty(rho, b);
    report.commutator_bound = 0.5 * std::abs(quantum_expectation(rho, commutator(a, b)));
    return report;
}

double von_neumann_entropy(const DensityOperator& rho) {
    const DensityOperator unit = rho.normalized();
    const RealVector w = eigh(unit.matrix()).values;
    double s = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w(i) > 0.0) s -= w(i) * std::log(w(i));
    }
    return s;
}

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }
ComplexMatrix x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}
ComplexMatrix y() {
    ComplexMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}
ComplexMatrix z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}
}  // namespace pauli

}  // namespace bornkit
