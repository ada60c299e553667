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

#include "bornkit/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "bornkit/error.hpp"

namespace bornkit {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotPSD: return "NotPSD";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::EmptyState: return "EmptyState";
        case ErrorCode::IncompleteSum: return "IncompleteSum";
        case ErrorCode::LabelCollision: return "LabelCollision";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::NegativeRate: return "NegativeRate";
        case ErrorCode::NotNormal: return "NotNormal";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NotOrthonormal: return "NotOrthonormal";
        case ErrorCode::NotProjector: return "NotProjector";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::EmptyLog: return "EmptyLog";
        case ErrorCode::DataMismatch: return "DataMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    }
    return "Unknown";
}

double max_abs_entry(const ComplexMatrix& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermitian_deviation(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorCode::NotSquare, "hermitian_deviation of non-square matrix");
    }
    return max_abs_entry(a - a.adjoint());
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "trace_product operand shapes differ");
    }
    return a.cwiseProduct(b.transpose()).sum();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

HermitianEigen eigh(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorCode::NotSquare, "eigh of non-square matrix");
    }
    const ComplexMatrix herm = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix hermitian_function(const ComplexMatrix& a, const std::function<double(double)>& f) {
    const HermitianEigen e = eigh(a);
    RealVector fv(e.values.size());
    for (Eigen::Index i = 0; i < e.values.size(); ++i) {
        fv(i) = f(e.values(i));
    }
    return e.vectors * fv.cast<Complex>().asDiagonal() * e.vectors.adjoint();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
    return hermitian_function(a, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

ComplexMatrix project_psd(const ComplexMatrix& a) {
    return hermitian_function(a, [](double x) { return std::max(x, 0.0); });
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
    if (hermitian.size() == 0) return 0.0;
    return eigh(hermitian).values.minCoeff();
}

double max_eigenvalue(const ComplexMatrix& hermitian) {
    if (hermitian.size() == 0) return 0.0;
    return eigh(hermitian).values.maxCoeff();
}

}  // namespace bornkit
