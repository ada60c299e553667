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

#include "bornkit/scattering.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "bornkit/error.hpp"

namespace bornkit {
namespace {

void require_unit(const StateVector& psi, const char* name) {
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << name << " has norm " << psi.norm();
        throw Error(ErrorCode::NotNormalized, msg.str());
    }
}

void require_dim(std::size_t expected, std::size_t got, const char* name) {
    if (expected != got) {
        std::ostringstream msg;
        msg << name << " has dimension " << got << ", expected " << expected;
        throw Error(ErrorCode::DimensionMismatch, msg.str());
    }
}

}  // namespace

SMatrix make_smatrix(ComplexMatrix matrix, std::vector<std::string> labels, double unitarity_tol) {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
        throw Error(ErrorCode::NotSquare, "S-matrix must be square and nonempty");
    }
    const double dev = unitarity_deviation(matrix);
    if (!(dev <= unitarity_tol)) {
        std::ostringstream msg;
        msg << "||S*S - I|| = " << dev;
        throw Error(ErrorCode::NotUnitary, msg.str());
    }
    if (labels.empty()) {
        for (Eigen::Index i = 0; i < matrix.rows(); ++i) labels.push_back("c" + std::to_string(i));
    }
    if (labels.size() != static_cast<std::size_t>(matrix.rows())) {
        throw Error(ErrorCode::InvalidArgument, "one channel label per row required");
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) throw Error(ErrorCode::LabelCollision, "duplicate channel label '" + l + "'");
    }
    SMatrix s;
    s.matrix_ = std::move(matrix);
    s.labels_ = std::move(labels);
    return s;
}

double unitarity_deviation(const ComplexMatrix& s) {
    if (s.rows() != s.cols()) throw Error(ErrorCode::NotSquare, "unitarity of a non-square matrix");
    return (s.adjoint() * s - ComplexMatrix::Identity(s.rows(), s.cols())).norm();
}

TransitionProbability transition_probability(const ComplexMatrix& s, const StateVector& psi_in,
                                             const StateVector& psi_out) {
    const auto d = static_cast<std::size_t>(s.rows());
    require_dim(d, static_cast<std::size_t>(s.cols()), "S-matrix column count");
    require_dim(d, psi_in.dim(), "in-state");
    require_dim(d, psi_out.dim(), "out-state");
    require_unit(psi_in, "in-state");
    require_unit(psi_out, "out-state");
    TransitionProbability out;
    out.value = std::norm(psi_out.amplitudes().dot(s * psi_in.amplitudes()));
    out.unitarity_deviation = unitarity_deviation(s);
    out.nonunitary = out.unitarity_deviation > 1e-10;
    return out;
}

RealVector transition_distribution(const SMatrix& s, const StateVector& psi_in,
                                   const std::vector<ComplexVector>& out_basis) {
    require_dim(s.dim(), psi_in.dim(), "in-state");
    require_unit(psi_in, "in-state");
    if (out_basis.size() != s.dim()) {
        throw Error(ErrorCode::NotOrthonormal, "out-basis is not complete");
    }
    for (std::size_t i = 0; i < out_basis.size(); ++i) {
        require_dim(s.dim(), static_cast<std::size_t>(out_basis[i].size()), "out-basis vector");
        for (std::size_t j = 0; j <= i; ++j) {
            const double target = i == j ? 1.0 : 0.0;
            if (std::abs(out_basis[j].dot(out_basis[i]) - target) > 1e-10) {
                throw Error(ErrorCode::NotOrthonormal, "out-basis vectors " + std::to_string(j) + " and " +
                                                           std::to_string(i) + " fail orthonormality");
            }
        }
    }
    const ComplexVector scattered = s.matrix() * psi_in.amplitudes();
    RealVector p(static_cast<Eigen::Index>(out_basis.size()));
    for (std::size_t k = 0; k < out_basis.size(); ++k) {
        p(static_cast<Eigen::Index>(k)) = std::norm(out_basis[k].dot(scattered));
    }
    return p;
}

double degenerate_channel_probability(const SMatrix& s, const StateVector& psi_in, const ComplexMatrix& projector) {
    require_dim(s.dim(), psi_in.dim(), "in-state");
    if (projector.rows() != projector.cols()) throw Error(ErrorCode::NotProjector, "projector is not square");
    require_dim(s.dim(), static_cast<std::size_t>(projector.rows()), "projector");
    require_unit(psi_in, "in-state");
    if (hermitian_deviation(projector) > 1e-10 || max_abs_entry(projector * projector - projector) > 1e-10) {
        throw Error(ErrorCode::NotProjector, "channel operator is not a Hermitian idempotent");
    }
    return (projector * (s.matrix() * psi_in.amplitudes())).squaredNorm();
}

std::vector<ComplexVector> projector_range_basis(const ComplexMatrix& projector) {
    const HermitianEigen e = eigh(projector);
    std::vector<ComplexVector> basis;
    for (Eigen::Index i = 0; i < e.values.size(); ++i) {
        if (e.values(i) > 0.5) basis.push_back(e.vectors.col(i));
    }
    return basis;
}

}  // namespace bornkit
