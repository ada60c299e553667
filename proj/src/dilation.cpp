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

#include "bornkit/dilation.hpp"

#include <cmath>

#include "bornkit/error.hpp"

namespace bornkit {

Dilation naimark_dilate(const QuantumMeasure& measure, DilationKind kind, double rank_tol) {
    const auto d = static_cast<Eigen::Index>(measure.dim());
    std::vector<ComplexMatrix> blocks;  // rows of V belonging to element k
    for (const auto& p : measure.elements()) {
        if (kind == DilationKind::Block) {
            blocks.push_back(psd_sqrt(p));
            continue;
        }
        const HermitianEigen e = eigh(p);
        std::vector<Eigen::Index> kept;
        for (Eigen::Index i = 0; i < e.values.size(); ++i) {
            if (e.values(i) > rank_tol) kept.push_back(i);
        }
        ComplexMatrix rows(static_cast<Eigen::Index>(kept.size()), d);
        for (std::size_t r = 0; r < kept.size(); ++r) {
            const Eigen::Index i = kept[r];
            rows.row(static_cast<Eigen::Index>(r)) = std::sqrt(e.values(i)) * e.vectors.col(i).adjoint();
        }
        blocks.push_back(std::move(rows));
    }

    Eigen::Index total = 0;
    for (const auto& b : blocks) total += b.rows();
    ComplexMatrix v(total, d);
    std::vector<ComplexMatrix> pis;
    Eigen::Index offset = 0;
    for (const auto& b : blocks) {
        v.middleRows(offset, b.rows()) = b;
        ComplexMatrix pi = ComplexMatrix::Zero(total, total);
        pi.block(offset, offset, b.rows(), b.rows()).setIdentity();
        pis.push_back(std::move(pi));
        offset += b.rows();
    }
    return Dilation{std::move(v), make_measure(std::move(pis), measure.labels()), measure.dim(), measure.size()};
}

RealVector dilated_rates(const Dilation& dilation, const DensityOperator& rho) {
    if (rho.dim() != dilation.source_dim) {
        throw Error(ErrorCode::DimensionMismatch, "state and dilation source dimensions differ");
    }
    const ComplexMatrix lifted = dilation.isometry * rho.matrix() * dilation.isometry.adjoint();
    RealVector p(static_cast<Eigen::Index>(dilation.element_count));
    for (std::size_t k = 0; k < dilation.element_count; ++k) {
        p(static_cast<Eigen::Index>(k)) = trace_product(lifted, dilation.projective_measure.element(k)).real();
    }
    return p;
}

double isometry_deviation(const Dilation& dilation) {
    const auto d = static_cast<Eigen::Index>(dilation.source_dim);
    return (dilation.isometry.adjoint() * dilation.isometry - ComplexMatrix::Identity(d, d)).norm();
}

double reconstruction_deviation(const Dilation& dilation, const QuantumMeasure& measure) {
    if (measure.size() != dilation.element_count) {
        throw Error(ErrorCode::DimensionMismatch, "measure and dilation element counts differ");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < measure.size(); ++k) {
        const ComplexMatrix& pi = dilation.projective_measure.element(k);
        const ComplexMatrix back = dilation.isometry.adjoint() * pi * dilation.isometry;
        worst = std::max(worst, max_abs_entry(back - measure.element(k)));
    }
    return worst;
}

}  // namespace bornkit
