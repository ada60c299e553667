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

#include <string>
#include <vector>

#include "bornkit/operators.hpp"

namespace bornkit {

/// Unitary S-matrix on labeled asymptotic channels.
class SMatrix {
public:
    std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<std::string>& channel_labels() const { return labels_; }

private:
    SMatrix() = default;
    friend SMatrix make_smatrix(ComplexMatrix, std::vector<std::string>, double);

    ComplexMatrix matrix_;
    std::vector<std::string> labels_;
};

/// Errors: NotSquare, NotUnitary, LabelCollision, InvalidArgument.
/// Empty labels become "c0", "c1", ...
SMatrix make_smatrix(ComplexMatrix matrix, std::vector<std::string> labels = {}, double unitarity_tol = 1e-10);

/// ||S*S - I||_F.
double unitarity_deviation(const ComplexMatrix& s);

struct TransitionProbability {
    double value = 0.0;
    double unitarity_deviation = 0.0;
    bool nonunitary = false;  // deviation above 1e-10
};

/// |psi_out* S psi_in|^2. Accepts a nonunitary S and flags it.
/// Errors: NotNormalized, DimensionMismatch.
TransitionProbability transition_probability(const ComplexMatrix& s, const StateVector& psi_in,
                                             const StateVector& psi_out);

/// Probabilities over a complete orthonormal out-basis.
/// Errors: NotNormalized, NotOrthonormal, DimensionMismatch.
RealVector transition_distribution(const SMatrix& s, const StateVector& psi_in, const std::vector<ComplexVector>& out_basis);

/// ||Pi S psi_in||^2 for an orthogonal projector Pi onto a degenerate
/// channel subspace. Errors: NotProjector, NotNormalized, DimensionMismatch.
double degenerate_channel_probability(const SMatrix& s, const StateVector& psi_in, const ComplexMatrix& projector);

/// Orthonormal basis of the range of an orthogonal projector.
std::vector<ComplexVector> projector_range_basis(const ComplexMatrix& projector);

}  // namespace bornkit
