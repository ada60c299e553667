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

#include <vector>

#include "bornkit/measures.hpp"

namespace bornkit {

enum class DilationKind {
    Block,        // D = K d, V stacks sqrt(P_k)
    RankTrimmed,  // D = sum_k rank P_k
};

/// Naimark dilation: an isometry V : C^d -> C^D and a projective measure
/// {Pi_k} on C^D with V* Pi_k V = P_k.
struct Dilation {
    ComplexMatrix isometry;
    QuantumMeasure projective_measure;
    std::size_t source_dim;
    std::size_t element_count;
};

Dilation naimark_dilate(const QuantumMeasure& measure, DilationKind kind = DilationKind::Block,
                        double rank_tol = 1e-10);

/// tr(V rho V* Pi_k). Errors: DimensionMismatch.
RealVector dilated_rates(const Dilation& dilation, const DensityOperator& rho);

/// ||V*V - I||_F.
double isometry_deviation(const Dilation& dilation);

/// max_k max_ij |(V* Pi_k V - P_k)_ij|.
double reconstruction_deviation(const Dilation& dilation, const QuantumMeasure& measure);

}  // namespace bornkit
