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

#include "bornkit/operators.hpp"

namespace bornkit {

/// Find the maximum-entropy state with tr(rho X_j) = v_j.
struct MaxEntProblem {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> operators;  // Hermitian X_j
    std::vector<double> targets;           // v_j
    double tolerance = 1e-8;
    std::size_t max_iterations = 200;
};

struct MaxEntResult {
    DensityOperator state;  // intensity 1
    RealVector multipliers;  // lambda_j in exp(-sum_j lambda_j X_j) / Z
    std::size_t iterations = 0;
    double max_constraint_error = 0.0;
    double entropy = 0.0;
};

/// Gibbs state exp(-sum_j lambda_j X_j) / Z from damped Newton on the convex
/// dual log Z(lambda) + lambda . v with Armijo backtracking.
/// Errors: NotHermitian, DimensionMismatch, Infeasible, NoConvergence.
MaxEntResult maxent_state(const MaxEntProblem& problem);

struct DualEvaluation {
    double value = 0.0;    // log Z + lambda . v
    RealVector gradient;   // v - <X>
    RealMatrix hessian;    // Kubo-Mori covariance of the X_j
    ComplexMatrix state;   // exp(-H) / Z
};

/// Dual objective and its exact derivatives at `multipliers`.
DualEvaluation evaluate_maxent_dual(const MaxEntProblem& problem, const RealVector& multipliers);

}  // namespace bornkit
