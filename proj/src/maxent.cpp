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

#include "bornkit/maxent.hpp"

#include <cmath>
#include <sstream>

#include "bornkit/error.hpp"

namespace bornkit {
namespace {

void validate(const MaxEntProblem& problem) {
    if (problem.dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
    if (problem.operators.size() != problem.targets.size()) {
        throw Error(ErrorCode::DimensionMismatch, "one target per constraint operator required");
    }
    const auto d = static_cast<Eigen::Index>(problem.dim);
    for (std::size_t j = 0; j < problem.operators.size(); ++j) {
        const ComplexMatrix& x = problem.operators[j];
        if (x.rows() != d || x.cols() != d) {
            throw Error(ErrorCode::DimensionMismatch, "constraint " + std::to_string(j) + " has wrong shape");
        }
        if (hermitian_deviation(x) > kHermitianTol) {
            throw Error(ErrorCode::NotHermitian, "constraint " + std::to_string(j) + " is not Hermitian");
        }
        const RealVector w = eigh(x).values;
        const double slack = 1e-12 * std::max(1.0, w.cwiseAbs().maxCoeff());
        if (problem.targets[j] < w.minCoeff() - slack || problem.targets[j] > w.maxCoeff() + slack) {
            std::ostringstream msg;
            msg << "target " << problem.targets[j] << " of constraint " << j << " lies outside [" << w.minCoeff()
                << ", " << w.maxCoeff() << "]";
            throw Error(ErrorCode::Infeasible, msg.str());
        }
    }
}

}  // namespace

DualEvaluation evaluate_maxent_dual(const MaxEntProblem& problem, const RealVector& multipliers) {
    const auto d = static_cast<Eigen::Index>(problem.dim);
    const auto m = static_cast<Eigen::Index>(problem.operators.size());
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    for (Eigen::Index j = 0; j < m; ++j) h += multipliers(j) * problem.operators[static_cast<std::size_t>(j)];

    const HermitianEigen e = eigh(h);
    const double shift = e.values.minCoeff();
    RealVector w(d);
    for (Eigen::Index a = 0; a < d; ++a) w(a) = std::exp(-(e.values(a) - shift));
    const double z = w.sum();

    DualEvaluation out;
    out.value = std::log(z) - shift;
    out.state = e.vectors * (w / z).cast<Complex>().asDiagonal() * e.vectors.adjoint();

    // Operators in the eigenbasis of H.
    std::vector<ComplexMatrix> local;
    local.reserve(static_cast<std::size_t>(m));
    for (const auto& x : problem.operators) local.push_back(e.vectors.adjoint() * x * e.vectors);

    RealVector mean(m);
    out.gradient.resize(m);
    for (Eigen::Index j = 0; j < m; ++j) {
        const ComplexMatrix& xj = local[static_cast<std::size_t>(j)];
        double s = 0.0;
        for (Eigen::Index a = 0; a < d; ++a) s += w(a) * xj(a, a).real();
        mean(j) = s / z;
        out.value += multipliers(j) * problem.targets[static_cast<std::size_t>(j)];
        out.gradient(j) = problem.targets[static_cast<std::size_t>(j)] - mean(j);
    }

    // Divided differences of exp(-x): kernel(a, b) = (w_a - w_b) / (e_b - e_a).
    RealMatrix kernel(d, d);
    for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) {
            const double delta = e.values(b) - e.values(a);
            kernel(a, b) = std::abs(delta) < 1e-12 ? w(a) : w(a) * (-std::expm1(-delta)) / delta;
        }
    }
    out.hessian.resize(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            const ComplexMatrix& xi = local[static_cast<std::size_t>(i)];
            const ComplexMatrix& xj = local[static_cast<std::size_t>(j)];
            double s = 0.0;
            for (Eigen::Index a = 0; a < d; ++a) {
                for (Eigen::Index b = 0; b < d; ++b) s += kernel(a, b) * (xi(a, b) * xj(b, a)).real();
            }
            out.hessian(i, j) = out.hessian(j, i) = s / z - mean(i) * mean(j);
        }
    }
    return out;
}

MaxEntResult maxent_state(const MaxEntProblem& problem) {
    validate(problem);
    const auto d = static_cast<Eigen::Index>(problem.dim);
    const auto m = static_cast<Eigen::Index>(problem.operators.size());
    if (m == 0) {
        const DensityOperator uniform = make_density(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
        return MaxEntResult{uniform, RealVector(0), 0, 0.0, std::log(static_cast<double>(d))};
    }

    RealVector lambda = RealVector::Zero(m);
    DualEvaluation current = evaluate_maxent_dual(problem, lambda);
    const double target_tol = 1e-2 * problem.tolerance;
    std::size_t iterations = 0;
    while (current.gradient.cwiseAbs().maxCoeff() > target_tol) {
        if (iterations == problem.max_iterations) break;
        ++iterations;
        const RealVector grad = current.gradient;
        const double ridge = 1e-14 * std::max(1.0, current.hessian.diagonal().cwiseAbs().maxCoeff());
        RealMatrix hess = current.hessian;
        hess.diagonal().array() += ridge;
        RealVector step = -hess.ldlt().solve(grad);
        double slope = grad.dot(step);
        if (!step.allFinite() || slope >= 0.0) {
            step = -grad;
            slope = -grad.squaredNorm();
        }
        double t = 1.0;
        bool accepted = false;
        DualEvaluation trial;
        for (int halving = 0; halving <= 40; ++halving) {
            trial = evaluate_maxent_dual(problem, lambda + t * step);
            if (trial.value <= current.value + 1e-4 * t * slope) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) break;
        lambda += t * step;
        current = std::move(trial);
    }

    const double error = current.gradient.cwiseAbs().maxCoeff();
    if (!(error <= problem.tolerance)) {
        std::ostringstream msg;
        msg << "constraint error " << error << " after " << iterations << " Newton steps";
        throw Error(ErrorCode::NoConvergence, msg.str());
    }
    const DensityOperator state = make_density(0.5 * (current.state + current.state.adjoint()));
    return MaxEntResult{state, lambda, iterations, error, von_neumann_entropy(state)};
}

}  // namespace bornkit
