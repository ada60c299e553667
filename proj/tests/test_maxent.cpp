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

#include "bornkit/error.hpp"
#include "bornkit/random.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace bornkit;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

MaxEntProblem sigma_z_problem(double v) {
    MaxEntProblem p;
    p.dim = 2;
    p.operators = {pauli::z()};
    p.targets = {v};
    return p;
}

// Orthonormal (Hilbert-Schmidt) Hermitian basis of d x d matrices.
std::vector<ComplexMatrix> hermitian_basis(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    std::vector<ComplexMatrix> out;
    const double s = 1.0 / std::sqrt(2.0);
    for (Eigen::Index i = 0; i < d; ++i) {
        ComplexMatrix e = ComplexMatrix::Zero(d, d);
        e(i, i) = 1.0;
        out.push_back(e);
    }
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = j + 1; k < d; ++k) {
            ComplexMatrix re = ComplexMatrix::Zero(d, d);
            re(j, k) = re(k, j) = s;
            out.push_back(re);
            ComplexMatrix im = ComplexMatrix::Zero(d, d);
            im(j, k) = Complex(0, -s);
            im(k, j) = Complex(0, s);
            out.push_back(im);
        }
    }
    return out;
}

}  // namespace

TEST(maxent_state, no_constraints_gives_uniform_state) {
    for (std::size_t d = 1; d <= 5; ++d) {
        MaxEntProblem p;
        p.dim = d;
        const auto r = maxent_state(p);
        const auto n = static_cast<Eigen::Index>(d);
        EXPECT_LE(max_abs_entry(r.state.matrix() - ComplexMatrix::Identity(n, n) / static_cast<double>(d)), 1e-12);
        EXPECT_NEAR(r.entropy, std::log(static_cast<double>(d)), 1e-12);
    }
}

TEST(maxent_state, sigma_z_half) {
    const auto r = maxent_state(sigma_z_problem(0.5));
    EXPECT_LE(max_abs_entry(r.state.matrix() - oracle::diag({0.75, 0.25})), 1e-8);
    EXPECT_LE(max_abs_entry(r.state.matrix() - oracle::maxent_sigma_z(0.5)), 1e-8);
    EXPECT_NEAR(r.multipliers(0), -std::atanh(0.5), 1e-8);
    EXPECT_LE(r.max_constraint_error, 1e-8);
    EXPECT_NEAR(r.state.intensity(), 1.0, 1e-14);
}

TEST(maxent_state, closed_form_sweep) {
    for (double v : {-0.99, -0.7, -0.2, 0.0, 0.3, 0.8, 0.999}) {
        const auto r = maxent_state(sigma_z_problem(v));
        EXPECT_LE(max_abs_entry(r.state.matrix() - oracle::maxent_sigma_z(v)), 1e-8) << v;
    }
}

TEST(maxent_state, errors) {
    EXPECT_EQ(code_of([] { maxent_state(sigma_z_problem(2.0)); }), ErrorCode::Infeasible);
    EXPECT_EQ(code_of([] { maxent_state(sigma_z_problem(-1.5)); }), ErrorCode::Infeasible);
    MaxEntProblem p = sigma_z_problem(0.1);
    p.targets.push_back(0.0);
    EXPECT_EQ(code_of([&] { maxent_state(p); }), ErrorCode::DimensionMismatch);
    p = sigma_z_problem(0.1);
    ComplexMatrix raise(2, 2);
    raise << 0.0, 1.0, 0.0, 0.0;
    p.operators = {raise};
    EXPECT_EQ(code_of([&] { maxent_state(p); }), ErrorCode::NotHermitian);
    p = sigma_z_problem(0.1);
    p.dim = 3;
    EXPECT_EQ(code_of([&] { maxent_state(p); }), ErrorCode::DimensionMismatch);
}

TEST(maxent_state, pauli_constraints_recover_state) {
    Xoshiro256StarStar rng(701);
    for (int trial = 0; trial < 20; ++trial) {
        const auto rho0 = random::density(2, rng);
        MaxEntProblem p;
        p.dim = 2;
        p.operators = {pauli::x(), pauli::y(), pauli::z()};
        for (const auto& x : p.operators) p.targets.push_back(quantum_value(rho0, x).real());
        const auto r = maxent_state(p);
        EXPECT_LE(max_abs_entry(r.state.matrix() - rho0.matrix()), 1e-7);
    }
}

TEST(maxent_state, complete_constraints_in_higher_dimension) {
    Xoshiro256StarStar rng(702);
    const auto rho0 = random::density(3, rng);
    MaxEntProblem p;
    p.dim = 3;
    for (const auto& b : hermitian_basis(3)) {
        p.operators.push_back(b);
        p.targets.push_back(quantum_value(rho0, b).real());
    }
    p.operators.pop_back();
    p.targets.pop_back();
    const auto r = maxent_state(p);
    EXPECT_LE(r.max_constraint_error, 1e-8);
}

TEST(evaluate_maxent_dual, gradient_and_hessian_match_finite_differences) {
    Xoshiro256StarStar rng(703);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = random::uniform_int(2, 4, rng);
        MaxEntProblem p;
        p.dim = d;
        const std::size_t m = random::uniform_int(1, 3, rng);
        for (std::size_t j = 0; j < m; ++j) {
            p.operators.push_back(random::hermitian(d, rng));
            p.targets.push_back(0.1 * (rng.uniform() - 0.5));
        }
        RealVector lambda(static_cast<Eigen::Index>(m));
        for (Eigen::Index j = 0; j < lambda.size(); ++j) lambda(j) = rng.uniform() - 0.5;
        const auto e = evaluate_maxent_dual(p, lambda);
        const double h = 1e-5;
        for (Eigen::Index j = 0; j < lambda.size(); ++j) {
            RealVector up = lambda, down = lambda;
            up(j) += h;
            down(j) -= h;
            const auto eu = evaluate_maxent_dual(p, up);
            const auto ed = evaluate_maxent_dual(p, down);
            EXPECT_NEAR((eu.value - ed.value) / (2 * h), e.gradient(j), 1e-7);
            for (Eigen::Index i = 0; i < lambda.size(); ++i)
                EXPECT_NEAR((eu.gradient(i) - ed.gradient(i)) / (2 * h), e.hessian(i, j), 1e-6);
        }
        EXPECT_NEAR(e.state.trace().real(), 1.0, 1e-13);
    }
}

TEST(maxent_property, solution_has_maximal_entropy_among_feasible_states) {
    Xoshiro256StarStar rng(704);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t d = 3;
        const auto seed_state = random::density(d, rng);
        MaxEntProblem p;
        p.dim = d;
        for (int j = 0; j < 2; ++j) {
            p.operators.push_back(random::hermitian(d, rng));
            p.targets.push_back(quantum_value(seed_state, p.operators.back()).real());
        }
        const auto r = maxent_state(p);
        for (std::size_t j = 0; j < p.operators.size(); ++j)
            EXPECT_NEAR(quantum_value(r.state, p.operators[j]).real(), p.targets[j], 1e-8);

        // Span of identity and constraints, orthonormalized for projection.
        std::vector<ComplexMatrix> span = {ComplexMatrix::Identity(3, 3)};
        for (const auto& x : p.operators) span.push_back(x);
        std::vector<ComplexMatrix> ortho;
        for (ComplexMatrix b : span) {
            for (const auto& o : ortho) b -= trace_product(o, b).real() * o;
            ortho.push_back(b / b.norm());
        }
        for (int k = 0; k < 50; ++k) {
            ComplexMatrix delta = random::hermitian(d, rng);
            for (const auto& o : ortho) delta -= trace_product(o, delta).real() * o;
            // Largest step keeping the state PSD, then a random fraction of it.
            const double lo = min_eigenvalue(r.state.matrix());
            const double spread = std::max(std::abs(min_eigenvalue(delta)), std::abs(max_eigenvalue(delta)));
            const double t = rng.uniform() * 0.99 * lo / spread;
            const auto other = make_density(r.state.matrix() + t * delta);
            for (std::size_t j = 0; j < p.operators.size(); ++j)
                EXPECT_NEAR(quantum_value(other, p.operators[j]).real(), p.targets[j], 1e-6);
            EXPECT_GE(r.entropy, von_neumann_entropy(other) - 1e-12);
        }
    }
}
