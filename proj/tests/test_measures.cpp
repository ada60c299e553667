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

#include "bornkit/measures.hpp"

#include <cmath>
#include <omp.h>

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

DensityOperator basis_state(std::size_t dim, std::size_t k) {
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return pure_state(StateVector(v));
}

// Trine elements written out by hand.
std::vector<ComplexMatrix> trine_by_hand() {
    std::vector<ComplexMatrix> out;
    for (int k = 0; k < 3; ++k) {
        const double t = 2.0 * M_PI * k / 3.0;
        out.push_back(2.0 / 3.0 * oracle::outer({std::cos(t / 2.0), std::sin(t / 2.0)}));
    }
    return out;
}

}  // namespace

TEST(make_measure, computational_basis_is_valid) {
    const auto m = make_measure({oracle::diag({1.0, 0.0}), oracle::diag({0.0, 1.0})});
    EXPECT_EQ(m.size(), 2u);
    EXPECT_EQ(m.dim(), 2u);
    EXPECT_EQ(m.labels(), (std::vector<std::string>{"0", "1"}));
    EXPECT_TRUE(is_projective(m));
}

TEST(make_measure, trine_is_valid_and_matches_builtin) {
    const auto hand = trine_by_hand();
    ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
    for (const auto& p : hand) sum += p;
    EXPECT_LT((sum - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
    const auto m = make_measure(hand);
    EXPECT_FALSE(is_projective(m));
    const auto builtin = measures::trine();
    for (std::size_t k = 0; k < 3; ++k) EXPECT_LT((builtin.element(k) - hand[k]).norm(), 1e-15);
}

TEST(make_measure, incomplete_sum) {
    EXPECT_EQ(code_of([] { make_measure({oracle::diag({1.0, 0.0}), oracle::diag({0.0, 0.9})}); }),
              ErrorCode::IncompleteSum);
}

TEST(make_measure, rejects_bad_elements) {
    EXPECT_EQ(code_of([] { make_measure({}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { make_measure({oracle::diag({1.2, 1.0}), oracle::diag({-0.2, 0.0})}); }),
              ErrorCode::NotPSD);
    ComplexMatrix nh(2, 2);
    nh << 0.5, 0.3, 0.0, 0.5;
    ComplexMatrix rest = ComplexMatrix::Identity(2, 2) - nh;
    EXPECT_EQ(code_of([&] { make_measure({nh, rest}); }), ErrorCode::NotHermitian);
    EXPECT_EQ(code_of([] { make_measure({ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(2, 2)}); }),
              ErrorCode::ZeroElement);
    EXPECT_EQ(code_of([] { make_measure({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)}); }),
              ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([] {
                  make_measure({oracle::diag({1.0, 0.0}), oracle::diag({0.0, 1.0})}, {"a", "a"});
              }),
              ErrorCode::LabelCollision);
    EXPECT_EQ(code_of([] { make_measure({oracle::diag({1.0, 0.0}), oracle::diag({0.0, 1.0})}, {"a"}); }),
              ErrorCode::InvalidArgument);
}

TEST(response_rates, examples) {
    const auto z = measures::computational_basis(2);
    const auto mixed = make_density(ComplexMatrix::Identity(2, 2) / 2.0);
    const RealVector p = response_rates(z, mixed);
    EXPECT_NEAR(p(0), 0.5, 1e-15);
    EXPECT_NEAR(p(1), 0.5, 1e-15);

    const auto expected = oracle::trine_rates_on_zero();
    const RealVector t = response_rates(measures::trine(), basis_state(2, 0));
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(t(k), expected[static_cast<std::size_t>(k)], 1e-15);
    EXPECT_NEAR(t(0), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(t(1), 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(t(2), 1.0 / 6.0, 1e-15);

    const RealVector zero = response_rates(measures::trine(), DensityOperator::empty(2));
    EXPECT_EQ(zero, RealVector::Zero(3));
}

TEST(response_rates, dimension_mismatch) {
    EXPECT_EQ(code_of([] { response_rates(measures::trine(), basis_state(3, 0)); }), ErrorCode::DimensionMismatch);
}

TEST(is_projective, examples) {
    EXPECT_TRUE(is_projective(measures::computational_basis(4)));
    EXPECT_FALSE(is_projective(measures::trine()));
    const auto& t = measures::trine();
    EXPECT_GT((t.element(0) * t.element(1)).norm(), 0.1);
    EXPECT_TRUE(is_projective(make_measure({ComplexMatrix::Identity(3, 3)})));
}

TEST(measured_quantity, examples) {
    const auto z = measures::computational_basis(2);
    const auto q = measured_quantity(Detector(z, Scale::real({1.0, -1.0})));
    ASSERT_EQ(q.size(), 1u);
    EXPECT_LT((q[0] - pauli::z()).norm(), 1e-15);

    const double hbar = 1.054571817e-34;
    const auto sg = measured_quantity(Detector(z, Scale::real({hbar / 2.0, -hbar / 2.0}, "J s")));
    EXPECT_LT((sg[0] - hbar / 2.0 * pauli::z()).norm(), 1e-50);
    const RealVector ev = eigh(sg[0]).values;
    EXPECT_NEAR(ev(0), -hbar / 2.0, 1e-48);
    EXPECT_NEAR(ev(1), hbar / 2.0, 1e-48);

    const auto bloch = measured_quantity(Detector(measures::trine(), measures::trine_bloch_scale()));
    ASSERT_EQ(bloch.size(), 3u);
    for (const auto& c : bloch) {
        EXPECT_EQ(c.rows(), 2);
        EXPECT_LT(hermitian_deviation(c), 1e-15);
    }
    // By hand: sum_k (2/3) cos(t_k) |phi_k><phi_k| = sigma_z / 2, and likewise sin(t_k) gives sigma_x / 2.
    EXPECT_LT((bloch[0] - pauli::x() / 2.0).norm(), 1e-14);
    EXPECT_LT(bloch[1].norm(), 1e-14);
    EXPECT_LT((bloch[2] - pauli::z() / 2.0).norm(), 1e-14);
}

TEST(detector, length_mismatch) {
    EXPECT_EQ(code_of([] { Detector(measures::trine(), Scale::real({1.0, 2.0})); }), ErrorCode::DimensionMismatch);
}

TEST(statistical_expectation, examples) {
    const Detector zdet(measures::computational_basis(2), Scale::real({1.0, -1.0}));
    const ScaleFunction id = [](const ComplexVector& x) { return x; };
    const ScaleFunction sq = [](const ComplexVector& x) { return ComplexVector(x.cwiseProduct(x)); };
    EXPECT_NEAR(statistical_expectation(zdet, basis_state(2, 0), id)(0).real(), 1.0, 1e-15);
    const auto mixed = make_density(ComplexMatrix::Identity(2, 2) / 2.0);
    EXPECT_NEAR(statistical_expectation(zdet, mixed, sq)(0).real(), 1.0, 1e-15);

    const Detector tdet(measures::trine(), measures::trine_bloch_scale());
    const auto zero = basis_state(2, 0);
    const ComplexVector e = statistical_expectation(tdet, zero, id);
    EXPECT_NEAR(std::abs(e(0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(e(1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(e(2) - 0.5), 0.0, 1e-15);
    const auto comps = measured_quantity(tdet);
    for (std::size_t j = 0; j < 3; ++j)
        EXPECT_NEAR(std::abs(e(static_cast<Eigen::Index>(j)) - quantum_expectation(zero, comps[j])), 0.0, 1e-15);
    EXPECT_EQ(code_of([&] { statistical_expectation(tdet, DensityOperator::empty(2), id); }), ErrorCode::EmptyState);
}

TEST(drp_linearity_report, examples) {
    const auto z = measures::computational_basis(2);
    Xoshiro256StarStar rng(5);
    const auto r1 = random::density(2, rng);
    const auto r2 = random::density(2, rng);
    auto rep = drp_linearity_report(z, r1, r2, 1.0, 0.0);
    EXPECT_EQ(rep.linearity_deviation, 0.0);
    EXPECT_TRUE(rep.passed);

    rep = drp_linearity_report(z, basis_state(2, 0), basis_state(2, 1), 0.5, 0.5);
    EXPECT_LE(rep.linearity_deviation, 1e-12);

    const auto m = random::measure(3, 4, rng);
    rep = drp_linearity_report(m, random::density(3, rng), random::density(3, rng), 2.0, 3.0);
    EXPECT_LE(rep.linearity_deviation, 1e-10);
    EXPECT_LE(rep.completeness_deviation, 1e-10 * 5.0);
    EXPECT_TRUE(rep.passed);

    EXPECT_EQ(code_of([&] { drp_linearity_report(z, r1, r2, -1.0, 1.0); }), ErrorCode::InvalidArgument);
}

TEST(measures_property, completeness_nonnegativity_and_linearity) {
    Xoshiro256StarStar rng(201);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = random::uniform_int(2, 6, rng);
        const std::size_t k = random::uniform_int(1, 6, rng);
        const auto m = random::measure(d, k, rng);
        const auto rho = random::density(d, rng, 0.1 + 4.0 * rng.uniform());
        const RealVector p = response_rates(m, rho);
        EXPECT_LE(std::abs(p.sum() - rho.intensity()), 1e-10 * rho.intensity());
        for (std::size_t j = 0; j < k; ++j)
            EXPECT_GE(oracle::trace_of_product(rho.matrix(), m.element(j)).real(), -1e-12);
        const auto rep = drp_linearity_report(m, rho, random::density(d, rng), rng.uniform(), rng.uniform());
        EXPECT_LE(rep.linearity_deviation, 1e-10);
    }
}

TEST(measures_property, each_element_fires_on_itself) {
    Xoshiro256StarStar rng(202);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = random::uniform_int(2, 5, rng);
        const auto m = random::measure(d, random::uniform_int(1, 5, rng), rng);
        for (std::size_t k = 0; k < m.size(); ++k) {
            const auto rho = make_density(m.element(k));
            EXPECT_GT(response_rates(m, rho)(static_cast<Eigen::Index>(k)), 0.0);
        }
    }
}

TEST(measures_property, orthonormal_basis_family_is_projective) {
    Xoshiro256StarStar rng(203);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = random::uniform_int(2, 6, rng);
        const ComplexMatrix u = random::unitary(d, rng);
        std::vector<ComplexMatrix> elements;
        for (Eigen::Index i = 0; i < u.cols(); ++i) elements.push_back(u.col(i) * u.col(i).adjoint());
        EXPECT_TRUE(is_projective(make_measure(elements)));
        EXPECT_TRUE(is_projective(random::projective_measure(d, random::uniform_int(1, d, rng), rng)));
    }
}

TEST(measures_property, statistical_expectation_equals_quantum_expectation) {
    Xoshiro256StarStar rng(204);
    const ScaleFunction id = [](const ComplexVector& x) { return x; };
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = random::uniform_int(2, 5, rng);
        const auto m = random::measure(d, random::uniform_int(1, 5, rng), rng);
        std::vector<ComplexVector> values;
        for (std::size_t k = 0; k < m.size(); ++k) values.push_back(random::unit_vector(2, rng) * 3.0);
        const Detector det(m, Scale(values, ""));
        const auto rho = random::density(d, rng, 2.5);
        const ComplexVector e = statistical_expectation(det, rho, id);
        const auto comps = measured_quantity(det);
        for (std::size_t j = 0; j < comps.size(); ++j)
            EXPECT_LE(std::abs(e(static_cast<Eigen::Index>(j)) - quantum_expectation(rho, comps[j])), 1e-10);
    }
}

TEST(measures_property, rates_depend_only_on_the_measure) {
    Xoshiro256StarStar rng(205);
    const auto m = random::measure(3, 4, rng);
    const Detector a(m, Scale::real({1.0, 2.0, 3.0, 4.0}));
    const Detector b(m, Scale::real({-1.0, 0.5, 7.0, 0.0}));
    EXPECT_GT((measured_quantity(a)[0] - measured_quantity(b)[0]).norm(), 1e-3);
    const auto rho = random::density(3, rng);
    EXPECT_EQ(response_rates(a.measure, rho), response_rates(b.measure, rho));
}

TEST(response_rates_batch, openmp_matches_serial_for_any_thread_count) {
    Xoshiro256StarStar rng(206);
    const auto m = random::measure(4, 5, rng);
    std::vector<DensityOperator> states;
    for (int i = 0; i < 257; ++i) states.push_back(random::density(4, rng));
    const auto serial = response_rates_batch_serial(m, states);
    for (int threads : {1, 2, 3, 8}) {
        omp_set_num_threads(threads);
        const auto par = response_rates_batch(m, states);
        ASSERT_EQ(par.size(), serial.size());
        for (std::size_t i = 0; i < par.size(); ++i) EXPECT_EQ(par[i], serial[i]);
    }
    for (std::size_t i = 0; i < states.size(); ++i) EXPECT_EQ(serial[i], response_rates(m, states[i]));
}
