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

#include "bornkit/random.hpp"

#include <cmath>
#include <random>

#include "bornkit/error.hpp"

namespace bornkit::random {

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Xoshiro256StarStar& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

ComplexVector unit_vector(std::size_t dim, Xoshiro256StarStar& rng) {
    ComplexVector v = ginibre(dim, 1, rng).col(0);
    return v / v.norm();
}

ComplexMatrix hermitian(std::size_t dim, Xoshiro256StarStar& rng) {
    const ComplexMatrix g = ginibre(dim, dim, rng);
    return 0.5 * (g + g.adjoint());
}

ComplexMatrix unitary(std::size_t dim, Xoshiro256StarStar& rng) {
    const ComplexMatrix g = ginibre(dim, dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(g.rows(), g.cols());
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < q.cols(); ++i) {
        const Complex diag = r(i, i);
        const double mag = std::abs(diag);
        if (mag > 0.0) q.col(i) *= diag / mag;
    }
    return q;
}

DensityOperator density(std::size_t dim, Xoshiro256StarStar& rng, double intensity) {
    const ComplexMatrix g = ginibre(dim, dim, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho = 0.5 * (rho + rho.adjoint());
    rho *= intensity / rho.trace().real();
    return make_density(rho);
}

DensityOperator pure_density(std::size_t dim, Xoshiro256StarStar& rng) {
    return pure_state(StateVector(unit_vector(dim, rng)));
}

QuantumMeasure measure(std::size_t dim, std::size_t elements, Xoshiro256StarStar& rng) {
    if (elements == 0) throw Error(ErrorCode::InvalidArgument, "need at least one element");
    const auto n = static_cast<Eigen::Index>(dim);
    std::vector<ComplexMatrix> g;
    ComplexMatrix total = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k < elements; ++k) {
        const ComplexMatrix a = ginibre(dim, dim, rng);
        g.push_back(a * a.adjoint());
        total += g.back();
    }
    const ComplexMatrix inv_sqrt = hermitian_function(total, [](double x) { return 1.0 / std::sqrt(x); });
    std::vector<ComplexMatrix> p;
    for (const auto& gk : g) {
        ComplexMatrix e = inv_sqrt * gk * inv_sqrt;
        p.push_back(0.5 * (e + e.adjoint()));
    }
    // Remove the O(eps) completeness drift by assigning it to the last element.
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) sum += p[k];
    p.back() = ComplexMatrix::Identity(n, n) - sum;
    p.back() = 0.5 * (p.back() + p.back().adjoint());
    return make_measure(std::move(p));
}

QuantumMeasure projective_measure(std::size_t dim, std::size_t elements, Xoshiro256StarStar& rng) {
    if (elements == 0 || elements > dim) throw Error(ErrorCode::InvalidArgument, "need 1 <= elements <= dim");
    const ComplexMatrix u = unitary(dim, rng);
    const auto n = static_cast<Eigen::Index>(dim);
    std::vector<ComplexMatrix> p(elements, ComplexMatrix::Zero(n, n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i) < elements ? static_cast<std::size_t>(i)
                                                                      : uniform_int(0, elements - 1, rng);
        p[k] += u.col(i) * u.col(i).adjoint();
    }
    return make_measure(std::move(p));
}

std::size_t uniform_int(std::size_t lo, std::size_t hi, Xoshiro256StarStar& rng) {
    std::uniform_int_distribution<std::size_t> dist(lo, hi);
    return dist(rng);
}

}  // namespace bornkit::random
