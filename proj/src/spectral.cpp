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

#include "bornkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "bornkit/error.hpp"

namespace bornkit {
namespace {

struct Eigenpairs {
    std::vector<Complex> values;
    ComplexMatrix vectors;  // orthonormal columns
};

Eigenpairs eigenpairs(const ComplexMatrix& x, bool hermitian) {
    Eigenpairs out;
    if (hermitian) {
        const HermitianEigen e = eigh(x);
        out.values.assign(e.values.data(), e.values.data() + e.values.size());
        out.vectors = e.vectors;
        return out;
    }
    Eigen::ComplexSchur<ComplexMatrix> schur(x);
    if (schur.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "Schur decomposition failed");
    const ComplexMatrix& t = schur.matrixT();
    for (Eigen::Index i = 0; i < t.rows(); ++i) out.values.push_back(t(i, i));
    out.vectors = schur.matrixU();
    return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

}  // namespace

SpectralDecomposition spectral_measure(const ComplexMatrix& x, double cluster_tol) {
    if (x.rows() != x.cols() || x.rows() == 0) throw Error(ErrorCode::NotSquare, "spectral_measure needs a square matrix");
    const bool hermitian = hermitian_deviation(x) <= kHermitianTol;
    if (!hermitian) {
        const double scale = std::max(1.0, x.squaredNorm());
        const double defect = (x * x.adjoint() - x.adjoint() * x).norm();
        if (defect > 1e-8 * scale) {
            std::ostringstream msg;
            msg << "||XX* - X*X|| = " << defect;
            throw Error(ErrorCode::NotNormal, msg.str());
        }
    }
    const Eigenpairs pairs = eigenpairs(x, hermitian);
    const std::size_t n = pairs.values.size();

    double radius = 0.0;
    for (const Complex& v : pairs.values) radius = std::max(radius, std::abs(v));
    const double threshold = cluster_tol * radius;

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(pairs.values[i] - pairs.values[j]) <= threshold) {
                parent[find_root(parent, i)] = find_root(parent, j);
            }
        }
    }

    struct Cluster {
        Complex value;
        std::vector<std::size_t> members;
    };
    std::vector<Cluster> clusters;
    std::vector<std::ptrdiff_t> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find_root(parent, i);
        if (slot[r] < 0) {
            slot[r] = static_cast<std::ptrdiff_t>(clusters.size());
            clusters.push_back({});
        }
        clusters[static_cast<std::size_t>(slot[r])].members.push_back(i);
    }
    for (auto& c : clusters) {
        Complex sum = 0.0;
        for (std::size_t i : c.members) sum += pairs.values[i];
        c.value = sum / static_cast<double>(c.members.size());
        if (hermitian) c.value = c.value.real();
    }
    std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
        if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
        return a.value.imag() > b.value.imag();
    });

    std::vector<Complex> values;
    std::vector<ComplexMatrix> projectors;
    std::vector<std::string> labels;
    const auto dim = x.rows();
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
        for (std::size_t i : clusters[c].members) {
            const auto col = pairs.vectors.col(static_cast<Eigen::Index>(i));
            p += col * col.adjoint();
        }
        values.push_back(clusters[c].value);
        projectors.push_back(std::move(p));
        labels.push_back("e" + std::to_string(c));
    }
    return SpectralDecomposition{std::move(values), make_measure(std::move(projectors), std::move(labels)),
                                 cluster_tol, hermitian};
}

RealVector born_probabilities_pure(const StateVector& psi, const std::vector<ComplexVector>& basis) {
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << "state norm is " << psi.norm();
        throw Error(ErrorCode::NotNormalized, msg.str());
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (static_cast<std::size_t>(basis[i].size()) != psi.dim()) {
            throw Error(ErrorCode::DimensionMismatch, "basis vector " + std::to_string(i) + " has wrong length");
        }
        for (std::size_t j = 0; j <= i; ++j) {
            const Complex g = basis[j].dot(basis[i]);
            const double target = i == j ? 1.0 : 0.0;
            if (std::abs(g - target) > 1e-10) {
                throw Error(ErrorCode::NotOrthonormal,
                            "basis vectors " + std::to_string(j) + " and " + std::to_string(i) + " fail orthonormality");
            }
        }
    }
    RealVector p(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        p(static_cast<Eigen::Index>(k)) = std::norm(basis[k].dot(psi.amplitudes()));
    }
    return p;
}

ComplexMatrix function_calculus(const SpectralDecomposition& decomposition,
                                const std::function<Complex(Complex, Complex)>& f) {
    const auto n = static_cast<Eigen::Index>(decomposition.projectors.dim());
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k < decomposition.eigenvalues.size(); ++k) {
        const Complex x = decomposition.eigenvalues[k];
        out += f(std::conj(x), x) * decomposition.projectors.element(k);
    }
    return out;
}

Scale eigenvalue_scale(const SpectralDecomposition& decomposition) {
    std::vector<ComplexVector> values;
    for (const Complex& v : decomposition.eigenvalues) {
        ComplexVector x(1);
        x(0) = v;
        values.push_back(std::move(x));
    }
    return Scale(std::move(values), "eigenvalue");
}

ProjectiveComparison projective_rates_equal_povm_rates(const ComplexMatrix& x, const DensityOperator& rho) {
    if (x.rows() != x.cols()) throw Error(ErrorCode::NotSquare, "quantity must be square");
    if (hermitian_deviation(x) > kHermitianTol) throw Error(ErrorCode::NotHermitian, "quantity must be Hermitian");
    if (static_cast<std::size_t>(x.rows()) != rho.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "quantity and state dimensions differ");
    }
    const SpectralDecomposition decomposition = spectral_measure(x);

    ProjectiveComparison out;
    out.eigenvalues = decomposition.eigenvalues;
    out.povm_rates = response_rates(decomposition.projectors, rho);
    if (rho.is_empty()) return out;

    const HermitianEigen state = eigh(rho.matrix() / rho.intensity());
    const Eigen::Index rank = (state.values.array() > 1e-10).count();
    bool one_dimensional = true;
    for (const auto& p : decomposition.projectors.elements()) {
        if (std::abs(p.trace().real() - 1.0) > 1e-8) one_dimensional = false;
    }
    if (rank != 1 || !one_dimensional) return out;

    const Eigen::Index top = state.values.size() - 1;
    const StateVector psi(state.vectors.col(top));
    std::vector<ComplexVector> basis;
    for (const auto& p : decomposition.projectors.elements()) {
        Eigen::Index best = 0;
        p.colwise().norm().maxCoeff(&best);
        basis.push_back(p.col(best).normalized());
    }
    out.squared_amplitudes = rho.intensity() * born_probabilities_pure(psi, basis);
    out.applicable = true;
    out.max_deviation = (out.squared_amplitudes - out.povm_rates).cwiseAbs().maxCoeff();
    return out;
}

}  // namespace bornkit
