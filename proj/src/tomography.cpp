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

#include "bornkit/tomography.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bornkit/error.hpp"
#include "bornkit/rng.hpp"
#include "bornkit/sampling.hpp"

namespace bornkit {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

double frobenius_distance(const std::vector<ComplexMatrix>& a, const std::vector<ComplexMatrix>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]).squaredNorm();
    return std::sqrt(s);
}

std::vector<ComplexMatrix> add(const std::vector<ComplexMatrix>& a, const std::vector<ComplexMatrix>& b) {
    std::vector<ComplexMatrix> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

std::vector<ComplexMatrix> subtract(const std::vector<ComplexMatrix>& a, const std::vector<ComplexMatrix>& b) {
    std::vector<ComplexMatrix> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
}

std::vector<ComplexMatrix> project_cone(const std::vector<ComplexMatrix>& x) {
    std::vector<ComplexMatrix> out;
    out.reserve(x.size());
    for (const auto& p : x) out.push_back(project_psd(p));
    return out;
}

// Orthogonal projection onto sum_k P_k = 1 (Hermitian parts).
std::vector<ComplexMatrix> project_affine(const std::vector<ComplexMatrix>& x) {
    const auto n = x.front().rows();
    ComplexMatrix excess = -ComplexMatrix::Identity(n, n);
    for (const auto& p : x) excess += p;
    excess /= static_cast<double>(x.size());
    std::vector<ComplexMatrix> out;
    out.reserve(x.size());
    for (const auto& p : x) {
        ComplexMatrix q = p - excess;
        out.push_back(0.5 * (q + q.adjoint()));
    }
    return out;
}

RealMatrix coordinate_matrix(const std::vector<DensityOperator>& states) {
    const std::size_t d = states.front().dim();
    RealMatrix a(static_cast<Eigen::Index>(states.size()), static_cast<Eigen::Index>(d * d));
    for (std::size_t j = 0; j < states.size(); ++j) {
        if (states[j].dim() != d) throw Error(ErrorCode::DimensionMismatch, "calibration states differ in dimension");
        a.row(static_cast<Eigen::Index>(j)) = hermitian_coordinates(states[j].matrix()).transpose();
    }
    return a;
}

}  // namespace

RealVector hermitian_coordinates(const ComplexMatrix& a) {
    const auto d = a.rows();
    RealVector c(d * d);
    Eigen::Index idx = 0;
    for (Eigen::Index i = 0; i < d; ++i) c(idx++) = a(i, i).real();
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = j + 1; k < d; ++k) {
            // tr(G a) for G = (E_jk + E_kj)/sqrt2 and G = i(E_kj - E_jk)/sqrt2.
            c(idx++) = kInvSqrt2 * (a(k, j) + a(j, k)).real();
            c(idx++) = kInvSqrt2 * (Complex(0.0, 1.0) * (a(j, k) - a(k, j))).real();
        }
    }
    return c;
}

ComplexMatrix from_hermitian_coordinates(const RealVector& c, std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    if (c.size() != d * d) throw Error(ErrorCode::DimensionMismatch, "coordinate vector has wrong length");
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    Eigen::Index idx = 0;
    for (Eigen::Index i = 0; i < d; ++i) a(i, i) = c(idx++);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = j + 1; k < d; ++k) {
            const double re = c(idx++) * kInvSqrt2;
            const double im = c(idx++) * kInvSqrt2;
            a(j, k) += Complex(re, -im);
            a(k, j) += Complex(re, im);
        }
    }
    return a;
}

CalibrationSet make_calibration(std::vector<DensityOperator> states, RealMatrix rates, double data_tol) {
    if (states.empty()) throw Error(ErrorCode::InvalidArgument, "calibration set has no states");
    if (rates.rows() != static_cast<Eigen::Index>(states.size()) || rates.cols() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "rates need one row per state and at least one column");
    }
    const std::size_t d = states.front().dim();
    for (std::size_t j = 0; j < states.size(); ++j) {
        if (states[j].dim() != d) throw Error(ErrorCode::DimensionMismatch, "calibration states differ in dimension");
        const auto row = rates.row(static_cast<Eigen::Index>(j));
        if (row.minCoeff() < 0.0) {
            throw Error(ErrorCode::DataMismatch, "negative rate in row " + std::to_string(j));
        }
        const double gap = std::abs(row.sum() - states[j].intensity());
        if (gap > data_tol * std::max(1.0, states[j].intensity())) {
            std::ostringstream msg;
            msg << "rates of state " << j << " sum to " << row.sum() << ", intensity is " << states[j].intensity();
            throw Error(ErrorCode::DataMismatch, msg.str());
        }
    }
    return CalibrationSet{std::move(states), std::move(rates)};
}

CompletenessReport informational_completeness(const std::vector<DensityOperator>& states) {
    if (states.empty()) throw Error(ErrorCode::InvalidArgument, "no states");
    const RealMatrix a = coordinate_matrix(states);
    const Eigen::JacobiSVD<RealMatrix> svd(a);
    const RealVector s = svd.singularValues();
    const double threshold = 1e-10 * std::max(1.0, s.size() > 0 ? s(0) : 0.0);
    CompletenessReport report;
    report.rank = static_cast<std::size_t>((s.array() > threshold).count());
    report.required = states.front().dim() * states.front().dim();
    report.complete = report.rank == report.required;
    return report;
}

std::vector<DensityOperator> standard_calibration_states(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    std::vector<DensityOperator> out;
    for (Eigen::Index i = 0; i < d; ++i) {
        ComplexVector v = ComplexVector::Zero(d);
        v(i) = 1.0;
        out.push_back(pure_state(StateVector(v)));
    }
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = j + 1; k < d; ++k) {
            ComplexVector plus = ComplexVector::Zero(d);
            plus(j) = kInvSqrt2;
            plus(k) = kInvSqrt2;
            out.push_back(pure_state(StateVector(plus)));
            ComplexVector phase = ComplexVector::Zero(d);
            phase(j) = kInvSqrt2;
            phase(k) = Complex(0.0, kInvSqrt2);
            out.push_back(pure_state(StateVector(phase)));
        }
    }
    return out;
}

CalibrationSet simulate_calibration(const std::vector<DensityOperator>& states, const QuantumMeasure& measure,
                                    std::uint64_t n, std::uint64_t seed) {
    RealMatrix rates(static_cast<Eigen::Index>(states.size()), static_cast<Eigen::Index>(measure.size()));
    for (std::size_t j = 0; j < states.size(); ++j) {
        const RealVector p = response_rates(measure, states[j]);
        if (n == 0 || states[j].is_empty()) {
            rates.row(static_cast<Eigen::Index>(j)) = p.transpose();
            continue;
        }
        const RealVector q = p / states[j].intensity();
        const auto counts =
            sample_categorical(std::span<const double>(q.data(), static_cast<std::size_t>(q.size())), n, seed ^ j);
        for (std::size_t k = 0; k < counts.size(); ++k) {
            rates(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                states[j].intensity() * static_cast<double>(counts[k]) / static_cast<double>(n);
        }
    }
    return make_calibration(states, std::move(rates));
}

TomographyResult reconstruct_measure(const CalibrationSet& calibration, const TomographyOptions& options) {
    const CompletenessReport completeness = informational_completeness(calibration.states);
    if (!completeness.complete) {
        std::ostringstream msg;
        msg << "calibration states span rank " << completeness.rank << " of " << completeness.required;
        throw Error(ErrorCode::RankDeficient, msg.str());
    }
    const std::size_t d = calibration.states.front().dim();
    const RealMatrix a = coordinate_matrix(calibration.states);
    const RealMatrix coords = a.colPivHouseholderQr().solve(calibration.rates);  // d^2 x K

    const auto elements = static_cast<std::size_t>(calibration.rates.cols());
    std::vector<ComplexMatrix> ls;
    ls.reserve(elements);
    for (std::size_t k = 0; k < elements; ++k) {
        ls.push_back(from_hermitian_coordinates(coords.col(static_cast<Eigen::Index>(k)), d));
    }

    // Dykstra alternating projection onto PSD cone and sum-to-identity plane.
    const auto n = static_cast<Eigen::Index>(d);
    std::vector<ComplexMatrix> x = ls;
    std::vector<ComplexMatrix> cone_correction(elements, ComplexMatrix::Zero(n, n));
    std::vector<ComplexMatrix> affine_correction(elements, ComplexMatrix::Zero(n, n));
    std::size_t iterations = 0;
    bool converged = false;
    while (iterations < options.max_iterations) {
        ++iterations;
        const std::vector<ComplexMatrix> shifted = add(x, cone_correction);
        const std::vector<ComplexMatrix> y = project_cone(shifted);
        cone_correction = subtract(shifted, y);
        const std::vector<ComplexMatrix> shifted_y = add(y, affine_correction);
        std::vector<ComplexMatrix> next = project_affine(shifted_y);
        affine_correction = subtract(shifted_y, next);
        const double move = frobenius_distance(next, x);
        x = std::move(next);
        if (move < options.exit_tol) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw Error(ErrorCode::NoConvergence,
                    "constraint projection did not settle within " + std::to_string(options.max_iterations) +
                        " iterations");
    }

    TomographyResult result{make_measure(x, options.labels), ls, 0.0, frobenius_distance(x, ls), iterations};
    double residual = 0.0;
    for (std::size_t j = 0; j < calibration.states.size(); ++j) {
        for (std::size_t k = 0; k < elements; ++k) {
            const double predicted = trace_product(calibration.states[j].matrix(), x[k]).real();
            const double r = predicted - calibration.rates(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
            residual += r * r;
        }
    }
    result.residual = std::sqrt(residual);
    return result;
}

}  // namespace bornkit
