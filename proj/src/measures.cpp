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
#include <numbers>
#include <set>
#include <sstream>

#include "bornkit/error.hpp"

namespace bornkit {

QuantumMeasure make_measure(std::vector<ComplexMatrix> elements, std::vector<std::string> labels,
                            double completeness_tol) {
    if (elements.empty()) throw Error(ErrorCode::InvalidArgument, "quantum measure needs at least one element");
    const auto n = elements.front().rows();
    if (n == 0) throw Error(ErrorCode::NotSquare, "element 0 is empty");
    ComplexMatrix total = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k < elements.size(); ++k) {
        const ComplexMatrix& p = elements[k];
        if (p.rows() != p.cols()) {
            throw Error(ErrorCode::NotSquare, "element " + std::to_string(k) + " is not square");
        }
        if (p.rows() != n) {
            throw Error(ErrorCode::DimensionMismatch, "element " + std::to_string(k) + " has a different dimension");
        }
        if (hermitian_deviation(p) > kHermitianTol) {
            throw Error(ErrorCode::NotHermitian, "element " + std::to_string(k) + " is not Hermitian");
        }
        const RealVector w = eigh(p).values;
        if (w.minCoeff() < -kPsdTol) {
            std::ostringstream msg;
            msg << "element " << k << " has eigenvalue " << w.minCoeff();
            throw Error(ErrorCode::NotPSD, msg.str());
        }
        if (w.maxCoeff() <= kPsdTol) {
            throw Error(ErrorCode::ZeroElement, "element " + std::to_string(k) + " is zero");
        }
        total += p;
    }
    const double gap = max_abs_entry(total - ComplexMatrix::Identity(n, n));
    if (!(gap <= completeness_tol)) {
        std::ostringstream msg;
        msg << "sum of elements deviates from identity by " << gap;
        throw Error(ErrorCode::IncompleteSum, msg.str());
    }
    if (labels.empty()) {
        for (std::size_t k = 0; k < elements.size(); ++k) labels.push_back(std::to_string(k));
    }
    if (labels.size() != elements.size()) {
        throw Error(ErrorCode::InvalidArgument, "one label per element required");
    }
    std::set<std::string> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) throw Error(ErrorCode::LabelCollision, "duplicate label '" + label + "'");
    }
    QuantumMeasure m;
    m.dim_ = static_cast<std::size_t>(n);
    m.elements_ = std::move(elements);
    m.labels_ = std::move(labels);
    return m;
}

Scale::Scale(std::vector<ComplexVector> values, std::string units)
    : values_(std::move(values)), units_(std::move(units)) {
    if (values_.empty()) throw Error(ErrorCode::InvalidArgument, "scale has no values");
    const auto m = values_.front().size();
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "scale values must have at least one component");
    for (const auto& v : values_) {
        if (v.size() != m) throw Error(ErrorCode::InvalidArgument, "scale values must have uniform length");
    }
}

Scale Scale::real(const std::vector<double>& values, std::string units) {
    std::vector<ComplexVector> out;
    out.reserve(values.size());
    for (double v : values) {
        ComplexVector x(1);
        x(0) = v;
        out.push_back(std::move(x));
    }
    return Scale(std::move(out), std::move(units));
}

Detector::Detector(QuantumMeasure m, Scale s) : measure(std::move(m)), scale(std::move(s)) {
    if (measure.size() != scale.size()) {
        throw Error(ErrorCode::DimensionMismatch, "scale length differs from the number of detection elements");
    }
}

RealVector response_rates(const QuantumMeasure& measure, const DensityOperator& rho) {
    if (rho.dim() != measure.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "state and measure dimensions differ");
    }
    RealVector p(static_cast<Eigen::Index>(measure.size()));
    for (std::size_t k = 0; k < measure.size(); ++k) {
        double pk = trace_product(rho.matrix(), measure.element(k)).real();
        if (pk < -1e-12) {
            std::ostringstream msg;
            msg << "rate " << k << " = " << pk;
            throw Error(ErrorCode::NegativeRate, msg.str());
        }
        p(static_cast<Eigen::Index>(k)) = pk < 0.0 ? 0.0 : pk;
    }
    return p;
}

std::vector<RealVector> response_rates_batch(const QuantumMeasure& measure, std::span<const DensityOperator> states) {
    std::vector<RealVector> out(states.size());
    const auto count = static_cast<std::ptrdiff_t>(states.size());
    bool failed = false;
    Error first_error(ErrorCode::InvalidArgument, "");
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = response_rates(measure, states[static_cast<std::size_t>(i)]);
        } catch (const Error& e) {
#pragma omp critical(bornkit_rates_error)
            if (!failed) {
                failed = true;
                first_error = e;
            }
        }
    }
    if (failed) throw first_error;
    return out;
}

std::vector<RealVector> response_rates_batch_serial(const QuantumMeasure& measure,
                                                    std::span<const DensityOperator> states) {
    std::vector<RealVector> out;
    out.reserve(states.size());
    for (const auto& rho : states) out.push_back(response_rates(measure, rho));
    return out;
}

bool is_projective(const QuantumMeasure& measure, double tol) {
    for (std::size_t j = 0; j < measure.size(); ++j) {
        for (std::size_t k = 0; k < measure.size(); ++k) {
            ComplexMatrix prod = measure.element(j) * measure.element(k);
            if (j == k) prod -= measure.element(k);
            if (max_abs_entry(prod) > tol) return false;
        }
    }
    return true;
}

std::vector<ComplexMatrix> measured_quantity(const Detector& detector) {
    const auto n = static_cast<Eigen::Index>(detector.measure.dim());
    std::vector<ComplexMatrix> x(detector.scale.components(), ComplexMatrix::Zero(n, n));
    for (std::size_t k = 0; k < detector.measure.size(); ++k) {
        const ComplexVector& value = detector.scale.value(k);
        for (std::size_t j = 0; j < x.size(); ++j) {
            x[j] += value(static_cast<Eigen::Index>(j)) * detector.measure.element(k);
        }
    }
    return x;
}

ComplexVector statistical_expectation(const Detector& detector, const DensityOperator& rho, const ScaleFunction& f) {
    const RealVector q = response_rates(detector.measure, rho.normalized());
    ComplexVector acc;
    for (std::size_t k = 0; k < detector.measure.size(); ++k) {
        const ComplexVector fx = f(detector.scale.value(k));
        if (k == 0) {
            acc = ComplexVector::Zero(fx.size());
        } else if (fx.size() != acc.size()) {
            throw Error(ErrorCode::InvalidArgument, "scale function returned vectors of varying length");
        }
        acc += q(static_cast<Eigen::Index>(k)) * fx;
    }
    return acc;
}

DrpReport drp_linearity_report(const QuantumMeasure& measure, const DensityOperator& rho1,
                               const DensityOperator& rho2, double alpha, double beta, double tol) {
    const DensityOperator combined = mix(alpha, rho1, beta, rho2);
    const RealVector p1 = response_rates(measure, rho1);
    const RealVector p2 = response_rates(measure, rho2);
    const RealVector pc = response_rates(measure, combined);

    DrpReport report;
    report.linearity_deviation = (pc - alpha * p1 - beta * p2).cwiseAbs().maxCoeff();
    report.completeness_deviation = std::max({std::abs(p1.sum() - rho1.intensity()),
                                              std::abs(p2.sum() - rho2.intensity()),
                                              std::abs(pc.sum() - combined.intensity())});
    report.passed = report.linearity_deviation <= tol && report.completeness_deviation <= tol;
    return report;
}

namespace measures {

QuantumMeasure computational_basis(std::size_t dim) {
    std::vector<ComplexMatrix> elements;
    const auto n = static_cast<Eigen::Index>(dim);
    for (Eigen::Index i = 0; i < n; ++i) {
        ComplexMatrix p = ComplexMatrix::Zero(n, n);
        p(i, i) = 1.0;
        elements.push_back(std::move(p));
    }
    return make_measure(std::move(elements));
}

QuantumMeasure trine() {
    std::vector<ComplexMatrix> elements;
    for (int k = 0; k < 3; ++k) {
        const double t = 2.0 * std::numbers::pi * k / 3.0;
        ComplexVector phi(2);
        phi << std::cos(t / 2.0), std::sin(t / 2.0);
        elements.push_back((2.0 / 3.0) * phi * phi.adjoint());
    }
    return make_measure(std::move(elements), {"t0", "t1", "t2"});
}

Scale trine_bloch_scale() {
    std::vector<ComplexVector> values;
    for (int k = 0; k < 3; ++k) {
        const double t = 2.0 * std::numbers::pi * k / 3.0;
        ComplexVector v(3);
        v << std::sin(t), 0.0, std::cos(t);
        values.push_back(std::move(v));
    }
    return Scale(std::move(values), "bloch");
}

}  // namespace measures

}  // namespace bornkit
