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

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bornkit/linalg.hpp"
#include "bornkit/operators.hpp"

namespace bornkit {

/// Finite family of Hermitian PSD operators P_k summing to the identity.
class QuantumMeasure {
public:
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<ComplexMatrix>& elements() const { return elements_; }
    const ComplexMatrix& element(std::size_t k) const { return elements_.at(k); }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    QuantumMeasure() = default;
    friend QuantumMeasure make_measure(std::vector<ComplexMatrix>, std::vector<std::string>, double);

    std::size_t dim_ = 0;
    std::vector<ComplexMatrix> elements_;
    std::vector<std::string> labels_;
};

/// Validates and builds a measure. Empty `labels` become "0", "1", ...
/// Errors: InvalidArgument (no elements), NotSquare, DimensionMismatch,
/// NotHermitian, NotPSD, ZeroElement, IncompleteSum, LabelCollision.
QuantumMeasure make_measure(std::vector<ComplexMatrix> elements, std::vector<std::string> labels = {},
                            double completeness_tol = kCompletenessTol);

/// Assigns a complex vector value x_k (uniform length m >= 1) to each
/// detection element. Real scalar scales are the m = 1 special case.
class Scale {
public:
    Scale() = default;
    Scale(std::vector<ComplexVector> values, std::string units);

    std::size_t size() const { return values_.size(); }
    std::size_t components() const { return values_.empty() ? 0 : static_cast<std::size_t>(values_[0].size()); }
    const std::vector<ComplexVector>& values() const { return values_; }
    const ComplexVector& value(std::size_t k) const { return values_.at(k); }
    const std::string& units() const { return units_; }

    /// Scale with one real value per element.
    static Scale real(const std::vector<double>& values, std::string units = "");

private:
    std::vector<ComplexVector> values_;
    std::string units_;
};

struct Detector {
    Detector(QuantumMeasure measure, Scale scale);

    QuantumMeasure measure;
    Scale scale;
};

/// Mean rates p_k = tr(rho P_k), in units of intensity. Values in
/// [-1e-12, 0) are clipped to zero; anything lower raises NegativeRate.
RealVector response_rates(const QuantumMeasure& measure, const DensityOperator& rho);

/// Rates for many states; OpenMP over states.
std::vector<RealVector> response_rates_batch(const QuantumMeasure& measure, std::span<const DensityOperator> states);

/// Serial reference for response_rates_batch.
std::vector<RealVector> response_rates_batch_serial(const QuantumMeasure& measure,
                                                    std::span<const DensityOperator> states);

/// True iff max |P_j P_k - delta_jk P_k| <= tol over all pairs.
bool is_projective(const QuantumMeasure& measure, double tol = 1e-8);

/// X = sum_k x_k P_k, one matrix per scale component.
std::vector<ComplexMatrix> measured_quantity(const Detector& detector);

using ScaleFunction = std::function<ComplexVector(const ComplexVector&)>;

/// E(f(x)) = sum_k (p_k / I) f(x_k).
ComplexVector statistical_expectation(const Detector& detector, const DensityOperator& rho, const ScaleFunction& f);

struct DrpReport {
    double linearity_deviation = 0.0;     // max_k |p_k(a r1 + b r2) - a p_k(r1) - b p_k(r2)|
    double completeness_deviation = 0.0;  // max over r1, r2, mixture of |sum_k p_k - tr rho|
    bool passed = false;
};

/// Checks the detector response principle on a pair of states.
DrpReport drp_linearity_report(const QuantumMeasure& measure, const DensityOperator& rho1,
                               const DensityOperator& rho2, double alpha, double beta, double tol = 1e-10);

namespace measures {
/// {|0><0|, |1><1|, ...} on C^dim.
QuantumMeasure computational_basis(std::size_t dim);
/// Symmetric qubit trine (2/3)|phi_k><phi_k|, phi_k = cos(t_k/2)|0> + sin(t_k/2)|1>,
/// t_k = 2 pi k / 3.
QuantumMeasure trine();
/// Bloch vectors (sin t_k, 0, cos t_k) of the trine directions.
Scale trine_bloch_scale();
}  // namespace measures

}  // namespace bornkit
