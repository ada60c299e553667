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

#include <nlohmann/json.hpp>

#include "bornkit/dilation.hpp"
#include "bornkit/error.hpp"
#include "bornkit/maxent.hpp"
#include "bornkit/measures.hpp"
#include "bornkit/sampling.hpp"
#include "bornkit/scattering.hpp"
#include "bornkit/spectral.hpp"
#include "bornkit/tomography.hpp"

// JSON encoding: complex numbers are [re, im]; matrices are row-major nested
// arrays of complex numbers. Readers also accept a bare number for a real
// complex value. Malformed input raises Error(ParseError).
namespace bornkit::io {

using nlohmann::json;

json to_json(Complex z);
json to_json(const ComplexVector& v);
json to_json(const ComplexMatrix& m);
json to_json(const RealVector& v);
json to_json(const DensityOperator& rho);
json to_json(const QuantumMeasure& measure);
json to_json(const Scale& scale);
json to_json(const EventLog& log);
json to_json(const VerificationReport& report);
json to_json(const SpectralDecomposition& decomposition);
json to_json(const Dilation& dilation);
json to_json(const CalibrationSet& calibration);
json to_json(const MaxEntProblem& problem);
json to_json(const SMatrix& s);

Complex complex_from_json(const json& j);
ComplexVector vector_from_json(const json& j);
ComplexMatrix matrix_from_json(const json& j);
/// {"matrix": ...} or {"vector": ...} (pure state); a bare nested array is
/// read as a matrix.
DensityOperator density_from_json(const json& j);
QuantumMeasure measure_from_json(const json& j);
Scale scale_from_json(const json& j);
EventLog event_log_from_json(const json& j);
SpectralDecomposition spectral_from_json(const json& j);
Dilation dilation_from_json(const json& j);
CalibrationSet calibration_from_json(const json& j);
MaxEntProblem maxent_problem_from_json(const json& j);
SMatrix smatrix_from_json(const json& j);

/// Runs `fn`, turning nlohmann exceptions into Error(ParseError) with `what`
/// as context.
template <typename Fn>
auto parse_guard(const char* what, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
    }
}

}  // namespace bornkit::io
