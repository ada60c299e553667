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

#include "bornkit/io.hpp"

namespace bornkit::io {
namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::vector<std::string> string_list(const json& j) {
    return parse_guard("string list", [&] { return j.get<std::vector<std::string>>(); });
}

json matrices_to_json(const std::vector<ComplexMatrix>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(to_json(m));
    return out;
}

std::vector<ComplexMatrix> matrices_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of matrices");
    std::vector<ComplexMatrix> out;
    for (const auto& m : j) out.push_back(matrix_from_json(m));
    return out;
}

}  // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const ComplexVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
    return out;
}

json to_json(const ComplexMatrix& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const RealVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

json to_json(const DensityOperator& rho) {
    return {{"dim", rho.dim()}, {"matrix", to_json(rho.matrix())}};
}

json to_json(const QuantumMeasure& measure) {
    return {{"dim", measure.dim()}, {"labels", measure.labels()}, {"elements", matrices_to_json(measure.elements())}};
}

json to_json(const Scale& scale) {
    json values = json::array();
    for (const auto& v : scale.values()) values.push_back(to_json(v));
    return {{"values", values}, {"units", scale.units()}};
}

json to_json(const EventLog& log) {
    return {{"detector_id", log.detector_id}, {"seed", log.seed}, {"total", log.total}, {"counts", log.counts}};
}

json to_json(const VerificationReport& report) {
    json out = {{"passed", report.passed},   {"n", report.n},
                {"seed", report.seed},       {"deviations", report.deviations},
                {"bounds", report.bounds},   {"expected", report.expected}};
    if (!report.sample_mean.empty()) {
        json sample = json::array();
        json quantum = json::array();
        for (const auto& z : report.sample_mean) sample.push_back(to_json(z));
        for (const auto& z : report.quantum_mean) quantum.push_back(to_json(z));
        out["sample_mean"] = sample;
        out["quantum_mean"] = quantum;
    }
    return out;
}

json to_json(const SpectralDecomposition& decomposition) {
    json values = json::array();
    for (const auto& v : decomposition.eigenvalues) values.push_back(to_json(v));
    return {{"eigenvalues", values},
            {"projectors", matrices_to_json(decomposition.projectors.elements())},
            {"cluster_tol", decomposition.cluster_tol}};
}

json to_json(const Dilation& dilation) {
    return {{"V", to_json(dilation.isometry)}, {"projective_measure", to_json(dilation.projective_measure)}};
}

json to_json(const CalibrationSet& calibration) {
    json states = json::array();
    for (const auto& s : calibration.states) states.push_back(to_json(s.matrix()));
    json rates = json::array();
    for (Eigen::Index j = 0; j < calibration.rates.rows(); ++j) {
        json row = json::array();
        for (Eigen::Index k = 0; k < calibration.rates.cols(); ++k) row.push_back(calibration.rates(j, k));
        rates.push_back(std::move(row));
    }
    return {{"states", states}, {"rates", rates}};
}

json to_json(const MaxEntProblem& problem) {
    return {{"dim", problem.dim},
            {"operators", matrices_to_json(problem.operators)},
            {"targets", problem.targets},
            {"tolerance", problem.tolerance},
            {"max_iterations", problem.max_iterations}};
}

json to_json(const SMatrix& s) {
    return {{"dim", s.dim()}, {"channel_labels", s.channel_labels()}, {"matrix", to_json(s.matrix())}};
}

Complex complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw Error(ErrorCode::ParseError, "complex number must be [re, im] or a number, got " + j.dump());
}

ComplexVector vector_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw Error(ErrorCode::ParseError, "vector must be a nonempty array");
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    return v;
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) {
        throw Error(ErrorCode::ParseError, "matrix must be a nonempty array of rows");
    }
    const std::size_t cols = j[0].size();
    ComplexMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw Error(ErrorCode::ParseError, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c]);
        }
    }
    return m;
}

DensityOperator density_from_json(const json& j) {
    if (j.is_array()) return make_density(matrix_from_json(j));
    if (j.is_object() && j.contains("vector")) return pure_state(StateVector(vector_from_json(j.at("vector"))));
    const DensityOperator rho = make_density(matrix_from_json(field(j, "matrix")));
    if (j.contains("dim") && parse_guard("dim", [&] { return j.at("dim").get<std::size_t>(); }) != rho.dim()) {
        throw Error(ErrorCode::ParseError, "state dim field disagrees with matrix");
    }
    return rho;
}

QuantumMeasure measure_from_json(const json& j) {
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = string_list(j.at("labels"));
    QuantumMeasure m = make_measure(matrices_from_json(field(j, "elements")), std::move(labels));
    if (j.contains("dim") && parse_guard("dim", [&] { return j.at("dim").get<std::size_t>(); }) != m.dim()) {
        throw Error(ErrorCode::ParseError, "measure dim field disagrees with elements");
    }
    return m;
}

Scale scale_from_json(const json& j) {
    const json& values = field(j, "values");
    if (!values.is_array()) throw Error(ErrorCode::ParseError, "scale values must be an array");
    std::vector<ComplexVector> out;
    for (const auto& v : values) {
        // An array is a vector value; a bare number is a real scalar value.
        if (v.is_array()) {
            out.push_back(vector_from_json(v));
        } else {
            ComplexVector x(1);
            x(0) = complex_from_json(v);
            out.push_back(std::move(x));
        }
    }
    std::string units = j.contains("units") ? parse_guard("units", [&] { return j.at("units").get<std::string>(); })
                                            : std::string();
    return Scale(std::move(out), std::move(units));
}

EventLog event_log_from_json(const json& j) {
    return parse_guard("event log", [&] {
        EventLog log;
        log.detector_id = field(j, "detector_id").get<std::string>();
        log.seed = field(j, "seed").get<std::uint64_t>();
        log.total = field(j, "total").get<std::uint64_t>();
        log.counts = field(j, "counts").get<std::vector<std::uint64_t>>();
        std::uint64_t sum = 0;
        for (auto c : log.counts) sum += c;
        if (sum != log.total) throw Error(ErrorCode::ParseError, "event counts do not sum to total");
        return log;
    });
}

SpectralDecomposition spectral_from_json(const json& j) {
    const json& values = field(j, "eigenvalues");
    std::vector<Complex> eigenvalues;
    for (const auto& v : values) eigenvalues.push_back(complex_from_json(v));
    std::vector<ComplexMatrix> projectors = matrices_from_json(field(j, "projectors"));
    if (projectors.size() != eigenvalues.size()) {
        throw Error(ErrorCode::ParseError, "one projector per eigenvalue required");
    }
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < projectors.size(); ++c) labels.push_back("e" + std::to_string(c));
    bool hermitian = true;
    for (const auto& v : eigenvalues) hermitian = hermitian && v.imag() == 0.0;
    const double tol = parse_guard("cluster_tol", [&] { return field(j, "cluster_tol").get<double>(); });
    return SpectralDecomposition{std::move(eigenvalues), make_measure(std::move(projectors), std::move(labels)), tol,
                                 hermitian};
}

Dilation dilation_from_json(const json& j) {
    ComplexMatrix v = matrix_from_json(field(j, "V"));
    QuantumMeasure pm = measure_from_json(field(j, "projective_measure"));
    if (static_cast<std::size_t>(v.rows()) != pm.dim()) {
        throw Error(ErrorCode::ParseError, "isometry rows differ from the dilated dimension");
    }
    const auto source = static_cast<std::size_t>(v.cols());
    const std::size_t count = pm.size();
    return Dilation{std::move(v), std::move(pm), source, count};
}

CalibrationSet calibration_from_json(const json& j) {
    const json& states_json = field(j, "states");
    if (!states_json.is_array()) throw Error(ErrorCode::ParseError, "calibration states must be an array");
    std::vector<DensityOperator> states;
    for (const auto& s : states_json) states.push_back(density_from_json(s));
    const auto rows = parse_guard("rates", [&] { return field(j, "rates").get<std::vector<std::vector<double>>>(); });
    if (rows.empty()) throw Error(ErrorCode::ParseError, "calibration rates are empty");
    RealMatrix rates(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw Error(ErrorCode::ParseError, "ragged rate rows");
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            rates(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
        }
    }
    return make_calibration(std::move(states), std::move(rates));
}

MaxEntProblem maxent_problem_from_json(const json& j) {
    MaxEntProblem p;
    p.operators = matrices_from_json(field(j, "operators"));
    p.targets = parse_guard("targets", [&] { return field(j, "targets").get<std::vector<double>>(); });
    if (j.contains("dim")) {
        p.dim = parse_guard("dim", [&] { return j.at("dim").get<std::size_t>(); });
    } else if (!p.operators.empty()) {
        p.dim = static_cast<std::size_t>(p.operators.front().rows());
    } else {
        throw Error(ErrorCode::ParseError, "maxent problem without operators needs a dim field");
    }
    if (j.contains("tolerance")) p.tolerance = parse_guard("tolerance", [&] { return j.at("tolerance").get<double>(); });
    if (j.contains("max_iterations")) {
        p.max_iterations = parse_guard("max_iterations", [&] { return j.at("max_iterations").get<std::size_t>(); });
    }
    return p;
}

SMatrix smatrix_from_json(const json& j) {
    std::vector<std::string> labels;
    if (j.contains("channel_labels")) labels = string_list(j.at("channel_labels"));
    return make_smatrix(matrix_from_json(field(j, "matrix")), std::move(labels));
}

}  // namespace bornkit::io
