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

#include <string>
#include <vector>

#include "bornkit/cli.hpp"
#include "bornkit/io.hpp"

namespace bornkit::cli {

/// Resolves named objects of an ExperimentConfig into library types.
/// Objects are rebuilt on every lookup so concurrent tasks share nothing.
class Workspace {
public:
    explicit Workspace(const ExperimentConfig& config) : config_(config) {}

    DensityOperator state(const std::string& name) const;
    StateVector vector(const std::string& name) const;
    ComplexMatrix matrix(const std::string& name) const;
    QuantumMeasure measure(const std::string& name) const;
    Scale scale(const std::string& name) const;
    Detector detector(const std::string& name) const;
    SMatrix smatrix(const std::string& name) const;
    CalibrationSet calibration(const std::string& name) const;
    MaxEntProblem maxent_problem(const std::string& name) const;

    double constant(const std::string& name) const;

private:
    const json& lookup(const char* section, const std::string& name) const;
    ComplexMatrix matrix_value(const json& j) const;
    DensityOperator state_value(const json& j) const;

    const ExperimentConfig& config_;
};

}  // namespace bornkit::cli
