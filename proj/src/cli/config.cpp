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

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "workspace.hpp"

namespace bornkit::cli {
namespace {

const std::set<std::string> kSections = {"states", "vectors", "matrices", "measures", "scales",
                                         "detectors", "smatrices", "calibrations", "maxent"};

// Task fields naming objects, with the section they must resolve in.
struct RefField {
    const char* field;
    const char* section;
};
constexpr RefField kTaskRefs[] = {
    {"state", "states"},         {"measure", "measures"},   {"detector", "detectors"},
    {"scale", "scales"},         {"matrix", "matrices"},    {"smatrix", "smatrices"},
    {"calibration", "calibrations"}, {"problem", "maxent"}, {"in", "vectors"},
    {"out", "vectors"},          {"basis", "vectors"},      {"projector", "matrices"},
    {"states", "states"},        {"a", "matrices"},         {"b", "matrices"},
};

void require_ref(const json& objects, const char* section, const json& ref, const std::string& where) {
    if (!ref.is_string()) return;  // inline value
    const std::string name = ref.get<std::string>();
    if (!objects.contains(section) || !objects.at(section).contains(name)) {
        throw Error(ErrorCode::UnresolvedReference,
                    "'" + name + "' (" + where + ") is not defined in objects." + section);
    }
}

void require_refs(const json& objects, const char* section, const json& value, const std::string& where) {
    if (value.is_array()) {
        for (const auto& v : value) require_ref(objects, section, v, where);
    } else {
        require_ref(objects, section, value, where);
    }
}

void check_references(const ExperimentConfig& config) {
    const json& objects = config.objects;
    if (objects.contains("detectors")) {
        for (const auto& [name, det] : objects.at("detectors").items()) {
            if (!det.is_object() || !det.contains("measure") || !det.contains("scale")) {
                throw Error(ErrorCode::ParseError, "detector '" + name + "' needs measure and scale");
            }
            require_ref(objects, "measures", det.at("measure"), "detector " + name);
            require_ref(objects, "scales", det.at("scale"), "detector " + name);
        }
    }
    if (objects.contains("calibrations")) {
        for (const auto& [name, cal] : objects.at("calibrations").items()) {
            if (cal.is_object() && cal.contains("states")) {
                require_refs(objects, "states", cal.at("states"), "calibration " + name);
            }
        }
    }
    if (objects.contains("maxent")) {
        for (const auto& [name, p] : objects.at("maxent").items()) {
            if (p.is_object() && p.contains("operators")) {
                require_refs(objects, "matrices", p.at("operators"), "maxent " + name);
            }
        }
    }
    if (objects.contains("scales")) {
        for (const auto& [name, s] : objects.at("scales").items()) {
            if (!s.is_object() || !s.contains("multiplier") || !s.at("multiplier").is_object()) continue;
            const json& m = s.at("multiplier");
            if (m.contains("constant")) {
                const std::string c = m.at("constant").get<std::string>();
                if (!config.constants.contains(c)) {
                    throw Error(ErrorCode::UnresolvedReference, "'" + c + "' (scale " + name + ") is not a constant");
                }
            }
        }
    }
    for (std::size_t i = 0; i < config.tasks.size(); ++i) {
        const json& task = config.tasks[i];
        const std::string where = "task " + std::to_string(i);
        for (const auto& ref : kTaskRefs) {
            if (task.contains(ref.field)) require_refs(objects, ref.section, task.at(ref.field), where);
        }
    }
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::uint64_t default_seed() {
    const char* env = std::getenv("BORNKIT_SEED");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    return (end != nullptr && *end == '\0') ? static_cast<std::uint64_t>(v) : 0;
}

ExperimentConfig parse_config(const json& document) {
    if (!document.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
    ExperimentConfig config;
    if (!document.contains("version") || !document.at("version").is_string()) {
        throw Error(ErrorCode::ParseError, "config needs a string 'version' field");
    }
    config.version = document.at("version").get<std::string>();
    if (config.version != kConfigVersion) {
        throw Error(ErrorCode::ParseError, "unsupported config version '" + config.version + "'");
    }
    if (document.contains("constants")) {
        config.constants = document.at("constants");
        if (!config.constants.is_object()) throw Error(ErrorCode::ParseError, "'constants' must be an object");
        for (const auto& [name, v] : config.constants.items()) {
            if (!v.is_number()) throw Error(ErrorCode::ParseError, "constant '" + name + "' must be a number");
        }
    }
    if (document.contains("objects")) {
        config.objects = document.at("objects");
        if (!config.objects.is_object()) throw Error(ErrorCode::ParseError, "'objects' must be an object");
        for (const auto& [section, entries] : config.objects.items()) {
            if (!kSections.contains(section)) throw Error(ErrorCode::ParseError, "unknown object section '" + section + "'");
            if (!entries.is_object()) throw Error(ErrorCode::ParseError, "objects." + section + " must be an object");
        }
    }
    if (!document.contains("tasks") || !document.at("tasks").is_array()) {
        throw Error(ErrorCode::ParseError, "config needs a 'tasks' array");
    }
    for (const auto& t : document.at("tasks")) {
        if (!t.is_object() || !t.contains("kind") || !t.at("kind").is_string()) {
            throw Error(ErrorCode::ParseError, "every task needs a string 'kind'");
        }
        config.tasks.push_back(t);
    }
    config.hash = fnv1a_hex(document.dump());
    check_references(config);
    return config;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read config file '" + path + "'");
    json document;
    try {
        document = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return parse_config(document);
}

const json& Workspace::lookup(const char* section, const std::string& name) const {
    if (!config_.objects.contains(section) || !config_.objects.at(section).contains(name)) {
        throw Error(ErrorCode::UnresolvedReference, "'" + name + "' is not defined in objects." + section);
    }
    return config_.objects.at(section).at(name);
}

double Workspace::constant(const std::string& name) const {
    if (!config_.constants.contains(name)) {
        throw Error(ErrorCode::UnresolvedReference, "'" + name + "' is not a constant");
    }
    return config_.constants.at(name).get<double>();
}

ComplexMatrix Workspace::matrix_value(const json& j) const {
    if (j.is_string()) return matrix(j.get<std::string>());
    return io::matrix_from_json(j);
}

DensityOperator Workspace::state_value(const json& j) const {
    if (j.is_string()) return state(j.get<std::string>());
    return io::density_from_json(j);
}

DensityOperator Workspace::state(const std::string& name) const { return io::density_from_json(lookup("states", name)); }

StateVector Workspace::vector(const std::string& name) const {
    return StateVector(io::vector_from_json(lookup("vectors", name)));
}

ComplexMatrix Workspace::matrix(const std::string& name) const { return io::matrix_from_json(lookup("matrices", name)); }

QuantumMeasure Workspace::measure(const std::string& name) const {
    return io::measure_from_json(lookup("measures", name));
}

Scale Workspace::scale(const std::string& name) const {
    const json& j = lookup("scales", name);
    Scale base = io::scale_from_json(j);
    if (!j.contains("multiplier")) return base;
    const json& m = j.at("multiplier");
    double factor = 1.0;
    if (m.is_number()) {
        factor = m.get<double>();
    } else if (m.is_object()) {
        if (m.contains("constant")) factor *= constant(m.at("constant").get<std::string>());
        if (m.contains("factor")) factor *= m.at("factor").get<double>();
    } else {
        throw Error(ErrorCode::ParseError, "scale multiplier must be a number or {constant, factor}");
    }
    std::vector<ComplexVector> values;
    for (const auto& v : base.values()) values.push_back(factor * v);
    return Scale(std::move(values), base.units());
}

Detector Workspace::detector(const std::string& name) const {
    const json& j = lookup("detectors", name);
    const json& m = j.at("measure");
    const json& s = j.at("scale");
    QuantumMeasure qm = m.is_string() ? measure(m.get<std::string>()) : io::measure_from_json(m);
    Scale sc = s.is_string() ? scale(s.get<std::string>()) : io::scale_from_json(s);
    return Detector(std::move(qm), std::move(sc));
}

SMatrix Workspace::smatrix(const std::string& name) const { return io::smatrix_from_json(lookup("smatrices", name)); }

CalibrationSet Workspace::calibration(const std::string& name) const {
    const json& j = lookup("calibrations", name);
    if (!j.is_object() || !j.contains("states") || !j.contains("rates")) {
        throw Error(ErrorCode::ParseError, "calibration '" + name + "' needs states and rates");
    }
    json resolved = j;
    json states = json::array();
    for (const auto& s : j.at("states")) states.push_back(io::to_json(state_value(s).matrix()));
    resolved["states"] = states;
    return io::calibration_from_json(resolved);
}

MaxEntProblem Workspace::maxent_problem(const std::string& name) const {
    const json& j = lookup("maxent", name);
    json resolved = j;
    if (j.contains("operators")) {
        json ops = json::array();
        for (const auto& o : j.at("operators")) ops.push_back(io::to_json(matrix_value(o)));
        resolved["operators"] = ops;
    }
    return io::maxent_problem_from_json(resolved);
}

}  // namespace bornkit::cli
