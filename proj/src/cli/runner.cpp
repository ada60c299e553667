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

#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include "workspace.hpp"

namespace bornkit::cli {
namespace {

enum class Status { Ok, Failed, Error };

struct Outcome {
    json record;
    Status status = Status::Ok;
};

constexpr std::uint64_t kDefaultEvents = 100000;

std::string name_of(const json& task, const char* field) {
    if (!task.contains(field)) throw Error(ErrorCode::ParseError, std::string("task needs field '") + field + "'");
    const json& v = task.at(field);
    if (!v.is_string()) throw Error(ErrorCode::ParseError, std::string("field '") + field + "' must name an object");
    return v.get<std::string>();
}

std::uint64_t seed_of(const json& task, const Overrides& o) {
    if (o.seed) return *o.seed;
    if (task.contains("seed")) return task.at("seed").get<std::uint64_t>();
    return default_seed();
}

std::uint64_t events_of(const json& task, const Overrides& o) {
    if (o.n) return *o.n;
    return task.value("n", kDefaultEvents);
}

double tol_of(const json& task, const char* field, double fallback, const Overrides& o) {
    if (o.tol) return *o.tol;
    return task.value(field, fallback);
}

ComplexMatrix matrix_arg(const Workspace& ws, const json& v) {
    return v.is_string() ? ws.matrix(v.get<std::string>()) : io::matrix_from_json(v);
}

DensityOperator state_arg(const Workspace& ws, const json& v) {
    return v.is_string() ? ws.state(v.get<std::string>()) : io::density_from_json(v);
}

StateVector vector_arg(const Workspace& ws, const json& v) {
    return v.is_string() ? ws.vector(v.get<std::string>()) : StateVector(io::vector_from_json(v));
}

json task_validate(const Workspace& ws, const json& task, const Overrides& o) {
    json result = json::object();
    bool any = false;
    if (task.contains("state")) {
        const DensityOperator rho = state_arg(ws, task.at("state"));
        result["state"] = {{"dim", rho.dim()}, {"intensity", rho.intensity()}};
        any = true;
    }
    if (task.contains("measure")) {
        const QuantumMeasure m = ws.measure(name_of(task, "measure"));
        result["measure"] = {{"dim", m.dim()},
                             {"elements", m.size()},
                             {"projective", is_projective(m, tol_of(task, "tol", 1e-8, o))}};
        any = true;
    }
    if (task.contains("detector")) {
        const Detector d = ws.detector(name_of(task, "detector"));
        result["detector"] = {{"elements", d.measure.size()}, {"components", d.scale.components()}};
        any = true;
    }
    if (task.contains("smatrix")) {
        const SMatrix s = ws.smatrix(name_of(task, "smatrix"));
        result["smatrix"] = {{"dim", s.dim()}, {"unitarity_deviation", unitarity_deviation(s.matrix())}};
        any = true;
    }
    if (task.contains("calibration")) {
        const CalibrationSet c = ws.calibration(name_of(task, "calibration"));
        const CompletenessReport r = informational_completeness(c.states);
        result["calibration"] = {{"rank", r.rank}, {"required", r.required}, {"complete", r.complete}};
        any = true;
    }
    if (!any) throw Error(ErrorCode::ParseError, "validate task names no object");
    result["valid"] = true;
    return result;
}

json task_rates(const Workspace& ws, const json& task) {
    const QuantumMeasure m =
        task.contains("detector") ? ws.detector(name_of(task, "detector")).measure : ws.measure(name_of(task, "measure"));
    const DensityOperator rho = state_arg(ws, task.at("state"));
    const RealVector p = response_rates(m, rho);
    json result = {{"labels", m.labels()}, {"rates", io::to_json(p)}, {"intensity", rho.intensity()}};
    if (!rho.is_empty()) result["probabilities"] = io::to_json(RealVector(p / rho.intensity()));
    return result;
}

json task_sample(const Workspace& ws, const json& task, const Overrides& o) {
    const std::string name = name_of(task, "detector");
    const Detector d = ws.detector(name);
    const DensityOperator rho = state_arg(ws, task.at("state"));
    const EventLog log = sample_events(d, rho, events_of(task, o), seed_of(task, o), name);
    return {{"event_log", io::to_json(log)}, {"frequencies", io::to_json(empirical_rates(log))}};
}

json task_verify(const Workspace& ws, const json& task, const Overrides& o, Status& status) {
    const std::string mode = task.value("mode", std::string("povm"));
    const Detector d = ws.detector(name_of(task, "detector"));
    const DensityOperator rho = state_arg(ws, task.at("state"));
    const std::uint64_t n = events_of(task, o);
    const std::uint64_t seed = seed_of(task, o);
    const double k_sigma = task.value("k_sigma", 5.0);
    VerificationReport report;
    if (mode == "povm") {
        if (task.contains("expected")) {
            const auto expected = task.at("expected").get<std::vector<double>>();
            if (n < 100) throw Error(ErrorCode::InvalidArgument, "verification needs n >= 100");
            report = verify_frequencies(sample_events(d, rho, n, seed), expected, k_sigma);
        } else {
            report = verify_born_povm(d, rho, n, seed, k_sigma);
        }
    } else if (mode == "c") {
        report = verify_born_c(d, rho, n, seed, k_sigma);
    } else {
        throw Error(ErrorCode::ParseError, "verify-born mode must be 'povm' or 'c'");
    }
    if (!report.passed) status = Status::Failed;
    return {{"mode", mode}, {"verification", io::to_json(report)}};
}

json task_spectral(const Workspace& ws, const json& task, const Overrides& o) {
    ComplexMatrix x;
    if (task.contains("matrix")) {
        x = matrix_arg(ws, task.at("matrix"));
    } else if (task.contains("detector")) {
        const auto quantity = measured_quantity(ws.detector(name_of(task, "detector")));
        const auto component = task.value("component", std::size_t{0});
        if (component >= quantity.size()) throw Error(ErrorCode::InvalidArgument, "scale component out of range");
        x = quantity[component];
    } else {
        throw Error(ErrorCode::ParseError, "spectral task needs 'matrix' or 'detector'");
    }
    const SpectralDecomposition dec = spectral_measure(x, tol_of(task, "cluster_tol", 1e-8, o));
    ComplexMatrix rebuilt = ComplexMatrix::Zero(x.rows(), x.cols());
    for (std::size_t k = 0; k < dec.eigenvalues.size(); ++k) rebuilt += dec.eigenvalues[k] * dec.projectors.element(k);
    return {{"decomposition", io::to_json(dec)},
            {"hermitian", dec.hermitian},
            {"reconstruction_error", (rebuilt - x).norm()}};
}

json task_dilate(const Workspace& ws, const json& task) {
    const QuantumMeasure m = ws.measure(name_of(task, "measure"));
    const std::string kind = task.value("variant", std::string("block"));
    DilationKind dk = DilationKind::Block;
    if (kind == "rank_trimmed") {
        dk = DilationKind::RankTrimmed;
    } else if (kind != "block") {
        throw Error(ErrorCode::ParseError, "dilation variant must be 'block' or 'rank_trimmed'");
    }
    const Dilation dil = naimark_dilate(m, dk);
    json result = {{"dilation", io::to_json(dil)},
                   {"dilated_dim", dil.projective_measure.dim()},
                   {"isometry_deviation", isometry_deviation(dil)},
                   {"reconstruction_deviation", reconstruction_deviation(dil, m)},
                   {"projective", is_projective(dil.projective_measure, 1e-10)}};
    if (task.contains("state")) {
        const DensityOperator rho = state_arg(ws, task.at("state"));
        const RealVector lifted = dilated_rates(dil, rho);
        const RealVector direct = response_rates(m, rho);
        result["dilated_rates"] = io::to_json(lifted);
        result["direct_rates"] = io::to_json(direct);
        result["max_rate_deviation"] = (lifted - direct).cwiseAbs().maxCoeff();
    }
    return result;
}

json task_tomo(const Workspace& ws, const json& task, const Overrides& o) {
    TomographyOptions options;
    options.exit_tol = tol_of(task, "exit_tol", options.exit_tol, o);
    std::optional<QuantumMeasure> truth;
    CalibrationSet cal;
    if (task.contains("calibration")) {
        cal = ws.calibration(name_of(task, "calibration"));
    } else {
        truth = ws.measure(name_of(task, "measure"));
        std::vector<DensityOperator> states;
        if (task.contains("states")) {
            for (const auto& s : task.at("states")) states.push_back(state_arg(ws, s));
        } else {
            states = standard_calibration_states(truth->dim());
        }
        const std::uint64_t n = task.contains("n") ? events_of(task, o) : 0;
        cal = simulate_calibration(states, *truth, n, seed_of(task, o));
        options.labels = truth->labels();
    }
    const CompletenessReport completeness = informational_completeness(cal.states);
    const TomographyResult r = reconstruct_measure(cal, options);
    json result = {{"measure", io::to_json(r.measure)},
                   {"residual", r.residual},
                   {"projection_distance", r.projection_distance},
                   {"iterations", r.iterations},
                   {"rank", completeness.rank}};
    if (truth) {
        double worst = 0.0;
        for (std::size_t k = 0; k < truth->size(); ++k) {
            worst = std::max(worst, (r.measure.element(k) - truth->element(k)).norm());
        }
        result["max_element_error"] = worst;
    }
    return result;
}

json task_maxent(const Workspace& ws, const json& task, const Overrides& o) {
    MaxEntProblem p = ws.maxent_problem(name_of(task, "problem"));
    p.tolerance = tol_of(task, "tolerance", p.tolerance, o);
    const MaxEntResult r = maxent_state(p);
    std::vector<double> achieved;
    for (const auto& x : p.operators) achieved.push_back(quantum_value(r.state, x).real());
    return {{"state", io::to_json(r.state.matrix())},
            {"multipliers", io::to_json(r.multipliers)},
            {"achieved", achieved},
            {"iterations", r.iterations},
            {"entropy", r.entropy},
            {"max_constraint_error", r.max_constraint_error}};
}

json task_scatter(const Workspace& ws, const json& task) {
    const SMatrix s = ws.smatrix(name_of(task, "smatrix"));
    const StateVector in = vector_arg(ws, task.at("in"));
    json result = {{"unitarity_deviation", unitarity_deviation(s.matrix())}};
    bool any = false;
    if (task.contains("out")) {
        const TransitionProbability tp = transition_probability(s.matrix(), in, vector_arg(ws, task.at("out")));
        result["probability"] = tp.value;
        any = true;
    }
    if (task.contains("basis") || task.value("distribution", false)) {
        std::vector<ComplexVector> basis;
        json labels = json::array();
        if (task.contains("basis")) {
            for (const auto& v : task.at("basis")) {
                basis.push_back(vector_arg(ws, v).amplitudes());
                labels.push_back(v.is_string() ? v : json(std::to_string(basis.size() - 1)));
            }
        } else {
            const auto d = static_cast<Eigen::Index>(s.dim());
            for (Eigen::Index i = 0; i < d; ++i) basis.push_back(ComplexVector::Unit(d, i));
            labels = s.channel_labels();
        }
        const RealVector p = transition_distribution(s, in, basis);
        result["distribution"] = io::to_json(p);
        result["channels"] = labels;
        result["total"] = p.sum();
        any = true;
    }
    if (task.contains("projector")) {
        result["channel_probability"] = degenerate_channel_probability(s, in, matrix_arg(ws, task.at("projector")));
        any = true;
    }
    if (!any) throw Error(ErrorCode::ParseError, "scatter task needs 'out', 'basis', 'distribution' or 'projector'");
    return result;
}

json task_uncertainty(const Workspace& ws, const json& task, Status& status) {
    const DensityOperator rho = state_arg(ws, task.at("state"));
    const UncertaintyReport r =
        uncertainty_product_report(rho, matrix_arg(ws, task.at("a")), matrix_arg(ws, task.at("b")));
    const bool holds = r.sigma_a * r.sigma_b >= r.commutator_bound - 1e-10;
    if (!holds) status = Status::Failed;
    return {{"sigma_a", r.sigma_a}, {"sigma_b", r.sigma_b}, {"commutator_bound", r.commutator_bound}, {"holds", holds}};
}

json dispatch(const Workspace& ws, const json& task, const Overrides& o, Status& status) {
    const std::string kind = task.at("kind").get<std::string>();
    if (kind == "validate") return task_validate(ws, task, o);
    if (kind == "rates") return task_rates(ws, task);
    if (kind == "sample") return task_sample(ws, task, o);
    if (kind == "verify-born") return task_verify(ws, task, o, status);
    if (kind == "spectral") return task_spectral(ws, task, o);
    if (kind == "dilate") return task_dilate(ws, task);
    if (kind == "tomo") return task_tomo(ws, task, o);
    if (kind == "maxent") return task_maxent(ws, task, o);
    if (kind == "scatter") return task_scatter(ws, task);
    if (kind == "uncertainty") return task_uncertainty(ws, task, status);
    throw Error(ErrorCode::ParseError, "unknown task kind '" + kind + "'");
}

json error_json(ErrorCode code, const std::string& message) {
    return {{"code", std::string(error_code_name(code))}, {"message", message}};
}

Outcome run_task(const Workspace& ws, const json& task, std::size_t index, const Overrides& o) {
    Outcome out;
    out.record = {{"id", task.value("id", "task" + std::to_string(index))}, {"kind", task.at("kind")}};
    try {
        Status status = Status::Ok;
        json result = io::parse_guard("task parameters", [&] { return dispatch(ws, task, o, status); });
        out.status = status;
        out.record["status"] = status == Status::Ok ? "ok" : "failed";
        out.record["result"] = std::move(result);
    } catch (const Error& e) {
        out.status = Status::Error;
        out.record["status"] = "error";
        out.record["error"] = error_json(e.code(), e.what());
    } catch (const std::exception& e) {
        out.status = Status::Error;
        out.record["status"] = "error";
        out.record["error"] = error_json(ErrorCode::InvalidArgument, e.what());
    }
    return out;
}

json base_report(const std::string& hash, const Overrides& o) {
    json report = {{"toolkit_version", kToolkitVersion}, {"config_version", kConfigVersion}, {"config_hash", hash}};
    json ov = json::object();
    if (o.seed) ov["seed"] = *o.seed;
    if (o.n) ov["n"] = *o.n;
    if (o.tol) ov["tol"] = *o.tol;
    report["overrides"] = ov;
    return report;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string format_value(const json& v) {
    if (v.is_number()) return format_number(v.get<double>());
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        const double re = v[0].get<double>();
        const double im = v[1].get<double>();
        if (im == 0.0) return format_number(re);
        return format_number(re) + (im < 0 ? "-" : "+") + format_number(std::abs(im)) + "i";
    }
    return v.dump();
}

std::string format_list(const json& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += format_value(values[i]);
    }
    return out + ")";
}

}  // namespace

RunResult run_config(const ExperimentConfig& config, const Overrides& overrides, const std::optional<std::string>& kind,
                     const std::optional<std::string>& mode) {
    const auto start = std::chrono::steady_clock::now();
    const Workspace ws(config);

    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < config.tasks.size(); ++i) {
        const json& t = config.tasks[i];
        if (kind && t.at("kind").get<std::string>() != *kind) continue;
        if (mode && t.value("mode", std::string("povm")) != *mode) continue;
        selected.push_back(i);
    }

    std::vector<Outcome> outcomes(selected.size());
    if (overrides.parallel) {
        std::vector<std::future<Outcome>> futures;
        for (std::size_t i : selected) {
            futures.push_back(std::async(std::launch::async, [&, i] { return run_task(ws, config.tasks[i], i, overrides); }));
        }
        for (std::size_t i = 0; i < futures.size(); ++i) outcomes[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < selected.size(); ++i) {
            outcomes[i] = run_task(ws, config.tasks[selected[i]], selected[i], overrides);
        }
    }

    RunResult result;
    result.report = base_report(config.hash, overrides);
    if (kind) result.report["filter"] = *kind;
    json records = json::array();
    bool error = false;
    bool failed = false;
    for (auto& o : outcomes) {
        error = error || o.status == Status::Error;
        failed = failed || o.status == Status::Failed;
        records.push_back(std::move(o.record));
    }
    if (kind && selected.empty()) {
        result.report["error"] = error_json(ErrorCode::InvalidArgument, "config has no '" + *kind + "' tasks");
        error = true;
    }
    result.exit_code = error ? kExitConfigError : failed ? kExitVerificationFailed : kExitOk;
    result.report["results"] = std::move(records);
    result.report["exit_code"] = result.exit_code;
    result.report["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

RunResult run(const std::string& config_path, const std::string& output_path, const Overrides& overrides,
              const std::optional<std::string>& kind, const std::optional<std::string>& mode) {
    RunResult result;
    try {
        result = run_config(load_config(config_path), overrides, kind, mode);
    } catch (const Error& e) {
        result.report = base_report("", overrides);
        result.report["error"] = error_json(e.code(), e.what());
        result.report["results"] = json::array();
        result.report["exit_code"] = kExitConfigError;
        result.report["wall_time_s"] = 0.0;
        result.exit_code = kExitConfigError;
    }
    if (!output_path.empty()) {
        std::ofstream out(output_path);
        if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write report to '" + output_path + "'");
        out << dump_report(result.report);
    }
    return result;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

std::string pretty_report(const json& report) {
    std::ostringstream out;
    out << "bornkit " << report.value("toolkit_version", "?") << "  config " << report.value("config_hash", "")
        << "  exit " << report.value("exit_code", -1) << "\n";
    if (report.contains("error")) {
        out << "error: " << report.at("error").value("message", "") << "\n";
    }
    if (!report.contains("results")) return out.str();
    for (const auto& r : report.at("results")) {
        out << "[" << r.value("status", "?") << "] " << r.value("id", "") << " (" << r.value("kind", "") << ")\n";
        if (r.contains("error")) {
            out << "    " << r.at("error").value("message", "") << "\n";
            continue;
        }
        const json& res = r.at("result");
        const std::string kind = r.value("kind", "");
        if (kind == "rates") {
            out << "    rates " << format_list(res.at("rates")) << "\n";
        } else if (kind == "sample") {
            out << "    counts " << res.at("event_log").at("counts").dump() << "\n";
            out << "    frequencies " << format_list(res.at("frequencies")) << "\n";
        } else if (kind == "verify-born") {
            const json& v = res.at("verification");
            out << "    mode " << res.value("mode", "") << ", n " << v.value("n", 0) << ", passed "
                << (v.value("passed", false) ? "yes" : "no") << "\n";
            out << "    deviations " << format_list(v.at("deviations")) << "\n";
            out << "    bounds     " << format_list(v.at("bounds")) << "\n";
        } else if (kind == "spectral") {
            out << "    eigenvalues " << format_list(res.at("decomposition").at("eigenvalues")) << "\n";
            out << "    reconstruction error " << format_number(res.at("reconstruction_error").get<double>()) << "\n";
        } else if (kind == "dilate") {
            out << "    dilated dim " << res.value("dilated_dim", 0) << ", isometry deviation "
                << format_number(res.at("isometry_deviation").get<double>()) << ", reconstruction deviation "
                << format_number(res.at("reconstruction_deviation").get<double>()) << "\n";
        } else if (kind == "tomo") {
            out << "    residual " << format_number(res.at("residual").get<double>()) << ", iterations "
                << res.value("iterations", 0) << "\n";
            if (res.contains("max_element_error")) {
                out << "    max element error " << format_number(res.at("max_element_error").get<double>()) << "\n";
            }
        } else if (kind == "maxent") {
            out << "    achieved " << format_list(res.at("achieved")) << ", entropy "
                << format_number(res.at("entropy").get<double>()) << "\n";
        } else if (kind == "scatter") {
            if (res.contains("probability")) out << "    probability " << format_value(res.at("probability")) << "\n";
            if (res.contains("distribution")) out << "    distribution " << format_list(res.at("distribution")) << "\n";
            if (res.contains("channel_probability")) {
                out << "    channel probability " << format_value(res.at("channel_probability")) << "\n";
            }
        } else {
            out << "    " << res.dump() << "\n";
        }
    }
    return out.str();
}

}  // namespace bornkit::cli
