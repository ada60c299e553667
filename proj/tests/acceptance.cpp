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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bornkit/cli.hpp"
#include "bornkit/error.hpp"
#include "bornkit/io.hpp"
#include "bornkit/random.hpp"
#include "oracles.hpp"

using namespace bornkit;

namespace {

const std::string kData = BORNKIT_TEST_DATA;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && passed) detail << "first failure: " << what << "; ";
        passed = passed && ok;
    }
};

template <typename Fn>
bool raises(ErrorCode code, Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

DensityOperator ket(Complex a, Complex b) {
    ComplexVector v(2);
    v << a, b;
    return pure_state(StateVector(v));
}

double max_element_error(const QuantumMeasure& a, const QuantumMeasure& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, (a.element(k) - b.element(k)).norm());
    return worst;
}

void measure_validity(Outcome& out) {
    Xoshiro256StarStar rng(1001);
    double worst_sum = 0.0, worst_rate = 0.0, worst_lin = 0.0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t d = random::uniform_int(2, 6, rng);
        const auto m = random::measure(d, random::uniform_int(1, 6, rng), rng);
        const auto rho = random::density(d, rng, 0.1 + 4.9 * rng.uniform());
        double sum = 0.0;
        for (std::size_t k = 0; k < m.size(); ++k) {
            const double p = oracle::trace_of_product(rho.matrix(), m.element(k)).real();
            worst_rate = std::min(worst_rate, p);
            sum += p;
        }
        worst_sum = std::max(worst_sum, std::abs(sum - rho.intensity()) / rho.intensity());
        const RealVector rates = response_rates(m, rho);
        worst_sum = std::max(worst_sum, std::abs(rates.sum() - rho.intensity()) / rho.intensity());
        const auto rep = drp_linearity_report(m, rho, random::density(d, rng), 3.0 * rng.uniform(), 3.0 * rng.uniform());
        worst_lin = std::max(worst_lin, rep.linearity_deviation);
    }
    out.require(worst_sum <= 1e-10, "completeness");
    out.require(worst_rate >= -1e-12, "nonnegativity");
    out.require(worst_lin <= 1e-10, "linearity");
    out.detail << "max rel completeness " << worst_sum << ", min rate " << worst_rate << ", max linearity " << worst_lin;
}

void born_povm_sampling(Outcome& out) {
    const double s = 1.0 / std::sqrt(2.0);
    const std::vector<DensityOperator> states = {ket(1.0, 0.0), ket(s, s),
                                                 make_density(ComplexMatrix::Identity(2, 2) / 2.0)};
    const std::vector<Detector> detectors = {
        Detector(measures::computational_basis(2), Scale::real({1.0, -1.0})),
        Detector(measures::trine(), measures::trine_bloch_scale())};
    const double n = 1e5;
    std::uint64_t seed = 2001;
    double worst_ratio = 0.0;
    for (const auto& det : detectors) {
        for (const auto& rho : states) {
            const auto log = sample_events(det, rho, static_cast<std::uint64_t>(n), seed++);
            const RealVector f = empirical_rates(log);
            for (std::size_t k = 0; k < det.measure.size(); ++k) {
                const double q = oracle::trace_of_product(rho.matrix(), det.measure.element(k)).real();
                const double dev = std::abs(f(static_cast<Eigen::Index>(k)) - q);
                worst_ratio = std::max(worst_ratio, dev / oracle::binomial_bound(q, n));
            }
            out.require(verify_born_povm(det, rho, static_cast<std::uint64_t>(n), seed - 1).passed, "report pass flag");
        }
    }
    out.require(worst_ratio <= 1.0, "frequency within 5 sigma");

    const auto trine_log = sample_events(detectors[1], states[0], static_cast<std::uint64_t>(n), 2101);
    const RealVector tf = empirical_rates(trine_log);
    const auto tq = oracle::trine_rates_on_zero();
    for (int k = 0; k < 3; ++k)
        out.require(std::abs(tf(k) - tq[static_cast<std::size_t>(k)]) <= oracle::binomial_bound(tq[static_cast<std::size_t>(k)], n),
                    "trine on |0> near (2/3, 1/6, 1/6)");

    const auto mixed_log = sample_events(detectors[0], states[2], static_cast<std::uint64_t>(n), 42);
    const std::vector<double> wrong = {0.6, 0.4};
    const bool adversarial_failed = !verify_frequencies(mixed_log, wrong).passed;
    out.require(adversarial_failed, "adversarial fixture must fail");
    const auto cli = cli::run(kData + "/corrupted_rates.json", "", {});
    out.require(cli.exit_code == cli::kExitVerificationFailed, "corrupted config exits 2");
    out.detail << "max deviation/bound " << worst_ratio << ", adversarial rejected " << (adversarial_failed ? "yes" : "no");
}

void born_c_sampling(Outcome& out) {
    Xoshiro256StarStar rng(3001);
    const std::uint64_t n = 100000;
    double worst_ratio = 0.0;
    int complex_vector_cases = 0;
    for (int i = 0; i < 20; ++i) {
        const std::size_t d = random::uniform_int(2, 4, rng);
        const auto m = random::measure(d, random::uniform_int(2, 5, rng), rng);
        const std::size_t comps = i % 2 == 0 ? 3 : 1;
        std::vector<ComplexVector> values;
        for (std::size_t k = 0; k < m.size(); ++k) values.push_back(random::ginibre(comps, 1, rng).col(0));
        if (comps > 1) ++complex_vector_cases;
        const Detector det(m, Scale(values, ""));
        const auto rho = random::density(d, rng, 0.5 + rng.uniform());
        const auto log = sample_events(det, rho, n, 3100 + static_cast<std::uint64_t>(i));
        const auto quantity = measured_quantity(det);
        for (std::size_t j = 0; j < comps; ++j) {
            const auto jj = static_cast<Eigen::Index>(j);
            Complex mean = 0.0;
            for (std::size_t k = 0; k < m.size(); ++k) mean += static_cast<double>(log.counts[k]) * values[k](jj);
            mean /= static_cast<double>(n);
            double var = 0.0;
            for (std::size_t k = 0; k < m.size(); ++k)
                var += static_cast<double>(log.counts[k]) * std::norm(values[k](jj) - mean);
            var /= static_cast<double>(n);
            const Complex expected = oracle::trace_of_product(rho.matrix(), quantity[j]) / rho.intensity();
            const double bound = 5.0 * std::sqrt(var) / std::sqrt(static_cast<double>(n));
            worst_ratio = std::max(worst_ratio, std::abs(mean - expected) / bound);
        }
        out.require(verify_mean(det, rho, log).passed, "report pass flag");
    }
    out.require(worst_ratio <= 1.0, "mean within 5 std / sqrt(n)");
    out.require(complex_vector_cases > 0, "complex-vector scale covered");
    out.detail << "max deviation/bound " << worst_ratio << " over 20 pairs (" << complex_vector_cases
               << " with complex 3-vector scales)";
}

void spectral_round_trip(Outcome& out) {
    Xoshiro256StarStar rng(4001);
    double worst_rec = 0.0, worst_orth = 0.0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t d = random::uniform_int(2, 8, rng);
        const ComplexMatrix x = random::hermitian(d, rng);
        const auto s = spectral_measure(x);
        const auto q = measured_quantity(Detector(s.projectors, eigenvalue_scale(s)));
        worst_rec = std::max(worst_rec, (q[0] - x).norm());
        for (std::size_t j = 0; j < s.projectors.size(); ++j) {
            for (std::size_t k = 0; k < s.projectors.size(); ++k) {
                const ComplexMatrix& pk = s.projectors.element(k);
                const ComplexMatrix target = j == k ? pk : ComplexMatrix::Zero(pk.rows(), pk.cols());
                worst_orth = std::max(worst_orth, (s.projectors.element(j) * pk - target).norm());
            }
        }
    }
    const auto degenerate = spectral_measure(oracle::diag({2.0, 2.0, 5.0}));
    out.require(worst_rec <= 1e-9, "reconstruction");
    out.require(worst_orth <= 1e-8, "orthogonality");
    out.require(degenerate.eigenvalues.size() == 2, "diag(2,2,5) has 2 clusters");
    out.detail << "max reconstruction " << worst_rec << ", max orthogonality " << worst_orth
               << ", degenerate clusters " << degenerate.eigenvalues.size();
}

void naimark(Outcome& out) {
    Xoshiro256StarStar rng(5001);
    double worst_rate = 0.0, worst_iso = 0.0, worst_proj = 0.0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t d = random::uniform_int(2, 4, rng);
        const auto m = random::measure(d, random::uniform_int(1, 5, rng), rng);
        const auto dl = naimark_dilate(m);
        const auto rho = random::density(d, rng);
        const ComplexMatrix lifted = dl.isometry * rho.matrix() * dl.isometry.adjoint();
        const RealVector rates = dilated_rates(dl, rho);
        for (std::size_t k = 0; k < m.size(); ++k) {
            const double direct = oracle::trace_of_product(rho.matrix(), m.element(k)).real();
            const double via_lift = oracle::trace_of_product(lifted, dl.projective_measure.element(k)).real();
            worst_rate = std::max({worst_rate, std::abs(rates(static_cast<Eigen::Index>(k)) - direct),
                                   std::abs(via_lift - direct)});
        }
        worst_iso = std::max(worst_iso, isometry_deviation(dl));
        const auto& pm = dl.projective_measure;
        for (std::size_t j = 0; j < pm.size(); ++j) {
            for (std::size_t k = 0; k < pm.size(); ++k) {
                const ComplexMatrix& pk = pm.element(k);
                const ComplexMatrix target = j == k ? pk : ComplexMatrix::Zero(pk.rows(), pk.cols());
                worst_proj = std::max(worst_proj, (pm.element(j) * pk - target).norm());
            }
        }
    }
    out.require(worst_rate <= 1e-9, "rates");
    out.require(worst_iso <= 1e-10, "isometry");
    out.require(worst_proj <= 1e-10, "projectivity");
    out.detail << "max rate diff " << worst_rate << ", max |V*V - I| " << worst_iso << ", max lift defect " << worst_proj;
}

void tomography(Outcome& out) {
    Xoshiro256StarStar rng(6001);
    double worst_exact = 0.0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = random::uniform_int(2, 3, rng);
        const auto m = random::measure(d, random::uniform_int(1, 4, rng), rng);
        const auto res = reconstruct_measure(simulate_calibration(standard_calibration_states(d), m));
        worst_exact = std::max(worst_exact, max_element_error(res.measure, m));
    }
    const std::vector<DensityOperator> deficient = {make_density(ComplexMatrix::Identity(2, 2) / 2.0),
                                                    ket(1.0, 0.0), ket(0.0, 1.0)};
    const bool rank_raised = raises(ErrorCode::RankDeficient, [&] {
        reconstruct_measure(simulate_calibration(deficient, measures::computational_basis(2)));
    });
    const double n = 1e6;
    double worst_sampled = 0.0;
    for (int i = 0; i < 4; ++i) {
        const std::size_t d = 2 + static_cast<std::size_t>(i % 2);
        const auto m = random::measure(d, random::uniform_int(2, 4, rng), rng);
        const auto res = reconstruct_measure(
            simulate_calibration(standard_calibration_states(d), m, static_cast<std::uint64_t>(n), 6100 + static_cast<std::uint64_t>(i)));
        worst_sampled = std::max(worst_sampled, max_element_error(res.measure, m));
    }
    out.require(worst_exact <= 1e-7, "exact-rate recovery");
    out.require(rank_raised, "RankDeficient");
    out.require(worst_sampled <= 20.0 / std::sqrt(n), "sampled recovery");
    out.detail << "exact max error " << worst_exact << ", sampled max error " << worst_sampled << " (bound "
               << 20.0 / std::sqrt(n) << "), rank-deficient raised " << (rank_raised ? "yes" : "no");
}

void maxent(Outcome& out) {
    MaxEntProblem p;
    p.dim = 2;
    p.operators = {pauli::z()};
    p.targets = {0.5};
    const auto half = maxent_state(p);
    const double half_err = max_abs_entry(half.state.matrix() - oracle::maxent_sigma_z(0.5));
    const double literal_err = max_abs_entry(half.state.matrix() - oracle::diag({0.75, 0.25}));

    double uniform_err = 0.0;
    for (std::size_t d = 1; d <= 6; ++d) {
        MaxEntProblem u;
        u.dim = d;
        const auto n = static_cast<Eigen::Index>(d);
        uniform_err = std::max(uniform_err, max_abs_entry(maxent_state(u).state.matrix() -
                                                          ComplexMatrix::Identity(n, n) / static_cast<double>(d)));
    }

    p.targets = {2.0};
    const bool infeasible = raises(ErrorCode::Infeasible, [&] { maxent_state(p); });

    Xoshiro256StarStar rng(7001);
    double pauli_err = 0.0;
    for (int i = 0; i < 10; ++i) {
        const auto rho0 = random::density(2, rng);
        MaxEntProblem q;
        q.dim = 2;
        q.operators = {pauli::x(), pauli::y(), pauli::z()};
        for (const auto& x : q.operators) q.targets.push_back(oracle::trace_of_product(rho0.matrix(), x).real());
        pauli_err = std::max(pauli_err, max_abs_entry(maxent_state(q).state.matrix() - rho0.matrix()));
    }
    out.require(half_err <= 1e-8 && literal_err <= 1e-8, "sigma_z = 0.5");
    out.require(uniform_err <= 1e-12, "no-constraint uniform state");
    out.require(infeasible, "Infeasible");
    out.require(pauli_err <= 1e-7, "Pauli recovery");
    out.detail << "closed-form error " << half_err << ", uniform error " << uniform_err << ", Pauli recovery error "
               << pauli_err << ", infeasible raised " << (infeasible ? "yes" : "no");
}

void scattering(Outcome& out) {
    Xoshiro256StarStar rng(8001);
    double worst_sum = 0.0, worst_basis = 0.0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t d = random::uniform_int(2, 8, rng);
        const auto s = make_smatrix(random::unitary(d, rng));
        const StateVector psi(random::unit_vector(d, rng));
        const ComplexMatrix basis = random::unitary(d, rng);
        std::vector<ComplexVector> cols;
        for (Eigen::Index c = 0; c < basis.cols(); ++c) cols.push_back(basis.col(c));
        worst_sum = std::max(worst_sum, std::abs(transition_distribution(s, psi, cols).sum() - 1.0));

        const std::size_t r = random::uniform_int(1, d, rng);
        const ComplexMatrix frame = basis.leftCols(static_cast<Eigen::Index>(r));
        const ComplexMatrix rotated = frame * random::unitary(r, rng);
        double a = 0.0, b = 0.0;
        for (Eigen::Index c = 0; c < frame.cols(); ++c) {
            a += transition_probability(s.matrix(), psi, StateVector(frame.col(c))).value;
            b += transition_probability(s.matrix(), psi, StateVector(rotated.col(c))).value;
        }
        const double via_projector = degenerate_channel_probability(s, psi, frame * frame.adjoint());
        worst_basis = std::max({worst_basis, std::abs(a - b), std::abs(a - via_projector)});
    }

    ComplexMatrix h(2, 2);
    h << 1.0, 1.0, 1.0, -1.0;
    h /= std::sqrt(2.0);
    ComplexVector e1(2);
    e1 << 1.0, 0.0;
    const double had = transition_probability(h, StateVector(e1), StateVector(e1)).value;

    // Stern-Gerlach detector from the config, with hbar as a config constant.
    const auto config = cli::load_config(kData + "/golden_config.json");
    const double hbar = config.constants.at("hbar").get<double>();
    const auto sg = cli::run_config(config, {}, "spectral");
    std::vector<double> eig;
    for (const auto& r : sg.report.at("results")) {
        if (r.at("id") != "stern-gerlach") continue;
        for (const auto& v : r.at("result").at("decomposition").at("eigenvalues")) eig.push_back(v[0].get<double>());
    }
    const bool sg_ok = eig.size() == 2 && std::abs(eig[0] / (hbar / 2.0) - 1.0) <= 1e-12 &&
                       std::abs(eig[1] / (hbar / 2.0) + 1.0) <= 1e-12;

    out.require(worst_sum <= 1e-10, "distribution sums");
    out.require(worst_basis <= 1e-10, "basis independence");
    out.require(std::abs(had - 0.5) <= 1e-12, "Hadamard 1/2");
    out.require(sg_ok, "Stern-Gerlach eigenvalues");
    out.detail << "max |sum - 1| " << worst_sum << ", max basis dependence " << worst_basis << ", Hadamard " << had
               << ", Stern-Gerlach " << (eig.size() == 2 ? eig[0] : 0.0) << " / " << (eig.size() == 2 ? eig[1] : 0.0)
               << " with hbar = " << hbar;
}

void uncertainty_relation(Outcome& out) {
    Xoshiro256StarStar rng(9001);
    double worst_gap = 1e300;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t d = random::uniform_int(2, 6, rng);
        const auto rho = i % 2 ? random::density(d, rng) : random::pure_density(d, rng);
        const auto r = uncertainty_product_report(rho, random::hermitian(d, rng), random::hermitian(d, rng));
        worst_gap = std::min(worst_gap, r.sigma_a * r.sigma_b - r.commutator_bound);
    }
    out.require(worst_gap >= -1e-10, "Robertson bound");
    out.detail << "min sigma_A sigma_B - bound " << worst_gap;
}

void cli_determinism(Outcome& out) {
    const auto config = cli::load_config(kData + "/golden_config.json");
    auto strip = [](cli::json report) {
        report.erase("wall_time_s");
        return cli::dump_report(report);
    };
    const auto a = cli::run_config(config, {});
    const auto b = cli::run_config(config, {});
    std::ifstream in(kData + "/golden_report.json");
    const bool have_golden = static_cast<bool>(in);
    std::string golden;
    if (have_golden) golden = strip(cli::json::parse(in));
    const std::string ra = strip(a.report), rb = strip(b.report);
    out.require(a.exit_code == cli::kExitOk, "golden config exits 0");
    out.require(ra == rb, "two runs identical");
    out.require(have_golden && ra == golden, "matches checked-in golden report");
    out.detail << "report " << ra.size() << " bytes, runs identical " << (ra == rb ? "yes" : "no")
               << ", golden match " << (have_golden && ra == golden ? "yes" : "no");
}

struct Criterion {
    const char* name;
    double limit_s;
    std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"measure validity and DRP", 10.0, measure_validity},
        {"sampled frequencies", 5.0, born_povm_sampling},
        {"sampled scale means", 10.0, born_c_sampling},
        {"spectral round-trip", 10.0, spectral_round_trip},
        {"Naimark dilation", 10.0, naimark},
        {"tomography oracle", 60.0, tomography},
        {"maximum entropy", 5.0, maxent},
        {"scattering", 5.0, scattering},
        {"uncertainty relation", 5.0, uncertainty_relation},
        {"CLI determinism", 5.0, cli_determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].body(out);
        } catch (const std::exception& e) {
            out.passed = false;
            out.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < criteria[i].limit_s;
        const bool ok = out.passed && in_time;
        if (!ok) ++failures;
        std::printf("%s %2zu %-26s %7.3f s (limit %g s)  %s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                    criteria[i].limit_s, out.detail.str().c_str(), in_time ? "" : " [over time limit]");
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
    return failures == 0 ? 0 : 1;
}
