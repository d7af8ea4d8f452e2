// Copyright 2026 The Holonomic Gates Authors
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

// Subcommands of the `holonomic` tool. Kept in a header so the test suite
// can drive them in-process and inspect exit codes and output.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or validation error,
// 3 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holonomic/evolution.hpp"
#include "holonomic/model.hpp"
#include "holonomic/record.hpp"
#include "holonomic/su2.hpp"
#include "holonomic/synthesis.hpp"
#include "holonomic/trajectory.hpp"
#include "run_report.hpp"

namespace holonomic::cli {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitIo = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thresholds applied by `verify` and `catalog`.
namespace limits {
inline constexpr double kPropagator = 1e-6;
inline constexpr double kIntegrand = 1e-12;
inline constexpr double kDynamicalPhase = 1e-8;
inline constexpr double kPhase = 1e-6;
inline constexpr double kTransitionless = 1e-7;
inline constexpr double kInvariantResidual = 1e-8;
inline constexpr double kInvariantStep = 1e-5;
inline constexpr double kHolonomy = 1e-12;
inline constexpr double kCatalogReproduction = 1e-5;
inline constexpr double kCatalogRefinementSlack = 1e-10;
inline constexpr double kSphere = 1e-10;
}  // namespace limits

namespace detail {

inline void put_matrix(RunReport &report, const std::string &prefix, const Unitary2 &u) {
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            const std::string key = prefix + std::to_string(r) + std::to_string(c);
            report.value(key + "_re", u(r, c).real());
            report.value(key + "_im", u(r, c).imag());
        }
    }
}

/// Smallest circular mismatch between two unordered pairs of phases.
inline double pair_phase_mismatch(const BranchPair &a, const BranchPair &b) {
    const double same = std::max(circular_distance(a.plus, b.plus), circular_distance(a.minus, b.minus));
    const double swapped = std::max(circular_distance(a.plus, b.minus), circular_distance(a.minus, b.plus));
    return std::min(same, swapped);
}

inline void write_file(const std::string &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << content;
    f.flush();
    if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace detail

inline int cmd_gate(double beta, bool machine, std::ostream &out) {
    const HolonomicGate g{beta, 1.0};
    const Unitary2 u = analytic_gate(g);
    const DriveParams p = params_from_beta(g);
    const double period = p.period();
    const BranchPair alpha = lr_phase(p, period);
    const BranchPair aa = aa_eigenphases(u, eigensystem(p, 0.0));

    RunReport report("gate");
    report.param("beta", beta);
    detail::put_matrix(report, "u", u);
    report.value("omega_rabi", p.omega_rabi);
    report.value("detuning", p.detuning);
    report.value("omega_drive", p.omega_drive);
    report.value("lambda", invariant_lambda(p));
    report.value("alpha_plus", alpha.plus);
    report.value("alpha_minus", alpha.minus);
    report.value("aa_phase_plus", aa.plus);
    report.value("aa_phase_minus", aa.minus);
    report.check_at_most("unitarity_defect", unitarity_defect(u), kUnitarityTolerance);
    report.check_at_most("aa_vs_lr_phase", detail::pair_phase_mismatch(aa, {wrap_phase(alpha.plus), wrap_phase(alpha.minus)}),
                         limits::kPhase);
    report.render(out, machine);
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

struct VerifyOptions {
    double beta = 0.5;
    std::int64_t steps = kDefaultStepsPerPeriod;
    std::optional<double> omega_rabi;  // overrides the holonomic drive
    std::optional<double> detuning;
    bool machine = false;
};

inline int cmd_verify(const VerifyOptions &opt, std::ostream &out) {
    const HolonomicGate g{opt.beta, 1.0};
    DriveParams p = params_from_beta(g);
    const bool overridden = opt.omega_rabi.has_value() || opt.detuning.has_value();
    if (opt.omega_rabi) p.omega_rabi = *opt.omega_rabi;
    if (opt.detuning) p.detuning = *opt.detuning;
    p.validate();

    RunReport report("verify");
    report.param("beta", opt.beta);
    report.param("steps", std::to_string(opt.steps));
    report.param("omega_rabi", p.omega_rabi);
    report.param("detuning", p.detuning);
    report.param("omega_drive", p.omega_drive);

    const EvolutionReport ev = full_report(p, opt.steps);
    const Unitary2 refined = propagate(p, p.period(), 2 * opt.steps);
    const Unitary2 spectral = spectral_propagator(p, opt.steps);
    const double period = p.period();
    const BranchPair closed = lr_phase(p, period);

    detail::put_matrix(report, "propagator", ev.propagator);
    report.value("alpha_plus", ev.alpha_numeric.plus);
    report.value("alpha_minus", ev.alpha_numeric.minus);
    report.value("gamma_geometric_plus", ev.gamma_geometric.plus);
    report.value("gamma_geometric_minus", ev.gamma_geometric.minus);
    report.value("gamma_dynamical_plus", ev.gamma_dynamical.plus);
    report.value("gamma_dynamical_minus", ev.gamma_dynamical.minus);
    report.value("aa_phase_plus", ev.aa_eigenphases.plus);
    report.value("aa_phase_minus", ev.aa_eigenphases.minus);

    report.check_at_most("holonomy_residual", std::abs(holonomy_residual(p)),
                         limits::kHolonomy * p.omega_drive * p.omega_drive);
    if (!overridden) {
        report.check_at_most("propagator_vs_analytic", max_abs_diff(ev.propagator, analytic_gate(g)),
                             limits::kPropagator);
    }
    // Richardson estimate of the O(dt^2) error of the N-step propagator.
    report.check_at_most("step_refinement_error", max_abs_diff(ev.propagator, refined) * 4.0 / 3.0,
                         limits::kPropagator);
    report.check_at_most("max_dynamical_integrand", ev.max_integrand, limits::kIntegrand);
    report.check_at_most("dynamical_phase",
                         std::max(std::abs(ev.gamma_dynamical.plus), std::abs(ev.gamma_dynamical.minus)),
                         limits::kDynamicalPhase);
    report.check_at_most("alpha_vs_closed_form",
                         std::max(std::abs(ev.alpha_numeric.plus - closed.plus),
                                  std::abs(ev.alpha_numeric.minus - closed.minus)),
                         limits::kPhase);
    report.check_at_most("aa_vs_lr_phase",
                         detail::pair_phase_mismatch(ev.aa_eigenphases, {wrap_phase(closed.plus), wrap_phase(closed.minus)}),
                         limits::kPhase);
    report.check_at_most("spectral_vs_propagator", max_abs_diff(spectral, ev.propagator), limits::kPropagator);
    report.check_at_most("transitionless_defect", ev.transitionless_defect, limits::kTransitionless);

    double residual = 0.0;
    for (int i = 0; i < 16; ++i) {
        residual = std::max(residual, invariant_residual(p, period * i / 16.0, limits::kInvariantStep));
    }
    report.check_at_most("invariant_residual", residual, limits::kInvariantResidual);

    report.render(out, opt.machine);
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

struct SynthOptions {
    std::string target;
    int length = 0;
    int restarts = 100;
    std::uint64_t seed = 0;
    int workers = 1;
    bool phase_sensitive = false;
    std::string out_path;
    bool machine = false;
};

inline TargetGate resolve_target(const std::string &spec) {
    if (auto named = targets::by_name(spec)) return *named;
    std::ifstream f(spec);
    if (!f) throw IoError("target '" + spec + "' is neither a known gate name nor a readable matrix file");
    TargetGate t{"file:" + spec, read_matrix(f)};
    t.validate();
    return t;
}

inline int cmd_synth(const SynthOptions &opt, std::ostream &out) {
    const TargetGate target = resolve_target(opt.target);
    SynthesisConfig config;
    config.restarts = opt.restarts;
    config.workers = opt.workers;
    config.mode = opt.phase_sensitive ? FidelityMode::phase_sensitive : FidelityMode::magnitude;

    const SynthesisResult result = synthesize(target, opt.length, config, opt.seed);
    const KeyValueRecord record = synthesis_record(target.name, opt.length, result, opt.seed);
    if (!opt.out_path.empty()) detail::write_file(opt.out_path, record.str());

    RunReport report("synth");
    report.param("target", target.name);
    report.param("length", std::to_string(opt.length));
    report.param("restarts", std::to_string(opt.restarts));
    report.param("seed", std::to_string(opt.seed));
    report.param("mode", std::string(opt.phase_sensitive ? "phase_sensitive" : "magnitude"));
    report.value("betas", join_reals(result.sequence.betas));
    report.value("fidelity_magnitude", format_fixed(result.fidelity.magnitude, 11));
    report.value("infidelity_magnitude", 1.0 - result.fidelity.magnitude);
    report.value("infidelity_phase_sensitive", 1.0 - result.fidelity.phase_sensitive);
    report.value("evaluations", std::to_string(result.evaluations));
    report.value("restarts_used", std::to_string(result.restarts_used));
    report.check_at_most("infidelity", result.infidelity, config.tolerance);
    report.render(out, opt.machine);
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

inline int cmd_catalog(bool machine, std::ostream &out) {
    RunReport report("catalog");
    SynthesisConfig config;
    for (const CatalogEntry &entry : catalog()) {
        const std::string &name = entry.target.name;
        const FidelityReport f = fidelity(compose(entry.sequence), entry.target.matrix);
        const SynthesisResult refined = refine(entry.target, entry.sequence, config);

        const bool by_magnitude = std::abs(f.magnitude - entry.claimed_fidelity) <= limits::kCatalogReproduction;
        const bool by_phase = std::abs(f.phase_sensitive - entry.claimed_fidelity) <= limits::kCatalogReproduction;
        std::string convention = by_magnitude && by_phase ? "both" : by_magnitude ? "magnitude" : by_phase ? "phase_sensitive" : "none";

        report.value(name + ".betas", join_reals(entry.sequence.betas));
        report.value(name + ".claimed", format_fixed(entry.claimed_fidelity, 11));
        report.value(name + ".fidelity_magnitude", format_fixed(f.magnitude, 11));
        report.value(name + ".fidelity_phase_sensitive", format_fixed(f.phase_sensitive, 11));
        report.value(name + ".reproducing_convention", convention);
        report.value(name + ".refined_betas", join_reals(refined.sequence.betas));
        report.value(name + ".refined_fidelity", format_fixed(refined.fidelity.magnitude, 11));
        report.check_at_most(name + ".reproduction", 1.0 - f.magnitude, limits::kCatalogReproduction);
        report.check_at_most(name + ".refinement", 1.0 - refined.fidelity.magnitude,
                             1.0 - entry.claimed_fidelity + limits::kCatalogRefinementSlack);
    }
    report.render(out, machine);
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

struct TrajectoryOptions {
    std::vector<double> betas;
    bool sweep = false;     // endpoint maps over `samples` betas in [0, pi/2]
    bool endpoint = false;  // endpoint maps for the listed betas
    int samples = 100;
    std::int64_t steps = kDefaultStepsPerPeriod;
    std::string out_path;
    bool machine = false;
};

inline int cmd_trajectory(const TrajectoryOptions &opt, std::ostream &out) {
    if (opt.samples < 2) throw DomainError("trajectory: --samples must be >= 2");
    if (!opt.sweep && opt.betas.empty()) throw DomainError("trajectory: give --beta values or --sweep");
    for (double b : opt.betas) check_beta(b);

    std::vector<TrajectoryRecord> records;
    std::string mode;
    if (opt.sweep) {
        mode = "sweep";
        records = endpoint_trajectory(beta_sweep(opt.samples));
    } else if (opt.endpoint) {
        mode = "endpoint";
        records = endpoint_trajectory(opt.betas);
    } else {
        mode = "time";
        for (double b : opt.betas) {
            auto part = time_resolved_trajectory(b, opt.samples, opt.steps);
            records.insert(records.end(), part.begin(), part.end());
        }
    }

    double sphere = 0.0;
    for (const auto &r : records) sphere = std::max(sphere, std::abs(r.point.norm_squared() - 1.0));

    std::ostringstream csv;
    write_trajectory_csv(csv, records);
    detail::write_file(opt.out_path, csv.str());

    RunReport report("trajectory");
    report.param("mode", mode);
    report.param("samples", std::to_string(opt.samples));
    report.param("betas", join_reals(opt.betas));
    report.param("out", opt.out_path);
    report.value("records", std::to_string(records.size()));
    report.check_at_most("sphere_deviation", sphere, limits::kSphere);
    report.render(out, opt.machine);
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Nonadiabatic holonomic one-qubit gates: evaluate, verify, synthesize, export."};
    app.name("holonomic");
    app.require_subcommand(1, 1);

    double gate_beta = 0.0;
    bool gate_machine = false;
    auto *gate = app.add_subcommand("gate", "Print U_beta, its drive parameters, and its phases");
    gate->add_option("--beta", gate_beta, "Gate parameter in [0, pi/2]")->required();
    gate->add_flag("--machine", gate_machine, "Emit key=value records");

    VerifyOptions verify_opt;
    double rabi = 0.0;
    double detuning = 0.0;
    auto *verify = app.add_subcommand("verify", "Propagate one period and check every analytic claim");
    verify->add_option("--beta", verify_opt.beta, "Gate parameter in [0, pi/2]")->required();
    verify->add_option("--steps", verify_opt.steps, "Propagation steps per period (>= 16)")->default_val(verify_opt.steps);
    auto *rabi_opt = verify->add_option("--rabi", rabi, "Override Omega / w (non-holonomic control)");
    auto *detuning_opt = verify->add_option("--detuning", detuning, "Override Delta / w (non-holonomic control)");
    verify->add_flag("--machine", verify_opt.machine, "Emit key=value records");

    SynthOptions synth_opt;
    auto *synth = app.add_subcommand("synth", "Search for a pulse sequence reaching a target gate");
    synth->add_option("--target", synth_opt.target, "NOT | Hadamard | Phase | T, or a 2x2 matrix file")->required();
    synth->add_option("--length", synth_opt.length, "Number of holonomic gates")->required();
    synth->add_option("--restarts", synth_opt.restarts, "Random restarts")->default_val(synth_opt.restarts);
    synth->add_option("--seed", synth_opt.seed, "RNG seed")->default_val(synth_opt.seed);
    synth->add_option("--workers", synth_opt.workers, "Parallel restarts")->default_val(synth_opt.workers);
    synth->add_flag("--phase-sensitive", synth_opt.phase_sensitive, "Optimize Re tr instead of |tr|");
    synth->add_option("--out", synth_opt.out_path, "Write the result record here");
    synth->add_flag("--machine", synth_opt.machine, "Emit key=value records");

    bool catalog_machine = false;
    auto *cat = app.add_subcommand("catalog", "Recompose and refine the published sequences");
    cat->add_flag("--machine", catalog_machine, "Emit key=value records");

    TrajectoryOptions traj_opt;
    auto *traj = app.add_subcommand("trajectory", "Write Bloch-sphere trajectories as CSV");
    traj->add_option("--beta", traj_opt.betas, "Gate parameters (repeat or comma-separate)")->delimiter(',');
    traj->add_flag("--sweep", traj_opt.sweep, "Endpoint maps over --samples betas spanning [0, pi/2]");
    traj->add_flag("--endpoint", traj_opt.endpoint, "Endpoint maps for the listed betas");
    traj->add_option("--samples", traj_opt.samples, "Time samples per beta, or betas in a sweep (>= 2)")
        ->default_val(traj_opt.samples);
    traj->add_option("--steps", traj_opt.steps, "Propagation steps per period")->default_val(traj_opt.steps);
    traj->add_option("--out", traj_opt.out_path, "Output CSV path")->required();
    traj->add_flag("--machine", traj_opt.machine, "Emit key=value records");

    std::vector<std::string> argv_store{"holonomic"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*gate) return cmd_gate(gate_beta, gate_machine, out);
        if (*verify) {
            if (*rabi_opt) verify_opt.omega_rabi = rabi;
            if (*detuning_opt) verify_opt.detuning = detuning;
            return cmd_verify(verify_opt, out);
        }
        if (*synth) return cmd_synth(synth_opt, out);
        if (*cat) return cmd_catalog(catalog_machine, out);
        if (*traj) return cmd_trajectory(traj_opt, out);
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ConsistencyError &e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace holonomic::cli
