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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "holonomic/holonomic.hpp"

using namespace holonomic;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            passed = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

/// 20 beta values spanning [0, pi/2] inclusive.
std::vector<double> beta_grid() { return beta_sweep(20); }

double pair_mismatch(const BranchPair &a, double p1, double p2) {
    const double same = std::max(circular_distance(a.plus, p1), circular_distance(a.minus, p2));
    const double swapped = std::max(circular_distance(a.plus, p2), circular_distance(a.minus, p1));
    return std::min(same, swapped);
}

Outcome catalog_reproduction() {
    Outcome o;
    const auto start = Clock::now();
    double worst_reproduction = 0.0;
    double worst_refinement_gap = -1.0;
    for (const auto &row : catalog()) {
        const double infid = 1.0 - fidelity(compose(row.sequence), row.target.matrix).magnitude;
        worst_reproduction = std::max(worst_reproduction, infid);
        o.require(infid <= 1e-5, row.target.name + " composed infidelity " + sci(infid));
        const SynthesisResult refined = refine(row.target, row.sequence, SynthesisConfig{});
        const double gap = row.claimed_fidelity - refined.fidelity.magnitude;
        worst_refinement_gap = std::max(worst_refinement_gap, gap);
        o.require(refined.fidelity.magnitude >= row.claimed_fidelity - 1e-10,
                  row.target.name + " refined fidelity short of published by " + sci(gap));
    }
    const double elapsed = seconds_since(start);
    o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    o.detail = (o.passed ? "" : o.detail + " | ") + "max composed infidelity " + sci(worst_reproduction) +
               ", max (published - refined) " + sci(worst_refinement_gap) + ", " + sci(elapsed) + " s";
    return o;
}

Outcome analytic_numeric_agreement() {
    Outcome o;
    const auto start = Clock::now();
    double worst = 0.0;
    double min_ratio = 1e300, max_ratio = 0.0;
    for (double beta : beta_grid()) {
        const DriveParams p = params_from_beta({beta, 1.0});
        const Unitary2 exact = analytic_gate(beta);
        const double e1 = max_abs_diff(propagate(p, p.period(), 10000), exact);
        const double e2 = max_abs_diff(propagate(p, p.period(), 20000), exact);
        worst = std::max(worst, e1);
        o.require(e1 <= 1e-6, "beta " + std::to_string(beta) + " error " + sci(e1));
        // At beta = 0 and pi/2 the drive is static and the midpoint rule is
        // exact; the error is pure rounding and has no order to observe.
        if (e1 > 1e-11) {
            const double ratio = e1 / e2;
            min_ratio = std::min(min_ratio, ratio);
            max_ratio = std::max(max_ratio, ratio);
            o.require(ratio >= 3.5 && ratio <= 4.5, "beta " + std::to_string(beta) + " ratio " + std::to_string(ratio));
        }
    }
    const double elapsed = seconds_since(start);
    o.require(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
    o.detail += (o.detail.empty() ? "" : " | ") + std::string("max error ") + sci(worst) + ", doubling ratio in [" +
                std::to_string(min_ratio) + ", " + std::to_string(max_ratio) + "], " + sci(elapsed) + " s";
    return o;
}

Outcome holonomy_verification() {
    Outcome o;
    double worst_integrand = 0.0, worst_phase = 0.0;
    for (double beta : beta_grid()) {
        const DriveParams p = params_from_beta({beta, 1.0});
        for (int i = 0; i < 1000; ++i) {
            const double t = p.period() * i / 999.0;
            for (Branch b : {Branch::plus, Branch::minus}) {
                worst_integrand = std::max(worst_integrand, std::abs(dynamical_integrand(p, t, b)));
            }
        }
        const EvolutionReport r = full_report(p, 10000);
        worst_phase = std::max({worst_phase, std::abs(r.gamma_dynamical.plus), std::abs(r.gamma_dynamical.minus)});
    }
    o.require(worst_integrand <= 1e-12, "integrand " + sci(worst_integrand));
    o.require(worst_phase <= 1e-8, "dynamical phase " + sci(worst_phase));
    const double control = std::abs(full_report({1.0, 1.0, 1.0}, 10000).gamma_dynamical.plus);
    o.require(control > 0.1, "control |gamma_d+| " + sci(control));
    o.detail += (o.detail.empty() ? "" : " | ") + std::string("max integrand ") + sci(worst_integrand) +
                ", max |gamma_d| " + sci(worst_phase) + ", control |gamma_d+| " + sci(control);
    return o;
}

Outcome invariant_equation() {
    Outcome o;
    std::mt19937_64 gen(20260101);
    std::uniform_real_distribution<double> rabi(0.1, 2.0), det(-2.0, 2.0), drive(0.5, 2.0), time(-10.0, 10.0);
    double worst = 0.0, min_ratio = 1e300, max_ratio = 0.0;
    for (int i = 0; i < 100; ++i) {
        const DriveParams p{rabi(gen), det(gen), drive(gen)};
        const double t = time(gen);
        const double r = invariant_residual(p, t, 1e-5);
        worst = std::max(worst, r);
        // Order observed where truncation error dominates rounding.
        const double ratio = invariant_residual(p, t, 1e-3) / invariant_residual(p, t, 5e-4);
        min_ratio = std::min(min_ratio, ratio);
        max_ratio = std::max(max_ratio, ratio);
    }
    o.require(worst <= 1e-8, "residual " + sci(worst));
    o.require(min_ratio >= 3.9 && max_ratio <= 4.1, "h-halving ratio outside [3.9, 4.1]");
    o.detail += (o.detail.empty() ? "" : " | ") + std::string("max residual (h=1e-5) ") + sci(worst) +
                ", h-halving ratio in [" + std::to_string(min_ratio) + ", " + std::to_string(max_ratio) + "]";
    return o;
}

Outcome phase_correspondence() {
    Outcome o;
    double worst_aa = 0.0, worst_alpha = 0.0;
    for (double beta : beta_grid()) {
        const DriveParams p = params_from_beta({beta, 1.0});
        const EvolutionReport r = full_report(p, 10000);
        const double s = std::sin(beta);
        worst_aa = std::max(worst_aa, pair_mismatch(r.aa_eigenphases, wrap_phase(kPi * (1 - s)), wrap_phase(kPi * (1 + s))));
        const BranchPair closed = lr_phase(p, p.period());
        worst_alpha = std::max({worst_alpha, std::abs(r.alpha_numeric.plus - closed.plus),
                                std::abs(r.alpha_numeric.minus - closed.minus),
                                std::abs(closed.plus - kPi * (1 - s)), std::abs(closed.minus - kPi * (1 + s))});
    }
    o.require(worst_aa <= 1e-6, "eigenphase mismatch " + sci(worst_aa));
    o.require(worst_alpha <= 1e-6, "alpha mismatch " + sci(worst_alpha));
    o.detail += (o.detail.empty() ? "" : " | ") + std::string("max eigenphase mismatch ") + sci(worst_aa) +
                ", max alpha mismatch " + sci(worst_alpha);
    return o;
}

Outcome spectral_propagator_agreement() {
    Outcome o;
    double worst = 0.0;
    for (double beta : beta_grid()) {
        const DriveParams p = params_from_beta({beta, 1.0});
        worst = std::max(worst, max_abs_diff(spectral_propagator(p, 10000), propagate(p, p.period(), 10000)));
    }
    o.require(worst <= 1e-6, "max difference " + sci(worst));
    o.detail += (o.detail.empty() ? "" : " | ") + std::string("max |spectral - propagated| ") + sci(worst);
    return o;
}

Outcome fresh_synthesis() {
    Outcome o;
    struct Job {
        TargetGate target;
        int length;
        std::uint64_t seed;
    };
    // Arbitrary fixed seeds; no published angle enters the search.
    const std::vector<Job> jobs{{targets::not_gate(), 4, 0x5eed0001},
                                {targets::hadamard(), 7, 0x5eed0002},
                                {targets::phase(), 4, 0x5eed0003},
                                {targets::pi_over_8(), 3, 0x5eed0004}};
    SynthesisConfig config;
    config.restarts = 200;
    for (const Job &job : jobs) {
        const auto start = Clock::now();
        const SynthesisResult r = synthesize(job.target, job.length, config, job.seed);
        const double elapsed = seconds_since(start);
        o.require(r.infidelity <= 1e-9, job.target.name + " infidelity " + sci(r.infidelity));
        o.require(elapsed < 60.0, job.target.name + " runtime " + std::to_string(elapsed) + " s");
        o.detail += (o.detail.empty() ? "" : "; ") + job.target.name + " L=" + std::to_string(job.length) +
                    " infidelity " + sci(r.infidelity) + " after " + std::to_string(r.restarts_used) + " restarts, " +
                    sci(elapsed) + " s";
    }
    return o;
}

Outcome universality_witness() {
    Outcome o;
    const double w = noncommutativity_witness(kPi / 6, kPi / 3);
    o.require(w > 0.1, "witness " + sci(w));
    std::mt19937_64 gen(88);
    std::uniform_real_distribution<double> b(0.0, kBetaMax);
    double worst_det = 0.0, worst_unitarity = 0.0;
    for (int i = 0; i < 1000; ++i) {
        PulseSequence seq;
        for (int k = 0; k < 8; ++k) seq.betas.push_back(b(gen));
        const Unitary2 u = compose(seq);
        worst_det = std::max(worst_det, std::abs(u.det() - 1.0));
        worst_unitarity = std::max(worst_unitarity, unitarity_defect(u));
    }
    o.require(worst_det <= 1e-11, "det deviation " + sci(worst_det));
    o.require(worst_unitarity <= 1e-11, "unitarity defect " + sci(worst_unitarity));
    o.detail += (o.detail.empty() ? "" : " | ") + std::string("witness ") + sci(w) + ", max |det-1| " +
                sci(worst_det) + ", max unitarity defect " + sci(worst_unitarity);
    return o;
}

Outcome trajectory_sanity() {
    Outcome o;
    double worst = 0.0;
    std::size_t count = 0;
    auto scan = [&](const std::vector<TrajectoryRecord> &records) {
        for (const auto &r : records) {
            worst = std::max(worst, std::abs(r.point.norm_squared() - 1.0));
            ++count;
        }
    };
    for (double beta : beta_grid()) scan(time_resolved_trajectory(beta, 100));
    scan(endpoint_trajectory(beta_sweep(200)));
    o.require(worst <= 1e-10, "sphere deviation " + sci(worst));

    double pole_error = 0.0;
    for (const auto &r : endpoint_trajectory({0.0, kBetaMax})) {
        const double z = r.branch == 0 ? 1.0 : -1.0;
        pole_error = std::max({pole_error, std::abs(r.point.x), std::abs(r.point.y), std::abs(r.point.z - z)});
    }
    o.require(pole_error <= 1e-12, "pole displacement " + sci(pole_error));
    o.detail += (o.detail.empty() ? "" : " | ") + std::to_string(count) + " points, max |r^2-1| " + sci(worst) +
                ", pole displacement " + sci(pole_error);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 catalog reproduction", catalog_reproduction},
        {"AC2 analytic-numeric gate agreement", analytic_numeric_agreement},
        {"AC3 holonomy verification", holonomy_verification},
        {"AC4 invariant equation", invariant_equation},
        {"AC5 phase correspondence", phase_correspondence},
        {"AC6 spectral propagator", spectral_propagator_agreement},
        {"AC7 fresh synthesis", fresh_synthesis},
        {"AC8 universality witness", universality_witness},
        {"AC9 trajectory sanity", trajectory_sanity},
    };
    int failures = 0;
    for (const auto &[name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %s: %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        if (!o.passed) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
