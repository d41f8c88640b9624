// Copyright 2026 The capsim Authors
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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
// Usage: capsim_acceptance [PATH_TO_CAPSIM_CLI]

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "capsim/baselines.hpp"
#include "capsim/cap_protocol.hpp"
#include "capsim/experiments.hpp"
#include "capsim/fc_channel.hpp"
#include "capsim/parallel.hpp"
#include "capsim/stats.hpp"

using namespace capsim;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double theta_from_tan2(double tan2) { return std::atan(std::sqrt(tan2)); }

// 1. Qubit exactness.
void qubit_exactness(Verdict &o) {
    const auto t0 = Clock::now();
    const std::size_t pairs = 100;
    const uint64_t trials = 100000;
    std::size_t covered = 0;
    for (std::size_t k = 0; k < pairs; ++k) {
        RngStream rng(derive_seed(1001, 1), k);
        const StateVector psi = haar_state(2, rng);
        const StateVector phi = haar_state(2, rng);
        const auto est = estimate_outcome_prob(Model::ks_qubit(), psi, phi, trials, derive_seed(1001, 2, k), 0, 0.99);
        covered += est.ci.contains(fidelity(psi, phi));
    }
    const double secs = seconds_since(t0);
    o.detail << covered << "/" << pairs << " Wilson 99% intervals contain the Born probability (need >= 95), "
             << secs << " s";
    o.check(covered >= 95, "coverage");
    o.check(secs < 60.0, "runtime < 1 min");
}

// 2. Cap-protocol error formula.
void error_formula(Verdict &o) {
    const auto t0 = Clock::now();
    const std::vector<std::pair<std::size_t, double>> configs{{2, 1.0}, {4, 1.0}, {8, 2.0}, {16, 4.0}};
    uint64_t id = 0;
    for (auto [dim, tan2] : configs) {
        ErrorSweepConfig cfg;
        cfg.dims = {dim};
        cfg.thetas = {theta_from_tan2(tan2)};
        cfg.trials = 1000000;
        cfg.probes = 32;
        cfg.seed = derive_seed(2002, id++);
        const ErrorSweepRow r = error_sweep(cfg).at(0);
        o.detail << " (N=" << dim << ", tan2=" << tan2 << "): d1=" << r.delta1 << " mc=" << r.parallel_dev
                 << " z=" << (r.parallel_dev - r.delta1) / r.parallel_sigma << "; d2=" << r.delta2
                 << " mc=" << r.orthogonal_dev << " z=" << (r.orthogonal_dev - r.delta2) / r.orthogonal_sigma
                 << "; probes max |dev|=" << r.probe_max_abs_dev << ";";
        const std::string tag = "N=" + std::to_string(dim);
        o.check(r.valid, tag + " valid");
        o.check(r.parallel_pass, tag + " parallel within 4 sigma");
        o.check(r.orthogonal_pass, tag + " orthogonal within 4 sigma");
        o.check(r.probe_pass, tag + " random probes within delta1 + 4 sigma");
    }
    const double secs = seconds_since(t0);
    o.detail << " " << secs << " s";
    o.check(secs < 300.0, "runtime < 5 min");
}

// 3. Coefficient exactness and the moment identity.
void coefficient_exactness(Verdict &o) {
    const auto t0 = Clock::now();
    const uint64_t samples = 1000000;
    struct Sums {
        double q = 0.0, q2 = 0.0, m = 0.0, m2 = 0.0;
    };
    double worst_q = 0.0, worst_m = 0.0;
    std::size_t ok_q = 0, ok_m = 0, total = 0;
    for (auto [dim, tan2] : std::vector<std::pair<std::size_t, double>>{{4, 1.0}, {64, 4.0}}) {
        const CapParams p = CapParams::create(dim, theta_from_tan2(tan2));
        for (std::size_t k = 0; k < 20; ++k) {
            RngStream pr(derive_seed(3003, dim), k);
            const StateVector psi = haar_state(dim, pr);
            const StateVector phi = random_probe(psi, pr);
            const double f = fidelity(psi, phi);
            const uint64_t seed = derive_seed(3004, dim, k);
            const auto parts = map_chunks<Sums>(samples, 0, [&](std::size_t b, std::size_t e) {
                Sums s;
                for (std::size_t i = b; i < e; ++i) {
                    RngStream rng(seed, i);
                    const double t = fidelity(cap::sample(psi, p, rng), phi);
                    const double q = cap::exact_quasi_prob(t, p);
                    s.q += q;
                    s.q2 += q * q;
                    s.m += t;
                    s.m2 += t * t;
                }
                return s;
            });
            Sums s;
            for (const Sums &x : parts) {
                s.q += x.q;
                s.q2 += x.q2;
                s.m += x.m;
                s.m2 += x.m2;
            }
            const double n = static_cast<double>(samples);
            const double qm = s.q / n, mm = s.m / n;
            const double qse = std::sqrt((s.q2 / n - qm * qm) / (n - 1));
            const double mse = std::sqrt((s.m2 / n - mm * mm) / (n - 1));
            const double zq = (qm - f) / qse;
            const double zm = (mm - (p.cos2() * f + p.sin2() / dim)) / mse;
            worst_q = std::max(worst_q, std::abs(zq));
            worst_m = std::max(worst_m, std::abs(zm));
            ok_q += std::abs(zq) <= 4.0;
            ok_m += std::abs(zm) <= 4.0;
            ++total;
        }
    }
    o.detail << ok_q << "/" << total << " quasi-probability means within 4 sigma (max |z|=" << worst_q << "), "
             << ok_m << "/" << total << " moment identities within 4 sigma (max |z|=" << worst_m << "), "
             << seconds_since(t0) << " s";
    o.check(ok_q == total, "quasi-probability mean");
    o.check(ok_m == total, "moment identity");
}

// 4. FC compression bound.
void fc_bound(Verdict &o) {
    const std::vector<std::pair<std::size_t, double>> configs{{2, M_PI / 4}, {4, M_PI / 4}};
    uint64_t id = 0;
    for (auto [dim, theta] : configs) {
        const FcCostResult r = fc_cost_experiment(CapParams::create(dim, theta), 100000, derive_seed(4004, id++));
        const double lo = r.mutual_info_bits, hi = r.mutual_info_bits + kLog2E + 0.1;
        o.detail << " (N=" << dim << "): I=" << r.mutual_info_bits << " H=" << r.empirical_entropy_bits << " in ["
                 << lo << ", " << hi << "], L=" << r.mean_code_len_bits << ", chi2 p=" << r.chi_square.p_value
                 << ";";
        const std::string tag = "N=" + std::to_string(dim);
        o.check(r.empirical_entropy_bits >= lo && r.empirical_entropy_bits <= hi, tag + " entropy window");
        o.check(std::abs(r.mean_code_len_bits - r.empirical_entropy_bits) <= 1.1, tag + " code length");
        o.check(r.chi_square.p_value >= 0.01, tag + " chi-square");
    }
}

// 5. Exponential gap.
void exponential_gap(Verdict &o) {
    const auto t0 = Clock::now();
    const double delta = 0.01;
    const auto rows = gap_report(20, delta, 5.0);
    const double secs = seconds_since(t0);
    bool doubles = true;
    for (int n = 2; n <= 20; ++n) doubles = doubles && rows[n].strong_bits == 2.0 * rows[n - 1].strong_bits;
    const double rel = std::abs(rows[20].weak_bits - rows[19].weak_bits) / rows[19].weak_bits;
    const long double big_n = static_cast<long double>(rows[20].dim);
    const long double exact =
        (big_n - 1) * std::log2(1.0L + std::pow(1.0L - 1.0L / big_n, big_n) / (big_n * delta)) * delta;
    const double got = rows[20].weak_bits * delta;
    constexpr double kRecorded = 0.5307277763038067;
    o.detail.precision(16);
    o.detail << "strong cost doubles per qubit: " << (doubles ? "yes" : "no") << "; weak change n=19->20: " << rel
             << "; weak(n=20)*delta=" << got << " (exact formula " << static_cast<double>(exact) << ", recorded "
             << kRecorded << "); " << secs << " s";
    o.check(doubles, "strong doubling");
    o.check(rel < 0.01, "weak convergence");
    o.check(std::abs(got - static_cast<double>(exact)) <= 1e-12, "exact formula");
    o.check(std::abs(got - kRecorded) <= 1e-12, "recorded value");
    o.check(secs < 1.0, "runtime < 1 s");
}

// 6. Projection scaling.
void jl_scaling_check(Verdict &o) {
    const auto t0 = Clock::now();
    const std::vector<std::size_t> ns{8, 16, 32, 64, 128};
    const JLScaling a = jl_scaling(256, ns, 1000, 6006);
    const JLScaling b = jl_scaling(512, ns, 1000, 6007);
    o.detail << "slope(N=256)=" << a.slope << " (need [-0.6, -0.4]), slope(N=512)=" << b.slope << "; per point";
    std::size_t agree = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double se = std::hypot(a.rows[i].rms_std_error, b.rows[i].rms_std_error);
        const double z = (a.rows[i].rms_error - b.rows[i].rms_error) / se;
        o.detail << " Ns=" << ns[i] << ": " << a.rows[i].rms_error << " vs " << b.rows[i].rms_error << " z=" << z
                 << ";";
        agree += std::abs(z) <= 2.0;
    }
    const double secs = seconds_since(t0);
    o.detail << " " << agree << "/" << ns.size() << " within 2 sigma, " << secs << " s";
    o.check(a.slope >= -0.6 && a.slope <= -0.4, "slope window");
    o.check(agree == ns.size(), "dimension independence");
    o.check(secs < 300.0, "runtime < 5 min");
}

// 7. Reproducibility of CLI output across thread counts.
std::string slurp(const std::filesystem::path &p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void reproducibility(Verdict &o, const std::string &cli) {
    if (cli.empty() || !std::filesystem::exists(cli)) {
        o.detail << "command-line binary not given";
        o.check(false, "cli path");
        return;
    }
    const auto dir = std::filesystem::temp_directory_path() / ("capsim_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const std::string quarter = "0.7853981633974483";
    std::vector<std::string> commands{
        "simulate --model ks-qubit --trials 100000 --probes 100 --seed 1",
        "error-sweep --dim 2 --theta-c 0.7853981633974483 --trials 1000000 --seed 2",
        "error-sweep --dim 4 --theta-c 0.7853981633974483 --trials 1000000 --seed 2",
        "error-sweep --dim 8 --theta-c 0.9553166181245093 --trials 1000000 --seed 2",
        "error-sweep --dim 16 --theta-c 1.1071487177940904 --trials 1000000 --seed 2",
        "simulate --model cap --dim 4 --theta-c " + quarter + " --trials 100000 --seed 3",
        "simulate --model cap --dim 64 --theta-c 1.1071487177940904 --trials 100000 --seed 3",
        "fc-run --dim 2 --theta-c " + quarter + " --trials 100000 --seed 4",
        "fc-run --dim 4 --theta-c " + quarter + " --trials 100000 --seed 4",
        "gap --qubits 20 --delta 0.01 --alpha 5",
        "gap --qubits 20 --delta 0.01 --alpha 5 --format json",
        "jl-sweep --dim 256 --trials 1000 --seed 6",
        "jl-sweep --dim 512 --trials 1000 --seed 6",
        "cost-curve --dim 256 --seed 7",
    };
    std::size_t identical = 0;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::string outs[2];
        bool ran = true;
        for (int k = 0; k < 2; ++k) {
            const auto path = dir / ("run" + std::to_string(i) + "_" + std::to_string(k));
            const std::string cmd = "'" + cli + "' " + commands[i] + " --threads " + (k == 0 ? "1" : "4") +
                                    " --output '" + path.string() + "'";
            ran = ran && std::system(cmd.c_str()) == 0;
            outs[k] = slurp(path);
        }
        const bool same = ran && !outs[0].empty() && outs[0] == outs[1];
        identical += same;
        if (!same) o.detail << " differs: `" << commands[i] << "`;";
    }
    std::filesystem::remove_all(dir);
    o.detail << " " << identical << "/" << commands.size() << " commands byte-identical with --threads 1 and 4";
    o.check(identical == commands.size(), "identical bytes");
}

}  // namespace

int main(int argc, char **argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    struct Criterion {
        int id;
        const char *name;
        std::function<void(Verdict &)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "qubit exactness", qubit_exactness},
        {2, "cap error formula", error_formula},
        {3, "coefficient exactness", coefficient_exactness},
        {4, "fc compression bound", fc_bound},
        {5, "exponential gap", exponential_gap},
        {6, "projection scaling", jl_scaling_check},
        {7, "reproducibility", [&](Verdict &o) { reproducibility(o, cli); }},
    };
    std::cout.precision(6);
    int failed = 0;
    for (const auto &c : criteria) {
        Verdict o;
        try {
            c.run(o);
        } catch (const std::exception &e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail.str()
                  << std::endl;
        failed += !o.pass;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
