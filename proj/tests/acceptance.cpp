// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Library-level checks go through the C++ core; the
// command-line criteria drive the installed binary.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_helpers.hpp"
#include "core/curvature.hpp"
#include "core/delta.hpp"
#include "core/generators.hpp"
#include "core/io.hpp"
#include "core/rng.hpp"
#include "core/verify.hpp"

using namespace deltaric;

namespace {

const std::string exe = DRIC_CLI_PATH;

int failures = 0;

struct Criterion {
    std::ostringstream log;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (log.tellp() > 0) log << "; ";
            log << what;
        }
    }
};

void report(int number, const std::string& title, Criterion& c, double seconds,
            double limit_seconds = 0.0) {
    if (limit_seconds > 0.0 && seconds > limit_seconds) {
        c.ok = false;
        c.log << (c.log.tellp() > 0 ? "; " : "") << "runtime " << seconds << "s exceeds "
              << limit_seconds << "s";
    }
    if (c.ok) {
        std::printf("[PASS] criterion %d: %s (%.1fs)\n", number, title.c_str(), seconds);
    } else {
        std::printf("[FAIL] criterion %d: %s (%.1fs) -- %s\n", number, title.c_str(), seconds,
                    c.log.str().c_str());
        ++failures;
    }
    std::fflush(stdout);
}

template <typename Fn>
double timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string dstr(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// 1. Constant-curvature exactness across (n, m, c) and every valid q.
void criterion1() {
    Criterion c;
    const double secs = timed([&] {
        const std::vector<std::tuple<int, int, double>> cases = {
            {4, 5, 1.0}, {6, 7, -1.0}, {8, 9, 0.5}};
        for (const auto& [n, m, cc] : cases) {
            const Instance inst = totally_geodesic(n, m, cc);
            for (int q = 1; 2 * q <= n; ++q) {
                const DeltaReport rep = delta_q_ric(inst, q);
                const double expect = (n - 1.0 - 2.0 * q / n) * cc;
                c.require(std::abs(rep.delta_q_ric - expect) <= 1e-8,
                          "delta mismatch at n=" + std::to_string(n) + " q=" + std::to_string(q) +
                              ": got " + dstr(rep.delta_q_ric) + ", want " + dstr(expect));
            }
            for (int q = 1; 2 * q < n; ++q) {
                const TheoremReport rep = check_theorem2(inst, q);
                c.require(rep.equality, "missing equality at n=" + std::to_string(n) +
                                            " q=" + std::to_string(q));
                c.require(rep.certificate.has_value() &&
                              rep.certificate->kind == EqualityCase::T2TotallyGeodesic,
                          "missing T2_totally_geodesic certificate at n=" + std::to_string(n));
                if (rep.certificate) {
                    c.require(rep.certificate->residual <= 1e-6, "certificate residual too large");
                }
            }
        }
    });
    report(1, "constant-curvature exactness and T2 equality certificates", c, secs, 10.0);
}

// 2. Theorem 1 equality family across k, c, lambda.
void criterion2() {
    Criterion c;
    const double secs = timed([&] {
        for (int k : {2, 3}) {
            for (double cc : {0.0, 1.0}) {
                for (double lambda : {0.5, 1.0, 2.0}) {
                    const Instance inst = umbilical_non_j(2 * k, 2 * k + 1, cc, lambda);
                    const TheoremReport rep = check_theorem1(inst);
                    const double want_rhs = 2.0 * (k - 1) * (cc + lambda * lambda);
                    const std::string tag = " at k=" + std::to_string(k) + " c=" + dstr(cc) +
                                            " lambda=" + dstr(lambda);
                    c.require(rep.hypothesis_ok, "hypothesis rejected" + tag);
                    c.require(std::abs(rep.rhs - want_rhs) <= 1e-9, "rhs mismatch" + tag);
                    c.require(std::abs(rep.slack) <= 1e-7,
                              "slack " + dstr(rep.slack) + " beyond 1e-7" + tag);
                    c.require(rep.equality, "equality not flagged" + tag);
                    c.require(rep.certificate.has_value() &&
                                  rep.certificate->kind == EqualityCase::T1PseudoUmbilical,
                              "certificate is not T1_pseudo_umbilical" + tag);
                }
            }
        }
        // degenerate lambda = 0 lands in the minimal case
        const TheoremReport tgrep = check_theorem1(umbilical_non_j(4, 5, 1.0, 0.0));
        c.require(tgrep.equality, "lambda=0 equality not flagged");
        c.require(tgrep.certificate.has_value() &&
                      tgrep.certificate->kind == EqualityCase::T1Minimal,
                  "lambda=0 certificate is not T1_minimal");
    });
    report(2, "theorem 1 equality family certifies as pseudo-umbilical", c, secs, 60.0);
}

// 3. Strictness separation under theorem 2.
void criterion3() {
    Criterion c;
    const double secs = timed([&] {
        const TheoremReport rep = check_theorem2(umbilical_non_j(4, 5, 0.0, 1.0), 1);
        c.require(std::abs(rep.lhs - 2.5) <= 1e-7, "lhs " + dstr(rep.lhs) + " != 2.5");
        c.require(std::abs(rep.rhs - 8.0 / 3.0) <= 1e-7, "rhs " + dstr(rep.rhs) + " != 8/3");
        c.require(!rep.equality, "strict inequality wrongly flagged as equality");
    });
    report(3, "strict inequality is separated from equality", c, secs);
}

// 4. Step-lemma fuzz through the command line, equality detected on
// constructed all-equal inputs.
void criterion4() {
    Criterion c;
    const double secs = timed([&] {
        for (int lemma : {33, 46}) {
            const auto res = cli::run(exe + " fuzz --lemma " + std::to_string(lemma) +
                                      " --trials 10000 --seed 1");
            c.require(res.exit_code == 0, "fuzz exit code " + std::to_string(res.exit_code));
            c.require(cli::field(res.output, "violations") == "0",
                      "lemma " + std::to_string(lemma) + " reported violations");
            const std::string slack = cli::field(res.output, "min_slack");
            c.require(!slack.empty() && std::stod(slack) >= -1e-12,
                      "lemma " + std::to_string(lemma) + " min slack " + slack);
        }
        for (double s : {0.1, -1.5, 2.0}) {
            const StepCheck a = step_inequality_33({s, s, s});
            c.require(std::abs(a.lhs - a.rhs) <= 1e-12 && a.holds,
                      "lemma 33 equality missed at s=" + dstr(s));
            const StepCheck b = step_inequality_46({s, s}, {s, s});
            c.require(std::abs(b.lhs - b.rhs) <= 1e-12 && b.holds,
                      "lemma 46 equality missed at s=" + dstr(s));
        }
    });
    report(4, "step-lemma fuzz clean, equality detected on all-equal inputs", c, secs, 5.0);
}

// 5. Optimizer against the Haar-sampling oracle on 50 random instances.
void criterion5() {
    Criterion c;
    const double secs = timed([&] {
        const int combos[4][2] = {{4, 1}, {4, 2}, {6, 1}, {6, 2}};
        const Config cfg;
        for (int i = 0; i < 50; ++i) {
            const int n = combos[i % 4][0];
            const int q = combos[i % 4][1];
            const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
            const Instance inst = random_totally_real(n, n + 1, 0.1, 0.6, seed);
            const CurvatureTensor R = gauss_curvature_tensor(inst);
            const KqInfResult opt = k_q_inf(R, q, cfg);
            // The reported value must be achieved by the reported frame: an
            // exact feasibility witness, independent of optimizer internals.
            opt.frame.validate();
            const double witness = plane_set_objective(R, opt.frame);
            c.require(std::abs(opt.value - witness) <= 1e-9,
                      "value not witnessed by the argmin frame at i=" + std::to_string(i));
            const auto [sampled, frame] = k_q_inf_sampled(R, q, 100000, seed * 7 + 1);
            c.require(opt.value <= sampled + 1e-9,
                      "optimizer above sampled best at i=" + std::to_string(i) + " (" +
                          dstr(opt.value) + " vs " + dstr(sampled) + ")");
            // One-sided against the refined oracle: descent from the oracle's
            // best sample can land in a shallower basin than the multi-start
            // search, so only the optimizer-above-oracle direction signals a
            // defect; the witness above already pins the value from below.
            const auto [refined, rframe] = refine_frame(R, frame, cfg);
            c.require(opt.value <= refined + 1e-3,
                      "optimizer " + dstr(opt.value) + " above refined oracle " + dstr(refined) +
                          " at i=" + std::to_string(i));
        }
    });
    report(5, "k_q_inf optimizer tracks the Haar-sampling oracle", c, secs, 300.0);
}

// 6. sup_ric eigenvalue route against the sphere-sampling oracle.
void criterion6() {
    Criterion c;
    const double secs = timed([&] {
        for (int i = 0; i < 100; ++i) {
            const int n = 2 + i % 7; // 2..8
            Rng rng(9000 + static_cast<std::uint64_t>(i));
            RicciData rd;
            rd.ric = Eigen::MatrixXd(n, n);
            for (int a = 0; a < n; ++a)
                for (int b = a; b < n; ++b) {
                    const double v = rng.uniform(-1.0, 1.0);
                    rd.ric(a, b) = v;
                    rd.ric(b, a) = v;
                }
            const auto [value, x] = sup_ric(rd);
            const RicciRange range =
                ricci_form_range_sampled(rd.ric, 100000, 777 + static_cast<std::uint64_t>(i));
            c.require(value >= range.max_sampled - 1e-12,
                      "eigen route below a raw sample at i=" + std::to_string(i));
            c.require(std::abs(value - range.max_refined) <= 1e-5,
                      "eigen " + dstr(value) + " vs sampled max " + dstr(range.max_refined) +
                          " at i=" + std::to_string(i));
        }
    });
    report(6, "sup_ric eigenvalue route matches the sampling oracle", c, secs);
}

// 7. Analytic frame gradient against central finite differences.
void criterion7() {
    Criterion c;
    const double secs = timed([&] {
        Rng rng(31415);
        for (int i = 0; i < 20; ++i) {
            const int n = 4 + i % 3; // 4..6
            const int q = 1 + i % 2;
            const Instance inst =
                random_totally_real(n, n + 1, 0.2, 0.7, 500 + static_cast<std::uint64_t>(i));
            const CurvatureTensor R = gauss_curvature_tensor(inst);
            const Eigen::MatrixXd F = haar_frame(n, 2 * q, rng);
            const Eigen::MatrixXd analytic = plane_set_objective_gradient(R, F);
            Eigen::MatrixXd fd(n, 2 * q);
            Eigen::MatrixXd probe = F;
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < 2 * q; ++b) {
                    const double keep = probe(a, b);
                    probe(a, b) = keep + 1e-6;
                    const double up = plane_set_objective_raw(R, probe);
                    probe(a, b) = keep - 1e-6;
                    const double dn = plane_set_objective_raw(R, probe);
                    probe(a, b) = keep;
                    fd(a, b) = (up - dn) / 2e-6;
                }
            }
            const double rel = (analytic - fd).norm() / std::max(1e-12, analytic.norm());
            c.require(rel <= 1e-5,
                      "relative error " + dstr(rel) + " at pair " + std::to_string(i));
        }
    });
    report(7, "analytic frame gradient validated by finite differences", c, secs);
}

// 8. Hypothesis gating end to end: library flag and CLI exit code 4.
void criterion8() {
    Criterion c;
    const double secs = timed([&] {
        Instance inst = umbilical_non_j(4, 5, 0.0, 1.0);
        inst.h[0](0, 0) += 0.1;
        const TheoremReport rep = check_theorem1(inst);
        c.require(!rep.hypothesis_ok, "library still accepts the Einstein hypothesis");

        const std::string path = "acceptance_perturbed.json";
        save_instance(inst, path);
        const auto res = cli::run(exe + " check " + path + " --theorem 1");
        c.require(res.exit_code == 4, "CLI exit code " + std::to_string(res.exit_code) + " != 4");
        c.require(cli::field(res.output, "hypothesis_ok") == "no", "CLI did not flag hypothesis");
        std::remove(path.c_str());
    });
    report(8, "off-Einstein perturbation flips the hypothesis gate (exit 4)", c, secs);
}

// 9. Exact file round-trips and byte-identical CSV reruns.
void criterion9() {
    Criterion c;
    const double secs = timed([&] {
        for (std::uint64_t seed : {3ull, 4ull, 5ull}) {
            const Instance inst = random_totally_real(5, 6, -0.3, 0.8, seed);
            const Instance back = parse_instance(serialize_instance(inst));
            bool same = inst.n == back.n && inst.m == back.m && inst.c == back.c;
            for (std::size_t r = 0; same && r < inst.h.size(); ++r) {
                same = inst.h[r] == back.h[r];
            }
            c.require(same, "round trip altered instance with seed " + std::to_string(seed));
        }

        const std::string sweep_cmd = exe + " sweep --family umbilical --param-range 0:2:9" +
                                      " --n 4 --m 5 --c 0 --theorem 2 --q 1 --seed 11 --out ";
        c.require(cli::run(sweep_cmd + "acceptance_sweep1.csv").exit_code == 0, "sweep run 1 failed");
        c.require(cli::run(sweep_cmd + "acceptance_sweep2.csv").exit_code == 0, "sweep run 2 failed");
        const std::string s1 = cli::read_file("acceptance_sweep1.csv");
        const std::string s2 = cli::read_file("acceptance_sweep2.csv");
        c.require(!s1.empty() && s1 == s2, "sweep CSV not byte-identical across reruns");
        std::remove("acceptance_sweep1.csv");
        std::remove("acceptance_sweep2.csv");

        const std::string fuzz_cmd = exe + " fuzz --lemma 33 --trials 3000 --seed 21 --out ";
        c.require(cli::run(fuzz_cmd + "acceptance_fuzz1.csv").exit_code == 0, "fuzz run 1 failed");
        c.require(cli::run(fuzz_cmd + "acceptance_fuzz2.csv").exit_code == 0, "fuzz run 2 failed");
        const std::string f1 = cli::read_file("acceptance_fuzz1.csv");
        const std::string f2 = cli::read_file("acceptance_fuzz2.csv");
        c.require(!f1.empty() && f1 == f2, "fuzz CSV not byte-identical across reruns");
        std::remove("acceptance_fuzz1.csv");
        std::remove("acceptance_fuzz2.csv");
    });
    report(9, "exact round-trips and byte-identical CSV reruns", c, secs);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
