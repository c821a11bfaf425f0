// Command-line front end for the deltaric shared library. Exit codes:
//   0  success (for `check`: hypothesis holds and the bound is respected)
//   1  `check` found the bound numerically violated (investigate)
//   2  malformed input, unknown family, or a domain error (bad q, odd n, ...)
//   3  instance data violates a stored invariant (asymmetric h, broken
//      totally-real symmetry, ...)
//   4  `check` ran but the Einstein hypothesis failed; nothing is asserted

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "deltaric.h"

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void die(int code, const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(code);
}

int exit_code_for(dric_status st) {
    switch (st) {
        case DRIC_OK: return 0;
        case DRIC_ERR_INVARIANT: return 3;
        default: return 2;
    }
}

void require_ok(dric_status st) {
    if (st != DRIC_OK) die(exit_code_for(st), dric_last_error());
}

struct ConfigHandle {
    dric_config* ptr = nullptr;
    ConfigHandle() { ptr = dric_config_new(); }
    ~ConfigHandle() { dric_config_free(ptr); }
    ConfigHandle(const ConfigHandle&) = delete;
    ConfigHandle& operator=(const ConfigHandle&) = delete;
};

// Optional config file named by DELTARIC_CONFIG; command-line flags are
// applied afterwards and win.
void apply_config_env(dric_config* cfg) {
    const char* path = std::getenv("DELTARIC_CONFIG");
    if (!path || !*path) return;
    std::ifstream in(path);
    if (!in) die(2, std::string("cannot open config file '") + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        die(2, std::string("malformed config file: ") + e.what());
    }
    if (!doc.is_object()) die(2, "config file must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_number()) die(2, "config key '" + key + "' must map to a number");
        if (dric_config_set(cfg, key.c_str(), value.get<double>()) != DRIC_OK) {
            die(2, std::string("config file: ") + dric_last_error());
        }
    }
}

const char* class_name(int cls) {
    switch (cls) {
        case DRIC_CLASS_TOTALLY_GEODESIC: return "totally_geodesic";
        case DRIC_CLASS_MINIMAL: return "minimal";
        case DRIC_CLASS_PSEUDO_UMBILICAL: return "pseudo_umbilical";
        default: return "generic";
    }
}

const char* case_name(int c) {
    switch (c) {
        case DRIC_CASE_T1_MINIMAL: return "T1_minimal";
        case DRIC_CASE_T1_PSEUDO_UMBILICAL: return "T1_pseudo_umbilical";
        case DRIC_CASE_T2_TOTALLY_GEODESIC: return "T2_totally_geodesic";
        default: return "none";
    }
}

struct RangeSpec {
    double lo = 0.0;
    double hi = 0.0;
    long count = 0;
};

RangeSpec parse_range(const std::string& text) {
    RangeSpec spec;
    const auto p1 = text.find(':');
    const auto p2 = text.find(':', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) {
        die(2, "param range must be lo:hi:count, got '" + text + "'");
    }
    try {
        spec.lo = std::stod(text.substr(0, p1));
        spec.hi = std::stod(text.substr(p1 + 1, p2 - p1 - 1));
        spec.count = std::stol(text.substr(p2 + 1));
    } catch (const std::exception&) {
        die(2, "param range must be lo:hi:count, got '" + text + "'");
    }
    if (spec.count < 0) die(2, "param range count must be >= 0");
    return spec;
}

int run_compute(const std::string& path, const ConfigHandle& cfg) {
    dric_instance* inst = nullptr;
    require_ok(dric_instance_load(path.c_str(), &inst));
    const int n = dric_instance_n(inst);

    dric_invariants inv{};
    require_ok(dric_compute_invariants(inst, cfg.ptr, &inv));
    std::vector<double> eig(static_cast<std::size_t>(n));
    require_ok(dric_ricci_eigenvalues(inst, eig.data()));

    std::cout << "n: " << dric_instance_n(inst) << "\n";
    std::cout << "m: " << dric_instance_m(inst) << "\n";
    std::cout << "c: " << fmt(dric_instance_c(inst)) << "\n";
    std::cout << "tau: " << fmt(inv.tau) << "\n";
    std::cout << "ricci_eigenvalues:";
    for (double v : eig) std::cout << " " << fmt(v);
    std::cout << "\n";
    std::cout << "einstein_defect: " << fmt(inv.einstein_defect) << "\n";
    std::cout << "quasi_einstein_defect: " << fmt(inv.quasi_einstein_defect) << "\n";
    std::cout << "H: " << fmt(inv.H) << "\n";
    std::cout << "classification: " << class_name(inv.classification) << "\n";
    dric_instance_free(inst);
    return 0;
}

void print_theorem_report(const dric_theorem_report* rep) {
    std::cout << "theorem: " << dric_theorem_report_theorem(rep) << "\n";
    std::cout << "q: " << dric_theorem_report_q(rep) << "\n";
    std::cout << "hypothesis_ok: " << (dric_theorem_report_hypothesis_ok(rep) ? "yes" : "no")
              << "\n";
    std::cout << "einstein_defect: " << fmt(dric_theorem_report_einstein_defect(rep)) << "\n";
    std::cout << "sup_ric: " << fmt(dric_theorem_report_sup_ric(rep)) << "\n";
    std::cout << "k_q_inf: " << fmt(dric_theorem_report_k_q_inf(rep)) << "\n";
    std::cout << "H: " << fmt(dric_theorem_report_mean_curvature(rep)) << "\n";
    std::cout << "lhs_delta: " << fmt(dric_theorem_report_lhs(rep)) << "\n";
    std::cout << "rhs_bound: " << fmt(dric_theorem_report_rhs(rep)) << "\n";
    std::cout << "slack: " << fmt(dric_theorem_report_slack(rep)) << "\n";
    std::cout << "equality: " << (dric_theorem_report_equality(rep) ? "yes" : "no") << "\n";
    const int cse = dric_theorem_report_case(rep);
    std::cout << "certificate: " << case_name(cse) << "\n";
    if (cse != DRIC_CASE_NONE) {
        std::cout << "certificate_residual: " << fmt(dric_theorem_report_cert_residual(rep))
                  << "\n";
    }
    std::cout << "converged: " << (dric_theorem_report_converged(rep) ? "yes" : "no") << "\n";
}

int run_check(const std::string& path, int theorem, std::optional<int> q,
              const ConfigHandle& cfg) {
    dric_instance* inst = nullptr;
    require_ok(dric_instance_load(path.c_str(), &inst));

    dric_theorem_report* rep = nullptr;
    if (theorem == 1) {
        if (q && *q * 2 != dric_instance_n(inst)) {
            die(2, "theorem 1 evaluates q = k = n/2; drop --q or pass n/2");
        }
        require_ok(dric_check_theorem1(inst, cfg.ptr, &rep));
    } else {
        if (!q) die(2, "theorem 2 needs --q");
        require_ok(dric_check_theorem2(inst, *q, cfg.ptr, &rep));
    }
    print_theorem_report(rep);

    double tol_eq = 1e-8;
    dric_config_get(cfg.ptr, "tol_eq", &tol_eq);
    int code = 0;
    if (!dric_theorem_report_hypothesis_ok(rep)) {
        code = 4;
    } else if (dric_theorem_report_slack(rep) < -tol_eq) {
        code = 1;
    }
    dric_theorem_report_free(rep);
    dric_instance_free(inst);
    return code;
}

int run_fuzz(int lemma, std::int64_t trials, std::uint64_t seed, const std::string& out_path) {
    std::vector<double> lhs, rhs;
    double* lhs_ptr = nullptr;
    double* rhs_ptr = nullptr;
    if (!out_path.empty()) {
        lhs.resize(static_cast<std::size_t>(trials));
        rhs.resize(static_cast<std::size_t>(trials));
        lhs_ptr = lhs.data();
        rhs_ptr = rhs.data();
    }
    std::int64_t violations = 0;
    double min_slack = 0.0;
    require_ok(dric_fuzz_step_lemma(lemma, trials, seed, lhs_ptr, rhs_ptr, &violations, &min_slack));

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) die(2, "cannot write CSV '" + out_path + "'");
        out << "trial,lhs,rhs,slack\n";
        for (std::int64_t t = 0; t < trials; ++t) {
            const double l = lhs[static_cast<std::size_t>(t)];
            const double r = rhs[static_cast<std::size_t>(t)];
            out << t << "," << fmt(l) << "," << fmt(r) << "," << fmt(l - r) << "\n";
        }
    }
    std::cout << "lemma: " << lemma << "\n";
    std::cout << "trials: " << trials << "\n";
    std::cout << "seed: " << seed << "\n";
    std::cout << "violations: " << violations << "\n";
    std::cout << "min_slack: " << fmt(min_slack) << "\n";
    return 0;
}

int run_sweep(const std::string& family, const RangeSpec& range, int n, int m, double c,
              int theorem, int q, const std::string& out_path, const ConfigHandle& cfg) {
    if (family != "umbilical") die(2, "unknown family '" + family + "' (known: umbilical)");

    std::ofstream out(out_path, std::ios::binary);
    if (!out) die(2, "cannot write CSV '" + out_path + "'");
    out << "param,delta,bound,slack,equality_flag\n";

    for (long i = 0; i < range.count; ++i) {
        const double lambda =
            range.count == 1 ? range.lo
                             : range.lo + (range.hi - range.lo) * static_cast<double>(i) /
                                              static_cast<double>(range.count - 1);
        dric_instance* inst = nullptr;
        require_ok(dric_instance_umbilical_non_j(n, m, c, lambda, &inst));
        dric_theorem_report* rep = nullptr;
        if (theorem == 1) {
            require_ok(dric_check_theorem1(inst, cfg.ptr, &rep));
        } else {
            require_ok(dric_check_theorem2(inst, q, cfg.ptr, &rep));
        }
        out << fmt(lambda) << "," << fmt(dric_theorem_report_lhs(rep)) << ","
            << fmt(dric_theorem_report_rhs(rep)) << "," << fmt(dric_theorem_report_slack(rep))
            << "," << (dric_theorem_report_equality(rep) ? 1 : 0) << "\n";
        dric_theorem_report_free(rep);
        dric_instance_free(inst);
    }
    if (!out) die(2, "write to '" + out_path + "' failed");
    std::cout << "family: " << family << "\n";
    std::cout << "rows: " << range.count << "\n";
    std::cout << "out: " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvature invariants and inequality checks for totally real "
                 "submanifolds of complex space forms"};
    app.require_subcommand(1);

    ConfigHandle cfg;
    apply_config_env(cfg.ptr);

    // Flag overrides shared by the computing subcommands.
    std::optional<double> tol_einstein;
    std::optional<int> restarts;
    std::optional<std::uint64_t> opt_seed;
    auto add_cfg_flags = [&](CLI::App* sub) {
        sub->add_option("--tol-einstein", tol_einstein, "Einstein hypothesis tolerance");
        sub->add_option("--restarts", restarts, "optimizer restart count");
        sub->add_option("--seed", opt_seed, "optimizer base seed");
    };
    auto apply_cfg_flags = [&] {
        if (tol_einstein) require_ok(dric_config_set(cfg.ptr, "tol_einstein", *tol_einstein));
        if (restarts) require_ok(dric_config_set(cfg.ptr, "restarts", *restarts));
        if (opt_seed) {
            require_ok(dric_config_set(cfg.ptr, "seed", static_cast<double>(*opt_seed)));
        }
    };

    std::string path;
    auto* compute = app.add_subcommand("compute", "print pointwise invariants of an instance file");
    compute->add_option("path", path, "instance file")->required();
    add_cfg_flags(compute);

    int theorem = 0;
    std::optional<int> q;
    auto* check = app.add_subcommand("check", "check an inequality on an instance file");
    check->add_option("path", path, "instance file")->required();
    check->add_option("--theorem", theorem, "1 or 2")->required()->check(CLI::Range(1, 2));
    check->add_option("--q", q, "number of mutually orthogonal planes");
    add_cfg_flags(check);

    int lemma = 0;
    std::int64_t trials = 10000;
    std::uint64_t fuzz_seed = 1;
    std::string out_path;
    auto* fuzz = app.add_subcommand("fuzz", "random trials of a Cauchy step lemma");
    fuzz->add_option("--lemma", lemma, "33 or 46")->required();
    fuzz->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
    fuzz->add_option("--seed", fuzz_seed, "rng seed");
    fuzz->add_option("--out", out_path, "optional per-trial CSV");

    std::string family;
    std::string range_text;
    int sweep_n = 4;
    int sweep_m = 5;
    double sweep_c = 0.0;
    int sweep_theorem = 1;
    int sweep_q = 1;
    auto* sweep = app.add_subcommand("sweep", "slack landscape of a parameter family, as CSV");
    sweep->add_option("--family", family, "family name (umbilical)")->required();
    sweep->add_option("--param-range", range_text, "lo:hi:count")->required();
    sweep->add_option("--out", out_path, "CSV output path")->required();
    sweep->add_option("--n", sweep_n, "tangent dimension");
    sweep->add_option("--m", sweep_m, "ambient complex dimension");
    sweep->add_option("--c", sweep_c, "ambient curvature parameter");
    sweep->add_option("--theorem", sweep_theorem, "1 or 2")->check(CLI::Range(1, 2));
    sweep->add_option("--q", sweep_q, "plane count for theorem 2");
    add_cfg_flags(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    apply_cfg_flags();

    if (compute->parsed()) return run_compute(path, cfg);
    if (check->parsed()) return run_check(path, theorem, q, cfg);
    if (fuzz->parsed()) return run_fuzz(lemma, trials, fuzz_seed, out_path);
    if (sweep->parsed()) {
        return run_sweep(family, parse_range(range_text), sweep_n, sweep_m, sweep_c, sweep_theorem,
                         sweep_q, out_path, cfg);
    }
    return 2;
}
