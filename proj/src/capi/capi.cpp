#include "deltaric.h"

#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/curvature.hpp"
#include "core/delta.hpp"
#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/instance.hpp"
#include "core/io.hpp"
#include "core/verify.hpp"

struct dric_instance {
    deltaric::Instance impl;
};

struct dric_config {
    deltaric::Config impl;
};

struct dric_delta_report {
    deltaric::DeltaReport impl;
    int n = 0;
};

struct dric_theorem_report {
    deltaric::TheoremReport impl;
    int n = 0;
};

namespace {

thread_local std::string t_last_error;

dric_status status_of(const deltaric::Error& e) {
    switch (e.kind()) {
        case deltaric::ErrorKind::Domain: return DRIC_ERR_DOMAIN;
        case deltaric::ErrorKind::Structure: return DRIC_ERR_STRUCTURE;
        case deltaric::ErrorKind::Constraint: return DRIC_ERR_CONSTRAINT;
        case deltaric::ErrorKind::Parse: return DRIC_ERR_PARSE;
        case deltaric::ErrorKind::Invariant: return DRIC_ERR_INVARIANT;
        case deltaric::ErrorKind::Io: return DRIC_ERR_IO;
    }
    return DRIC_ERR_INTERNAL;
}

template <typename Fn>
dric_status guarded(Fn&& fn) {
    try {
        fn();
        return DRIC_OK;
    } catch (const deltaric::Error& e) {
        t_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return DRIC_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown failure";
        return DRIC_ERR_INTERNAL;
    }
}

dric_status null_arg(const char* what) {
    t_last_error = std::string("required argument '") + what + "' is NULL";
    return DRIC_ERR_NULL_ARG;
}

deltaric::Config effective(const dric_config* cfg) {
    return cfg ? cfg->impl : deltaric::Config{};
}

} // namespace

extern "C" {

const char* dric_last_error(void) { return t_last_error.c_str(); }

/* ---- configuration ---- */

dric_config* dric_config_new(void) { return new (std::nothrow) dric_config{}; }

void dric_config_free(dric_config* cfg) { delete cfg; }

dric_status dric_config_set(dric_config* cfg, const char* key, double value) {
    if (!cfg) return null_arg("cfg");
    if (!key) return null_arg("key");
    return guarded([&] { cfg->impl.set(key, value); });
}

dric_status dric_config_get(const dric_config* cfg, const char* key, double* out) {
    if (!cfg) return null_arg("cfg");
    if (!key) return null_arg("key");
    if (!out) return null_arg("out");
    return guarded([&] { *out = cfg->impl.get(key); });
}

/* ---- instances ---- */

dric_status dric_instance_new(int n, int m, double c, dric_instance** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new dric_instance{deltaric::Instance(n, m, c)}; });
}

dric_status dric_instance_totally_geodesic(int n, int m, double c, dric_instance** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new dric_instance{deltaric::totally_geodesic(n, m, c)}; });
}

dric_status dric_instance_umbilical_non_j(int n, int m, double c, double lambda,
                                          dric_instance** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new dric_instance{deltaric::umbilical_non_j(n, m, c, lambda)}; });
}

dric_status dric_instance_random_totally_real(int n, int m, double c, double scale, uint64_t seed,
                                              dric_instance** out) {
    if (!out) return null_arg("out");
    return guarded(
        [&] { *out = new dric_instance{deltaric::random_totally_real(n, m, c, scale, seed)}; });
}

dric_status dric_instance_block_minimal(int k, int m, double c, const int* normal_indices,
                                        int num_directions, const double* blocks,
                                        dric_instance** out) {
    if (!out) return null_arg("out");
    if (num_directions > 0 && (!normal_indices || !blocks)) return null_arg("normal_indices/blocks");
    return guarded([&] {
        std::map<int, std::vector<Eigen::Matrix2d>> by_normal;
        for (int d = 0; d < num_directions; ++d) {
            std::vector<Eigen::Matrix2d> bs;
            bs.reserve(static_cast<std::size_t>(k));
            for (int b = 0; b < k; ++b) {
                const double* p = blocks + (static_cast<std::size_t>(d) * k + b) * 4;
                Eigen::Matrix2d blk;
                blk << p[0], p[1], p[2], p[3];
                bs.push_back(blk);
            }
            by_normal[normal_indices[d]] = std::move(bs);
        }
        *out = new dric_instance{deltaric::block_minimal(k, m, c, by_normal)};
    });
}

dric_status dric_instance_parse(const char* text, dric_instance** out) {
    if (!text) return null_arg("text");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new dric_instance{deltaric::parse_instance(text)}; });
}

dric_status dric_instance_load(const char* path, dric_instance** out) {
    if (!path) return null_arg("path");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new dric_instance{deltaric::load_instance(path)}; });
}

dric_status dric_instance_serialize(const dric_instance* inst, char** out_text) {
    if (!inst) return null_arg("inst");
    if (!out_text) return null_arg("out_text");
    return guarded([&] {
        const std::string text = deltaric::serialize_instance(inst->impl);
        char* buf = new char[text.size() + 1];
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out_text = buf;
    });
}

dric_status dric_instance_save(const dric_instance* inst, const char* path) {
    if (!inst) return null_arg("inst");
    if (!path) return null_arg("path");
    return guarded([&] { deltaric::save_instance(inst->impl, path); });
}

dric_status dric_instance_set_h(dric_instance* inst, int r, const double* row_major) {
    if (!inst) return null_arg("inst");
    if (!row_major) return null_arg("row_major");
    return guarded([&] {
        if (r < 1 || r > inst->impl.num_normals()) {
            deltaric::fail(deltaric::ErrorKind::Domain,
                           "normal index r=" + std::to_string(r) + " out of range");
        }
        const int n = inst->impl.n;
        Eigen::MatrixXd& a = inst->impl.h[static_cast<std::size_t>(r - 1)];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = row_major[i * n + j];
    });
}

dric_status dric_instance_get_h(const dric_instance* inst, int r, double* out_row_major) {
    if (!inst) return null_arg("inst");
    if (!out_row_major) return null_arg("out_row_major");
    return guarded([&] {
        if (r < 1 || r > inst->impl.num_normals()) {
            deltaric::fail(deltaric::ErrorKind::Domain,
                           "normal index r=" + std::to_string(r) + " out of range");
        }
        const int n = inst->impl.n;
        const Eigen::MatrixXd& a = inst->impl.h[static_cast<std::size_t>(r - 1)];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out_row_major[i * n + j] = a(i, j);
    });
}

dric_status dric_instance_validate(const dric_instance* inst, const dric_config* cfg) {
    if (!inst) return null_arg("inst");
    return guarded([&] { inst->impl.validate(effective(cfg)); });
}

void dric_instance_free(dric_instance* inst) { delete inst; }

void dric_string_free(char* text) { delete[] text; }

int dric_instance_n(const dric_instance* inst) { return inst ? inst->impl.n : 0; }
int dric_instance_m(const dric_instance* inst) { return inst ? inst->impl.m : 0; }
double dric_instance_c(const dric_instance* inst) { return inst ? inst->impl.c : 0.0; }
int dric_instance_num_normals(const dric_instance* inst) {
    return inst ? inst->impl.num_normals() : 0;
}

/* ---- pointwise invariants ---- */

dric_status dric_compute_invariants(const dric_instance* inst, const dric_config* cfg,
                                    dric_invariants* out) {
    if (!inst) return null_arg("inst");
    if (!out) return null_arg("out");
    return guarded([&] {
        const deltaric::Config c = effective(cfg);
        const deltaric::RicciData ricci =
            deltaric::ricci_data(deltaric::gauss_curvature_tensor(inst->impl));
        const deltaric::MeanCurvatureData mc = deltaric::mean_curvature(inst->impl);
        out->tau = ricci.tau;
        out->H = mc.H;
        out->einstein_defect = ricci.einstein_defect;
        out->quasi_einstein_defect = ricci.quasi_einstein_defect;
        out->classification = static_cast<int>(deltaric::classify_pointwise(inst->impl, c));
    });
}

dric_status dric_ricci_matrix(const dric_instance* inst, double* out_row_major) {
    if (!inst) return null_arg("inst");
    if (!out_row_major) return null_arg("out_row_major");
    return guarded([&] {
        const deltaric::RicciData ricci =
            deltaric::ricci_data(deltaric::gauss_curvature_tensor(inst->impl));
        const int n = inst->impl.n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out_row_major[i * n + j] = ricci.ric(i, j);
    });
}

dric_status dric_ricci_eigenvalues(const dric_instance* inst, double* out_ascending) {
    if (!inst) return null_arg("inst");
    if (!out_ascending) return null_arg("out_ascending");
    return guarded([&] {
        const deltaric::RicciData ricci =
            deltaric::ricci_data(deltaric::gauss_curvature_tensor(inst->impl));
        for (int i = 0; i < inst->impl.n; ++i) out_ascending[i] = ricci.eigenvalues(i);
    });
}

/* ---- delta invariant ---- */

dric_status dric_delta_q_ric(const dric_instance* inst, int q, const dric_config* cfg,
                             dric_delta_report** out) {
    if (!inst) return null_arg("inst");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new dric_delta_report{deltaric::delta_q_ric(inst->impl, q, effective(cfg)),
                                     inst->impl.n};
    });
}

void dric_delta_report_free(dric_delta_report* rep) { delete rep; }

int dric_delta_report_q(const dric_delta_report* rep) { return rep ? rep->impl.q : 0; }
double dric_delta_report_sup_ric(const dric_delta_report* rep) {
    return rep ? rep->impl.sup_ric : 0.0;
}
double dric_delta_report_k_q_inf(const dric_delta_report* rep) {
    return rep ? rep->impl.k_q_inf : 0.0;
}
double dric_delta_report_value(const dric_delta_report* rep) {
    return rep ? rep->impl.delta_q_ric : 0.0;
}
int dric_delta_report_restarts_used(const dric_delta_report* rep) {
    return rep ? rep->impl.restarts_used : 0;
}
int dric_delta_report_converged(const dric_delta_report* rep) {
    return rep && rep->impl.converged ? 1 : 0;
}
int dric_delta_report_has_oracle_gap(const dric_delta_report* rep) {
    return rep && rep->impl.oracle_gap.has_value() ? 1 : 0;
}
double dric_delta_report_oracle_gap(const dric_delta_report* rep) {
    return rep && rep->impl.oracle_gap ? *rep->impl.oracle_gap : 0.0;
}

dric_status dric_delta_report_argmin_frame(const dric_delta_report* rep, double* out) {
    if (!rep) return null_arg("rep");
    if (!out) return null_arg("out");
    return guarded([&] {
        const Eigen::MatrixXd& f = rep->impl.argmin_frame.F;
        for (int i = 0; i < f.rows(); ++i)
            for (int j = 0; j < f.cols(); ++j) out[i * f.cols() + j] = f(i, j);
    });
}

/* ---- theorem checks ---- */

dric_status dric_check_theorem1(const dric_instance* inst, const dric_config* cfg,
                                dric_theorem_report** out) {
    if (!inst) return null_arg("inst");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new dric_theorem_report{deltaric::check_theorem1(inst->impl, effective(cfg)),
                                       inst->impl.n};
    });
}

dric_status dric_check_theorem2(const dric_instance* inst, int q, const dric_config* cfg,
                                dric_theorem_report** out) {
    if (!inst) return null_arg("inst");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new dric_theorem_report{deltaric::check_theorem2(inst->impl, q, effective(cfg)),
                                       inst->impl.n};
    });
}

void dric_theorem_report_free(dric_theorem_report* rep) { delete rep; }

int dric_theorem_report_theorem(const dric_theorem_report* rep) {
    return rep ? rep->impl.theorem : 0;
}
int dric_theorem_report_q(const dric_theorem_report* rep) { return rep ? rep->impl.q : 0; }
int dric_theorem_report_hypothesis_ok(const dric_theorem_report* rep) {
    return rep && rep->impl.hypothesis_ok ? 1 : 0;
}
double dric_theorem_report_lhs(const dric_theorem_report* rep) { return rep ? rep->impl.lhs : 0.0; }
double dric_theorem_report_rhs(const dric_theorem_report* rep) { return rep ? rep->impl.rhs : 0.0; }
double dric_theorem_report_slack(const dric_theorem_report* rep) {
    return rep ? rep->impl.slack : 0.0;
}
int dric_theorem_report_equality(const dric_theorem_report* rep) {
    return rep && rep->impl.equality ? 1 : 0;
}
double dric_theorem_report_einstein_defect(const dric_theorem_report* rep) {
    return rep ? rep->impl.einstein_defect : 0.0;
}
double dric_theorem_report_mean_curvature(const dric_theorem_report* rep) {
    return rep ? rep->impl.H : 0.0;
}
double dric_theorem_report_sup_ric(const dric_theorem_report* rep) {
    return rep ? rep->impl.delta.sup_ric : 0.0;
}
double dric_theorem_report_k_q_inf(const dric_theorem_report* rep) {
    return rep ? rep->impl.delta.k_q_inf : 0.0;
}
int dric_theorem_report_converged(const dric_theorem_report* rep) {
    return rep && rep->impl.delta.converged ? 1 : 0;
}

int dric_theorem_report_case(const dric_theorem_report* rep) {
    if (!rep || !rep->impl.certificate) return DRIC_CASE_NONE;
    switch (rep->impl.certificate->kind) {
        case deltaric::EqualityCase::T1Minimal: return DRIC_CASE_T1_MINIMAL;
        case deltaric::EqualityCase::T1PseudoUmbilical: return DRIC_CASE_T1_PSEUDO_UMBILICAL;
        case deltaric::EqualityCase::T2TotallyGeodesic: return DRIC_CASE_T2_TOTALLY_GEODESIC;
    }
    return DRIC_CASE_NONE;
}

double dric_theorem_report_cert_residual(const dric_theorem_report* rep) {
    return rep && rep->impl.certificate ? rep->impl.certificate->residual : 0.0;
}

int dric_theorem_report_cert_num_normals(const dric_theorem_report* rep) {
    return rep && rep->impl.certificate
               ? static_cast<int>(rep->impl.certificate->block_traces.size())
               : 0;
}

int dric_theorem_report_cert_num_blocks(const dric_theorem_report* rep) {
    if (!rep || !rep->impl.certificate || rep->impl.certificate->block_traces.empty()) return 0;
    return static_cast<int>(rep->impl.certificate->block_traces.front().size());
}

dric_status dric_theorem_report_cert_block_traces(const dric_theorem_report* rep, int normal_idx,
                                                  double* out_traces) {
    if (!rep) return null_arg("rep");
    if (!out_traces) return null_arg("out_traces");
    return guarded([&] {
        if (!rep->impl.certificate) {
            deltaric::fail(deltaric::ErrorKind::Domain, "report carries no certificate");
        }
        const auto& traces = rep->impl.certificate->block_traces;
        if (normal_idx < 0 || normal_idx >= static_cast<int>(traces.size())) {
            deltaric::fail(deltaric::ErrorKind::Domain, "certificate normal index out of range");
        }
        const auto& row = traces[static_cast<std::size_t>(normal_idx)];
        for (std::size_t i = 0; i < row.size(); ++i) out_traces[i] = row[i];
    });
}

dric_status dric_theorem_report_cert_mu(const dric_theorem_report* rep, double* out_mu) {
    if (!rep) return null_arg("rep");
    if (!out_mu) return null_arg("out_mu");
    return guarded([&] {
        if (!rep->impl.certificate) {
            deltaric::fail(deltaric::ErrorKind::Domain, "report carries no certificate");
        }
        const auto& mu = rep->impl.certificate->mu;
        for (std::size_t i = 0; i < mu.size(); ++i) out_mu[i] = mu[i];
    });
}

dric_status dric_theorem_report_cert_frame(const dric_theorem_report* rep, double* out_row_major) {
    if (!rep) return null_arg("rep");
    if (!out_row_major) return null_arg("out_row_major");
    return guarded([&] {
        if (!rep->impl.certificate) {
            deltaric::fail(deltaric::ErrorKind::Domain, "report carries no certificate");
        }
        const Eigen::MatrixXd& f = rep->impl.certificate->frame;
        for (int i = 0; i < f.rows(); ++i)
            for (int j = 0; j < f.cols(); ++j) out_row_major[i * f.cols() + j] = f(i, j);
    });
}

/* ---- corollaries ---- */

dric_status dric_corollary1(const dric_instance* inst, int q, const dric_config* cfg,
                            int* out_certified) {
    if (!inst) return null_arg("inst");
    if (!out_certified) return null_arg("out_certified");
    return guarded([&] {
        *out_certified = deltaric::corollary1(inst->impl, q, effective(cfg)) ==
                                 deltaric::Corollary1Result::NotEinsteinCertified
                             ? 1
                             : 0;
    });
}

dric_status dric_corollary2(const dric_instance* inst, int q, double c_target,
                            const dric_config* cfg, int* out_certified) {
    if (!inst) return null_arg("inst");
    if (!out_certified) return null_arg("out_certified");
    return guarded([&] {
        const deltaric::CurvatureTensor tensor = deltaric::gauss_curvature_tensor(inst->impl);
        *out_certified = deltaric::corollary2(tensor, q, c_target, effective(cfg)) ==
                                 deltaric::Corollary2Result::NoMinimalImmersionCertified
                             ? 1
                             : 0;
    });
}

dric_status dric_corollary2_tensor(const double* tensor, int n, int q, double c_target,
                                   const dric_config* cfg, int* out_certified) {
    if (!tensor) return null_arg("tensor");
    if (!out_certified) return null_arg("out_certified");
    return guarded([&] {
        const std::size_t count =
            static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * n * n;
        std::vector<double> comp(tensor, tensor + count);
        const deltaric::CurvatureTensor r(n, std::move(comp));
        *out_certified = deltaric::corollary2(r, q, c_target, effective(cfg)) ==
                                 deltaric::Corollary2Result::NoMinimalImmersionCertified
                             ? 1
                             : 0;
    });
}

/* ---- step lemmas ---- */

dric_status dric_step_inequality_33(const double* pair_sums, int k, double* out_lhs,
                                    double* out_rhs, int* out_holds) {
    if (!pair_sums) return null_arg("pair_sums");
    if (!out_lhs || !out_rhs || !out_holds) return null_arg("out");
    return guarded([&] {
        if (k < 1) deltaric::fail(deltaric::ErrorKind::Domain, "k must be >= 1");
        const deltaric::StepCheck chk =
            deltaric::step_inequality_33(std::vector<double>(pair_sums, pair_sums + k));
        *out_lhs = chk.lhs;
        *out_rhs = chk.rhs;
        *out_holds = chk.holds ? 1 : 0;
    });
}

dric_status dric_step_inequality_46(const double* pair_sums, int q, const double* singles,
                                    int num_singles, double* out_lhs, double* out_rhs,
                                    int* out_holds) {
    if (!pair_sums || !singles) return null_arg("pair_sums/singles");
    if (!out_lhs || !out_rhs || !out_holds) return null_arg("out");
    return guarded([&] {
        if (q < 1 || num_singles < 1) {
            deltaric::fail(deltaric::ErrorKind::Domain, "need q >= 1 pair sums and >= 1 singles");
        }
        const deltaric::StepCheck chk =
            deltaric::step_inequality_46(std::vector<double>(pair_sums, pair_sums + q),
                                         std::vector<double>(singles, singles + num_singles));
        *out_lhs = chk.lhs;
        *out_rhs = chk.rhs;
        *out_holds = chk.holds ? 1 : 0;
    });
}

dric_status dric_fuzz_step_lemma(int lemma, int64_t trials, uint64_t seed, double* out_lhs,
                                 double* out_rhs, int64_t* out_violations, double* out_min_slack) {
    if (!out_violations || !out_min_slack) return null_arg("out");
    return guarded([&] {
        const bool record = out_lhs != nullptr || out_rhs != nullptr;
        const deltaric::FuzzResult res =
            deltaric::fuzz_step_lemma(lemma, static_cast<long>(trials), seed, record);
        *out_violations = res.violations;
        *out_min_slack = res.min_slack;
        if (record) {
            for (std::size_t i = 0; i < res.lhs.size(); ++i) {
                if (out_lhs) out_lhs[i] = res.lhs[i];
                if (out_rhs) out_rhs[i] = res.rhs[i];
            }
        }
    });
}

} // extern "C"
