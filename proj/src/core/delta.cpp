#include "core/delta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace deltaric {

double PlaneSet::orthonormality_defect() const {
    if (F.size() == 0) return 0.0;
    const Eigen::MatrixXd g = F.transpose() * F;
    return (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

void PlaneSet::validate(double tol) const {
    if (F.cols() % 2 != 0 || F.cols() < 2) {
        fail(ErrorKind::Domain, "plane set needs an even, positive number of columns");
    }
    if (F.cols() > F.rows()) {
        fail(ErrorKind::Domain, "plane set needs 2q <= n, got 2q=" + std::to_string(F.cols()) +
                                    ", n=" + std::to_string(F.rows()));
    }
    if (orthonormality_defect() > tol) {
        fail(ErrorKind::Domain, "plane set columns are not orthonormal within tolerance");
    }
}

void orthonormalize_columns(Eigen::MatrixXd& a) {
    const int cols = static_cast<int>(a.cols());
    for (int j = 0; j < cols; ++j) {
        auto col = a.col(j);
        for (int pass = 0; pass < 2; ++pass) {
            for (int i = 0; i < j; ++i) col -= a.col(i).dot(col) * a.col(i);
        }
        const double norm = col.norm();
        if (norm < 1e-300) {
            fail(ErrorKind::Structure, "orthonormalization hit a rank-deficient column");
        }
        col /= norm;
    }
}

Eigen::MatrixXd haar_frame(int rows, int cols, Rng& rng) {
    Eigen::MatrixXd a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a(i, j) = rng.gaussian();
    orthonormalize_columns(a);
    return a;
}

double plane_set_objective_raw(const CurvatureTensor& R, const Eigen::MatrixXd& F) {
    const int q = static_cast<int>(F.cols()) / 2;
    double total = 0.0;
    for (int l = 0; l < q; ++l) {
        total += plane_curvature(R, F.col(2 * l).data(), F.col(2 * l + 1).data());
    }
    return total / q;
}

double plane_set_objective(const CurvatureTensor& R, const PlaneSet& planes) {
    if (planes.F.cols() % 2 != 0 || planes.F.cols() < 2 || planes.F.cols() > R.dim()) {
        fail(ErrorKind::Domain, "plane set requires 1 <= q and 2q <= n");
    }
    if (planes.F.rows() != R.dim()) {
        fail(ErrorKind::Structure, "plane set row count does not match tensor dimension");
    }
    return plane_set_objective_raw(R, planes.F);
}

Eigen::MatrixXd plane_set_objective_gradient(const CurvatureTensor& R, const Eigen::MatrixXd& F) {
    const int n = R.dim();
    const int q = static_cast<int>(F.cols()) / 2;
    const double* rp = R.data();
    Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(n, 2 * q);
    // d/du R(u,v,u,v) = 2 R(., v, u, v) and d/dv = 2 R(u, ., u, v) by pair
    // symmetry of R; both contractions fall out of one pass over the tensor.
    for (int l = 0; l < q; ++l) {
        const double* u = F.col(2 * l).data();
        const double* v = F.col(2 * l + 1).data();
        auto gu = grad.col(2 * l);
        auto gv = grad.col(2 * l + 1);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const double* block = rp + static_cast<std::size_t>((i * n + j)) * n * n;
                double inner = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double uk = u[k];
                    if (uk == 0.0) continue;
                    const double* row = block + static_cast<std::size_t>(k) * n;
                    double rowacc = 0.0;
                    for (int w = 0; w < n; ++w) rowacc += row[w] * v[w];
                    inner += uk * rowacc;
                }
                gu(i) += v[j] * inner;
                gv(j) += u[i] * inner;
            }
        }
        gu *= 2.0 / q;
        gv *= 2.0 / q;
    }
    return grad;
}

namespace {

Eigen::MatrixXd retract(Eigen::MatrixXd a) {
    orthonormalize_columns(a);
    return a;
}

struct DescentOutcome {
    double value = 0.0;
    Eigen::MatrixXd frame;
    bool converged = false;
    long iterations = 0;
};

DescentOutcome descend(const CurvatureTensor& R, Eigen::MatrixXd F, const Config& cfg) {
    double obj = plane_set_objective_raw(R, F);
    double step = 1.0;
    DescentOutcome out;
    for (long it = 0; it < cfg.max_iterations; ++it) {
        out.iterations = it + 1;
        const Eigen::MatrixXd g = plane_set_objective_gradient(R, F);
        const Eigen::MatrixXd ftg = F.transpose() * g;
        const Eigen::MatrixXd gt = g - F * ((ftg + ftg.transpose()) * 0.5);
        const double gnorm2 = gt.squaredNorm();
        if (gnorm2 <= 1e-28) {
            out.converged = true;
            break;
        }
        double t = step;
        bool accepted = false;
        Eigen::MatrixXd cand;
        double cand_obj = obj;
        for (int back = 0; back < 60; ++back) {
            cand = retract(F - t * gt);
            cand_obj = plane_set_objective_raw(R, cand);
            if (cand_obj <= obj - 1e-4 * t * gnorm2) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            out.converged = true; // no measurable descent left
            break;
        }
        const double decrease = obj - cand_obj;
        F = std::move(cand);
        obj = cand_obj;
        step = std::min(t * 2.0, 1e3);
        if (decrease < cfg.min_decrease) {
            out.converged = true;
            break;
        }
    }
    out.value = obj;
    out.frame = std::move(F);
    return out;
}

// All ways to choose 2q indices of {0..n-1} and pair them: planes are
// unordered, pairs are unordered, so pairs are produced with ascending first
// elements. Returns the best mean coordinate-plane curvature.
void enumerate_pairings(const CurvatureTensor& R, int q, int next, unsigned used,
                        std::vector<int>& picks, double sum, double& best,
                        std::vector<int>& best_picks) {
    const int n = R.dim();
    if (static_cast<int>(picks.size()) == 2 * q) {
        const double val = sum / q;
        if (val < best) {
            best = val;
            best_picks = picks;
        }
        return;
    }
    for (int a = next; a < n; ++a) {
        if (used & (1u << a)) continue;
        for (int b = a + 1; b < n; ++b) {
            if (used & (1u << b)) continue;
            picks.push_back(a);
            picks.push_back(b);
            enumerate_pairings(R, q, a + 1, used | (1u << a) | (1u << b), picks,
                               sum + R(a, b, a, b), best, best_picks);
            picks.pop_back();
            picks.pop_back();
        }
    }
}

} // namespace

KqInfResult k_q_inf(const CurvatureTensor& R, int q, const Config& cfg) {
    const int n = R.dim();
    if (q < 1 || 2 * q > n) {
        fail(ErrorKind::Domain, "k_q_inf requires 1 <= q <= n/2, got q=" + std::to_string(q) +
                                    ", n=" + std::to_string(n));
    }
    KqInfResult res;
    double best = std::numeric_limits<double>::infinity();
    Eigen::MatrixXd best_frame;
    bool best_converged = false;
    for (int restart = 0; restart < cfg.restarts; ++restart) {
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
        DescentOutcome run = descend(R, haar_frame(n, 2 * q, rng), cfg);
        res.diag.total_iterations += run.iterations;
        if (run.value < best) {
            best = run.value;
            best_frame = std::move(run.frame);
            best_converged = run.converged;
        }
    }
    res.diag.restarts_used = cfg.restarts;
    res.diag.converged = best_converged;

    std::vector<int> picks, best_picks;
    double enum_best = std::numeric_limits<double>::infinity();
    enumerate_pairings(R, q, 0, 0u, picks, 0.0, enum_best, best_picks);
    res.diag.enumeration_best = enum_best;
    if (enum_best < best) {
        res.diag.enumeration_won = true;
        best = enum_best;
        best_frame = Eigen::MatrixXd::Zero(n, 2 * q);
        for (int idx = 0; idx < 2 * q; ++idx) {
            best_frame(best_picks[static_cast<std::size_t>(idx)], idx) = 1.0;
        }
    }
    res.value = best;
    res.frame = PlaneSet{std::move(best_frame)};
    return res;
}

std::pair<double, Eigen::VectorXd> sup_ric(const RicciData& ricci) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ricci.ric);
    const int n = static_cast<int>(ricci.ric.rows());
    return {es.eigenvalues()(n - 1), es.eigenvectors().col(n - 1)};
}

DeltaReport delta_q_ric(const CurvatureTensor& R, int q, const Config& cfg) {
    const RicciData ricci = ricci_data(R);
    const auto [sup, dir] = sup_ric(ricci);
    KqInfResult kq = k_q_inf(R, q, cfg);

    DeltaReport rep;
    rep.q = q;
    rep.sup_ric = sup;
    rep.k_q_inf = kq.value;
    rep.delta_q_ric = sup - (2.0 * q / R.dim()) * kq.value;
    rep.argmin_frame = std::move(kq.frame);
    rep.restarts_used = kq.diag.restarts_used;
    rep.converged = kq.diag.converged;
    if (cfg.oracle_samples > 0) {
        auto [sampled, frame] = k_q_inf_sampled(R, q, cfg.oracle_samples,
                                                mix_seed(cfg.seed, 0x0aceull));
        auto [refined, rframe] = refine_frame(R, frame, cfg);
        (void)sampled;
        (void)rframe;
        rep.oracle_gap = rep.k_q_inf - refined;
    }
    return rep;
}

DeltaReport delta_q_ric(const Instance& inst, int q, const Config& cfg) {
    return delta_q_ric(gauss_curvature_tensor(inst), q, cfg);
}

std::pair<double, PlaneSet> k_q_inf_sampled(const CurvatureTensor& R, int q, long samples,
                                            std::uint64_t seed) {
    const int n = R.dim();
    if (q < 1 || 2 * q > n) fail(ErrorKind::Domain, "k_q_inf_sampled requires 1 <= q <= n/2");
    if (samples < 1) fail(ErrorKind::Domain, "k_q_inf_sampled requires samples >= 1");
    Rng rng(seed);
    Eigen::MatrixXd a(n, 2 * q);
    double best = std::numeric_limits<double>::infinity();
    Eigen::MatrixXd best_frame;
    for (long s = 0; s < samples; ++s) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < 2 * q; ++j) a(i, j) = rng.gaussian();
        orthonormalize_columns(a);
        const double val = plane_set_objective_raw(R, a);
        if (val < best) {
            best = val;
            best_frame = a;
        }
    }
    return {best, PlaneSet{std::move(best_frame)}};
}

std::pair<double, PlaneSet> refine_frame(const CurvatureTensor& R, const PlaneSet& start,
                                         const Config& cfg) {
    start.validate();
    if (start.F.rows() != R.dim()) {
        fail(ErrorKind::Structure, "frame row count does not match tensor dimension");
    }
    DescentOutcome run = descend(R, start.F, cfg);
    return {run.value, PlaneSet{std::move(run.frame)}};
}

namespace {

// Projected power ascent for the top eigenpair of the positive definite
// shift b = a + sigma I; returns the Rayleigh quotient of `a` at the limit.
double power_refine(const Eigen::MatrixXd& a, Eigen::VectorXd x, double sigma) {
    const long cap = 2000000;
    Eigen::VectorXd y;
    for (long it = 0; it < cap; ++it) {
        y = a * x + sigma * x;
        const double norm = y.norm();
        if (norm == 0.0) break;
        y /= norm;
        const double drift = (y - x).norm();
        x = y;
        if (drift < 1e-9) break;
    }
    return x.dot(a * x);
}

} // namespace

RicciRange ricci_form_range_sampled(const Eigen::MatrixXd& ric, long samples, std::uint64_t seed) {
    const int n = static_cast<int>(ric.rows());
    if (n < 1 || ric.cols() != n) fail(ErrorKind::Structure, "ricci matrix must be square");
    if (samples < 1) fail(ErrorKind::Domain, "sampling requires samples >= 1");
    Rng rng(seed);
    Eigen::VectorXd x(n);
    RicciRange out;
    out.max_sampled = -std::numeric_limits<double>::infinity();
    out.min_sampled = std::numeric_limits<double>::infinity();
    Eigen::VectorXd argmax = Eigen::VectorXd::Unit(n, 0);
    Eigen::VectorXd argmin = Eigen::VectorXd::Unit(n, 0);
    for (long s = 0; s < samples; ++s) {
        double norm2 = 0.0;
        do {
            for (int i = 0; i < n; ++i) x(i) = rng.gaussian();
            norm2 = x.squaredNorm();
        } while (norm2 == 0.0);
        x /= std::sqrt(norm2);
        const double val = x.dot(ric * x);
        if (val > out.max_sampled) {
            out.max_sampled = val;
            argmax = x;
        }
        if (val < out.min_sampled) {
            out.min_sampled = val;
            argmin = x;
        }
    }
    const double sigma = n * ric.cwiseAbs().maxCoeff() + 1.0;
    out.max_refined = power_refine(ric, argmax, sigma);
    out.min_refined = -power_refine(-ric, argmin, sigma);
    return out;
}

} // namespace deltaric
