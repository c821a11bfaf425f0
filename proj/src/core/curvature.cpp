#include "core/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"

namespace deltaric {

namespace {

std::size_t flat(int n, int i, int j, int k, int l) {
    return static_cast<std::size_t>(((i * n + j) * n + k) * n + l);
}

} // namespace

CurvatureTensor::CurvatureTensor(int n, std::vector<double> components, double tol)
    : n_(n), r_(std::move(components)) {
    if (n_ < 2) fail(ErrorKind::Structure, "curvature tensor needs dimension >= 2");
    const std::size_t want = static_cast<std::size_t>(n_) * n_ * n_ * n_;
    if (r_.size() != want) {
        fail(ErrorKind::Structure, "curvature tensor needs " + std::to_string(want) +
                                       " components, got " + std::to_string(r_.size()));
    }
    for (double v : r_) {
        if (!std::isfinite(v)) fail(ErrorKind::Invariant, "curvature tensor has a non-finite component");
    }
    if (symmetry_defect() > tol) {
        fail(ErrorKind::Invariant, "curvature tensor symmetries violated beyond tolerance");
    }
}

CurvatureTensor CurvatureTensor::trusted(int n, std::vector<double> components) {
    CurvatureTensor t;
    t.n_ = n;
    t.r_ = std::move(components);
    return t;
}

double CurvatureTensor::symmetry_defect() const {
    const auto& me = *this;
    double worst = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                for (int l = 0; l < n_; ++l) {
                    const double v = me(i, j, k, l);
                    worst = std::max(worst, std::abs(v + me(j, i, k, l)));
                    worst = std::max(worst, std::abs(v + me(i, j, l, k)));
                    worst = std::max(worst, std::abs(v - me(k, l, i, j)));
                    worst = std::max(worst, std::abs(v + me(j, k, i, l) + me(k, i, j, l)));
                }
    return worst;
}

CurvatureTensor gauss_curvature_tensor(const Instance& inst) {
    const int n = inst.n;
    if (n < 2) fail(ErrorKind::Structure, "instance has n < 2");
    if (static_cast<int>(inst.h.size()) != inst.num_normals()) {
        fail(ErrorKind::Structure, "h array has " + std::to_string(inst.h.size()) +
                                       " matrices, expected 2m-n = " +
                                       std::to_string(inst.num_normals()));
    }
    for (std::size_t r = 0; r < inst.h.size(); ++r) {
        if (inst.h[r].rows() != n || inst.h[r].cols() != n) {
            fail(ErrorKind::Structure, "h[r=" + std::to_string(r + 1) + "] is not " +
                                           std::to_string(n) + "x" + std::to_string(n));
        }
    }

    std::vector<double> comp(static_cast<std::size_t>(n) * n * n * n, 0.0);
    // Fill the canonical positions i<j, k<l, (i,j) <= (k,l) and reflect through
    // the tensor symmetries; positions with i==j or k==l stay zero.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = i; k < n; ++k) {
                for (int l = k + 1; l < n; ++l) {
                    if (k == i && l < j) continue;
                    double v = (k == i && l == j) ? inst.c : 0.0;
                    for (const Eigen::MatrixXd& hr : inst.h) {
                        v += hr(i, k) * hr(j, l) - hr(i, l) * hr(j, k);
                    }
                    comp[flat(n, i, j, k, l)] = v;
                    comp[flat(n, j, i, k, l)] = -v;
                    comp[flat(n, i, j, l, k)] = -v;
                    comp[flat(n, j, i, l, k)] = v;
                    comp[flat(n, k, l, i, j)] = v;
                    comp[flat(n, l, k, i, j)] = -v;
                    comp[flat(n, k, l, j, i)] = -v;
                    comp[flat(n, l, k, j, i)] = v;
                }
            }
        }
    }
    return CurvatureTensor::trusted(n, std::move(comp));
}

double plane_curvature(const CurvatureTensor& R, const double* u, const double* v) {
    const int n = R.dim();
    const int nn = n * n;
    // K = sum_{ab} w[a] w[b] R[a][b] with w = u (x) v flattened; the inner
    // loop walks the tensor contiguously.
    static thread_local std::vector<double> w;
    w.resize(static_cast<std::size_t>(nn));
    for (int i = 0; i < n; ++i) {
        const double ui = u[i];
        for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(i * n + j)] = ui * v[j];
    }
    const double* rp = R.data();
    double acc = 0.0;
    for (int a = 0; a < nn; ++a, rp += nn) {
        const double wa = w[static_cast<std::size_t>(a)];
        if (wa == 0.0) continue;
        double inner = 0.0;
        for (int b = 0; b < nn; ++b) inner += rp[b] * w[static_cast<std::size_t>(b)];
        acc += wa * inner;
    }
    return acc;
}

double sectional_curvature(const CurvatureTensor& R, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& v) {
    const int n = R.dim();
    if (u.size() != n || v.size() != n) {
        fail(ErrorKind::Structure, "plane vectors must have length " + std::to_string(n));
    }
    constexpr double tol = 1e-10;
    if (std::abs(u.squaredNorm() - 1.0) > tol || std::abs(v.squaredNorm() - 1.0) > tol ||
        std::abs(u.dot(v)) > tol) {
        fail(ErrorKind::Domain, "sectional_curvature requires an orthonormal pair (tolerance 1e-10)");
    }
    return plane_curvature(R, u.data(), v.data());
}

RicciData ricci_data(const CurvatureTensor& R) {
    const int n = R.dim();
    RicciData out;
    out.ric = Eigen::MatrixXd(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += R(i, k, j, k);
            out.ric(i, j) = s;
        }
    }
    out.tau = 0.5 * out.ric.trace();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.ric);
    out.eigenvalues = es.eigenvalues(); // ascending
    out.einstein_defect = out.eigenvalues(n - 1) - out.eigenvalues(0);

    double best = out.einstein_defect;
    for (int skip = 0; skip < n; ++skip) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            if (i == skip) continue;
            lo = std::min(lo, out.eigenvalues(i));
            hi = std::max(hi, out.eigenvalues(i));
        }
        best = std::min(best, hi - lo);
    }
    out.quasi_einstein_defect = best;
    return out;
}

MeanCurvatureData mean_curvature(const Instance& inst) {
    MeanCurvatureData out;
    out.H_vec = Eigen::VectorXd(inst.num_normals());
    for (int r = 0; r < inst.num_normals(); ++r) {
        out.H_vec(r) = inst.h[static_cast<std::size_t>(r)].trace() / inst.n;
    }
    out.H = out.H_vec.norm();
    return out;
}

PointClass classify_pointwise(const Instance& inst, const Config& cfg) {
    double max_h = 0.0;
    for (const Eigen::MatrixXd& hr : inst.h) {
        if (hr.size() > 0) max_h = std::max(max_h, hr.cwiseAbs().maxCoeff());
    }
    if (max_h <= cfg.tol_tg) return PointClass::TotallyGeodesic;

    const MeanCurvatureData mc = mean_curvature(inst);
    if (mc.H <= cfg.tol_min) return PointClass::Minimal;

    // Shape operator in the unit mean-curvature direction.
    Eigen::MatrixXd a_h = Eigen::MatrixXd::Zero(inst.n, inst.n);
    for (int r = 0; r < inst.num_normals(); ++r) {
        a_h += (mc.H_vec(r) / mc.H) * inst.h[static_cast<std::size_t>(r)];
    }
    const double lambda = a_h.trace() / inst.n;
    a_h.diagonal().array() -= lambda;
    if (a_h.cwiseAbs().maxCoeff() <= cfg.tol_pu) return PointClass::PseudoUmbilical;
    return PointClass::Generic;
}

const char* to_string(PointClass cls) {
    switch (cls) {
        case PointClass::TotallyGeodesic: return "totally_geodesic";
        case PointClass::Minimal: return "minimal";
        case PointClass::PseudoUmbilical: return "pseudo_umbilical";
        case PointClass::Generic: return "generic";
    }
    return "generic";
}

} // namespace deltaric
