#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <utility>

#include "core/config.hpp"
#include "core/curvature.hpp"
#include "core/rng.hpp"

namespace deltaric {

/// q mutually orthogonal plane sections encoded as an n x 2q matrix with
/// orthonormal columns; plane l spans columns 2l and 2l+1 (0-based).
struct PlaneSet {
    Eigen::MatrixXd F;

    int q() const { return static_cast<int>(F.cols()) / 2; }
    double orthonormality_defect() const;

    /// F^T F = I within tol and 2q <= n; Domain error otherwise.
    void validate(double tol = 1e-10) const;
};

struct OptimizerDiagnostics {
    int restarts_used = 0;
    bool converged = false;       // best restart stopped via the decrease rule
    long total_iterations = 0;
    double enumeration_best = 0.0; // best coordinate-pairing value (upper bound)
    bool enumeration_won = false;  // enumeration beat every descent run
};

struct KqInfResult {
    double value = 0.0;
    PlaneSet frame;
    OptimizerDiagnostics diag;
};

struct DeltaReport {
    int q = 0;
    double sup_ric = 0.0;
    double k_q_inf = 0.0;
    double delta_q_ric = 0.0; // sup_ric - (2q/n) k_q_inf, stored as computed
    PlaneSet argmin_frame;
    int restarts_used = 0;
    bool converged = false;
    std::optional<double> oracle_gap; // optimizer value minus oracle best, when run
};

/// Mean sectional curvature of the q planes: (1/q) sum_l K(plane l).
/// Domain error when 2q > n.
double plane_set_objective(const CurvatureTensor& R, const PlaneSet& F);

/// Same polynomial without the orthonormality requirement; this is the
/// function the analytic gradient differentiates and the finite-difference
/// validation probes.
double plane_set_objective_raw(const CurvatureTensor& R, const Eigen::MatrixXd& F);

/// Euclidean gradient of plane_set_objective_raw with respect to the frame
/// entries.
Eigen::MatrixXd plane_set_objective_gradient(const CurvatureTensor& R, const Eigen::MatrixXd& F);

/// Minimizes plane_set_objective over orthonormal 2q-frames: multi-start
/// projected gradient descent with a QR-based orthonormalization retraction,
/// deterministic Haar starts derived from cfg.seed, stopping when an
/// iteration improves by less than cfg.min_decrease or the iteration cap is
/// reached. The result is clamped against exhaustive coordinate-plane
/// pairings, a valid upper bound for the infimum. Ties between restarts go
/// to the earliest. Domain error unless 1 <= q <= n/2.
KqInfResult k_q_inf(const CurvatureTensor& R, int q, const Config& cfg = {});

/// Largest eigenvalue of the Ricci operator and a unit maximizer; the exact
/// supremum of Ric(X) over the unit sphere.
std::pair<double, Eigen::VectorXd> sup_ric(const RicciData& ricci);

/// Full pipeline: Gauss tensor -> Ricci -> sup_ric and k_q_inf. When
/// cfg.oracle_samples > 0 the Haar-sampling oracle also runs and oracle_gap
/// is filled with (optimizer value - refined oracle best).
DeltaReport delta_q_ric(const Instance& inst, int q, const Config& cfg = {});

/// Intrinsic route used when only the curvature tensor is available.
DeltaReport delta_q_ric(const CurvatureTensor& R, int q, const Config& cfg = {});

// --- sampling oracles -------------------------------------------------------
// Independent checks: they never call the descent path or an eigensolver.

/// Best of `samples` Haar-random orthonormal frames (Gaussian fill + QR).
std::pair<double, PlaneSet> k_q_inf_sampled(const CurvatureTensor& R, int q, long samples,
                                            std::uint64_t seed);

/// Single descent run from a given frame; used to polish an oracle's best
/// sample.
std::pair<double, PlaneSet> refine_frame(const CurvatureTensor& R, const PlaneSet& start,
                                         const Config& cfg = {});

struct RicciRange {
    double max_sampled; // best raw sample
    double min_sampled;
    double max_refined; // after projected power ascent from the best sample
    double min_refined;
};

/// Range of the quadratic form X^T ric X over sampled unit vectors. Raw
/// uniform sampling alone cannot pin the extremes in more than a few
/// dimensions, so each end is polished by shifted power ascent (plain
/// matrix-vector products, no eigensolver).
RicciRange ricci_form_range_sampled(const Eigen::MatrixXd& ric, long samples, std::uint64_t seed);

/// Orthonormalized Gaussian matrix: Haar-distributed on the Stiefel manifold.
Eigen::MatrixXd haar_frame(int rows, int cols, Rng& rng);

/// Modified Gram-Schmidt with one reorthogonalization pass; R-diagonal kept
/// positive so the map is a genuine retraction.
void orthonormalize_columns(Eigen::MatrixXd& a);

} // namespace deltaric
