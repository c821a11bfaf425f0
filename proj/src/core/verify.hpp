#pragma once

#include <optional>
#include <vector>

#include "core/delta.hpp"

namespace deltaric {

enum class EqualityCase { T1Minimal, T1PseudoUmbilical, T2TotallyGeodesic };

const char* to_string(EqualityCase c);

/// Frame-level evidence for a detected equality case: a tangent rotation in
/// whose coordinates the shape operators show the expected block pattern,
/// the per-normal 2x2 block traces, the per-normal tail multiple mu (second
/// inequality only), and the max-norm deviation from the pattern.
struct EqualityCertificate {
    EqualityCase kind = EqualityCase::T1Minimal;
    Eigen::MatrixXd frame;                         // n x n orthogonal
    std::vector<std::vector<double>> block_traces; // per constrained normal
    std::vector<double> mu;                        // per constrained normal (T2)
    double residual = 0.0;
};

struct TheoremReport {
    int theorem = 0; // 1 or 2
    int q = 0;       // for theorem 1, q = k = n/2
    bool hypothesis_ok = false;
    double lhs = 0.0;   // delta value
    double rhs = 0.0;   // bound
    double slack = 0.0; // rhs - lhs
    bool equality = false;
    std::optional<EqualityCertificate> certificate;
    DeltaReport delta;
    double einstein_defect = 0.0;
    double H = 0.0;
};

/// delta_k^Ric <= 2(k-1)(c + H^2) on n = 2k dimensional Einstein totally
/// real data, k >= 2. Both sides are always computed; when the Einstein
/// hypothesis fails within cfg.tol_einstein the report only flags it and
/// asserts nothing. |slack| <= cfg.tol_eq triggers certification.
TheoremReport check_theorem1(const Instance& inst, const Config& cfg = {});

/// delta_q^Ric <= (n-1-2q/n) c + n(n-q-1)/(n-q) H^2 for 1 <= q < n/2
/// (strict). Equality is certified as the totally geodesic case only.
TheoremReport check_theorem2(const Instance& inst, int q, const Config& cfg = {});

struct StepCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false; // lhs >= rhs - 1e-12
};

/// Cauchy step for the first inequality: sum of squared pair sums against
/// (total sum)^2 / k; equality exactly when all pair sums agree.
StepCheck step_inequality_33(const std::vector<double>& pair_sums);

/// Cauchy step for the second inequality: q pair sums and n-2q singles
/// against (total)^2 / (n-q); equality when all terms agree.
StepCheck step_inequality_46(const std::vector<double>& pair_sums,
                             const std::vector<double>& singles);

enum class Corollary1Result { NotEinsteinCertified, Inconclusive };
enum class Corollary2Result { NoMinimalImmersionCertified, Inconclusive };

/// Complex-Euclidean ambient only (c = 0, Domain error otherwise): certifies
/// non-Einstein-ness when delta_q^Ric exceeds n(n-q-1)/(n-q) H^2 beyond
/// tol_eq. Valid for 1 <= q <= n/2; at q = n/2 the threshold coincides with
/// the first inequality's 2(k-1) H^2.
Corollary1Result corollary1(const Instance& inst, int q, const Config& cfg = {});

/// Intrinsic obstruction: given only the curvature tensor, certifies that no
/// totally real minimal isometric immersion into a complex space form of
/// parameter c exists when delta_q^Ric > (n-1-2q/n) c beyond tol_eq.
Corollary2Result corollary2(const CurvatureTensor& R, int q, double c, const Config& cfg = {});

struct FuzzResult {
    long trials = 0;
    long violations = 0;
    double min_slack = 0.0;
    std::vector<double> lhs; // per trial, filled when record_rows
    std::vector<double> rhs;
};

/// Seed-deterministic random trials of one step lemma (33 or 46). Lemma 33
/// draws k in {2..5}; lemma 46 draws (n,q) from {(4,1),(6,1),(6,2),(8,3)};
/// values are uniform in [-2, 2].
FuzzResult fuzz_step_lemma(int lemma, long trials, std::uint64_t seed, bool record_rows = false);

} // namespace deltaric
