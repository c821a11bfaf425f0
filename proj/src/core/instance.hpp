#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/config.hpp"

namespace deltaric {

/// Pointwise second-fundamental-form data of a totally real submanifold M^n
/// of a complex space form N^m(4c), expressed in an adapted frame. All
/// quantities are dimensionless (lengths normalized).
///
/// Normal index layout (1-based r, mirroring the adapted frame order):
///   r = 1 .. m-n        non-J normals e_{n+1}, ..., e_m
///   r = m-n+1 .. 2m-n   J-normals Je_1, ..., Je_m
///
/// For the J-normals Je_k with k <= n the coefficient 3-array
/// C[k][i][j] = h[m-n+k](i,j) must be totally symmetric in (k,i,j); this is
/// the algebraic trace the complex structure leaves on tangent data.
struct Instance {
    int n = 0;      // tangent dimension, >= 2
    int m = 0;      // ambient complex dimension, >= n
    double c = 0.0; // one quarter of the constant holomorphic sectional curvature 4c
    std::vector<Eigen::MatrixXd> h; // 2m-n symmetric n x n matrices

    Instance() = default;

    /// Zero second fundamental form. Rejects n < 2 or m < n with a Domain error.
    Instance(int n_, int m_, double c_);

    int num_normals() const { return 2 * m - n; }

    /// 1-based normal index r labels a J-normal?
    bool is_j_normal(int r) const { return r > m - n; }

    /// For a J-normal index r, the k of Je_k (1-based).
    int j_index(int r) const { return r - (m - n); }

    /// Checks every stored invariant: n >= 2, m >= n, normal count 2m-n,
    /// exact matrix symmetry, finiteness, and the totally-real symmetry of
    /// the J-coefficients within cfg.tol_sym. Throws Error(Invariant) naming
    /// the violated invariant, or Error(Structure) on shape mismatches.
    void validate(const Config& cfg = {}) const;
};

} // namespace deltaric
