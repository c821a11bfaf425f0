#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/config.hpp"
#include "core/instance.hpp"

namespace deltaric {

/// Intrinsic (0,4) curvature tensor in the adapted tangent frame, stored
/// densely. Sign convention: K(e_i ^ e_j) = R(i,j,i,j), so a vanishing
/// second fundamental form reproduces constant sectional curvature c.
class CurvatureTensor {
public:
    CurvatureTensor() = default;

    /// Takes n^4 components in row-major (i,j,k,l) order and verifies the
    /// tensor symmetries (antisymmetry in (i,j) and (k,l), pair symmetry,
    /// first Bianchi identity) within tol. Throws Error(Invariant) on
    /// violation, Error(Structure) on a size mismatch.
    CurvatureTensor(int n, std::vector<double> components, double tol = 1e-12);

    /// Construction path for internally generated tensors whose symmetries
    /// hold by assembly.
    static CurvatureTensor trusted(int n, std::vector<double> components);

    int dim() const { return n_; }

    double operator()(int i, int j, int k, int l) const {
        return r_[static_cast<std::size_t>(((i * n_ + j) * n_ + k) * n_ + l)];
    }

    const double* data() const { return r_.data(); }
    const std::vector<double>& components() const { return r_; }

    /// Max-norm deviation from the four tensor symmetries.
    double symmetry_defect() const;

private:
    int n_ = 0;
    std::vector<double> r_;
};

struct RicciData {
    Eigen::MatrixXd ric;          // Ricci operator in the frame; Ric(X) = X^T ric X
    Eigen::VectorXd eigenvalues;  // ascending
    double tau = 0.0;             // scalar curvature; trace(ric) = 2 tau
    double einstein_defect = 0.0;       // eigenvalue spread (max - min)
    double quasi_einstein_defect = 0.0; // best spread after excluding one eigenvalue
};

struct MeanCurvatureData {
    Eigen::VectorXd H_vec; // length 2m-n, component r: trace(h[r]) / n
    double H = 0.0;        // Euclidean norm of H_vec
};

enum class PointClass { TotallyGeodesic, Minimal, PseudoUmbilical, Generic };

const char* to_string(PointClass cls);

/// Gauss equation for a totally real submanifold of N^m(4c):
///   R(i,j,k,l) = c (d_ik d_jl - d_il d_jk)
///              + sum_r [ h[r](i,k) h[r](j,l) - h[r](i,l) h[r](j,k) ].
/// The ambient J-terms vanish on tangent vectors and are not included.
/// Throws Error(Structure) when the h array does not match (n, m).
CurvatureTensor gauss_curvature_tensor(const Instance& inst);

/// Full contraction R(u,v,u,v) without orthonormality checks; the value is
/// the sectional curvature only for orthonormal u, v.
double plane_curvature(const CurvatureTensor& R, const double* u, const double* v);

/// Sectional curvature of span{u, v}. Requires u, v orthonormal within 1e-10
/// (Domain error otherwise).
double sectional_curvature(const CurvatureTensor& R, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& v);

/// Ricci operator ric(i,j) = sum_k R(i,k,j,k), scalar curvature, and the
/// Einstein / quasi-Einstein defects from the eigenvalue spread.
RicciData ricci_data(const CurvatureTensor& R);

MeanCurvatureData mean_curvature(const Instance& inst);

/// Pointwise classification with precedence
/// totally_geodesic > minimal > pseudo_umbilical > generic.
PointClass classify_pointwise(const Instance& inst, const Config& cfg = {});

} // namespace deltaric
