#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "core/instance.hpp"

namespace deltaric {

/// h = 0. Requires m >= n >= 2.
Instance totally_geodesic(int n, int m, double c);

/// h[1] = lambda * identity on the first non-J normal, all other normals
/// zero. Requires m > n so a non-J normal exists. The intrinsic curvature is
/// the constant c + lambda^2, hence Einstein; lambda = 0 degenerates to the
/// totally geodesic instance.
Instance umbilical_non_j(int n, int m, double c, double lambda);

/// Block-diagonal instance on n = 2k: for each listed normal direction r
/// (1-based), h[r] is assembled from k symmetric trace-free 2x2 blocks;
/// unlisted normals are zero. Block traces must vanish to 1e-14 and the
/// assembled J-coefficients must pass the totally-real symmetry check;
/// violations raise Constraint errors.
Instance block_minimal(int k, int m, double c,
                       const std::map<int, std::vector<Eigen::Matrix2d>>& blocks);

/// Seed-deterministic random instance honoring the totally-real symmetry:
/// non-J normals and J-normals Je_k with k > n are plain random symmetric
/// matrices (entries uniform in [-scale, scale]); the J-coefficients for
/// k <= n are drawn as a raw 3-array and fully symmetrized.
Instance random_totally_real(int n, int m, double c, double scale, std::uint64_t seed);

/// Orthogonal projection of the J-coefficient block C[k][i][j] = h[m-n+k](i,j),
/// k,i,j in 1..n, onto totally symmetric 3-arrays: each entry becomes the mean
/// over the six index permutations. Idempotent bit-for-bit.
void symmetrize_j_coefficients(std::vector<Eigen::MatrixXd>& h, int n, int m);

} // namespace deltaric
