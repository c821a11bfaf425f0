#include "core/generators.hpp"

#include <array>
#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace deltaric {

Instance totally_geodesic(int n, int m, double c) {
    return Instance(n, m, c);
}

Instance umbilical_non_j(int n, int m, double c, double lambda) {
    if (m <= n) {
        fail(ErrorKind::Domain,
             "umbilical_non_j requires m > n (a non-J normal direction must exist), got m=" +
                 std::to_string(m) + ", n=" + std::to_string(n));
    }
    Instance inst(n, m, c);
    inst.h[0] = lambda * Eigen::MatrixXd::Identity(n, n);
    return inst;
}

Instance block_minimal(int k, int m, double c,
                       const std::map<int, std::vector<Eigen::Matrix2d>>& blocks) {
    if (k < 2) fail(ErrorKind::Domain, "block_minimal requires k >= 2, got k=" + std::to_string(k));
    const int n = 2 * k;
    if (m < n) {
        fail(ErrorKind::Domain, "block_minimal requires m >= n = 2k, got m=" + std::to_string(m));
    }
    Instance inst(n, m, c);
    for (const auto& [r, bs] : blocks) {
        if (r < 1 || r > inst.num_normals()) {
            fail(ErrorKind::Constraint, "block_minimal: normal index r=" + std::to_string(r) +
                                            " outside 1..2m-n");
        }
        if (static_cast<int>(bs.size()) != k) {
            fail(ErrorKind::Constraint, "block_minimal: normal r=" + std::to_string(r) + " needs " +
                                            std::to_string(k) + " blocks, got " +
                                            std::to_string(bs.size()));
        }
        Eigen::MatrixXd hr = Eigen::MatrixXd::Zero(n, n);
        for (int b = 0; b < k; ++b) {
            const Eigen::Matrix2d& blk = bs[static_cast<std::size_t>(b)];
            if (blk(0, 1) != blk(1, 0)) {
                fail(ErrorKind::Constraint, "block_minimal: block " + std::to_string(b + 1) +
                                                " of normal r=" + std::to_string(r) +
                                                " is not symmetric");
            }
            if (std::abs(blk(0, 0) + blk(1, 1)) > 1e-14) {
                fail(ErrorKind::Constraint, "block_minimal: block " + std::to_string(b + 1) +
                                                " of normal r=" + std::to_string(r) +
                                                " has nonzero trace");
            }
            hr.block<2, 2>(2 * b, 2 * b) = blk;
        }
        inst.h[static_cast<std::size_t>(r - 1)] = hr;
    }
    try {
        inst.validate();
    } catch (const Error& e) {
        fail(ErrorKind::Constraint, std::string("block_minimal: assembled instance invalid: ") + e.what());
    }
    return inst;
}

void symmetrize_j_coefficients(std::vector<Eigen::MatrixXd>& h, int n, int m) {
    const int base = m - n;
    // Walk canonical triples a <= b <= c and write one averaged value into all
    // six permutation slots. The mean is computed as first value plus averaged
    // differences so that already-symmetric input is a fixed point bit-for-bit.
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            for (int cc = b; cc < n; ++cc) {
                const std::array<std::array<int, 3>, 6> perms{{{a, b, cc},
                                                               {a, cc, b},
                                                               {b, a, cc},
                                                               {b, cc, a},
                                                               {cc, a, b},
                                                               {cc, b, a}}};
                const double first = h[static_cast<std::size_t>(base + a)](b, cc);
                double diff = 0.0;
                for (int p = 1; p < 6; ++p) {
                    const auto& q = perms[static_cast<std::size_t>(p)];
                    diff += h[static_cast<std::size_t>(base + q[0])](q[1], q[2]) - first;
                }
                const double mean = first + diff / 6.0;
                for (const auto& q : perms) {
                    h[static_cast<std::size_t>(base + q[0])](q[1], q[2]) = mean;
                }
            }
        }
    }
}

Instance random_totally_real(int n, int m, double c, double scale, std::uint64_t seed) {
    Instance inst(n, m, c); // validates n, m
    Rng rng(seed);
    auto random_symmetric = [&](Eigen::MatrixXd& a) {
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                const double v = rng.uniform(-scale, scale);
                a(i, j) = v;
                a(j, i) = v;
            }
        }
    };
    const int base = m - n;
    for (int r = 0; r < base; ++r) random_symmetric(inst.h[static_cast<std::size_t>(r)]);
    // Raw 3-array for the constrained J-coefficients, then project.
    for (int k = 0; k < n; ++k) {
        Eigen::MatrixXd& a = inst.h[static_cast<std::size_t>(base + k)];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = rng.uniform(-scale, scale);
    }
    symmetrize_j_coefficients(inst.h, n, m);
    // Unconstrained J-normals Je_k, k > n.
    for (int k = n; k < m; ++k) random_symmetric(inst.h[static_cast<std::size_t>(base + k)]);
    return inst;
}

} // namespace deltaric
