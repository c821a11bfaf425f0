#include "core/instance.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace deltaric {

Instance::Instance(int n_, int m_, double c_) : n(n_), m(m_), c(c_) {
    if (n < 2) fail(ErrorKind::Domain, "tangent dimension n must be >= 2, got n=" + std::to_string(n));
    if (m < n) {
        fail(ErrorKind::Domain, "ambient complex dimension m must satisfy m >= n, got m=" +
                                    std::to_string(m) + ", n=" + std::to_string(n));
    }
    h.assign(static_cast<std::size_t>(num_normals()), Eigen::MatrixXd::Zero(n, n));
}

void Instance::validate(const Config& cfg) const {
    if (n < 2) fail(ErrorKind::Invariant, "invariant 'n >= 2' violated: n=" + std::to_string(n));
    if (m < n) {
        fail(ErrorKind::Invariant, "invariant 'm >= n' violated: m=" + std::to_string(m) +
                                       ", n=" + std::to_string(n));
    }
    if (!std::isfinite(c)) fail(ErrorKind::Invariant, "invariant violated: c is not finite");
    if (static_cast<int>(h.size()) != num_normals()) {
        fail(ErrorKind::Invariant,
             "invariant 'normal matrix count = 2m-n' violated: expected " +
                 std::to_string(num_normals()) + ", got " + std::to_string(h.size()));
    }
    for (int r = 1; r <= num_normals(); ++r) {
        const Eigen::MatrixXd& a = h[static_cast<std::size_t>(r - 1)];
        if (a.rows() != n || a.cols() != n) {
            fail(ErrorKind::Structure, "h[r=" + std::to_string(r) + "] has shape " +
                                           std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                           ", expected " + std::to_string(n) + "x" + std::to_string(n));
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (!std::isfinite(a(i, j))) {
                    fail(ErrorKind::Invariant, "invariant violated: h[r=" + std::to_string(r) +
                                                   "] has a non-finite entry");
                }
                if (j > i && a(i, j) != a(j, i)) {
                    fail(ErrorKind::Invariant,
                         "invariant 'h[r] symmetric' violated: h[r=" + std::to_string(r) +
                             "] differs at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                }
            }
        }
    }
    // Totally-real symmetry: C[k][i][j] = h[m-n+k](i,j) symmetric in (k,i,j)
    // for k <= n. Matrix symmetry already covers the (i,j) swap, so checking
    // the (k,i) swap closes the full symmetric group.
    const int base = m - n;
    for (int k = 0; k < n; ++k) {
        const Eigen::MatrixXd& ak = h[static_cast<std::size_t>(base + k)];
        for (int i = 0; i < k; ++i) {
            const Eigen::MatrixXd& ai = h[static_cast<std::size_t>(base + i)];
            for (int j = 0; j < n; ++j) {
                if (std::abs(ak(i, j) - ai(k, j)) > cfg.tol_sym) {
                    fail(ErrorKind::Invariant,
                         "invariant 'totally-real symmetry' violated: C[" + std::to_string(k + 1) +
                             "][" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                             "] != C[" + std::to_string(i + 1) + "][" + std::to_string(k + 1) + "][" +
                             std::to_string(j + 1) + "] beyond tol_sym");
                }
            }
        }
    }
}

} // namespace deltaric
