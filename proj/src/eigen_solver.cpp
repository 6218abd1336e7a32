#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "hgs/linalg.hpp"

namespace hgs {

namespace {

using EMatrix = Eigen::MatrixXcd;

// Parlett-Reinsch style diagonal balancing with powers of two, so the
// similarity transform is exact in floating point.
std::vector<double> balance(EMatrix& M) {
    const int n = static_cast<int>(M.rows());
    std::vector<double> scale(static_cast<size_t>(n), 1.0);
    bool converged = false;
    while (!converged) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(M(j, i));
                r += std::abs(M(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double f = 1.0;
            const double s = c + r;
            while (c < r / 2.0) {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while (c >= r * 2.0) {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if ((c + r) < 0.95 * s) {
                converged = false;
                scale[static_cast<size_t>(i)] *= f;
                M.col(i) *= f;
                M.row(i) /= f;
            }
        }
    }
    return scale;
}

int sweep_budget(int n) {
    if (const char* env = std::getenv("HGS_EIG_SWEEPS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<int>(v);
    }
    return 30 * n;
}

}  // namespace

Spectrum eigenvalues(const ComplexMatrix& M) {
    const int n = M.order();
    if (!M.all_finite()) throw Error("eigenvalues: matrix has non-finite entries");

    EMatrix E(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) E(i, j) = M(i, j);

    EMatrix B = E;
    const std::vector<double> scale = balance(B);

    Eigen::ComplexSchur<EMatrix> schur;
    schur.setMaxIterations(sweep_budget(n));
    schur.compute(B, /*computeU=*/true);
    if (schur.info() != Eigen::Success) {
        throw NoConvergenceError("eigenvalue iteration exhausted its sweep budget of " +
                                 std::to_string(sweep_budget(n)) + " sweeps");
    }

    Spectrum out;
    out.eigenvalues.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Complex lam = schur.matrixT()(i, i);
        out.eigenvalues[static_cast<size_t>(i)] = lam;
        out.spectral_radius = std::max(out.spectral_radius, std::abs(lam));
    }

    // Backward error of the decomposition, undoing the balancing:
    // residual = || Dscale (Q T Q^*) Dscale^{-1} - M ||_F.
    EMatrix R = schur.matrixU() * schur.matrixT() * schur.matrixU().adjoint();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            R(i, j) *= scale[static_cast<size_t>(i)] / scale[static_cast<size_t>(j)];
    out.residual_bound = (R - E).norm();
    return out;
}

}  // namespace hgs
