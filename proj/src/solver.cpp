#include "hgs/solver.hpp"

#include <algorithm>
#include <cmath>

namespace hgs {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "converged";
        case SolveStatus::MaxIterations: return "max-iterations";
        case SolveStatus::Diverged: return "diverged";
    }
    return "?";
}

int suggested_max_iterations(int n, double rho_hat) {
    if (std::isfinite(rho_hat) && rho_hat >= 0.0 && rho_hat < 1.0) {
        const double it = 10.0 * n * std::ceil(1.0 / (1.0 - rho_hat));
        return static_cast<int>(std::min(1e6, std::max(10.0, it)));
    }
    return 100000;
}

namespace {

void jacobi_sweep(const ComplexMatrix& A, const CVector& b, const CVector& x, CVector& xn) {
    const int n = A.order();
    for (int i = 0; i < n; ++i) {
        Complex s = b[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            if (j != i) s -= A(i, j) * x[static_cast<size_t>(j)];
        }
        xn[static_cast<size_t>(i)] = s / A(i, i);
    }
}

// (D - L) x' = b + U x, by forward substitution in place of x'.
void forward_sweep(const ComplexMatrix& A, const CVector& b, const CVector& x, CVector& xn) {
    const int n = A.order();
    for (int i = 0; i < n; ++i) {
        Complex s = b[static_cast<size_t>(i)];
        for (int j = 0; j < i; ++j) s -= A(i, j) * xn[static_cast<size_t>(j)];
        for (int j = i + 1; j < n; ++j) s -= A(i, j) * x[static_cast<size_t>(j)];
        xn[static_cast<size_t>(i)] = s / A(i, i);
    }
}

// (D - U) x' = b + L x, by back substitution.
void backward_sweep(const ComplexMatrix& A, const CVector& b, const CVector& x, CVector& xn) {
    const int n = A.order();
    for (int i = n - 1; i >= 0; --i) {
        Complex s = b[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) s -= A(i, j) * xn[static_cast<size_t>(j)];
        for (int j = 0; j < i; ++j) s -= A(i, j) * x[static_cast<size_t>(j)];
        xn[static_cast<size_t>(i)] = s / A(i, i);
    }
}

}  // namespace

SolveResult solve(const ComplexMatrix& A, const CVector& b, IterationMethod m,
                  const SolveOptions& opts) {
    const int n = A.order();
    if (static_cast<int>(b.size()) != n) {
        throw DimensionMismatchError("right-hand side length differs from matrix order");
    }
    const int z = A.first_zero_diagonal();
    if (z >= 0) throw ZeroDiagonalError(z);

    SolveResult res;
    res.x = opts.x0;
    if (res.x.empty()) {
        res.x.assign(static_cast<size_t>(n), Complex(0.0, 0.0));
    } else if (static_cast<int>(res.x.size()) != n) {
        throw DimensionMismatchError("start vector length differs from matrix order");
    }

    const double blowup = opts.blowup * (1.0 + inf_norm(b));
    CVector xn(static_cast<size_t>(n)), half(static_cast<size_t>(n));
    for (int it = 1; it <= opts.max_iterations; ++it) {
        switch (m) {
            case IterationMethod::Jacobi: jacobi_sweep(A, b, res.x, xn); break;
            case IterationMethod::FGS: forward_sweep(A, b, res.x, xn); break;
            case IterationMethod::BGS: backward_sweep(A, b, res.x, xn); break;
            case IterationMethod::SGS:
                forward_sweep(A, b, res.x, half);
                backward_sweep(A, b, half, xn);
                break;
        }
        double delta = 0.0;
        for (int i = 0; i < n; ++i) {
            delta = std::max(delta, std::abs(xn[static_cast<size_t>(i)] - res.x[static_cast<size_t>(i)]));
        }
        res.x.swap(xn);
        res.history.push_back(delta);
        res.iterations = it;
        if (inf_norm(res.x) > blowup) {
            res.status = SolveStatus::Diverged;
            return res;
        }
        if (delta <= opts.tol) {
            res.status = SolveStatus::Converged;
            return res;
        }
    }
    res.status = SolveStatus::MaxIterations;
    return res;
}

SolveResult preconditioned_solve(const ComplexMatrix& A, const CVector& b,
                                 const Preconditioner& P, IterationMethod m,
                                 const SolveOptions& opts) {
    return solve(P.apply(A), P.apply(b), m, opts);
}

}  // namespace hgs
