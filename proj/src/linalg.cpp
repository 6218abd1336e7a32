#include "hgs/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace hgs {

const char* to_string(IterationMethod m) {
    switch (m) {
        case IterationMethod::Jacobi: return "jacobi";
        case IterationMethod::FGS: return "fgs";
        case IterationMethod::BGS: return "bgs";
        case IterationMethod::SGS: return "sgs";
    }
    return "?";
}

Splitting split(const ComplexMatrix& A) {
    const int n = A.order();
    Splitting s{ComplexMatrix(n), ComplexMatrix(n), ComplexMatrix(n), true};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex v = A(i, j);
            if (i == j) {
                s.D(i, i) = v;
            } else if (i > j) {
                s.L(i, j) = -v;
            } else {
                s.U(i, j) = -v;
            }
        }
    }
    s.diagonal_nonzero = A.diagonal_nonzero();
    return s;
}

namespace {

void require_nonzero_diagonal(const ComplexMatrix& A) {
    const int z = A.first_zero_diagonal();
    if (z >= 0) throw ZeroDiagonalError(z);
}

// Column-wise forward substitution: X = (D - L)^{-1} B, with D - L read from
// the splitting of A (lower triangle of A itself).
ComplexMatrix forward_solve(const ComplexMatrix& A, const ComplexMatrix& B) {
    const int n = A.order();
    ComplexMatrix X(n);
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < n; ++i) {
            Complex s = B(i, c);
            for (int j = 0; j < i; ++j) s -= A(i, j) * X(j, c);
            X(i, c) = s / A(i, i);
        }
    }
    return X;
}

// Column-wise back substitution: X = (D - U)^{-1} B.
ComplexMatrix backward_solve(const ComplexMatrix& A, const ComplexMatrix& B) {
    const int n = A.order();
    ComplexMatrix X(n);
    for (int c = 0; c < n; ++c) {
        for (int i = n - 1; i >= 0; --i) {
            Complex s = B(i, c);
            for (int j = i + 1; j < n; ++j) s -= A(i, j) * X(j, c);
            X(i, c) = s / A(i, i);
        }
    }
    return X;
}

}  // namespace

ComplexMatrix iteration_matrix(const ComplexMatrix& A, IterationMethod m) {
    require_nonzero_diagonal(A);
    const int n = A.order();
    const Splitting s = split(A);
    switch (m) {
        case IterationMethod::Jacobi: {
            ComplexMatrix H(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) H(i, j) = -A(i, j) / A(i, i);
            return H;
        }
        case IterationMethod::FGS:
            return forward_solve(A, s.U);
        case IterationMethod::BGS:
            return backward_solve(A, s.L);
        case IterationMethod::SGS: {
            const ComplexMatrix F = forward_solve(A, s.U);
            return backward_solve(A, s.L * F);
        }
    }
    throw Error("unreachable iteration method");
}

double spectral_radius(const ComplexMatrix& M) { return eigenvalues(M).spectral_radius; }

Complex determinant(const ComplexMatrix& A) {
    const int n = A.order();
    const double tol = 1e-12 * A.inf_norm();
    ComplexMatrix M = A;
    Complex det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(M(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(M(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best <= tol) return Complex(0.0, 0.0);
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(M(k, j), M(piv, j));
            det = -det;
        }
        det *= M(k, k);
        for (int i = k + 1; i < n; ++i) {
            const Complex f = M(i, k) / M(k, k);
            if (f == Complex(0.0, 0.0)) continue;
            for (int j = k; j < n; ++j) M(i, j) -= f * M(k, j);
        }
    }
    return det;
}

LUFactor::LUFactor(const ComplexMatrix& A) : lu_(A), perm_(static_cast<size_t>(A.order())) {
    const int n = A.order();
    for (int i = 0; i < n; ++i) perm_[static_cast<size_t>(i)] = i;
    const double tol = 1e-12 * A.inf_norm();
    min_pivot_ = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(lu_(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(lu_(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        min_pivot_ = std::min(min_pivot_, best);
        if (best <= tol) {
            singular_ = true;
            return;
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
            std::swap(perm_[static_cast<size_t>(k)], perm_[static_cast<size_t>(piv)]);
            ++swaps_;
        }
        for (int i = k + 1; i < n; ++i) {
            const Complex f = lu_(i, k) / lu_(k, k);
            lu_(i, k) = f;
            for (int j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
        }
    }
}

CVector LUFactor::solve(const CVector& b) const {
    if (singular_) throw SingularBlockError("LU solve on a numerically singular matrix");
    const int n = lu_.order();
    if (static_cast<int>(b.size()) != n) throw DimensionMismatchError("LU solve size mismatch");
    CVector y(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Complex s = b[static_cast<size_t>(perm_[static_cast<size_t>(i)])];
        for (int j = 0; j < i; ++j) s -= lu_(i, j) * y[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        Complex s = y[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) s -= lu_(i, j) * y[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s / lu_(i, i);
    }
    return y;
}

ComplexMatrix LUFactor::solve(const ComplexMatrix& B) const {
    const int n = lu_.order();
    ComplexMatrix X(n);
    CVector col(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = B(i, c);
        const CVector x = solve(col);
        for (int i = 0; i < n; ++i) X(i, c) = x[static_cast<size_t>(i)];
    }
    return X;
}

Complex LUFactor::det() const {
    if (singular_) return Complex(0.0, 0.0);
    Complex d = (swaps_ % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i < lu_.order(); ++i) d *= lu_(i, i);
    return d;
}

ComplexMatrix schur_complement(const ComplexMatrix& A, const IndexSet& alpha) {
    const int n = A.order();
    alpha.require_proper(n);
    const IndexSet ap = alpha.complement(n);

    const ComplexMatrix Aaa = A.principal_submatrix(alpha);
    LUFactor lu(Aaa);
    if (lu.singular()) {
        throw SingularBlockError("principal submatrix A(alpha) is numerically singular");
    }

    const int na = alpha.size();
    const int nc = ap.size();
    // X = [A(alpha)]^{-1} A(alpha, alpha'), one column per complement index.
    std::vector<CVector> X(static_cast<size_t>(nc));
    CVector col(static_cast<size_t>(na));
    for (int c = 0; c < nc; ++c) {
        for (int i = 0; i < na; ++i) col[static_cast<size_t>(i)] = A(alpha[i], ap[c]);
        X[static_cast<size_t>(c)] = lu.solve(col);
    }

    ComplexMatrix S(nc);
    for (int i = 0; i < nc; ++i) {
        for (int j = 0; j < nc; ++j) {
            Complex s = A(ap[i], ap[j]);
            for (int k = 0; k < na; ++k) {
                s -= A(ap[i], alpha[k]) * X[static_cast<size_t>(j)][static_cast<size_t>(k)];
            }
            S(i, j) = s;
        }
    }
    return S;
}

}  // namespace hgs
