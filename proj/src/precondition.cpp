#include "hgs/precondition.hpp"

#include <cmath>

namespace hgs {

const char* to_string(PreconditionerKind k) {
    switch (k) {
        case PreconditionerKind::FirstColumn: return "first-column";
        case PreconditionerKind::GaussTransform: return "gauss-transform";
        case PreconditionerKind::GaussChain: return "gauss-chain";
        case PreconditionerKind::ColumnEliminator: return "column-eliminator";
        case PreconditionerKind::SchurAlpha: return "schur-alpha";
    }
    return "?";
}

namespace {

void check_pivot_index(const ComplexMatrix& A, int k) {
    if (k < 0 || k >= A.order()) throw BadIndexSetError("pivot index out of range");
}

}  // namespace

Preconditioner first_column(const ComplexMatrix& A, const std::vector<double>& weights) {
    const int n = A.order();
    if (static_cast<int>(weights.size()) != n) {
        throw DimensionMismatchError("first_column needs one weight per row");
    }
    if (A.is_zero(0, 0)) throw ZeroPivotError(0);
    Preconditioner P{PreconditionerKind::FirstColumn, ComplexMatrix::identity(n), 0, weights, {}};
    for (int i = 1; i < n; ++i) {
        P.matrix(i, 0) = -weights[static_cast<size_t>(i)] * A(i, 0);
    }
    return P;
}

Preconditioner gauss_transform(const ComplexMatrix& A, int k) {
    check_pivot_index(A, k);
    if (A.is_zero(k, k)) throw ZeroPivotError(k);
    const int n = A.order();
    Preconditioner P{PreconditionerKind::GaussTransform, ComplexMatrix::identity(n), k, {}, {}};
    for (int i = k + 1; i < n; ++i) {
        P.matrix(i, k) = -A(i, k) / A(k, k);
    }
    return P;
}

Preconditioner gauss_chain(const ComplexMatrix& A, int k) {
    const int n = A.order();
    if (k < 0 || k >= n - 1) throw BadIndexSetError("gauss_chain step out of range");
    ComplexMatrix W = A;
    ComplexMatrix P = ComplexMatrix::identity(n);
    // Each factor is taken from the partially eliminated matrix, so the full
    // chain reproduces the LU elimination of A.
    for (int j = 0; j <= k; ++j) {
        if (W.is_zero(j, j)) throw ZeroPivotError(j);
        ComplexMatrix M = ComplexMatrix::identity(n);
        for (int i = j + 1; i < n; ++i) M(i, j) = -W(i, j) / W(j, j);
        W = M * W;
        P = M * P;
    }
    return Preconditioner{PreconditionerKind::GaussChain, std::move(P), k, {}, {}};
}

Preconditioner column_eliminator(const ComplexMatrix& A, int k) {
    check_pivot_index(A, k);
    if (A.is_zero(k, k)) throw ZeroPivotError(k);
    const int n = A.order();
    Preconditioner P{PreconditionerKind::ColumnEliminator, ComplexMatrix::identity(n), k, {}, {}};
    for (int i = 0; i < n; ++i) {
        if (i != k) P.matrix(i, k) = -A(i, k) / A(k, k);
    }
    return P;
}

Preconditioner schur_preconditioner(const ComplexMatrix& A, const IndexSet& alpha) {
    const int n = A.order();
    alpha.require_proper(n);
    const IndexSet ap = alpha.complement(n);

    // Block -A(a',a) [A(a)]^{-1}, applied through LU solves on A(a)^T.
    const ComplexMatrix Aaa = A.principal_submatrix(alpha);
    const int na_t = Aaa.order();
    ComplexMatrix Aaa_t(na_t);
    for (int i = 0; i < na_t; ++i)
        for (int j = 0; j < na_t; ++j) Aaa_t(i, j) = Aaa(j, i);
    LUFactor lut(Aaa_t);
    if (lut.singular()) {
        throw SingularBlockError("principal submatrix A(alpha) is numerically singular");
    }
    Preconditioner P{PreconditionerKind::SchurAlpha, ComplexMatrix::identity(n), -1, {}, alpha};
    const int na = alpha.size();
    CVector rhs(static_cast<size_t>(na));
    for (int r = 0; r < ap.size(); ++r) {
        for (int j = 0; j < na; ++j) rhs[static_cast<size_t>(j)] = A(ap[r], alpha[j]);
        const CVector y = lut.solve(rhs);  // A(a)^T y = row^T  =>  y^T = row [A(a)]^{-1}
        for (int j = 0; j < na; ++j) P.matrix(ap[r], alpha[j]) = -y[static_cast<size_t>(j)];
    }
    return P;
}

PreconditionReport verify_preconditioned(const ComplexMatrix& A, const Preconditioner& P) {
    PreconditionReport rep;
    rep.preconditioned = P.apply(A);
    rep.hclass = classify_h(rep.preconditioned);

    std::vector<ComplexMatrix> references;
    switch (P.kind) {
        case PreconditionerKind::ColumnEliminator:
            references.push_back(comparison_matrix(schur_complement(A, IndexSet{P.pivot})));
            rep.reference_kind = "mu(A/k)";
            break;
        case PreconditionerKind::SchurAlpha:
            references.push_back(comparison_matrix(A.principal_submatrix(P.alpha)));
            references.push_back(comparison_matrix(schur_complement(A, P.alpha)));
            rep.reference_kind = "max(mu(A(alpha)), mu(A/alpha))";
            break;
        default:
            references.push_back(comparison_matrix(rep.preconditioned));
            rep.reference_kind = "mu(PA)";
            break;
    }

    rep.all_bounds_hold = true;
    for (IterationMethod m : kAllMethods) {
        MethodBound bound;
        bool ok = true;
        try {
            bound.rho_preconditioned =
                spectral_radius(iteration_matrix(rep.preconditioned, m));
            bound.rho_reference = 0.0;
            for (const ComplexMatrix& ref : references) {
                bound.rho_reference =
                    std::max(bound.rho_reference, spectral_radius(iteration_matrix(ref, m)));
            }
        } catch (const Error&) {
            ok = false;
        }
        if (ok) {
            bound.bound_holds = bound.rho_preconditioned <= bound.rho_reference + 1e-8;
            bound.reference_below_one = bound.rho_reference < 1.0;
        } else {
            bound.rho_preconditioned = std::numeric_limits<double>::quiet_NaN();
            bound.rho_reference = std::numeric_limits<double>::quiet_NaN();
            bound.bound_holds = false;
            bound.reference_below_one = false;
        }
        rep.all_bounds_hold = rep.all_bounds_hold && bound.bound_holds && bound.reference_below_one;
        rep.bounds[static_cast<size_t>(m)] = bound;
    }
    return rep;
}

}  // namespace hgs
