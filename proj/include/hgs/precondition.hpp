#ifndef HGS_PRECONDITION_HPP
#define HGS_PRECONDITION_HPP

#include <array>
#include <optional>
#include <string>

#include "hgs/linalg.hpp"
#include "hgs/taxonomy.hpp"

namespace hgs {

enum class PreconditionerKind { FirstColumn, GaussTransform, GaussChain, ColumnEliminator, SchurAlpha };

const char* to_string(PreconditionerKind k);

/// A left preconditioner P, applied as (PA) x = P b.  Always nonsingular;
/// unit triangular up to the permutation structure of its kind.
struct Preconditioner {
    PreconditionerKind kind;
    ComplexMatrix matrix;
    /// 0-based pivot index for the single-pivot kinds.
    int pivot = -1;
    std::vector<double> weights;
    IndexSet alpha;

    ComplexMatrix apply(const ComplexMatrix& A) const { return matrix * A; }
    CVector apply(const CVector& b) const { return matrix * b; }
};

/// Identity plus (-weights[i] * a_{i,0}) in column 0, rows 1..n-1.
/// weights[0] is unused.  Requires a_{0,0} != 0.
Preconditioner first_column(const ComplexMatrix& A, const std::vector<double>& weights);

/// Gauss transformation: identity with -a_{i,k}/a_{k,k} below position k.
Preconditioner gauss_transform(const ComplexMatrix& A, int k);

/// Product M_k ... M_1 of Gauss transformations where each factor is taken
/// from the updated matrix (LU elimination semantics), so the chain through
/// step n-2 makes the preconditioned matrix upper triangular.
/// Throws ZeroPivotError naming the failing step.
Preconditioner gauss_chain(const ComplexMatrix& A, int k);

/// Identity with -a_{i,k}/a_{k,k} at (i,k) for every i != k: eliminates the
/// whole k-th column of A off the pivot.
Preconditioner column_eliminator(const ComplexMatrix& A, int k);

/// Block eliminator P_a^T M P_a for the index set alpha: after grouping
/// alpha first, M clears the rows below A(alpha), leaving the block
/// structure [A(alpha), A(alpha,a'); 0, A/alpha] up to the permutation.
/// [A(alpha)]^{-1} is applied through LU solves.
Preconditioner schur_preconditioner(const ComplexMatrix& A, const IndexSet& alpha);

struct MethodBound {
    double rho_preconditioned = 0.0;
    double rho_reference = 0.0;
    bool bound_holds = false;      // rho_preconditioned <= rho_reference + 1e-8
    bool reference_below_one = false;
};

/// Findings of verify_preconditioned; violations are reported, never thrown.
struct PreconditionReport {
    ComplexMatrix preconditioned;
    HTag hclass = HTag::NotH;
    std::array<MethodBound, 4> bounds;  // indexed by IterationMethod
    /// Which comparison matrices back rho_reference:
    /// "mu(A/k)" for the column eliminator, "max(mu(A(alpha)), mu(A/alpha))"
    /// for the block kind, "mu(PA)" otherwise.
    std::string reference_kind;
    bool all_bounds_hold = false;

    const MethodBound& method(IterationMethod m) const {
        return bounds[static_cast<size_t>(m)];
    }
};

/// Compute PA, classify it, and check rho(H^{PA}_X) <= rho(H^{ref}_X) < 1
/// for all four methods against the comparison-matrix reference appropriate
/// to the preconditioner kind.
PreconditionReport verify_preconditioned(const ComplexMatrix& A, const Preconditioner& P);

}  // namespace hgs

#endif
