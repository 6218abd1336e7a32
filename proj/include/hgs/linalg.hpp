#ifndef HGS_LINALG_HPP
#define HGS_LINALG_HPP

#include <optional>

#include "hgs/matrix.hpp"

namespace hgs {

/// The standard decomposition A = D - L - U with D diagonal, L strictly
/// lower triangular and U strictly upper triangular.
struct Splitting {
    ComplexMatrix D;
    ComplexMatrix L;
    ComplexMatrix U;
    bool diagonal_nonzero = false;
};

enum class IterationMethod { Jacobi, FGS, BGS, SGS };

constexpr IterationMethod kAllMethods[] = {IterationMethod::Jacobi, IterationMethod::FGS,
                                           IterationMethod::BGS, IterationMethod::SGS};

const char* to_string(IterationMethod m);

struct Spectrum {
    CVector eigenvalues;
    double spectral_radius = 0.0;
    /// Frobenius-norm backward error of the computed Schur decomposition.
    double residual_bound = 0.0;
};

Splitting split(const ComplexMatrix& A);

/// Iteration matrix of the requested method.  Triangular factors are applied
/// by substitution; (D-L) and (D-U) are never inverted explicitly.
/// Throws ZeroDiagonalError if some diagonal entry is exactly zero.
ComplexMatrix iteration_matrix(const ComplexMatrix& A, IterationMethod m);

/// All eigenvalues of M via balanced Hessenberg reduction + shifted QR.
/// Sweep budget defaults to 30*n; the HGS_EIG_SWEEPS environment variable
/// overrides it.  Throws NoConvergenceError when the budget is exhausted.
Spectrum eigenvalues(const ComplexMatrix& M);

double spectral_radius(const ComplexMatrix& M);

/// Determinant by row elimination with partial pivoting.  Returns exactly 0
/// when some pivot column is entirely below 1e-12 * inf_norm(A).
Complex determinant(const ComplexMatrix& A);

/// Schur complement A/alpha = A(a') - A(a',a) [A(a)]^{-1} A(a,a').
/// alpha must be a nonempty proper subset of <n> (BadIndexSetError otherwise);
/// throws SingularBlockError when A(alpha) is numerically singular.
ComplexMatrix schur_complement(const ComplexMatrix& A, const IndexSet& alpha);

/// LU factorization with partial pivoting, used wherever a nonsingular block
/// has to be applied through solves.
class LUFactor {
public:
    explicit LUFactor(const ComplexMatrix& A);

    bool singular() const { return singular_; }
    double min_pivot() const { return min_pivot_; }

    /// Solve A x = b; throws SingularBlockError when the factor is singular.
    CVector solve(const CVector& b) const;
    /// Solve A X = B column by column.
    ComplexMatrix solve(const ComplexMatrix& B) const;

    Complex det() const;

private:
    ComplexMatrix lu_;
    std::vector<int> perm_;
    int swaps_ = 0;
    bool singular_ = false;
    double min_pivot_ = 0.0;
};

}  // namespace hgs

#endif
