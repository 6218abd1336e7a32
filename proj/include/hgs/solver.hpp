#ifndef HGS_SOLVER_HPP
#define HGS_SOLVER_HPP

#include "hgs/linalg.hpp"
#include "hgs/precondition.hpp"

namespace hgs {

enum class SolveStatus { Converged, MaxIterations, Diverged };

const char* to_string(SolveStatus s);

struct SolveResult {
    CVector x;
    int iterations = 0;
    /// Per-sweep infinity norms of the update x^{(i+1)} - x^{(i)}.
    std::vector<double> history;
    SolveStatus status = SolveStatus::MaxIterations;
};

struct SolveOptions {
    CVector x0;             // empty means zero start
    double tol = 1e-10;     // stop when ||x' - x||_inf <= tol
    int max_iterations = 100000;
    double blowup = 1e12;   // diverged when ||x||_inf > blowup * (1 + ||b||_inf)
};

/// max(10, 10 * n * ceil(1 / (1 - rho_hat))) capped at 1e6 when a spectral
/// radius estimate below one is available, otherwise 1e5.
int suggested_max_iterations(int n, double rho_hat);

/// Stationary iteration x <- H x + f for the chosen method, one triangular
/// substitution sweep at a time; H is never formed.
SolveResult solve(const ComplexMatrix& A, const CVector& b, IterationMethod m,
                  const SolveOptions& opts = {});

/// Same scheme on (PA) x = P b.
SolveResult preconditioned_solve(const ComplexMatrix& A, const CVector& b,
                                 const Preconditioner& P, IterationMethod m,
                                 const SolveOptions& opts = {});

}  // namespace hgs

#endif
