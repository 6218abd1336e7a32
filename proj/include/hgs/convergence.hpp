#ifndef HGS_CONVERGENCE_HPP
#define HGS_CONVERGENCE_HPP

#include <array>
#include <optional>
#include <string>

#include "hgs/linalg.hpp"
#include "hgs/ray.hpp"
#include "hgs/taxonomy.hpp"

namespace hgs {

/// The iteration converges for every start iff rho(H) < 1; spectral radii
/// within this band of 1 are treated as exactly 1.
inline constexpr double kUnitRadiusBand = 1e-8;

enum class ConvergenceStatus { Converges, Diverges, Unknown };

const char* to_string(ConvergenceStatus s);

struct RuleStep {
    std::string id;
    std::string note;
};

/// Evidence substantiating a divergence verdict.
struct DivergenceWitness {
    IndexSet block;
    std::optional<RayFamily> family;
    std::optional<double> ray_angle;
    std::optional<double> rho;
};

struct Verdict {
    ConvergenceStatus status = ConvergenceStatus::Unknown;
    std::vector<RuleStep> rule_chain;
    std::optional<DivergenceWitness> witness;
};

struct MethodReport {
    Verdict verdict;
    std::optional<double> rho;
    bool numerical_converges = false;
    bool agree = true;
    std::string diagnostic;
};

struct ConvergenceReport {
    std::array<MethodReport, 4> methods;  // indexed by IterationMethod
    Classification classification;
    FrobeniusForm fnf;

    const MethodReport& method(IterationMethod m) const {
        return methods[static_cast<size_t>(m)];
    }
};

/// Computed spectral radius of the iteration matrix and the resulting
/// convergence decision.  Throws ZeroDiagonalError.
std::pair<double, bool> numerical_verdict(const ComplexMatrix& A, IterationMethod m);

/// Structural convergence decision for FGS/BGS/SGS.  Jacobi is not covered
/// and yields Unknown.  Rules, in order: zero diagonal; Hermitian positive
/// definite; strict or irreducible diagonal dominance; invertible H-matrix;
/// mixed H-matrix handled per irreducible block of the Frobenius normal form
/// (non-equipotent blocks converge, 2x2 equipotent blocks diverge, larger
/// equipotent blocks diverge exactly when the unit-diagonal form belongs to
/// the method's ray family); anything else is Unknown.
Verdict theorem_verdict(const ComplexMatrix& A, IterationMethod m);

/// Full cross-validated report over all four methods.  Per-method zero
/// diagonal failures become diagnostics, not exceptions.
ConvergenceReport analyze(const ComplexMatrix& A);

}  // namespace hgs

#endif
