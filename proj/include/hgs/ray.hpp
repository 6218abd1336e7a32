#ifndef HGS_RAY_HPP
#define HGS_RAY_HPP

#include <cstdint>
#include <optional>

#include "hgs/matrix.hpp"

namespace hgs {

/// The four phase-pattern families.  Zero is the theta family at angle 0;
/// Psi carries its angle on strictly upper entries, Phi on strictly lower
/// entries, Theta on every off-diagonal entry through the global phase.
enum class RayFamily { Theta, Psi, Phi, Zero };

const char* to_string(RayFamily f);

enum class RayAngle { Determined, Free };

struct RayVerdict {
    bool member = false;
    RayFamily family = RayFamily::Zero;

    RayAngle angle_kind = RayAngle::Free;
    /// Family angle in [0, 2*pi) when angle_kind == Determined.
    double angle = 0.0;

    /// Arguments of the certifying unitary diagonal matrix D = diag(e^{i phi_r}).
    std::vector<double> phases;
    /// Global phase extracted from the nonzero diagonal entries.
    double eta = 0.0;

    /// Worst residual of the phase constraint system, in radians, and the
    /// entry where it occurs; lets a caller re-check a non-membership.
    double max_violation = 0.0;
    int violation_row = -1;
    int violation_col = -1;
};

/// Decide membership of M in the requested family by solving the phase
/// constraint system of the unitary-diagonal-similarity characterization:
/// spanning-tree propagation of the phases over each connected component of
/// the off-diagonal graph, then verification of every remaining constraint.
/// Cycles with nonzero net angle coefficient determine the family angle; if
/// no cycle pins it the angle is Free.  Tolerance: 1e-9 radians.
///
/// Matrices whose diagonal is entirely zero are evaluated with the global
/// phase normalized to zero.
RayVerdict ray_test(const ComplexMatrix& M, RayFamily family);

/// Deterministic unit-diagonal member of the requested family with the
/// requested angle on an irreducible pattern (ring plus reverse edges plus a
/// chord that pins the angle).  Throws BadAngleError when the angle is
/// outside [0, 2*pi), or nonzero for the Zero family.
ComplexMatrix construct_ray(RayFamily family, int n, double angle, std::uint64_t moduli_seed,
                            std::uint64_t phase_seed);

/// Wrap an angle to (-pi, pi].
double wrap_angle(double a);
/// Wrap an angle to [0, 2*pi).
double wrap_angle_2pi(double a);
/// |wrap(a - b)|: distance of two angles modulo 2*pi.
double angle_distance(double a, double b);

}  // namespace hgs

#endif
