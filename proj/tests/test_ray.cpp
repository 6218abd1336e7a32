#include <cmath>
#include <random>

#include "doctest.h"
#include "hgs/corpus.hpp"
#include "hgs/ray.hpp"
#include "oracles.hpp"

using namespace hgs;

namespace {

constexpr RayFamily kFamilies[] = {RayFamily::Theta, RayFamily::Psi, RayFamily::Phi,
                                   RayFamily::Zero};

ComplexMatrix unit_diagonal_scale(const ComplexMatrix& A) {
    const int n = A.order();
    ComplexMatrix F(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) F(i, j) = A(i, j) / A(i, i);
    return F;
}

// Full-pattern member with random moduli; exercise the triple-index oracle.
ComplexMatrix full_pattern_member(RayFamily family, int n, double angle, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mod(0.5, 2.0);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * M_PI);
    std::vector<double> gauge(static_cast<size_t>(n));
    for (double& g : gauge) g = ph(rng);
    ComplexMatrix A(n);
    for (int i = 0; i < n; ++i) A(i, i) = 1.0;
    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            if (r == s) continue;
            double arg = M_PI;
            switch (family) {
                case RayFamily::Theta: arg = M_PI - angle; break;
                case RayFamily::Psi: arg = M_PI + (r < s ? angle : 0.0); break;
                case RayFamily::Phi: arg = M_PI + (r > s ? angle : 0.0); break;
                case RayFamily::Zero: break;
            }
            arg += gauge[static_cast<size_t>(s)] - gauge[static_cast<size_t>(r)];
            A(r, s) = std::polar(mod(rng), wrap_angle(arg));
        }
    }
    return A;
}

}  // namespace

TEST_SUITE("ray") {

TEST_CASE("family61 unit-diagonal form is a psi and phi member at angle pi") {
    for (int n : {4, 7, 12}) {
        const ComplexMatrix F = unit_diagonal_scale(corpus::family61(n));
        const RayVerdict psi = ray_test(F, RayFamily::Psi);
        CHECK(psi.member);
        REQUIRE(psi.angle_kind == RayAngle::Determined);
        CHECK(angle_distance(psi.angle, M_PI) < 1e-9);

        const RayVerdict phi = ray_test(F, RayFamily::Phi);
        CHECK(phi.member);
        CHECK(angle_distance(phi.angle, M_PI) < 1e-9);

        CHECK_FALSE(ray_test(F, RayFamily::Zero).member);
    }
}

TEST_CASE("canonical zero-ray form is already a member") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> mod(0.2, 2.0);
    ComplexMatrix A(5);
    for (int i = 0; i < 5; ++i) A(i, i) = 1.0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j) A(i, j) = -mod(rng);
    const RayVerdict v = ray_test(A, RayFamily::Zero);
    CHECK(v.member);
    CHECK(v.angle_kind == RayAngle::Determined);
    CHECK(v.angle == 0.0);
    // identity certificate: all phases equal up to the gauge constant
    for (double p : v.phases) CHECK(angle_distance(p, v.phases[0]) < 1e-12);
}

TEST_CASE("round trips across families, sizes and angles") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> adist(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 120; ++trial) {
        const RayFamily fam = kFamilies[trial % 4];
        const int n = 3 + static_cast<int>(rng() % 10);
        const double angle = fam == RayFamily::Zero ? 0.0 : adist(rng);
        const ComplexMatrix A = construct_ray(fam, n, angle, rng(), rng());
        const RayVerdict v = ray_test(A, fam);
        CHECK(v.member);
        REQUIRE(v.angle_kind == RayAngle::Determined);
        CHECK(angle_distance(v.angle, angle) < 1e-9);
    }
}

TEST_CASE("spec round trip examples") {
    CHECK(ray_test(construct_ray(RayFamily::Zero, 3, 0.0, 1, 2), RayFamily::Zero).member);

    const RayVerdict psi = ray_test(construct_ray(RayFamily::Psi, 4, M_PI, 1, 2), RayFamily::Psi);
    CHECK(psi.member);
    CHECK(angle_distance(psi.angle, M_PI) < 1e-9);

    const ComplexMatrix phi5 = construct_ray(RayFamily::Phi, 5, 1.0, 1, 2);
    const RayVerdict phi = ray_test(phi5, RayFamily::Phi);
    CHECK(phi.member);
    CHECK(angle_distance(phi.angle, 1.0) < 1e-9);
    CHECK_FALSE(ray_test(phi5, RayFamily::Zero).member);
}

TEST_CASE("construct_ray rejects bad angles") {
    CHECK_THROWS_AS((void)construct_ray(RayFamily::Psi, 4, -0.5, 1, 2), BadAngleError);
    CHECK_THROWS_AS((void)construct_ray(RayFamily::Psi, 4, 7.0, 1, 2), BadAngleError);
    CHECK_THROWS_AS((void)construct_ray(RayFamily::Zero, 4, 1.0, 1, 2), BadAngleError);
    CHECK_THROWS_AS((void)construct_ray(RayFamily::Psi, 1, 0.0, 1, 2), BadAngleError);
}

TEST_CASE("zero members are psi and phi members at angle zero and conversely") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const ComplexMatrix A = construct_ray(RayFamily::Zero, n, 0.0, rng(), rng());
        const RayVerdict psi = ray_test(A, RayFamily::Psi);
        const RayVerdict phi = ray_test(A, RayFamily::Phi);
        CHECK(psi.member);
        CHECK(phi.member);
        CHECK(angle_distance(psi.angle, 0.0) < 1e-9);
        CHECK(angle_distance(phi.angle, 0.0) < 1e-9);

        // A member of both families at determined angles on an irreducible
        // pattern is a zero member exactly when both angles vanish.
        const double a = 0.8;
        const ComplexMatrix B = construct_ray(RayFamily::Psi, n, a, rng(), rng());
        const RayVerdict bphi = ray_test(B, RayFamily::Phi);
        const RayVerdict bzero = ray_test(B, RayFamily::Zero);
        if (bphi.member && bphi.angle_kind == RayAngle::Determined &&
            angle_distance(bphi.angle, 0.0) < 1e-9) {
            CHECK(bzero.member);
        } else {
            CHECK_FALSE(bzero.member);
        }
    }
}

TEST_CASE("verdicts are gauge invariant") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 40; ++trial) {
        const RayFamily fam = kFamilies[trial % 4];
        const int n = 3 + static_cast<int>(rng() % 6);
        const double angle = fam == RayFamily::Zero ? 0.0 : ph(rng);
        ComplexMatrix A = construct_ray(fam, n, angle, rng(), rng());
        if (trial % 2 == 0) A(0, 1) = std::polar(std::abs(A(0, 1)), ph(rng));  // break half of them

        std::vector<double> g(static_cast<size_t>(n));
        for (double& x : g) x = ph(rng);
        ComplexMatrix B(n);
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                B(r, s) = A(r, s) * std::polar(1.0, g[static_cast<size_t>(s)] - g[static_cast<size_t>(r)]);

        const RayVerdict va = ray_test(A, fam);
        const RayVerdict vb = ray_test(B, fam);
        CHECK(va.member == vb.member);
        if (va.member && va.angle_kind == RayAngle::Determined) {
            REQUIRE(vb.angle_kind == RayAngle::Determined);
            CHECK(angle_distance(va.angle, vb.angle) < 1e-8);
        }
    }
}

TEST_CASE("non-membership comes with a re-checkable violated constraint") {
    std::mt19937_64 rng(57);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 40; ++trial) {
        const RayFamily fam = kFamilies[trial % 4];
        const int n = 3 + static_cast<int>(rng() % 8);
        const double angle = fam == RayFamily::Zero ? 0.0 : ph(rng);
        ComplexMatrix A = construct_ray(fam, n, angle, rng(), rng());
        // perturb one constrained edge phase
        A(1, 0) *= std::polar(1.0, 0.01);
        const RayVerdict v = ray_test(A, fam);
        CHECK_FALSE(v.member);
        CHECK(v.max_violation > 1e-9);
        REQUIRE(v.violation_row >= 0);
        REQUIRE(v.violation_col >= 0);
        CHECK_FALSE(A.is_zero(v.violation_row, v.violation_col));

        // Recompute the reported residual from the returned certificate data.
        const double omega = fam == RayFamily::Theta ? wrap_angle(v.eta)
                             : v.angle_kind == RayAngle::Determined ? v.angle
                                                                    : 0.0;
        const int r = v.violation_row, s = v.violation_col;
        double c = 0.0;
        switch (fam) {
            case RayFamily::Theta: c = 1.0; break;
            case RayFamily::Psi: c = r < s ? 1.0 : 0.0; break;
            case RayFamily::Phi: c = r > s ? 1.0 : 0.0; break;
            case RayFamily::Zero: c = 0.0; break;
        }
        const double base = fam == RayFamily::Theta ? 0.0 : v.eta;
        const double resid = std::abs(wrap_angle(
            v.phases[static_cast<size_t>(r)] - v.phases[static_cast<size_t>(s)] -
            (std::arg(A(r, s)) - base - M_PI) + c * omega));
        CHECK(resid == doctest::Approx(v.max_violation).epsilon(1e-6));
    }
}

TEST_CASE("similarity test agrees with the triple-index conditions on full patterns") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 160; ++trial) {
        const RayFamily fam = kFamilies[trial % 4];
        const int n = 3 + static_cast<int>(rng() % 4);
        const double angle = fam == RayFamily::Zero ? 0.0 : ph(rng);
        ComplexMatrix A = full_pattern_member(fam, n, angle, rng());
        if (trial % 2 == 1) {
            // half the trials get a perturbed edge -> non-member
            A(2, 1) *= std::polar(1.0, 0.05);
        }
        const oracles::TripleVerdict oracle = oracles::ray_triple_conditions(A, fam);
        REQUIRE(oracle.applicable);
        const RayVerdict v = ray_test(A, fam);
        CHECK(v.member == oracle.member);
        if (v.member && fam != RayFamily::Zero) {
            REQUIRE(v.angle_kind == RayAngle::Determined);
            CHECK(angle_distance(v.angle, oracle.angle) < 1e-8);
        }
    }
}

TEST_CASE("reducible patterns demand a consistent angle across components") {
    // Two disconnected blocks constructed at different psi angles: membership
    // must fail even though each block alone is a member.
    const ComplexMatrix B1 = construct_ray(RayFamily::Psi, 3, 1.0, 5, 6);
    const ComplexMatrix B2a = construct_ray(RayFamily::Psi, 3, 1.0, 7, 8);
    const ComplexMatrix B2b = construct_ray(RayFamily::Psi, 3, 2.0, 7, 8);
    auto blockdiag = [](const ComplexMatrix& X, const ComplexMatrix& Y) {
        ComplexMatrix Z(X.order() + Y.order());
        for (int i = 0; i < X.order(); ++i)
            for (int j = 0; j < X.order(); ++j) Z(i, j) = X(i, j);
        for (int i = 0; i < Y.order(); ++i)
            for (int j = 0; j < Y.order(); ++j) Z(X.order() + i, X.order() + j) = Y(i, j);
        return Z;
    };
    const RayVerdict same = ray_test(blockdiag(B1, B2a), RayFamily::Psi);
    CHECK(same.member);
    CHECK(angle_distance(same.angle, 1.0) < 1e-9);
    CHECK_FALSE(ray_test(blockdiag(B1, B2b), RayFamily::Psi).member);
}

}  // TEST_SUITE
