#include <cmath>
#include <random>

#include "doctest.h"
#include "hgs/convergence.hpp"
#include "hgs/corpus.hpp"
#include "hgs/precondition.hpp"

using namespace hgs;

TEST_SUITE("precondition") {

TEST_CASE("first column preconditioner shapes") {
    const ComplexMatrix A3 = corpus::family61(3);
    const Preconditioner P = first_column(A3, {1.0, 1.0, 1.0});
    CHECK(P.matrix(1, 0) == Complex(-1.0));
    CHECK(P.matrix(2, 0) == Complex(0.0));
    CHECK((P.matrix * A3)(1, 0) == Complex(0.0));

    const Preconditioner Z = first_column(A3, {0.0, 0.0, 0.0});
    CHECK(Z.matrix == ComplexMatrix::identity(3));

    const ComplexMatrix An = corpus::family61(8);
    const Preconditioner Pn = first_column(An, std::vector<double>(8, 1.0));
    CHECK((Pn.matrix * An)(1, 0) == Complex(0.0));

    ComplexMatrix bad{{0, 1}, {1, 1}};
    CHECK_THROWS_AS((void)first_column(bad, {1.0, 1.0}), ZeroPivotError);
}

TEST_CASE("gauss transform") {
    const ComplexMatrix A{{2, 1}, {1, 2}};
    const Preconditioner M0 = gauss_transform(A, 0);
    CHECK(M0.matrix(1, 0) == Complex(-0.5));
    CHECK(gauss_transform(A, 1).matrix == ComplexMatrix::identity(2));
}

TEST_CASE("gauss chain reproduces lu elimination") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        ComplexMatrix A(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = Complex(u(rng) + (i == j ? 3.0 : 0.0), u(rng));
        const Preconditioner P = gauss_chain(A, n - 2);
        const ComplexMatrix U = P.matrix * A;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) CHECK(std::abs(U(i, j)) <= 1e-12 * A.inf_norm());
            CHECK(std::abs(U(i, i)) > 1e-10);
        }
    }

    const ComplexMatrix A4 = corpus::family61(4);
    const ComplexMatrix U4 = gauss_chain(A4, 2).matrix * A4;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < i; ++j) CHECK(std::abs(U4(i, j)) <= 1e-14);
        CHECK(std::abs(U4(i, i)) > 1e-12);
    }

    const ComplexMatrix B{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    CHECK(max_abs_diff(gauss_chain(B, 0).matrix, gauss_transform(B, 0).matrix) == 0.0);

    ComplexMatrix sing{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}};
    try {
        (void)gauss_chain(sing, 1);
        FAIL("expected ZeroPivotError");
    } catch (const ZeroPivotError& e) {
        CHECK(e.step() == 1);  // the updated (1,1) entry vanishes
    }
}

TEST_CASE("column eliminator clears the pivot column") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        ComplexMatrix A(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = Complex(u(rng) + (i == j ? 2.0 : 0.0), u(rng));
        const int k = static_cast<int>(rng() % n);
        const ComplexMatrix At = column_eliminator(A, k).matrix * A;
        for (int i = 0; i < n; ++i) {
            if (i == k) {
                CHECK(At(k, k) == A(k, k));
            } else {
                CHECK(std::abs(At(i, k)) <= 1e-12 * A.inf_norm());
            }
        }
    }

    // a column that is already only the pivot gives the identity
    ComplexMatrix E{{1, 1, 0}, {0, 2, 1}, {0, 1, 1}};
    CHECK(column_eliminator(E, 0).matrix == ComplexMatrix::identity(3));
}

TEST_CASE("column eliminator restores the invertible class on family61") {
    const ComplexMatrix An = corpus::family61(12);
    const PreconditionReport rep = verify_preconditioned(An, column_eliminator(An, 0));
    CHECK(rep.hclass == HTag::Invertible);
    CHECK(rep.reference_kind == "mu(A/k)");
    CHECK(rep.all_bounds_hold);
}

TEST_CASE("schur preconditioner block structure") {
    const ComplexMatrix An = corpus::family61(10);
    const int n = An.order();
    const Preconditioner P1 = schur_preconditioner(An, IndexSet{0});
    const ComplexMatrix At1 = P1.matrix * An;
    for (int j = 0; j < n; ++j) CHECK(At1(0, j) == An(0, j));  // pivot row untouched
    for (int i = 1; i < n; ++i) CHECK(std::abs(At1(i, 0)) <= 1e-14);

    const Preconditioner Pb = schur_preconditioner(An, IndexSet{0, n - 1});
    const ComplexMatrix Atb = Pb.matrix * An;
    for (int i = 1; i < n - 1; ++i) {
        CHECK(std::abs(Atb(i, 0)) <= 1e-14);
        CHECK(std::abs(Atb(i, n - 1)) <= 1e-14);
    }
    // the interior block is the Schur complement
    const ComplexMatrix S = schur_complement(An, IndexSet{0, n - 1});
    for (int i = 0; i < S.order(); ++i)
        for (int j = 0; j < S.order(); ++j)
            CHECK(std::abs(Atb(i + 1, j + 1) - S(i, j)) <= 1e-12);
}

TEST_CASE("schur preconditioner with a singleton equals the column eliminator") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        ComplexMatrix A(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = Complex(u(rng) + (i == j ? 2.0 : 0.0), u(rng));
        const int k = static_cast<int>(rng() % n);
        const ComplexMatrix lhs = schur_preconditioner(A, IndexSet{k}).matrix;
        const ComplexMatrix rhs = column_eliminator(A, k).matrix;
        CHECK(max_abs_diff(lhs, rhs) <= 1e-13);
    }
}

TEST_CASE("schur preconditioner rejects singular blocks") {
    ComplexMatrix A{{1, 1, 1}, {1, 1, 1}, {0, 0, 1}};
    CHECK_THROWS_AS((void)schur_preconditioner(A, IndexSet{0, 1}), SingularBlockError);
}

TEST_CASE("identity preconditioner trivially satisfies the comparison bound on sdd input") {
    const ComplexMatrix A = corpus::random_in_class(corpus::MatrixClass::SDD, 6, 12);
    const Preconditioner id = first_column(A, std::vector<double>(6, 0.0));
    const PreconditionReport rep = verify_preconditioned(A, id);
    CHECK(max_abs_diff(rep.preconditioned, A) == 0.0);
    CHECK(rep.reference_kind == "mu(PA)");
    CHECK(rep.all_bounds_hold);
}

TEST_CASE("mixed h-matrices are restored to the invertible class by every pivot") {
    int done = 0;
    for (std::uint64_t seed = 0; done < 12 && seed < 60; ++seed) {
        const int n = 3 + static_cast<int>(seed % 5);
        const ComplexMatrix A = corpus::random_in_class(corpus::MatrixClass::MixedH, n, 7000 + seed);
        if (!is_irreducible(A)) continue;
        if (std::abs(determinant(A)) <= 1e-8 * std::pow(A.inf_norm(), n)) continue;
        ++done;
        REQUIRE(classify_h(A) == HTag::Mixed);
        for (int k = 0; k < n; ++k) {
            const PreconditionReport rep = verify_preconditioned(A, column_eliminator(A, k));
            CHECK(rep.hclass == HTag::Invertible);
            for (IterationMethod m : kAllMethods) {
                const MethodBound& b = rep.method(m);
                CHECK(b.bound_holds);
                CHECK(b.reference_below_one);
            }
        }
    }
    CHECK(done == 12);
}

TEST_CASE("ex62 schur preconditioner lands every method at 0.6") {
    const ComplexMatrix A = corpus::get("ex62");
    const PreconditionReport rep = verify_preconditioned(A, schur_preconditioner(A, IndexSet{2, 3}));
    CHECK(rep.hclass == HTag::Invertible);
    for (IterationMethod m : {IterationMethod::FGS, IterationMethod::BGS, IterationMethod::SGS}) {
        CHECK(rep.method(m).rho_preconditioned == doctest::Approx(0.6).epsilon(1e-6));
        CHECK(rep.method(m).rho_reference == doctest::Approx(0.6).epsilon(1e-6));
    }
    CHECK(rep.all_bounds_hold);
}

}  // TEST_SUITE
