#include "doctest.h"
#include "hgs/corpus.hpp"
#include "hgs/graph.hpp"
#include "hgs/taxonomy.hpp"

using namespace hgs;

TEST_SUITE("corpus") {

TEST_CASE("named matrices are bit-exact") {
    CHECK(corpus::get("ex11A") == ComplexMatrix{{2, 1, 1}, {-1, 2, 1}, {-1, -1, 2}});
    CHECK(corpus::get("ex11B") == ComplexMatrix{{2, -1, -1}, {1, 2, -1}, {1, 1, 2}});
    CHECK(corpus::get("ex12A") == ComplexMatrix{{2, -1, 1}, {1, 2, 1}, {1, 1, 2}});
    CHECK(corpus::get("ex12B") == ComplexMatrix{{2, -1}, {2, 1}});

    const ComplexMatrix A4 = corpus::family61(4);
    CHECK(A4 == ComplexMatrix{{1, -1, 0, 0}, {1, 2, -1, 0}, {0, 1, 2, -1}, {0, 0, 1, 1}});

    const ComplexMatrix E = corpus::get("ex62");
    CHECK(E.order() == 6);
    CHECK(E(0, 0) == Complex(5.0));
    CHECK(E(3, 0) == Complex(0.0));
    CHECK(E(2, 3) == Complex(-1.0));

    // referential transparency
    CHECK(corpus::get("family61", 30) == corpus::get("family61", 30));
    CHECK(corpus::get("ex62") == corpus::get("ex62"));
}

TEST_CASE("bad ids are rejected") {
    CHECK_THROWS_AS((void)corpus::get("nope"), BadIdError);
    CHECK_THROWS_AS((void)corpus::family61(1), BadIdError);
    CHECK_THROWS_AS((void)corpus::matrix_class_from_string("spd"), BadClassError);
}

TEST_CASE("class generators verify their own class") {
    using corpus::MatrixClass;
    for (MatrixClass cls : {MatrixClass::SDD, MatrixClass::IDD, MatrixClass::DEIrreducible,
                            MatrixClass::GDEIrreducible, MatrixClass::MixedH, MatrixClass::NotH}) {
        const bool ray_sensitive = cls == MatrixClass::DEIrreducible ||
                                   cls == MatrixClass::GDEIrreducible || cls == MatrixClass::MixedH;
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const int n = (ray_sensitive ? 3 : 2) + static_cast<int>(seed % 6);
            const ComplexMatrix A = corpus::random_in_class(cls, n, seed * 31 + 7);
            CHECK(A.order() == n);
            CHECK(A == corpus::random_in_class(cls, n, seed * 31 + 7));  // deterministic
            switch (cls) {
                case MatrixClass::SDD:
                    CHECK(dominance_class(A).tag == DominanceTag::StrictlyDD);
                    break;
                case MatrixClass::IDD:
                    CHECK(dominance_class(A).tag == DominanceTag::IrreduciblyDD);
                    break;
                case MatrixClass::DEIrreducible:
                    CHECK(is_irreducible(A));
                    CHECK(dominance_class(A).tag == DominanceTag::DiagonallyEquipotent);
                    break;
                case MatrixClass::GDEIrreducible:
                    CHECK(is_irreducible(A));
                    CHECK(gd_scaling(A).equipotent);
                    break;
                case MatrixClass::MixedH:
                    CHECK(classify_h(A) == HTag::Mixed);
                    break;
                case MatrixClass::NotH:
                    CHECK(classify_h(A) == HTag::NotH);
                    break;
            }
        }
    }
}

TEST_CASE("generators reject undersized requests") {
    CHECK_THROWS_AS((void)corpus::random_in_class(corpus::MatrixClass::SDD, 1, 0), BadClassError);
    CHECK_THROWS_AS((void)corpus::random_in_class(corpus::MatrixClass::MixedH, 2, 0),
                    BadClassError);
}

}  // TEST_SUITE
