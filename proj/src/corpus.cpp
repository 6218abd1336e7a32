#include "hgs/corpus.hpp"

#include <cmath>
#include <random>

#include "hgs/graph.hpp"
#include "hgs/taxonomy.hpp"

namespace hgs {
namespace corpus {

const char* to_string(MatrixClass c) {
    switch (c) {
        case MatrixClass::SDD: return "sdd";
        case MatrixClass::IDD: return "idd";
        case MatrixClass::DEIrreducible: return "de";
        case MatrixClass::GDEIrreducible: return "gde";
        case MatrixClass::MixedH: return "mixedh";
        case MatrixClass::NotH: return "noth";
    }
    return "?";
}

MatrixClass matrix_class_from_string(const std::string& s) {
    if (s == "sdd") return MatrixClass::SDD;
    if (s == "idd") return MatrixClass::IDD;
    if (s == "de") return MatrixClass::DEIrreducible;
    if (s == "gde") return MatrixClass::GDEIrreducible;
    if (s == "mixedh") return MatrixClass::MixedH;
    if (s == "noth") return MatrixClass::NotH;
    throw BadClassError("unknown matrix class '" + s + "'");
}

ComplexMatrix family61(int n) {
    if (n < 2) throw BadIdError("family61 requires n >= 2");
    ComplexMatrix A(n);
    for (int i = 0; i < n; ++i) {
        A(i, i) = 2.0;
        if (i + 1 < n) A(i, i + 1) = -1.0;
        if (i - 1 >= 0) A(i, i - 1) = 1.0;
    }
    A(0, 0) = 1.0;
    A(n - 1, n - 1) = 1.0;
    return A;
}

ComplexMatrix get(const std::string& name, int n) {
    if (name == "ex11A") return ComplexMatrix{{2, 1, 1}, {-1, 2, 1}, {-1, -1, 2}};
    if (name == "ex11B") return ComplexMatrix{{2, -1, -1}, {1, 2, -1}, {1, 1, 2}};
    if (name == "ex12A") return ComplexMatrix{{2, -1, 1}, {1, 2, 1}, {1, 1, 2}};
    if (name == "ex12B") return ComplexMatrix{{2, -1}, {2, 1}};
    if (name == "ex62") {
        return ComplexMatrix{{5, -1, 1, 1, 1, -1}, {1, 5, -1, 1, 1, 1}, {1, 1, 5, -1, 1, 1},
                             {0, 0, 0, 2, -1, 1},  {0, 0, 0, 1, 2, -1}, {0, 0, 0, 1, 1, 2}};
    }
    if (name == "family61") return family61(n);
    throw BadIdError("unknown corpus id '" + name + "'");
}

namespace {

using Rng = std::mt19937_64;

// Off-diagonal support: a two-way ring (always irreducible) plus a few
// random extra entries.
std::vector<std::pair<int, int>> ring_pattern(int n, Rng& rng, double extra_density) {
    std::vector<std::pair<int, int>> pattern;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        pattern.emplace_back(i, j);
        pattern.emplace_back(j, i);
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || j == (i + 1) % n || i == (j + 1) % n) continue;
            if (coin(rng) < extra_density) pattern.emplace_back(i, j);
        }
    }
    return pattern;
}

ComplexMatrix with_moduli_and_phases(int n, const std::vector<std::pair<int, int>>& pattern,
                                     Rng& rng) {
    std::uniform_real_distribution<double> mod(0.3, 1.5);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    ComplexMatrix A(n);
    for (const auto& [i, j] : pattern) {
        if (A.is_zero(i, j)) A(i, j) = std::polar(mod(rng), phase(rng));
    }
    return A;
}

double offdiag_sum(const ComplexMatrix& A, int i) {
    double s = 0.0;
    for (int j = 0; j < A.order(); ++j)
        if (j != i) s += std::abs(A(i, j));
    return s;
}

ComplexMatrix make_sdd(int n, Rng& rng) {
    ComplexMatrix A = with_moduli_and_phases(n, ring_pattern(n, rng, 0.4), rng);
    std::uniform_real_distribution<double> margin(1.1, 1.8);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    for (int i = 0; i < n; ++i) {
        A(i, i) = std::polar(offdiag_sum(A, i) * margin(rng) + 0.1, phase(rng));
    }
    return A;
}

ComplexMatrix make_idd(int n, Rng& rng) {
    ComplexMatrix A = with_moduli_and_phases(n, ring_pattern(n, rng, 0.3), rng);
    std::uniform_real_distribution<double> margin(1.2, 1.8);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    std::uniform_int_distribution<int> pick(0, n - 1);
    // At least one equality row and at least one strict row.
    const int eq_row = pick(rng);
    int strict_row = pick(rng);
    while (strict_row == eq_row) strict_row = pick(rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        const double s = offdiag_sum(A, i);
        const bool equality = i == eq_row || (i != strict_row && coin(rng) < 0.5);
        A(i, i) = std::polar(equality ? s : s * margin(rng), phase(rng));
    }
    return A;
}

ComplexMatrix make_de(int n, Rng& rng) {
    ComplexMatrix A = with_moduli_and_phases(n, ring_pattern(n, rng, 0.3), rng);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    for (int i = 0; i < n; ++i) {
        A(i, i) = std::polar(offdiag_sum(A, i), phase(rng));
    }
    return A;
}

ComplexMatrix make_gde(int n, Rng& rng) {
    ComplexMatrix A = with_moduli_and_phases(n, ring_pattern(n, rng, 0.3), rng);
    std::uniform_real_distribution<double> wdist(0.5, 2.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    std::vector<double> w(static_cast<size_t>(n));
    for (double& x : w) x = wdist(rng);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) s += w[static_cast<size_t>(j)] * std::abs(A(i, j));
        A(i, i) = std::polar(s / w[static_cast<size_t>(i)], phase(rng));
    }
    return A;
}

ComplexMatrix make_mixed_h(int n, Rng& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (n < 5 || coin(rng) < 0.5) return make_gde(n, rng);
    // Reducible flavour: an equipotent block followed by a strictly dominant
    // block, coupled in the block upper triangle.
    std::uniform_int_distribution<int> cut(3, n - 2);
    const int k = cut(rng);
    ComplexMatrix top = make_gde(k, rng);
    ComplexMatrix bottom = make_sdd(n - k, rng);
    ComplexMatrix A(n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) A(i, j) = top(i, j);
    for (int i = 0; i < n - k; ++i)
        for (int j = 0; j < n - k; ++j) A(k + i, k + j) = bottom(i, j);
    std::uniform_real_distribution<double> mod(0.1, 0.5);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    for (int i = 0; i < k; ++i)
        for (int j = k; j < n; ++j)
            if (coin(rng) < 0.3) A(i, j) = std::polar(mod(rng), phase(rng));
    return A;
}

ComplexMatrix make_not_h(int n, Rng& rng) {
    ComplexMatrix A = with_moduli_and_phases(n, ring_pattern(n, rng, 0.7), rng);
    std::uniform_real_distribution<double> weak(0.05, 0.3);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    for (int i = 0; i < n; ++i) {
        A(i, i) = std::polar(offdiag_sum(A, i) * weak(rng), phase(rng));
    }
    return A;
}

bool matches(const ComplexMatrix& A, MatrixClass cls) {
    switch (cls) {
        case MatrixClass::SDD:
            return dominance_class(A).tag == DominanceTag::StrictlyDD;
        case MatrixClass::IDD:
            return dominance_class(A).tag == DominanceTag::IrreduciblyDD;
        case MatrixClass::DEIrreducible:
            return is_irreducible(A) &&
                   dominance_class(A).tag == DominanceTag::DiagonallyEquipotent;
        case MatrixClass::GDEIrreducible:
            return is_irreducible(A) && gd_scaling(A).equipotent && A.diagonal_nonzero();
        case MatrixClass::MixedH:
            return classify_h(A) == HTag::Mixed;
        case MatrixClass::NotH:
            return classify_h(A) == HTag::NotH;
    }
    return false;
}

}  // namespace

ComplexMatrix random_in_class(MatrixClass cls, int n, std::uint64_t seed) {
    const bool ray_sensitive = cls == MatrixClass::DEIrreducible ||
                               cls == MatrixClass::GDEIrreducible || cls == MatrixClass::MixedH;
    if (n < 2 || (ray_sensitive && n < 3)) {
        throw BadClassError("matrix order too small for the requested class");
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        ComplexMatrix A(n);
        switch (cls) {
            case MatrixClass::SDD: A = make_sdd(n, rng); break;
            case MatrixClass::IDD: A = make_idd(n, rng); break;
            case MatrixClass::DEIrreducible: A = make_de(n, rng); break;
            case MatrixClass::GDEIrreducible: A = make_gde(n, rng); break;
            case MatrixClass::MixedH: A = make_mixed_h(n, rng); break;
            case MatrixClass::NotH: A = make_not_h(n, rng); break;
        }
        if (matches(A, cls)) return A;
    }
    throw Error("class generator failed to verify after 100 attempts");
}

}  // namespace corpus
}  // namespace hgs
