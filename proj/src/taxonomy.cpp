#include "hgs/taxonomy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hgs/linalg.hpp"

namespace hgs {

namespace {

// Relative tolerance for row-level equality decisions, taken against the
// row's absolute sum.
constexpr double kRowTol = 1e-9;

double offdiag_row_sum(const ComplexMatrix& A, int i) {
    double s = 0.0;
    for (int j = 0; j < A.order(); ++j) {
        if (j != i) s += std::abs(A(i, j));
    }
    return s;
}

}  // namespace

const char* to_string(DominanceTag t) {
    switch (t) {
        case DominanceTag::StrictlyDD: return "strictly-dd";
        case DominanceTag::IrreduciblyDD: return "irreducibly-dd";
        case DominanceTag::NonstrictDD: return "nonstrict-dd";
        case DominanceTag::DiagonallyEquipotent: return "diagonally-equipotent";
        case DominanceTag::NotDD: return "not-dd";
    }
    return "?";
}

const char* to_string(MTag t) {
    switch (t) {
        case MTag::NotZ: return "not-z";
        case MTag::NonsingularM: return "nonsingular-m";
        case MTag::SingularM: return "singular-m";
        case MTag::NotM: return "not-m";
    }
    return "?";
}

const char* to_string(HTag t) {
    switch (t) {
        case HTag::Invertible: return "invertible";
        case HTag::Singular: return "singular";
        case HTag::Mixed: return "mixed";
        case HTag::NotH: return "not-h";
    }
    return "?";
}

ComplexMatrix comparison_matrix(const ComplexMatrix& A) {
    const int n = A.order();
    ComplexMatrix M(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double a = std::abs(A(i, j));
            M(i, j) = (i == j) ? Complex(a, 0.0) : Complex(-a, 0.0);
        }
    }
    return M;
}

MClass classify_m(const ComplexMatrix& Z) {
    const int n = Z.order();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex v = Z(i, j);
            if (v.imag() != 0.0) return MClass{MTag::NotZ, 0.0, 0.0};
            if (i != j && v.real() > 0.0) return MClass{MTag::NotZ, 0.0, 0.0};
        }
    }

    double s = Z(0, 0).real();
    for (int i = 1; i < n; ++i) s = std::max(s, Z(i, i).real());

    ComplexMatrix B(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) B(i, j) = (i == j) ? Complex(s - Z(i, i).real(), 0.0) : -Z(i, j);

    const double rhoB = spectral_radius(B);
    const double tol = 1e-9 * std::max(s, 1.0);
    MClass out{MTag::NotM, s, rhoB};
    if (std::abs(rhoB - s) <= tol) {
        out.tag = MTag::SingularM;
    } else if (rhoB < s) {
        out.tag = MTag::NonsingularM;
    }
    return out;
}

HTag classify_h(const ComplexMatrix& A) {
    const MClass mc = classify_m(comparison_matrix(A));
    switch (mc.tag) {
        case MTag::NonsingularM:
            return HTag::Invertible;
        case MTag::SingularM:
            return A.diagonal_nonzero() ? HTag::Mixed : HTag::Singular;
        default:
            return HTag::NotH;
    }
}

DominanceClass dominance_class(const ComplexMatrix& A) {
    const int n = A.order();
    int strict = 0, equal = 0;
    std::vector<int> equality_rows;
    for (int i = 0; i < n; ++i) {
        const double off = offdiag_row_sum(A, i);
        const double d = std::abs(A(i, i));
        const double tol = kRowTol * (d + off);
        if (std::abs(d - off) <= tol) {
            ++equal;
            equality_rows.push_back(i);
        } else if (d > off) {
            ++strict;
        } else {
            return DominanceClass{DominanceTag::NotDD, IndexSet(std::move(equality_rows))};
        }
    }
    DominanceClass out;
    out.equality_rows = IndexSet(std::move(equality_rows));
    if (strict == n) {
        out.tag = DominanceTag::StrictlyDD;
    } else if (equal == n) {
        out.tag = DominanceTag::DiagonallyEquipotent;
    } else if (is_irreducible(A)) {
        out.tag = DominanceTag::IrreduciblyDD;
    } else {
        out.tag = DominanceTag::NonstrictDD;
    }
    return out;
}

namespace {

// Perron vector of the irreducible nonnegative matrix B by power iteration
// on B + eps*I (the shift guarantees primitivity).
std::vector<double> perron_vector(const ComplexMatrix& B, double s) {
    const int n = B.order();
    const double shift = 1e-3 * std::max(s, B.max_abs());
    std::vector<double> v(static_cast<size_t>(n), 1.0 / n), w(static_cast<size_t>(n));
    double lambda = 0.0;
    const double scale = B.inf_norm() + shift;
    for (int it = 0; it < 200000; ++it) {
        for (int i = 0; i < n; ++i) {
            double acc = shift * v[static_cast<size_t>(i)];
            for (int j = 0; j < n; ++j) acc += B(i, j).real() * v[static_cast<size_t>(j)];
            w[static_cast<size_t>(i)] = acc;
        }
        double nrm = 0.0;
        for (double x : w) nrm = std::max(nrm, std::abs(x));
        for (double& x : w) x /= nrm;
        lambda = nrm;
        double resid = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = shift * w[static_cast<size_t>(i)];
            for (int j = 0; j < n; ++j) acc += B(i, j).real() * w[static_cast<size_t>(j)];
            resid = std::max(resid, std::abs(acc - lambda * w[static_cast<size_t>(i)]));
        }
        v = w;
        if (resid <= 1e-12 * scale) break;
    }
    return v;
}

GDScaling gd_scaling_irreducible(const ComplexMatrix& A) {
    const int n = A.order();
    GDScaling out;
    if (n == 1) {
        out.exists = true;
        out.weights = {1.0};
        out.equipotent = A.is_zero(0, 0);
        return out;
    }

    // Exact-equality fast paths: plain dominance already carries its witness.
    const DominanceClass dc = dominance_class(A);
    if (dc.tag == DominanceTag::StrictlyDD || dc.tag == DominanceTag::DiagonallyEquipotent) {
        out.exists = true;
        out.weights.assign(static_cast<size_t>(n), 1.0);
        out.equipotent = dc.tag == DominanceTag::DiagonallyEquipotent;
        return out;
    }

    const ComplexMatrix mu = comparison_matrix(A);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s = std::max(s, mu(i, i).real());
    ComplexMatrix B(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            B(i, j) = (i == j) ? Complex(s - mu(i, i).real(), 0.0) : -mu(i, j);

    const std::vector<double> v = perron_vector(B, s);

    // mu(A) v >= 0 row-wise (within the row tolerance) certifies generalized
    // dominance with weights v; equality in every row is equipotence.
    bool nonneg = true, allzero = true;
    for (int i = 0; i < n; ++i) {
        double r = mu(i, i).real() * v[static_cast<size_t>(i)];
        double rowscale = std::abs(r);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double t = mu(i, j).real() * v[static_cast<size_t>(j)];
            r += t;
            rowscale += std::abs(t);
        }
        const double tol = kRowTol * std::max(rowscale, 1e-300);
        if (r < -tol) nonneg = false;
        if (std::abs(r) > tol) allzero = false;
    }
    if (nonneg) {
        out.exists = true;
        out.weights = v;
        out.equipotent = allzero;
    }
    return out;
}

}  // namespace

GDScaling gd_scaling(const ComplexMatrix& A) {
    if (A.order() == 1 || is_irreducible(A)) return gd_scaling_irreducible(A);

    // Reducible: decide blockwise on the Frobenius normal form.  The matrix
    // is generalized equipotent only when every block is and there is no
    // coupling at all between blocks.
    const FrobeniusForm fnf = frobenius_normal_form(A);
    GDScaling out;
    out.exists = true;
    out.weights.assign(static_cast<size_t>(A.order()), 0.0);
    bool all_equipotent = true;
    for (size_t b = 0; b < fnf.blocks.size(); ++b) {
        const GDScaling gs = gd_scaling_irreducible(fnf.block_matrices[b]);
        if (!gs.exists) {
            out.exists = false;
            out.weights.clear();
            out.equipotent = false;
            return out;
        }
        all_equipotent = all_equipotent && gs.equipotent;
        for (int k = 0; k < fnf.blocks[b].size(); ++k) {
            out.weights[static_cast<size_t>(fnf.blocks[b][k])] = gs.weights[static_cast<size_t>(k)];
        }
    }
    bool coupled = false;
    for (size_t b = 0; b < fnf.blocks.size() && !coupled; ++b) {
        for (size_t c = 0; c < fnf.blocks.size() && !coupled; ++c) {
            if (b == c) continue;
            for (int i = 0; i < fnf.blocks[b].size() && !coupled; ++i)
                for (int j = 0; j < fnf.blocks[c].size(); ++j)
                    if (!A.is_zero(fnf.blocks[b][i], fnf.blocks[c][j])) {
                        coupled = true;
                        break;
                    }
        }
    }
    out.equipotent = all_equipotent && !coupled;
    return out;
}

bool is_gde_block(const ComplexMatrix& R) {
    if (!is_irreducible(R)) {
        throw NotIrreducibleError("is_gde_block requires an irreducible matrix");
    }
    return gd_scaling_irreducible(R).equipotent;
}

bool is_hpd(const ComplexMatrix& A) {
    const int n = A.order();
    const double tol = 1e-12 * std::max(1.0, A.max_abs());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (std::abs(A(i, j) - std::conj(A(j, i))) > tol) return false;
        }
    }
    const Spectrum sp = eigenvalues(A);
    const double scale = std::max(1.0, sp.spectral_radius);
    for (const Complex& lam : sp.eigenvalues) {
        if (std::abs(lam.imag()) > 1e-10 * scale) return false;
        if (lam.real() <= 1e-12 * scale) return false;
    }
    return true;
}

ComplexMatrix sample_equimodular(const ComplexMatrix& A, std::uint64_t seed) {
    const int n = A.order();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    ComplexMatrix B(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (A.is_zero(i, j)) continue;
            B(i, j) = std::polar(std::abs(A(i, j)), phase(rng));
        }
    }
    return B;
}

Classification classify(const ComplexMatrix& A) {
    Classification c;
    c.dominance = dominance_class(A);
    c.comparison_mclass = classify_m(comparison_matrix(A));
    switch (c.comparison_mclass.tag) {
        case MTag::NonsingularM: c.hclass = HTag::Invertible; break;
        case MTag::SingularM:
            c.hclass = A.diagonal_nonzero() ? HTag::Mixed : HTag::Singular;
            break;
        default: c.hclass = HTag::NotH; break;
    }
    c.scaling = gd_scaling(A);
    c.generalized_equipotent = c.scaling.equipotent;
    c.irreducible = is_irreducible(A);
    c.hermitian_positive_definite = is_hpd(A);
    return c;
}

}  // namespace hgs
