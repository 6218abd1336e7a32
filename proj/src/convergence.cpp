#include "hgs/convergence.hpp"

#include <cmath>
#include <sstream>

namespace hgs {

const char* to_string(ConvergenceStatus s) {
    switch (s) {
        case ConvergenceStatus::Converges: return "converges";
        case ConvergenceStatus::Diverges: return "diverges";
        case ConvergenceStatus::Unknown: return "unknown";
    }
    return "?";
}

std::pair<double, bool> numerical_verdict(const ComplexMatrix& A, IterationMethod m) {
    const double rho = spectral_radius(iteration_matrix(A, m));
    return {rho, rho < 1.0 - kUnitRadiusBand};
}

namespace {

std::string block_label(const IndexSet& block) {
    std::ostringstream os;
    os << "{";
    for (int k = 0; k < block.size(); ++k) os << (k ? "," : "") << block[k] + 1;
    os << "}";
    return os.str();
}

// Unit-diagonal equipotent form of an irreducible equipotent block: scale
// columns by the dominance weights, then rows by the inverse diagonal.
ComplexMatrix unit_diagonal_form(const ComplexMatrix& R, const std::vector<double>& weights) {
    const int n = R.order();
    ComplexMatrix F(n);
    for (int i = 0; i < n; ++i) {
        const Complex dii = R(i, i) * weights[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            F(i, j) = R(i, j) * weights[static_cast<size_t>(j)] / dii;
        }
    }
    return F;
}

RayFamily family_for(IterationMethod m) {
    switch (m) {
        case IterationMethod::FGS: return RayFamily::Psi;
        case IterationMethod::BGS: return RayFamily::Phi;
        default: return RayFamily::Zero;
    }
}

const char* ray_rule_id(IterationMethod m) {
    switch (m) {
        case IterationMethod::FGS: return "psi-ray-block";
        case IterationMethod::BGS: return "phi-ray-block";
        default: return "zero-ray-block";
    }
}

}  // namespace

Verdict theorem_verdict(const ComplexMatrix& A, IterationMethod m) {
    Verdict v;
    if (m == IterationMethod::Jacobi) {
        v.status = ConvergenceStatus::Unknown;
        v.rule_chain.push_back({"jacobi-numerical-only",
                                "no structural criterion is applied to the Jacobi sweep; only the "
                                "computed spectral radius is reported"});
        return v;
    }

    const int zero_diag = A.first_zero_diagonal();
    if (zero_diag >= 0) {
        v.status = ConvergenceStatus::Unknown;
        v.rule_chain.push_back({"zero-diagonal",
                                "diagonal entry " + std::to_string(zero_diag + 1) +
                                    " is zero, so the sweep operators are undefined"});
        return v;
    }

    if (is_hpd(A)) {
        v.status = ConvergenceStatus::Converges;
        v.rule_chain.push_back({"hermitian-positive-definite",
                                "Hermitian positive definite matrices have convergent forward, "
                                "backward and symmetric sweeps"});
        return v;
    }

    const DominanceClass dc = dominance_class(A);
    if (dc.tag == DominanceTag::StrictlyDD || dc.tag == DominanceTag::IrreduciblyDD) {
        v.status = ConvergenceStatus::Converges;
        v.rule_chain.push_back({"strict-or-irreducible-dominance",
                                std::string("matrix is ") + to_string(dc.tag) +
                                    "; all three sweep operators are contractions in spectrum"});
        return v;
    }

    const HTag h = classify_h(A);
    if (h == HTag::Invertible) {
        v.status = ConvergenceStatus::Converges;
        v.rule_chain.push_back({"invertible-h-matrix",
                                "comparison matrix is a nonsingular M-matrix"});
        return v;
    }

    if (h == HTag::Mixed) {
        v.rule_chain.push_back({"mixed-h-matrix",
                                "comparison matrix is a singular M-matrix with nonzero diagonal; "
                                "deciding per irreducible block"});
        const FrobeniusForm fnf = frobenius_normal_form(A);
        for (size_t b = 0; b < fnf.blocks.size(); ++b) {
            const IndexSet& block = fnf.blocks[b];
            const ComplexMatrix& R = fnf.block_matrices[b];
            if (R.order() == 1) continue;  // nonzero 1x1 block contributes radius 0

            const GDScaling gs = gd_scaling(R);
            if (!gs.equipotent) {
                v.rule_chain.push_back({"block-not-equipotent",
                                        "block " + block_label(block) +
                                            " is not generalized equipotent, hence an invertible "
                                            "H-matrix block"});
                continue;
            }
            if (R.order() == 2) {
                v.status = ConvergenceStatus::Diverges;
                v.rule_chain.push_back({"equipotent-2x2-block",
                                        "block " + block_label(block) +
                                            " is an irreducible equipotent 2x2 block; all three "
                                            "sweeps have spectral radius exactly 1"});
                DivergenceWitness w;
                w.block = block;
                w.rho = 1.0;
                v.witness = w;
                return v;
            }

            const ComplexMatrix F = unit_diagonal_form(R, gs.weights);
            const RayFamily fam = family_for(m);
            const RayVerdict rv = ray_test(F, fam);
            if (rv.member) {
                v.status = ConvergenceStatus::Diverges;
                std::string note = "unit-diagonal form of block " + block_label(block) +
                                   " carries a " + to_string(fam) + " phase certificate";
                if (rv.angle_kind == RayAngle::Determined) {
                    note += " with angle " + std::to_string(rv.angle);
                }
                note += ", forcing a unit-modulus eigenvalue of the sweep operator";
                v.rule_chain.push_back({ray_rule_id(m), note});
                DivergenceWitness w;
                w.block = block;
                w.family = fam;
                if (rv.angle_kind == RayAngle::Determined) w.ray_angle = rv.angle;
                w.rho = 1.0;
                v.witness = w;
                return v;
            }
            v.rule_chain.push_back({"block-ray-free",
                                    "unit-diagonal form of block " + block_label(block) +
                                        " admits no " + std::string(to_string(fam)) +
                                        " phase certificate"});
        }
        v.status = ConvergenceStatus::Converges;
        v.rule_chain.push_back({"block-maximum",
                                "the spectral radius is the maximum over the diagonal blocks, and "
                                "every block converges"});
        return v;
    }

    v.status = ConvergenceStatus::Unknown;
    v.rule_chain.push_back({"not-h-matrix",
                            "comparison matrix is not an M-matrix; outside the decidable classes"});
    return v;
}

ConvergenceReport analyze(const ComplexMatrix& A) {
    ConvergenceReport rep;
    rep.classification = classify(A);
    rep.fnf = frobenius_normal_form(A);
    for (IterationMethod m : kAllMethods) {
        MethodReport mr;
        mr.verdict = theorem_verdict(A, m);
        try {
            const auto [rho, conv] = numerical_verdict(A, m);
            mr.rho = rho;
            mr.numerical_converges = conv;
        } catch (const ZeroDiagonalError& e) {
            mr.diagnostic = e.what();
        } catch (const NoConvergenceError& e) {
            mr.diagnostic = e.what();
        }
        if (!mr.rho.has_value() || mr.verdict.status == ConvergenceStatus::Unknown) {
            mr.agree = true;
        } else {
            mr.agree = (mr.verdict.status == ConvergenceStatus::Converges) ==
                       mr.numerical_converges;
        }
        rep.methods[static_cast<size_t>(m)] = std::move(mr);
    }
    return rep;
}

}  // namespace hgs
