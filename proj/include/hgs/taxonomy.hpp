#ifndef HGS_TAXONOMY_HPP
#define HGS_TAXONOMY_HPP

#include <optional>

#include "hgs/graph.hpp"
#include "hgs/matrix.hpp"

namespace hgs {

enum class DominanceTag { StrictlyDD, IrreduciblyDD, NonstrictDD, DiagonallyEquipotent, NotDD };

struct DominanceClass {
    DominanceTag tag = DominanceTag::NotDD;
    /// Rows where the dominance inequality holds with equality.
    IndexSet equality_rows;
};

enum class MTag { NotZ, NonsingularM, SingularM, NotM };

/// Verdict for a Z-matrix written as sI - B with B >= 0.
struct MClass {
    MTag tag = MTag::NotZ;
    double s = 0.0;
    double rhoB = 0.0;
};

enum class HTag { Invertible, Singular, Mixed, NotH };

struct GDScaling {
    bool exists = false;
    /// Positive column weights witnessing generalized diagonal dominance
    /// (empty when exists is false).
    std::vector<double> weights;
    /// True when the scaled inequality holds with equality in every row.
    bool equipotent = false;
};

/// Full taxonomy record of one matrix.
struct Classification {
    DominanceClass dominance;
    MClass comparison_mclass;
    HTag hclass = HTag::NotH;
    GDScaling scaling;
    bool generalized_equipotent = false;
    bool irreducible = false;
    bool hermitian_positive_definite = false;
};

const char* to_string(DominanceTag t);
const char* to_string(MTag t);
const char* to_string(HTag t);

/// mu(A): |a_ii| on the diagonal, -|a_ij| elsewhere.  Always a Z-matrix.
ComplexMatrix comparison_matrix(const ComplexMatrix& A);

/// M-matrix trichotomy of a Z-matrix via s = max diag and rho(sI - Z).
/// Non-Z input yields tag NotZ.
MClass classify_m(const ComplexMatrix& Z);

/// H-matrix trichotomy of an arbitrary complex matrix through mu(A).
HTag classify_h(const ComplexMatrix& A);

/// Row-dominance ladder of Definition-level row inequalities.
DominanceClass dominance_class(const ComplexMatrix& A);

/// Generalized diagonal dominance witness.  For irreducible input the
/// weights come from the Perron vector of sI - mu(A); reducible input is
/// handled blockwise through the Frobenius normal form.
GDScaling gd_scaling(const ComplexMatrix& A);

/// True iff the irreducible matrix R is generalized diagonally equipotent.
/// Throws NotIrreducibleError for reducible input.
bool is_gde_block(const ComplexMatrix& R);

bool is_hpd(const ComplexMatrix& A);

/// Random member of the equimodular set of A: same entrywise moduli,
/// uniformly random phases on nonzero entries, deterministic in seed.
ComplexMatrix sample_equimodular(const ComplexMatrix& A, std::uint64_t seed);

/// Convenience: the whole record at once.
Classification classify(const ComplexMatrix& A);

}  // namespace hgs

#endif
