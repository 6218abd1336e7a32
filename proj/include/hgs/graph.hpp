#ifndef HGS_GRAPH_HPP
#define HGS_GRAPH_HPP

#include "hgs/matrix.hpp"

namespace hgs {

/// Frobenius normal form: a symmetric permutation bringing the matrix to
/// block upper triangular shape with irreducible diagonal blocks.
///
/// `permutation` maps new positions to original indices, so the permuted
/// matrix is A(permutation[i], permutation[j]).  `blocks` lists the original
/// index set of each diagonal block in block order; entries from a later
/// block's rows into an earlier block's columns are exactly zero.
struct FrobeniusForm {
    std::vector<int> permutation;
    std::vector<IndexSet> blocks;
    std::vector<ComplexMatrix> block_matrices;

    ComplexMatrix permuted(const ComplexMatrix& A) const {
        return A.symmetric_permutation(permutation);
    }
};

/// True iff the digraph on exactly nonzero off-diagonal entries is strongly
/// connected.  A 1x1 matrix is irreducible iff its single entry is nonzero.
bool is_irreducible(const ComplexMatrix& A);

/// Strongly connected components of the adjacency digraph, ordered so that
/// the permuted matrix is block upper triangular.  Works on the exact-zero
/// pattern; no thresholding.
FrobeniusForm frobenius_normal_form(const ComplexMatrix& A);

}  // namespace hgs

#endif
