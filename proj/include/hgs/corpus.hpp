#ifndef HGS_CORPUS_HPP
#define HGS_CORPUS_HPP

#include <cstdint>
#include <string>

#include "hgs/matrix.hpp"

namespace hgs {
namespace corpus {

/// Named matrices: "ex11A", "ex11B", "ex12A", "ex12B", "ex62" and the
/// parametric family "family61" (n >= 2).  Entries are bit-exact integers.
ComplexMatrix get(const std::string& name, int n = 0);

/// The n x n member of the family61 tridiagonal-with-unit-corners family.
ComplexMatrix family61(int n);

enum class MatrixClass { SDD, IDD, DEIrreducible, GDEIrreducible, MixedH, NotH };

const char* to_string(MatrixClass c);
MatrixClass matrix_class_from_string(const std::string& s);

/// Seeded random member of the requested taxonomy class; the construction is
/// verified against the classifiers before returning.  n >= 2, and n >= 3
/// for the ray-sensitive classes (DE/GDE irreducible, MixedH).
ComplexMatrix random_in_class(MatrixClass cls, int n, std::uint64_t seed);

}  // namespace corpus
}  // namespace hgs

#endif
