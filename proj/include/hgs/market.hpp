#ifndef HGS_MARKET_HPP
#define HGS_MARKET_HPP

#include <iosfwd>
#include <string>

#include "hgs/matrix.hpp"

namespace hgs {
namespace market {

/// Read a Matrix Market file ("%%MatrixMarket matrix ...") holding a square
/// matrix.  Supported: coordinate and array formats; complex, real and
/// integer fields; general, symmetric, skew-symmetric and hermitian
/// symmetries.  Throws ParseError with line/column on malformed input.
ComplexMatrix read_matrix(const std::string& path);
ComplexMatrix read_matrix(std::istream& in, const std::string& origin = "<stream>");

/// Read an n x 1 (or 1 x n) Matrix Market file as a vector.
CVector read_vector(const std::string& path);
CVector read_vector(std::istream& in, const std::string& origin = "<stream>");

/// Write in coordinate complex general format with round-trip-exact entries.
void write_matrix(const ComplexMatrix& A, const std::string& path);
void write_matrix(const ComplexMatrix& A, std::ostream& out);

/// Write a vector in array complex general format.
void write_vector(const CVector& x, const std::string& path);
void write_vector(const CVector& x, std::ostream& out);

}  // namespace market
}  // namespace hgs

#endif
