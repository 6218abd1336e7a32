#ifndef HGS_ERRORS_HPP
#define HGS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hgs {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A diagonal entry required to be nonzero is exactly zero.
class ZeroDiagonalError : public Error {
public:
    explicit ZeroDiagonalError(int index)
        : Error("zero diagonal entry at index " + std::to_string(index)), index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

/// An elimination pivot is zero (index identifies the failing step).
class ZeroPivotError : public Error {
public:
    explicit ZeroPivotError(int step)
        : Error("zero pivot at elimination step " + std::to_string(step)), step_(step) {}
    int step() const { return step_; }

private:
    int step_;
};

/// A principal submatrix that must be inverted is numerically singular.
class SingularBlockError : public Error {
public:
    explicit SingularBlockError(const std::string& what) : Error(what) {}
};

/// An index set is empty, full, unsorted or out of range where that is not allowed.
class BadIndexSetError : public Error {
public:
    explicit BadIndexSetError(const std::string& what) : Error(what) {}
};

/// The eigensolver did not converge within its sweep budget.
class NoConvergenceError : public Error {
public:
    explicit NoConvergenceError(const std::string& what) : Error(what) {}
};

/// Vector/matrix dimensions do not match.
class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

/// An operation requiring an irreducible matrix received a reducible one.
class NotIrreducibleError : public Error {
public:
    explicit NotIrreducibleError(const std::string& what) : Error(what) {}
};

/// Unknown corpus id.
class BadIdError : public Error {
public:
    explicit BadIdError(const std::string& what) : Error(what) {}
};

/// Unknown generator class.
class BadClassError : public Error {
public:
    explicit BadClassError(const std::string& what) : Error(what) {}
};

/// Angle outside the admissible range.
class BadAngleError : public Error {
public:
    explicit BadAngleError(const std::string& what) : Error(what) {}
};

/// Malformed input file; carries the 1-based line and column of the offence.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column = 0)
        : Error("parse error at line " + std::to_string(line) +
                (column > 0 ? ", column " + std::to_string(column) : "") + ": " + what),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace hgs

#endif
