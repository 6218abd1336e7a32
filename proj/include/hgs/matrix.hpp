#ifndef HGS_MATRIX_HPP
#define HGS_MATRIX_HPP

#include <cassert>
#include <complex>
#include <initializer_list>
#include <vector>

#include "hgs/errors.hpp"

namespace hgs {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Strictly increasing set of 0-based indices into <n>.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> indices) : indices_(indices) { check_sorted(); }
    explicit IndexSet(std::vector<int> indices) : indices_(std::move(indices)) { check_sorted(); }

    static IndexSet full(int n) {
        std::vector<int> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
        return IndexSet(std::move(v));
    }

    const std::vector<int>& indices() const { return indices_; }
    int size() const { return static_cast<int>(indices_.size()); }
    bool empty() const { return indices_.empty(); }
    int operator[](int k) const { return indices_[static_cast<size_t>(k)]; }
    bool contains(int i) const;

    /// Indices of <n> not in this set, in increasing order.
    IndexSet complement(int n) const;

    /// Throws BadIndexSetError unless the set is a nonempty proper subset of <n>.
    void require_proper(int n) const;

    bool operator==(const IndexSet& other) const { return indices_ == other.indices_; }

private:
    void check_sorted() const;
    std::vector<int> indices_;
};

/// Dense square complex matrix, row-major.  Structural zero means the stored
/// entry is exactly 0+0i; pattern queries use that exact test.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * static_cast<size_t>(n)) {
        assert(n >= 1);
    }
    ComplexMatrix(int n, CVector data) : n_(n), data_(std::move(data)) {
        assert(n >= 1 && data_.size() == static_cast<size_t>(n) * static_cast<size_t>(n));
    }
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(int n);
    static ComplexMatrix diagonal(const CVector& d);

    int order() const { return n_; }

    Complex& operator()(int i, int j) {
        assert(i >= 0 && i < n_ && j >= 0 && j < n_);
        return data_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)];
    }
    Complex operator()(int i, int j) const {
        assert(i >= 0 && i < n_ && j >= 0 && j < n_);
        return data_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)];
    }

    bool is_zero(int i, int j) const { return (*this)(i, j) == Complex(0.0, 0.0); }

    const CVector& data() const { return data_; }

    bool all_finite() const;
    bool diagonal_nonzero() const;
    /// 0-based index of the first exactly zero diagonal entry, or -1.
    int first_zero_diagonal() const;

    ComplexMatrix adjoint() const;

    /// Maximum entry modulus.
    double max_abs() const;
    /// Maximum absolute row sum.
    double inf_norm() const;
    double frobenius_norm() const;

    ComplexMatrix submatrix(const IndexSet& rows, const IndexSet& cols) const;
    ComplexMatrix principal_submatrix(const IndexSet& s) const { return submatrix(s, s); }

    /// P A P^T for the permutation such that result(i, j) = (*this)(perm[i], perm[j]).
    ComplexMatrix symmetric_permutation(const std::vector<int>& perm) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend CVector operator*(const ComplexMatrix& a, const CVector& x);

    bool operator==(const ComplexMatrix& other) const {
        return n_ == other.n_ && data_ == other.data_;
    }

private:
    int n_ = 0;
    CVector data_;
};

double inf_norm(const CVector& x);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace hgs

#endif
