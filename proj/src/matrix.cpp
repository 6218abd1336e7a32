#include "hgs/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace hgs {

void IndexSet::check_sorted() const {
    for (size_t k = 1; k < indices_.size(); ++k) {
        if (indices_[k - 1] >= indices_[k]) {
            throw BadIndexSetError("index set must be strictly increasing");
        }
    }
    if (!indices_.empty() && indices_.front() < 0) {
        throw BadIndexSetError("index set contains a negative index");
    }
}

bool IndexSet::contains(int i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

IndexSet IndexSet::complement(int n) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n) - indices_.size());
    size_t k = 0;
    for (int i = 0; i < n; ++i) {
        if (k < indices_.size() && indices_[k] == i) {
            ++k;
        } else {
            out.push_back(i);
        }
    }
    return IndexSet(std::move(out));
}

void IndexSet::require_proper(int n) const {
    if (indices_.empty()) throw BadIndexSetError("index set is empty");
    if (indices_.back() >= n) throw BadIndexSetError("index set exceeds matrix order");
    if (size() == n) throw BadIndexSetError("index set is the full <n>");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    n_ = static_cast<int>(rows.size());
    data_.resize(static_cast<size_t>(n_) * static_cast<size_t>(n_));
    int i = 0;
    for (const auto& row : rows) {
        assert(static_cast<int>(row.size()) == n_);
        int j = 0;
        for (Complex v : row) (*this)(i, j++) = v;
        ++i;
    }
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix I(n);
    for (int i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

ComplexMatrix ComplexMatrix::diagonal(const CVector& d) {
    ComplexMatrix D(static_cast<int>(d.size()));
    for (int i = 0; i < D.order(); ++i) D(i, i) = d[static_cast<size_t>(i)];
    return D;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& v : data_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

bool ComplexMatrix::diagonal_nonzero() const { return first_zero_diagonal() < 0; }

int ComplexMatrix::first_zero_diagonal() const {
    for (int i = 0; i < n_; ++i) {
        if (is_zero(i, i)) return i;
    }
    return -1;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::inf_norm() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i) {
        double row = 0.0;
        for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
        m = std::max(m, row);
    }
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::submatrix(const IndexSet& rows, const IndexSet& cols) const {
    assert(rows.size() == cols.size());
    ComplexMatrix out(rows.size());
    for (int i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
}

ComplexMatrix ComplexMatrix::symmetric_permutation(const std::vector<int>& perm) const {
    assert(static_cast<int>(perm.size()) == n_);
    ComplexMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out(i, j) = (*this)(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    assert(n_ == other.n_);
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    assert(n_ == other.n_);
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (Complex& v : data_) v *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.n_ == b.n_);
    const int n = a.n_;
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

CVector operator*(const ComplexMatrix& a, const CVector& x) {
    assert(static_cast<size_t>(a.n_) == x.size());
    CVector out(x.size());
    for (int i = 0; i < a.n_; ++i) {
        Complex s = 0.0;
        for (int j = 0; j < a.n_; ++j) s += a(i, j) * x[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = s;
    }
    return out;
}

double inf_norm(const CVector& x) {
    double m = 0.0;
    for (const Complex& v : x) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.order() == b.order());
    double m = 0.0;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

}  // namespace hgs
