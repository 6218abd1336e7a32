#include "hgs/market.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hgs {
namespace market {

namespace {

enum class Format { Coordinate, Array };
enum class Field { Complex, Real, Integer };
enum class Symmetry { General, Symmetric, SkewSymmetric, Hermitian };

struct Header {
    Format format;
    Field field;
    Symmetry symmetry;
};

struct Dense {
    int rows = 0;
    int cols = 0;
    std::vector<Complex> values;  // row-major

    Complex& at(int i, int j) { return values[static_cast<size_t>(i) * cols + j]; }
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

Header parse_header(const std::string& line, int lineno) {
    std::istringstream is(line);
    std::string banner, object, format, field, symmetry;
    is >> banner >> object >> format >> field >> symmetry;
    if (lower(banner) != "%%matrixmarket") {
        throw ParseError("missing %%MatrixMarket banner", lineno, 1);
    }
    if (lower(object) != "matrix") {
        throw ParseError("unsupported object '" + object + "'", lineno);
    }
    Header h{};
    const std::string f = lower(format);
    if (f == "coordinate") {
        h.format = Format::Coordinate;
    } else if (f == "array") {
        h.format = Format::Array;
    } else {
        throw ParseError("unsupported format '" + format + "'", lineno);
    }
    const std::string fl = lower(field);
    if (fl == "complex") {
        h.field = Field::Complex;
    } else if (fl == "real" || fl == "double") {
        h.field = Field::Real;
    } else if (fl == "integer") {
        h.field = Field::Integer;
    } else {
        throw ParseError("unsupported field '" + field + "'", lineno);
    }
    const std::string sy = lower(symmetry);
    if (sy == "general") {
        h.symmetry = Symmetry::General;
    } else if (sy == "symmetric") {
        h.symmetry = Symmetry::Symmetric;
    } else if (sy == "skew-symmetric") {
        h.symmetry = Symmetry::SkewSymmetric;
    } else if (sy == "hermitian") {
        h.symmetry = Symmetry::Hermitian;
    } else {
        throw ParseError("unsupported symmetry '" + symmetry + "'", lineno);
    }
    return h;
}

bool next_data_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        size_t k = line.find_first_not_of(" \t\r");
        if (k == std::string::npos) continue;
        if (line[k] == '%') continue;
        return true;
    }
    return false;
}

double parse_number(const std::string& tok, int lineno, int column) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + tok + "'", lineno, column);
    }
    if (pos != tok.size()) {
        throw ParseError("trailing characters in number '" + tok + "'", lineno, column);
    }
    return v;
}

Complex read_value(std::istringstream& is, Field field, int lineno, int base_column) {
    std::string t1;
    if (!(is >> t1)) throw ParseError("missing value", lineno, base_column);
    const double re = parse_number(t1, lineno, base_column);
    if (field != Field::Complex) return Complex(re, 0.0);
    std::string t2;
    if (!(is >> t2)) throw ParseError("missing imaginary part", lineno, base_column + 1);
    return Complex(re, parse_number(t2, lineno, base_column + 1));
}

Complex mirrored(Complex v, Symmetry sym) {
    switch (sym) {
        case Symmetry::Symmetric: return v;
        case Symmetry::SkewSymmetric: return -v;
        case Symmetry::Hermitian: return std::conj(v);
        default: return v;
    }
}

Dense read_dense(std::istream& in, const std::string& origin) {
    int lineno = 0;
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty file: " + origin, 1);
    ++lineno;
    const Header h = parse_header(line, lineno);

    if (!next_data_line(in, line, lineno)) throw ParseError("missing size line", lineno + 1);
    std::istringstream sz(line);
    long rows = 0, cols = 0, nnz = 0;
    if (!(sz >> rows >> cols)) throw ParseError("malformed size line", lineno, 1);
    if (h.format == Format::Coordinate && !(sz >> nnz)) {
        throw ParseError("coordinate size line needs an entry count", lineno, 3);
    }
    if (rows <= 0 || cols <= 0) throw ParseError("non-positive dimensions", lineno, 1);
    if (h.symmetry != Symmetry::General && rows != cols) {
        throw ParseError("symmetric storage requires a square matrix", lineno, 1);
    }

    Dense d;
    d.rows = static_cast<int>(rows);
    d.cols = static_cast<int>(cols);
    d.values.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Complex(0.0, 0.0));

    if (h.format == Format::Coordinate) {
        for (long e = 0; e < nnz; ++e) {
            if (!next_data_line(in, line, lineno)) {
                throw ParseError("expected " + std::to_string(nnz) + " entries, got " +
                                     std::to_string(e),
                                 lineno);
            }
            std::istringstream is(line);
            long i = 0, j = 0;
            if (!(is >> i >> j)) throw ParseError("malformed coordinate entry", lineno, 1);
            if (i < 1 || i > rows || j < 1 || j > cols) {
                throw ParseError("coordinate out of range", lineno, 1);
            }
            const Complex v = read_value(is, h.field, lineno, 3);
            d.at(static_cast<int>(i - 1), static_cast<int>(j - 1)) = v;
            if (h.symmetry != Symmetry::General && i != j) {
                d.at(static_cast<int>(j - 1), static_cast<int>(i - 1)) = mirrored(v, h.symmetry);
            }
        }
    } else {
        // Array format lists columns densely; non-general symmetry stores the
        // lower triangle only.
        for (int j = 0; j < d.cols; ++j) {
            const int istart = h.symmetry == Symmetry::General
                                   ? 0
                                   : (h.symmetry == Symmetry::SkewSymmetric ? j + 1 : j);
            for (int i = istart; i < d.rows; ++i) {
                if (!next_data_line(in, line, lineno)) {
                    throw ParseError("array data ended early", lineno);
                }
                std::istringstream is(line);
                const Complex v = read_value(is, h.field, lineno, 1);
                d.at(i, j) = v;
                if (h.symmetry != Symmetry::General && i != j) {
                    d.at(j, i) = mirrored(v, h.symmetry);
                }
            }
        }
    }
    for (const Complex& v : d.values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw ParseError("non-finite entry in " + origin, lineno);
        }
    }
    return d;
}

}  // namespace

ComplexMatrix read_matrix(std::istream& in, const std::string& origin) {
    Dense d = read_dense(in, origin);
    if (d.rows != d.cols) {
        throw ParseError("expected a square matrix, got " + std::to_string(d.rows) + "x" +
                             std::to_string(d.cols) + " in " + origin,
                         1);
    }
    return ComplexMatrix(d.rows, std::move(d.values));
}

ComplexMatrix read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return read_matrix(in, path);
}

CVector read_vector(std::istream& in, const std::string& origin) {
    Dense d = read_dense(in, origin);
    if (d.cols != 1 && d.rows != 1) {
        throw ParseError("expected an n x 1 vector in " + origin, 1);
    }
    return d.values;
}

CVector read_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return read_vector(in, path);
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_matrix(const ComplexMatrix& A, std::ostream& out) {
    const int n = A.order();
    long nnz = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!A.is_zero(i, j)) ++nnz;
    out << "%%MatrixMarket matrix coordinate complex general\n";
    out << n << " " << n << " " << nnz << "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (A.is_zero(i, j)) continue;
            out << (i + 1) << " " << (j + 1) << " " << fmt_double(A(i, j).real()) << " "
                << fmt_double(A(i, j).imag()) << "\n";
        }
    }
}

void write_matrix(const ComplexMatrix& A, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    write_matrix(A, out);
}

void write_vector(const CVector& x, std::ostream& out) {
    out << "%%MatrixMarket matrix array complex general\n";
    out << x.size() << " 1\n";
    for (const Complex& v : x) {
        out << fmt_double(v.real()) << " " << fmt_double(v.imag()) << "\n";
    }
}

void write_vector(const CVector& x, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    write_vector(x, out);
}

}  // namespace market
}  // namespace hgs
