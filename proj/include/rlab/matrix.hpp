#pragma once

#include <cstddef>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "rlab/errors.hpp"
#include "rlab/rational.hpp"

namespace rlab {

// Dense exact rational matrix. Row-major; small dimensions throughout.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                    std::size_t ncols) const {
        RatMatrix out(nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j) out.at(i, j) = at(row0 + i, col0 + j);
        return out;
    }

    bool is_lower_triangular() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != 0) return false;
        return true;
    }

    bool is_tridiagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((j + 1 < i || j > i + 1) && at(i, j) != 0) return false;
        return true;
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

// Gauss-Jordan inverse. Exact; throws SingularMatrix when rank-deficient.
inline RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw SingularMatrix("inverse of non-square matrix");
    std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a.at(piv, c) == 0) ++piv;
        if (piv == n) throw SingularMatrix();
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                swap(a.at(c, j), a.at(piv, j));
                swap(inv.at(c, j), inv.at(piv, j));
            }
        Rational p = a.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(c, j) /= p;
            inv.at(c, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a.at(r, c) == 0) continue;
            Rational f = a.at(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

// Aligned rational grid, the display format used for matrix golden files.
inline std::string format_matrix(const RatMatrix& m) {
    std::vector<std::string> cells(m.rows() * m.cols());
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i * m.cols() + j] = to_string(m.at(i, j));
            width = std::max(width, cells[i * m.cols() + j].size());
        }
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << std::setw(static_cast<int>(width))
                << cells[i * m.cols() + j];
        out << '\n';
    }
    return out.str();
}

}  // namespace rlab
