#include "gwdesc/linalg.hpp"

#include <stdexcept>

namespace gwdesc {

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m)
{
    const auto n = m.rows();
    if (m.cols() != n) {
        return std::nullopt;
    }
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a(pivot, col)) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a(r, col)) == 0) {
                continue;
            }
            const Rational f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Rational determinant(const RationalMatrix& m)
{
    const auto n = m.rows();
    if (m.cols() != n) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    RationalMatrix a = m;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a(pivot, col)) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
            }
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(a(r, col)) == 0) {
                continue;
            }
            const Rational f = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) {
                a(r, j) -= f * a(col, j);
            }
        }
    }
    return det;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b)
{
    const auto rows = a.rows();
    const auto cols = a.cols();
    if (b.size() != rows) {
        throw std::invalid_argument("right-hand side has the wrong length");
    }
    // Reduced row echelon form of the augmented matrix.
    RationalMatrix aug(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, cols) = b[r];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && sgn(aug(pivot, col)) == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        for (std::size_t j = 0; j <= cols; ++j) {
            std::swap(aug(pivot, j), aug(row, j));
        }
        const Rational p = aug(row, col);
        for (std::size_t j = 0; j <= cols; ++j) {
            aug(row, j) /= p;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || sgn(aug(r, col)) == 0) {
                continue;
            }
            const Rational f = aug(r, col);
            for (std::size_t j = 0; j <= cols; ++j) {
                aug(r, j) -= f * aug(row, j);
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r) {
        if (sgn(aug(r, cols)) != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        x[pivot_cols[r]] = aug(r, cols);
    }
    return x;
}

} // namespace gwdesc
