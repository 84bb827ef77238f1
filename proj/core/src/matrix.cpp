#include "flipbraid/matrix.hpp"

#include <utility>

#include "flipbraid/errors.hpp"

namespace flipbraid {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionError("matrix " + shape() + " given " + std::to_string(entries_.size()) + " entries");
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<Rational> flat;
    flat.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("ragged rows in matrix literal");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return RationalMatrix(r, c, std::move(flat));
}

RationalMatrix RationalMatrix::identity(std::size_t size) {
    RationalMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("index (" + std::to_string(r) + "," + std::to_string(c) + ") outside " + shape());
    return (*this)(r, c);
}

bool RationalMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != Rational(r == c ? 1 : 0)) return false;
    return true;
}

std::string RationalMatrix::shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;  // flip matrices are mostly zeros
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j).is_zero()) continue;
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return mat_mul(a, b); }

RationalMatrix mat_inverse(const RationalMatrix& a) {
    if (!a.is_square()) throw DimensionError("cannot invert non-square " + a.shape());
    const std::size_t n = a.rows();
    RationalMatrix work = a;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrixError();
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(work(pivot, c), work(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        const Rational scale = work(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            work(col, c) /= scale;
            inv(col, c) /= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work(r, col).is_zero()) continue;
            const Rational factor = work(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                if (!work(col, c).is_zero()) work(r, c) -= factor * work(col, c);
                if (!inv(col, c).is_zero()) inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    return inv;
}

Rational trace(const RationalMatrix& a) {
    if (!a.is_square()) throw DimensionError("trace of non-square " + a.shape());
    Rational sum;
    for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
    return sum;
}

std::vector<Rational> column_sums(const RationalMatrix& a) {
    std::vector<Rational> sums(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) sums[c] += a(r, c);
    return sums;
}

std::vector<Rational> char_poly(const RationalMatrix& a) {
    if (!a.is_square()) throw DimensionError("characteristic polynomial of non-square " + a.shape());
    const std::size_t n = a.rows();
    // coeffs[d] is the coefficient of x^d.
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = 1;
    RationalMatrix m(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += coeffs[n - k + 1];
        // c_{n-k} = -tr(A M_k) / k
        coeffs[n - k] = -trace(a * m) / Rational(static_cast<long>(k));
    }
    return {coeffs.rbegin(), coeffs.rend()};
}

std::pair<long, long> first_difference(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("cannot compare " + a.shape() + " with " + b.shape());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != b(r, c)) return {static_cast<long>(r), static_cast<long>(c)};
    return {-1, -1};
}

}  // namespace flipbraid
