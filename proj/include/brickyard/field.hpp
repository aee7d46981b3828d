#pragma once

// Dense linear algebra over a prime field F_p. Matrices here are tiny (a few
// dozen rows at most), so everything is plain Gaussian elimination.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace brickyard {

class PrimeField {
public:
    explicit PrimeField(std::uint32_t p = 101) : p_(p) {
        if (p < 2) throw std::invalid_argument("field characteristic must be a prime >= 2");
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    }

    std::uint32_t characteristic() const { return p_; }

    std::uint32_t reduce(std::int64_t x) const {
        auto r = x % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
        std::uint64_t result = 1, base = a % p_;
        for (std::uint32_t e = p_ - 2; e; e >>= 1) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
        }
        return static_cast<std::uint32_t>(result);
    }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (auto v : data_)
            if (v) return false;
        return true;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix column(std::size_t c) const {
        Matrix v(rows_, 1);
        for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
        return v;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> data_;
};

inline Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in multiply");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            auto x = a(i, k);
            if (!x) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = F.add(out(i, j), F.mul(x, b(k, j)));
        }
    return out;
}

inline Matrix add(const PrimeField& F, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch in add");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = F.add(a(i, j), b(i, j));
    return out;
}

inline Matrix subtract(const PrimeField& F, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch in subtract");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = F.sub(a(i, j), b(i, j));
    return out;
}

inline Matrix scale(const PrimeField& F, std::uint32_t s, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = F.mul(s, a(i, j));
    return out;
}

/// [a b] side by side.
inline Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("row mismatch in hconcat");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

/// [a; b] stacked.
inline Matrix vconcat(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("column mismatch in vconcat");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

/// Block matrix [[a, b], [c, d]]; empty blocks are fine as long as shapes agree.
inline Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    return vconcat(hconcat(a, b), hconcat(c, d));
}

/// Block diagonal with `copies` copies of m.
inline Matrix block_diagonal(const Matrix& m, std::size_t copies) {
    Matrix out(m.rows() * copies, m.cols() * copies);
    for (std::size_t k = 0; k < copies; ++k)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out(k * m.rows() + i, k * m.cols() + j) = m(i, j);
    return out;
}

struct Echelon {
    Matrix reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

inline Echelon row_reduce(const PrimeField& F, Matrix m) {
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
        auto s = F.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = F.mul(s, m(row, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            auto f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(row, j)));
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

inline std::size_t rank(const PrimeField& F, const Matrix& m) { return row_reduce(F, m).pivots.size(); }

/// Basis of {x : m x = 0}, one basis vector per column.
inline Matrix nullspace(const PrimeField& F, const Matrix& m) {
    auto e = row_reduce(F, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix basis(m.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = F.neg(e.reduced(r, free[k]));
    }
    return basis;
}

/// Columns forming a basis of the column space of m.
inline Matrix column_space(const PrimeField& F, const Matrix& m) {
    auto e = row_reduce(F, m);
    Matrix out(m.rows(), e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, e.pivots[k]);
    return out;
}

/// Rows spanning the annihilator of the column space: P with ker P = col(m).
inline Matrix cokernel_projection(const PrimeField& F, const Matrix& m) {
    return nullspace(F, m.transposed()).transposed();
}

/// Solves a x = b. Throws std::domain_error when the system is inconsistent.
inline Matrix solve(const PrimeField& F, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("row mismatch in solve");
    auto e = row_reduce(F, hconcat(a, b));
    Matrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        auto p = e.pivots[r];
        if (p >= a.cols()) throw std::domain_error("linear system has no solution");
        for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = e.reduced(r, a.cols() + j);
    }
    return x;
}

inline bool is_invertible(const PrimeField& F, const Matrix& m) {
    return m.rows() == m.cols() && rank(F, m) == m.rows();
}

} // namespace brickyard
