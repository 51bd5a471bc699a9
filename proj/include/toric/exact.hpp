#pragma once

// Exact integer and rational linear algebra on top of GMP.
//
// Everything here is dense and aimed at small matrices (tens of rows and
// columns). There is no floating point anywhere: ranks, kernels and normal
// forms are exact facts, not numerical estimates.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense row-major matrix. Rows and columns may be zero.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Builds from nested rows; every row must have the same length.
    Matrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw UsageError("ragged matrix literal");
            for (long v : r) data_.emplace_back(v);
        }
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0) {
        Matrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw UsageError("ragged matrix rows");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<T> row_vec(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
    std::vector<T> col_vec(std::size_t j) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void append_row(std::span<const T> r) {
        if (rows_ == 0 && data_.empty()) cols_ = r.size();
        if (r.size() != cols_) throw UsageError("appended row has wrong length");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Keeps only the listed columns, in the given order.
    Matrix select_cols(std::span<const std::size_t> cols) const {
        Matrix out(rows_, cols.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols.size(); ++k) out(i, k) = (*this)(i, cols[k]);
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw UsageError("matrix product dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& v) { return sgn(v) == 0; });
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

// ---------------------------------------------------------------------------
// Conversions and small vector helpers

inline RatVec to_rat(std::span<const Int> v) { return {v.begin(), v.end()}; }

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

/// Exact pairing of two equal-length ranges of Int or Rat.
template <typename A, typename B>
Rat dot(const A& a, const B& b) {
    if (a.size() != b.size()) throw UsageError("dot product length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * Rat(b[i]);
    return s;
}

inline Int dot_int(std::span<const Int> a, std::span<const Int> b) {
    if (a.size() != b.size()) throw UsageError("dot product length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec to_int_vec(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

inline bool is_zero(std::span<const Int> v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

/// Divides out the gcd of the entries. The zero vector is returned unchanged.
inline IntVec primitive(IntVec v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

/// Scales a rational vector by the lcm of its denominators and divides out the
/// gcd, preserving direction (a positive multiple).
inline IntVec primitive(std::span<const Rat> v) {
    Int l = 1;
    for (const Rat& x : v) l = lcm(l, x.get_den());
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * l;
        out[i] = s.get_num();
    }
    return primitive(std::move(out));
}

template <typename T>
std::string to_string(std::span<const T> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

template <typename T>
std::string to_string(const std::vector<T>& v) {
    return to_string(std::span<const T>(v));
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
        os << "]\n";
    }
    return os;
}

// ---------------------------------------------------------------------------
// Rational elimination

struct RowEchelon {
    RatMat reduced;                     // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;    // pivot column of each row of `reduced`
};

inline RowEchelon rref(RatMat m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    RatMat reduced(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
    return {std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const RatMat& m) { return rref(m).pivots.size(); }
inline std::size_t rank(const IntMat& m) { return rank(to_rat(m)); }

inline std::size_t rank_of_rows(const std::vector<IntVec>& rows, std::size_t dim) {
    return rank(IntMat::from_rows(rows, dim));
}

/// Basis (as rows) of {x : m·x = 0} over ℚ.
inline RatMat rational_kernel(const RatMat& m) {
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    RatMat k(free_cols.size(), m.cols());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k(f, free_cols[f]) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) k(f, e.pivots[i]) = -e.reduced(i, free_cols[f]);
    }
    return k;
}

/// Rational kernel with each basis vector scaled to a primitive integer vector.
inline std::vector<IntVec> integer_kernel_rows(const RatMat& m) {
    const RatMat k = rational_kernel(m);
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < k.rows(); ++i) out.push_back(primitive(k.row(i)));
    return out;
}

/// Some solution of a·x = b, or nullopt when inconsistent.
inline std::optional<RatVec> solve(const RatMat& a, std::span<const Rat> b) {
    if (b.size() != a.rows()) throw UsageError("solve: right-hand side has wrong length");
    RatMat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const RowEchelon e = rref(std::move(aug));
    RatVec x(a.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == a.cols()) return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, a.cols());
    }
    return x;
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<RatMat> inverse(const RatMat& a) {
    if (a.rows() != a.cols()) throw UsageError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    RatMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    const RowEchelon e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

/// Fraction-free (Bareiss) determinant.
inline Int determinant(IntMat m) {
    if (m.rows() != m.cols()) throw UsageError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Integer normal forms

struct HermiteForm {
    IntMat h;   // row-style Hermite normal form of the input
    IntMat u;   // unimodular transform with u·m = h
};

namespace detail {

inline void add_row_multiple(IntMat& m, std::size_t target, std::size_t source, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

inline void negate_row(IntMat& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace detail

/// Row-style Hermite normal form: echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot). Zero rows sit at the bottom.
inline HermiteForm hermite_normal_form(const IntMat& m) {
    IntMat h = m;
    IntMat u = IntMat::identity(m.rows());
    std::size_t pr = 0;
    for (std::size_t c = 0; c < h.cols() && pr < h.rows(); ++c) {
        // Euclid on the column below the current pivot row.
        for (;;) {
            std::size_t best = h.rows();
            for (std::size_t i = pr; i < h.rows(); ++i)
                if (h(i, c) != 0 && (best == h.rows() || abs(h(i, c)) < abs(h(best, c)))) best = i;
            if (best == h.rows()) break;
            h.swap_rows(pr, best);
            u.swap_rows(pr, best);
            bool clean = true;
            for (std::size_t i = pr + 1; i < h.rows(); ++i) {
                if (h(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(pr, c).get_mpz_t());
                Int neg = -q;
                detail::add_row_multiple(h, i, pr, neg);
                detail::add_row_multiple(u, i, pr, neg);
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(pr, c) == 0) continue;
        if (h(pr, c) < 0) {
            detail::negate_row(h, pr);
            detail::negate_row(u, pr);
        }
        for (std::size_t i = 0; i < pr; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(pr, c).get_mpz_t());
            Int neg = -q;
            detail::add_row_multiple(h, i, pr, neg);
            detail::add_row_multiple(u, i, pr, neg);
        }
        ++pr;
    }
    return {std::move(h), std::move(u)};
}

/// Hermite form with the trailing zero rows removed; a canonical name for the
/// row lattice.
inline IntMat hermite_basis(const IntMat& m) {
    IntMat h = hermite_normal_form(m).h;
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < h.rows(); ++i)
        if (!is_zero(h.row(i))) rows.push_back(h.row_vec(i));
    return IntMat::from_rows(rows, m.cols());
}

/// True iff the rows of a and b span the same lattice.
inline bool same_row_lattice(const IntMat& a, const IntMat& b) {
    return a.cols() == b.cols() && hermite_basis(a) == hermite_basis(b);
}

/// Nonzero invariant factors of the Smith normal form, in divisibility order.
inline std::vector<Int> smith_invariants(IntMat m) {
    std::vector<Int> diag;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m(i, j) != 0 && (bi == rows || abs(m(i, j)) < abs(m(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows) return diag;
            m.swap_rows(t, bi);
            for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, bj));
            bool done = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
                if (m(i, t) != 0) done = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
                if (m(t, j) != 0) done = false;
            }
            if (!done) continue;
            // Divisibility: fold an offending row into the pivot row and retry.
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
                        for (std::size_t k = t; k < cols; ++k) m(t, k) += m(i, k);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        diag.push_back(abs(m(t, t)));
    }
    return diag;
}

/// Basis (as rows) of the saturated integer kernel {v ∈ ℤⁿ : m·v = 0}.
inline IntMat kernel_lattice(const IntMat& m) {
    if (m.rows() == 0) return IntMat::identity(m.cols());
    const HermiteForm hf = hermite_normal_form(m.transpose());
    std::size_t r = 0;
    while (r < hf.h.rows() && !is_zero(hf.h.row(r))) ++r;
    IntMat k(hf.u.rows() - r, m.cols());
    for (std::size_t i = r; i < hf.u.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) k(i - r, j) = hf.u(i, j);
    return k;
}

}  // namespace toric
