#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "qah/fields.hpp"
#include "qah/rng.hpp"

namespace qah {

/// Dense row-major matrix over an exact field. Scalars are kept reduced
/// (rationals in lowest terms, prime-field values in [0,p)).
template <field F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(F fld, std::size_t rows, std::size_t cols)
        : field_(std::move(fld)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

    static Matrix zero(const F& fld, std::size_t rows, std::size_t cols) { return Matrix(fld, rows, cols); }

    static Matrix identity(const F& fld, std::size_t n) {
        Matrix m(fld, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = fld.one();
        return m;
    }

    /// Build from integer literals, mostly for tests and fixtures.
    static Matrix from_int_rows(const F& fld, std::initializer_list<std::initializer_list<long long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        Matrix m(fld, r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw shape_mismatch("ragged initializer");
            std::size_t j = 0;
            for (long long v : row) m.at(i, j++) = fld.from_int(v);
            ++i;
        }
        return m;
    }

    const F& fld() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!field_.eq(at(i, j), i == j ? field_.one() : field_.zero())) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.a_.size(); ++k)
            if (!a.field_.eq(a.a_[k], b.a_[k])) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        require_same_field(field_, o.field_, "matrix multiply");
        if (cols_ != o.rows_) throw shape_mismatch("matrix multiply: inner dimensions differ");
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& x = at(i, k);
                if (field_.is_zero(x)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(x, o.at(k, j)));
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_field(field_, o.field_, "matrix add");
        if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_mismatch("matrix add: shapes differ");
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.add(a_[k], o.a_[k]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_field(field_, o.field_, "matrix sub");
        if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_mismatch("matrix sub: shapes differ");
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.sub(a_[k], o.a_[k]);
        return r;
    }

    Matrix operator-() const {
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.neg(a_[k]);
        return r;
    }

    Matrix scaled(const Elem& c) const {
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.mul(a_[k], c);
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// Stack rows of this above rows of o.
    Matrix vstack(const Matrix& o) const {
        require_same_field(field_, o.field_, "vstack");
        if (cols_ != o.cols_) throw shape_mismatch("vstack: column counts differ");
        Matrix r(field_, rows_ + o.rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    Matrix hstack(const Matrix& o) const {
        require_same_field(field_, o.field_, "hstack");
        if (rows_ != o.rows_) throw shape_mismatch("hstack: row counts differ");
        Matrix r(field_, rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    Matrix row(std::size_t i) const {
        Matrix r(field_, 1, cols_);
        for (std::size_t j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
        return r;
    }

    Matrix col(std::size_t j) const {
        Matrix r(field_, rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
        return r;
    }

    Matrix rows_slice(std::size_t from, std::size_t count) const {
        Matrix r(field_, count, cols_);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(from + i, j);
        return r;
    }

    Matrix cols_slice(std::size_t from, std::size_t count) const {
        Matrix r(field_, rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j) r.at(i, j) = at(i, from + j);
        return r;
    }

    /// Kronecker product; index (i,j) of the result block-row corresponds to
    /// this(i,·) tensor o(j,·).
    Matrix kron(const Matrix& o) const {
        require_same_field(field_, o.field_, "kron");
        Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const Elem& x = at(i, j);
                if (field_.is_zero(x)) continue;
                for (std::size_t k = 0; k < o.rows_; ++k)
                    for (std::size_t l = 0; l < o.cols_; ++l)
                        r.at(i * o.rows_ + k, j * o.cols_ + l) = field_.mul(x, o.at(k, l));
            }
        return r;
    }

    /// Block diagonal [this 0; 0 o].
    Matrix direct_sum(const Matrix& o) const {
        require_same_field(field_, o.field_, "direct_sum");
        Matrix r(field_, rows_ + o.rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
        return r;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
        if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) throw shape_mismatch("set_block: out of range");
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) at(r0 + i, c0 + j) = m.at(i, j);
    }

    static Matrix random(const F& fld, std::size_t rows, std::size_t cols, Rng& rng, long long amplitude = 3) {
        Matrix m(fld, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = fld.from_int(rng.int_in(-amplitude, amplitude));
        return m;
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

template <field F>
struct RrefResult {
    Matrix<F> mat;                    // the unique reduced row-echelon form
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    std::size_t rank;
};

/// Gauss-Jordan elimination to the unique RREF. Deterministic: pivots are the
/// first nonzero entries scanning rows top-down within each column.
template <field F>
RrefResult<F> rref(Matrix<F> m) {
    const F& fld = m.fld();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t src = r;
        while (src < m.rows() && fld.is_zero(m.at(src, c))) ++src;
        if (src == m.rows()) continue;
        if (src != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(src, j));
        auto piv_inv = fld.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = fld.mul(m.at(r, j), piv_inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || fld.is_zero(m.at(i, c))) continue;
            auto factor = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = fld.sub(m.at(i, j), fld.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

template <field F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank;
}

/// Basis of {x : m x = 0} as rows, in canonical (RREF) form.
template <field F>
Matrix<F> nullspace(const Matrix<F>& m) {
    const F& fld = m.fld();
    auto rr = rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::size_t k = n - rr.rank;
    Matrix<F> basis(fld, k, n);
    std::size_t row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        basis.at(row, c) = fld.one();
        for (std::size_t pr = 0; pr < rr.rank; ++pr)
            basis.at(row, rr.pivots[pr]) = fld.neg(rr.mat.at(pr, c));
        ++row;
    }
    // rows are already independent; normalize to RREF for canonicity
    return rref(std::move(basis)).mat.rows_slice(0, k);
}

/// Solve A x = b for each column b of rhs. Returns nullopt when inconsistent.
template <field F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& rhs) {
    require_same_field(a.fld(), rhs.fld(), "solve");
    if (a.rows() != rhs.rows()) throw shape_mismatch("solve: row counts differ");
    const F& fld = a.fld();
    auto rr = rref(a.hstack(rhs));
    Matrix<F> x(fld, a.cols(), rhs.cols());
    for (std::size_t pr = 0; pr < rr.pivots.size(); ++pr) {
        std::size_t c = rr.pivots[pr];
        if (c >= a.cols()) return std::nullopt; // pivot in the rhs block
        for (std::size_t j = 0; j < rhs.cols(); ++j) x.at(c, j) = rr.mat.at(pr, a.cols() + j);
    }
    return x;
}

/// Two-sided inverse, when the matrix is square and invertible.
template <field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto x = solve(a, Matrix<F>::identity(a.fld(), a.rows()));
    if (!x) return std::nullopt;
    if (!((*x * a).is_identity())) return std::nullopt;
    return x;
}

template <field F>
bool is_injective(const Matrix<F>& m) {
    return rank(m) == m.cols();
}

template <field F>
bool is_surjective(const Matrix<F>& m) {
    return rank(m) == m.rows();
}

} // namespace qah
