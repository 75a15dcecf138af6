#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qah/matrix.hpp"

namespace qah {

/// A linear subspace of F^ambient in canonical form: the basis matrix is the
/// RREF of any spanning set, rows are basis vectors, no zero rows. Two
/// subspaces are equal iff their bases are identical matrices.
template <field F>
class Subspace {
public:
    Subspace(std::size_t ambient, Matrix<F> rref_basis)
        : ambient_(ambient), basis_(std::move(rref_basis)) {
        if (basis_.cols() != ambient_) throw shape_mismatch("subspace basis: wrong ambient dimension");
    }

    /// Canonicalize an arbitrary spanning set (rows) into a subspace.
    static Subspace span_of_rows(std::size_t ambient, const Matrix<F>& rows) {
        if (rows.cols() != ambient) throw shape_mismatch("span: wrong ambient dimension");
        auto rr = rref(rows);
        return Subspace(ambient, rr.mat.rows_slice(0, rr.rank));
    }

    static Subspace zero(const F& fld, std::size_t ambient) {
        return Subspace(ambient, Matrix<F>(fld, 0, ambient));
    }

    static Subspace full(const F& fld, std::size_t ambient) {
        return Subspace(ambient, Matrix<F>::identity(fld, ambient));
    }

    static Subspace random(const F& fld, std::size_t ambient, Rng& rng) {
        std::size_t gens = rng.below(ambient + 1);
        return span_of_rows(ambient, Matrix<F>::random(fld, gens, ambient, rng));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<F>& basis() const { return basis_; }
    const F& fld() const { return basis_.fld(); }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    /// Membership of a column vector (ambient x 1).
    bool contains_vector(const Matrix<F>& v) const {
        if (v.rows() != ambient_ || v.cols() != 1) throw shape_mismatch("contains_vector: bad vector shape");
        return solve(basis_.transpose(), v).has_value();
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw shape_mismatch("contains: ambient dimensions differ");
        return solve(basis_.transpose(), other.basis_.transpose()).has_value();
    }

    /// Coordinates of column vectors in this basis: basis^T * X = vecs.
    /// Throws when some vector lies outside the subspace.
    Matrix<F> coords_of(const Matrix<F>& vecs) const {
        auto x = solve(basis_.transpose(), vecs);
        if (!x) throw error("coords_of: vector outside subspace");
        return *x;
    }

private:
    std::size_t ambient_;
    Matrix<F> basis_;
};

template <field F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
    return Subspace<F>(m.cols(), nullspace(m));
}

/// Canonical basis of the column span.
template <field F>
Subspace<F> image_basis(const Matrix<F>& m) {
    return Subspace<F>::span_of_rows(m.rows(), m.transpose());
}

template <field F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw shape_mismatch("sum: ambient dimensions differ");
    return Subspace<F>::span_of_rows(a.ambient_dim(), a.basis().vstack(b.basis()));
}

/// Functionals vanishing on S, in the dual coordinate space.
template <field F>
Subspace<F> annihilator(const Subspace<F>& s) {
    return Subspace<F>(s.ambient_dim(), nullspace(s.basis()));
}

template <field F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw shape_mismatch("intersect: ambient dimensions differ");
    // Ann(Ann a + Ann b); stays canonical because annihilators are canonical.
    return annihilator(sum(annihilator(a), annihilator(b)));
}

/// {x : m x in s}, a subspace of the domain of m.
template <field F>
Subspace<F> preimage(const Matrix<F>& m, const Subspace<F>& s) {
    if (s.ambient_dim() != m.rows()) throw shape_mismatch("preimage: subspace not in codomain");
    return kernel_basis(annihilator(s).basis() * m);
}

/// Image of a subspace under a matrix, as a subspace of the codomain.
template <field F>
Subspace<F> apply(const Matrix<F>& m, const Subspace<F>& s) {
    if (s.ambient_dim() != m.cols()) throw shape_mismatch("apply: subspace not in domain");
    return image_basis(m * s.basis().transpose());
}

template <field F>
struct QuotientPresentation {
    Matrix<F> projection; // (n - dim S) x n, kernel exactly S
    Matrix<F> section;    // n x (n - dim S), right inverse of projection
};

/// Deterministic presentation of F^n / S using the non-pivot coordinates of
/// S's RREF basis as quotient coordinates.
template <field F>
QuotientPresentation<F> quotient_presentation(const Subspace<F>& s) {
    const F& fld = s.fld();
    std::size_t n = s.ambient_dim();
    std::size_t k = s.dim();
    auto rr = rref(s.basis());
    std::vector<bool> is_pivot(n, false);
    for (auto c : rr.pivots) is_pivot[c] = true;

    Matrix<F> proj(fld, n - k, n);
    Matrix<F> sec(fld, n, n - k);
    std::size_t row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        // reduced representative of x mod S is zero at pivot coordinates;
        // its value at non-pivot coordinate c is x_c - sum_t B[t][c] * x_{pivot t}
        proj.at(row, c) = fld.one();
        for (std::size_t t = 0; t < k; ++t)
            proj.at(row, rr.pivots[t]) = fld.neg(rr.mat.at(t, c));
        sec.at(c, row) = fld.one();
        ++row;
    }
    return {std::move(proj), std::move(sec)};
}

} // namespace qah
