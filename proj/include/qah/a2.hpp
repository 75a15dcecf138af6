#pragma once

#include <optional>
#include <vector>

#include "qah/subspace.hpp"

namespace qah {

/// Classification triple of an A2 representation under Krull-Schmidt:
/// multiplicities of the indecomposables (F -> 0), (F -> F), (0 -> F).
struct HeartInvariants {
    std::size_t w = 0;      // singular multiplicity, dim ker t
    std::size_t h_null = 0; // rank t
    std::size_t h_quot = 0; // dim coker t

    friend bool operator==(const HeartInvariants&, const HeartInvariants&) = default;
};

/// Representation of the A2 quiver: a single linear map t : V1 -> V0
/// (top row -> bottom row of the embedded pair picture).
template <field F>
struct A2Rep {
    Matrix<F> t; // bottom_dim x top_dim

    std::size_t top_dim() const { return t.cols(); }
    std::size_t bottom_dim() const { return t.rows(); }
    bool is_zero_rep() const { return top_dim() == 0 && bottom_dim() == 0; }

    friend bool operator==(const A2Rep&, const A2Rep&) = default;
};

template <field F>
HeartInvariants a2_invariants(const A2Rep<F>& r) {
    std::size_t rk = rank(r.t);
    return {r.top_dim() - rk, rk, r.bottom_dim() - rk};
}

/// Morphism of A2 representations: a commuting square.
template <field F>
struct A2Map {
    Matrix<F> top;    // V1 -> W1
    Matrix<F> bottom; // V0 -> W0
};

template <field F>
bool a2_map_valid(const A2Rep<F>& src, const A2Rep<F>& dst, const A2Map<F>& m) {
    return dst.t * m.top == m.bottom * src.t;
}

template <field F>
bool a2_map_is_iso(const A2Rep<F>& src, const A2Rep<F>& dst, const A2Map<F>& m) {
    return a2_map_valid(src, dst, m) && inverse(m.top).has_value() && inverse(m.bottom).has_value();
}

template <field F>
A2Map<F> a2_compose(const A2Map<F>& g, const A2Map<F>& f) {
    return {g.top * f.top, g.bottom * f.bottom};
}

template <field F>
std::optional<A2Map<F>> a2_invert(const A2Rep<F>& src, const A2Rep<F>& dst, const A2Map<F>& m) {
    if (!a2_map_valid(src, dst, m)) return std::nullopt;
    auto it = inverse(m.top);
    auto ib = inverse(m.bottom);
    if (!it || !ib) return std::nullopt;
    return A2Map<F>{std::move(*it), std::move(*ib)};
}

/// Base change bringing t into the normal form [[I_r, 0], [0, 0]]:
/// columns of `top` are [pivot columns | kernel basis], columns of `bottom`
/// are [images of pivot columns | complement of the image].
template <field F>
struct A2AdaptedBases {
    Matrix<F> top;    // invertible, top_dim x top_dim
    Matrix<F> bottom; // invertible, bottom_dim x bottom_dim
    std::size_t rank;
};

template <field F>
A2AdaptedBases<F> a2_adapted_bases(const A2Rep<F>& r) {
    const F& fld = r.t.fld();
    auto rr = rref(r.t);
    std::size_t rk = rr.rank;
    auto ker = nullspace(r.t); // (top_dim - rk) x top_dim

    Matrix<F> top(fld, r.top_dim(), r.top_dim());
    for (std::size_t j = 0; j < rk; ++j) top.at(rr.pivots[j], j) = fld.one();
    for (std::size_t j = 0; j < ker.rows(); ++j)
        for (std::size_t i = 0; i < r.top_dim(); ++i) top.at(i, rk + j) = ker.at(j, i);

    Matrix<F> im_cols(fld, r.bottom_dim(), rk);
    for (std::size_t j = 0; j < rk; ++j)
        for (std::size_t i = 0; i < r.bottom_dim(); ++i) im_cols.at(i, j) = r.t.at(i, rr.pivots[j]);
    auto qp = quotient_presentation(image_basis(r.t));
    Matrix<F> bottom = im_cols.hstack(qp.section);

    A2AdaptedBases<F> out{std::move(top), std::move(bottom), rk};
    if (!inverse(out.top) || !inverse(out.bottom)) throw error("a2_adapted_bases: base change not invertible");
    return out;
}

/// Explicit isomorphism between representations with equal triples.
template <field F>
std::optional<A2Map<F>> a2_iso_witness(const A2Rep<F>& a, const A2Rep<F>& b) {
    if (!(a2_invariants(a) == a2_invariants(b))) return std::nullopt;
    auto pa = a2_adapted_bases(a);
    auto pb = a2_adapted_bases(b);
    A2Map<F> m{pb.top * *inverse(pa.top), pb.bottom * *inverse(pa.bottom)};
    if (!a2_map_is_iso(a, b, m)) throw error("a2_iso_witness: witness failed validation");
    return m;
}

/// A bounded complex of A2 representations with injective verticals: the
/// image of the exact embedding of pair complexes.
template <field F>
class A2Complex {
public:
    A2Complex(F fld, int lo, std::vector<A2Rep<F>> objects, std::vector<A2Map<F>> diffs,
              bool require_injective_verticals = false)
        : fld_(std::move(fld)), lo_(lo), obj_(std::move(objects)), d_(std::move(diffs)) {
        if (obj_.empty() ? !d_.empty() : d_.size() + 1 != obj_.size())
            throw shape_mismatch("a2 complex: differential count");
        for (std::size_t i = 0; i + 1 < obj_.size(); ++i) {
            if (!a2_map_valid(obj_[i], obj_[i + 1], d_[i]))
                throw not_a_complex("a2 complex: square does not commute");
            if (require_injective_verticals && !is_injective(obj_[i].t))
                throw not_a_complex("a2 complex: vertical not injective");
        }
        if (require_injective_verticals && !obj_.empty() && !is_injective(obj_.back().t))
            throw not_a_complex("a2 complex: vertical not injective");
        for (std::size_t i = 0; i + 2 < obj_.size(); ++i) {
            if (!(d_[i + 1].top * d_[i].top).is_zero() || !(d_[i + 1].bottom * d_[i].bottom).is_zero())
                throw not_a_complex("a2 complex: d o d != 0");
        }
    }

    static A2Complex zero(const F& fld) { return A2Complex(fld, 0, {}, {}); }

    const F& fld() const { return fld_; }
    bool empty() const { return obj_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(obj_.size()) - 1; }

    A2Rep<F> object_at(int n) const {
        if (empty() || n < lo() || n > hi()) return A2Rep<F>{Matrix<F>(fld_, 0, 0)};
        return obj_[static_cast<std::size_t>(n - lo_)];
    }

    A2Map<F> diff_at(int n) const { // object_at(n) -> object_at(n+1)
        auto src = object_at(n);
        auto dst = object_at(n + 1);
        if (!empty() && n >= lo() && n + 1 <= hi())
            return d_[static_cast<std::size_t>(n - lo_)];
        return A2Map<F>{Matrix<F>(fld_, dst.top_dim(), src.top_dim()),
                        Matrix<F>(fld_, dst.bottom_dim(), src.bottom_dim())};
    }

private:
    F fld_;
    int lo_;
    std::vector<A2Rep<F>> obj_;
    std::vector<A2Map<F>> d_;
};

/// One row's worth of cohomology bookkeeping: the subquotient with chosen
/// representatives and a reduction map to quotient coordinates.
template <field F>
struct RowCohomology {
    Subspace<F> cycles;
    QuotientPresentation<F> quot; // of boundaries inside cycle coordinates
    Matrix<F> reps;               // ambient x h, representative vectors

    std::size_t dim() const { return reps.cols(); }

    /// Quotient coordinates of an ambient cycle vector (columns allowed).
    Matrix<F> reduce(const Matrix<F>& v) const { return quot.projection * cycles.coords_of(v); }
};

template <field F>
RowCohomology<F> row_cohomology(const Matrix<F>& d_out, const Matrix<F>& d_in) {
    auto cycles = kernel_basis(d_out);
    auto boundaries = image_basis(d_in);
    auto inner = cycles.coords_of(boundaries.basis().transpose());
    auto qp = quotient_presentation(Subspace<F>::span_of_rows(cycles.dim(), inner.transpose()));
    auto reps = cycles.basis().transpose() * qp.section;
    return {std::move(cycles), std::move(qp), std::move(reps)};
}

/// Cohomology of an A2 complex at degree n, computed row-wise with the
/// induced vertical map.
template <field F>
struct A2Cohomology {
    RowCohomology<F> top;
    RowCohomology<F> bottom;
    A2Rep<F> rep; // induced vertical: H_top -> H_bottom

    bool is_zero() const { return rep.top_dim() == 0 && rep.bottom_dim() == 0; }
};

template <field F>
A2Cohomology<F> a2_cohomology(const A2Complex<F>& c, int n) {
    auto cur = c.object_at(n);
    auto dn = c.diff_at(n);
    auto dp = c.diff_at(n - 1);
    auto top = row_cohomology(dn.top, dp.top);
    auto bottom = row_cohomology(dn.bottom, dp.bottom);
    // induced vertical on representatives
    Matrix<F> t = bottom.reduce(cur.t * top.reps);
    return {std::move(top), std::move(bottom), A2Rep<F>{std::move(t)}};
}

/// Map induced on degree-n cohomology by a levelwise A2 chain map
/// (components given at degrees n-1, n, n+1 as needed).
template <field F>
A2Map<F> a2_induced_on_cohomology(const A2Cohomology<F>& src, const A2Cohomology<F>& dst, const A2Map<F>& comp_n) {
    return {dst.top.reduce(comp_n.top * src.top.reps),
            dst.bottom.reduce(comp_n.bottom * src.bottom.reps)};
}

} // namespace qah
