#pragma once

#include <cstddef>
#include <utility>

#include "qah/subspace.hpp"

namespace qah {

/// Object of the model category: a finite-dimensional space F^dim together
/// with a null subspace recording which directions are "seminorm zero".
/// Hausdorff objects have null = 0; the indiscrete object (V, V) is the
/// model stand-in for a space with vanishing seminorm.
template <field F>
struct PairSpace {
    std::size_t dim;
    Subspace<F> null;

    PairSpace(std::size_t d, Subspace<F> n) : dim(d), null(std::move(n)) {
        if (null.ambient_dim() != dim) throw shape_mismatch("pair space: null subspace has wrong ambient");
    }

    static PairSpace hausdorff(const F& fld, std::size_t d) {
        return PairSpace(d, Subspace<F>::zero(fld, d));
    }
    static PairSpace indiscrete(const F& fld, std::size_t d) {
        return PairSpace(d, Subspace<F>::full(fld, d));
    }
    static PairSpace zero(const F& fld) { return hausdorff(fld, 0); }
    static PairSpace random(const F& fld, std::size_t d, Rng& rng) {
        return PairSpace(d, Subspace<F>::random(fld, d, rng));
    }

    const F& fld() const { return null.fld(); }
    bool is_hausdorff() const { return null.is_zero(); }
    bool is_zero() const { return dim == 0; }

    friend bool operator==(const PairSpace& a, const PairSpace& b) {
        return a.dim == b.dim && a.null == b.null;
    }
};

/// Morphism of the model: a matrix mapping the null subspace of the domain
/// into the null subspace of the codomain (the boundedness condition).
template <field F>
struct PairMap {
    PairSpace<F> dom;
    PairSpace<F> cod;
    Matrix<F> mat;

    const F& fld() const { return mat.fld(); }
    bool is_zero() const { return mat.is_zero(); }

    friend bool operator==(const PairMap& a, const PairMap& b) {
        return a.dom == b.dom && a.cod == b.cod && a.mat == b.mat;
    }
};

template <field F>
bool preserves_null(const PairSpace<F>& dom, const PairSpace<F>& cod, const Matrix<F>& mat) {
    return cod.null.contains(apply(mat, dom.null));
}

/// Validating constructor; raises not_bounded when the matrix is not a
/// morphism of the model category.
template <field F>
PairMap<F> pair_map(PairSpace<F> dom, PairSpace<F> cod, Matrix<F> mat) {
    if (mat.rows() != cod.dim || mat.cols() != dom.dim)
        throw shape_mismatch("pair map: matrix shape does not match spaces");
    require_same_field(dom.fld(), cod.fld(), "pair map");
    require_same_field(dom.fld(), mat.fld(), "pair map");
    if (!preserves_null(dom, cod, mat))
        throw not_bounded("matrix does not map the domain null subspace into the codomain null subspace");
    return PairMap<F>{std::move(dom), std::move(cod), std::move(mat)};
}

template <field F>
PairMap<F> identity_map(const PairSpace<F>& a) {
    return PairMap<F>{a, a, Matrix<F>::identity(a.fld(), a.dim)};
}

template <field F>
PairMap<F> zero_map(const PairSpace<F>& dom, const PairSpace<F>& cod) {
    return PairMap<F>{dom, cod, Matrix<F>::zero(dom.fld(), cod.dim, dom.dim)};
}

template <field F>
PairMap<F> compose(const PairMap<F>& g, const PairMap<F>& f) {
    if (!(f.cod == g.dom)) throw composability_error("compose: codomain/domain mismatch");
    return PairMap<F>{f.dom, g.cod, g.mat * f.mat};
}

template <field F>
PairMap<F> add_maps(const PairMap<F>& a, const PairMap<F>& b) {
    if (!(a.dom == b.dom && a.cod == b.cod)) throw shape_mismatch("add_maps: endpoints differ");
    return PairMap<F>{a.dom, a.cod, a.mat + b.mat};
}

template <field F>
PairMap<F> sub_maps(const PairMap<F>& a, const PairMap<F>& b) {
    if (!(a.dom == b.dom && a.cod == b.cod)) throw shape_mismatch("sub_maps: endpoints differ");
    return PairMap<F>{a.dom, a.cod, a.mat - b.mat};
}

template <field F>
bool is_monic(const PairMap<F>& f) {
    return is_injective(f.mat);
}

/// Epic in the model means dense range: set image plus codomain null spans.
template <field F>
bool is_epic(const PairMap<F>& f) {
    return sum(image_basis(f.mat), f.cod.null).is_full();
}

/// Strict iff f(null dom) equals (set image) intersect (null cod); this is
/// equivalent to the canonical comparison Coim f -> Im f being a pair iso.
template <field F>
bool is_strict(const PairMap<F>& f) {
    return apply(f.mat, f.dom.null) == intersect(image_basis(f.mat), f.cod.null);
}

/// Invertible matrix carrying null exactly onto null.
template <field F>
bool is_pair_iso(const PairMap<F>& f) {
    if (f.dom.dim != f.cod.dim) return false;
    if (!inverse(f.mat)) return false;
    return apply(f.mat, f.dom.null) == f.cod.null;
}

template <field F>
std::optional<PairMap<F>> pair_inverse(const PairMap<F>& f) {
    if (!is_pair_iso(f)) return std::nullopt;
    return PairMap<F>{f.cod, f.dom, *inverse(f.mat)};
}

/// A subobject: pair space together with its inclusion and the underlying
/// subspace of the ambient coordinates.
template <field F>
struct Embedded {
    PairSpace<F> space;
    PairMap<F> map; // inclusion into the ambient pair
    Subspace<F> sub;
};

/// A quotient object: pair space, projection, and a chosen linear section.
template <field F>
struct Projected {
    PairSpace<F> space;
    PairMap<F> map; // projection from the ambient pair
    Matrix<F> section;
};

template <field F>
Embedded<F> subobject_from(const PairSpace<F>& ambient, const Subspace<F>& sub) {
    auto inner_null = sub.coords_of(intersect(sub, ambient.null).basis().transpose());
    PairSpace<F> space(sub.dim(), Subspace<F>::span_of_rows(sub.dim(), inner_null.transpose()));
    PairMap<F> incl{space, ambient, sub.basis().transpose()};
    return {std::move(space), std::move(incl), sub};
}

template <field F>
Projected<F> quotient_by(const PairSpace<F>& ambient, const Subspace<F>& sub) {
    auto qp = quotient_presentation(sub);
    PairSpace<F> space(ambient.dim - sub.dim(),
                       apply(qp.projection, ambient.null));
    PairMap<F> proj{ambient, space, qp.projection};
    return {std::move(space), std::move(proj), std::move(qp.section)};
}

/// Kernel: set-theoretic kernel with induced null K cap N.
template <field F>
Embedded<F> kernel(const PairMap<F>& f) {
    return subobject_from(f.dom, kernel_basis(f.mat));
}

/// Cokernel: quotient by the set image; the quotient null absorbs the
/// closure, so no extra closure is taken.
template <field F>
Projected<F> cokernel(const PairMap<F>& f) {
    return quotient_by(f.cod, image_basis(f.mat));
}

/// Image = kernel of the cokernel: set image with restricted null.
template <field F>
Embedded<F> image(const PairMap<F>& f) {
    return subobject_from(f.cod, image_basis(f.mat));
}

/// Coimage = cokernel of the kernel: domain modulo kernel.
template <field F>
Projected<F> coimage(const PairMap<F>& f) {
    return quotient_by(f.dom, kernel_basis(f.mat));
}

/// Canonical comparison Coim f -> Im f (always bijective on underlying
/// spaces; a pair iso exactly when f is strict).
template <field F>
PairMap<F> coim_to_im(const PairMap<F>& f) {
    auto coim = coimage(f);
    auto im = image(f);
    auto mat = im.sub.coords_of(f.mat * coim.section);
    return PairMap<F>{coim.space, im.space, std::move(mat)};
}

/// Unique factorization through the kernel: h with f o h = 0 gives
/// u with incl o u = h.
template <field F>
PairMap<F> factor_through_kernel(const Embedded<F>& ker, const PairMap<F>& h) {
    return pair_map(h.dom, ker.space, ker.sub.coords_of(h.mat));
}

/// Unique factorization through the cokernel: h with h o f = 0 gives
/// u with u o proj = h.
template <field F>
PairMap<F> factor_through_cokernel(const Projected<F>& cok, const PairMap<F>& h) {
    auto u = pair_map(cok.space, h.cod, h.mat * cok.section);
    if (!(u.mat * cok.map.mat == h.mat)) throw error("factor_through_cokernel: map does not kill the image");
    return u;
}

template <field F>
struct Biproduct {
    PairSpace<F> space;
    PairMap<F> inj1, inj2, proj1, proj2;
};

template <field F>
Biproduct<F> biproduct(const PairSpace<F>& a, const PairSpace<F>& b) {
    require_same_field(a.fld(), b.fld(), "biproduct");
    const F& fld = a.fld();
    std::size_t n = a.dim + b.dim;
    auto left = a.null.basis().hstack(Matrix<F>::zero(fld, a.null.dim(), b.dim));
    auto right = Matrix<F>::zero(fld, b.null.dim(), a.dim).hstack(b.null.basis());
    PairSpace<F> space(n, Subspace<F>::span_of_rows(n, left.vstack(right)));

    auto i1 = Matrix<F>::identity(fld, a.dim).vstack(Matrix<F>::zero(fld, b.dim, a.dim));
    auto i2 = Matrix<F>::zero(fld, a.dim, b.dim).vstack(Matrix<F>::identity(fld, b.dim));
    auto p1 = Matrix<F>::identity(fld, a.dim).hstack(Matrix<F>::zero(fld, a.dim, b.dim));
    auto p2 = Matrix<F>::zero(fld, b.dim, a.dim).hstack(Matrix<F>::identity(fld, b.dim));
    return {space,
            PairMap<F>{a, space, std::move(i1)},
            PairMap<F>{b, space, std::move(i2)},
            PairMap<F>{space, a, std::move(p1)},
            PairMap<F>{space, b, std::move(p2)}};
}

template <field F>
struct Pullback {
    PairSpace<F> space;
    PairMap<F> to_a, to_b;
};

template <field F>
Pullback<F> pullback(const PairMap<F>& f, const PairMap<F>& g) {
    if (!(f.cod == g.cod)) throw shape_mismatch("pullback: maps need a common codomain");
    auto bp = biproduct(f.dom, g.dom);
    auto diff = f.mat.hstack(-g.mat); // (a,b) -> f a - g b
    auto ker = subobject_from(bp.space, kernel_basis(diff));
    return {ker.space, compose(bp.proj1, ker.map), compose(bp.proj2, ker.map)};
}

template <field F>
struct Pushout {
    PairSpace<F> space;
    PairMap<F> from_a, from_b;
};

template <field F>
Pushout<F> pushout(const PairMap<F>& f, const PairMap<F>& g) {
    if (!(f.dom == g.dom)) throw shape_mismatch("pushout: maps need a common domain");
    auto bp = biproduct(f.cod, g.cod);
    auto diff = f.mat.vstack(-g.mat); // c -> (f c, -g c)
    auto cok = quotient_by(bp.space, image_basis(diff));
    return {cok.space, compose(cok.map, bp.inj1), compose(cok.map, bp.inj2)};
}

/// Continuous dual: functionals vanishing on the null subspace, always
/// Hausdorff. Coordinates are the canonical annihilator basis.
template <field F>
PairSpace<F> dual_d_space(const PairSpace<F>& a) {
    return PairSpace<F>::hausdorff(a.fld(), annihilator(a.null).dim());
}

/// D is contravariant: D(f) : D(cod) -> D(dom), lambda -> lambda o f.
template <field F>
PairMap<F> dual_d_map(const PairMap<F>& f) {
    auto ann_dom = annihilator(f.dom.null).basis();
    auto ann_cod = annihilator(f.cod.null).basis();
    auto pulled = ann_cod * f.mat; // rows: lambda o f in domain coordinates
    auto x = solve(ann_dom.transpose(), pulled.transpose());
    if (!x) throw error("dual_d_map: pulled-back functional not bounded"); // cannot happen for valid maps
    return PairMap<F>{dual_d_space(f.cod), dual_d_space(f.dom), std::move(*x)};
}

/// Formal self-duality: Delta(V, N) = (V*, Ann N), Delta(f) = f transpose.
template <field F>
PairSpace<F> dual_delta_space(const PairSpace<F>& a) {
    return PairSpace<F>(a.dim, annihilator(a.null));
}

template <field F>
PairMap<F> dual_delta_map(const PairMap<F>& f) {
    return PairMap<F>{dual_delta_space(f.cod), dual_delta_space(f.dom), f.mat.transpose()};
}

/// Hausdorffification: quotient by the null subspace, with its projection
/// (the biduality unit A -> D(D(A)) up to canonical identification).
template <field F>
Projected<F> hausdorffification(const PairSpace<F>& a) {
    auto q = quotient_by(a, a.null);
    return q;
}

template <field F>
PairMap<F> hausdorffification_map(const PairMap<F>& f) {
    auto ha = hausdorffification(f.dom);
    auto hb = hausdorffification(f.cod);
    return PairMap<F>{ha.space, hb.space, hb.map.mat * f.mat * ha.section};
}

/// Projective-tensor model: null(A (x) B) = N_A (x) B + A (x) N_B.
template <field F>
PairSpace<F> tensor_space(const PairSpace<F>& a, const PairSpace<F>& b) {
    require_same_field(a.fld(), b.fld(), "tensor");
    const F& fld = a.fld();
    std::size_t n = a.dim * b.dim;
    auto left = a.null.basis().kron(Matrix<F>::identity(fld, b.dim));
    auto right = Matrix<F>::identity(fld, a.dim).kron(b.null.basis());
    return PairSpace<F>(n, Subspace<F>::span_of_rows(n, left.vstack(right)));
}

template <field F>
PairMap<F> tensor_map(const PairMap<F>& f, const PairMap<F>& g) {
    return PairMap<F>{tensor_space(f.dom, g.dom), tensor_space(f.cod, g.cod), f.mat.kron(g.mat)};
}

/// Internal hom: underlying space is the null-preserving maps A -> B, the
/// null subspace is the maps landing in N_B. Elements are vectorized
/// row-major: a map matrix M (dim B x dim A) corresponds to the coordinate
/// vector with entry (i * dim A + j) = M(i, j), expressed in `basis`.
template <field F>
struct HomSpace {
    PairSpace<F> space;
    Subspace<F> basis; // subspace of F^{dimB * dimA} of null-preserving maps
};

template <field F>
HomSpace<F> hom_space(const PairSpace<F>& a, const PairSpace<F>& b) {
    require_same_field(a.fld(), b.fld(), "hom");
    const F& fld = a.fld();
    auto ann_b = annihilator(b.null).basis();
    // bounded maps: Ann(N_B) M N_A^T = 0; empty constraint blocks fall out
    // as zero-row systems whose kernel is everything.
    Subspace<F> bounded = kernel_basis(ann_b.kron(a.null.basis()));
    // maps landing in N_B: Ann(N_B) M = 0
    Subspace<F> landing = kernel_basis(ann_b.kron(Matrix<F>::identity(fld, a.dim)));
    auto inner = intersect(bounded, landing);
    auto null_coords = bounded.coords_of(inner.basis().transpose());
    PairSpace<F> space(bounded.dim(),
                       Subspace<F>::span_of_rows(bounded.dim(), null_coords.transpose()));
    return {std::move(space), std::move(bounded)};
}

/// Vectorize a concrete map matrix into hom coordinates; inverse of
/// hom_element_matrix.
template <field F>
Matrix<F> hom_coords(const HomSpace<F>& h, const Matrix<F>& m) {
    const F& fld = m.fld();
    Matrix<F> flat(fld, m.rows() * m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) flat.at(i * m.cols() + j, 0) = m.at(i, j);
    return h.basis.coords_of(flat);
}

template <field F>
Matrix<F> hom_element_matrix(const HomSpace<F>& h, std::size_t rows, std::size_t cols, const Matrix<F>& coords) {
    auto flat = h.basis.basis().transpose() * coords; // (rows*cols) x 1
    Matrix<F> m(flat.fld(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = flat.at(i * cols + j, 0);
    return m;
}

} // namespace qah
