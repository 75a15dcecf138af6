#pragma once

#include <optional>
#include <vector>

#include "qah/complexes.hpp"
#include "qah/generate.hpp"

namespace qah {

/// Object of the left heart: a monic placed in degrees -1, 0.
template <field F>
struct LeftHeartObject {
    PairMap<F> a;
};

template <field F>
LeftHeartObject<F> left_heart_object(PairMap<F> a) {
    if (!is_monic(a)) throw validation_error("left heart object: map is not monic");
    return {std::move(a)};
}

/// Object of the right heart: an epic placed in degrees 0, 1.
template <field F>
struct RightHeartObject {
    PairMap<F> b;
};

template <field F>
RightHeartObject<F> right_heart_object(PairMap<F> b) {
    if (!is_epic(b)) throw validation_error("right heart object: map is not epic");
    return {std::move(b)};
}

template <field F>
SnComplex<F> complex_of(const LeftHeartObject<F>& x) {
    return SnComplex<F>::two_term(x.a, -1);
}

template <field F>
SnComplex<F> complex_of(const RightHeartObject<F>& x) {
    return SnComplex<F>::two_term(x.b, 0);
}

/// Realization of a two-term complex [z : Z1 -> Z0] in degrees -1, 0 as an
/// A2 representation: top = N0 / z(N1), bottom = Z0 / z(Z1), with induced
/// vertical. For heart objects this is the functor T; for arbitrary [z] it
/// computes H^0 of the embedded complex.
template <field F>
struct TRealization {
    PairMap<F> z;
    A2Rep<F> rep;
    QuotientPresentation<F> top;    // inside null(Z0)-coordinates
    QuotientPresentation<F> bottom; // in ambient Z0-coordinates

    /// T-top coordinates of an ambient vector lying in null(Z0).
    Matrix<F> top_reduce(const Matrix<F>& ambient) const {
        return top.projection * z.cod.null.coords_of(ambient);
    }
    /// Ambient representatives of T-top coordinate vectors.
    Matrix<F> top_lift(const Matrix<F>& coords) const {
        return z.cod.null.basis().transpose() * top.section * coords;
    }
    Matrix<F> bottom_reduce(const Matrix<F>& ambient) const { return bottom.projection * ambient; }
    Matrix<F> bottom_lift(const Matrix<F>& coords) const { return bottom.section * coords; }
};

template <field F>
TRealization<F> t_realize(const PairMap<F>& z) {
    const auto& n0 = z.cod.null;
    // a(N_A) inside N0-coordinates
    auto pushed = apply(z.mat, z.dom.null);
    auto top_sub = Subspace<F>::span_of_rows(n0.dim(), n0.coords_of(pushed.basis().transpose()).transpose());
    auto top = quotient_presentation(top_sub);
    auto bottom = quotient_presentation(image_basis(z.mat));
    // induced vertical: lift a top coordinate, view in ambient, reduce bottom
    auto t = bottom.projection * n0.basis().transpose() * top.section;
    return {z, A2Rep<F>{std::move(t)}, std::move(top), std::move(bottom)};
}

template <field F>
TRealization<F> t_realize(const LeftHeartObject<F>& x) {
    return t_realize(x.a);
}

/// Realization of a chain map between two-term complexes in degrees -1, 0.
template <field F>
A2Map<F> t_map(const TRealization<F>& src, const TRealization<F>& dst, const Matrix<F>& f0) {
    auto top = dst.top_reduce(f0 * src.z.cod.null.basis().transpose() * src.top.section);
    auto bottom = dst.bottom_reduce(f0 * src.bottom.section);
    return {std::move(top), std::move(bottom)};
}

/// Left heart homology: the monic phi : Coim d^{n-1} -> Ker d^n.
template <field F>
LeftHeartObject<F> h_left(const SnComplex<F>& a, int n) {
    auto coim = coimage(a.diff_at(n - 1));
    auto ker = kernel(a.diff_at(n));
    auto phi = pair_map(coim.space, ker.space, ker.sub.coords_of(a.diff_at(n - 1).mat * coim.section));
    return left_heart_object(std::move(phi));
}

/// Delta-transport of a whole complex: (Delta A)^k = Delta(A^{-k}).
template <field F>
SnComplex<F> delta_complex(const SnComplex<F>& a) {
    if (a.empty()) return SnComplex<F>::zero(a.fld());
    int lo = -a.hi(), hi = -a.lo();
    std::vector<PairSpace<F>> objs;
    std::vector<PairMap<F>> ds;
    for (int k = lo; k <= hi; ++k) objs.push_back(dual_delta_space(a.object_at(-k)));
    for (int k = lo; k < hi; ++k) ds.push_back(dual_delta_map(a.diff_at(-k - 1)));
    return SnComplex<F>(a.fld(), lo, std::move(objs), std::move(ds));
}

/// Continuous-dual complex: (D A)^k = D(A^{-k}) with D of the reversed
/// differentials.
template <field F>
SnComplex<F> dual_d_complex(const SnComplex<F>& a) {
    if (a.empty()) return SnComplex<F>::zero(a.fld());
    int lo = -a.hi(), hi = -a.lo();
    std::vector<PairSpace<F>> objs;
    std::vector<PairMap<F>> ds;
    for (int k = lo; k <= hi; ++k) objs.push_back(dual_d_space(a.object_at(-k)));
    for (int k = lo; k < hi; ++k) ds.push_back(dual_d_map(a.diff_at(-k - 1)));
    return SnComplex<F>(a.fld(), lo, std::move(objs), std::move(ds));
}

/// Delta-transport of a chain map; contravariant, so domain and codomain
/// swap.
template <field F>
ChainMap<F> delta_chain_map(const ChainMap<F>& f) {
    auto ddom = delta_complex(f.cod);
    auto dcod = delta_complex(f.dom);
    int lo = std::min(ddom.lo(), dcod.lo());
    int hi = std::max(ddom.hi(), dcod.hi());
    std::vector<PairMap<F>> comps;
    for (int k = lo; k <= hi; ++k) comps.push_back(dual_delta_map(f.at(-k)));
    return chain_map(std::move(ddom), std::move(dcod), lo, std::move(comps));
}

/// Right heart homology, both routes. `direct` is the paper's formula
/// psi : Coker d^{n-1} ->> Im d^n; `transported` is Delta(H_l^{-n}(Delta A)).
/// The two are compared through explicit witnesses; disagreement raises
/// internal_inconsistency.
template <field F>
struct HRight {
    RightHeartObject<F> direct;
    RightHeartObject<F> transported;
    PairMap<F> dom_witness; // Coker d^{n-1} -> dom(transported), pair iso
    PairMap<F> cod_witness; // cod(transported) -> Im d^n, pair iso
};

template <field F>
HRight<F> h_right_full(const SnComplex<F>& a, int n) {
    auto d_in = a.diff_at(n - 1);
    auto d_out = a.diff_at(n);
    auto cok = cokernel(d_in);
    auto im = image(d_out);
    auto psi = pair_map(cok.space, im.space, im.sub.coords_of(d_out.mat * cok.section));
    auto direct = right_heart_object(std::move(psi));

    auto da = delta_complex(a);
    auto lh = h_left(da, -n);
    auto transported_map = dual_delta_map(lh.a);
    auto transported = right_heart_object(transported_map);

    // dom(transported) = Delta(Ker Delta d_in) = Coker d_in
    auto ker_delta = kernel(da.diff_at(-n)); // Delta(d_in) sits at degree -n in Delta A
    auto dom_witness = factor_through_cokernel(cok, dual_delta_map(ker_delta.map));
    if (!is_pair_iso(dom_witness)) throw internal_inconsistency("h_right: Coker d = Delta Ker Delta d failed");

    // cod(transported) = Delta(Coim Delta d_out) = Im d_out
    auto coim_delta = coimage(da.diff_at(-n - 1));
    auto delta_proj = dual_delta_map(coim_delta.map); // Delta(Coim ...) -> A^n
    auto cod_witness = pair_map(delta_proj.dom, im.space, im.sub.coords_of(delta_proj.mat));
    if (!is_pair_iso(cod_witness)) throw internal_inconsistency("h_right: Im d = Delta Coim Delta d failed");

    // the square must commute: cod_witness o transported o dom_witness == psi
    if (!(cod_witness.mat * transported_map.mat * dom_witness.mat == direct.b.mat))
        throw internal_inconsistency("h_right: transport and direct formula disagree");

    return {std::move(direct), std::move(transported), std::move(dom_witness), std::move(cod_witness)};
}

template <field F>
RightHeartObject<F> h_right(const SnComplex<F>& a, int n) {
    return h_right_full(a, n).direct;
}

template <field F>
LeftHeartObject<F> iota_l(const PairSpace<F>& a) {
    return LeftHeartObject<F>{zero_map(PairSpace<F>::zero(a.fld()), a)};
}

template <field F>
RightHeartObject<F> iota_r(const PairSpace<F>& a) {
    return RightHeartObject<F>{zero_map(a, PairSpace<F>::zero(a.fld()))};
}

/// Left adjoint of iota_l: the cokernel of the representing monic.
template <field F>
Projected<F> q_l(const LeftHeartObject<F>& x) {
    return cokernel(x.a);
}

/// Right adjoint of iota_r: the kernel of the representing epic.
template <field F>
Embedded<F> q_r(const RightHeartObject<F>& x) {
    return kernel(x.b);
}

template <field F>
HeartInvariants heart_invariants(const LeftHeartObject<F>& x) {
    return a2_invariants(t_realize(x).rep);
}

/// Right-side invariants by Delta-transport; h_null and h_quot are swapped
/// back so that iota_r(V, N) reports (0, dim N, dim V - dim N) like the
/// left side.
template <field F>
HeartInvariants heart_invariants(const RightHeartObject<F>& x) {
    auto lh = h_left(delta_complex(complex_of(x)), 0);
    auto tri = a2_invariants(t_realize(lh).rep);
    return {tri.w, tri.h_quot, tri.h_null};
}

template <field F>
bool heart_iso(const LeftHeartObject<F>& x, const LeftHeartObject<F>& y) {
    return heart_invariants(x) == heart_invariants(y);
}

template <field F>
bool heart_iso(const RightHeartObject<F>& x, const RightHeartObject<F>& y) {
    return heart_invariants(x) == heart_invariants(y);
}

/// Duality heart functor: (b : B ->> C) -> (D(b) : D(C) >-> D(B)).
template <field F>
LeftHeartObject<F> heart_dual(const RightHeartObject<F>& x) {
    return left_heart_object(dual_d_map(x.b));
}

/// The explicit section of the realization: given t : V1 -> V0, produce a
/// left heart object with realization isomorphic to t. B = (V0 (+) ker t,
/// null = im t (+) ker t), A = (ker t, 0), a(k) = (0, k).
template <field F>
struct SectionResult {
    LeftHeartObject<F> obj;
    A2Map<F> iso; // T(obj) -> t, an A2 iso
    A2Rep<F> t;
};

template <field F>
SectionResult<F> section_left(const A2Rep<F>& t) {
    const F& fld = t.t.fld();
    std::size_t v0 = t.bottom_dim();
    auto ker = nullspace(t.t); // k x top_dim
    std::size_t k = ker.rows();

    auto im_rows = image_basis(t.t).basis(); // r x v0
    auto null_rows = im_rows.hstack(Matrix<F>::zero(fld, im_rows.rows(), k))
                         .vstack(Matrix<F>::zero(fld, k, v0).hstack(Matrix<F>::identity(fld, k)));
    PairSpace<F> b(v0 + k, Subspace<F>::span_of_rows(v0 + k, null_rows));
    PairSpace<F> a = PairSpace<F>::hausdorff(fld, k);
    auto a_mat = Matrix<F>::zero(fld, v0, k).vstack(Matrix<F>::identity(fld, k));
    auto obj = left_heart_object(pair_map(a, b, a_mat));

    auto tre = t_realize(obj);
    auto iso = a2_iso_witness(tre.rep, t);
    if (!iso) throw error("section_left: realization does not match the input triple");
    return {std::move(obj), std::move(*iso), t};
}

/// Constructive fullness: lift a realized morphism beta : T(section) -> T(y)
/// to an honest chain map of representing complexes. Always possible because
/// the section's degree -1 object is Hausdorff.
template <field F>
ChainMap<F> lift_from_section(const SectionResult<F>& s, const LeftHeartObject<F>& y, const A2Map<F>& beta) {
    const F& fld = s.obj.a.fld();
    auto src = t_realize(s.obj);
    auto dst = t_realize(y);

    const auto& s0 = s.obj.a.cod; // (V0 (+) K, im t (+) K)
    std::size_t dim0 = s0.dim;

    // null part: lift beta_top through N0(y) ->> T(y).top
    auto ell1 = dst.top_lift(beta.top * src.top.projection); // on null(S0)-coordinates... see below
    // columns of null(S0) basis and a complement
    auto null_basis_cols = s0.null.basis().transpose();          // dim0 x null_dim
    auto qp_null = quotient_presentation(s0.null);               // complement data
    auto compl_cols = qp_null.section;                           // dim0 x (dim0 - null_dim)

    // g0 on the null part: since T(section).top has trivial divisor, its
    // projection is an iso from null(S0)-coords; lift via the destination.
    // ell1 above maps null-coordinates to ambient Y0 representatives.
    // g0 on the complement: lift beta_bottom of the bottom class.
    auto bottom_classes = beta.bottom * src.bottom_reduce(compl_cols);
    auto compl_images = dst.bottom_lift(bottom_classes);

    // assemble g0 in standard coordinates
    auto basis_all = null_basis_cols.hstack(compl_cols); // invertible dim0 x dim0
    auto images_all = ell1.hstack(compl_images);
    auto inv_basis = inverse(basis_all);
    if (!inv_basis) throw error("lift_from_section: basis assembly failed");
    auto g0 = images_all * *inv_basis;

    // g1: y o g1 = g0 o a; columns of g0 * a.mat lie in the image of y
    auto rhs = g0 * s.obj.a.mat;
    auto g1 = solve(y.a.mat, rhs);
    if (!g1) throw error("lift_from_section: degree -1 component does not exist");

    auto f1 = pair_map(s.obj.a.dom, y.a.dom, std::move(*g1));
    auto f0 = pair_map(s0, y.a.cod, std::move(g0));
    return chain_map(complex_of(s.obj), complex_of(y), -1, {std::move(f1), std::move(f0)});
}

/// Canonical quasi-isomorphism section(T(X)) -> X.
template <field F>
struct CanonicalCover {
    SectionResult<F> section;
    ChainMap<F> qis; // section -> X, a quasi-isomorphism
};

template <field F>
CanonicalCover<F> canonical_cover(const LeftHeartObject<F>& x) {
    auto tre = t_realize(x);
    auto s = section_left(tre.rep);
    auto leg = lift_from_section(s, x, s.iso);
    if (!is_quasi_iso(leg)) throw error("canonical_cover: lifted leg is not a quasi-isomorphism");
    return {std::move(s), std::move(leg)};
}

/// Heart morphism as a roof: left leg a quasi-isomorphism onto the source,
/// right leg any chain map to the target. Direct maps use an identity left
/// leg. Both legs share the same middle complex.
template <field F>
struct HeartMorphism {
    Side side = Side::left;
    SnComplex<F> src, dst; // representing complexes
    ChainMap<F> left;      // middle -> src, quasi-iso
    ChainMap<F> right;     // middle -> dst
};

template <field F>
HeartMorphism<F> direct_morphism_left(const LeftHeartObject<F>& x, const LeftHeartObject<F>& y,
                                      const PairMap<F>& f1, const PairMap<F>& f0) {
    auto cx = complex_of(x);
    auto cy = complex_of(y);
    auto right = chain_map(cx, cy, -1, {f1, f0});
    return {Side::left, cx, cy, identity_chain_map(cx), std::move(right)};
}

template <field F>
HeartMorphism<F> roof_morphism_left(const SnComplex<F>& middle, const ChainMap<F>& to_src,
                                    const ChainMap<F>& to_dst) {
    if (!is_quasi_iso(to_src)) throw validation_error("roof: left leg is not a quasi-isomorphism");
    return {Side::left, to_src.cod, to_dst.cod, to_src, to_dst};
}

/// Realize a left-heart morphism as an A2 map between T(src) and T(dst):
/// invert the realized left leg and compose.
template <field F>
A2Map<F> realize(const HeartMorphism<F>& m) {
    if (m.side != Side::left) throw validation_error("realize: right-side morphisms are realized via transport");
    auto mid_z = m.left.dom.diff_at(-1);
    auto rmid = t_realize(mid_z);
    auto rsrc = t_realize(m.src.diff_at(-1));
    auto rdst = t_realize(m.dst.diff_at(-1));
    auto lreal = t_map(rmid, rsrc, m.left.at(0).mat);
    auto rreal = t_map(rmid, rdst, m.right.at(0).mat);
    auto linv = a2_invert(rmid.rep, rsrc.rep, lreal);
    if (!linv) throw internal_inconsistency("realize: quasi-iso leg not invertible on realizations");
    return a2_compose(rreal, *linv);
}

template <field F>
bool roof_equal(const HeartMorphism<F>& m1, const HeartMorphism<F>& m2) {
    if (m1.side != m2.side) throw endpoint_mismatch("roof_equal: different sides");
    if (!(m1.src == m2.src && m1.dst == m2.dst)) throw endpoint_mismatch("roof_equal: endpoints differ");
    auto r1 = realize(m1);
    auto r2 = realize(m2);
    return r1.top == r2.top && r1.bottom == r2.bottom;
}

/// Compose heart morphisms by levelwise pullback of the inner span; if the
/// pulled-back left leg fails to be a quasi-isomorphism, fall back to the
/// section lift of the realized composite.
template <field F>
HeartMorphism<F> roof_compose(const HeartMorphism<F>& g, const HeartMorphism<F>& f) {
    if (f.side != g.side || f.side != Side::left) throw endpoint_mismatch("roof_compose: sides");
    if (!(f.dst == g.src)) throw endpoint_mismatch("roof_compose: endpoints do not chain");

    const F& fld = f.src.fld();
    // levelwise pullback of (f.right : Zf -> Y, g.left : Zg -> Y)
    std::vector<PairSpace<F>> objs;
    std::vector<Embedded<F>> kers;
    int lo = -1, hi = 0;
    for (int n = lo; n <= hi; ++n) {
        auto pf = f.right.at(n);
        auto pg = g.left.at(n);
        auto bp = biproduct(pf.dom, pg.dom);
        auto diff = pf.mat.hstack(-pg.mat);
        auto ker = subobject_from(bp.space, kernel_basis(diff));
        objs.push_back(ker.space);
        kers.push_back(std::move(ker));
    }
    // induced differential on the pullback
    auto d_f = f.right.dom.diff_at(-1);
    auto d_g = g.left.dom.diff_at(-1);
    auto big_d = d_f.mat.direct_sum(d_g.mat);
    auto d_mid = factor_through_kernel(kers[1], PairMap<F>{kers[0].space, kers[1].map.cod,
                                                           big_d * kers[0].map.mat});
    SnComplex<F> mid(fld, -1, objs, {d_mid});

    // block projections of the pullback: slices of the kernel inclusion
    std::vector<PairMap<F>> pfc, pgc;
    for (int n = lo; n <= hi; ++n) {
        auto xf = f.right.at(n).dom;
        auto xg = g.left.at(n).dom;
        auto incl = kers[static_cast<std::size_t>(n - lo)].map.mat;
        pfc.push_back(PairMap<F>{objs[static_cast<std::size_t>(n - lo)], xf, incl.rows_slice(0, xf.dim)});
        pgc.push_back(PairMap<F>{objs[static_cast<std::size_t>(n - lo)], xg, incl.rows_slice(xf.dim, xg.dim)});
    }
    auto to_zf = chain_map(mid, f.right.dom, -1, pfc);
    auto to_zg = chain_map(mid, g.left.dom, -1, pgc);

    // candidate roof: left leg = f.left o to_zf, right leg = g.right o to_zg
    std::vector<PairMap<F>> lc, rc;
    for (int n = lo; n <= hi; ++n) {
        lc.push_back(compose(f.left.at(n), to_zf.at(n)));
        rc.push_back(compose(g.right.at(n), to_zg.at(n)));
    }
    auto left_leg = chain_map(mid, f.src, -1, lc);
    auto right_leg = chain_map(mid, g.dst, -1, rc);
    if (is_quasi_iso(left_leg)) return {Side::left, f.src, g.dst, std::move(left_leg), std::move(right_leg)};

    // fall back: realize and lift through the canonical cover of the source
    auto beta = a2_compose(realize(g), realize(f));
    auto src_obj = left_heart_object(f.src.diff_at(-1));
    auto dst_obj = left_heart_object(g.dst.diff_at(-1));
    auto cover = canonical_cover(src_obj);
    auto rcover = realize(HeartMorphism<F>{Side::left, cover.qis.dom, f.src,
                                           identity_chain_map(cover.qis.dom), cover.qis});
    auto lifted = lift_from_section(cover.section, dst_obj, a2_compose(beta, rcover));
    return {Side::left, f.src, g.dst, cover.qis, std::move(lifted)};
}

/// Explicit iso witness between left heart objects with equal invariants:
/// a roof through the section of the common triple.
template <field F>
std::optional<HeartMorphism<F>> heart_iso_witness(const LeftHeartObject<F>& x, const LeftHeartObject<F>& y) {
    auto tx = t_realize(x);
    auto ty = t_realize(y);
    auto alpha = a2_iso_witness(tx.rep, ty.rep);
    if (!alpha) return std::nullopt;
    auto cover = canonical_cover(x);
    auto right = lift_from_section(cover.section, y, a2_compose(*alpha, cover.section.iso));
    if (!is_quasi_iso(right)) throw error("heart_iso_witness: lifted iso is not a quasi-iso");
    return HeartMorphism<F>{Side::left, cover.qis.cod, complex_of(y), cover.qis, std::move(right)};
}

} // namespace qah
