#pragma once

#include <vector>

#include "qah/hearts.hpp"

namespace qah {

/// Degreewise kernel-cokernel test for a would-be strict short exact
/// sequence of pair maps i : A -> B, p : B -> C.
template <field F>
bool is_kernel_cokernel_pair(const PairMap<F>& i, const PairMap<F>& p) {
    if (!(i.cod == p.dom)) return false;
    if (!(p.mat * i.mat).is_zero()) return false;
    if (!is_monic(i) || !is_strict(i)) return false;
    if (!is_surjective(p.mat) || !is_strict(p)) return false;
    return kernel_basis(p.mat) == image_basis(i.mat);
}

/// Explicit iso between the direct realization T(h_left(A, n)) and the
/// cohomology of the embedded complex at n: transport representatives
/// through the kernel inclusion.
template <field F>
A2Map<F> realization_bridge(const SnComplex<F>& a, int n, const TRealization<F>& tre,
                            const A2Cohomology<F>& hc) {
    const F& fld = a.fld();
    auto ker = kernel(a.diff_at(n));
    auto obj_n = a.object_at(n);

    std::size_t td = tre.rep.top_dim();
    auto top_ambient = ker.map.mat * tre.top_lift(Matrix<F>::identity(fld, td));
    auto top = hc.top.reduce(obj_n.null.coords_of(top_ambient));

    std::size_t bd = tre.rep.bottom_dim();
    auto bottom_ambient = ker.map.mat * tre.bottom_lift(Matrix<F>::identity(fld, bd));
    auto bottom = hc.bottom.reduce(bottom_ambient);

    A2Map<F> bridge{std::move(top), std::move(bottom)};
    if (!a2_map_is_iso(tre.rep, hc.rep, bridge))
        throw internal_inconsistency("realization_bridge: T(h_left) does not match embedded cohomology");
    return bridge;
}

template <field F>
struct LesNode {
    LeftHeartObject<F> obj;
    TRealization<F> tre;
    A2Cohomology<F> hcoh;
    A2Map<F> bridge; // T(obj) -> hcoh.rep
};

template <field F>
LesNode<F> les_node(const SnComplex<F>& a, const A2Complex<F>& ea, int n) {
    auto obj = h_left(a, n);
    auto tre = t_realize(obj);
    auto hc = a2_cohomology(ea, n);
    auto bridge = realization_bridge(a, n, tre, hc);
    return {std::move(obj), std::move(tre), std::move(hc), std::move(bridge)};
}

/// Long exact sequence of left heart cohomology attached to a degreewise
/// strict short exact sequence of complexes, over a degree window. Maps are
/// realized in embedded-cohomology coordinates; exactness is certified
/// row-wise there.
template <field F>
struct LeftLes {
    int n0, n1;
    std::vector<LesNode<F>> a, b, c;    // indexed by n - n0, degrees n0 .. n1+1
    std::vector<A2Map<F>> alpha, beta;  // A(n) -> B(n), B(n) -> C(n)
    std::vector<A2Map<F>> delta;        // C(n) -> A(n+1)
    std::vector<std::string> node_names;
    std::vector<bool> node_exact;       // exactness at each interior node

    bool exact() const {
        for (bool e : node_exact)
            if (!e) return false;
        return true;
    }
};

template <field F>
bool rows_exact(const A2Map<F>& in, const A2Map<F>& out) {
    if (!(out.top * in.top).is_zero() || !(out.bottom * in.bottom).is_zero()) return false;
    return image_basis(in.top) == kernel_basis(out.top) &&
           image_basis(in.bottom) == kernel_basis(out.bottom);
}

/// Row-wise snake connecting map in embedded-cohomology coordinates.
template <field F>
Matrix<F> snake_row(const Matrix<F>& proj_n, const Matrix<F>& d_b_n, const Matrix<F>& incl_n1,
                    const RowCohomology<F>& hc_src, const RowCohomology<F>& hc_dst) {
    auto lift_b = solve(proj_n, hc_src.reps);
    if (!lift_b) throw internal_inconsistency("snake: projection row not surjective on representatives");
    auto db = d_b_n * *lift_b;
    auto lift_a = solve(incl_n1, db);
    if (!lift_a) throw internal_inconsistency("snake: boundary does not pull back");
    return hc_dst.reduce(*lift_a);
}

template <field F>
LeftLes<F> les_of_ses_left(const ChainMap<F>& incl, const ChainMap<F>& proj, int n0, int n1) {
    if (!(incl.cod == proj.dom)) throw shape_mismatch("les_of_ses: chain maps do not share the middle");
    const auto& A = incl.dom;
    const auto& B = incl.cod;
    const auto& C = proj.cod;
    int lo = std::min(A.lo(), std::min(B.lo(), C.lo()));
    int hi = std::max(A.hi(), std::max(B.hi(), C.hi()));
    for (int n = lo; n <= hi; ++n) {
        if (!is_kernel_cokernel_pair(incl.at(n), proj.at(n)))
            throw not_strict_exact("les_of_ses: degree " + std::to_string(n) +
                                   " is not a kernel-cokernel pair");
    }

    auto ea = embed_to_a2(A);
    auto eb = embed_to_a2(B);
    auto ec = embed_to_a2(C);

    LeftLes<F> out;
    out.n0 = n0;
    out.n1 = n1;
    for (int n = n0; n <= n1 + 1; ++n) {
        out.a.push_back(les_node(A, ea, n));
        out.b.push_back(les_node(B, eb, n));
        out.c.push_back(les_node(C, ec, n));
    }
    for (int n = n0; n <= n1 + 1; ++n) {
        std::size_t k = static_cast<std::size_t>(n - n0);
        out.alpha.push_back(induced_on_cohomology(incl, n, out.a[k].hcoh, out.b[k].hcoh));
        out.beta.push_back(induced_on_cohomology(proj, n, out.b[k].hcoh, out.c[k].hcoh));
    }
    for (int n = n0; n <= n1; ++n) {
        std::size_t k = static_cast<std::size_t>(n - n0);
        auto in_top = proj.at(n);
        auto top_proj = in_top.cod.null.coords_of(in_top.mat * in_top.dom.null.basis().transpose());
        auto in_incl = incl.at(n + 1);
        auto top_incl = in_incl.cod.null.coords_of(in_incl.mat * in_incl.dom.null.basis().transpose());
        auto db = B.diff_at(n);
        auto top_db = db.cod.null.coords_of(db.mat * db.dom.null.basis().transpose());

        auto dtop = snake_row(top_proj, top_db, top_incl, out.c[k].hcoh.top, out.a[k + 1].hcoh.top);
        auto dbot = snake_row(in_top.mat, db.mat, in_incl.mat, out.c[k].hcoh.bottom, out.a[k + 1].hcoh.bottom);
        out.delta.push_back(A2Map<F>{std::move(dtop), std::move(dbot)});
    }
    // exactness at the interior nodes: for n in n0..n1,
    //   at B(n): alpha(n) then beta(n)
    //   at C(n): beta(n) then delta(n)
    //   at A(n+1): delta(n) then alpha(n+1)
    for (int n = n0; n <= n1; ++n) {
        std::size_t k = static_cast<std::size_t>(n - n0);
        out.node_names.push_back("B(" + std::to_string(n) + ")");
        out.node_exact.push_back(rows_exact(out.alpha[k], out.beta[k]));
        out.node_names.push_back("C(" + std::to_string(n) + ")");
        out.node_exact.push_back(rows_exact(out.beta[k], out.delta[k]));
        out.node_names.push_back("A(" + std::to_string(n + 1) + ")");
        out.node_exact.push_back(rows_exact(out.delta[k], out.alpha[k + 1]));
    }
    return out;
}

/// Lift a realized LES morphism to an honest heart roof between the node
/// objects (endpoints in T-coordinates).
template <field F>
HeartMorphism<F> lift_les_map(const LesNode<F>& src, const LesNode<F>& dst, const A2Map<F>& realized_h) {
    // move from embedded-cohomology coordinates to T-coordinates
    auto inv_dst = a2_invert(dst.tre.rep, dst.hcoh.rep, dst.bridge);
    if (!inv_dst) throw internal_inconsistency("lift_les_map: bridge not invertible");
    auto beta = a2_compose(*inv_dst, a2_compose(realized_h, src.bridge)); // T(src) -> T(dst)
    auto cover = canonical_cover(src.obj);
    auto right = lift_from_section(cover.section, dst.obj, a2_compose(beta, cover.section.iso));
    return {Side::left, complex_of(src.obj), complex_of(dst.obj), cover.qis, std::move(right)};
}

} // namespace qah
