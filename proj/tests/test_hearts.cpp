#include <catch2/catch_amalgamated.hpp>

#include "qah/ladder.hpp"
#include "qah/les.hpp"

using namespace qah;

namespace {
const Rationals QQ;
const PrimeField F2(2);
const PrimeField F5(5);

PairSpace<Rationals> haus1() { return PairSpace<Rationals>::hausdorff(QQ, 1); }
PairSpace<Rationals> indis1() { return PairSpace<Rationals>::indiscrete(QQ, 1); }

LeftHeartObject<Rationals> singular_left() {
    return left_heart_object(pair_map(haus1(), indis1(), Matrix<Rationals>::identity(QQ, 1)));
}
RightHeartObject<Rationals> singular_right() {
    return right_heart_object(pair_map(haus1(), indis1(), Matrix<Rationals>::identity(QQ, 1)));
}
} // namespace

TEST_CASE("h_left on spec instances") {
    Rng rng(3);
    auto v = PairSpace<Rationals>::random(QQ, 3, rng);
    auto conc = SnComplex<Rationals>::concentrated(v, 0);
    auto h = h_left(conc, 0);
    CHECK(h.a == iota_l(v).a); // on the nose

    auto s = h_left(SnComplex<Rationals>::two_term(singular_left().a, -1), 0);
    CHECK(heart_invariants(s) == HeartInvariants{1, 0, 0});

    // paper-mirror ladder complex: homology is purely non-Hausdorff
    auto mid = biproduct(indis1(), haus1()).space;
    auto f = pair_map(haus1(), mid, Matrix<Rationals>::from_int_rows(QQ, {{1}, {0}}));
    auto g = pair_map(mid, indis1(), Matrix<Rationals>::from_int_rows(QQ, {{0, 1}}));
    SnComplex<Rationals> ladder_cx(QQ, -1, {haus1(), mid, indis1()}, {f, g});
    auto h0 = h_left(ladder_cx, 0);
    CHECK(q_l(h0).space.is_zero());
    CHECK(heart_invariants(h0).w == 1);
}

TEST_CASE("h_right on spec instances, transport agrees with direct") {
    Rng rng(5);
    auto v = PairSpace<Rationals>::random(QQ, 3, rng);
    auto conc = SnComplex<Rationals>::concentrated(v, 0);
    auto hr = h_right_full(conc, 0);
    CHECK(hr.direct.b == iota_r(v).b); // on the nose

    // right-singular object: psi of [(F,0) -> (F,F)] placed in degrees 0,1
    auto sr_complex = SnComplex<Rationals>::two_term(singular_right().b, 0);
    auto sr = h_right_full(sr_complex, 0);
    CHECK(q_r(sr.direct).space.is_zero());
    CHECK(heart_invariants(sr.direct).w == 1);
    CHECK(heart_invariants(sr.direct) == HeartInvariants{1, 0, 0});
}

TEMPLATE_TEST_CASE("h_right transport route is certified on random complexes", "", Rationals, PrimeField) {
    TestType fld = []{
        if constexpr (std::is_same_v<TestType, PrimeField>) return PrimeField(5);
        else return Rationals{};
    }();
    Rng rng(7);
    for (int it = 0; it < 30; ++it) {
        auto a = random_complex(fld, -2, 4, 3, rng);
        for (int n = a.lo() - 1; n <= a.hi() + 1; ++n) {
            auto hr = h_right_full(a, n); // throws internal_inconsistency on disagreement
            CHECK(is_pair_iso(hr.dom_witness));
            CHECK(is_pair_iso(hr.cod_witness));
        }
    }
}

TEST_CASE("iota and q examples") {
    CHECK(iota_l(PairSpace<Rationals>::zero(QQ)).a.cod.is_zero());
    CHECK(heart_invariants(iota_l(indis1())) == HeartInvariants{0, 1, 0});
    CHECK(heart_invariants(iota_r(haus1())) == HeartInvariants{0, 0, 1});

    Rng rng(11);
    auto v = PairSpace<Rationals>::random(QQ, 3, rng);
    CHECK(q_l(iota_l(v)).space == v);
    CHECK(q_r(iota_r(v)).space == v);
    CHECK(q_l(singular_left()).space.is_zero());
    CHECK(q_r(singular_right()).space.is_zero());
}

TEST_CASE("heart invariants on iota images") {
    Rng rng(13);
    for (int it = 0; it < 40; ++it) {
        auto v = PairSpace<PrimeField>::random(F5, rng.below(5), rng);
        auto expect = HeartInvariants{0, v.null.dim(), v.dim - v.null.dim()};
        CHECK(heart_invariants(iota_l(v)) == expect);
        CHECK(heart_invariants(iota_r(v)) == expect);
    }
    CHECK(heart_invariants(singular_left()) == HeartInvariants{1, 0, 0});
}

TEST_CASE("heart_iso distinguishes the singular object from iota images") {
    CHECK(heart_iso(singular_left(), singular_left()));
    CHECK_FALSE(heart_iso(singular_left(), iota_l(haus1())));
    CHECK(heart_invariants(iota_l(haus1())) == HeartInvariants{0, 0, 1});
}

TEST_CASE("heart_dual examples") {
    Rng rng(17);
    auto v = PairSpace<Rationals>::hausdorff(QQ, 2);
    auto d1 = heart_dual(iota_r(v));
    CHECK(d1.a == iota_l(v).a); // Hausdorff case, literal equality of duals

    auto d2 = heart_dual(iota_r(indis1()));
    CHECK(d2.a.cod.is_zero());

    auto d3 = heart_dual(singular_right());
    CHECK(d3.a == iota_l(haus1()).a); // [0 -> (F,0)]
}

TEST_CASE("heart_dual is exact on strict triples of right heart objects") {
    // 0 -> S_r -> iota_r(F,0) -> iota_r(F,F) -> 0 (nonsplit)
    auto x1 = singular_right();
    auto x2 = iota_r(haus1());
    auto x3 = iota_r(indis1());
    // duals: 0 -> heart_dual(x3) -> heart_dual(x2) -> heart_dual(x1) -> 0
    auto d3 = heart_dual(x3); // 0
    auto d2 = heart_dual(x2); // iota_l(F,0)
    auto d1 = heart_dual(x1); // iota_l(F,0)
    CHECK(d3.a.cod.is_zero());
    CHECK(heart_invariants(d2) == heart_invariants(d1));
    // with the middle terms equal, exactness of the dualized triple amounts
    // to the outer map being an iso in the heart
    CHECK(heart_iso(d2, d1));
}

TEST_CASE("section realizes every triple and the cover is a quasi-iso") {
    Rng rng(19);
    for (int it = 0; it < 40; ++it) {
        auto t = A2Rep<PrimeField>{Matrix<PrimeField>::random(F2, rng.below(4), rng.below(4), rng)};
        auto s = section_left(t);
        CHECK(a2_invariants(t_realize(s.obj).rep) == a2_invariants(t));
        auto a = PairSpace<PrimeField>::random(F2, rng.below(4), rng);
        auto b = PairSpace<PrimeField>::random(F2, rng.below(4) + 1, rng);
        auto m = random_pair_map(a, b, rng);
        if (!is_monic(m)) continue;
        auto x = left_heart_object(m);
        auto cover = canonical_cover(x);
        CHECK(is_quasi_iso(cover.qis));
    }
}

TEST_CASE("the bicartesian-square replacement is detected as a quasi-iso") {
    // replace the singular object by its section form; the canonical cover
    // leg is exactly this replacement
    auto cover = canonical_cover(singular_left());
    CHECK(is_quasi_iso(cover.qis));
    CHECK(heart_iso(cover.section.obj, singular_left()));
}

TEST_CASE("roof calculus: identity, equality, composition") {
    Rng rng(23);
    auto v = PairSpace<PrimeField>::random(F2, 3, rng);
    auto x = iota_l(v);
    auto idm = direct_morphism_left(x, x, identity_map(x.a.dom), identity_map(x.a.cod));
    CHECK(roof_equal(idm, idm));

    auto comp = roof_compose(idm, idm);
    CHECK(roof_equal(comp, idm));

    // a nontrivial roof equal to a direct map: both legs the canonical
    // cover realize the identity of the covered object
    auto s = left_heart_object(pair_map(PairSpace<PrimeField>::hausdorff(F2, 1),
                                        PairSpace<PrimeField>::indiscrete(F2, 1),
                                        Matrix<PrimeField>::identity(F2, 1)));
    auto cover = canonical_cover(s);
    auto roofed = roof_morphism_left(cover.qis.dom, cover.qis, cover.qis);
    auto ids = direct_morphism_left(s, s, identity_map(s.a.dom), identity_map(s.a.cod));
    CHECK(roof_equal(roofed, ids));
}

TEST_CASE("heart_iso_witness produces verified roofs") {
    Rng rng(29);
    for (int it = 0; it < 25; ++it) {
        // two random monics with the same triple: normal-form section vs a
        // random monic
        auto a = PairSpace<PrimeField>::random(F2, rng.below(3), rng);
        auto b = PairSpace<PrimeField>::random(F2, rng.below(3) + 1, rng);
        auto m = random_pair_map(a, b, rng);
        if (!is_monic(m)) continue;
        auto x = left_heart_object(m);
        auto y = section_left(t_realize(x).rep).obj;
        auto w = heart_iso_witness(x, y);
        REQUIRE(w.has_value());
        CHECK(is_quasi_iso(w->right)); // an iso roof has both legs quasi-isos
        // and a mismatched pair yields no witness
        auto z = iota_l(PairSpace<PrimeField>::hausdorff(F2, x.a.cod.dim + 1));
        if (!(heart_invariants(x) == heart_invariants(z)))
            CHECK_FALSE(heart_iso_witness(x, z).has_value());
    }
}

TEST_CASE("adjunction triangle identities for q_l -| iota_l and iota_r -| q_r") {
    Rng rng(31);
    for (int it = 0; it < 30; ++it) {
        auto a = PairSpace<PrimeField>::random(F5, rng.below(3), rng);
        auto b = PairSpace<PrimeField>::random(F5, rng.below(3) + 1, rng);
        auto m = random_pair_map(a, b, rng);
        if (!is_monic(m)) continue;
        auto x = left_heart_object(m);

        // unit: X -> iota_l(q_l X), components (0, coker projection)
        auto qx = q_l(x);
        auto unit = direct_morphism_left(x, iota_l(qx.space), zero_map(x.a.dom, PairSpace<PrimeField>::zero(F5)),
                                         qx.map);
        // q_l(unit) must be the identity on q_l X (triangle identity 1)
        auto induced = factor_through_cokernel(qx, compose(cokernel(iota_l(qx.space).a).map, unit.right.at(0)));
        CHECK(induced.mat.is_identity());

        // counit of iota_r -| q_r: iota_r(q_r Y) -> Y, components (incl, 0)
        auto v = PairSpace<PrimeField>::random(F5, rng.below(3), rng);
        auto yb = random_pair_map(PairSpace<PrimeField>::random(F5, rng.below(3) + 1, rng), v, rng);
        if (!is_epic(yb)) continue;
        auto y = right_heart_object(yb);
        auto qy = q_r(y);
        // q_r(counit) = identity on q_r Y (triangle identity)
        auto ind2 = factor_through_kernel(qy, compose(qy.map, identity_map(qy.space)));
        CHECK(ind2.mat.is_identity());
        // unit of the pair at an iota image: q_r(iota_r V) = V
        CHECK(q_r(iota_r(v)).space == v);
        CHECK(q_l(iota_l(v)).space == v);
    }
}

TEST_CASE("iota_l is fully faithful on realizations") {
    Rng rng(37);
    for (int it = 0; it < 30; ++it) {
        auto a = PairSpace<PrimeField>::random(F2, rng.below(4), rng);
        auto b = PairSpace<PrimeField>::random(F2, rng.below(4), rng);
        // Hom_SN(A, B) has the same dimension as Hom(T iota A, T iota B)
        auto hom_sn = morphism_solution_space(a, b);
        // commuting squares (top, bottom): top: N_A -> N_B, bottom: V_A -> V_B
        // with incl_B top = bottom incl_A; bottom determines top on N_A and
        // must map N_A into N_B: that is exactly the bounded condition.
        auto ta = t_realize(iota_l(a).a);
        auto tb = t_realize(iota_l(b).a);
        // dimension of the A2 hom space by direct solve
        const auto& fld = F2;
        std::size_t vars = ta.rep.top_dim() * tb.rep.top_dim() + ta.rep.bottom_dim() * tb.rep.bottom_dim();
        // constraint: t_b * top = bottom * t_a
        Matrix<PrimeField> cons(fld, tb.rep.bottom_dim() * ta.rep.top_dim(), vars);
        cons.set_block(0, 0, tb.rep.t.kron(Matrix<PrimeField>::identity(fld, ta.rep.top_dim())));
        auto rhs_block = Matrix<PrimeField>::identity(fld, tb.rep.bottom_dim()).kron(ta.rep.t.transpose());
        for (std::size_t i = 0; i < rhs_block.rows(); ++i)
            for (std::size_t j = 0; j < rhs_block.cols(); ++j)
                cons.at(i, ta.rep.top_dim() * tb.rep.top_dim() + j) = fld.neg(rhs_block.at(i, j));
        CHECK(kernel_basis(cons).dim() == hom_sn.dim());
    }
}

TEST_CASE("q_l H_l is naturally isomorphic to q_r H_r") {
    Rng rng(41);
    for (int it = 0; it < 40; ++it) {
        auto a = random_complex(F5, -2, 4, 3, rng);
        for (int n = a.lo(); n <= a.hi(); ++n) {
            auto hl = h_left(a, n);
            auto hr = h_right(a, n);
            auto lad = homology_ladder(a.diff_at(n - 1), a.diff_at(n));
            // q_l(h_left) = Coker phi and q_r(h_right) = Ker psi share the
            // ladder's canonical coordinates; the composed witness is an iso
            auto w = compose(*pair_inverse(lad.ker_psi_to_x), lad.coker_phi_to_x);
            CHECK(is_pair_iso(w));
            CHECK(q_l(hl).space == w.dom);
            CHECK(q_r(hr).space == w.cod);
        }
    }
}

TEST_CASE("t-structure identities through heart homology") {
    Rng rng(43);
    for (int it = 0; it < 20; ++it) {
        auto a = random_complex(F2, -2, 4, 3, rng);
        auto tl = truncate(Side::left, Bound::le, 0, a);
        auto tr = truncate(Side::right, Bound::le, 0, a);
        for (int n = -3; n <= 3; ++n) {
            if (n <= 0) {
                CHECK(heart_invariants(h_left(tl, n)) == heart_invariants(h_left(a, n)));
                CHECK(heart_invariants(h_right(tr, n)) == heart_invariants(h_right(a, n)));
            } else {
                CHECK(heart_invariants(h_left(tl, n)) == HeartInvariants{0, 0, 0});
                CHECK(heart_invariants(h_right(tr, n)) == HeartInvariants{0, 0, 0});
            }
        }
        auto tge_l = truncate(Side::left, Bound::ge, 0, a);
        auto tge_r = truncate(Side::right, Bound::ge, 0, a);
        for (int n = -3; n <= 3; ++n) {
            if (n >= 0) {
                CHECK(heart_invariants(h_left(tge_l, n)) == heart_invariants(h_left(a, n)));
                CHECK(heart_invariants(h_right(tge_r, n)) == heart_invariants(h_right(a, n)));
            } else {
                CHECK(heart_invariants(h_left(tge_l, n)) == HeartInvariants{0, 0, 0});
                CHECK(heart_invariants(h_right(tge_r, n)) == HeartInvariants{0, 0, 0});
            }
        }
    }
}

TEST_CASE("realization bridge on random complexes") {
    Rng rng(47);
    for (int it = 0; it < 25; ++it) {
        auto a = random_complex(F5, -2, 4, 3, rng);
        auto ea = embed_to_a2(a);
        for (int n = a.lo(); n <= a.hi(); ++n) {
            auto node = les_node(a, ea, n); // constructor verifies the bridge iso
            CHECK(a2_map_is_iso(node.tre.rep, node.hcoh.rep, node.bridge));
        }
    }
}

TEST_CASE("les_of_ses: split sequences have zero connecting maps") {
    Rng rng(53);
    for (int it = 0; it < 10; ++it) {
        auto a = random_complex(F2, -1, 3, 2, rng);
        auto c = random_complex(F2, -1, 3, 2, rng);
        // split: zero twisting map
        std::vector<PairSpace<PrimeField>> mids;
        std::vector<PairMap<PrimeField>> dmid, incls, projs;
        int lo = std::min(a.lo(), c.lo()), hi = std::max(a.hi(), c.hi());
        for (int n = lo; n <= hi; ++n) {
            auto bp = biproduct(a.object_at(n), c.object_at(n));
            mids.push_back(bp.space);
            incls.push_back(bp.inj1);
            projs.push_back(bp.proj2);
        }
        for (int n = lo; n < hi; ++n)
            dmid.push_back(PairMap<PrimeField>{mids[static_cast<std::size_t>(n - lo)],
                                               mids[static_cast<std::size_t>(n + 1 - lo)],
                                               a.diff_at(n).mat.direct_sum(c.diff_at(n).mat)});
        SnComplex<PrimeField> mid(F2, lo, mids, dmid);
        auto incl = chain_map(a, mid, lo, incls);
        auto proj = chain_map(mid, c, lo, projs);
        auto les = les_of_ses_left(incl, proj, lo, hi);
        CHECK(les.exact());
        for (const auto& d : les.delta) {
            CHECK(d.top.is_zero());
            CHECK(d.bottom.is_zero());
        }
    }
}

TEST_CASE("les_of_ses: 0 -> A -> A -> 0 -> 0 gives isos everywhere") {
    Rng rng(59);
    auto a = random_complex(F5, -1, 3, 3, rng);
    auto zero = SnComplex<PrimeField>::zero(F5);
    std::vector<PairMap<PrimeField>> zcomps, idcomps;
    for (int n = a.lo(); n <= a.hi(); ++n) {
        zcomps.push_back(zero_map(zero.object_at(n), a.object_at(n)));
        idcomps.push_back(identity_map(a.object_at(n)));
    }
    // 0 -> 0 -> A -> A -> 0
    auto incl = chain_map(zero, a, a.lo(), zcomps);
    auto proj = chain_map(a, a, a.lo(), idcomps);
    auto les = les_of_ses_left(incl, proj, a.lo(), a.hi());
    CHECK(les.exact());
    for (std::size_t k = 0; k < les.beta.size(); ++k) {
        CHECK(a2_map_is_iso(les.b[k].hcoh.rep, les.c[k].hcoh.rep, les.beta[k]));
    }
}

TEMPLATE_TEST_CASE("les_of_ses is exact on random strict extensions", "", Rationals, PrimeField) {
    TestType fld = []{
        if constexpr (std::is_same_v<TestType, PrimeField>) return PrimeField(2);
        else return Rationals{};
    }();
    Rng rng(61);
    for (int it = 0; it < 12; ++it) {
        auto a = random_complex(fld, -1, 3, 2, rng);
        auto c = random_complex(fld, -1, 3, 2, rng);
        auto ses = random_ses_of_complexes(a, c, rng);
        auto les = les_of_ses_left(ses.incl, ses.proj, ses.mid.lo() - 1, ses.mid.hi() + 1);
        CHECK(les.exact());
        // delta maps lift to verified heart roofs
        for (std::size_t k = 0; k < les.delta.size(); ++k) {
            if (les.c[k].hcoh.rep.is_zero_rep()) continue;
            auto roof = lift_les_map(les.c[k], les.a[k + 1], les.delta[k]);
            auto realized = realize(roof);
            // transported back to H coordinates it reproduces delta
            auto inv_src = a2_invert(les.c[k].tre.rep, les.c[k].hcoh.rep, les.c[k].bridge);
            REQUIRE(inv_src.has_value());
            auto back = a2_compose(les.a[k + 1].bridge, a2_compose(realized, *inv_src));
            CHECK(back.top == les.delta[k].top);
            CHECK(back.bottom == les.delta[k].bottom);
        }
    }
}

TEST_CASE("les_of_ses rejects non-strict input") {
    // 0 -> (F,0) --id--> (F,F) -> 0 levelwise is not a kernel-cokernel pair
    auto i = pair_map(haus1(), indis1(), Matrix<Rationals>::identity(QQ, 1));
    auto a = SnComplex<Rationals>::concentrated(haus1(), 0);
    auto b = SnComplex<Rationals>::concentrated(indis1(), 0);
    auto zero = SnComplex<Rationals>::zero(QQ);
    auto incl = chain_map(a, b, 0, {i});
    auto proj = chain_map(b, zero, 0, {zero_map(indis1(), PairSpace<Rationals>::zero(QQ))});
    CHECK_THROWS_AS(les_of_ses_left(incl, proj, 0, 0), not_strict_exact);
}

TEST_CASE("stored witness: q_r is not exact") {
    // strict heart triple 0 -> S_r -> iota_r(F,0) -> iota_r(F,F) -> 0;
    // kernels give 0 -> 0 -> (F,0) -> (F,F) with a non-strict epic, and
    // Hausdorffification destroys exactness outright.
    auto x1 = singular_right();
    auto x2 = iota_r(haus1());
    auto x3 = iota_r(indis1());

    // degree-0 components of the connecting chain maps
    auto m1_0 = identity_map(haus1());
    auto m2_0 = pair_map(haus1(), indis1(), Matrix<Rationals>::identity(QQ, 1));

    // certify exactness of the triple through the Delta-transported
    // realizations: 0 -> (0 -> F) -> (F -> F) -> (F -> 0) -> 0 in A2
    auto r3 = t_realize(h_left(delta_complex(complex_of(x3)), 0));
    auto r2 = t_realize(h_left(delta_complex(complex_of(x2)), 0));
    auto r1 = t_realize(h_left(delta_complex(complex_of(x1)), 0));
    CHECK(a2_invariants(r3.rep) == HeartInvariants{0, 0, 1}); // (0 -> F)
    CHECK(a2_invariants(r2.rep) == HeartInvariants{0, 1, 0}); // (F -> F)
    CHECK(a2_invariants(r1.rep) == HeartInvariants{1, 0, 0}); // (F -> 0)

    // q_r values along the triple
    auto k1 = q_r(x1).space;
    auto k2 = q_r(x2).space;
    auto k3 = q_r(x3).space;
    CHECK(k1.is_zero());
    CHECK(k2 == haus1());
    CHECK(k3 == indis1());

    // induced map k2 -> k3 is the restriction of m2_0: the identity matrix,
    // an epic that is not strict, so the kernel sequence is not short exact
    auto induced = factor_through_kernel(q_r(x3), compose(q_r(x3).map, zero_map(k2, x3.b.dom)));
    (void)induced;
    auto q_map = m2_0; // restriction to kernels is m2_0 itself here
    CHECK(is_epic(q_map));
    CHECK_FALSE(is_strict(q_map));

    // after Hausdorffification the sequence 0 -> Hd(F,0) -> Hd(F,F) = 0 is
    // not even linearly exact at the middle
    auto hd2 = hausdorffification(k2).space;
    auto hd3 = hausdorffification(k3).space;
    CHECK(hd2.dim == 1);
    CHECK(hd3.dim == 0);
    // kernel of the induced map Hd(k2) -> Hd(k3) is everything, image from
    // the left is zero: exactness fails
    auto hd_map = hausdorffification_map(q_map);
    CHECK(kernel_basis(hd_map.mat).dim() == 1);
    (void)m1_0;
}
