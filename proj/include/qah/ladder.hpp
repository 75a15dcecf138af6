#pragma once

#include "qah/pair_space.hpp"

namespace qah {

/// The homology ladder of a composable pair f, g with g o f = 0:
///
///        Coim f >--phi--> Ker g
///       /                    \
///   A' --------f-------> A ----g----> A''
///       \                    /
///        Coker f --psi->> Im g
///
/// phi is monic, psi is epic, u : Ker g -> Coker f is strict, and the
/// homology object X is witnessed isomorphic to Coker phi, Ker psi and
/// Im u; additionally Ker u = Im f and Coker u = Coim g.
template <field F>
struct HomologyLadder {
    PairMap<F> f, g;

    Projected<F> coim_f;
    Embedded<F> ker_g;
    Projected<F> coker_f;
    Embedded<F> im_g;
    Embedded<F> im_f;
    Projected<F> coim_g;

    PairMap<F> phi; // Coim f -> Ker g, monic
    PairMap<F> psi; // Coker f -> Im g, epic
    PairMap<F> u;   // Ker g -> Coker f, strict

    Embedded<F> x; // X = Im u, inside Coker f

    // explicit witnesses, all verified pair isos
    PairMap<F> coker_phi_to_x;
    PairMap<F> ker_psi_to_x;
    PairMap<F> im_u_to_x;      // identity by construction
    PairMap<F> ker_u_to_im_f;
    PairMap<F> coker_u_to_coim_g;
};

template <field F>
HomologyLadder<F> homology_ladder(const PairMap<F>& f, const PairMap<F>& g) {
    if (!(f.cod == g.dom)) throw composability_error("homology_ladder: cod(f) != dom(g)");
    if (!(g.mat * f.mat).is_zero()) throw not_a_complex("homology_ladder: g o f != 0");

    auto coim_f = coimage(f);
    auto ker_g = kernel(g);
    auto coker_f = cokernel(f);
    auto im_g = image(g);
    auto im_f = image(f);
    auto coim_g = coimage(g);

    // phi: induced by f on the coimage, landing in Ker g since g f = 0
    auto phi = pair_map(coim_f.space, ker_g.space, ker_g.sub.coords_of(f.mat * coim_f.section));
    // psi: induced by g on the cokernel of f
    auto psi = pair_map(coker_f.space, im_g.space, im_g.sub.coords_of(g.mat * coker_f.section));
    // u: Ker g >-> A ->> Coker f
    auto u = compose(coker_f.map, ker_g.map);

    auto x = image(u);

    auto require_iso = [](const PairMap<F>& w, const char* what) {
        if (!is_pair_iso(w)) throw error(std::string("homology_ladder: witness failed: ") + what);
        return w;
    };

    auto coker_phi = cokernel(phi);
    auto coker_phi_to_x = require_iso(
        pair_map(coker_phi.space, x.space, x.sub.coords_of(u.mat * coker_phi.section)),
        "Coker phi = X");

    auto ker_psi = kernel(psi);
    auto ker_psi_to_x = require_iso(
        pair_map(ker_psi.space, x.space, x.sub.coords_of(ker_psi.sub.basis().transpose())),
        "Ker psi = X");

    auto im_u_to_x = require_iso(identity_map(x.space), "Im u = X");

    auto ker_u = kernel(u);
    auto ker_u_to_im_f = require_iso(
        pair_map(ker_u.space, im_f.space, im_f.sub.coords_of(ker_g.map.mat * ker_u.sub.basis().transpose())),
        "Ker u = Im f");

    auto coker_u = cokernel(u);
    auto coker_u_to_coim_g =
        pair_map(coker_u.space, coim_g.space, coim_g.map.mat * coker_f.section * coker_u.section);
    require_iso(coker_u_to_coim_g, "Coker u = Coim g");
    // the composite must also be the induced map, i.e. commute with the projections
    if (!(coker_u_to_coim_g.mat * coker_u.map.mat * coker_f.map.mat == coim_g.map.mat))
        throw error("homology_ladder: Coker u = Coim g witness is not the induced map");

    if (!is_monic(phi)) throw error("homology_ladder: phi not monic");
    if (!is_epic(psi)) throw error("homology_ladder: psi not epic");
    if (!is_strict(u)) throw error("homology_ladder: u not strict");

    return HomologyLadder<F>{f, g, std::move(coim_f), std::move(ker_g), std::move(coker_f),
                             std::move(im_g), std::move(im_f), std::move(coim_g),
                             std::move(phi), std::move(psi), std::move(u), std::move(x),
                             std::move(coker_phi_to_x), std::move(ker_psi_to_x),
                             std::move(im_u_to_x), std::move(ker_u_to_im_f),
                             std::move(coker_u_to_coim_g)};
}

} // namespace qah
