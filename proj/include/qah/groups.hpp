#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qah/generate.hpp"
#include "qah/pair_space.hpp"

namespace qah {

/// Finite group given by a multiplication table. Associativity, identity
/// and inverses are verified at load.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::uint32_t>> table)
        : names_(std::move(names)), table_(std::move(table)) {
        std::size_t n = names_.size();
        if (n == 0) throw validation_error("group: empty element list");
        if (table_.size() != n) throw validation_error("group: table row count");
        for (const auto& row : table_) {
            if (row.size() != n) throw validation_error("group: table column count");
            for (auto v : row)
                if (v >= n) throw validation_error("group: table entry out of range");
        }
        bool found_identity = false;
        for (std::uint32_t e = 0; e < n; ++e) {
            bool ok = true;
            for (std::uint32_t g = 0; g < n; ++g)
                if (table_[e][g] != g || table_[g][e] != g) { ok = false; break; }
            if (ok) { identity_ = e; found_identity = true; break; }
        }
        if (!found_identity) throw validation_error("group: no identity element");
        inverse_.assign(n, n);
        for (std::uint32_t g = 0; g < n; ++g) {
            for (std::uint32_t h = 0; h < n; ++h)
                if (table_[g][h] == identity_ && table_[h][g] == identity_) { inverse_[g] = h; break; }
            if (inverse_[g] == n) throw validation_error("group: element without inverse");
        }
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw validation_error("group: multiplication not associative");
    }

    static FiniteGroup trivial() { return FiniteGroup({"e"}, {{0}}); }

    static FiniteGroup cyclic(std::uint32_t n) {
        std::vector<std::string> names;
        std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
        for (std::uint32_t i = 0; i < n; ++i) {
            names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
            for (std::uint32_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
        }
        return FiniteGroup(std::move(names), std::move(table));
    }

    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b) {
        std::uint32_t na = static_cast<std::uint32_t>(a.order());
        std::uint32_t nb = static_cast<std::uint32_t>(b.order());
        std::vector<std::string> names;
        std::vector<std::vector<std::uint32_t>> table(na * nb, std::vector<std::uint32_t>(na * nb));
        for (std::uint32_t i = 0; i < na; ++i)
            for (std::uint32_t j = 0; j < nb; ++j)
                names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
        for (std::uint32_t i = 0; i < na * nb; ++i)
            for (std::uint32_t j = 0; j < na * nb; ++j) {
                std::uint32_t ai = i / nb, bi = i % nb, aj = j / nb, bj = j % nb;
                table[i][j] = a.mul(ai, aj) * nb + b.mul(bi, bj);
            }
        return FiniteGroup(std::move(names), std::move(table));
    }

    std::size_t order() const { return names_.size(); }
    std::uint32_t identity() const { return identity_; }
    std::uint32_t mul(std::uint32_t g, std::uint32_t h) const { return table_[g][h]; }
    std::uint32_t inv(std::uint32_t g) const { return inverse_[g]; }
    const std::string& name(std::uint32_t g) const { return names_[g]; }
    const std::vector<std::vector<std::uint32_t>>& table() const { return table_; }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::uint32_t>> table_;
    std::uint32_t identity_ = 0;
    std::vector<std::uint32_t> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Pair space with a null-preserving invertible action; the model of an
/// isometric representation (only the topology is kept).
template <field F>
struct GPairModule {
    GroupPtr group;
    PairSpace<F> space;
    std::vector<Matrix<F>> action; // per element index

    const F& fld() const { return space.fld(); }
};

template <field F>
GPairModule<F> g_pair_module(GroupPtr group, PairSpace<F> space, std::vector<Matrix<F>> action) {
    std::size_t n = group->order();
    if (action.size() != n) throw validation_error("module: one action matrix per element required");
    for (std::uint32_t g = 0; g < n; ++g) {
        if (action[g].rows() != space.dim || action[g].cols() != space.dim)
            throw shape_mismatch("module: action matrix shape");
        if (!inverse(action[g])) throw validation_error("module: action not invertible");
        if (!preserves_null(space, space, action[g]))
            throw not_bounded("module: action does not preserve the null subspace");
    }
    if (!action[group->identity()].is_identity()) throw validation_error("module: identity must act trivially");
    for (std::uint32_t g = 0; g < n; ++g)
        for (std::uint32_t h = 0; h < n; ++h)
            if (!(action[g] * action[h] == action[group->mul(g, h)]))
                throw validation_error("module: action is not a homomorphism");
    return {std::move(group), std::move(space), std::move(action)};
}

/// Equivariant pair map.
template <field F>
struct GMap {
    GPairModule<F> dom, cod;
    PairMap<F> map;
};

template <field F>
GMap<F> g_map(GPairModule<F> dom, GPairModule<F> cod, Matrix<F> mat) {
    auto pm = pair_map(dom.space, cod.space, std::move(mat));
    for (std::uint32_t g = 0; g < dom.group->order(); ++g)
        if (!(pm.mat * dom.action[g] == cod.action[g] * pm.mat))
            throw validation_error("g_map: not equivariant at element " + dom.group->name(g));
    return {std::move(dom), std::move(cod), std::move(pm)};
}

template <field F>
GPairModule<F> trivial_module(GroupPtr group, PairSpace<F> e) {
    std::vector<Matrix<F>> action(group->order(), Matrix<F>::identity(e.fld(), e.dim));
    return {std::move(group), std::move(e), std::move(action)};
}

/// Left-multiplication permutation matrix on F[G].
template <field F>
Matrix<F> left_regular(const F& fld, const FiniteGroup& grp, std::uint32_t h) {
    std::size_t n = grp.order();
    Matrix<F> p(fld, n, n);
    for (std::uint32_t g = 0; g < n; ++g) p.at(grp.mul(h, g), g) = fld.one();
    return p;
}

/// Induced module F[G] (x) E, action by left multiplication on the group
/// coordinate. Coordinates are (g, e)-blocks, g major.
template <field F>
GPairModule<F> induce(GroupPtr group, const PairSpace<F>& e) {
    const F& fld = e.fld();
    std::size_t n = group->order();
    PairSpace<F> space(n * e.dim,
                       Subspace<F>::span_of_rows(n * e.dim,
                                                 Matrix<F>::identity(fld, n).kron(e.null.basis())));
    std::vector<Matrix<F>> action;
    for (std::uint32_t h = 0; h < n; ++h)
        action.push_back(left_regular(fld, *group, h).kron(Matrix<F>::identity(fld, e.dim)));
    return {std::move(group), std::move(space), std::move(action)};
}

/// Coinduced module Maps(G, E), action (h f)(g) = f(g h). Coordinates are
/// blocks f(g), g major.
template <field F>
GPairModule<F> coinduce(GroupPtr group, const PairSpace<F>& e) {
    const F& fld = e.fld();
    std::size_t n = group->order();
    PairSpace<F> space(n * e.dim,
                       Subspace<F>::span_of_rows(n * e.dim,
                                                 Matrix<F>::identity(fld, n).kron(e.null.basis())));
    std::vector<Matrix<F>> action;
    for (std::uint32_t h = 0; h < n; ++h) {
        Matrix<F> p(fld, n, n);
        for (std::uint32_t g = 0; g < n; ++g) p.at(g, group->mul(g, h)) = fld.one();
        action.push_back(p.kron(Matrix<F>::identity(fld, e.dim)));
    }
    return {std::move(group), std::move(space), std::move(action)};
}

template <field F>
PairSpace<F> forget(const GPairModule<F>& m) {
    return m.space;
}

/// Coinvariants M_G = M / sum of images of (1 - g); the pair quotient
/// absorbs the closure.
template <field F>
Projected<F> coinvariants(const GPairModule<F>& m) {
    const F& fld = m.fld();
    Matrix<F> stacked(fld, 0, m.space.dim);
    auto idm = Matrix<F>::identity(fld, m.space.dim);
    for (std::uint32_t g = 0; g < m.group->order(); ++g)
        stacked = stacked.vstack((idm - m.action[g]).transpose());
    auto w = Subspace<F>::span_of_rows(m.space.dim, stacked);
    return quotient_by(m.space, w);
}

/// Invariants M^G = common kernel of (1 - g).
template <field F>
Embedded<F> invariants(const GPairModule<F>& m) {
    const F& fld = m.fld();
    Matrix<F> stacked(fld, 0, m.space.dim);
    auto idm = Matrix<F>::identity(fld, m.space.dim);
    for (std::uint32_t g = 0; g < m.group->order(); ++g)
        stacked = stacked.vstack(idm - m.action[g]);
    return subobject_from(m.space, kernel_basis(stacked));
}

/// Dual module: continuous dual with the inverse-transpose action.
template <field F>
GPairModule<F> dual_module(const GPairModule<F>& m) {
    auto dspace = dual_d_space(m.space);
    std::vector<Matrix<F>> action;
    for (std::uint32_t g = 0; g < m.group->order(); ++g) {
        auto rho_inv = PairMap<F>{m.space, m.space, m.action[m.group->inv(g)]};
        action.push_back(dual_d_map(rho_inv).mat);
    }
    return {m.group, std::move(dspace), std::move(action)};
}

/// Diagonal tensor product of modules.
template <field F>
GPairModule<F> tensor_module(const GPairModule<F>& a, const GPairModule<F>& b) {
    auto space = tensor_space(a.space, b.space);
    std::vector<Matrix<F>> action;
    for (std::uint32_t g = 0; g < a.group->order(); ++g) action.push_back(a.action[g].kron(b.action[g]));
    return {a.group, std::move(space), std::move(action)};
}

/// Internal hom with conjugation action; carries the hom basis so elements
/// can be read back as matrices.
template <field F>
struct HomModule {
    GPairModule<F> module;
    Subspace<F> basis; // of F^{dimB * dimA}, row-major vectorization
};

template <field F>
HomModule<F> hom_module(const GPairModule<F>& a, const GPairModule<F>& b) {
    auto hs = hom_space(a.space, b.space);
    std::vector<Matrix<F>> action;
    for (std::uint32_t g = 0; g < a.group->order(); ++g) {
        auto rho_a_inv = a.action[a.group->inv(g)];
        Matrix<F> act(a.fld(), hs.space.dim, hs.space.dim);
        for (std::size_t i = 0; i < hs.space.dim; ++i) {
            Matrix<F> coords(a.fld(), hs.space.dim, 1);
            coords.at(i, 0) = a.fld().one();
            auto mat = hom_element_matrix(hs, b.space.dim, a.space.dim, coords);
            auto conj = b.action[g] * mat * rho_a_inv;
            auto back = hom_coords(hs, conj);
            for (std::size_t r = 0; r < hs.space.dim; ++r) act.at(r, i) = back.at(r, 0);
        }
        action.push_back(std::move(act));
    }
    return {GPairModule<F>{a.group, hs.space, std::move(action)}, hs.basis};
}

/// tensor over G: coinvariants of the diagonal tensor product.
template <field F>
Projected<F> tensor_over_g(const GPairModule<F>& a, const GPairModule<F>& b) {
    return coinvariants(tensor_module(a, b));
}

/// hom over G: invariants of the internal hom.
template <field F>
Embedded<F> hom_g(const GPairModule<F>& a, const GPairModule<F>& b) {
    return invariants(hom_module(a, b).module);
}

/// Functor up-down applied to an equivariant map (or any pair map on the
/// underlying spaces): identity on the group coordinate.
template <field F>
Matrix<F> bot_matrix(const FiniteGroup& grp, const Matrix<F>& m) {
    return Matrix<F>::identity(m.fld(), grp.order()).kron(m);
}

/// Counit of induction -| forgetful on a module: F[G] (x) M -> M, g (x) m -> g m.
template <field F>
Matrix<F> bot_counit(const GPairModule<F>& m) {
    const F& fld = m.fld();
    std::size_t n = m.group->order();
    Matrix<F> eps(fld, m.space.dim, n * m.space.dim);
    for (std::uint32_t g = 0; g < n; ++g) eps.set_block(0, g * m.space.dim, m.action[g]);
    return eps;
}

/// Whether the counit bot M -> M admits an equivariant bounded section;
/// decides bot-projectivity by an exact linear feasibility problem.
template <field F>
bool is_bot_projective(const GPairModule<F>& m) {
    const F& fld = m.fld();
    std::size_t n = m.group->order();
    std::size_t dm = m.space.dim;
    if (dm == 0) return true;
    std::size_t db = n * dm; // dim of bot M
    auto bot = induce(m.group, m.space); // underlying of bot M with its null and action... action below
    // bot M as a module: induced from the underlying space of M
    auto eps = bot_counit(m);

    std::size_t vars = db * dm;
    Matrix<F> hom_rows(fld, 0, vars);
    // equivariance: s rho(g) = (bot rho)(g) s for all g
    for (std::uint32_t g = 0; g < n; ++g) {
        auto lhs = Matrix<F>::identity(fld, db).kron(m.action[g].transpose());
        auto rhs = bot.action[g].kron(Matrix<F>::identity(fld, dm));
        hom_rows = hom_rows.vstack(lhs - rhs);
    }
    // boundedness: Ann(null bot) s N_M^T = 0
    auto ann = annihilator(bot.space.null).basis();
    if (ann.rows() && m.space.null.dim())
        hom_rows = hom_rows.vstack(ann.kron(m.space.null.basis()));

    // inhomogeneous part: eps s = id
    auto esys = eps.kron(Matrix<F>::identity(fld, dm));
    auto target = vec(Matrix<F>::identity(fld, dm));

    auto kerring = kernel_basis(hom_rows);
    if (kerring.dim() == 0) return target.is_zero();
    return solve(esys * kerring.basis().transpose(), target).has_value();
}

/// All bounded equivariant matrices dom -> cod, row-major vectorized.
template <field F>
Subspace<F> equivariant_solution_space(const GPairModule<F>& dom, const GPairModule<F>& cod) {
    const F& fld = dom.fld();
    std::size_t rows = cod.space.dim, cols = dom.space.dim;
    Matrix<F> constraints = annihilator(cod.space.null).basis().kron(dom.space.null.basis());
    for (std::uint32_t g = 0; g < dom.group->order(); ++g) {
        auto lhs = Matrix<F>::identity(fld, rows).kron(dom.action[g].transpose());
        auto rhs = cod.action[g].kron(Matrix<F>::identity(fld, cols));
        constraints = constraints.vstack(lhs - rhs);
    }
    return kernel_basis(constraints);
}

template <field F>
GMap<F> random_g_map(const GPairModule<F>& dom, const GPairModule<F>& cod, Rng& rng) {
    auto sol = equivariant_solution_space(dom, cod);
    auto flat = random_element_of(sol, rng);
    return g_map(dom, cod, unvec(dom.fld(), cod.space.dim, dom.space.dim, flat));
}

/// Kernel of an equivariant map as a module, with its inclusion.
template <field F>
GMap<F> module_kernel(const GMap<F>& f) {
    auto ker = kernel(f.map);
    std::vector<Matrix<F>> action;
    for (std::uint32_t g = 0; g < f.dom.group->order(); ++g)
        action.push_back(ker.sub.coords_of(f.dom.action[g] * ker.sub.basis().transpose()));
    auto mod = g_pair_module(f.dom.group, ker.space, std::move(action));
    return g_map(mod, f.dom, ker.map.mat);
}

/// Cokernel of an equivariant map as a module, with its projection.
template <field F>
GMap<F> module_cokernel(const GMap<F>& f) {
    auto cok = cokernel(f.map);
    std::vector<Matrix<F>> action;
    for (std::uint32_t g = 0; g < f.dom.group->order(); ++g)
        action.push_back(cok.map.mat * f.cod.action[g] * cok.section);
    auto mod = g_pair_module(f.cod.group, cok.space, std::move(action));
    return g_map(f.cod, mod, cok.map.mat);
}

/// Random module with varied actions and null subspaces: a kernel or image
/// of a random equivariant map between induced-plus-trivial blocks, with
/// rejection until the dimension bound is met.
template <field F>
GPairModule<F> random_module(GroupPtr group, const F& fld, std::size_t max_dim, Rng& rng) {
    for (int attempt = 0; attempt < 12; ++attempt) {
        auto e0 = PairSpace<F>::random(fld, rng.below(2), rng);
        auto e1 = PairSpace<F>::random(fld, rng.below(3), rng);
        auto ind = induce(group, e0);
        auto triv = trivial_module(group, e1);
        // ambient = induce(e0) (+) trivial(e1)
        auto bp = biproduct(ind.space, triv.space);
        std::vector<Matrix<F>> action;
        for (std::uint32_t g = 0; g < group->order(); ++g)
            action.push_back(ind.action[g].direct_sum(triv.action[g]));
        auto ambient = g_pair_module(group, bp.space, std::move(action));

        auto target = trivial_module(group, PairSpace<F>::random(fld, rng.below(3), rng));
        auto f = random_g_map(ambient, target, rng);
        auto cand = module_kernel(f).dom;
        if (cand.space.dim <= max_dim) return cand;
    }
    return trivial_module(group, PairSpace<F>::random(fld, max_dim, rng));
}

/// Strict short exact sequence of modules: the kernel of a random map and
/// the cokernel of its inclusion.
template <field F>
struct ModuleSes {
    GPairModule<F> sub, mid, quot;
    GMap<F> incl, proj;
};

template <field F>
ModuleSes<F> random_module_ses(GroupPtr group, const F& fld, std::size_t max_dim, Rng& rng) {
    auto mid = random_module(group, fld, max_dim, rng);
    auto aux = random_module(group, fld, max_dim, rng);
    auto f = random_g_map(mid, aux, rng);
    auto incl = module_kernel(f);
    auto proj = module_cokernel(incl);
    return {incl.dom, mid, proj.cod, incl, proj};
}

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct AdjunctionReport {
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Units, counits and triangle identities of the two adjoint triples,
/// checked exactly on given samples; naturality on random equivariant maps.
template <field F>
AdjunctionReport verify_adjunctions(GroupPtr group, const std::vector<PairSpace<F>>& spaces,
                                    const std::vector<GPairModule<F>>& modules, Rng& rng) {
    AdjunctionReport rep;
    auto record = [&rep](const std::string& name, bool ok, const std::string& detail = "") {
        rep.checks.push_back({name, ok, detail});
    };
    const FiniteGroup& grp = *group;
    std::size_t n = grp.order();

    for (std::size_t si = 0; si < spaces.size(); ++si) {
        const auto& e = spaces[si];
        const F& fld = e.fld();
        auto tag = "[E" + std::to_string(si) + "]";
        // unit of up -| down: E -> down up E, e -> delta_1 (x) e
        Matrix<F> unit_up(fld, n * e.dim, e.dim);
        unit_up.set_block(grp.identity() * e.dim, 0, Matrix<F>::identity(fld, e.dim));
        // counit of up -| down at up E: up down up E -> up E
        auto up_e = induce(group, e);
        auto eps_upe = bot_counit(up_e);
        // triangle: (eps up) o (up unit) = id_{up E}
        auto up_unit = bot_matrix(grp, unit_up);
        record("up -| down triangle at up E " + tag, (eps_upe * up_unit).is_identity());

        // counit of down -| Uparrow: down Uparrow E -> E, f -> f(1)
        Matrix<F> counit_co(fld, e.dim, n * e.dim);
        counit_co.set_block(0, grp.identity() * e.dim, Matrix<F>::identity(fld, e.dim));
        // unit of down -| Uparrow at Uparrow E and triangle:
        // (Uparrow counit) o (unit at Uparrow E) = id
        auto co_e = coinduce(group, e);
        Matrix<F> unit_at_co(fld, n * n * e.dim, n * e.dim);
        for (std::uint32_t g = 0; g < n; ++g) unit_at_co.set_block(g * n * e.dim, 0, co_e.action[g]);
        auto co_counit = Matrix<F>::identity(fld, n).kron(counit_co);
        record("down -| Uparrow triangle at Uparrow E " + tag, (co_counit * unit_at_co).is_identity());
    }

    for (std::size_t mi = 0; mi < modules.size(); ++mi) {
        const auto& m = modules[mi];
        const F& fld = m.fld();
        auto tag = "[M" + std::to_string(mi) + "]";
        std::size_t dm = m.space.dim;
        // triangle of up -| down at down M: eps_M o (unit at down M) = id
        auto eps = bot_counit(m);
        Matrix<F> unit_dm(fld, n * dm, dm);
        unit_dm.set_block(grp.identity() * dm, 0, Matrix<F>::identity(fld, dm));
        record("up -| down triangle at down M " + tag, (eps * unit_dm).is_identity());

        // triangle of down -| Uparrow at down M: counit o (down unit_M) = id
        Matrix<F> unit_m(fld, n * dm, dm); // m -> (g -> g m)
        for (std::uint32_t g = 0; g < n; ++g) unit_m.set_block(g * dm, 0, m.action[g]);
        Matrix<F> counit_dm(fld, dm, n * dm);
        counit_dm.set_block(0, grp.identity() * dm, Matrix<F>::identity(fld, dm));
        record("down -| Uparrow triangle at down M " + tag, (counit_dm * unit_m).is_identity());

        // unit of ()_G -| trivial: the projection is equivariant into the
        // trivial module, and universal among maps to trivial modules
        auto coinv = coinvariants(m);
        bool unit_equivariant = true;
        for (std::uint32_t g = 0; g < n; ++g)
            if (!(coinv.map.mat * m.action[g] == coinv.map.mat)) unit_equivariant = false;
        record("()_G unit equivariance " + tag, unit_equivariant);

        // counit of trivial -| ()^G: the inclusion of invariants is
        // equivariant from the trivial module
        auto inv = invariants(m);
        bool counit_equivariant = true;
        for (std::uint32_t g = 0; g < n; ++g)
            if (!(m.action[g] * inv.map.mat == inv.map.mat)) counit_equivariant = false;
        record("()^G counit equivariance " + tag, counit_equivariant);

        // trivial module fixed points: for trivial coefficients both
        // adjunctions are identities
        auto triv = trivial_module(group, m.space);
        record("trivial module coinvariants identity " + tag,
               coinvariants(triv).space == m.space && coinvariants(triv).map.mat.is_identity());
        record("trivial module invariants identity " + tag,
               invariants(triv).space == m.space && invariants(triv).map.mat.is_identity());
    }

    // naturality of eps on a random equivariant map between induced modules
    if (spaces.size() >= 2) {
        const auto& e0 = spaces[0];
        const auto& e1 = spaces[1];
        auto u = random_pair_map(e0, e1, rng);
        auto m0 = induce(group, e0);
        auto m1 = induce(group, e1);
        auto up_u = bot_matrix(grp, u.mat);
        // eps naturality: eps_{up E1} o (bot up u) = (up u) o eps_{up E0}
        auto lhs = bot_counit(m1) * bot_matrix(grp, up_u);
        auto rhs = up_u * bot_counit(m0);
        rep.checks.push_back({"eps naturality on random map", lhs == rhs, ""});
    }
    return rep;
}

} // namespace qah
