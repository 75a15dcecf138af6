#pragma once

#include <optional>

#include "qah/complexes.hpp"
#include "qah/pair_space.hpp"

namespace qah {

/// Reshape a flat row-major coordinate vector into a rows x cols matrix.
template <field F>
Matrix<F> unvec(const F& fld, std::size_t rows, std::size_t cols, const Matrix<F>& flat) {
    Matrix<F> m(fld, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = flat.at(i * cols + j, 0);
    return m;
}

template <field F>
Matrix<F> vec(const Matrix<F>& m) {
    Matrix<F> flat(m.fld(), m.rows() * m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) flat.at(i * m.cols() + j, 0) = m.at(i, j);
    return flat;
}

/// Solution space (inside F^{dim cod * dim dom}, row-major vectorization) of
/// all matrices that are morphisms dom -> cod, optionally killing a given
/// subspace of the domain.
template <field F>
Subspace<F> morphism_solution_space(const PairSpace<F>& dom, const PairSpace<F>& cod,
                                    const std::optional<Subspace<F>>& kill = std::nullopt) {
    const F& fld = dom.fld();
    auto constraints = annihilator(cod.null).basis().kron(dom.null.basis());
    if (kill) {
        if (kill->ambient_dim() != dom.dim) throw shape_mismatch("morphism_solution_space: kill subspace ambient");
        constraints = constraints.vstack(Matrix<F>::identity(fld, cod.dim).kron(kill->basis()));
    }
    return kernel_basis(constraints);
}

template <field F>
Matrix<F> random_element_of(const Subspace<F>& s, Rng& rng, long long amplitude = 3) {
    auto coeffs = Matrix<F>::random(s.fld(), 1, s.dim(), rng, amplitude);
    return (coeffs * s.basis()).transpose(); // ambient x 1 column
}

template <field F>
PairMap<F> random_pair_map(const PairSpace<F>& dom, const PairSpace<F>& cod, Rng& rng,
                           const std::optional<Subspace<F>>& kill = std::nullopt) {
    auto sol = morphism_solution_space(dom, cod, kill);
    auto flat = random_element_of(sol, rng);
    return pair_map(dom, cod, unvec(dom.fld(), cod.dim, dom.dim, flat));
}

/// A composable random pair (f, g) with g o f = 0, the raw material of the
/// ladder and heart suites.
template <field F>
struct ComplexPair {
    PairMap<F> f, g;
};

template <field F>
ComplexPair<F> random_complex_pair(const F& fld, std::size_t max_dim, Rng& rng) {
    auto a0 = PairSpace<F>::random(fld, rng.below(max_dim + 1), rng);
    auto a1 = PairSpace<F>::random(fld, rng.below(max_dim + 1), rng);
    auto a2 = PairSpace<F>::random(fld, rng.below(max_dim + 1), rng);
    auto f = random_pair_map(a0, a1, rng);
    auto g = random_pair_map(a1, a2, rng, std::optional<Subspace<F>>(image_basis(f.mat)));
    return {std::move(f), std::move(g)};
}

/// Random strict monic: the kernel inclusion of a random map.
template <field F>
Embedded<F> random_strict_monic(const F& fld, std::size_t max_dim, Rng& rng) {
    auto a = PairSpace<F>::random(fld, rng.below(max_dim + 1) , rng);
    auto b = PairSpace<F>::random(fld, rng.below(max_dim + 1), rng);
    return kernel(random_pair_map(a, b, rng));
}

/// Random strict epic: the cokernel projection of a random map.
template <field F>
Projected<F> random_strict_epic(const F& fld, std::size_t max_dim, Rng& rng) {
    auto a = PairSpace<F>::random(fld, rng.below(max_dim + 1), rng);
    auto b = PairSpace<F>::random(fld, rng.below(max_dim + 1), rng);
    return cokernel(random_pair_map(a, b, rng));
}

/// Random bounded complex: objects drawn freely, each differential a random
/// element of the solution space of maps killing the previous image.
template <field F>
SnComplex<F> random_complex(const F& fld, int lo, std::size_t length, std::size_t max_dim, Rng& rng) {
    std::vector<PairSpace<F>> objs;
    for (std::size_t i = 0; i < length; ++i)
        objs.push_back(PairSpace<F>::random(fld, rng.below(max_dim + 1), rng));
    std::vector<PairMap<F>> ds;
    for (std::size_t i = 0; i + 1 < length; ++i) {
        std::optional<Subspace<F>> kill;
        if (i > 0) kill = image_basis(ds.back().mat);
        ds.push_back(random_pair_map(objs[i], objs[i + 1], rng, kill));
    }
    return SnComplex<F>(fld, lo, std::move(objs), std::move(ds));
}

template <field F>
struct SesOfComplexes {
    SnComplex<F> sub, mid, quot;
    ChainMap<F> incl, proj;
};

/// Degreewise split (hence strict) extension of complexes with a random
/// twisting map w : C -> A[1]; the middle differential is [[dA, w], [0, dC]].
/// Nontrivial w produces nonzero connecting morphisms downstream.
template <field F>
SesOfComplexes<F> random_ses_of_complexes(const SnComplex<F>& a, const SnComplex<F>& c, Rng& rng) {
    const F& fld = a.fld();
    int lo = std::min(a.lo(), c.lo());
    int hi = std::max(a.hi(), c.hi());

    // flat unknown vector: vec(w^n) for n = lo..hi, w^n : C^n -> A^{n+1}
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (int n = lo; n <= hi; ++n) {
        offset.push_back(total);
        total += a.object_at(n + 1).dim * c.object_at(n).dim;
    }
    std::vector<Matrix<F>> constraint_blocks;
    std::size_t rows_total = 0;
    auto add_rows = [&](Matrix<F> block) {
        rows_total += block.rows();
        constraint_blocks.push_back(std::move(block));
    };
    for (int n = lo; n <= hi; ++n) {
        auto an1 = a.object_at(n + 1);
        auto cn = c.object_at(n);
        // null preservation of w^n
        if (an1.dim * cn.dim) {
            auto bound = annihilator(an1.null).basis().kron(cn.null.basis());
            if (bound.rows()) {
                Matrix<F> row(fld, bound.rows(), total);
                row.set_block(0, offset[static_cast<std::size_t>(n - lo)], bound);
                add_rows(std::move(row));
            }
        }
        // coupling: dA^{n+1} w^n + w^{n+1} dC^n = 0, rows indexed by
        // entries of a (dim A^{n+2}) x (dim C^n) matrix
        std::size_t rows_here = a.object_at(n + 2).dim * cn.dim;
        if (rows_here) {
            Matrix<F> row(fld, rows_here, total);
            if (an1.dim * cn.dim)
                row.set_block(0, offset[static_cast<std::size_t>(n - lo)],
                              a.diff_at(n + 1).mat.kron(Matrix<F>::identity(fld, cn.dim)));
            if (n + 1 <= hi && a.object_at(n + 2).dim * c.object_at(n + 1).dim)
                row.set_block(0, offset[static_cast<std::size_t>(n + 1 - lo)],
                              Matrix<F>::identity(fld, a.object_at(n + 2).dim).kron(c.diff_at(n).mat.transpose()));
            add_rows(std::move(row));
        }
    }
    Matrix<F> constraints(fld, 0, total);
    for (auto& b : constraint_blocks) constraints = constraints.vstack(b);
    auto w_flat = random_element_of(kernel_basis(constraints), rng);

    std::vector<PairSpace<F>> mids;
    std::vector<PairMap<F>> dmid;
    std::vector<PairMap<F>> incls, projs;
    for (int n = lo; n <= hi; ++n) {
        auto bp = biproduct(a.object_at(n), c.object_at(n));
        mids.push_back(bp.space);
        incls.push_back(bp.inj1);
        projs.push_back(bp.proj2);
    }
    for (int n = lo; n < hi; ++n) {
        auto an1 = a.object_at(n + 1);
        auto cn = c.object_at(n);
        Matrix<F> w(fld, an1.dim, cn.dim);
        std::size_t off = offset[static_cast<std::size_t>(n - lo)];
        for (std::size_t i = 0; i < an1.dim; ++i)
            for (std::size_t j = 0; j < cn.dim; ++j) w.at(i, j) = w_flat.at(off + i * cn.dim + j, 0);
        auto da = a.diff_at(n).mat;
        auto dc = c.diff_at(n).mat;
        Matrix<F> d(fld, an1.dim + c.object_at(n + 1).dim, a.object_at(n).dim + cn.dim);
        d.set_block(0, 0, da);
        d.set_block(0, a.object_at(n).dim, w);
        d.set_block(an1.dim, a.object_at(n).dim, dc);
        dmid.push_back(PairMap<F>{mids[static_cast<std::size_t>(n - lo)],
                                  mids[static_cast<std::size_t>(n + 1 - lo)], std::move(d)});
    }
    SnComplex<F> mid(fld, lo, std::move(mids), std::move(dmid));
    SnComplex<F> suba = a, quotc = c;
    auto incl = chain_map(suba, mid, lo, std::move(incls));
    auto proj = chain_map(mid, quotc, lo, std::move(projs));
    return {std::move(suba), std::move(mid), std::move(quotc), std::move(incl), std::move(proj)};
}

} // namespace qah
