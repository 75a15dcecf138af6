#pragma once

#include <vector>

#include "qah/a2.hpp"
#include "qah/pair_space.hpp"

namespace qah {

/// Bounded cochain complex of pair spaces, cohomological indexing. Objects
/// outside the window are zero.
template <field F>
class SnComplex {
public:
    SnComplex(F fld, int lo, std::vector<PairSpace<F>> objects, std::vector<PairMap<F>> diffs)
        : fld_(std::move(fld)), lo_(lo), obj_(std::move(objects)), d_(std::move(diffs)) {
        if (obj_.empty() ? !d_.empty() : d_.size() + 1 != obj_.size())
            throw shape_mismatch("complex: differential count does not match window");
        for (std::size_t i = 0; i + 1 < obj_.size(); ++i) {
            if (!(d_[i].dom == obj_[i] && d_[i].cod == obj_[i + 1]))
                throw shape_mismatch("complex: differential endpoints");
        }
        for (std::size_t i = 0; i + 2 < obj_.size(); ++i)
            if (!(d_[i + 1].mat * d_[i].mat).is_zero()) throw not_a_complex("complex: d o d != 0");
    }

    static SnComplex zero(const F& fld) { return SnComplex(fld, 0, {}, {}); }

    static SnComplex concentrated(const PairSpace<F>& a, int degree) {
        return SnComplex(a.fld(), degree, {a}, {});
    }

    /// Two-term complex [a : X -> Y] placed in degrees `deg`, `deg`+1.
    static SnComplex two_term(const PairMap<F>& a, int deg) {
        return SnComplex(a.fld(), deg, {a.dom, a.cod}, {a});
    }

    const F& fld() const { return fld_; }
    bool empty() const { return obj_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(obj_.size()) - 1; }

    PairSpace<F> object_at(int n) const {
        if (empty() || n < lo() || n > hi()) return PairSpace<F>::zero(fld_);
        return obj_[static_cast<std::size_t>(n - lo_)];
    }

    PairMap<F> diff_at(int n) const {
        if (!empty() && n >= lo() && n + 1 <= hi()) return d_[static_cast<std::size_t>(n - lo_)];
        return zero_map(object_at(n), object_at(n + 1));
    }

    /// Drop zero objects at the boundary of the window.
    SnComplex normalized() const {
        int a = lo(), b = hi();
        while (a <= b && object_at(a).is_zero()) ++a;
        while (b >= a && object_at(b).is_zero()) --b;
        if (a > b) return zero(fld_);
        std::vector<PairSpace<F>> objs;
        std::vector<PairMap<F>> ds;
        for (int n = a; n <= b; ++n) objs.push_back(object_at(n));
        for (int n = a; n < b; ++n) ds.push_back(diff_at(n));
        return SnComplex(fld_, a, std::move(objs), std::move(ds));
    }

    friend bool operator==(const SnComplex& x, const SnComplex& y) {
        auto a = x.normalized();
        auto b = y.normalized();
        if (a.empty() != b.empty()) return false;
        if (a.empty()) return true;
        if (a.lo() != b.lo() || a.hi() != b.hi()) return false;
        for (int n = a.lo(); n <= a.hi(); ++n) {
            if (!(a.object_at(n) == b.object_at(n))) return false;
            if (n < a.hi() && !(a.diff_at(n) == b.diff_at(n))) return false;
        }
        return true;
    }

private:
    F fld_;
    int lo_;
    std::vector<PairSpace<F>> obj_;
    std::vector<PairMap<F>> d_;
};

template <field F>
SnComplex<F> shift(const SnComplex<F>& a, int n) {
    if (a.empty() || n == 0) {
        if (n == 0) return a;
        return a.empty() ? a : SnComplex<F>(a.fld(), a.lo() - n, {}, {});
    }
    std::vector<PairSpace<F>> objs;
    std::vector<PairMap<F>> ds;
    int lo = a.lo() - n, hi = a.hi() - n;
    const bool flip = (n % 2) != 0;
    for (int k = lo; k <= hi; ++k) objs.push_back(a.object_at(k + n));
    for (int k = lo; k < hi; ++k) {
        auto d = a.diff_at(k + n);
        ds.push_back(flip ? PairMap<F>{d.dom, d.cod, -d.mat} : d);
    }
    return SnComplex<F>(a.fld(), lo, std::move(objs), std::move(ds));
}

enum class Side { left, right };
enum class Bound { le, ge };

namespace detail {

template <field F>
SnComplex<F> truncate_at_zero(Side side, Bound bound, const SnComplex<F>& a) {
    const F& fld = a.fld();
    if (side == Side::left && bound == Bound::le) {
        // ... -> A^{-1} -> Ker d^0 -> 0
        auto ker = kernel(a.diff_at(0));
        std::vector<PairSpace<F>> objs;
        std::vector<PairMap<F>> ds;
        int lo = std::min(a.lo(), 0);
        for (int n = lo; n < 0; ++n) objs.push_back(a.object_at(n));
        objs.push_back(ker.space);
        for (int n = lo; n + 1 < 0; ++n) ds.push_back(a.diff_at(n));
        if (lo < 0) ds.push_back(factor_through_kernel(ker, a.diff_at(-1)));
        return SnComplex<F>(fld, lo, std::move(objs), std::move(ds)).normalized();
    }
    if (side == Side::left && bound == Bound::ge) {
        // 0 -> Coim d^{-1} -> A^0 -> A^1 -> ...
        auto coim = coimage(a.diff_at(-1));
        std::vector<PairSpace<F>> objs{coim.space};
        std::vector<PairMap<F>> ds;
        int hi = std::max(a.hi(), 0);
        ds.push_back(PairMap<F>{coim.space, a.object_at(0), a.diff_at(-1).mat * coim.section});
        for (int n = 0; n <= hi; ++n) objs.push_back(a.object_at(n));
        for (int n = 0; n < hi; ++n) ds.push_back(a.diff_at(n));
        return SnComplex<F>(fld, -1, std::move(objs), std::move(ds)).normalized();
    }
    if (side == Side::right && bound == Bound::le) {
        // ... -> A^{-1} -> A^0 -> Im d^0 -> 0, the image sits in degree 1
        auto im = image(a.diff_at(0));
        std::vector<PairSpace<F>> objs;
        std::vector<PairMap<F>> ds;
        int lo = std::min(a.lo(), 0);
        for (int n = lo; n <= 0; ++n) objs.push_back(a.object_at(n));
        objs.push_back(im.space);
        for (int n = lo; n < 0; ++n) ds.push_back(a.diff_at(n));
        ds.push_back(PairMap<F>{a.object_at(0), im.space, im.sub.coords_of(a.diff_at(0).mat)});
        return SnComplex<F>(fld, lo, std::move(objs), std::move(ds)).normalized();
    }
    // right, ge: 0 -> Coker d^{-1} -> A^1 -> A^2 -> ...
    auto cok = cokernel(a.diff_at(-1));
    std::vector<PairSpace<F>> objs{cok.space};
    std::vector<PairMap<F>> ds;
    int hi = std::max(a.hi(), 1);
    ds.push_back(factor_through_cokernel(cok, a.diff_at(0)));
    for (int n = 1; n <= hi; ++n) objs.push_back(a.object_at(n));
    for (int n = 1; n < hi; ++n) ds.push_back(a.diff_at(n));
    return SnComplex<F>(fld, 0, std::move(objs), std::move(ds)).normalized();
}

} // namespace detail

/// The four truncation functors; general bounds via conjugation with shift.
template <field F>
SnComplex<F> truncate(Side side, Bound bound, int n, const SnComplex<F>& a) {
    if (n == 0) return detail::truncate_at_zero(side, bound, a);
    return shift(detail::truncate_at_zero(side, bound, shift(a, n)), -n);
}

/// Levelwise map of complexes with commuting squares.
template <field F>
struct ChainMap {
    SnComplex<F> dom, cod;
    int lo = 0;
    std::vector<PairMap<F>> comp;

    PairMap<F> at(int n) const {
        int idx = n - lo;
        if (idx >= 0 && idx < static_cast<int>(comp.size())) return comp[static_cast<std::size_t>(idx)];
        return zero_map(dom.object_at(n), cod.object_at(n));
    }
};

template <field F>
ChainMap<F> chain_map(SnComplex<F> dom, SnComplex<F> cod, int lo, std::vector<PairMap<F>> comp) {
    ChainMap<F> f{std::move(dom), std::move(cod), lo, std::move(comp)};
    int a = std::min(f.dom.lo(), f.cod.lo()) - 1;
    int b = std::max(f.dom.hi(), f.cod.hi()) + 1;
    for (int n = a; n <= b; ++n) {
        auto c = f.at(n);
        if (!(c.dom == f.dom.object_at(n) && c.cod == f.cod.object_at(n)))
            throw shape_mismatch("chain map: component endpoints at degree " + std::to_string(n));
        if (n <= b - 1) {
            auto lhs = compose(f.at(n + 1), f.dom.diff_at(n));
            auto rhs = compose(f.cod.diff_at(n), c);
            if (!(lhs.mat == rhs.mat)) throw not_a_complex("chain map: square at degree " + std::to_string(n));
        }
    }
    return f;
}

template <field F>
ChainMap<F> identity_chain_map(const SnComplex<F>& a) {
    std::vector<PairMap<F>> comp;
    for (int n = a.lo(); n <= a.hi(); ++n) comp.push_back(identity_map(a.object_at(n)));
    return ChainMap<F>{a, a, a.lo(), std::move(comp)};
}

template <field F>
ChainMap<F> zero_chain_map(const SnComplex<F>& a, const SnComplex<F>& b) {
    return ChainMap<F>{a, b, 0, {}};
}

/// Mapping cone: C^n = X^{n+1} (+) Y^n, d(x, y) = (-dx, fx + dy).
template <field F>
SnComplex<F> cone(const ChainMap<F>& f) {
    const F& fld = f.dom.fld();
    int lo = std::min(f.dom.lo() - 1, f.cod.lo());
    int hi = std::max(f.dom.hi() - 1, f.cod.hi());
    if (lo > hi) return SnComplex<F>::zero(fld);
    std::vector<PairSpace<F>> objs;
    std::vector<PairMap<F>> ds;
    for (int n = lo; n <= hi; ++n) objs.push_back(biproduct(f.dom.object_at(n + 1), f.cod.object_at(n)).space);
    for (int n = lo; n < hi; ++n) {
        auto dx = f.dom.diff_at(n + 1);
        auto dy = f.cod.diff_at(n);
        auto top = (-dx.mat).hstack(Matrix<F>::zero(fld, dx.mat.rows(), dy.mat.cols()));
        auto bot = f.at(n + 1).mat.hstack(dy.mat);
        ds.push_back(PairMap<F>{objs[static_cast<std::size_t>(n - lo)],
                                objs[static_cast<std::size_t>(n + 1 - lo)], top.vstack(bot)});
    }
    return SnComplex<F>(fld, lo, std::move(objs), std::move(ds));
}

/// Exact embedding into A2 complexes: levelwise (null row -> ambient row).
template <field F>
A2Complex<F> embed_to_a2(const SnComplex<F>& a) {
    const F& fld = a.fld();
    if (a.empty()) return A2Complex<F>::zero(fld);
    std::vector<A2Rep<F>> objs;
    std::vector<A2Map<F>> ds;
    for (int n = a.lo(); n <= a.hi(); ++n)
        objs.push_back(A2Rep<F>{a.object_at(n).null.basis().transpose()});
    for (int n = a.lo(); n < a.hi(); ++n) {
        auto d = a.diff_at(n);
        auto top = d.cod.null.coords_of(d.mat * d.dom.null.basis().transpose());
        ds.push_back(A2Map<F>{std::move(top), d.mat});
    }
    return A2Complex<F>(fld, a.lo(), std::move(objs), std::move(ds), true);
}

/// Embed a chain map levelwise.
template <field F>
std::vector<A2Map<F>> embed_chain_map(const ChainMap<F>& f, int lo, int hi) {
    std::vector<A2Map<F>> out;
    for (int n = lo; n <= hi; ++n) {
        auto c = f.at(n);
        auto top = c.cod.null.coords_of(c.mat * c.dom.null.basis().transpose());
        out.push_back(A2Map<F>{std::move(top), c.mat});
    }
    return out;
}

/// Quasi-isomorphism test: the embedded mapping cone is exact in every
/// degree (equivalently the induced maps on embedded cohomology are isos).
template <field F>
bool is_quasi_iso(const ChainMap<F>& f) {
    auto c = embed_to_a2(cone(f));
    if (c.empty()) return true;
    for (int n = c.lo() - 1; n <= c.hi() + 1; ++n)
        if (!a2_cohomology(c, n).is_zero()) return false;
    return true;
}

/// Induced map on embedded cohomology at degree n.
template <field F>
A2Map<F> induced_on_cohomology(const ChainMap<F>& f, int n, const A2Cohomology<F>& src,
                               const A2Cohomology<F>& dst) {
    auto c = f.at(n);
    auto top = c.cod.null.coords_of(c.mat * c.dom.null.basis().transpose());
    return a2_induced_on_cohomology(src, dst, A2Map<F>{std::move(top), c.mat});
}

} // namespace qah
