#pragma once
/**
 * @file resolution.hpp
 * @brief Module Groebner bases, syzygy modules, and minimal graded free
 *        resolutions.
 *
 * Syzygies of the columns of a graded matrix are computed in the augmented
 * module R^{s+m}: the graph elements (col_j, e_j) are completed to a module
 * Groebner basis under a position-over-term order whose first s components
 * dominate; basis elements supported entirely in the trailing block generate
 * the syzygy module.  Resolutions are built by iterating syzygies, pruning
 * unit entries after every step so the final complex is minimal.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "syzygy/groebner.hpp"

namespace syzygy {

template <class K>
struct ModTerm {
    int comp;
    Monomial m;
    typename K::Elem c;
};

/// Terms sorted strictly decreasing: lower component first (position over
/// term), ring order inside a component.
template <class K>
struct ModPoly {
    std::vector<ModTerm<K>> terms;
    bool is_zero() const { return terms.empty(); }
};

template <class K>
int mod_term_cmp(const RingContext<K>& ctx, const ModTerm<K>& a, const ModTerm<K>& b) {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return ctx.cmp(a.m, b.m);
}

template <class K>
ModPoly<K> mod_normalize(const RingContext<K>& ctx, std::vector<ModTerm<K>> ts) {
    std::sort(ts.begin(), ts.end(), [&](const ModTerm<K>& a, const ModTerm<K>& b) {
        return mod_term_cmp(ctx, a, b) > 0;
    });
    ModPoly<K> r;
    r.terms.reserve(ts.size());
    for (auto& t : ts) {
        if (!r.terms.empty() && r.terms.back().comp == t.comp && r.terms.back().m == t.m) {
            r.terms.back().c = ctx.field.add(r.terms.back().c, t.c);
            if (ctx.field.is_zero(r.terms.back().c)) r.terms.pop_back();
        } else if (!ctx.field.is_zero(t.c)) {
            r.terms.push_back(std::move(t));
        }
    }
    return r;
}

template <class K>
ModPoly<K> mod_add(const RingContext<K>& ctx, const ModPoly<K>& f, const ModPoly<K>& g) {
    ModPoly<K> r;
    r.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        int c = mod_term_cmp(ctx, f.terms[i], g.terms[j]);
        if (c > 0) r.terms.push_back(f.terms[i++]);
        else if (c < 0) r.terms.push_back(g.terms[j++]);
        else {
            auto s = ctx.field.add(f.terms[i].c, g.terms[j].c);
            if (!ctx.field.is_zero(s)) r.terms.push_back(ModTerm<K>{f.terms[i].comp, f.terms[i].m, s});
            ++i; ++j;
        }
    }
    for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) r.terms.push_back(g.terms[j]);
    return r;
}

template <class K>
ModPoly<K> mod_scale_term(const RingContext<K>& ctx, const ModPoly<K>& f, const Monomial& m,
                          const typename K::Elem& c) {
    ModPoly<K> r;
    if (ctx.field.is_zero(c)) return r;
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms)
        r.terms.push_back(ModTerm<K>{t.comp, monomial_mul(t.m, m), ctx.field.mul(t.c, c)});
    return r;
}

template <class K>
ModPoly<K> mod_sub(const RingContext<K>& ctx, const ModPoly<K>& f, const ModPoly<K>& g) {
    ModPoly<K> ng = g;
    for (auto& t : ng.terms) t.c = ctx.field.neg(t.c);
    return mod_add(ctx, f, ng);
}

template <class K>
ModPoly<K> mod_monic(const RingContext<K>& ctx, const ModPoly<K>& f) {
    if (f.is_zero() || ctx.field.is_one(f.terms.front().c)) return f;
    auto inv = ctx.field.inv(f.terms.front().c);
    ModPoly<K> r = f;
    for (auto& t : r.terms) t.c = ctx.field.mul(t.c, inv);
    return r;
}

/// Full normal form against a set of module elements.
template <class K>
ModPoly<K> mod_normal_form(const RingContext<K>& ctx, const ModPoly<K>& f,
                           const std::vector<ModPoly<K>>& basis, Budget& budget) {
    ModPoly<K> rem, p = f;
    while (!p.is_zero()) {
        const auto& lt = p.terms.front();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const auto& gl = g.terms.front();
            if (gl.comp != lt.comp || !monomial_divides(gl.m, lt.m)) continue;
            budget.spend();
            auto q = ctx.field.div(lt.c, gl.c);
            p = mod_sub(ctx, p, mod_scale_term(ctx, g, monomial_div(lt.m, gl.m), q));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.terms.push_back(lt);
            p.terms.erase(p.terms.begin());
        }
    }
    return rem;
}

/**
 * Buchberger for submodules of a free module.  The coprime shortcut is not
 * sound for modules and is omitted; the lcm chain criteria remain valid.
 * Returns the reduced basis, leading terms sorted decreasing.
 */
template <class K>
std::vector<ModPoly<K>> mod_buchberger(const RingContext<K>& ctx,
                                       const std::vector<ModPoly<K>>& gens, Budget& budget) {
    std::vector<ModPoly<K>> g;
    for (const auto& f : gens)
        if (!f.is_zero()) g.push_back(mod_monic(ctx, f));

    struct MPair { int i, j; Monomial lcm; };
    std::vector<MPair> pairs;
    auto lt = [&](int i) -> const ModTerm<K>& { return g[std::size_t(i)].terms.front(); };

    auto update_pairs = [&](int t) {
        const auto& nt = lt(t);
        std::vector<MPair> kept;
        kept.reserve(pairs.size());
        for (auto& p : pairs) {
            if (lt(p.i).comp == nt.comp && monomial_divides(nt.m, p.lcm)) {
                Monomial tit = monomial_lcm(lt(p.i).m, nt.m);
                Monomial tjt = monomial_lcm(lt(p.j).m, nt.m);
                if (p.lcm != tit && p.lcm != tjt) continue;
            }
            kept.push_back(std::move(p));
        }
        pairs = std::move(kept);

        std::vector<MPair> fresh;
        for (int i = 0; i < t; ++i)
            if (lt(i).comp == nt.comp)
                fresh.push_back(MPair{i, t, monomial_lcm(lt(i).m, nt.m)});
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a] || drop[b]) continue;
                if (fresh[b].lcm == fresh[a].lcm) {
                    if (b < a) drop[a] = true;
                } else if (monomial_divides(fresh[b].lcm, fresh[a].lcm)) {
                    drop[a] = true;
                }
            }
        }
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) pairs.push_back(fresh[a]);
    };

    for (int t = 0; t < int(g.size()); ++t) update_pairs(t);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), [](const MPair& a, const MPair& b) {
            if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
        MPair p = *it;
        pairs.erase(it);
        const auto& fi = g[std::size_t(p.i)];
        const auto& fj = g[std::size_t(p.j)];
        auto a = mod_scale_term(ctx, fi, monomial_div(p.lcm, fi.terms.front().m),
                                ctx.field.inv(fi.terms.front().c));
        auto b = mod_scale_term(ctx, fj, monomial_div(p.lcm, fj.terms.front().m),
                                ctx.field.inv(fj.terms.front().c));
        auto r = mod_normal_form(ctx, mod_sub(ctx, a, b), g, budget);
        if (!r.is_zero()) {
            g.push_back(mod_monic(ctx, r));
            update_pairs(int(g.size()) - 1);
        }
    }

    std::vector<ModPoly<K>> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& ti = g[i].terms.front();
            const auto& tj = g[j].terms.front();
            if (ti.comp == tj.comp && monomial_divides(tj.m, ti.m) && (tj.m != ti.m || j < i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ModPoly<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = mod_monic(ctx, mod_normal_form(ctx, minimal[i], others, budget));
    }
    std::sort(minimal.begin(), minimal.end(), [&](const ModPoly<K>& x, const ModPoly<K>& y) {
        return mod_term_cmp(ctx, x.terms.front(), y.terms.front()) > 0;
    });
    return minimal;
}

/// Graded matrix of homogeneous entries; entry (r,c) has degree
/// src_deg[c] - tgt_deg[r] when nonzero.
template <class K>
struct GradedMatrix {
    std::vector<int> tgt_deg, src_deg;
    std::vector<std::vector<Poly<K>>> a; // a[row][col]

    int rows() const { return int(tgt_deg.size()); }
    int cols() const { return int(src_deg.size()); }
};

template <class K>
void assert_graded(const RingContext<K>& ctx, const GradedMatrix<K>& m, const char* where) {
    (void)ctx;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const auto& f = m.a[std::size_t(r)][std::size_t(c)];
            if (f.is_zero()) continue;
            if (!is_homogeneous(f) || poly_degree(f) != m.src_deg[std::size_t(c)] - m.tgt_deg[std::size_t(r)])
                throw invariant_error(std::string(where) + ": entry not homogeneous of the expected degree");
        }
}

/**
 * Generators of the syzygy module of the columns of d.  Columns of the
 * result are homogeneous with respect to d.src_deg; the result's tgt_deg
 * is d.src_deg.
 */
template <class K>
GradedMatrix<K> syzygy_module(const RingContext<K>& ctx, const GradedMatrix<K>& d, Budget& budget) {
    int s = d.rows(), m = d.cols();
    std::vector<ModPoly<K>> gens;
    gens.reserve(std::size_t(m));
    for (int j = 0; j < m; ++j) {
        std::vector<ModTerm<K>> ts;
        for (int r = 0; r < s; ++r)
            for (const auto& t : d.a[std::size_t(r)][std::size_t(j)].terms)
                ts.push_back(ModTerm<K>{r, t.m, t.c});
        ts.push_back(ModTerm<K>{s + j, monomial_one(ctx.nvars), ctx.field.one()});
        gens.push_back(mod_normalize(ctx, std::move(ts)));
    }
    auto gb = mod_buchberger(ctx, gens, budget);

    GradedMatrix<K> syz;
    syz.tgt_deg = d.src_deg;
    for (const auto& g : gb) {
        if (g.terms.front().comp < s) continue; // carries a graph component
        std::vector<Poly<K>> col(static_cast<std::size_t>(m));
        int coldeg = -1;
        for (const auto& t : g.terms) {
            int j = t.comp - s;
            col[std::size_t(j)].terms.push_back(Term<K>{t.m, t.c});
            int deg = t.m.deg + d.src_deg[std::size_t(j)];
            if (coldeg < 0) coldeg = deg;
            else if (coldeg != deg) throw invariant_error("syzygy_module: inhomogeneous syzygy");
        }
        for (auto& f : col) f = poly_normalize(ctx, std::move(f.terms));
        syz.src_deg.push_back(coldeg);
        if (syz.a.empty()) syz.a.assign(std::size_t(m), {});
        for (int r = 0; r < m; ++r) syz.a[std::size_t(r)].push_back(std::move(col[std::size_t(r)]));
    }
    if (syz.a.empty()) syz.a.assign(std::size_t(m), {});
    return syz;
}

/// Minimal graded free resolution: d[0] : F_1 -> F_0, d[k] : F_{k+1} -> F_k.
template <class K>
struct FreeResolution {
    RingContext<K> ctx;
    std::vector<GradedMatrix<K>> d;
    bool minimal = false;

    int length() const { return int(d.size()); } // pd of the resolved module
};

namespace detail {

template <class K>
bool find_unit(const RingContext<K>& ctx, const GradedMatrix<K>& m, int& ur, int& uc) {
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r) {
            const auto& f = m.a[std::size_t(r)][std::size_t(c)];
            if (!f.is_zero() && m.src_deg[std::size_t(c)] == m.tgt_deg[std::size_t(r)]) {
                (void)ctx;
                ur = r; uc = c;
                return true;
            }
        }
    return false;
}

template <class K>
void delete_row(GradedMatrix<K>& m, int r) {
    m.tgt_deg.erase(m.tgt_deg.begin() + r);
    m.a.erase(m.a.begin() + r);
}

template <class K>
void delete_col(GradedMatrix<K>& m, int c) {
    m.src_deg.erase(m.src_deg.begin() + c);
    for (auto& row : m.a) row.erase(row.begin() + c);
}

/**
 * Cancel the unit entry of d[k] at (r,c): Gaussian update of d[k], column r
 * deleted from d[k-1], row c deleted from d[k+1].  Rows of d[k+1] other
 * than the deleted one are untouched because the basis change only mixes
 * the cancelled generator into the others.
 */
template <class K>
void cancel_unit(const RingContext<K>& ctx, std::vector<GradedMatrix<K>>& ds, int k, int r, int c) {
    GradedMatrix<K>& m = ds[std::size_t(k)];
    const Poly<K> pivot = m.a[std::size_t(r)][std::size_t(c)];
    auto u_inv = ctx.field.inv(pivot.terms.front().c);
    for (int j = 0; j < m.cols(); ++j) {
        if (j == c) continue;
        const Poly<K>& top = m.a[std::size_t(r)][std::size_t(j)];
        if (top.is_zero()) continue;
        auto lam = scale(ctx, top, u_inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const Poly<K>& left = m.a[std::size_t(i)][std::size_t(c)];
            if (left.is_zero()) continue;
            m.a[std::size_t(i)][std::size_t(j)] =
                sub(ctx, m.a[std::size_t(i)][std::size_t(j)], mul(ctx, left, lam));
        }
    }
    delete_row(m, r);
    delete_col(m, c);
    if (k > 0) delete_col(ds[std::size_t(k - 1)], r);
    if (k + 1 < int(ds.size())) delete_row(ds[std::size_t(k + 1)], c);
}

template <class K>
void prune_units(const RingContext<K>& ctx, std::vector<GradedMatrix<K>>& ds) {
    bool again = true;
    while (again) {
        again = false;
        for (int k = 0; k < int(ds.size()); ++k) {
            int r, c;
            while (find_unit(ctx, ds[std::size_t(k)], r, c)) {
                cancel_unit(ctx, ds, k, r, c);
                again = true;
            }
        }
    }
}

} // namespace detail

/// d_i o d_{i+1} = 0 across the complex.
template <class K>
void assert_complex(const RingContext<K>& ctx, const std::vector<GradedMatrix<K>>& ds,
                    const char* where) {
    for (std::size_t k = 0; k + 1 < ds.size(); ++k) {
        const auto& A = ds[k];
        const auto& B = ds[k + 1];
        if (A.cols() != B.rows())
            throw invariant_error(std::string(where) + ": rank mismatch between steps");
        for (int i = 0; i < A.rows(); ++i)
            for (int j = 0; j < B.cols(); ++j) {
                Poly<K> s;
                for (int t = 0; t < A.cols(); ++t)
                    s = add(ctx, s,
                            mul(ctx, A.a[std::size_t(i)][std::size_t(t)], B.a[std::size_t(t)][std::size_t(j)]));
                if (!s.is_zero())
                    throw invariant_error(std::string(where) + ": d o d != 0");
            }
    }
}

/**
 * Minimal free resolution of R/I for the homogeneous ideal with the given
 * generators.  Unit entries are pruned after every syzygy step, so the
 * final complex is minimal and its length is pd(R/I) <= nvars.
 */
template <class K>
FreeResolution<K> free_resolution(const RingContext<K>& ctx, const std::vector<Poly<K>>& gens,
                                  Budget& budget) {
    FreeResolution<K> res{ctx, {}, false};

    GradedMatrix<K> d1;
    d1.tgt_deg = {0};
    std::vector<Poly<K>> cols;
    for (const auto& g : gens)
        if (!g.is_zero()) {
            if (!is_homogeneous(g))
                throw invariant_error("free_resolution: inhomogeneous generator");
            if (poly_degree(g) == 0)
                throw invariant_error("free_resolution: unit ideal");
            cols.push_back(make_monic(ctx, g));
        }
    std::sort(cols.begin(), cols.end(), [&](const Poly<K>& x, const Poly<K>& y) {
        if (poly_degree(x) != poly_degree(y)) return poly_degree(x) < poly_degree(y);
        return ctx.cmp(x.terms.front().m, y.terms.front().m) > 0;
    });
    d1.a.resize(1);
    for (auto& g : cols) {
        d1.src_deg.push_back(poly_degree(g));
        d1.a[0].push_back(std::move(g));
    }
    if (d1.cols() == 0) { res.minimal = true; return res; } // zero ideal
    res.d.push_back(std::move(d1));

    while (true) {
        if (int(res.d.size()) > ctx.nvars + 2)
            throw invariant_error("free_resolution: length exceeds the syzygy theorem bound");
        auto syz = syzygy_module(ctx, res.d.back(), budget);
        if (syz.cols() == 0) break;
        res.d.push_back(std::move(syz));
        detail::prune_units(ctx, res.d);
        if (!res.d.empty() && res.d.back().cols() == 0) {
            res.d.pop_back();
            break;
        }
        if (res.d.empty()) break; // everything cancelled: free module
    }

    detail::prune_units(ctx, res.d);
    assert_complex(ctx, res.d, "free_resolution");
    for (const auto& m : res.d) assert_graded(ctx, m, "free_resolution");
    if (int(res.d.size()) > ctx.nvars + 1)
        throw invariant_error("free_resolution: minimal length exceeds nvars");
    res.minimal = true;
    return res;
}

template <class K>
FreeResolution<K> free_resolution(const RingContext<K>& ctx, const std::vector<Poly<K>>& gens) {
    Budget b;
    return free_resolution(ctx, gens, b);
}

} // namespace syzygy
