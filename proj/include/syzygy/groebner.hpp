#pragma once
/**
 * @file groebner.hpp
 * @brief Buchberger's algorithm with Gebauer-Moeller pair elimination,
 *        normal forms, reduced bases, and initial ideals.
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "syzygy/poly.hpp"

namespace syzygy {

/// Reduction-step budget shared across a computation.  Each single
/// leading-term cancellation costs one step.
struct Budget {
    long long limit = 10'000'000;
    long long used = 0;

    void spend(long long n = 1) {
        used += n;
        if (used > limit)
            throw budget_error("step budget exhausted (" + std::to_string(limit) +
                               " reduction steps); rerun with a larger --budget");
    }
};

template <class K>
struct Ideal {
    RingContext<K> ctx;
    std::vector<Poly<K>> gens;
};

/**
 * Full normal form: every term of the result is reducible by no element of
 * basis.  The basis need not be a Groebner basis; against one, the result
 * is the canonical representative mod the ideal.
 */
template <class K>
Poly<K> normal_form(const RingContext<K>& ctx, const Poly<K>& f,
                    const std::vector<Poly<K>>& basis, Budget& budget) {
    Poly<K> rem;             // processed tail, fully reduced
    Poly<K> p = f;
    while (!p.is_zero()) {
        const Term<K>& lt = p.terms.front();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const Term<K>& gl = g.terms.front();
            if (!monomial_divides(gl.m, lt.m)) continue;
            budget.spend();
            auto q = ctx.field.div(lt.c, gl.c);
            p = sub(ctx, p, mul_term(ctx, g, monomial_div(lt.m, gl.m), q));
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

template <class K>
Poly<K> normal_form(const RingContext<K>& ctx, const Poly<K>& f,
                    const std::vector<Poly<K>>& basis) {
    Budget b;
    return normal_form(ctx, f, basis, b);
}

template <class K>
Poly<K> s_polynomial(const RingContext<K>& ctx, const Poly<K>& f, const Poly<K>& g) {
    const auto& lf = f.terms.front();
    const auto& lg = g.terms.front();
    Monomial l = monomial_lcm(lf.m, lg.m);
    auto a = mul_term(ctx, f, monomial_div(l, lf.m), ctx.field.inv(lf.c));
    auto b = mul_term(ctx, g, monomial_div(l, lg.m), ctx.field.inv(lg.c));
    return sub(ctx, a, b);
}

namespace detail {

struct SPair {
    int i, j;
    Monomial lcm;
};

/// Deterministic normal selection: lowest lcm degree first, then index order.
inline bool spair_before(const SPair& a, const SPair& b) {
    if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

} // namespace detail

/**
 * Buchberger's algorithm.  Returns the reduced Groebner basis: monic,
 * pairwise top-irreducible, tails fully reduced, sorted by decreasing
 * leading monomial.  Works for inhomogeneous input too (needed by the
 * elimination-variable tricks).
 */
template <class K>
std::vector<Poly<K>> buchberger(const RingContext<K>& ctx,
                                const std::vector<Poly<K>>& gens, Budget& budget) {
    std::vector<Poly<K>> g;
    for (const auto& f : gens)
        if (!f.is_zero()) g.push_back(make_monic(ctx, f));

    std::vector<detail::SPair> pairs;
    auto lm = [&](int i) -> const Monomial& { return g[std::size_t(i)].terms.front().m; };

    // Gebauer-Moeller update on appending element t
    auto update_pairs = [&](int t) {
        const Monomial& mt = lm(t);
        // drop old pairs strictly dominated by the newcomer
        std::vector<detail::SPair> kept;
        kept.reserve(pairs.size());
        for (auto& p : pairs) {
            Monomial tit = monomial_lcm(lm(p.i), mt);
            Monomial tjt = monomial_lcm(lm(p.j), mt);
            if (monomial_divides(mt, p.lcm) && p.lcm != tit && p.lcm != tjt) continue;
            kept.push_back(std::move(p));
        }
        pairs = std::move(kept);

        // new pairs, then the M / F / coprime filters
        std::vector<detail::SPair> fresh;
        fresh.reserve(std::size_t(t));
        for (int i = 0; i < t; ++i)
            fresh.push_back(detail::SPair{i, t, monomial_lcm(lm(i), mt)});
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a] || drop[b]) continue;
                if (fresh[b].lcm == fresh[a].lcm) {
                    if (b < a) drop[a] = true;       // keep the lowest index
                } else if (monomial_divides(fresh[b].lcm, fresh[a].lcm)) {
                    drop[a] = true;
                }
            }
        }
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            if (monomial_coprime(lm(fresh[a].i), mt)) continue; // Buchberger 1
            pairs.push_back(fresh[a]);
        }
    };

    for (int t = 0; t < int(g.size()); ++t) update_pairs(t);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), detail::spair_before);
        detail::SPair p = *it;
        pairs.erase(it);
        auto s = s_polynomial(ctx, g[std::size_t(p.i)], g[std::size_t(p.j)]);
        auto r = normal_form(ctx, s, g, budget);
        if (!r.is_zero()) {
            g.push_back(make_monic(ctx, r));
            update_pairs(int(g.size()) - 1);
        }
    }

    // minimalize: drop elements whose leading monomial another one divides
    std::vector<Poly<K>> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mi = g[i].terms.front().m;
            const Monomial& mj = g[j].terms.front().m;
            if (monomial_divides(mj, mi) && (mj != mi || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    // inter-reduce tails
    std::vector<Poly<K>> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Poly<K>> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = make_monic(ctx, normal_form(ctx, reduced[i], others, budget));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Poly<K>& a, const Poly<K>& b) {
        return ctx.cmp(a.terms.front().m, b.terms.front().m) > 0;
    });
    return reduced;
}

template <class K>
std::vector<Poly<K>> buchberger(const RingContext<K>& ctx, const std::vector<Poly<K>>& gens) {
    Budget b;
    return buchberger(ctx, gens, b);
}

/// Leading monomials of a reduced basis = minimal generators of in(I).
template <class K>
std::vector<Monomial> initial_ideal(const RingContext<K>& ctx, const std::vector<Poly<K>>& gb) {
    std::vector<Monomial> leads;
    leads.reserve(gb.size());
    for (const auto& f : gb) leads.push_back(f.terms.front().m);
    std::sort(leads.begin(), leads.end(), [&](const Monomial& a, const Monomial& b) {
        return monomial_cmp(ctx.order, a, b) > 0;
    });
    return leads;
}

template <class K>
bool is_member(const RingContext<K>& ctx, const Poly<K>& f, const std::vector<Poly<K>>& gb,
               Budget& budget) {
    return normal_form(ctx, f, gb, budget).is_zero();
}

template <class K>
bool ideal_equal(const RingContext<K>& ctx, const std::vector<Poly<K>>& a,
                 const std::vector<Poly<K>>& b, Budget& budget) {
    auto ga = buchberger(ctx, a, budget);
    auto gb = buchberger(ctx, b, budget);
    for (const auto& f : a)
        if (!is_member(ctx, f, gb, budget)) return false;
    for (const auto& f : b)
        if (!is_member(ctx, f, ga, budget)) return false;
    return true;
}

/// Unit ideal test from a Groebner basis.
template <class K>
bool contains_unit(const std::vector<Poly<K>>& gb) {
    for (const auto& f : gb)
        if (!f.is_zero() && f.terms.front().m.deg == 0) return true;
    return false;
}

} // namespace syzygy
