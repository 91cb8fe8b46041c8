#pragma once
/**
 * @file ideal_ops.hpp
 * @brief Ideal intersection, quotient, and saturation.
 *
 * Intersections go through one auxiliary elimination variable:
 *   I cap J = ( t*I + (1-t)*J ) cap R,
 * computed with a block order whose first block is the auxiliary variable.
 */

#include <vector>

#include "syzygy/groebner.hpp"

namespace syzygy {

namespace detail {

/// Shift a polynomial into the extended ring with the auxiliary variable
/// prepended as x_0, optionally multiplying by aux^k.
template <class K>
Poly<K> lift_aux(const RingContext<K>& ext, const Poly<K>& f, std::int32_t aux_pow) {
    Poly<K> r;
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        Monomial m;
        m.e.assign(std::size_t(ext.nvars), 0);
        m.e[0] = aux_pow;
        for (std::size_t i = 0; i + 1 < std::size_t(ext.nvars); ++i) m.e[i + 1] = t.m.e[i];
        m.deg = t.m.deg + aux_pow;
        r.terms.push_back(Term<K>{std::move(m), t.c});
    }
    return poly_normalize(ext, std::move(r.terms));
}

template <class K>
Poly<K> drop_aux(const RingContext<K>& ctx, const Poly<K>& f) {
    Poly<K> r;
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        if (t.m.e[0] != 0) throw invariant_error("drop_aux: term still carries the auxiliary variable");
        Monomial m;
        m.e.assign(t.m.e.begin() + 1, t.m.e.end());
        m.deg = t.m.deg;
        r.terms.push_back(Term<K>{std::move(m), t.c});
    }
    return poly_normalize(ctx, std::move(r.terms));
}

} // namespace detail

/**
 * I cap J.  Returns the reduced Groebner basis of the intersection in the
 * caller's order.  Homogeneous inputs give a homogeneous result.
 */
template <class K>
std::vector<Poly<K>> intersect_ideals(const RingContext<K>& ctx,
                                      const std::vector<Poly<K>>& a,
                                      const std::vector<Poly<K>>& b, Budget& budget) {
    RingContext<K> ext{ctx.nvars + 1, block_order(1), ctx.field};
    std::vector<Poly<K>> gens;
    gens.reserve(a.size() + b.size());
    for (const auto& f : a)
        gens.push_back(detail::lift_aux(ext, f, 1)); // t * f
    for (const auto& f : b) {                        // (1 - t) * f
        auto lifted = detail::lift_aux(ext, f, 0);
        gens.push_back(sub(ext, lifted, detail::lift_aux(ext, f, 1)));
    }
    auto gb = buchberger(ext, gens, budget);
    std::vector<Poly<K>> eliminated;
    for (const auto& g : gb)
        if (g.terms.front().m.e[0] == 0) eliminated.push_back(detail::drop_aux(ctx, g));
    return buchberger(ctx, eliminated, budget);
}

/// Exact division g / f; throws if f does not divide g.
template <class K>
Poly<K> exact_divide(const RingContext<K>& ctx, const Poly<K>& g, const Poly<K>& f) {
    if (f.is_zero()) throw invariant_error("exact_divide by zero");
    Poly<K> q;
    Poly<K> r = g;
    const auto& lf = f.terms.front();
    while (!r.is_zero()) {
        const auto& lr = r.terms.front();
        if (!monomial_divides(lf.m, lr.m))
            throw invariant_error("exact_divide: remainder is nonzero");
        Monomial m = monomial_div(lr.m, lf.m);
        auto c = ctx.field.div(lr.c, lf.c);
        q.terms.push_back(Term<K>{m, c});
        r = sub(ctx, r, mul_term(ctx, f, m, c));
    }
    return poly_normalize(ctx, std::move(q.terms));
}

/// Ideal quotient (I : f) = (I cap (f)) / f, as a reduced Groebner basis.
template <class K>
std::vector<Poly<K>> colon(const RingContext<K>& ctx, const std::vector<Poly<K>>& gens,
                           const Poly<K>& f, Budget& budget) {
    auto inter = intersect_ideals(ctx, gens, std::vector<Poly<K>>{f}, budget);
    std::vector<Poly<K>> out;
    out.reserve(inter.size());
    for (const auto& g : inter) out.push_back(exact_divide(ctx, g, f));
    return buchberger(ctx, out, budget);
}

/// (I : f^infinity) by iterated quotients until the chain stabilizes.
template <class K>
std::vector<Poly<K>> saturate(const RingContext<K>& ctx, std::vector<Poly<K>> gens,
                              const Poly<K>& f, Budget& budget) {
    auto cur = buchberger(ctx, gens, budget);
    for (int round = 0; round < 256; ++round) {
        auto next = colon(ctx, cur, f, budget);
        bool grown = false;
        for (const auto& g : next)
            if (!is_member(ctx, g, cur, budget)) { grown = true; break; }
        if (!grown) return cur;
        cur = next;
    }
    throw invariant_error("saturate: quotient chain failed to stabilize");
}

/// Saturation with respect to the irrelevant maximal ideal, via
/// I : m = intersection over v of (I : x_v), iterated to stabilization.
template <class K>
std::vector<Poly<K>> saturate_irrelevant(const RingContext<K>& ctx,
                                         std::vector<Poly<K>> gens, Budget& budget) {
    auto cur = buchberger(ctx, gens, budget);
    for (int round = 0; round < 256; ++round) {
        if (contains_unit(cur)) return cur;
        std::vector<Poly<K>> meet;
        for (int v = 0; v < ctx.nvars; ++v) {
            auto qv = colon(ctx, cur, poly_var(ctx, v), budget);
            meet = (v == 0) ? qv : intersect_ideals(ctx, meet, qv, budget);
        }
        bool grown = false;
        for (const auto& g : meet)
            if (!is_member(ctx, g, cur, budget)) { grown = true; break; }
        if (!grown) return cur;
        cur = buchberger(ctx, meet, budget);
    }
    throw invariant_error("saturate_irrelevant: chain failed to stabilize");
}

} // namespace syzygy
