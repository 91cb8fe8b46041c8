#pragma once
/**
 * @file poly.hpp
 * @brief Polynomials as strictly decreasing term lists, plus ring arithmetic.
 */

#include <algorithm>
#include <utility>
#include <vector>

#include "syzygy/ring.hpp"

namespace syzygy {

template <class K>
struct Term {
    Monomial m;
    typename K::Elem c;
};

/// Invariant: terms sorted strictly decreasing in the context order, no zero
/// coefficients.  The zero polynomial is the empty list.
template <class K>
struct Poly {
    std::vector<Term<K>> terms;

    bool is_zero() const { return terms.empty(); }
};

template <class K>
const Term<K>& leading_term(const Poly<K>& f) {
    if (f.is_zero()) throw invariant_error("leading term of zero polynomial");
    return f.terms.front();
}

template <class K>
const Monomial& leading_monomial(const Poly<K>& f) { return leading_term(f).m; }

template <class K>
std::int32_t poly_degree(const Poly<K>& f) {
    std::int32_t d = -1;
    for (const auto& t : f.terms) d = std::max(d, t.m.deg);
    return d;
}

template <class K>
bool is_homogeneous(const Poly<K>& f) {
    for (const auto& t : f.terms)
        if (t.m.deg != f.terms.front().m.deg) return false;
    return true;
}

/// Sort, merge equal monomials, drop zeros; restores the representation
/// invariant from an arbitrary term soup.
template <class K>
Poly<K> poly_normalize(const RingContext<K>& ctx, std::vector<Term<K>> ts) {
    std::sort(ts.begin(), ts.end(), [&](const Term<K>& a, const Term<K>& b) {
        return ctx.cmp(a.m, b.m) > 0;
    });
    Poly<K> r;
    r.terms.reserve(ts.size());
    for (auto& t : ts) {
        if (!r.terms.empty() && r.terms.back().m == t.m) {
            r.terms.back().c = ctx.field.add(r.terms.back().c, t.c);
            if (ctx.field.is_zero(r.terms.back().c)) r.terms.pop_back();
        } else if (!ctx.field.is_zero(t.c)) {
            r.terms.push_back(std::move(t));
        }
    }
    return r;
}

template <class K>
Poly<K> poly_zero() { return Poly<K>{}; }

template <class K>
Poly<K> poly_constant(const RingContext<K>& ctx, typename K::Elem c) {
    Poly<K> r;
    if (!ctx.field.is_zero(c)) r.terms.push_back(Term<K>{monomial_one(ctx.nvars), c});
    return r;
}

template <class K>
Poly<K> poly_one(const RingContext<K>& ctx) { return poly_constant(ctx, ctx.field.one()); }

template <class K>
Poly<K> poly_monomial(const RingContext<K>& ctx, const Monomial& m, typename K::Elem c) {
    Poly<K> r;
    if (!ctx.field.is_zero(c)) r.terms.push_back(Term<K>{m, c});
    return r;
}

template <class K>
Poly<K> poly_var(const RingContext<K>& ctx, int v) {
    return poly_monomial(ctx, monomial_var(ctx.nvars, v), ctx.field.one());
}

template <class K>
bool poly_equal(const RingContext<K>& ctx, const Poly<K>& f, const Poly<K>& g) {
    if (f.terms.size() != g.terms.size()) return false;
    for (std::size_t i = 0; i < f.terms.size(); ++i)
        if (f.terms[i].m != g.terms[i].m || !ctx.field.equal(f.terms[i].c, g.terms[i].c))
            return false;
    return true;
}

template <class K>
Poly<K> add(const RingContext<K>& ctx, const Poly<K>& f, const Poly<K>& g) {
    Poly<K> r;
    r.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        int c = ctx.cmp(f.terms[i].m, g.terms[j].m);
        if (c > 0) {
            r.terms.push_back(f.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(g.terms[j++]);
        } else {
            auto s = ctx.field.add(f.terms[i].c, g.terms[j].c);
            if (!ctx.field.is_zero(s)) r.terms.push_back(Term<K>{f.terms[i].m, s});
            ++i; ++j;
        }
    }
    for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) r.terms.push_back(g.terms[j]);
    return r;
}

template <class K>
Poly<K> neg(const RingContext<K>& ctx, const Poly<K>& f) {
    Poly<K> r = f;
    for (auto& t : r.terms) t.c = ctx.field.neg(t.c);
    return r;
}

template <class K>
Poly<K> sub(const RingContext<K>& ctx, const Poly<K>& f, const Poly<K>& g) {
    return add(ctx, f, neg(ctx, g));
}

template <class K>
Poly<K> scale(const RingContext<K>& ctx, const Poly<K>& f, const typename K::Elem& c) {
    if (ctx.field.is_zero(c)) return poly_zero<K>();
    Poly<K> r = f;
    for (auto& t : r.terms) t.c = ctx.field.mul(t.c, c);
    return r;
}

/// f * (c * m); term order is preserved by multiplication by a monomial.
template <class K>
Poly<K> mul_term(const RingContext<K>& ctx, const Poly<K>& f, const Monomial& m,
                 const typename K::Elem& c) {
    if (ctx.field.is_zero(c)) return poly_zero<K>();
    Poly<K> r;
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms)
        r.terms.push_back(Term<K>{monomial_mul(t.m, m), ctx.field.mul(t.c, c)});
    return r;
}

template <class K>
Poly<K> mul(const RingContext<K>& ctx, const Poly<K>& f, const Poly<K>& g) {
    std::vector<Term<K>> acc;
    acc.reserve(f.terms.size() * g.terms.size());
    for (const auto& a : f.terms)
        for (const auto& b : g.terms)
            acc.push_back(Term<K>{monomial_mul(a.m, b.m), ctx.field.mul(a.c, b.c)});
    return poly_normalize(ctx, std::move(acc));
}

template <class K>
Poly<K> make_monic(const RingContext<K>& ctx, const Poly<K>& f) {
    if (f.is_zero() || ctx.field.is_one(f.terms.front().c)) return f;
    return scale(ctx, f, ctx.field.inv(f.terms.front().c));
}

/// Re-sorts a polynomial into a context with a different monomial order.
template <class K>
Poly<K> reorder(const RingContext<K>& ctx, const Poly<K>& f) {
    return poly_normalize(ctx, f.terms);
}

} // namespace syzygy
