#pragma once
/**
 * @file gin.hpp
 * @brief Generic initial ideals via seeded random coordinate changes.
 *
 * gin(I) is computed as in(g.I) for a random invertible change of
 * coordinates g.  Two independently drawn changes must agree and the
 * result must be strongly stable before it is accepted; disagreement
 * redraws, up to a bounded number of trials.  Small coefficient fields
 * cannot play the generic role and are rejected.
 */

#include <string>
#include <vector>

#include "syzygy/ek.hpp"
#include "syzygy/groebner.hpp"
#include "syzygy/linalg.hpp"
#include "syzygy/rng.hpp"

namespace syzygy {

/// Random invertible n x n matrix over the coefficient field.
template <class K>
std::vector<std::vector<typename K::Elem>> random_change(const RingContext<K>& ctx, Rng& rng) {
    int n = ctx.nvars;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::vector<typename K::Elem>> a(static_cast<std::size_t>(n));
        for (auto& row : a) {
            row.reserve(std::size_t(n));
            for (int j = 0; j < n; ++j) row.push_back(ctx.field.random(rng));
        }
        DenseMat<K> m(ctx.field, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = a[std::size_t(i)][std::size_t(j)];
        if (rank(ctx.field, m) == n) return a;
    }
    throw invariant_error("random_change: could not draw an invertible matrix");
}

/// Substitute x_i -> sum_j a[i][j] x_j.
template <class K>
Poly<K> apply_change(const RingContext<K>& ctx, const Poly<K>& f,
                     const std::vector<std::vector<typename K::Elem>>& a) {
    std::vector<Poly<K>> images;
    images.reserve(std::size_t(ctx.nvars));
    for (int i = 0; i < ctx.nvars; ++i) {
        std::vector<Term<K>> ts;
        for (int j = 0; j < ctx.nvars; ++j)
            if (!ctx.field.is_zero(a[std::size_t(i)][std::size_t(j)]))
                ts.push_back(Term<K>{monomial_var(ctx.nvars, j), a[std::size_t(i)][std::size_t(j)]});
        images.push_back(poly_normalize(ctx, std::move(ts)));
    }
    Poly<K> out;
    for (const auto& t : f.terms) {
        Poly<K> prod = poly_constant(ctx, t.c);
        for (int v = 0; v < ctx.nvars; ++v)
            for (int k = 0; k < t.m.e[std::size_t(v)]; ++k)
                prod = mul(ctx, prod, images[std::size_t(v)]);
        out = add(ctx, out, prod);
    }
    return out;
}

template <class K>
std::vector<Poly<K>> apply_change(const RingContext<K>& ctx, const std::vector<Poly<K>>& gens,
                                  const std::vector<std::vector<typename K::Elem>>& a) {
    std::vector<Poly<K>> out;
    out.reserve(gens.size());
    for (const auto& f : gens) out.push_back(apply_change(ctx, f, a));
    return out;
}

namespace detail {

inline bool monomials_equal(std::vector<Monomial> a, std::vector<Monomial> b) {
    auto key = [](const Monomial& m) { return m.e; };
    std::sort(a.begin(), a.end(), [&](const Monomial& x, const Monomial& y) { return key(x) < key(y); });
    std::sort(b.begin(), b.end(), [&](const Monomial& x, const Monomial& y) { return key(x) < key(y); });
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].e != b[i].e) return false;
    return true;
}

template <class K>
void require_generic_field(const RingContext<K>& ctx) {
    if (!ctx.field.large_enough_for_generic())
        throw invariant_error("gin: coefficient field too small for generic coordinate changes");
}

} // namespace detail

/**
 * Generic initial ideal of the given homogeneous ideal, as the minimal
 * generators of in(g.I).  Deterministic in the seed.
 */
template <class K>
std::vector<Monomial> gin(const RingContext<K>& ctx, const std::vector<Poly<K>>& gens,
                          std::uint64_t seed, Budget& budget, int max_trials = 5) {
    detail::require_generic_field(ctx);
    for (int trial = 0; trial < max_trials; ++trial) {
        Rng rng_a(derive_seed(seed, std::uint64_t(trial), 1));
        Rng rng_b(derive_seed(seed, std::uint64_t(trial), 2));
        auto in_of = [&](Rng& rng) {
            auto a = random_change(ctx, rng);
            auto gb = buchberger(ctx, apply_change(ctx, gens, a), budget);
            return minimalize_monomials(initial_ideal(ctx, gb));
        };
        auto ja = in_of(rng_a);
        auto jb = in_of(rng_b);
        if (!detail::monomials_equal(ja, jb)) continue;
        if (!is_borel_fixed(ja)) continue;
        std::sort(ja.begin(), ja.end(),
                  [&](const Monomial& x, const Monomial& y) { return ctx.cmp(x, y) > 0; });
        return ja;
    }
    throw invariant_error("gin: unstable after " + std::to_string(max_trials) +
                          " trials; rerun with a different --seed");
}

template <class K>
std::vector<Monomial> gin(const RingContext<K>& ctx, const std::vector<Poly<K>>& gens,
                          std::uint64_t seed) {
    Budget b;
    return gin(ctx, gens, seed, b);
}

/**
 * gin of the saturated generic linear section with coordinate ring
 * k[x_0..x_k], read off combinatorially: generators meeting x_{k+1}.. die
 * in the section, and saturating strips every x_k factor.
 */
inline std::vector<Monomial> section_gin(const std::vector<Monomial>& g, int k) {
    std::vector<Monomial> out;
    for (const auto& t : g) {
        bool survives = true;
        for (int v = k + 1; v < int(t.e.size()); ++v)
            if (t.e[std::size_t(v)] > 0) { survives = false; break; }
        if (!survives) continue;
        Monomial s;
        s.e.assign(t.e.begin(), t.e.begin() + (k + 1));
        s.e[std::size_t(k)] = 0;
        s.deg = 0;
        for (auto e : s.e) s.deg += e;
        out.push_back(std::move(s));
    }
    return minimalize_monomials(out);
}

} // namespace syzygy
