#pragma once
/**
 * @file hilbert.hpp
 * @brief Hilbert series of R/I via the initial ideal: numerator over
 *        (1-t)^n, Krull dimension, codimension, and degree.
 *
 * The numerator recursion pivots on a frequently occurring variable:
 *   num(J) = num(J + (x_v)) + t * num(J : x_v),
 * with the pairwise-coprime case closed by the product formula.
 */

#include <cstdint>
#include <numeric>
#include <vector>

#include "syzygy/groebner.hpp"
#include "syzygy/monomial_ideal.hpp"

namespace syzygy {

using ZPoly = std::vector<long long>; // coefficients of a polynomial in t

inline void zpoly_add(ZPoly& a, const ZPoly& b, int shift = 0) {
    if (a.size() < b.size() + std::size_t(shift)) a.resize(b.size() + std::size_t(shift), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + std::size_t(shift)] += b[i];
}

inline ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

inline long long zpoly_at_one(const ZPoly& a) {
    return std::accumulate(a.begin(), a.end(), 0LL);
}

inline void zpoly_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Exact division by (1 - t); precondition a(1) == 0.
inline ZPoly zpoly_div_one_minus_t(const ZPoly& a) {
    ZPoly q;
    if (a.empty()) return q;
    q.assign(a.size() - 1, 0);
    long long run = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        run += a[i];
        q[i] = run;
    }
    return q;
}

namespace detail {

inline ZPoly hilbert_numerator_rec(std::vector<Monomial> gens) {
    if (gens.empty()) return {1};

    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!monomial_coprime(gens[i], gens[j])) coprime = false;
    if (coprime) {
        ZPoly r = {1};
        for (const auto& g : gens) {
            ZPoly f(std::size_t(g.deg) + 1, 0);
            f[0] = 1;
            f[std::size_t(g.deg)] -= 1;
            r = zpoly_mul(r, f);
        }
        return r;
    }

    // pivot on the variable hitting the most generators
    std::size_t n = gens[0].e.size();
    std::vector<int> freq(n, 0);
    for (const auto& g : gens)
        for (std::size_t v = 0; v < n; ++v)
            if (g.e[v] > 0) ++freq[v];
    std::size_t pivot = 0;
    for (std::size_t v = 1; v < n; ++v)
        if (freq[v] > freq[pivot]) pivot = v;

    Monomial xv = monomial_var(int(n), int(pivot));
    std::vector<Monomial> plus;
    plus.push_back(xv);
    for (const auto& g : gens)
        if (g.e[pivot] == 0) plus.push_back(g);
    ZPoly a = hilbert_numerator_rec(minimalize_monomials(std::move(plus)));
    ZPoly b = hilbert_numerator_rec(mono_colon(gens, xv));
    zpoly_add(a, b, 1);
    return a;
}

} // namespace detail

/// Numerator h(t) of HS_{R/J}(t) = h(t)/(1-t)^n for the monomial ideal J.
inline ZPoly hilbert_numerator(const std::vector<Monomial>& leads) {
    auto h = detail::hilbert_numerator_rec(minimalize_monomials(leads));
    zpoly_trim(h);
    return h;
}

struct HilbertData {
    ZPoly numerator;      // h(t), over (1-t)^nvars
    ZPoly reduced;        // h~(t) after cancelling every (1-t) factor
    int nvars = 0;
    int krull_dim = 0;    // of R/I (affine cone)
    int codim = 0;        // nvars - krull_dim
    long long degree = 0; // h~(1); for krull_dim 1 the length of the finite scheme
};

/**
 * Hilbert data of R/I from a Groebner basis.  The unit ideal is rejected:
 * an empty scheme has no Hilbert data here.
 */
template <class K>
HilbertData hilbert_data(const RingContext<K>& ctx, const std::vector<Poly<K>>& gb) {
    if (contains_unit(gb))
        throw invariant_error("hilbert_data: unit ideal (empty scheme)");
    auto leads = initial_ideal(ctx, gb);
    HilbertData hd;
    hd.nvars = ctx.nvars;
    hd.numerator = hilbert_numerator(leads);
    hd.reduced = hd.numerator;
    int cancelled = 0;
    while (!hd.reduced.empty() && zpoly_at_one(hd.reduced) == 0) {
        hd.reduced = zpoly_div_one_minus_t(hd.reduced);
        zpoly_trim(hd.reduced);
        ++cancelled;
    }
    hd.krull_dim = ctx.nvars - cancelled;
    hd.codim = cancelled;
    hd.degree = zpoly_at_one(hd.reduced);
    return hd;
}

inline long long binom_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Hilbert function value dim_k (R/I)_d from the numerator.
inline long long hilbert_function(const HilbertData& hd, int d) {
    long long v = 0;
    for (std::size_t k = 0; k < hd.numerator.size(); ++k)
        v += hd.numerator[k] * binom_ll(hd.nvars - 1 + d - (long long)k, hd.nvars - 1);
    return v;
}

} // namespace syzygy
