#pragma once
/**
 * @file ring.hpp
 * @brief Monomials, monomial orders, and the ring context.
 *
 * Monomials are dense exponent vectors with a cached total degree.  Three
 * order families are provided: graded reverse lexicographic (the default
 * everywhere), lexicographic, and a two-block elimination order block(t)
 * whose first block {x_0..x_{t-1}} dominates, grevlex inside each block.
 */

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "syzygy/errors.hpp"

namespace syzygy {

struct Monomial {
    std::vector<std::int32_t> e;
    std::int32_t deg = 0;

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial monomial_one(int nvars) {
    Monomial m;
    m.e.assign(std::size_t(nvars), 0);
    m.deg = 0;
    return m;
}

inline Monomial make_monomial(std::vector<std::int32_t> exps) {
    Monomial m;
    m.deg = std::accumulate(exps.begin(), exps.end(), std::int32_t(0));
    m.e = std::move(exps);
    return m;
}

inline Monomial monomial_var(int nvars, int v, std::int32_t power = 1) {
    Monomial m = monomial_one(nvars);
    m.e[std::size_t(v)] = power;
    m.deg = power;
    return m;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    r.deg = a.deg + b.deg;
    return r;
}

inline bool monomial_divides(const Monomial& d, const Monomial& m) {
    if (d.deg > m.deg) return false;
    for (std::size_t i = 0; i < d.e.size(); ++i)
        if (d.e[i] > m.e[i]) return false;
    return true;
}

inline Monomial monomial_div(const Monomial& m, const Monomial& d) {
    Monomial r = m;
    for (std::size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] -= d.e[i];
        if (r.e[i] < 0) throw invariant_error("monomial_div: not divisible");
    }
    r.deg = m.deg - d.deg;
    return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg = 0;
    for (std::size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

inline Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg = 0;
    for (std::size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] = std::min(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

inline bool monomial_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

enum class OrderKind { grevlex, lex, block };

struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    int block_split = 0; // block order: {x_0..x_{split-1}} > {x_split..}

    std::string name() const {
        switch (kind) {
            case OrderKind::grevlex: return "grevlex";
            case OrderKind::lex:     return "lex";
            case OrderKind::block:   return "block(" + std::to_string(block_split) + ")";
        }
        return "?";
    }
};

inline MonomialOrder grevlex_order() { return {OrderKind::grevlex, 0}; }
inline MonomialOrder lex_order() { return {OrderKind::lex, 0}; }
inline MonomialOrder block_order(int split) { return {OrderKind::block, split}; }

/// grevlex on the variable window [lo, hi): higher degree wins, ties broken
/// by the last nonzero exponent difference being negative.
inline int cmp_grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::int32_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        std::int32_t d = a.e[i] - b.e[i];
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

inline int cmp_lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        std::int32_t d = a.e[i] - b.e[i];
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

/// Three-way comparison: positive when a > b in the given order.
inline int monomial_cmp(const MonomialOrder& ord, const Monomial& a, const Monomial& b) {
    std::size_t n = a.e.size();
    switch (ord.kind) {
        case OrderKind::grevlex:
            return cmp_grevlex_range(a, b, 0, n);
        case OrderKind::lex:
            return cmp_lex_range(a, b, 0, n);
        case OrderKind::block: {
            int r = cmp_grevlex_range(a, b, 0, std::size_t(ord.block_split));
            if (r != 0) return r;
            return cmp_grevlex_range(a, b, std::size_t(ord.block_split), n);
        }
    }
    return 0;
}

/**
 * Ring context: number of variables x_0..x_{N}, the coefficient field, and
 * the monomial order.  Passed explicitly to every operation.
 */
template <class K>
struct RingContext {
    int nvars = 0; // N + 1 for P^N
    MonomialOrder order;
    K field;

    int cmp(const Monomial& a, const Monomial& b) const { return monomial_cmp(order, a, b); }
};

template <class K>
RingContext<K> with_order(const RingContext<K>& ctx, MonomialOrder ord) {
    return RingContext<K>{ctx.nvars, ord, ctx.field};
}

} // namespace syzygy
