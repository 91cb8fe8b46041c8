#pragma once
/**
 * @file ek.hpp
 * @brief Stability predicates for monomial ideals and the closed-form
 *        Betti numbers of stable ideals.
 *
 * For a stable ideal J the minimal free resolution is the Eliahou-Kervaire
 * complex, so beta_{i,i+j}(J) = sum over degree-j minimal generators T of
 * binom(m(T), i), with m(T) the largest variable index dividing T.  This
 * gives a resolution-free route to Betti tables of initial ideals.
 */

#include <map>
#include <vector>

#include "syzygy/betti.hpp"
#include "syzygy/monomial_ideal.hpp"

namespace syzygy {

/// Swap one factor x_j of T for x_i.
inline Monomial swap_var(const Monomial& t, int j, int i) {
    Monomial s = t;
    s.e[std::size_t(j)] -= 1;
    s.e[std::size_t(i)] += 1;
    return s;
}

/// Stable: x_i T / x_{m(T)} stays inside for every generator T and i < m(T).
inline bool is_stable(const std::vector<Monomial>& gens) {
    auto mins = minimalize_monomials(gens);
    for (const auto& t : gens) {
        if (t.deg == 0) continue;
        int m = m_index(t);
        for (int i = 0; i < m; ++i)
            if (!mono_ideal_member(swap_var(t, m, i), mins)) return false;
    }
    return true;
}

/**
 * Strongly stable: closed under moving any factor to a smaller variable.
 * The adjacent swap x_j -> x_{j-1} on every generator suffices.  Over a
 * field of characteristic zero this is exactly Borel-fixedness; the big
 * prime fields used here stand in for that case.
 */
inline bool is_borel_fixed(const std::vector<Monomial>& gens) {
    auto mins = minimalize_monomials(gens);
    for (const auto& t : gens)
        for (int j = 1; j < int(t.e.size()); ++j)
            if (t.e[std::size_t(j)] > 0 && !mono_ideal_member(swap_var(t, j, j - 1), mins))
                return false;
    return true;
}

/// Smallest strongly stable ideal containing the given monomials.
inline std::vector<Monomial> borel_closure(const std::vector<Monomial>& gens) {
    std::vector<Monomial> pool = gens;
    std::map<std::vector<std::int32_t>, bool> seen;
    for (const auto& t : pool) seen[t.e] = true;
    for (std::size_t k = 0; k < pool.size(); ++k) {
        Monomial t = pool[k];
        for (int j = 1; j < int(t.e.size()); ++j) {
            if (t.e[std::size_t(j)] == 0) continue;
            Monomial s = swap_var(t, j, j - 1);
            if (!seen[s.e]) {
                seen[s.e] = true;
                pool.push_back(std::move(s));
            }
        }
    }
    return minimalize_monomials(pool);
}

/// Count of minimal generators by largest dividing variable.
inline std::map<int, long long> m_histogram(const std::vector<Monomial>& gens) {
    std::map<int, long long> h;
    for (const auto& t : minimalize_monomials(gens)) h[m_index(t)] += 1;
    return h;
}

/**
 * Betti table of a stable monomial ideal from the generator combinatorics
 * alone; tagged as an ideal table.
 */
inline BettiTable ek_betti(const std::vector<Monomial>& gens) {
    auto mins = minimalize_monomials(gens);
    if (!is_stable(mins)) throw invariant_error("ek_betti: ideal is not stable");
    BettiTable t;
    t.module_tag = "ideal";
    for (const auto& g : mins) {
        int m = g.deg == 0 ? 0 : m_index(g);
        for (int i = 0; i <= m; ++i) t.add(i, g.deg, binom_ll(m, i));
    }
    return t;
}

} // namespace syzygy
