#pragma once
/**
 * @file monomial_ideal.hpp
 * @brief Combinatorics of monomial ideals: minimal generators, membership,
 *        colon and variable saturation, degree slices, standard monomials.
 *
 * A monomial ideal is passed around as its generator list; routines that
 * promise minimality say so.
 */

#include <algorithm>
#include <vector>

#include "syzygy/ring.hpp"

namespace syzygy {

inline bool mono_ideal_member(const Monomial& m, const std::vector<Monomial>& gens) {
    for (const auto& g : gens)
        if (monomial_divides(g, m)) return true;
    return false;
}

/// Keep only the minimal generators (divisibility-minimal, duplicates removed).
inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.e < b.e;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& m : gens)
        if (!mono_ideal_member(m, out)) out.push_back(m);
    return out;
}

/// (J : m), minimal generators.
inline std::vector<Monomial> mono_colon(const std::vector<Monomial>& gens, const Monomial& m) {
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens)
        out.push_back(monomial_div(g, monomial_gcd(g, m)));
    return minimalize_monomials(std::move(out));
}

/// (J : x_v^infinity): strip every x_v factor, i.e. substitute x_v -> 1.
inline std::vector<Monomial> mono_saturate_var(const std::vector<Monomial>& gens, int v) {
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (auto g : gens) {
        g.deg -= g.e[std::size_t(v)];
        g.e[std::size_t(v)] = 0;
        out.push_back(std::move(g));
    }
    return minimalize_monomials(std::move(out));
}

inline bool contains_pure_power(const std::vector<Monomial>& gens, int v) {
    for (const auto& g : gens) {
        if (g.e[std::size_t(v)] == 0) continue;
        bool pure = true;
        for (std::size_t i = 0; i < g.e.size(); ++i)
            if (int(i) != v && g.e[i] != 0) { pure = false; break; }
        if (pure) return true;
    }
    return false;
}

/// All monomials of total degree d in n variables.
inline void enumerate_monomials(int n, int d, std::vector<Monomial>& out) {
    if (n == 0) return;
    std::vector<std::int32_t> work(std::size_t(n), 0);
    auto rec = [&](auto&& self, int at, int left) -> void {
        if (at == n - 1) {
            work[std::size_t(at)] = std::int32_t(left);
            Monomial m;
            m.e = work;
            m.deg = std::int32_t(d);
            out.push_back(std::move(m));
            work[std::size_t(at)] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {
            work[std::size_t(at)] = std::int32_t(k);
            self(self, at + 1, left - k);
        }
        work[std::size_t(at)] = 0;
    };
    rec(rec, 0, d);
}

/// Standard monomials of degree d: monomials outside the monomial ideal.
inline std::vector<Monomial> std_monomials(const std::vector<Monomial>& leads, int n, int d) {
    std::vector<Monomial> all;
    enumerate_monomials(n, d, all);
    std::vector<Monomial> out;
    for (auto& m : all)
        if (!mono_ideal_member(m, leads)) out.push_back(std::move(m));
    return out;
}

/// Largest index of a variable dividing T; error on T = 1.
inline int m_index(const Monomial& t) {
    for (std::size_t i = t.e.size(); i-- > 0;)
        if (t.e[i] > 0) return int(i);
    throw invariant_error("m_index of the unit monomial is undefined");
}

} // namespace syzygy
