#pragma once
/**
 * @file elimination.hpp
 * @brief R/I as a module over coordinate subrings S_t = k[x_t..x_{n-1}]
 *        after a generic change of coordinates, with the structural checks
 *        that relate the subring tables to the full one.
 *
 * The projection center {x_t = .. = x_{n-1} = 0} must miss the scheme for
 * the module to be finite over S_t; this is detected through pure powers
 * in the initial ideal of I + (x_t..), and failure raises center_error
 * with a re-seed hint.  All tables share the cap reg(R/I) + 1, which is
 * safe because regularity does not change under these finite extensions.
 */

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "syzygy/betti.hpp"
#include "syzygy/gin.hpp"
#include "syzygy/hilbert.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/resolution.hpp"

namespace syzygy {

/// One verified identity or inequality, printable as a check line.
struct CheckReport {
    std::string name;
    bool pass = false;
    bool applicable = true;
    std::string lhs, rhs;
};

inline CheckReport not_applicable(const std::string& name, const std::string& why) {
    return CheckReport{name, true, false, why, ""};
}

inline std::string check_line(const CheckReport& c) {
    const char* verdict = !c.applicable ? "not-applicable" : (c.pass ? "pass" : "fail");
    return "check " + c.name + ' ' + verdict + " lhs=" + c.lhs + " rhs=" + c.rhs;
}

inline bool all_pass(const std::vector<CheckReport>& cs) {
    for (const auto& c : cs)
        if (c.applicable && !c.pass) return false;
    return true;
}

/**
 * The quotient in generic coordinates, sliced for Koszul homology, with
 * memoized Betti tables over every S_t up to the finiteness bound.
 */
template <class K>
class Pushforward {
public:
    Pushforward(const RingContext<K>& ctx, const std::vector<Poly<K>>& gens, int t_max,
                std::uint64_t seed, Budget& budget)
        : ctx_(ctx), t_max_(t_max), seed_(seed), slices_{ctx, 0, {}, {}} {
        if (t_max < 0 || t_max >= ctx.nvars)
            throw invariant_error("pushforward: subring index out of range");
        detail::require_generic_field(ctx);

        reg_ = betti_table(free_resolution(ctx, gens, budget)).reg();
        j_cap_ = reg_ + 1;

        Rng rng(derive_seed(seed, 0xE11));
        change_ = random_change(ctx, rng);
        gb_ = buchberger(ctx, apply_change(ctx, gens, change_), budget);

        if (t_max > 0) {
            auto cut = gb_;
            for (int v = t_max; v < ctx.nvars; ++v) cut.push_back(poly_var(ctx, v));
            auto leads = initial_ideal(ctx, buchberger(ctx, cut, budget));
            for (int v = 0; v < t_max; ++v)
                if (!contains_pure_power(leads, v))
                    throw center_error(
                        "projection center meets the scheme at t=" + std::to_string(t_max) +
                        " (seed " + std::to_string(seed) +
                        "); rerun with a different --seed, and keep t at most the codimension");
        }

        slices_ = build_slices(ctx, gb_, j_cap_ + 1, budget);
    }

    const RingContext<K>& ctx() const { return ctx_; }
    const std::vector<Poly<K>>& groebner() const { return gb_; }
    const ModuleSlices<K>& slices() const { return slices_; }
    int reg() const { return reg_; }
    int j_cap() const { return j_cap_; }
    int t_max() const { return t_max_; }
    std::uint64_t seed() const { return seed_; }

    /// Betti table of R/I over S_t; t = 0 is the full polynomial ring.
    const BettiTable& table(int t) const {
        if (t < 0 || t > t_max_)
            throw invariant_error("pushforward: table index beyond the finiteness check");
        auto it = tables_.find(t);
        if (it == tables_.end()) {
            std::string tag = t == 0 ? "quotient" : "subring t=" + std::to_string(t);
            it = tables_.emplace(t, koszul_betti(slices_, t, j_cap_, tag)).first;
        }
        return it->second;
    }

private:
    RingContext<K> ctx_;
    int t_max_ = 0;
    std::uint64_t seed_ = 0;
    int reg_ = 0, j_cap_ = 0;
    std::vector<std::vector<typename K::Elem>> change_;
    std::vector<Poly<K>> gb_;
    ModuleSlices<K> slices_;
    mutable std::map<int, BettiTable> tables_;
};

/// pd over S_t drops by exactly one per eliminated variable.
template <class K>
std::vector<CheckReport> check_pd_drop(const Pushforward<K>& pf) {
    std::vector<CheckReport> out;
    int base = pf.table(0).pd();
    for (int t = 1; t <= pf.t_max(); ++t) {
        CheckReport c;
        c.name = "pd_drop_t" + std::to_string(t);
        c.lhs = std::to_string(pf.table(t).pd());
        c.rhs = std::to_string(base - t);
        c.pass = pf.table(t).pd() == base - t;
        out.push_back(std::move(c));
    }
    return out;
}

/// Regularity is unchanged by the pushforward.
template <class K>
std::vector<CheckReport> check_reg_equal(const Pushforward<K>& pf) {
    std::vector<CheckReport> out;
    int base = pf.table(0).reg();
    for (int t = 1; t <= pf.t_max(); ++t) {
        CheckReport c;
        c.name = "reg_equal_t" + std::to_string(t);
        c.lhs = std::to_string(pf.table(t).reg());
        c.rhs = std::to_string(base);
        c.pass = pf.table(t).reg() == base;
        out.push_back(std::move(c));
    }
    return out;
}

/// N_{d,p} survives elimination with p lowered by one per variable.
template <class K>
std::vector<CheckReport> check_ndp_descent(const Pushforward<K>& pf, int d) {
    std::vector<CheckReport> out;
    int p0 = ndp_index(pf.table(0), d);
    for (int t = 1; t <= pf.t_max(); ++t) {
        CheckReport c;
        c.name = "n" + std::to_string(d) + "p_descent_t" + std::to_string(t);
        int pt = ndp_index(pf.table(t), d);
        c.lhs = std::to_string(pt);
        c.rhs = ">=" + std::to_string(p0 - t);
        c.pass = pt >= p0 - t;
        out.push_back(std::move(c));
    }
    return out;
}

/// Generators of the pushforward sit in degrees 0 and 1: one in degree 0
/// and t in degree 1.
template <class K>
std::vector<CheckReport> check_generator_degrees(const Pushforward<K>& pf) {
    std::vector<CheckReport> out;
    for (int t = 1; t <= pf.t_max(); ++t) {
        const auto& tab = pf.table(t);
        CheckReport c;
        c.name = "generator_degrees_t" + std::to_string(t);
        c.lhs = std::to_string(tab.at(0, 0)) + "," + std::to_string(tab.at(0, 1));
        c.rhs = "1," + std::to_string(t);
        c.pass = tab.at(0, 0) == 1 && tab.at(0, 1) == t;
        out.push_back(std::move(c));
    }
    return out;
}

/**
 * The linear-strand chain at row d-1: reading the entry one column to the
 * left in each successively smaller subring can only shrink it,
 *   beta^{S_alpha}_{0,d-1} <= beta^{S_{alpha-1}}_{1,d-1} <= ..
 *                          <= beta^{R}_{alpha,d-1}.
 */
template <class K>
std::vector<CheckReport> check_strand_chain(const Pushforward<K>& pf, int alpha, int d) {
    if (alpha < 1 || alpha > pf.t_max())
        throw invariant_error("check_strand_chain: alpha outside the pushforward range");
    std::vector<CheckReport> out;
    if (ndp_index(pf.table(0), d) < alpha) {
        out.push_back(not_applicable("strand_chain_row" + std::to_string(d - 1) + "_a" +
                                         std::to_string(alpha),
                                     "needs the degree-d property through step alpha"));
        return out;
    }
    for (int t = alpha; t >= 1; --t) {
        long long lo = pf.table(t).at(alpha - t, d - 1);
        long long hi = pf.table(t - 1).at(alpha - t + 1, d - 1);
        CheckReport c;
        c.name = "strand_chain_row" + std::to_string(d - 1) + "_a" + std::to_string(alpha) + "_t" +
                 std::to_string(t);
        c.lhs = std::to_string(lo);
        c.rhs = "<=" + std::to_string(hi);
        c.pass = lo <= hi;
        out.push_back(std::move(c));
    }
    return out;
}

/**
 * Freeness over S_e for the codimension e: the module is free iff pd = 0
 * there, and then its rank equals the degree of the scheme.
 */
template <class K>
std::vector<CheckReport> check_freeness(const Pushforward<K>& pf, int t, long long degree,
                                        bool expect_free) {
    const auto& tab = pf.table(t);
    std::vector<CheckReport> out;
    CheckReport c;
    c.name = "free_over_t" + std::to_string(t);
    c.lhs = std::to_string(tab.pd());
    c.rhs = expect_free ? "0" : ">0";
    c.pass = expect_free ? tab.pd() == 0 : tab.pd() > 0;
    out.push_back(std::move(c));
    if (expect_free) {
        CheckReport r;
        r.name = "free_rank_equals_degree_t" + std::to_string(t);
        r.lhs = std::to_string(tab.total_rank());
        r.rhs = std::to_string(degree);
        r.pass = tab.total_rank() == degree;
        out.push_back(std::move(r));
    }
    return out;
}

/// Quadric-generator bound on the pushforward: under the cubic property
/// through step alpha, beta^{S_alpha}_{0,2} <= |alpha - p| (alpha + p + 1)/2
/// where p is the linear-strand index of the full-ring table.
template <class K>
std::vector<CheckReport> check_quadric_generator_bound(const Pushforward<K>& pf, int ndp3,
                                                       long long gl_index) {
    std::vector<CheckReport> out;
    for (int a = 1; a <= pf.t_max(); ++a) {
        std::string tag = "quadric_generator_bound_a" + std::to_string(a);
        if (ndp3 < a) {
            out.push_back(not_applicable(tag, "needs the cubic property through step alpha"));
            continue;
        }
        long long p = gl_index;
        long long bound = ((a > p ? a - p : p - a) * (a + p + 1)) / 2;
        long long got = pf.table(a).at(0, 2);
        out.push_back(CheckReport{tag, got <= bound, true, std::to_string(got),
                                  "<=" + std::to_string(bound)});
    }
    return out;
}

/// Hilbert series agreement across rings: the subring-table numerator times
/// (1-t)^t must reproduce the full-ring numerator.
inline std::vector<CheckReport> check_subring_hilbert(const BettiTable& rtab,
                                                      const BettiTable& stab, int t) {
    ZPoly lhs = betti_to_hilbert_numerator(stab);
    ZPoly shrink = {1, -1};
    for (int i = 0; i < t; ++i) lhs = zpoly_mul(lhs, shrink);
    zpoly_trim(lhs);
    ZPoly rhs = betti_to_hilbert_numerator(rtab);
    std::ostringstream ls, rs;
    for (auto c : lhs) ls << c << ' ';
    for (auto c : rhs) rs << c << ' ';
    return {CheckReport{"subring_hilbert_t" + std::to_string(t), lhs == rhs, true, ls.str(),
                        rs.str()}};
}

/// The cubic layer of the gin of an extremal scheme is every degree-3
/// monomial in the first e variables.
inline std::vector<CheckReport> check_extremal_gin_layer(const std::vector<Monomial>& g,
                                                         int nvars, int e, bool extremal) {
    if (!extremal)
        return {not_applicable("extremal_gin_cubic_layer", "scheme is not of minimal-bound degree")};
    std::vector<Monomial> expect;
    enumerate_monomials(e, 3, expect);
    for (auto& m : expect) {
        m.e.resize(std::size_t(nvars), 0);
    }
    bool ok = true;
    long long count = 0;
    for (const auto& m : expect)
        if (!mono_ideal_member(m, g)) ok = false;
    std::vector<Monomial> mins = minimalize_monomials(g);
    for (const auto& m : mins)
        if (m.deg <= 3) ++count;
    long long want = binom_ll(e + 2, 3);
    for (const auto& m : mins)
        if (m.deg < 3) ok = false;
    return {CheckReport{"extremal_gin_cubic_layer", ok && count == want,
                        true, std::to_string(count) + " minimal gens of degree <= 3",
                        std::to_string(want) + " cubics in the first " + std::to_string(e) +
                            " variables"}};
}

/// The long exact sequence splice at every pivot below t_cap.
template <class K>
std::vector<CheckReport> check_cone_probe(const Pushforward<K>& pf, int t_cap) {
    std::vector<CheckReport> out;
    for (int t = 0; t < t_cap; ++t) {
        auto cells = cone_exactness_probe(pf.slices(), t, pf.j_cap());
        long long bad = 0;
        for (const auto& cell : cells)
            if (!cell.ok) ++bad;
        CheckReport c;
        c.name = "cone_splice_t" + std::to_string(t);
        c.lhs = std::to_string(cells.size() - bad) + " exact";
        c.rhs = std::to_string(cells.size()) + " cells";
        c.pass = bad == 0;
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace syzygy
