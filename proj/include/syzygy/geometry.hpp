#pragma once
/**
 * @file geometry.hpp
 * @brief Scheme constructors (determinantal ideals, points, unions,
 *        distractions), linear sections with their lengths, scheme profiles,
 *        and the degree / multisecant checkers.
 *
 * A linear section X cap L^alpha is realized by adding N - alpha linear
 * forms to the ideal and saturating; its length is the Hilbert degree of the
 * saturated section.  The geometric degree of X is the common length of
 * several generic L^e sections, cross-checked against the Hilbert degree.
 */

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/betti.hpp"
#include "syzygy/elimination.hpp"
#include "syzygy/hilbert.hpp"
#include "syzygy/ideal_ops.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/linalg.hpp"
#include "syzygy/resolution.hpp"
#include "syzygy/rng.hpp"

namespace syzygy {

/* ------------------------------------------------------------------ */
/* constructors                                                        */
/* ------------------------------------------------------------------ */

template <class K>
std::vector<std::vector<Poly<K>>> hankel_matrix(const RingContext<K>& ctx, int rows, int cols) {
    if (rows < 1 || cols < 1 || rows + cols - 1 > ctx.nvars)
        throw invariant_error("hankel_matrix: shape does not fit the ring");
    std::vector<std::vector<Poly<K>>> m;
    for (int i = 0; i < rows; ++i) {
        std::vector<Poly<K>> row;
        for (int j = 0; j < cols; ++j) row.push_back(poly_var(ctx, i + j));
        m.push_back(std::move(row));
    }
    return m;
}

template <class K>
Poly<K> poly_det(const RingContext<K>& ctx, const std::vector<std::vector<Poly<K>>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    Poly<K> det;
    for (int j = 0; j < n; ++j) {
        std::vector<std::vector<Poly<K>>> minor;
        for (int i = 1; i < n; ++i) {
            std::vector<Poly<K>> row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
            minor.push_back(std::move(row));
        }
        auto term = mul(ctx, m[0][static_cast<std::size_t>(j)], poly_det(ctx, minor));
        det = (j % 2 == 0) ? add(ctx, det, term) : sub(ctx, det, term);
    }
    return det;
}

template <class K>
std::vector<Poly<K>> matrix_minors(const RingContext<K>& ctx,
                                   const std::vector<std::vector<Poly<K>>>& m, int size) {
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    if (size < 1 || size > rows || size > cols)
        throw invariant_error("matrix_minors: size exceeds the matrix");
    std::vector<Poly<K>> out;
    for (const auto& ri : detail::var_subsets(0, rows, size))
        for (const auto& cj : detail::var_subsets(0, cols, size)) {
            std::vector<std::vector<Poly<K>>> minor;
            for (int i : ri) {
                std::vector<Poly<K>> row;
                for (int j : cj) row.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                minor.push_back(std::move(row));
            }
            auto d = poly_det(ctx, minor);
            if (!d.is_zero()) out.push_back(std::move(d));
        }
    return out;
}

template <class K>
std::vector<Poly<K>> hankel_minors(const RingContext<K>& ctx, int rows, int cols, int size) {
    return matrix_minors(ctx, hankel_matrix(ctx, rows, cols), size);
}

/// 2x2 minors of the 2xd Hankel matrix: the degree-d rational normal curve.
template <class K>
std::vector<Poly<K>> rational_normal_curve(const RingContext<K>& ctx, int d) {
    if (ctx.nvars != d + 1)
        throw invariant_error("rational_normal_curve: ambient ring must have d+1 variables");
    return hankel_minors(ctx, 2, d, 2);
}

template <class K>
Poly<K> random_form(const RingContext<K>& ctx, int degree, Rng& rng) {
    std::vector<Monomial> mons;
    enumerate_monomials(ctx.nvars, degree, mons);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Term<K>> terms;
        for (const auto& m : mons) terms.push_back({m, ctx.field.random(rng)});
        auto f = poly_normalize(ctx, std::move(terms));
        if (!f.is_zero()) return f;
    }
    throw invariant_error("random_form: zero draws exhausted");
}

/// Generic forms of the given degrees, certified to cut codim = count.
template <class K>
std::vector<Poly<K>> complete_intersection(const RingContext<K>& ctx,
                                           const std::vector<int>& degrees, std::uint64_t seed,
                                           Budget& budget) {
    for (int trial = 0; trial < 8; ++trial) {
        Rng rng(derive_seed(seed, 0xC1, static_cast<std::uint64_t>(trial)));
        std::vector<Poly<K>> gens;
        for (int d : degrees) gens.push_back(random_form(ctx, d, rng));
        auto gb = buchberger(ctx, gens, budget);
        if (!contains_unit(gb) &&
            hilbert_data(ctx, gb).codim == static_cast<int>(degrees.size()))
            return gens;
    }
    throw invariant_error("complete_intersection: seeded draws never reached full codimension");
}

/// Ideal of a single point, as nvars-1 independent linear forms.
template <class K>
std::vector<Poly<K>> point_ideal(const RingContext<K>& ctx,
                                 const std::vector<typename K::Elem>& coords) {
    if (static_cast<int>(coords.size()) != ctx.nvars)
        throw invariant_error("point_ideal: coordinate count mismatch");
    int pivot = -1;
    for (int i = 0; i < ctx.nvars; ++i)
        if (!ctx.field.is_zero(coords[static_cast<std::size_t>(i)])) pivot = i;
    if (pivot < 0) throw invariant_error("point_ideal: zero coordinate vector");
    std::vector<Poly<K>> gens;
    for (int i = 0; i < ctx.nvars; ++i) {
        if (i == pivot) continue;
        auto ratio = ctx.field.div(coords[static_cast<std::size_t>(i)],
                                   coords[static_cast<std::size_t>(pivot)]);
        auto f = sub(ctx, poly_var(ctx, i),
                          scale(ctx, poly_var(ctx, pivot), ratio));
        gens.push_back(std::move(f));
    }
    return gens;
}

template <class K>
std::vector<typename K::Elem> random_point(const RingContext<K>& ctx, Rng& rng) {
    std::vector<typename K::Elem> p;
    for (int i = 0; i < ctx.nvars; ++i) p.push_back(ctx.field.random_nonzero(rng));
    return p;
}

template <class K>
std::vector<Poly<K>> union_ideal(const RingContext<K>& ctx, const std::vector<Poly<K>>& a,
                                 const std::vector<Poly<K>>& b, Budget& budget) {
    if (a.empty() || contains_unit(a)) return b;
    if (b.empty() || contains_unit(b)) return a;
    return intersect_ideals(ctx, a, b, budget);
}

/// Seeded ideal of `count` general points, as the intersection of point ideals.
template <class K>
std::vector<std::vector<typename K::Elem>> random_point_set(const RingContext<K>& ctx, int count,
                                                            std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0xA11));
    std::vector<std::vector<typename K::Elem>> pts;
    for (int i = 0; i < count; ++i) pts.push_back(random_point(ctx, rng));
    return pts;
}

template <class K>
std::vector<Poly<K>> points_ideal(const RingContext<K>& ctx,
                                  const std::vector<std::vector<typename K::Elem>>& pts,
                                  Budget& budget) {
    std::vector<Poly<K>> acc;
    for (const auto& p : pts) acc = union_ideal(ctx, acc, point_ideal(ctx, p), budget);
    return acc;
}

/// The same point count via 2x2 minors of a random 2xcount matrix of linear
/// forms; an independent determinantal route for cross-checking.
template <class K>
std::vector<Poly<K>> points_ideal_determinantal(const RingContext<K>& ctx, int count,
                                                std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0xDE7));
    std::vector<std::vector<Poly<K>>> m(2);
    for (auto& row : m)
        for (int j = 0; j < count; ++j) row.push_back(random_form(ctx, 1, rng));
    return matrix_minors(ctx, m, 2);
}

/**
 * Distraction of a monomial ideal: the s-th occurrence of x_v inside any
 * generator is replaced by the same generic linear form L(v, s), so
 * x_v^m becomes L(v,1) L(v,2) ... L(v,m).  Preserves the Hilbert function
 * for generic forms.
 */
template <class K>
struct Distraction {
    std::vector<Poly<K>> gens;
    std::map<std::pair<int, int>, std::vector<typename K::Elem>> forms;
};

template <class K>
Distraction<K> distraction(const RingContext<K>& ctx, const std::vector<Monomial>& mono_gens,
                           std::uint64_t seed) {
    Distraction<K> out;
    Rng rng(derive_seed(seed, 0xD15));
    auto form_coeffs = [&](int v, int s) -> const std::vector<typename K::Elem>& {
        auto key = std::make_pair(v, s);
        auto it = out.forms.find(key);
        if (it == out.forms.end()) {
            std::vector<typename K::Elem> c;
            for (int i = 0; i < ctx.nvars; ++i) c.push_back(ctx.field.random(rng));
            c[static_cast<std::size_t>(v)] = ctx.field.random_nonzero(rng);
            it = out.forms.emplace(key, std::move(c)).first;
        }
        return it->second;
    };
    for (const auto& t : mono_gens) {
        auto g = poly_constant(ctx, ctx.field.one());
        for (int v = 0; v < ctx.nvars; ++v)
            for (int s = 1; s <= t.e[static_cast<std::size_t>(v)]; ++s) {
                const auto& c = form_coeffs(v, s);
                Poly<K> L;
                for (int i = 0; i < ctx.nvars; ++i)
                    L = add(ctx, L, scale(ctx, poly_var(ctx, i), c[static_cast<std::size_t>(i)]));
                g = mul(ctx, g, L);
            }
        out.gens.push_back(std::move(g));
    }
    return out;
}

/* ------------------------------------------------------------------ */
/* linear sections                                                     */
/* ------------------------------------------------------------------ */

struct SectionResult {
    int alpha = 0;
    bool finite = false;
    int scheme_dim = -1;   // projective dimension of the section; -1 when empty
    long long length = -1; // degree of the saturated section when finite
    int reg_quotient = 0;  // regularity of R/(section ideal), 0 for the empty section
};

/// Linear forms cutting the span of the given points.
template <class K>
std::vector<Poly<K>> forms_through_points(const RingContext<K>& ctx,
                                          const std::vector<std::vector<typename K::Elem>>& pts) {
    DenseMat<K> m(ctx.field, static_cast<int>(pts.size()), ctx.nvars);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            m.at(i, j) = pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    std::vector<Poly<K>> out;
    for (const auto& v : kernel_basis(ctx.field, m)) {
        Poly<K> f;
        for (int i = 0; i < ctx.nvars; ++i)
            f = add(ctx, f, scale(ctx, poly_var(ctx, i), v[static_cast<std::size_t>(i)]));
        out.push_back(std::move(f));
    }
    return out;
}

/// A random linear form vanishing at the given point.
template <class K>
Poly<K> random_form_through_point(const RingContext<K>& ctx,
                                  const std::vector<typename K::Elem>& p, Rng& rng) {
    int pivot = -1;
    for (int i = 0; i < ctx.nvars; ++i)
        if (!ctx.field.is_zero(p[static_cast<std::size_t>(i)])) pivot = i;
    if (pivot < 0) throw invariant_error("random_form_through_point: zero point");
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<typename K::Elem> c;
        for (int i = 0; i < ctx.nvars; ++i) c.push_back(ctx.field.random(rng));
        auto dot = ctx.field.zero();
        for (int i = 0; i < ctx.nvars; ++i)
            if (i != pivot)
                dot = ctx.field.add(dot, ctx.field.mul(c[static_cast<std::size_t>(i)],
                                                       p[static_cast<std::size_t>(i)]));
        c[static_cast<std::size_t>(pivot)] =
            ctx.field.neg(ctx.field.div(dot, p[static_cast<std::size_t>(pivot)]));
        Poly<K> f;
        for (int i = 0; i < ctx.nvars; ++i)
            f = add(ctx, f, scale(ctx, poly_var(ctx, i), c[static_cast<std::size_t>(i)]));
        if (!f.is_zero()) return f;
    }
    throw invariant_error("random_form_through_point: zero draws exhausted");
}

/**
 * Cut X with the linear space defined by the given forms (a copy of L^alpha
 * needs nvars-1-alpha of them), saturate, and measure the result.
 */
template <class K>
SectionResult linear_section(const RingContext<K>& ctx, const std::vector<Poly<K>>& gens,
                             int alpha, const std::vector<Poly<K>>& forms, Budget& budget) {
    if (alpha < 0 || alpha >= ctx.nvars)
        throw invariant_error("linear_section: alpha out of range");
    if (static_cast<int>(forms.size()) != ctx.nvars - 1 - alpha)
        throw invariant_error("linear_section: a section of dimension " + std::to_string(alpha) +
                              " needs " + std::to_string(ctx.nvars - 1 - alpha) + " forms");
    for (const auto& f : forms)
        if (f.is_zero() || !is_homogeneous(f) || poly_degree(f) != 1)
            throw invariant_error("linear_section: cutting forms must be linear");

    auto cut = gens;
    for (const auto& f : forms) cut.push_back(f);
    auto sat = saturate_irrelevant(ctx, cut, budget);

    SectionResult res;
    res.alpha = alpha;
    if (contains_unit(sat)) {
        res.finite = true;
        res.length = 0;
        return res;
    }
    auto hd = hilbert_data(ctx, sat);
    res.scheme_dim = hd.krull_dim - 1;
    res.finite = hd.krull_dim == 1;
    if (res.finite) res.length = hd.degree;
    res.reg_quotient = betti_table(free_resolution(ctx, sat, budget)).reg();
    return res;
}

template <class K>
SectionResult random_linear_section(const RingContext<K>& ctx, const std::vector<Poly<K>>& gens,
                                    int alpha, std::uint64_t seed, Budget& budget) {
    Rng rng(derive_seed(seed, 0x5EC, static_cast<std::uint64_t>(alpha)));
    std::vector<Poly<K>> forms;
    for (int i = 0; i < ctx.nvars - 1 - alpha; ++i) forms.push_back(random_form(ctx, 1, rng));
    return linear_section(ctx, gens, alpha, forms, budget);
}

/* ------------------------------------------------------------------ */
/* profiles                                                            */
/* ------------------------------------------------------------------ */

struct SchemeProfile {
    BettiTable betti;      // of R/I
    int nvars = 0;
    int scheme_dim = 0;    // projective dimension of X
    int codim = 0;         // e
    long long degree = 0;  // common length of generic L^e sections
    int gl_index = 0;      // largest p with the quadratic property N_{2,p}
    int ndp3 = 0;          // largest p with N_{3,p}
    bool nondegenerate = false;
};

/// Degree as the common length of three generic complementary sections.
template <class K>
long long geometric_degree(const RingContext<K>& ctx, const std::vector<Poly<K>>& gens, int codim,
                           std::uint64_t seed, Budget& budget) {
    long long deg = -1;
    for (int i = 0; i < 3; ++i) {
        auto sec = random_linear_section(ctx, gens, codim, derive_seed(seed, 0xDE6, static_cast<std::uint64_t>(i)), budget);
        if (!sec.finite)
            throw invariant_error("geometric_degree: a generic complementary section is not finite");
        if (deg >= 0 && sec.length != deg)
            throw invariant_error("geometric_degree: generic sections disagree; rerun with a different seed");
        deg = sec.length;
    }
    return deg;
}

template <class K>
SchemeProfile scheme_profile(const RingContext<K>& ctx, const std::vector<Poly<K>>& gens,
                             std::uint64_t seed, Budget& budget) {
    SchemeProfile pr;
    pr.nvars = ctx.nvars;
    pr.betti = betti_table(free_resolution(ctx, gens, budget));
    auto hd = hilbert_data(ctx, buchberger(ctx, gens, budget));
    pr.scheme_dim = hd.krull_dim - 1;
    pr.codim = hd.codim;
    pr.degree = geometric_degree(ctx, gens, pr.codim, seed, budget);
    if (pr.degree != hd.degree)
        throw invariant_error("scheme_profile: sampled degree " + std::to_string(pr.degree) +
                              " disagrees with the Hilbert degree " + std::to_string(hd.degree));
    pr.gl_index = ndp_index(pr.betti, 2);
    pr.ndp3 = ndp_index(pr.betti, 3);
    pr.nondegenerate = pr.betti.at(1, 0) == 0;
    return pr;
}

/* ------------------------------------------------------------------ */
/* checkers                                                            */
/* ------------------------------------------------------------------ */

inline long long binom_check(long long n, long long k) { return binom_ll(n, k); }

/**
 * Degree bound under the cubic syzygy property through step e:
 * deg(X) <= binom(e+2, 2), with equality forcing an arithmetically
 * Cohen-Macaulay scheme whose ideal resolution is a single cubic strand,
 * no quadric generators, and binom(a+1,2) <= beta_{a,2} for 1 <= a <= e.
 */
inline std::vector<CheckReport> check_degree_bound(const SchemeProfile& pr) {
    std::vector<CheckReport> out;
    int e = pr.codim;
    if (pr.ndp3 < e) {
        out.push_back(not_applicable("degree_bound",
                                     "cubic syzygy property holds only through step " +
                                         std::to_string(pr.ndp3) + " < e=" + std::to_string(e)));
        return out;
    }
    long long bound = binom_check(e + 2, 2);
    CheckReport deg{"degree_bound", pr.degree <= bound, true, std::to_string(pr.degree),
                    "<=" + std::to_string(bound)};
    out.push_back(deg);

    bool extremal = pr.degree == bound;
    bool acm = pr.betti.pd() == e;
    bool pure_cubic_strand = true;
    for (const auto& [ij, v] : pr.betti.entries)
        if (ij.first >= 1 && ij.second != 2 && v != 0) pure_cubic_strand = false;
    out.push_back(CheckReport{"extremal_dichotomy", extremal == (acm && pure_cubic_strand), true,
                              std::string("extremal=") + (extremal ? "yes" : "no"),
                              std::string("acm_cubic_strand=") +
                                  (acm && pure_cubic_strand ? "yes" : "no")});
    if (extremal) {
        out.push_back(CheckReport{"extremal_no_quadrics", pr.betti.at(1, 1) == 0, true,
                                  std::to_string(pr.betti.at(1, 1)), "0"});
        for (int a = 1; a <= e; ++a) {
            long long floor_a = binom_check(a + 1, 2);
            long long got = pr.betti.at(a, 2);
            out.push_back(CheckReport{"extremal_strand_floor_a" + std::to_string(a),
                                      floor_a <= got, true, std::to_string(got),
                                      ">=" + std::to_string(floor_a)});
        }
    }
    return out;
}

/**
 * For a nondegenerate irreducible scheme with the cubic property through
 * step e, the corner entry beta_{e,2} vanishes exactly when R/I is
 * 2-regular.
 */
inline CheckReport check_two_regular_criterion(const SchemeProfile& pr, bool irreducible) {
    if (!irreducible)
        return not_applicable("two_regular_criterion", "input not flagged irreducible");
    if (!pr.nondegenerate)
        return not_applicable("two_regular_criterion", "input degenerate");
    if (pr.ndp3 < pr.codim)
        return not_applicable("two_regular_criterion", "cubic syzygy property fails at step e");
    bool corner_zero = pr.betti.at(pr.codim, 2) == 0;
    bool two_regular = pr.betti.reg() <= 1;
    return CheckReport{"two_regular_criterion", corner_zero == two_regular, true,
                       "corner_beta=" + std::to_string(pr.betti.at(pr.codim, 2)),
                       "reg=" + std::to_string(pr.betti.reg())};
}

/**
 * Multisecant bound: any finite section X cap L^alpha has length at most
 * 1 + alpha + min{ |alpha-p|(alpha+p+1)/2, beta_{alpha,2} }, sampled over
 * seeded generic sections plus caller-registered special ones.
 */
template <class K>
std::vector<CheckReport> check_secant_bound(const RingContext<K>& ctx,
                                            const std::vector<Poly<K>>& gens,
                                            const SchemeProfile& pr, int alpha, int trials,
                                            std::uint64_t seed,
                                            const std::vector<std::vector<Poly<K>>>& specials,
                                            Budget& budget) {
    std::vector<CheckReport> out;
    std::string tag = "secant_bound_a" + std::to_string(alpha);
    if (alpha < 1 || alpha > pr.codim || pr.ndp3 < alpha) {
        out.push_back(not_applicable(tag, "needs the cubic property through step alpha <= e"));
        return out;
    }
    long long p = pr.gl_index;
    long long claim = ((alpha > p ? alpha - p : p - alpha) * (alpha + p + 1)) / 2;
    long long beta = pr.betti.at(alpha, 2);
    long long bound = 1 + alpha + std::min(claim, beta);

    long long worst = -1;
    int finite_count = 0;
    bool ok = true;
    for (int i = 0; i < trials; ++i) {
        auto sec = random_linear_section(ctx, gens, alpha,
                                         derive_seed(seed, static_cast<std::uint64_t>(i)), budget);
        if (!sec.finite) continue;
        ++finite_count;
        worst = std::max(worst, sec.length);
        if (sec.length > bound) ok = false;
    }
    out.push_back(CheckReport{tag, ok, true,
                              "max_len=" + std::to_string(worst) + " over " +
                                  std::to_string(finite_count) + " finite sections",
                              "<=" + std::to_string(bound)});
    int idx = 0;
    for (const auto& forms : specials) {
        auto sec = linear_section(ctx, gens, alpha, forms, budget);
        if (!sec.finite) {
            out.push_back(CheckReport{tag + "_special" + std::to_string(idx), false, true,
                                      "section not finite", "finite"});
        } else {
            out.push_back(CheckReport{tag + "_special" + std::to_string(idx), sec.length <= bound,
                                      true, std::to_string(sec.length),
                                      "<=" + std::to_string(bound)});
        }
        ++idx;
    }
    return out;
}

/**
 * Generator-degree section bound: under the degree-d syzygy property through
 * step alpha, every finite section X cap L^alpha has length at most
 * 1 + alpha + sum over t in [2, d-1] of the subring generator count
 * beta^{S_alpha}_{0,t}, and the section ideal is d-regular.
 */
template <class K>
std::vector<CheckReport> check_generator_section_bound(
    const RingContext<K>& ctx, const std::vector<Poly<K>>& gens, const SchemeProfile& pr,
    const Pushforward<K>& pf, int d, int alpha, int trials, std::uint64_t seed,
    const std::vector<std::vector<Poly<K>>>& specials, Budget& budget) {
    std::vector<CheckReport> out;
    std::string tag = "generator_sum_bound_d" + std::to_string(d) + "_a" + std::to_string(alpha);
    std::string rtag = "section_regularity_d" + std::to_string(d) + "_a" + std::to_string(alpha);
    if (alpha < 1 || alpha > pf.t_max() || ndp_index(pr.betti, d) < alpha) {
        out.push_back(not_applicable(tag, "needs the degree-d property through step alpha"));
        return out;
    }
    long long bound = 1 + alpha;
    for (int t = 2; t <= d - 1; ++t) bound += pf.table(alpha).at(0, t);

    bool len_ok = true, reg_ok = true;
    long long worst = -1;
    int worst_reg = 0, finite_count = 0;
    auto absorb = [&](const SectionResult& sec) {
        if (!sec.finite) return;
        ++finite_count;
        worst = std::max(worst, sec.length);
        worst_reg = std::max(worst_reg, sec.reg_quotient);
        if (sec.length > bound) len_ok = false;
        if (sec.reg_quotient > d - 1) reg_ok = false;
    };
    for (int i = 0; i < trials; ++i)
        absorb(random_linear_section(ctx, gens, alpha,
                                     derive_seed(seed, 0x6E, static_cast<std::uint64_t>(i)), budget));
    for (const auto& forms : specials) absorb(linear_section(ctx, gens, alpha, forms, budget));

    out.push_back(CheckReport{tag, len_ok, true,
                              "max_len=" + std::to_string(worst) + " over " +
                                  std::to_string(finite_count) + " finite sections",
                              "<=" + std::to_string(bound)});
    out.push_back(CheckReport{rtag, reg_ok, true, "max_reg_quotient=" + std::to_string(worst_reg),
                              "<=" + std::to_string(d - 1)});
    return out;
}

} // namespace syzygy
