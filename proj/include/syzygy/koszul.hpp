#pragma once
/**
 * @file koszul.hpp
 * @brief Betti numbers as Koszul homology, independent of any free
 *        resolution.
 *
 * For a quotient M = R/I and a tail block of variables W = {x_lo..x_{n-1}}
 * the strand
 *
 *   wedge^{i+1} W ox M_{j-1} -> wedge^i W ox M_j -> wedge^{i-1} W ox M_{j+1}
 *
 * computes Tor_i over the subring k[W] in internal degree i+j, so its
 * homology dimension is the Betti table entry (i, j).  With lo = 0 this is
 * the full polynomial ring.  The same chain spaces carry multiplication by
 * a variable outside W, which induces the connecting maps of the long
 * exact sequence comparing k[x_t..] with k[x_{t+1}..]; the probe checks
 * that the two subring tables splice exactly.
 */

#include <map>
#include <utility>
#include <vector>

#include "syzygy/betti.hpp"
#include "syzygy/groebner.hpp"
#include "syzygy/linalg.hpp"
#include "syzygy/monomial_ideal.hpp"

namespace syzygy {

/**
 * Graded pieces of R/I up to degree jmax: standard-monomial bases and the
 * multiplication maps M_d -> M_{d+1} by each variable, as sparse columns
 * of normal-form coordinates.
 */
template <class K>
struct ModuleSlices {
    using SparseCol = std::vector<std::pair<int, typename K::Elem>>;

    RingContext<K> ctx;
    int jmax = 0;
    std::vector<std::vector<Monomial>> basis;             // basis[d], sorted decreasing
    std::vector<std::vector<std::vector<SparseCol>>> mult; // mult[v][d][col]

    long long dim(int d) const {
        return (d < 0 || d > jmax) ? 0 : (long long)basis[std::size_t(d)].size();
    }
};

template <class K>
ModuleSlices<K> build_slices(const RingContext<K>& ctx, const std::vector<Poly<K>>& gb, int jmax,
                             Budget& budget) {
    ModuleSlices<K> sl{ctx, jmax, {}, {}};
    auto leads = initial_ideal(ctx, gb);
    sl.basis.resize(std::size_t(jmax) + 1);
    std::vector<std::map<std::vector<std::int32_t>, int>> index(std::size_t(jmax) + 1);
    for (int d = 0; d <= jmax; ++d) {
        auto b = std_monomials(leads, ctx.nvars, d);
        std::sort(b.begin(), b.end(),
                  [&](const Monomial& x, const Monomial& y) { return ctx.cmp(x, y) > 0; });
        for (int k = 0; k < int(b.size()); ++k) index[std::size_t(d)][b[std::size_t(k)].e] = k;
        sl.basis[std::size_t(d)] = std::move(b);
    }
    sl.mult.assign(std::size_t(ctx.nvars), {});
    for (int v = 0; v < ctx.nvars; ++v) {
        sl.mult[std::size_t(v)].resize(std::size_t(jmax));
        for (int d = 0; d + 1 <= jmax; ++d) {
            auto& cols = sl.mult[std::size_t(v)][std::size_t(d)];
            cols.resize(sl.basis[std::size_t(d)].size());
            for (std::size_t c = 0; c < sl.basis[std::size_t(d)].size(); ++c) {
                auto prod = poly_monomial(ctx, monomial_mul(sl.basis[std::size_t(d)][c], monomial_var(ctx.nvars, v)),
                                          ctx.field.one());
                auto nf = normal_form(ctx, prod, gb, budget);
                typename ModuleSlices<K>::SparseCol col;
                for (const auto& t : nf.terms) {
                    auto it = index[std::size_t(d) + 1].find(t.m.e);
                    if (it == index[std::size_t(d) + 1].end())
                        throw invariant_error("build_slices: normal form leaves the standard basis");
                    col.push_back({it->second, t.c});
                }
                cols[c] = std::move(col);
            }
        }
    }
    return sl;
}

template <class K>
ModuleSlices<K> build_slices(const RingContext<K>& ctx, const std::vector<Poly<K>>& gb, int jmax) {
    Budget b;
    return build_slices(ctx, gb, jmax, b);
}

namespace detail {

/// k-subsets of {lo, .., n-1} in lexicographic order.
inline std::vector<std::vector<int>> var_subsets(int lo, int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n - lo) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, lo);
    return out;
}

} // namespace detail

/**
 * Matrix of the Koszul differential wedge^i W ox M_{D-i} ->
 * wedge^{i-1} W ox M_{D-i+1} over W = {x_lo..}, in internal degree D.
 * Requires i >= 1; slices must reach degree D-i+1.
 */
template <class K>
DenseMat<K> koszul_phi(const ModuleSlices<K>& sl, int lo, int i, int D) {
    const auto& ctx = sl.ctx;
    int n = ctx.nvars;
    int dsrc = D - i;
    auto S = detail::var_subsets(lo, n, i);
    auto T = detail::var_subsets(lo, n, i - 1);
    std::map<std::vector<int>, int> tidx;
    for (int k = 0; k < int(T.size()); ++k) tidx[T[std::size_t(k)]] = k;

    int msrc = int(sl.dim(dsrc)), mtgt = int(sl.dim(dsrc + 1));
    DenseMat<K> phi(ctx.field, int(T.size()) * mtgt, int(S.size()) * msrc);
    if (dsrc < 0 || msrc == 0) return phi;
    if (dsrc + 1 > sl.jmax) throw invariant_error("koszul_phi: slices too shallow");

    for (std::size_t s = 0; s < S.size(); ++s) {
        for (int c = 0; c < msrc; ++c) {
            int col = int(s) * msrc + c;
            for (std::size_t k = 0; k < S[s].size(); ++k) {
                int v = S[s][k];
                std::vector<int> rest;
                for (std::size_t l = 0; l < S[s].size(); ++l)
                    if (l != k) rest.push_back(S[s][l]);
                int t = tidx.at(rest);
                bool negate = (k % 2 == 1);
                for (const auto& [rm, coef] : sl.mult[std::size_t(v)][std::size_t(dsrc)][std::size_t(c)]) {
                    int row = t * mtgt + rm;
                    auto val = negate ? ctx.field.neg(coef) : coef;
                    phi.at(row, col) = ctx.field.add(phi.at(row, col), val);
                }
            }
        }
    }
    return phi;
}

/**
 * Betti table of R/I over the subring k[x_lo..x_{n-1}], rows 0..j_cap,
 * from Koszul homology.  The top row must come out zero, which certifies
 * that no entries were cut off; otherwise the cap was too small.
 */
template <class K>
BettiTable koszul_betti(const ModuleSlices<K>& sl, int lo, int j_cap, std::string tag = "quotient") {
    if (sl.jmax < j_cap + 1)
        throw invariant_error("koszul_betti: slices must reach one degree past the cap");
    int w = sl.ctx.nvars - lo;
    BettiTable table;
    table.module_tag = std::move(tag);

    std::map<std::pair<int, int>, long long> rank_memo;
    auto rank_phi = [&](int i, int D) -> long long {
        if (i < 1 || i > w || D - i < 0) return 0;
        auto key = std::make_pair(i, D);
        auto it = rank_memo.find(key);
        if (it != rank_memo.end()) return it->second;
        auto m = koszul_phi(sl, lo, i, D);
        long long r = rank(sl.ctx.field, m);
        rank_memo[key] = r;
        return r;
    };

    for (int j = 0; j <= j_cap; ++j)
        for (int i = 0; i <= w; ++i) {
            int D = i + j;
            long long dim = binom_ll(w, i) * sl.dim(j);
            if (dim == 0) continue;
            long long beta = dim - rank_phi(i, D) - rank_phi(i + 1, D);
            if (beta < 0) throw invariant_error("koszul_betti: negative homology dimension");
            if (beta != 0) {
                if (j == j_cap)
                    throw invariant_error("koszul_betti: cap insufficient, nonzero entry in the top row");
                table.set(i, j, beta);
            }
        }
    return table;
}

/// One cell of the long-exact-sequence comparison between k[x_t..] and
/// k[x_{t+1}..]: the bigger ring's entry must equal coker + ker of the
/// connecting multiplication by x_t.
struct ConeCell {
    int i = 0, j = 0;
    long long lhs = 0;   // beta over k[x_t..]
    long long coker = 0; // of x_t on Tor_i over k[x_{t+1}..], into row j
    long long ker = 0;   // of x_t on Tor_{i-1} over k[x_{t+1}..], out of row j
    bool ok = false;
};

/**
 * Mapping-cone exactness probe at pivot variable x_t: verifies
 * beta^{k[x_t..]}_{i,j} = coker + ker of the connecting maps for all cells
 * with 0 <= i <= n-t, 0 <= j < j_cap.
 */
template <class K>
std::vector<ConeCell> cone_exactness_probe(const ModuleSlices<K>& sl, int t, int j_cap) {
    const auto& ctx = sl.ctx;
    int n = ctx.nvars;
    if (t < 0 || t + 1 > n) throw invariant_error("cone_exactness_probe: pivot out of range");
    int w_small = n - (t + 1);

    auto big = koszul_betti(sl, t, j_cap);
    auto small = koszul_betti(sl, t + 1, j_cap);

    std::map<std::pair<int, int>, DenseMat<K>> phi_memo;
    auto phi = [&](int i, int D) -> const DenseMat<K>& {
        auto key = std::make_pair(i, D);
        auto it = phi_memo.find(key);
        if (it == phi_memo.end())
            it = phi_memo.emplace(key, koszul_phi(sl, t + 1, i, D)).first;
        return it->second;
    };

    // rank of the map induced by x_t on Tor_i over k[x_{t+1}..], from
    // internal degree D-1 to D
    auto delta_rank = [&](int i, int D) -> long long {
        if (i < 0 || i > w_small) return 0;
        int dsrc = D - 1 - i;
        if (dsrc < 0 || sl.dim(dsrc) == 0) return 0;
        auto subsets = detail::var_subsets(t + 1, n, i);
        int msrc = int(sl.dim(dsrc)), mtgt = int(sl.dim(dsrc + 1));

        std::vector<std::vector<typename K::Elem>> cycles;
        if (i == 0) {
            for (int c = 0; c < msrc; ++c) {
                std::vector<typename K::Elem> e(std::size_t(msrc), ctx.field.zero());
                e[std::size_t(c)] = ctx.field.one();
                cycles.push_back(std::move(e));
            }
        } else {
            cycles = kernel_basis(ctx.field, phi(i, D - 1));
        }
        if (cycles.empty()) return 0;

        Echelon<K> ech(ctx.field, int(subsets.size()) * mtgt);
        const auto& bnd = phi(i + 1, D);
        for (int c = 0; c < bnd.cols; ++c) {
            std::vector<typename K::Elem> col(std::size_t(bnd.rows), ctx.field.zero());
            for (int r = 0; r < bnd.rows; ++r) col[std::size_t(r)] = bnd.at(r, c);
            ech.add(std::move(col));
        }
        long long r0 = ech.rank();

        for (const auto& z : cycles) {
            std::vector<typename K::Elem> img(std::size_t(subsets.size()) * std::size_t(mtgt),
                                              ctx.field.zero());
            for (std::size_t s = 0; s < subsets.size(); ++s)
                for (int c = 0; c < msrc; ++c) {
                    const auto& zc = z[s * std::size_t(msrc) + std::size_t(c)];
                    if (ctx.field.is_zero(zc)) continue;
                    for (const auto& [rm, coef] : sl.mult[std::size_t(t)][std::size_t(dsrc)][std::size_t(c)]) {
                        auto& slot = img[s * std::size_t(mtgt) + std::size_t(rm)];
                        slot = ctx.field.add(slot, ctx.field.mul(zc, coef));
                    }
                }
            ech.add(std::move(img));
        }
        return ech.rank() - r0;
    };

    std::vector<ConeCell> cells;
    for (int j = 0; j < j_cap; ++j)
        for (int i = 0; i <= n - t; ++i) {
            ConeCell cell;
            cell.i = i;
            cell.j = j;
            cell.lhs = big.at(i, j);
            cell.coker = small.at(i, j) - delta_rank(i, i + j);
            cell.ker = (i == 0) ? 0 : small.at(i - 1, j) - delta_rank(i - 1, i + j);
            if (cell.coker < 0 || cell.ker < 0)
                throw invariant_error("cone_exactness_probe: negative rank bookkeeping");
            cell.ok = cell.lhs == cell.coker + cell.ker;
            if (cell.lhs != 0 || cell.coker != 0 || cell.ker != 0) cells.push_back(cell);
        }
    return cells;
}

} // namespace syzygy
