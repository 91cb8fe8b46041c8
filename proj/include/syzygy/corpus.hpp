#pragma once
/**
 * @file corpus.hpp
 * @brief The bundled benchmark schemes: a line-oriented manifest naming each
 *        construction, and builders turning manifest entries into ideals with
 *        registered anchor points and special linear sections.
 *
 * Manifest grammar (blank lines and '#' comments ignored):
 *   item <name>                     opens a block; directives follow until the next item
 *   ambient <N>                     projective ambient dimension
 *   construct <kind> <args...>      rnc d | hankel rows cols size | ci d1 d2 ... seed s |
 *                                   union | distraction seed s
 *   part <kind> <args...>           sub-construction for union / distraction:
 *                                   rnc d | point c0 ... cN | points n seed s |
 *                                   offsecant-point seed s | ideal f1 f2 ... |
 *                                   monomials t1 t2 ...
 *   anchor distraction-point v:s v:s v:s   register the common zero of listed forms
 *   irreducible                     single-component variety
 *   reduced                         every component reduced
 *   special forms <alpha> : f1 ; f2 ; ...
 *   special through-point <alpha>   seeded random section through the last anchor
 *   special point-triples <alpha>   spans of all anchor-point triples
 */

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/geometry.hpp"
#include "syzygy/io.hpp"

namespace syzygy {

struct CorpusItem {
    struct Special {
        std::string mode; // "forms" | "through-point" | "point-triples"
        int alpha = 0;
        std::vector<std::string> forms;
    };

    std::string name;
    int ambient = -1;
    bool irreducible = false;
    bool reduced = false;
    std::vector<std::string> construct;
    std::vector<std::vector<std::string>> parts;
    std::vector<std::pair<int, int>> anchor_kernel;
    std::vector<Special> specials;
};

namespace detail {

inline std::vector<std::string> manifest_tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

inline long long manifest_int(const std::string& tok, int lineno) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (...) {
        throw parse_error("manifest line " + std::to_string(lineno) + ": expected an integer, got '" +
                          tok + "'");
    }
}

} // namespace detail

inline std::vector<CorpusItem> parse_manifest(std::istream& in) {
    std::vector<CorpusItem> items;
    std::string line;
    int lineno = 0;
    auto current = [&]() -> CorpusItem& {
        if (items.empty())
            throw parse_error("manifest line " + std::to_string(lineno) +
                              ": directive before the first item");
        return items.back();
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        auto toks = detail::manifest_tokens(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "item") {
            if (toks.size() != 2)
                throw parse_error("manifest line " + std::to_string(lineno) + ": item needs a name");
            for (const auto& it : items)
                if (it.name == toks[1])
                    throw parse_error("manifest line " + std::to_string(lineno) +
                                      ": duplicate item '" + toks[1] + "'");
            CorpusItem it;
            it.name = toks[1];
            items.push_back(std::move(it));
        } else if (kw == "ambient") {
            if (toks.size() != 2)
                throw parse_error("manifest line " + std::to_string(lineno) + ": ambient needs a number");
            current().ambient = static_cast<int>(detail::manifest_int(toks[1], lineno));
        } else if (kw == "construct") {
            if (toks.size() < 2)
                throw parse_error("manifest line " + std::to_string(lineno) + ": construct needs a kind");
            current().construct.assign(toks.begin() + 1, toks.end());
        } else if (kw == "part") {
            if (toks.size() < 2)
                throw parse_error("manifest line " + std::to_string(lineno) + ": part needs a kind");
            current().parts.emplace_back(toks.begin() + 1, toks.end());
        } else if (kw == "anchor") {
            if (toks.size() < 3 || toks[1] != "distraction-point")
                throw parse_error("manifest line " + std::to_string(lineno) +
                                  ": anchor supports only 'distraction-point v:s ...'");
            for (std::size_t i = 2; i < toks.size(); ++i) {
                auto colon = toks[i].find(':');
                if (colon == std::string::npos)
                    throw parse_error("manifest line " + std::to_string(lineno) +
                                      ": anchor entries look like v:s");
                int v = static_cast<int>(detail::manifest_int(toks[i].substr(0, colon), lineno));
                int s = static_cast<int>(detail::manifest_int(toks[i].substr(colon + 1), lineno));
                current().anchor_kernel.emplace_back(v, s);
            }
        } else if (kw == "irreducible") {
            current().irreducible = true;
        } else if (kw == "reduced") {
            current().reduced = true;
        } else if (kw == "special") {
            if (toks.size() < 3)
                throw parse_error("manifest line " + std::to_string(lineno) +
                                  ": special needs a mode and alpha");
            CorpusItem::Special sp;
            sp.mode = toks[1];
            sp.alpha = static_cast<int>(detail::manifest_int(toks[2], lineno));
            if (sp.mode == "forms") {
                std::string rest;
                auto colon = line.find(':');
                if (colon == std::string::npos)
                    throw parse_error("manifest line " + std::to_string(lineno) +
                                      ": special forms needs ': f1 ; f2 ; ...'");
                rest = line.substr(colon + 1);
                std::string piece;
                std::istringstream ps(rest);
                while (std::getline(ps, piece, ';')) {
                    std::size_t b = piece.find_first_not_of(" \t");
                    if (b == std::string::npos) continue;
                    std::size_t e = piece.find_last_not_of(" \t");
                    sp.forms.push_back(piece.substr(b, e - b + 1));
                }
                if (sp.forms.empty())
                    throw parse_error("manifest line " + std::to_string(lineno) +
                                      ": special forms lists no forms");
            } else if (sp.mode != "through-point" && sp.mode != "point-triples") {
                throw parse_error("manifest line " + std::to_string(lineno) +
                                  ": unknown special mode '" + sp.mode + "'");
            }
            current().specials.push_back(std::move(sp));
        } else {
            throw parse_error("manifest line " + std::to_string(lineno) + ": unknown directive '" +
                              kw + "'");
        }
    }
    for (const auto& it : items) {
        if (it.ambient < 1)
            throw parse_error("manifest item '" + it.name + "': missing or bad ambient");
        if (it.construct.empty())
            throw parse_error("manifest item '" + it.name + "': missing construct");
    }
    return items;
}

inline std::vector<CorpusItem> parse_manifest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return parse_manifest(in);
}

template <class K>
struct BuiltScheme {
    RingContext<K> ctx;
    std::vector<Poly<K>> gens;
    std::vector<std::vector<typename K::Elem>> anchors;
    std::vector<std::pair<int, std::vector<Poly<K>>>> specials;
};

namespace detail {

inline std::uint64_t name_seed(const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// Determinant of the 3x3 middle catalecticant at a point of P^4; nonzero
/// certifies the point avoids the secant variety of the quartic curve.
template <class K>
bool off_secant_of_quartic(const RingContext<K>& ctx,
                           const std::vector<typename K::Elem>& p) {
    const auto& f = ctx.field;
    auto at = [&](int i, int j) { return p[static_cast<std::size_t>(i + j)]; };
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return f.sub(f.mul(at(r0, c0), at(r1, c1)), f.mul(at(r0, c1), at(r1, c0)));
    };
    auto det = f.sub(f.mul(at(0, 0), minor2(1, 2, 1, 2)), f.mul(at(0, 1), minor2(1, 2, 0, 2)));
    det = f.add(det, f.mul(at(0, 2), minor2(1, 2, 0, 1)));
    return !f.is_zero(det);
}

template <class K>
std::pair<std::vector<Poly<K>>, std::vector<std::vector<typename K::Elem>>> build_part(
    const RingContext<K>& ctx, const CorpusItem& item, const std::vector<std::string>& part,
    Budget& budget) {
    std::vector<Poly<K>> gens;
    std::vector<std::vector<typename K::Elem>> anchors;
    const std::string& kind = part[0];
    auto want = [&](bool ok, const std::string& usage) {
        if (!ok)
            throw parse_error("corpus item '" + item.name + "': part usage is '" + usage + "'");
    };
    if (kind == "rnc") {
        want(part.size() == 2, "rnc d");
        gens = rational_normal_curve(ctx, static_cast<int>(manifest_int(part[1], 0)));
    } else if (kind == "point") {
        want(static_cast<int>(part.size()) == 1 + ctx.nvars, "point c0 ... cN");
        std::vector<typename K::Elem> p;
        for (int i = 0; i < ctx.nvars; ++i)
            p.push_back(ctx.field.from_int(manifest_int(part[static_cast<std::size_t>(1 + i)], 0)));
        gens = point_ideal(ctx, p);
        anchors.push_back(std::move(p));
    } else if (kind == "points") {
        want(part.size() == 4 && part[2] == "seed", "points n seed s");
        int count = static_cast<int>(manifest_int(part[1], 0));
        auto seed = static_cast<std::uint64_t>(manifest_int(part[3], 0));
        auto pts = random_point_set(ctx, count, seed);
        gens = points_ideal(ctx, pts, budget);
        for (auto& p : pts) anchors.push_back(std::move(p));
    } else if (kind == "offsecant-point") {
        want(part.size() == 3 && part[1] == "seed", "offsecant-point seed s");
        if (ctx.nvars != 5)
            throw parse_error("corpus item '" + item.name +
                              "': off-secant draws are defined for the quartic curve ambient");
        Rng rng(derive_seed(static_cast<std::uint64_t>(manifest_int(part[2], 0)), 0x0FF));
        for (int attempt = 0; attempt < 64; ++attempt) {
            auto p = random_point(ctx, rng);
            if (off_secant_of_quartic(ctx, p)) {
                gens = point_ideal(ctx, p);
                anchors.push_back(std::move(p));
                return {gens, anchors};
            }
        }
        throw invariant_error("corpus item '" + item.name + "': off-secant draws exhausted");
    } else if (kind == "ideal") {
        want(part.size() >= 2, "ideal f1 f2 ...");
        for (std::size_t i = 1; i < part.size(); ++i)
            gens.push_back(parse_polynomial(ctx, part[i]));
    } else {
        throw parse_error("corpus item '" + item.name + "': unknown part kind '" + kind + "'");
    }
    return {gens, anchors};
}

} // namespace detail

/**
 * Build a manifest entry over the given field.  The runner seed feeds only
 * the seeded special sections; constructions draw from seeds pinned in the
 * manifest, so the ideal is reproducible from the manifest alone.
 */
template <class K>
BuiltScheme<K> build_corpus_item(const CorpusItem& item, const K& field, std::uint64_t seed,
                                 Budget& budget) {
    RingContext<K> ctx{item.ambient + 1, MonomialOrder{}, field};
    BuiltScheme<K> built{ctx, {}, {}, {}};
    const auto& c = item.construct;
    const std::string& kind = c[0];

    std::map<std::pair<int, int>, std::vector<typename K::Elem>> distraction_forms;
    if (kind == "rnc") {
        if (c.size() != 2) throw parse_error("corpus item '" + item.name + "': construct rnc d");
        built.gens = rational_normal_curve(ctx, static_cast<int>(detail::manifest_int(c[1], 0)));
    } else if (kind == "hankel") {
        if (c.size() != 4)
            throw parse_error("corpus item '" + item.name + "': construct hankel rows cols size");
        built.gens = hankel_minors(ctx, static_cast<int>(detail::manifest_int(c[1], 0)),
                                   static_cast<int>(detail::manifest_int(c[2], 0)),
                                   static_cast<int>(detail::manifest_int(c[3], 0)));
    } else if (kind == "ci") {
        if (c.size() < 4 || c[c.size() - 2] != "seed")
            throw parse_error("corpus item '" + item.name + "': construct ci d1 d2 ... seed s");
        std::vector<int> degs;
        for (std::size_t i = 1; i + 2 < c.size(); ++i)
            degs.push_back(static_cast<int>(detail::manifest_int(c[i], 0)));
        auto cseed = static_cast<std::uint64_t>(detail::manifest_int(c.back(), 0));
        built.gens = complete_intersection(ctx, degs, cseed, budget);
    } else if (kind == "union") {
        if (item.parts.size() < 2)
            throw parse_error("corpus item '" + item.name + "': union needs at least two parts");
        for (const auto& part : item.parts) {
            auto [g, a] = detail::build_part(ctx, item, part, budget);
            built.gens = union_ideal(ctx, built.gens, g, budget);
            for (auto& p : a) built.anchors.push_back(std::move(p));
        }
    } else if (kind == "distraction") {
        if (c.size() != 3 || c[1] != "seed")
            throw parse_error("corpus item '" + item.name + "': construct distraction seed s");
        if (item.parts.size() != 1 || item.parts[0].empty() || item.parts[0][0] != "monomials")
            throw parse_error("corpus item '" + item.name +
                              "': distraction needs one 'part monomials t1 t2 ...'");
        std::vector<Monomial> base;
        for (std::size_t i = 1; i < item.parts[0].size(); ++i) {
            auto f = parse_polynomial(ctx, item.parts[0][i]);
            if (f.terms.size() != 1)
                throw parse_error("corpus item '" + item.name + "': '" + item.parts[0][i] +
                                  "' is not a monomial");
            base.push_back(f.terms[0].m);
        }
        auto dseed = static_cast<std::uint64_t>(detail::manifest_int(c[2], 0));
        auto d = distraction(ctx, base, dseed);
        built.gens = std::move(d.gens);
        distraction_forms = std::move(d.forms);
    } else {
        throw parse_error("corpus item '" + item.name + "': unknown construct '" + kind + "'");
    }

    if (!item.anchor_kernel.empty()) {
        std::vector<std::vector<typename K::Elem>> rows;
        for (const auto& vs : item.anchor_kernel) {
            auto it = distraction_forms.find(vs);
            if (it == distraction_forms.end())
                throw parse_error("corpus item '" + item.name + "': anchor names form " +
                                  std::to_string(vs.first) + ":" + std::to_string(vs.second) +
                                  " which the distraction never used");
            rows.push_back(it->second);
        }
        DenseMat<K> m(ctx.field, static_cast<int>(rows.size()), ctx.nvars);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        auto ker = kernel_basis(ctx.field, m);
        if (ker.size() != 1)
            throw invariant_error("corpus item '" + item.name +
                                  "': anchor forms do not cut a single point");
        built.anchors.push_back(ker[0]);
    }

    for (const auto& sp : item.specials) {
        int need = ctx.nvars - 1 - sp.alpha;
        if (sp.mode == "forms") {
            std::vector<Poly<K>> forms;
            for (const auto& s : sp.forms) forms.push_back(parse_polynomial(ctx, s));
            if (static_cast<int>(forms.size()) != need)
                throw parse_error("corpus item '" + item.name + "': special forms lists " +
                                  std::to_string(forms.size()) + " forms but alpha " +
                                  std::to_string(sp.alpha) + " needs " + std::to_string(need));
            built.specials.emplace_back(sp.alpha, std::move(forms));
        } else if (sp.mode == "through-point") {
            if (built.anchors.empty())
                throw parse_error("corpus item '" + item.name +
                                  "': special through-point needs an anchor point");
            Rng rng(derive_seed(seed, detail::name_seed(item.name), 0x5F0));
            std::vector<Poly<K>> forms;
            for (int i = 0; i < need; ++i)
                forms.push_back(random_form_through_point(ctx, built.anchors.back(), rng));
            built.specials.emplace_back(sp.alpha, std::move(forms));
        } else if (sp.mode == "point-triples") {
            if (built.anchors.size() < 3)
                throw parse_error("corpus item '" + item.name +
                                  "': special point-triples needs at least three anchors");
            int n = static_cast<int>(built.anchors.size());
            for (const auto& tri : detail::var_subsets(0, n, 3)) {
                std::vector<std::vector<typename K::Elem>> pts;
                for (int i : tri) pts.push_back(built.anchors[static_cast<std::size_t>(i)]);
                auto forms = forms_through_points(ctx, pts);
                if (static_cast<int>(forms.size()) != need)
                    throw invariant_error("corpus item '" + item.name +
                                          "': an anchor triple spans the wrong dimension");
                built.specials.emplace_back(sp.alpha, std::move(forms));
            }
        }
    }
    return built;
}

} // namespace syzygy
