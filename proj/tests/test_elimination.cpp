#include "catch2/catch_amalgamated.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/betti.hpp"
#include "syzygy/ek.hpp"
#include "syzygy/elimination.hpp"
#include "syzygy/fields.hpp"
#include "syzygy/gin.hpp"
#include "syzygy/groebner.hpp"
#include "syzygy/ideal_ops.hpp"
#include "syzygy/io.hpp"
#include "syzygy/resolution.hpp"
#include "syzygy/rng.hpp"

using namespace syzygy;

namespace {

using FP = PrimeField;

RingContext<FP> ctx_fp(int n) { return RingContext<FP>{n, MonomialOrder{}, FP(32003)}; }

std::vector<Poly<FP>> parse_all(const RingContext<FP>& ctx, const std::vector<std::string>& ss) {
    std::vector<Poly<FP>> out;
    for (const auto& s : ss) out.push_back(parse_polynomial(ctx, s));
    return out;
}

std::vector<Monomial> monos(const RingContext<FP>& ctx, const std::vector<std::string>& ss) {
    std::vector<Monomial> out;
    for (const auto& s : ss) {
        auto p = parse_polynomial(ctx, s);
        REQUIRE(p.terms.size() == 1);
        out.push_back(p.terms.front().m);
    }
    return out;
}

std::vector<Poly<FP>> as_polys(const RingContext<FP>& ctx, const std::vector<Monomial>& ms) {
    std::vector<Poly<FP>> out;
    for (const auto& m : ms) out.push_back(poly_monomial(ctx, m, ctx.field.one()));
    return out;
}

bool same_monomials(std::vector<Monomial> a, std::vector<Monomial> b) {
    auto lt = [](const Monomial& x, const Monomial& y) { return x.e < y.e; };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].e != b[i].e) return false;
    return true;
}

const std::vector<std::string> rnc3_gens = {"x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"};

} // namespace

TEST_CASE("stability and strong stability of monomial ideals", "[elimination]") {
    auto ctx2 = ctx_fp(2);
    auto ctx3 = ctx_fp(3);

    CHECK(is_stable(monos(ctx2, {"x0^2", "x0*x1", "x1^2"})));
    CHECK(is_borel_fixed(monos(ctx2, {"x0^2", "x0*x1", "x1^2"})));
    CHECK(is_stable(monos(ctx2, {"x0", "x1^2"})));
    CHECK_FALSE(is_stable(monos(ctx2, {"x1^2"})));
    CHECK_FALSE(is_stable(monos(ctx2, {"x0^2", "x1^2"})));
    CHECK_FALSE(is_borel_fixed(monos(ctx3, {"x1^2", "x1*x2", "x2^2"})));

    // stable but not strongly stable: the swap x1 -> x0 inside x1^2*x2 leaves
    // the ideal, while every swap of the largest variable stays
    auto gap = monos(ctx3, {"x0^3", "x0^2*x1", "x0*x1^2", "x1^3", "x1^2*x2"});
    CHECK(is_stable(gap));
    CHECK_FALSE(is_borel_fixed(gap));

    auto closed = borel_closure(gap);
    CHECK(is_borel_fixed(closed));
    CHECK(same_monomials(closed, monos(ctx3, {"x0^3", "x0^2*x1", "x0*x1^2", "x1^3",
                                              "x1^2*x2", "x0*x1*x2", "x0^2*x2"})));
    CHECK(same_monomials(borel_closure(closed), closed));
}

TEST_CASE("Eliahou-Kervaire tables on hand examples", "[elimination]") {
    auto ctx2 = ctx_fp(2);

    auto cube = ek_betti(monos(ctx2, {"x0^3", "x0^2*x1", "x0*x1^2", "x1^3"}));
    CHECK(cube.module_tag == "ideal");
    CHECK(cube.at(0, 3) == 4);
    CHECK(cube.at(1, 3) == 3);
    CHECK(cube.total_rank() == 7);

    auto sq = ek_betti(monos(ctx2, {"x0^2", "x0*x1", "x1^2"}));
    CHECK(sq.at(0, 2) == 3);
    CHECK(sq.at(1, 2) == 2);

    auto hist = m_histogram(monos(ctx2, {"x0^3", "x0^2*x1", "x0*x1^2", "x1^3"}));
    CHECK(hist.at(0) == 1);
    CHECK(hist.at(1) == 3);

    CHECK_THROWS_AS(ek_betti(monos(ctx2, {"x1^2"})), invariant_error);
}

TEST_CASE("Eliahou-Kervaire matches honest resolutions on Borel ideals", "[elimination]") {
    for (int n = 2; n <= 4; ++n) {
        auto ctx = ctx_fp(n);
        for (std::uint64_t s = 0; s < 8; ++s) {
            Rng rng(derive_seed(4101, std::uint64_t(n), s));
            std::vector<Monomial> seeds;
            for (int k = 0; k < 2; ++k) {
                Monomial m = monomial_one(n);
                int deg = 2 + int(rng.below(2));
                for (int d = 0; d < deg; ++d) {
                    int v = int(rng.below(std::uint64_t(n)));
                    m.e[std::size_t(v)] += 1;
                    m.deg += 1;
                }
                seeds.push_back(std::move(m));
            }
            auto borel = borel_closure(seeds);
            auto from_ek = ek_betti(borel);
            auto res = free_resolution(ctx, as_polys(ctx, borel));
            auto from_syz = quotient_to_ideal(betti_table(res));
            INFO("n=" << n << " trial=" << s);
            CHECK(from_ek.entries == from_syz.entries);
        }
    }
}

TEST_CASE("gin of the twisted cubic", "[elimination]") {
    auto ctx = ctx_fp(4);
    auto g = gin(ctx, parse_all(ctx, rnc3_gens), 2026);
    CHECK(same_monomials(g, monos(ctx, {"x0^2", "x0*x1", "x1^2"})));

    auto g2 = gin(ctx, parse_all(ctx, rnc3_gens), 97);
    CHECK(same_monomials(g, g2));
}

TEST_CASE("gin of a complete intersection of two quadrics", "[elimination]") {
    auto ctx = ctx_fp(4);
    auto gens = parse_all(ctx, {"x0*x3 - x1*x2", "x0^2 + x1^2 + x2^2 + x3^2"});
    auto g = gin(ctx, gens, 2026);
    CHECK(same_monomials(g, monos(ctx, {"x0^2", "x0*x1", "x1^3"})));
}

TEST_CASE("gin fixes strongly stable ideals and is seed-stable", "[elimination]") {
    auto ctx = ctx_fp(3);
    auto borel = monos(ctx, {"x0^2", "x0*x1", "x1^2"});
    auto g = gin(ctx, as_polys(ctx, borel), 7);
    CHECK(same_monomials(g, borel));
    CHECK(is_borel_fixed(g));

    RingContext<FP> small{3, MonomialOrder{}, FP(101)};
    CHECK_THROWS_WITH(gin(small, as_polys(small, borel), 7),
                      Catch::Matchers::ContainsSubstring("too small"));
}

TEST_CASE("section gin follows the drop-and-strip rule", "[elimination]") {
    auto ctx = ctx_fp(4);
    auto g = monos(ctx, {"x0^2", "x0*x1", "x1^2"});
    auto sec = section_gin(g, 2);
    std::vector<Monomial> want;
    for (const auto& s : {"x0^2", "x0*x1", "x1^2"}) {
        auto p = parse_polynomial(ctx_fp(3), s);
        want.push_back(p.terms.front().m);
    }
    CHECK(same_monomials(sec, want));

    auto h = monos(ctx, {"x0^2", "x0*x1", "x1^4", "x1^3*x2", "x0*x3"});

    auto sec2 = section_gin(h, 2);
    std::vector<Monomial> want2;
    for (const auto& s : {"x0^2", "x0*x1", "x1^3"})
        want2.push_back(parse_polynomial(ctx_fp(3), s).terms.front().m);
    CHECK(same_monomials(sec2, want2));

    // stripping x1 from x1^4 leaves the unit: the section is empty
    auto sec1 = section_gin(h, 1);
    REQUIRE(sec1.size() == 1);
    CHECK(sec1[0].deg == 0);
}

TEST_CASE("section gin agrees with an honest generic section", "[elimination]") {
    auto ctx = ctx_fp(4);
    auto gens = parse_all(ctx, rnc3_gens);
    auto g = gin(ctx, gens, 2026);

    auto sub = ctx_fp(3);
    Rng rng(derive_seed(2026, 31));
    std::vector<typename FP::Elem> ell;
    for (int j = 0; j < 3; ++j) ell.push_back(sub.field.random(rng));
    std::vector<Poly<FP>> cut;
    for (const auto& f : gens) {
        Poly<FP> img;
        for (const auto& t : f.terms) {
            Poly<FP> term = poly_constant(sub, t.c);
            for (int v = 0; v < 4; ++v)
                for (int k = 0; k < t.m.e[std::size_t(v)]; ++k) {
                    Poly<FP> factor;
                    if (v < 3) factor = poly_var(sub, v);
                    else {
                        std::vector<Term<FP>> ts;
                        for (int j = 0; j < 3; ++j)
                            if (!sub.field.is_zero(ell[std::size_t(j)]))
                                ts.push_back(Term<FP>{monomial_var(3, j), ell[std::size_t(j)]});
                        factor = poly_normalize(sub, std::move(ts));
                    }
                    term = mul(sub, term, factor);
                }
            img = add(sub, img, term);
        }
        cut.push_back(img);
    }
    Budget budget;
    auto sat = saturate_irrelevant(sub, buchberger(sub, cut, budget), budget);
    auto section_direct = gin(sub, sat, 2026);
    CHECK(same_monomials(section_direct, section_gin(g, 2)));
}

namespace {

std::vector<std::string> rnc4_gens() {
    return {"x1^2 - x0*x2", "x1*x2 - x0*x3", "x1*x3 - x0*x4",
            "x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"};
}

} // namespace

TEST_CASE("pushforward of the rational normal quartic", "[elimination]") {
    auto ctx = ctx_fp(5);
    Budget budget;
    Pushforward<FP> pf(ctx, parse_all(ctx, rnc4_gens()), 3, 2026, budget);

    std::map<std::pair<int, int>, long long> want_r = {
        {{0, 0}, 1}, {{1, 1}, 6}, {{2, 1}, 8}, {{3, 1}, 3}};
    CHECK(pf.table(0).entries == want_r);
    CHECK(pf.reg() == 1);

    std::map<std::pair<int, int>, long long> want_s1 = {
        {{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 5}, {{2, 1}, 3}};
    CHECK(pf.table(1).entries == want_s1);
    CHECK(pf.table(1).module_tag == "subring t=1");

    std::map<std::pair<int, int>, long long> want_s2 = {
        {{0, 0}, 1}, {{0, 1}, 2}, {{1, 1}, 3}};
    CHECK(pf.table(2).entries == want_s2);

    std::map<std::pair<int, int>, long long> want_s3 = {
        {{0, 0}, 1}, {{0, 1}, 3}};
    CHECK(pf.table(3).entries == want_s3);
    CHECK(pf.table(3).pd() == 0);
    CHECK(pf.table(3).total_rank() == 4);

    CHECK(all_pass(check_pd_drop(pf)));
    CHECK(all_pass(check_reg_equal(pf)));
    CHECK(all_pass(check_generator_degrees(pf)));
    CHECK(all_pass(check_ndp_descent(pf, 3)));
    CHECK(all_pass(check_cone_probe(pf, 3)));

    auto chain = check_strand_chain(pf, 3, 2);
    CHECK(all_pass(chain));
    CHECK(pf.table(3).at(0, 1) == 3);
    CHECK(pf.table(2).at(1, 1) == 3);
    CHECK(pf.table(1).at(2, 1) == 3);
    CHECK(pf.table(0).at(3, 1) == 3);

    auto free_e = check_freeness(pf, 3, 4, true);
    CHECK(all_pass(free_e));

    CHECK_THROWS_AS(pf.table(4), invariant_error);
}

TEST_CASE("pushforward of the twisted cubic", "[elimination]") {
    auto ctx = ctx_fp(4);
    Budget budget;
    Pushforward<FP> pf(ctx, parse_all(ctx, rnc3_gens), 2, 11, budget);

    std::map<std::pair<int, int>, long long> want_s1 = {
        {{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 2}};
    CHECK(pf.table(1).entries == want_s1);

    std::map<std::pair<int, int>, long long> want_s2 = {
        {{0, 0}, 1}, {{0, 1}, 2}};
    CHECK(pf.table(2).entries == want_s2);

    CHECK(all_pass(check_pd_drop(pf)));
    CHECK(all_pass(check_reg_equal(pf)));
    CHECK(all_pass(check_cone_probe(pf, 2)));
    CHECK(all_pass(check_freeness(pf, 2, 3, true)));
}

TEST_CASE("projection centers beyond the codimension always meet", "[elimination]") {
    auto ctx = ctx_fp(5);
    Budget budget;
    CHECK_THROWS_AS(Pushforward<FP>(ctx, parse_all(ctx, rnc4_gens()), 4, 2026, budget),
                    center_error);
    try {
        Pushforward<FP> pf(ctx, parse_all(ctx, rnc4_gens()), 4, 2026, budget);
    } catch (const center_error& e) {
        CHECK(std::string(e.what()).find("--seed") != std::string::npos);
    }
}

TEST_CASE("pushforward tables are seed independent", "[elimination]") {
    auto ctx = ctx_fp(4);
    Budget b1, b2;
    Pushforward<FP> a(ctx, parse_all(ctx, rnc3_gens), 2, 1, b1);
    Pushforward<FP> b(ctx, parse_all(ctx, rnc3_gens), 2, 999, b2);
    for (int t = 0; t <= 2; ++t) CHECK(a.table(t).entries == b.table(t).entries);
}

TEST_CASE("pushforward over the rationals", "[elimination]") {
    RingContext<Rationals> ctx{4, MonomialOrder{}, Rationals{}};
    std::vector<Poly<Rationals>> gens;
    for (const auto& s : rnc3_gens) gens.push_back(parse_polynomial(ctx, s));
    Budget budget;
    Pushforward<Rationals> pf(ctx, gens, 1, 5, budget);
    std::map<std::pair<int, int>, long long> want_s1 = {
        {{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 2}};
    CHECK(pf.table(1).entries == want_s1);
}
