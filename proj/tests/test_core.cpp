#include <catch2/catch_amalgamated.hpp>

#include "syzygy/fields.hpp"
#include "syzygy/io.hpp"
#include "syzygy/poly.hpp"
#include "syzygy/ring.hpp"

using namespace syzygy;

namespace {

RingContext<PrimeField> ctx_fp(int nvars, std::int64_t q = 32003,
                               MonomialOrder ord = grevlex_order()) {
    return RingContext<PrimeField>{nvars, ord, PrimeField(q)};
}

RingContext<Rationals> ctx_qq(int nvars, MonomialOrder ord = grevlex_order()) {
    return RingContext<Rationals>{nvars, ord, Rationals{}};
}

template <class K>
void check_field_axioms(const K& f, Rng& rng) {
    for (int it = 0; it < 200; ++it) {
        auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
        REQUIRE(f.equal(f.add(a, b), f.add(b, a)));
        REQUIRE(f.equal(f.mul(a, b), f.mul(b, a)));
        REQUIRE(f.equal(f.add(f.add(a, b), c), f.add(a, f.add(b, c))));
        REQUIRE(f.equal(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
        REQUIRE(f.equal(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
        REQUIRE(f.equal(f.add(a, f.neg(a)), f.zero()));
        REQUIRE(f.equal(f.add(a, f.zero()), a));
        REQUIRE(f.equal(f.mul(a, f.one()), a));
        auto n = f.random_nonzero(rng);
        REQUIRE(f.equal(f.mul(n, f.inv(n)), f.one()));
    }
}

template <class K>
Monomial random_monomial(const RingContext<K>& ctx, Rng& rng, int maxexp = 4) {
    std::vector<std::int32_t> e(std::size_t(ctx.nvars));
    for (auto& x : e) x = std::int32_t(rng.below(std::uint64_t(maxexp + 1)));
    return make_monomial(std::move(e));
}

template <class K>
Poly<K> random_poly(const RingContext<K>& ctx, Rng& rng, int nterms = 5) {
    std::vector<Term<K>> ts;
    for (int i = 0; i < nterms; ++i)
        ts.push_back(Term<K>{random_monomial(ctx, rng), ctx.field.random(rng)});
    return poly_normalize(ctx, std::move(ts));
}

} // namespace

TEST_CASE("prime field and rationals satisfy field axioms on samples", "[core]") {
    Rng rng(12345);
    check_field_axioms(PrimeField(32003), rng);
    check_field_axioms(PrimeField(7), rng);
    check_field_axioms(Rationals{}, rng);
}

TEST_CASE("prime field rejects non-prime and even moduli", "[core]") {
    REQUIRE_THROWS_AS(PrimeField(32004), invariant_error);
    REQUIRE_THROWS_AS(PrimeField(2), invariant_error);
    REQUIRE_THROWS_AS(PrimeField(1), invariant_error);
}

TEST_CASE("rational arithmetic is exact", "[core]") {
    Rationals f;
    auto third = f.from_fraction(1, 3);
    auto sum = f.add(f.add(third, third), third);
    REQUIRE(f.is_one(sum));
    REQUIRE(f.str(f.from_fraction(2, -4)) == "-1/2");
}

TEST_CASE("grevlex order on degree-2 monomials in three variables", "[core]") {
    auto ctx = ctx_fp(3);
    auto m = [&](std::int32_t a, std::int32_t b, std::int32_t c) {
        return make_monomial({a, b, c});
    };
    // hand-enumerated descending list
    std::vector<Monomial> expect = {
        m(2, 0, 0), m(1, 1, 0), m(0, 2, 0), m(1, 0, 1), m(0, 1, 1), m(0, 0, 2),
    };
    for (std::size_t i = 0; i + 1 < expect.size(); ++i)
        REQUIRE(ctx.cmp(expect[i], expect[i + 1]) > 0);

    // x1^2 > x0*x2 is the signature grevlex comparison
    REQUIRE(ctx.cmp(m(0, 2, 0), m(1, 0, 1)) > 0);
    // degree dominates
    REQUIRE(ctx.cmp(m(0, 0, 2), m(1, 0, 0)) > 0);
}

TEST_CASE("lex and block orders", "[core]") {
    auto lex = ctx_fp(3, 32003, lex_order());
    REQUIRE(lex.cmp(make_monomial({1, 0, 2}), make_monomial({0, 3, 0})) > 0);

    auto blk = ctx_fp(3, 32003, block_order(1));
    // any x0 beats the whole second block
    REQUIRE(blk.cmp(make_monomial({1, 0, 1}), make_monomial({0, 3, 0})) > 0);
    // within the second block, grevlex
    REQUIRE(blk.cmp(make_monomial({0, 3, 0}), make_monomial({0, 0, 3})) > 0);
}

TEST_CASE("monomial orders are total and multiplicative on samples", "[core]") {
    Rng rng(99);
    for (MonomialOrder ord : {grevlex_order(), lex_order(), block_order(2)}) {
        auto ctx = ctx_fp(4, 32003, ord);
        Monomial one = monomial_one(4);
        for (int it = 0; it < 300; ++it) {
            auto a = random_monomial(ctx, rng), b = random_monomial(ctx, rng),
                 c = random_monomial(ctx, rng);
            int ab = ctx.cmp(a, b);
            REQUIRE(ctx.cmp(b, a) == -ab);
            REQUIRE((ab == 0) == (a == b));
            if (ab > 0 && ctx.cmp(b, c) > 0) REQUIRE(ctx.cmp(a, c) > 0);
            // compatibility with multiplication
            REQUIRE(ctx.cmp(monomial_mul(a, c), monomial_mul(b, c)) == ab);
            // 1 is the least monomial
            if (a != one) REQUIRE(ctx.cmp(a, one) > 0);
        }
    }
}

TEST_CASE("monomial gcd, lcm, divisibility", "[core]") {
    auto a = make_monomial({2, 1, 0});
    auto b = make_monomial({1, 3, 1});
    REQUIRE(monomial_lcm(a, b) == make_monomial({2, 3, 1}));
    REQUIRE(monomial_gcd(a, b) == make_monomial({1, 1, 0}));
    REQUIRE(monomial_divides(monomial_gcd(a, b), a));
    REQUIRE(!monomial_divides(a, b));
    REQUIRE(monomial_mul(monomial_div(monomial_lcm(a, b), a), a) == monomial_lcm(a, b));
    REQUIRE(monomial_coprime(make_monomial({2, 0, 0}), make_monomial({0, 0, 3})));
}

TEST_CASE("polynomial arithmetic identities on samples", "[core]") {
    Rng rng(2024);
    auto run = [&](auto ctx) {
        for (int it = 0; it < 40; ++it) {
            auto f = random_poly(ctx, rng), g = random_poly(ctx, rng), h = random_poly(ctx, rng);
            REQUIRE(poly_equal(ctx, sub(ctx, add(ctx, f, g), g), f));
            REQUIRE(poly_equal(ctx, mul(ctx, f, g), mul(ctx, g, f)));
            REQUIRE(poly_equal(ctx, mul(ctx, f, add(ctx, g, h)),
                               add(ctx, mul(ctx, f, g), mul(ctx, f, h))));
            REQUIRE(poly_equal(ctx, mul(ctx, f, poly_one(ctx)), f));
            if (!f.is_zero()) {
                auto mf = make_monic(ctx, f);
                REQUIRE(ctx.field.is_one(leading_term(mf).c));
            }
        }
    };
    run(ctx_fp(3));
    run(ctx_qq(3));
}

TEST_CASE("parser handles the documented grammar", "[core]") {
    auto ctx = ctx_fp(3);
    auto f = parse_polynomial(ctx, "x0^2*x1 - 3*x1*x2^2 + x2^3");
    REQUIRE(f.terms.size() == 3);
    REQUIRE(leading_monomial(f) == make_monomial({2, 1, 0}));
    REQUIRE(f.terms[1].c == ctx.field.from_int(-3));
    REQUIRE(poly_str(ctx, f) == "x0^2*x1 + 32000*x1*x2^2 + x2^3");

    auto qctx = ctx_qq(2);
    auto g = parse_polynomial(qctx, "1/2*x0^2 - x0*x1");
    REQUIRE(poly_str(qctx, g) == "1/2*x0^2 - x0*x1");

    // repeated factors multiply out
    auto h = parse_polynomial(ctx, "x0*x0*x1^2");
    REQUIRE(leading_monomial(h) == make_monomial({2, 2, 0}));

    // constants
    REQUIRE(parse_polynomial(ctx, "7").terms.size() == 1);
    REQUIRE(parse_polynomial(ctx, "x0 - x0").is_zero());
}

TEST_CASE("parser rejects malformed input with positions", "[core]") {
    auto ctx = ctx_fp(3);
    REQUIRE_THROWS_AS(parse_polynomial(ctx, "x5"), parse_error);
    REQUIRE_THROWS_AS(parse_polynomial(ctx, "x0^"), parse_error);
    REQUIRE_THROWS_AS(parse_polynomial(ctx, "2**x0"), parse_error);
    REQUIRE_THROWS_AS(parse_polynomial(ctx, "x0 +"), parse_error);
    REQUIRE_THROWS_AS(parse_polynomial(ctx, "x0 x1"), parse_error);
    REQUIRE_THROWS_AS(parse_polynomial(ctx, ""), parse_error);
    REQUIRE_THROWS_AS(parse_polynomial(ctx, "1/0*x0"), parse_error);
    try {
        parse_polynomial(ctx, "x0 + y1");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(e.position() == 5);
    }
}

TEST_CASE("print-parse round trip on random polynomials", "[core]") {
    Rng rng(777);
    auto run = [&](auto ctx) {
        for (int it = 0; it < 60; ++it) {
            auto f = random_poly(ctx, rng, 6);
            auto back = parse_polynomial(ctx, poly_str(ctx, f));
            REQUIRE(poly_equal(ctx, back, f));
        }
    };
    run(ctx_fp(4));
    run(ctx_qq(3));
}

TEST_CASE("ideal file header parsing", "[core]") {
    std::istringstream in(
        "# twisted cubic\n"
        "ring 4 vars over F32003\n"
        "ideal:\n"
        "x1^2 - x0*x2\n"
        "x1*x2 - x0*x3\n"
        "x2^2 - x1*x3\n");
    auto txt = read_ideal_text(in);
    REQUIRE(txt.nvars == 4);
    REQUIRE(!txt.field.rational);
    REQUIRE(txt.field.q == 32003);
    REQUIRE(txt.polys.size() == 3);

    auto ctx = ctx_fp(4);
    auto gens = parse_ideal_body(ctx, txt);
    REQUIRE(gens.size() == 3);
    for (const auto& g : gens) REQUIRE(is_homogeneous(g));

    std::istringstream bad("ring 4 vars over GF9\nideal:\n");
    REQUIRE_THROWS_AS(read_ideal_text(bad), parse_error);
    std::istringstream noideal("ring 4 vars over QQ\nx0\n");
    REQUIRE_THROWS_AS(read_ideal_text(noideal), parse_error);
}
