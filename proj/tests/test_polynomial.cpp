#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symgb/polynomial_io.hpp"
#include "testkit.hpp"

using namespace symgb;

namespace {

RingContext<Rationals> qxyz() {
    return make_context(Rationals{}, {"x", "y", "z"}, OrderingSpec::degrevlex(3));
}

template <class Ring>
Polynomial<Ring> P(const RingContext<Ring>& ctx, const char* text) {
    return parse_polynomial(ctx, text);
}

}  // namespace

TEST_CASE("degrevlex compares") {
    auto spec = OrderingSpec::degrevlex(3);
    // x^2y^2 vs z: degree decides.
    CHECK(compare(Monomial{2, 2, 0}, Monomial{0, 0, 1}, spec) > 0);
    CHECK(compare(Monomial{1, 1, 0}, Monomial{1, 1, 0}, spec) == 0);
    // xy vs z^2: equal degree; last differing exponent index 3 has 0 < 2, so
    // xy is greater (checked by hand against the defining condition).
    CHECK(compare(Monomial{1, 1, 0}, Monomial{0, 0, 2}, spec) > 0);
    // x z vs y^2: exponents (1,0,1) vs (0,2,0): last difference at z, 1 > 0
    // so xz is smaller.
    CHECK(compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}, spec) < 0);
    CHECK_THROWS_AS(compare(Monomial{1}, Monomial{1, 0}, spec), MathError);
}

TEST_CASE("degrevlex brute consistency with the defining condition") {
    // Oracle: direct transliteration of the definition.
    auto oracle = [](const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db ? 1 : -1;
        for (int i = static_cast<int>(a.nvars()) - 1; i >= 0; --i)
            if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
        return 0;
    };
    auto spec = OrderingSpec::degrevlex(3);
    std::vector<Monomial> monos;
    for (uint16_t i = 0; i <= 3; ++i)
        for (uint16_t j = 0; j <= 3; ++j)
            for (uint16_t k = 0; k <= 3; ++k) monos.push_back(Monomial{i, j, k});
    for (const auto& a : monos)
        for (const auto& b : monos) CHECK(compare(a, b, spec) == oracle(a, b));
}

TEST_CASE("lex compares") {
    auto spec = OrderingSpec::lex(3);
    CHECK(compare(Monomial{1, 0, 0}, Monomial{0, 5, 5}, spec) > 0);
    CHECK(compare(Monomial{1, 2, 0}, Monomial{1, 1, 9}, spec) > 0);
}

TEST_CASE("block ordering compares segment by segment") {
    // (dp on x,y | lp on z): first segment decides unless equal.
    auto spec = OrderingSpec::block({{OrderKind::degrevlex, 2}, {OrderKind::lex, 1}});
    CHECK(compare(Monomial{1, 0, 0}, Monomial{0, 0, 7}, spec) > 0);
    CHECK(compare(Monomial{1, 1, 0}, Monomial{1, 1, 2}, spec) < 0);
    CHECK(spec.nvars() == 3);
    CHECK(!spec.is_degree_ordering());
    CHECK(OrderingSpec::degrevlex(3).is_degree_ordering());
}

TEST_CASE("ordering text forms") {
    CHECK(format_ordering(OrderingSpec::degrevlex(3)) == "dp");
    CHECK(format_ordering(OrderingSpec::lex(2)) == "lp");
    auto block = parse_ordering("block:dp8,lp1", 9);
    CHECK(format_ordering(block) == "block:dp8,lp1");
    CHECK(block.segments.size() == 2);
    CHECK_THROWS_AS(parse_ordering("block:dp8,lp2", 9), MathError);
    CHECK_THROWS_AS(parse_ordering("zp", 3), MathError);
}

TEST_CASE("addition cancels") {
    auto ctx = qxyz();
    auto f = P(ctx, "x*y - 2*y + 3*z");
    CHECK(add(ctx, f, P(ctx, "2*y")) == P(ctx, "x*y + 3*z"));
}

TEST_CASE("difference of squares") {
    auto ctx = qxyz();
    CHECK(mul(ctx, P(ctx, "x+y"), P(ctx, "x-y")) == P(ctx, "x^2 - y^2"));
}

TEST_CASE("leading data under degrevlex") {
    auto ctx = qxyz();
    auto f = P(ctx, "x^2*y^2 - z");
    CHECK(leading_monomial(f) == Monomial{2, 2, 0});
    CHECK(leading_coefficient(f) == BigRational(1));
    CHECK(tail(f) == P(ctx, "-z"));

    auto g = P(ctx, "12*y*z - 9*z^2 - 8*y + 13*z");
    CHECK(leading_term(g).coeff == BigRational(12));
    CHECK(leading_monomial(g) == Monomial{0, 1, 1});

    auto c = P(ctx, "5");
    CHECK(leading_monomial(c).is_one());
    CHECK(leading_coefficient(c) == BigRational(5));
    CHECK(tail(c).is_zero());

    CHECK_THROWS_AS(leading_term(zero_poly(ctx)), MathError);
}

TEST_CASE("substitute is the ring homomorphism on variables") {
    auto ctx = qxyz();
    // Images x -> x+y, y -> y-x, z -> z.
    std::vector<Polynomial<Rationals>> images = {P(ctx, "x+y"), P(ctx, "y-x"), P(ctx, "z")};
    CHECK(substitute<Rationals>(ctx, P(ctx, "x*y - 2*y + 3*z"), images) ==
          P(ctx, "-x^2 + y^2 + 2*x - 2*y + 3*z"));
    CHECK(substitute<Rationals>(ctx, P(ctx, "x^2*y^2"), images) ==
          P(ctx, "x^4 - 2*x^2*y^2 + y^4"));

    std::vector<Polynomial<Rationals>> id = {P(ctx, "x"), P(ctx, "y"), P(ctx, "z")};
    auto f = P(ctx, "3*x^2*y - 5/7*z + 1");
    CHECK(substitute<Rationals>(ctx, f, id) == f);
}

TEST_CASE("substitute is multiplicative and additive on random inputs") {
    auto ctx = qxyz();
    testkit::Rng rng(7);
    std::vector<Polynomial<Rationals>> images = {P(ctx, "x+y"), P(ctx, "y-x"), P(ctx, "z - 1")};
    for (int trial = 0; trial < 25; ++trial) {
        auto f = testkit::random_polynomial(ctx, rng, 4, 3, 5);
        auto g = testkit::random_polynomial(ctx, rng, 4, 3, 5);
        CHECK(substitute<Rationals>(ctx, mul(ctx, f, g), images) ==
              mul(ctx, substitute<Rationals>(ctx, f, images), substitute<Rationals>(ctx, g, images)));
        CHECK(substitute<Rationals>(ctx, add(ctx, f, g), images) ==
              add(ctx, substitute<Rationals>(ctx, f, images), substitute<Rationals>(ctx, g, images)));
    }
}

TEST_CASE("ring axioms on random sparse polynomials over F_p") {
    auto ctx = make_context(PrimeField(101), {"x", "y", "z"}, OrderingSpec::degrevlex(3));
    testkit::Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        auto f = testkit::random_polynomial(ctx, rng, 5, 4, 50);
        auto g = testkit::random_polynomial(ctx, rng, 5, 4, 50);
        auto h = testkit::random_polynomial(ctx, rng, 5, 4, 50);
        CHECK(mul(ctx, f, g) == mul(ctx, g, f));
        CHECK(mul(ctx, f, add(ctx, g, h)) == add(ctx, mul(ctx, f, g), mul(ctx, f, h)));
        CHECK(mul(ctx, mul(ctx, f, g), h) == mul(ctx, f, mul(ctx, g, h)));
        CHECK(add(ctx, f, negate_poly(ctx, f)).is_zero());
    }
}

TEST_CASE("normalization is idempotent and drops zeros") {
    auto ctx = qxyz();
    std::vector<Term<Rationals>> raw = {{BigRational(2), Monomial{1, 0, 0}},
                                        {BigRational(-2), Monomial{1, 0, 0}},
                                        {BigRational(3), Monomial{0, 1, 0}},
                                        {BigRational(4), Monomial{0, 1, 0}}};
    auto f = normalized(ctx, raw);
    CHECK(f == P(ctx, "7*y"));
    CHECK(normalized(ctx, f.terms) == f);
}

TEST_CASE("leading monomial of a product is the product of leading monomials") {
    auto ctx = make_context(PrimeField(101), {"x", "y", "z"}, OrderingSpec::degrevlex(3));
    testkit::Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = testkit::random_polynomial(ctx, rng, 5, 4, 50);
        auto g = testkit::random_polynomial(ctx, rng, 5, 4, 50);
        if (f.is_zero() || g.is_zero()) continue;
        auto prod = mul(ctx, f, g);
        CHECK(leading_monomial(prod) == mono_mul(leading_monomial(f), leading_monomial(g)));
        CHECK(leading_monomial(prod).degree() ==
              leading_monomial(f).degree() + leading_monomial(g).degree());
    }
}

TEST_CASE("primitive part clears denominators and content") {
    auto ctx = qxyz();
    auto f = P(ctx, "1/2*x - 1/2*y");
    CHECK(primitive_part(ctx, f) == P(ctx, "x - y"));
    CHECK(primitive_part(ctx, P(ctx, "-4*x + 6*y")) == P(ctx, "2*x - 3*y"));
    CHECK(primitive_part(ctx, zero_poly(ctx)).is_zero());
}

TEST_CASE("printer and parser round-trip") {
    auto ctx = qxyz();
    for (const char* text : {"3*x^2*y - 5/7*z + 1", "x", "0", "-x - y", "1/2", "x^2 - y^2",
                             "81*z^3 + 36*z^2 - 56*y + 115*z"}) {
        auto f = P(ctx, text);
        CHECK(parse_polynomial(ctx, to_string(ctx, f)) == f);
    }
    CHECK(to_string(ctx, P(ctx, "x*y - 2*y + 3*z")) == "x*y - 2*y + 3*z");
    CHECK(to_string(ctx, zero_poly(ctx)) == "0");
    CHECK(to_string(ctx, P(ctx, "-1/2*x")) == "-1/2*x");

    auto pctx = make_context(PrimeField(7), {"x", "y"}, OrderingSpec::degrevlex(2));
    auto g = parse_polynomial(pctx, "1/2*x - 1/2*y");
    CHECK(g == parse_polynomial(pctx, "4*x + 3*y"));
    CHECK(parse_polynomial(pctx, to_string(pctx, g)) == g);
}

TEST_CASE("round-trip on random polynomials") {
    auto ctx = qxyz();
    testkit::Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        auto f = testkit::random_polynomial(ctx, rng, 6, 5, 9999);
        CHECK(parse_polynomial(ctx, to_string(ctx, f)) == f);
    }
}

TEST_CASE("parser errors carry positions") {
    auto ctx = qxyz();
    CHECK_THROWS_AS(P(ctx, "x^-1"), ParseError);
    CHECK_THROWS_AS(P(ctx, "w + 1"), ParseError);
    CHECK_THROWS_AS(P(ctx, "x + "), ParseError);
    CHECK_THROWS_AS(P(ctx, "(x"), ParseError);
    try {
        P(ctx, "x^-1");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column == 3);
    }
}

TEST_CASE("exponent overflow detected") {
    Monomial a{40000, 0};
    Monomial b{40000, 1};
    CHECK_THROWS_AS(mono_mul(a, b), MathError);
}
