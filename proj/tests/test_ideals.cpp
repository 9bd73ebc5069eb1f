#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symgb/ideals.hpp"
#include "symgb/polynomial_io.hpp"
#include "testkit.hpp"

using namespace symgb;

TEST_CASE("cyclic ideal generators") {
    auto c3 = cyclic_ideal(3);
    REQUIRE(c3.generators.size() == 3);
    CHECK(c3.generators[0] == parse_polynomial(c3.ctx, "x1 + x2 + x3"));
    CHECK(c3.generators[1] == parse_polynomial(c3.ctx, "x1*x2 + x2*x3 + x3*x1"));
    CHECK(c3.generators[2] == parse_polynomial(c3.ctx, "x1*x2*x3 - 1"));
    CHECK(*c3.symmetry == parse_permutation("(1 2 3)", 3));

    auto c2 = cyclic_ideal(2);
    REQUIRE(c2.generators.size() == 2);
    CHECK(c2.generators[0] == parse_polynomial(c2.ctx, "x1 + x2"));
    CHECK(c2.generators[1] == parse_polynomial(c2.ctx, "x1*x2 - 1"));

    CHECK_THROWS_AS(cyclic_ideal(1), MathError);
}

TEST_CASE("cyclic generators are fixed by the n-cycle and by reflections") {
    for (int n : {3, 4, 5, 6, 7}) {
        auto spec = cyclic_ideal(n);
        auto check_invariance = [&](const Permutation& sigma) {
            for (const auto& g : spec.generators) {
                auto image = apply(spec.ctx, sigma, g);
                bool found = false;
                for (const auto& h : spec.generators) found = found || h == image;
                CHECK(found);
            }
        };
        check_invariance(*spec.symmetry);
        if (n == 7) check_invariance(parse_permutation("(1 6)(2 5)(3 4)", 7));
        if (n == 6) check_invariance(parse_permutation("(1 5)(2 4)", 6));
    }
}

TEST_CASE("swiss francs ideal shape") {
    auto spec = swiss_francs_ideal();
    CHECK(spec.ctx.names ==
          std::vector<std::string>{"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "u"});
    CHECK(spec.generators.size() == 12);
    CHECK(*spec.symmetry == parse_permutation("(3 4)(7 8)", 9));

    // f_1 has total degree 9: b_j times four bilinear factors.
    CHECK(total_degree(spec.generators[3]) == 9);
    // localization generator 1 - u*a1
    CHECK(spec.generators[11] == parse_polynomial(spec.ctx, "1 - u*a1"));

    // Setwise symmetry after closing under the permutation: already closed.
    auto closed = symmetrize_generators<Rationals>(spec.ctx, spec.generators, *spec.symmetry);
    CHECK(closed.size() == spec.generators.size());
}

TEST_CASE("swiss francs alternative labeling") {
    auto spec = swiss_francs_ideal(true);
    CHECK(spec.ctx.names ==
          std::vector<std::string>{"u", "a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"});
    CHECK(*spec.symmetry == parse_permutation("(4 5)(8 9)", 9));
    auto closed = symmetrize_generators<Rationals>(spec.ctx, spec.generators, *spec.symmetry);
    CHECK(closed.size() == spec.generators.size());

    // Same ideal up to the variable relabeling u-first -> u-last.
    auto base = swiss_francs_ideal();
    std::vector<Polynomial<Rationals>> relabeled;
    for (const auto& g : spec.generators) {
        std::vector<Term<Rationals>> terms;
        for (const auto& t : g.terms) {
            Monomial m(9);
            for (int i = 0; i < 9; ++i) m.exps[(i + 8) % 9] = t.mono.exps[i];
            terms.push_back({t.coeff, m});
        }
        relabeled.push_back(normalized(base.ctx, terms));
    }
    CHECK(relabeled == base.generators);
}

TEST_CASE("ideal file round-trip") {
    auto spec = cyclic_ideal(4);
    auto text = print_ideal(IdealSpec{spec});
    auto parsed = parse_ideal_text(text);
    REQUIRE(std::holds_alternative<IdealSpecQ>(parsed));
    const auto& q = std::get<IdealSpecQ>(parsed);
    CHECK(q.ctx.names == spec.ctx.names);
    CHECK(q.ctx.ordering == spec.ctx.ordering);
    CHECK(q.generators == spec.generators);
    CHECK(q.symmetry == spec.symmetry);
    CHECK(print_ideal(parsed) == text);
}

TEST_CASE("prime field ideal file") {
    std::string text =
        "ring: F 127\n"
        "vars: x y\n"
        "order: dp\n"
        "x^2 + 126*y\n"
        "x*y - 3\n";
    auto parsed = parse_ideal_text(text);
    REQUIRE(std::holds_alternative<IdealSpecP>(parsed));
    const auto& p = std::get<IdealSpecP>(parsed);
    CHECK(p.ctx.ring.modulus() == 127);
    CHECK(p.generators.size() == 2);
    CHECK(p.generators[1] == parse_polynomial(p.ctx, "x*y + 124"));
    // Canonical residues print without minus signs; reparse is exact.
    auto reparsed = parse_ideal_text(print_ideal(parsed));
    CHECK(std::get<IdealSpecP>(reparsed).generators == p.generators);
    CHECK(print_ideal(reparsed) == print_ideal(parsed));
}

TEST_CASE("worked example file parses to the order-2 symmetric ideal") {
    std::string text =
        "ring: Q\n"
        "vars: x y z\n"
        "order: dp\n"
        "perm: (1 2)(3)\n"
        "# generators\n"
        "x^2*y^2 - z\n"
        "x*y - 2*y + 3*z\n"
        "\n"
        "x*y - 2*x + 3*z\n";
    auto parsed = parse_ideal_text(text);
    const auto& q = std::get<IdealSpecQ>(parsed);
    CHECK(q.generators.size() == 3);
    CHECK(q.symmetry == parse_permutation("(1 2)", 3));
    CHECK(q.generators[0] == parse_polynomial(q.ctx, "x^2*y^2 - z"));
}

TEST_CASE("empty generator list gives the zero ideal spec") {
    auto parsed = parse_ideal_text("ring: Q\nvars: x\norder: dp\n");
    CHECK(std::get<IdealSpecQ>(parsed).generators.empty());
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_ideal_text("ring: Q\nvars: x y\norder: dp\nx^-1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(e.column == 3);
    }
    CHECK_THROWS_AS(parse_ideal_text("ring: Z\nvars: x\norder: dp\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_text("ring: F 6\nvars: x\norder: dp\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_text("vars: x\norder: dp\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_text(""), ParseError);
}

TEST_CASE("ideal reduction mod p") {
    auto spec = cyclic_ideal(3);
    auto p = reduce_ideal(spec, 101);
    CHECK(p.ctx.ring.modulus() == 101);
    CHECK(p.generators.size() == 3);
    CHECK(p.generators[2] == parse_polynomial(p.ctx, "x1*x2*x3 + 100"));
    CHECK(p.symmetry == spec.symmetry);
}
