#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symgb/ideals.hpp"
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

std::vector<Polynomial<Rationals>> worked_generators(const RingContext<Rationals>& ctx) {
    return {P(ctx, "x^2*y^2 - z"), P(ctx, "x*y - 2*y + 3*z"), P(ctx, "x*y - 2*x + 3*z")};
}

}  // namespace

TEST_CASE("worked example end to end") {
    auto ctx = qxyz();
    auto F = worked_generators(ctx);
    auto sigma = parse_permutation("(1 2)(3)", 3);
    auto report = symmetric_groebner<Rationals>(ctx, F, sigma);

    CHECK(report.k == 2);
    CHECK(report.xi == BigRational(-1));
    CHECK(report.action.exponents == std::vector<int>{1, 0, 0});

    // First-phase basis: the reduced basis of the transformed ideal.
    std::vector<Polynomial<Rationals>> first_phase = {
        P(ctx, "x"), P(ctx, "12*y*z - 9*z^2 - 8*y + 13*z"), P(ctx, "y^2 - 2*y + 3*z"),
        P(ctx, "81*z^3 + 36*z^2 - 56*y + 115*z")};
    std::vector<Polynomial<Rationals>> first_phase_monic;
    for (auto& g : first_phase) first_phase_monic.push_back(make_monic(ctx, g));
    std::sort(first_phase_monic.begin(), first_phase_monic.end(), [&](const auto& a, const auto& b) {
        return less(leading_monomial(a), leading_monomial(b), ctx.ordering);
    });
    CHECK(report.transformed_basis.elements == first_phase_monic);

    // Final basis.
    std::vector<Polynomial<Rationals>> final_g = {
        P(ctx, "x - y"), P(ctx, "12*y*z - 9*z^2 - 8*y + 13*z"), P(ctx, "y^2 - 2*y + 3*z"),
        P(ctx, "81*z^3 + 36*z^2 - 56*y + 115*z")};
    std::vector<Polynomial<Rationals>> final_monic;
    for (auto& g : final_g) final_monic.push_back(make_monic(ctx, g));
    std::sort(final_monic.begin(), final_monic.end(), [&](const auto& a, const auto& b) {
        return less(leading_monomial(a), leading_monomial(b), ctx.ordering);
    });
    CHECK(report.basis.elements == final_monic);

    // And it agrees with the direct computation.
    CHECK(report.basis == buchberger<Rationals>(ctx, F));
}

TEST_CASE("oracle equality on cyclic ideals over prime fields") {
    // 5 | 31 - 1 and 6 | 13 - 1.
    {
        auto spec = reduce_ideal(cyclic_ideal(5), 31);
        auto report = symmetric_groebner<PrimeField>(spec.ctx, spec.generators, *spec.symmetry);
        CHECK(report.basis == buchberger<PrimeField>(spec.ctx, spec.generators));
    }
    {
        auto spec = reduce_ideal(cyclic_ideal(6), 13);
        auto report = symmetric_groebner<PrimeField>(spec.ctx, spec.generators, *spec.symmetry);
        CHECK(report.basis == buchberger<PrimeField>(spec.ctx, spec.generators));
    }
}

TEST_CASE("identity permutation short-circuits to plain buchberger") {
    auto ctx = qxyz();
    auto F = worked_generators(ctx);
    auto report = symmetric_groebner<Rationals>(ctx, F, Permutation::identity(3));
    CHECK(report.k == 1);
    CHECK(report.basis == buchberger<Rationals>(ctx, F));
    CHECK(report.transformed_basis == report.basis);
}

TEST_CASE("error taxonomy") {
    auto F3 = make_context(PrimeField(3), {"x", "y", "z"}, OrderingSpec::degrevlex(3));
    std::vector<Polynomial<PrimeField>> F = {parse_polynomial(F3, "x + y + z")};
    auto rot = parse_permutation("(1 2 3)", 3);
    // characteristic divides the order
    CHECK_THROWS_AS(symmetric_groebner<PrimeField>(F3, F, rot), NotApplicableError);
    // char 3, order 6: still divisible
    auto ctx6 = make_context(PrimeField(3), {"a", "b", "c", "d", "e", "f"},
                             OrderingSpec::degrevlex(6));
    std::vector<Polynomial<PrimeField>> F6 = {parse_polynomial(ctx6, "a + b")};
    CHECK_THROWS_AS(
        symmetric_groebner<PrimeField>(ctx6, F6, parse_permutation("(1 2 3)(4 5)", 6)),
        NotApplicableError);

    // over Q, order > 2 needs an extension
    auto qctx = qxyz();
    std::vector<Polynomial<Rationals>> FQ = {parse_polynomial(qctx, "x + y + z")};
    CHECK_THROWS_AS(symmetric_groebner<Rationals>(qctx, FQ, rot), UnsupportedExtensionError);

    // over F_p with k not dividing p - 1
    auto F7 = make_context(PrimeField(7), {"x", "y", "z", "w"}, OrderingSpec::degrevlex(4));
    std::vector<Polynomial<PrimeField>> F7gens = {parse_polynomial(F7, "x + y")};
    CHECK_THROWS_AS(
        symmetric_groebner<PrimeField>(F7, F7gens, parse_permutation("(1 2 3 4)", 4)),
        NoPrimitiveRootError);

    // degree ordering required
    auto lexctx = make_context(Rationals{}, {"x", "y"}, OrderingSpec::lex(2));
    std::vector<Polynomial<Rationals>> lexF = {parse_polynomial(lexctx, "x + y")};
    CHECK_THROWS_AS(symmetric_groebner<Rationals>(lexctx, lexF, parse_permutation("(1 2)", 2)),
                    MathError);
}

TEST_CASE("symmetry verification option") {
    auto ctx = qxyz();
    auto swap12 = parse_permutation("(1 2)", 3);
    SymmetricOptions verify{.verify_symmetry = true};
    auto F = worked_generators(ctx);
    CHECK_NOTHROW(symmetric_groebner<Rationals>(ctx, F, swap12, verify));

    std::vector<Polynomial<Rationals>> asym = {P(ctx, "x + 2*y")};
    CHECK_THROWS_AS(symmetric_groebner<Rationals>(ctx, asym, swap12, verify), MathError);
}

TEST_CASE("mid-pipeline ideal preservation") {
    auto ctx = qxyz();
    auto F = worked_generators(ctx);
    auto sigma = parse_permutation("(1 2)", 3);
    auto report = symmetric_groebner<Rationals>(ctx, F, sigma);
    // <pullback> = <F>: both inclusions via normal forms.
    auto pullback_basis = buchberger<Rationals>(ctx, report.pullback);
    for (const auto& f : F)
        CHECK(normal_form<Rationals>(ctx, f, pullback_basis.elements).is_zero());
    for (const auto& g : report.pullback)
        CHECK(normal_form<Rationals>(ctx, g, report.basis.elements).is_zero());
}

TEST_CASE("pullback carries the inverse-mapped first-phase basis") {
    auto ctx = qxyz();
    auto F = worked_generators(ctx);
    auto sigma = parse_permutation("(1 2)", 3);
    auto report = symmetric_groebner<Rationals>(ctx, F, sigma);
    auto inv = build_eigenvector_map_inverse(ctx, decompose(sigma), report.xi);
    REQUIRE(report.pullback.size() == report.transformed_basis.elements.size());
    for (std::size_t i = 0; i < report.pullback.size(); ++i)
        CHECK(report.pullback[i] == apply_map(ctx, inv, report.transformed_basis.elements[i]));
}

TEST_CASE("eigen properties of both bases") {
    // First-phase basis elements are eigenvectors of the diagonal action;
    // pullback elements are eigenvectors of the permutation itself.
    auto check_instance = [](const auto& ctx, const auto& F, const Permutation& sigma) {
        auto report = symmetric_groebner(ctx, F, sigma);
        const auto k = report.k;
        for (const auto& g : report.transformed_basis.elements) {
            auto image = apply_diagonal(ctx, report.action, report.xi, g);
            bool eigen = false;
            auto power = ctx.ring.one();
            for (int64_t e = 0; e < k; ++e) {
                eigen = eigen || scale(ctx, power, g) == image;
                power = ctx.ring.mul(power, report.xi);
            }
            CHECK(eigen);
        }
        for (const auto& g : report.pullback) {
            auto image = apply(ctx, sigma, g);
            bool eigen = false;
            auto power = ctx.ring.one();
            for (int64_t e = 0; e < k; ++e) {
                eigen = eigen || scale(ctx, power, g) == image;
                power = ctx.ring.mul(power, report.xi);
            }
            CHECK(eigen);
        }
    };

    auto qctx = qxyz();
    check_instance(qctx, worked_generators(qctx), parse_permutation("(1 2)", 3));
    auto c5 = reduce_ideal(cyclic_ideal(5), 31);
    check_instance(c5.ctx, c5.generators, *c5.symmetry);
    auto c6 = reduce_ideal(cyclic_ideal(6), 13);
    check_instance(c6.ctx, c6.generators, *c6.symmetry);
}

TEST_CASE("symmetry transports through the variable map") {
    // If every sigma(f) reduces to zero modulo a basis of <F>, then every
    // diagonal-action image of the mapped generators reduces to zero modulo
    // a basis of the mapped ideal.
    auto run = [](const auto& ctx, const auto& F, const Permutation& sigma) {
        auto direct = buchberger(ctx, F);
        REQUIRE(check_symmetry(ctx, F, sigma, direct));
        auto report = symmetric_groebner(ctx, F, sigma);
        auto map = build_eigenvector_map(ctx, decompose(sigma), report.xi);
        for (const auto& f : F) {
            auto mapped = apply_map(ctx, map, f);
            auto image = apply_diagonal(ctx, report.action, report.xi, mapped);
            CHECK(normal_form(ctx, image, report.transformed_basis.elements).is_zero());
        }
    };
    auto qctx = qxyz();
    run(qctx, worked_generators(qctx), parse_permutation("(1 2)", 3));
    auto c5 = reduce_ideal(cyclic_ideal(5), 31);
    run(c5.ctx, c5.generators, *c5.symmetry);
}

TEST_CASE("determinism: repeated runs are identical") {
    auto spec = reduce_ideal(cyclic_ideal(5), 31);
    auto a = symmetric_groebner<PrimeField>(spec.ctx, spec.generators, *spec.symmetry);
    auto b = symmetric_groebner<PrimeField>(spec.ctx, spec.generators, *spec.symmetry);
    CHECK(a.basis == b.basis);
    CHECK(a.transformed_basis == b.transformed_basis);
    CHECK(a.pullback == b.pullback);
    CHECK(a.xi == b.xi);
}

TEST_CASE("randomized symmetrized ideals match the direct engine") {
    // Random generator sets closed under a random permutation; p = 421 has
    // k | p - 1 for every k <= 7.
    testkit::Rng rng(2024);
    int done = 0;
    while (done < 15) {
        int n = 2 + static_cast<int>(rng.below(4));
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        auto ctx = make_context(PrimeField(421), names, OrderingSpec::degrevlex(n));
        auto sigma = testkit::random_permutation(n, rng);
        std::vector<Polynomial<PrimeField>> seed;
        int m = 1 + static_cast<int>(rng.below(2));
        for (int i = 0; i < m; ++i) seed.push_back(testkit::random_polynomial(ctx, rng, 3, 3, 400));
        auto F = symmetrize_generators<PrimeField>(ctx, seed, sigma);
        auto report = symmetric_groebner<PrimeField>(ctx, F, sigma);
        CHECK(report.basis == buchberger<PrimeField>(ctx, F));
        ++done;
    }
}
