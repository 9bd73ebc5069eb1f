#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symgb/fp.hpp"

using namespace symgb;

TEST_CASE("field arithmetic mod 7") {
    PrimeField f(7);
    CHECK(f.mul({3}, {5}) == FpElement{1});
    CHECK(f.inv({3}) == FpElement{5});
    CHECK(f.add({4}, {5}) == FpElement{2});
    CHECK(f.sub({2}, {5}) == FpElement{4});
    CHECK(f.neg({0}) == FpElement{0});
    CHECK_THROWS_AS(f.inv({0}), MathError);
}

TEST_CASE("largest supported modulus") {
    PrimeField f(2147483647);
    CHECK(f.mul({2147483646}, {2147483646}) == FpElement{1});
    CHECK(f.pow({7}, 2147483646) == FpElement{1});
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(PrimeField(4), MathError);
    CHECK_THROWS_AS(PrimeField(2), MathError);
    CHECK_THROWS_AS(PrimeField(1), MathError);
    CHECK_NOTHROW(PrimeField(3));
}

TEST_CASE("from_int and from_decimal reduce canonically") {
    PrimeField f(13);
    CHECK(f.from_int(-1) == FpElement{12});
    CHECK(f.from_int(26) == FpElement{0});
    CHECK(f.from_decimal("123456789123456789") == FpElement{123456789123456789ULL % 13});
}

TEST_CASE("inverses exhaustively for every prime field up to 101") {
    for (uint32_t p = 3; p <= 101; ++p) {
        if (!is_prime_u64(p)) continue;
        PrimeField f(p);
        for (uint32_t x = 1; x < p; ++x) CHECK(f.mul({x}, f.inv({x})) == FpElement{1});
    }
}

TEST_CASE("primitive square root mod 13 is -1") {
    PrimeField f(13);
    CHECK(primitive_kth_root(f, 2) == FpElement{12});
}

TEST_CASE("primitive 4th root mod 13 matches brute-force oracle") {
    // Oracle: scan all of F_13 for xi with xi^4 = 1 and xi^2 != 1.
    PrimeField f(13);
    std::vector<uint32_t> oracle;
    for (uint32_t x = 1; x < 13; ++x)
        if (f.pow({x}, 4) == FpElement{1} && !(f.pow({x}, 2) == FpElement{1})) oracle.push_back(x);
    REQUIRE(oracle == std::vector<uint32_t>{5, 8});

    FpElement xi = primitive_kth_root(f, 4);
    CHECK((xi.value == 5 || xi.value == 8));
    CHECK(f.pow(xi, 2) == FpElement{12});
    CHECK(f.pow(xi, 4) == FpElement{1});
}

TEST_CASE("no 4th root mod 7") {
    PrimeField f(7);
    CHECK_THROWS_AS(primitive_kth_root(f, 4), NoPrimitiveRootError);
}

TEST_CASE("primitive roots satisfy the defining property") {
    // For assorted (p, k) with k | p-1: xi^k = 1 and xi^(k/q) != 1 for all
    // prime q | k.
    struct Case {
        uint32_t p, k;
    };
    for (auto [p, k] : {Case{13, 2},  Case{13, 3}, Case{13, 4},  Case{13, 6},  Case{13, 12},
                        Case{127, 7}, Case{31, 5}, Case{30817, 8}, Case{100003, 6},
                        Case{2147483647, 2}}) {
        PrimeField f(p);
        FpElement xi = primitive_kth_root(f, k);
        CHECK(f.pow(xi, k) == FpElement{1});
        for (uint32_t q = 2; q <= k; ++q) {
            if (k % q) continue;
            bool q_prime = true;
            for (uint32_t d = 2; d * d <= q; ++d)
                if (q % d == 0) q_prime = false;
            if (q_prime) CHECK(!(f.pow(xi, k / q) == FpElement{1}));
        }
    }
}

TEST_CASE("primitive root is deterministic per (p, k)") {
    PrimeField f(100003);
    CHECK(primitive_kth_root(f, 6) == primitive_kth_root(f, 6));
}

TEST_CASE("primality testing") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(2147483647));
    CHECK(is_prime_u64(30817));
    CHECK(is_prime_u64(100003));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(30819));
    CHECK(!is_prime_u64(1073741824));
    int count = 0;
    for (uint64_t n = 2; n < 200; ++n)
        if (is_prime_u64(n)) ++count;
    CHECK(count == 46);
}
