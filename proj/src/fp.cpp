#include "symgb/fp.hpp"

#include <array>
#include <utility>

namespace symgb {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        e >>= 1;
    }
    return r;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin base set for n < 3.3 * 10^24.
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
    if (p < 3) throw MathError("prime field modulus must be >= 3");
    if (p >= (1u << 31)) throw MathError("prime field modulus must be < 2^31");
    if (!is_prime_u64(p)) throw MathError("modulus " + std::to_string(p) + " is not prime");
}

FpElement PrimeField::inv(FpElement a) const {
    if (a.value == 0) throw MathError("division by zero in F_" + std::to_string(p_));
    // Extended Euclid on (p, a); p prime so gcd is 1.
    int64_t t = 0, new_t = 1;
    int64_t r = p_, new_r = a.value;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p_;
    return {static_cast<uint32_t>(t)};
}

FpElement PrimeField::pow(FpElement a, uint64_t e) const {
    return {static_cast<uint32_t>(powmod_u64(a.value, e, p_))};
}

FpElement PrimeField::from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<uint32_t>(r)};
}

FpElement PrimeField::from_decimal(std::string_view digits) const {
    if (digits.empty()) throw MathError("empty decimal literal");
    uint64_t acc = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') throw MathError("bad decimal literal");
        acc = (acc * 10 + static_cast<uint64_t>(c - '0')) % p_;
    }
    return {static_cast<uint32_t>(acc)};
}

FpElement primitive_kth_root(const PrimeField& field, uint32_t k) {
    const uint32_t p = field.modulus();
    if (k == 0) throw MathError("root order must be positive");
    if ((p - 1) % k != 0)
        throw NoPrimitiveRootError("F_" + std::to_string(p) + " has no primitive " +
                                   std::to_string(k) + "-th root of unity: " + std::to_string(k) +
                                   " does not divide p-1");
    if (k == 1) return field.one();

    // Prime divisors of k (k is small: a permutation order).
    std::array<uint32_t, 16> prime_divs{};
    int ndivs = 0;
    uint32_t m = k;
    for (uint32_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            prime_divs[ndivs++] = q;
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) prime_divs[ndivs++] = m;

    // Random base, deterministic per (p, k) so repeated runs agree.
    uint64_t state = (uint64_t(p) << 32) ^ k;
    for (int tries = 0; tries < 256; ++tries) {
        state = splitmix64(state);
        uint32_t g = 1 + static_cast<uint32_t>(state % (p - 1));
        FpElement xi = field.pow({g}, (p - 1) / k);
        if (field.is_zero(xi) || field.is_one(xi)) continue;
        bool primitive = true;
        for (int i = 0; i < ndivs; ++i) {
            if (field.is_one(field.pow(xi, k / prime_divs[i]))) {
                primitive = false;
                break;
            }
        }
        if (primitive) return xi;
    }
    throw NoPrimitiveRootError("failed to find a primitive root (unexpected)");
}

}  // namespace symgb
