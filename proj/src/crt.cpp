#include "symgb/crt.hpp"

namespace symgb {

CrtAccumulator crt_extend(const CrtAccumulator& acc, uint32_t residue, uint32_t p) {
    if (p == 0) throw MathError("crt modulus must be positive");
    if (mpz_gcd_ui(nullptr, acc.modulus.get_mpz_t(), p) != 1)
        throw MathError("crt moduli not coprime: " + std::to_string(p));

    // x = acc.residue + acc.modulus * t with t = (residue - acc.residue) / acc.modulus mod p.
    uint32_t old_mod_p = static_cast<uint32_t>(mpz_fdiv_ui(acc.modulus.get_mpz_t(), p));
    uint32_t old_res_p = static_cast<uint32_t>(mpz_fdiv_ui(acc.residue.get_mpz_t(), p));
    uint64_t diff = (residue % p + p - old_res_p % p) % p;

    // Invert old modulus mod p by Euclid (p need not be in PrimeField range here).
    int64_t t0 = 0, t1 = 1;
    int64_t r0 = p, r1 = old_mod_p % p;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
        tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
    }
    if (r0 != 1) throw MathError("crt moduli not coprime: " + std::to_string(p));
    if (t0 < 0) t0 += p;
    uint64_t t = (diff * static_cast<uint64_t>(t0)) % p;

    CrtAccumulator out;
    out.residue = acc.residue + acc.modulus * BigInt(static_cast<unsigned long>(t));
    out.modulus = acc.modulus * p;
    return out;
}

BigInt farey_bound(const BigInt& modulus) {
    if (modulus < 1) throw MathError("farey modulus must be >= 1");
    BigInt half = (modulus - 1) / 2;
    BigInt b;
    mpz_sqrt(b.get_mpz_t(), half.get_mpz_t());
    return b;
}

std::optional<BigRational> farey_reconstruct(const BigInt& residue, const BigInt& modulus) {
    if (modulus < 2 || residue < 0 || residue >= modulus)
        throw MathError("farey precondition: 0 <= residue < N, N >= 2");
    const BigInt bound = farey_bound(modulus);

    // Half-extended Euclid, invariant r_i = t_i * residue (mod N).
    BigInt r0 = modulus, r1 = residue;
    BigInt t0 = 0, t1 = 1;
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0) return std::nullopt;

    BigInt num = r1, den = t1;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den > bound) return std::nullopt;

    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1) return std::nullopt;

    return make_rational(num, den);
}

}  // namespace symgb
