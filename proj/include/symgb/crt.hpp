#ifndef SYMGB_CRT_HPP
#define SYMGB_CRT_HPP

#include <optional>

#include "symgb/rational.hpp"

namespace symgb {

/// Combined residue modulo a squarefree product of accepted primes.
/// The empty product (0 mod 1) is the identity start.
struct CrtAccumulator {
    BigInt residue{0};
    BigInt modulus{1};
};

/// Extend the accumulator by one congruence r mod p. The new modulus must be
/// coprime to the accumulated one.
CrtAccumulator crt_extend(const CrtAccumulator& acc, uint32_t residue, uint32_t p);

/// floor(sqrt((N-1)/2)): the symmetric bound on numerator magnitude and
/// denominator that makes the reconstruction unique.
BigInt farey_bound(const BigInt& modulus);

/// Recover a/b with a*b^-1 = residue (mod N), |a| <= bound, 0 < b <= bound,
/// gcd(a,b) = gcd(b,N) = 1 via half-extended Euclid; nullopt when no such
/// fraction exists.
std::optional<BigRational> farey_reconstruct(const BigInt& residue, const BigInt& modulus);

}  // namespace symgb

#endif
