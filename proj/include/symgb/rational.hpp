#ifndef SYMGB_RATIONAL_HPP
#define SYMGB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "symgb/errors.hpp"
#include "symgb/fp.hpp"

namespace symgb {

using BigInt = mpz_class;

/// Exact rational in lowest terms with positive denominator (mpq keeps the
/// canonical form through arithmetic; construction goes through
/// make_rational).
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw MathError("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

/// The field of rationals as a coefficient-ring context.
class Rationals {
public:
    using Elem = BigRational;

    Elem zero() const { return BigRational(0); }
    Elem one() const { return BigRational(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw MathError("division by zero in Q");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(const Elem& a, uint64_t e) const {
        Elem r = one(), base = a;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Elem from_int(int64_t v) const { return BigRational(static_cast<long>(v)); }
    Elem from_decimal(std::string_view digits) const {
        return BigRational(BigInt(std::string(digits)));
    }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// Coefficientwise projection num * den^-1 mod p; rejects p | den.
inline FpElement reduce_mod(const BigRational& q, const PrimeField& field) {
    const uint32_t p = field.modulus();
    uint32_t den = static_cast<uint32_t>(mpz_fdiv_ui(q.get_den().get_mpz_t(), p));
    if (den == 0)
        throw MathError("denominator divisible by " + std::to_string(p));
    uint32_t num = static_cast<uint32_t>(mpz_fdiv_ui(q.get_num().get_mpz_t(), p));
    return field.mul({num}, field.inv({den}));
}

}  // namespace symgb

#endif
