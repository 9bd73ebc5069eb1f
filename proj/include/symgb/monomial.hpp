#ifndef SYMGB_MONOMIAL_HPP
#define SYMGB_MONOMIAL_HPP

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <initializer_list>

#include "symgb/errors.hpp"

namespace symgb {

/// Exponent vector of a power product; one 16-bit exponent per ring variable.
struct Monomial {
    using Exponents = boost::container::small_vector<uint16_t, 12>;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    Monomial(std::initializer_list<uint16_t> e) : exps(e) {}

    std::size_t nvars() const { return exps.size(); }
    bool is_one() const {
        for (uint16_t e : exps)
            if (e) return false;
        return true;
    }
    int degree() const {
        int d = 0;
        for (uint16_t e : exps) d += e;
        return d;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }

    Exponents exps;
};

inline void check_same_arity(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw MathError("monomial length mismatch");
}

inline bool divides(const Monomial& a, const Monomial& b) {
    check_same_arity(a, b);
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    check_same_arity(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        uint32_t e = uint32_t(a.exps[i]) + b.exps[i];
        if (e > 0xffff) throw MathError("exponent overflow");
        r.exps[i] = static_cast<uint16_t>(e);
    }
    return r;
}

/// Quotient a / b; requires divides(b, a).
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    check_same_arity(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (b.exps[i] > a.exps[i]) throw MathError("monomial quotient undefined");
        r.exps[i] = static_cast<uint16_t>(a.exps[i] - b.exps[i]);
    }
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    check_same_arity(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        r.exps[i] = a.exps[i] > b.exps[i] ? a.exps[i] : b.exps[i];
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    check_same_arity(a, b);
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exps[i] && b.exps[i]) return false;
    return true;
}

/// Plain left-to-right exponent comparison, used only as an ordering-independent
/// canonical tie-break (fingerprint comparison, vote tie-breaks).
inline bool lex_less(const Monomial& a, const Monomial& b) {
    check_same_arity(a, b);
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
    return false;
}

}  // namespace symgb

#endif
