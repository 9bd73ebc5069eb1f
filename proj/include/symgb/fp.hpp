#ifndef SYMGB_FP_HPP
#define SYMGB_FP_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "symgb/errors.hpp"

namespace symgb {

/// Canonical element of a word-size prime field: value always in [0, p).
struct FpElement {
    uint32_t value = 0;
    friend bool operator==(FpElement, FpElement) = default;
};

/// Prime field F_p with 3 <= p < 2^31, so products fit a 64-bit word.
class PrimeField {
public:
    using Elem = FpElement;

    explicit PrimeField(uint32_t p);

    uint32_t modulus() const { return p_; }

    Elem zero() const { return {0}; }
    Elem one() const { return {1}; }
    bool is_zero(Elem a) const { return a.value == 0; }
    bool is_one(Elem a) const { return a.value == 1; }

    Elem add(Elem a, Elem b) const {
        uint32_t s = a.value + b.value;  // p < 2^31 keeps the sum below 2^32
        return {s >= p_ ? s - p_ : s};
    }
    Elem sub(Elem a, Elem b) const {
        return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
    }
    Elem neg(Elem a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
    Elem mul(Elem a, Elem b) const {
        return {static_cast<uint32_t>((uint64_t(a.value) * b.value) % p_)};
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, uint64_t e) const;

    Elem from_int(int64_t v) const;
    /// Reduce an arbitrary-length decimal literal mod p.
    Elem from_decimal(std::string_view digits) const;

    std::string to_string(Elem a) const { return std::to_string(a.value); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    uint32_t p_;
};

bool is_prime_u64(uint64_t n);

/// Primitive k-th root of unity in F_p: xi^k = 1 and xi^(k/q) != 1 for every
/// prime q | k. Requires k | (p-1); deterministic for fixed (p, k).
FpElement primitive_kth_root(const PrimeField& field, uint32_t k);

}  // namespace symgb

#endif
