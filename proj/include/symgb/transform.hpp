#ifndef SYMGB_TRANSFORM_HPP
#define SYMGB_TRANSFORM_HPP

#include "symgb/permutation.hpp"

namespace symgb {

/// A linear change of variables given by one homogeneous linear image per
/// ring variable.
template <class Ring>
struct LinearVariableMap {
    std::vector<Polynomial<Ring>> images;
    friend bool operator==(const LinearVariableMap&, const LinearVariableMap&) = default;
};

/// The conjugated automorphism acts diagonally: x_i |-> xi^exponents[i] * x_i.
struct DiagonalAction {
    std::vector<int> exponents;
    int k = 1;
};

namespace detail {

inline bool char_divides(const PrimeField& field, int64_t k) { return k % field.modulus() == 0; }
inline bool char_divides(const Rationals&, int64_t) { return false; }

template <class Ring>
typename Ring::Elem root_power(const Ring& ring, const typename Ring::Elem& xi, int64_t e,
                               int64_t k) {
    int64_t r = e % k;
    if (r < 0) r += k;
    return ring.pow(xi, static_cast<uint64_t>(r));
}

template <class Ring>
bool is_primitive_root(const Ring& ring, const typename Ring::Elem& xi, int64_t k) {
    if (ring.is_zero(xi)) return false;
    if (!ring.is_one(ring.pow(xi, static_cast<uint64_t>(k)))) return false;
    for (int64_t q = 2, m = k; m > 1; ++q) {
        if (q * q > m) q = m;
        if (m % q) continue;
        if (ring.is_one(ring.pow(xi, static_cast<uint64_t>(k / q)))) return false;
        while (m % q == 0) m /= q;
    }
    return true;
}

}  // namespace detail

/// Maps each variable to an eigenvector of the permutation action on the
/// variable span, built per cycle (e_1 ... e_l) of sigma with the l-th
/// primitive root zeta = xi^(k/l):
///   l <= 2: cycle position i maps to
///             sum_{j=1..l} zeta^((i-1)(j-1)) * x at position i+j-1 (mod l)
///           (for a 2-cycle (x y): x -> x + y, y -> y - x);
///   l >= 3: cycle position i maps to the plain DFT row
///             sum_{j=1..l} zeta^((i-1)(j-1)) * x at position j.
/// Constraint behind the split: the conjugated automorphism inverse o sigma
/// o map must act diagonally on the variables, which the first form only
/// achieves for cycles of length <= 2.
template <class Ring>
LinearVariableMap<Ring> build_eigenvector_map(const RingContext<Ring>& ctx,
                                              const CycleDecomposition& decomp,
                                              const typename Ring::Elem& xi) {
    int64_t k = 1;
    for (int l : decomp.cycle_type) k = std::lcm(k, static_cast<int64_t>(l));
    if (detail::char_divides(ctx.ring, k))
        throw NotApplicableError("field characteristic divides the permutation order");
    if (!detail::is_primitive_root(ctx.ring, xi, k))
        throw MathError("xi is not a primitive root of unity of order " + std::to_string(k));

    LinearVariableMap<Ring> map;
    map.images.resize(ctx.names.size());
    for (const auto& cycle : decomp.cycles) {
        const int64_t l = static_cast<int64_t>(cycle.size());
        const auto zeta = ctx.ring.pow(xi, static_cast<uint64_t>(k / l));
        for (int64_t i = 1; i <= l; ++i) {
            std::vector<Term<Ring>> terms;
            for (int64_t j = 1; j <= l; ++j) {
                int var = l <= 2 ? cycle[(i - 1 + j - 1) % l] : cycle[j - 1];
                Monomial m(ctx.names.size());
                m.exps[var - 1] = 1;
                terms.push_back({detail::root_power(ctx.ring, zeta, (i - 1) * (j - 1), l),
                                 std::move(m)});
            }
            map.images[cycle[i - 1] - 1] = normalized(ctx, std::move(terms));
        }
    }
    return map;
}

/// Inverse of build_eigenvector_map, per-cycle inverse DFT:
///   l <= 2: position i maps to (1/l) * sum_j zeta^((j-1)(j-i)) * x at j;
///   l >= 3: position i maps to (1/l) * sum_j zeta^(-(i-1)(j-1)) * x at j.
template <class Ring>
LinearVariableMap<Ring> build_eigenvector_map_inverse(const RingContext<Ring>& ctx,
                                                      const CycleDecomposition& decomp,
                                                      const typename Ring::Elem& xi) {
    int64_t k = 1;
    for (int l : decomp.cycle_type) k = std::lcm(k, static_cast<int64_t>(l));
    if (detail::char_divides(ctx.ring, k))
        throw NotApplicableError("field characteristic divides the permutation order");
    if (!detail::is_primitive_root(ctx.ring, xi, k))
        throw MathError("xi is not a primitive root of unity of order " + std::to_string(k));

    LinearVariableMap<Ring> map;
    map.images.resize(ctx.names.size());
    for (const auto& cycle : decomp.cycles) {
        const int64_t l = static_cast<int64_t>(cycle.size());
        const auto zeta = ctx.ring.pow(xi, static_cast<uint64_t>(k / l));
        const auto inv_l = ctx.ring.inv(ctx.ring.from_int(l));
        for (int64_t i = 1; i <= l; ++i) {
            std::vector<Term<Ring>> terms;
            for (int64_t j = 1; j <= l; ++j) {
                Monomial m(ctx.names.size());
                m.exps[cycle[j - 1] - 1] = 1;
                int64_t e = l <= 2 ? (j - 1) * (j - i) : -(i - 1) * (j - 1);
                auto c = ctx.ring.mul(inv_l, detail::root_power(ctx.ring, zeta, e, l));
                terms.push_back({std::move(c), std::move(m)});
            }
            map.images[cycle[i - 1] - 1] = normalized(ctx, std::move(terms));
        }
    }
    return map;
}

template <class Ring>
Polynomial<Ring> apply_map(const RingContext<Ring>& ctx, const LinearVariableMap<Ring>& map,
                           const Polynomial<Ring>& f) {
    return substitute<Ring>(ctx, f, map.images);
}

/// Exponents nu_i of the conjugated action map o sigma o inverse, recovered
/// symbolically: each composite image must be xi^nu_i * x_i.
template <class Ring>
DiagonalAction diagonal_action(const RingContext<Ring>& ctx, const Permutation& sigma,
                               const LinearVariableMap<Ring>& map,
                               const LinearVariableMap<Ring>& inverse_map,
                               const typename Ring::Elem& xi) {
    const int64_t k = perm_order(sigma);
    DiagonalAction action;
    action.k = static_cast<int>(k);
    action.exponents.resize(ctx.names.size());
    for (int i = 0; i < ctx.nvars(); ++i) {
        auto h = apply_map(ctx, map, apply(ctx, sigma, inverse_map.images[i]));
        if (h.size() != 1 || !(h.terms[0].mono == variable_poly(ctx, i).terms[0].mono))
            throw MathError("conjugated action is not diagonal (inconsistent inputs)");
        const auto& c = h.terms[0].coeff;
        int nu = -1;
        auto power = ctx.ring.one();
        for (int e = 0; e < k; ++e) {
            if (power == c) {
                nu = e;
                break;
            }
            power = ctx.ring.mul(power, xi);
        }
        if (nu < 0) throw MathError("diagonal factor is not a power of xi");
        action.exponents[i] = nu;
    }
    return action;
}

/// Image of f under the diagonal action: each term picks up
/// xi^(sum_i nu_i * e_i).
template <class Ring>
Polynomial<Ring> apply_diagonal(const RingContext<Ring>& ctx, const DiagonalAction& action,
                                const typename Ring::Elem& xi, const Polynomial<Ring>& f) {
    Polynomial<Ring> out = f;
    for (auto& t : out.terms) {
        int64_t e = 0;
        for (std::size_t i = 0; i < t.mono.nvars(); ++i)
            e += static_cast<int64_t>(action.exponents[i]) * t.mono.exps[i];
        t.coeff = ctx.ring.mul(t.coeff, detail::root_power(ctx.ring, xi, e, action.k));
    }
    return out;
}

}  // namespace symgb

#endif
