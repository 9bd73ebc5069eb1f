#ifndef SYMGB_SYMMETRIC_HPP
#define SYMGB_SYMMETRIC_HPP

#include <chrono>

#include "symgb/groebner.hpp"
#include "symgb/transform.hpp"

namespace symgb {

struct SymmetricOptions {
    /// Check sigma(<F>) = <F> up front. Costs an extra direct basis
    /// computation, so off by default; symmetry is otherwise an input
    /// contract.
    bool verify_symmetry = false;
};

struct PhaseTimings {
    double transform_s = 0;
    double first_gb_s = 0;
    double pullback_s = 0;
    double second_gb_s = 0;
};

template <class Ring>
struct SymmetricRunReport {
    GroebnerBasis<Ring> basis;
    int64_t k = 1;
    typename Ring::Elem xi;
    DiagonalAction action;
    /// First-phase basis of the transformed ideal and its pullback (the
    /// second-phase input before rescaling).
    GroebnerBasis<Ring> transformed_basis;
    std::vector<Polynomial<Ring>> pullback;
    PhaseTimings timings;
};

namespace detail {

inline FpElement root_of_unity_for(const PrimeField& field, int64_t k) {
    if ((field.modulus() - 1) % k != 0)
        throw NoPrimitiveRootError("F_" + std::to_string(field.modulus()) +
                                   " lacks a primitive root of unity of order " + std::to_string(k));
    return primitive_kth_root(field, static_cast<uint32_t>(k));
}

inline BigRational root_of_unity_for(const Rationals& ring, int64_t k) {
    if (k == 1) return ring.one();
    if (k == 2) return ring.from_int(-1);
    throw UnsupportedExtensionError(
        "order " + std::to_string(k) +
        " needs a cyclotomic extension of Q; use the modular algorithm instead");
}

class PhaseClock {
public:
    double lap() {
        auto now = std::chrono::steady_clock::now();
        double s = std::chrono::duration<double>(now - last_).count();
        last_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// Groebner basis of a sigma-symmetric ideal computed through the
/// root-of-unity change of variables: transform the generators, compute a
/// basis there, pull it back and recompute. Output equals the direct reduced
/// basis of <F>.
template <class Ring>
SymmetricRunReport<Ring> symmetric_groebner(const RingContext<Ring>& ctx,
                                            std::span<const Polynomial<Ring>> F,
                                            const Permutation& sigma,
                                            const SymmetricOptions& opts = {}) {
    if (sigma.size() != ctx.nvars())
        throw MathError("permutation size does not match the ring");
    if (!ctx.ordering.is_degree_ordering())
        throw MathError("the symmetric algorithm requires a degree ordering");

    SymmetricRunReport<Ring> report;
    report.k = perm_order(sigma);
    if (detail::char_divides(ctx.ring, report.k))
        throw NotApplicableError("not applicable: field characteristic divides the permutation order " +
                                 std::to_string(report.k));

    if (opts.verify_symmetry) {
        auto direct = buchberger<Ring>(ctx, F);
        if (!check_symmetry<Ring>(ctx, F, sigma, direct))
            throw MathError("input ideal is not symmetric under " + format_permutation(sigma));
    }

    if (report.k == 1) {
        detail::PhaseClock clock;
        report.xi = ctx.ring.one();
        report.action.k = 1;
        report.action.exponents.assign(ctx.names.size(), 0);
        report.basis = buchberger<Ring>(ctx, F);
        report.timings.first_gb_s = clock.lap();
        report.transformed_basis = report.basis;
        report.pullback = report.basis.elements;
        return report;
    }

    report.xi = detail::root_of_unity_for(ctx.ring, report.k);
    const auto decomp = decompose(sigma);

    detail::PhaseClock clock;
    auto map = build_eigenvector_map(ctx, decomp, report.xi);
    auto inverse_map = build_eigenvector_map_inverse(ctx, decomp, report.xi);
    report.action = diagonal_action(ctx, sigma, map, inverse_map, report.xi);
    std::vector<Polynomial<Ring>> transformed;
    transformed.reserve(F.size());
    for (const auto& f : F) transformed.push_back(apply_map(ctx, map, f));
    report.timings.transform_s = clock.lap();

    report.transformed_basis = buchberger<Ring>(ctx, transformed);
    report.timings.first_gb_s = clock.lap();

    report.pullback.reserve(report.transformed_basis.elements.size());
    for (const auto& g : report.transformed_basis.elements)
        report.pullback.push_back(apply_map(ctx, inverse_map, g));
    // Rescaling does not change the ideal; it keeps the second run in
    // denominator-free territory over Q.
    std::vector<Polynomial<Ring>> second_input;
    second_input.reserve(report.pullback.size());
    for (const auto& g : report.pullback)
        second_input.push_back(detail::interreduce_scale(ctx, g));
    report.timings.pullback_s = clock.lap();

    report.basis = buchberger<Ring>(ctx, second_input);
    report.timings.second_gb_s = clock.lap();
    return report;
}

template <class Ring>
SymmetricRunReport<Ring> symmetric_groebner(const RingContext<Ring>& ctx,
                                            const std::vector<Polynomial<Ring>>& F,
                                            const Permutation& sigma,
                                            const SymmetricOptions& opts = {}) {
    return symmetric_groebner<Ring>(ctx, std::span<const Polynomial<Ring>>(F), sigma, opts);
}

}  // namespace symgb

#endif
