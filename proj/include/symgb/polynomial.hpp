#ifndef SYMGB_POLYNOMIAL_HPP
#define SYMGB_POLYNOMIAL_HPP

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symgb/ordering.hpp"
#include "symgb/rational.hpp"

namespace symgb {

template <class Ring>
struct Term {
    typename Ring::Elem coeff;
    Monomial mono;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms strictly descending under the context ordering,
/// no zero coefficients, empty term list is the zero polynomial. All
/// operations below keep this normal form.
template <class Ring>
struct Polynomial {
    std::vector<Term<Ring>> terms;

    bool is_zero() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Everything a polynomial operation needs to know about its ring: the
/// coefficient domain, the variable names and the monomial ordering.
template <class Ring>
struct RingContext {
    Ring ring;
    std::vector<std::string> names;
    OrderingSpec ordering;

    int nvars() const { return static_cast<int>(names.size()); }
};

template <class Ring>
RingContext<Ring> make_context(Ring ring, std::vector<std::string> names, OrderingSpec ordering) {
    if (names.empty()) throw MathError("ring needs at least one variable");
    if (ordering.nvars() != static_cast<int>(names.size()))
        throw MathError("ordering does not cover the ring variables");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw MathError("duplicate variable name " + names[i]);
    return {std::move(ring), std::move(names), std::move(ordering)};
}

// --- construction -----------------------------------------------------------

template <class Ring>
Polynomial<Ring> normalized(const RingContext<Ring>& ctx, std::vector<Term<Ring>> terms) {
    for (auto& t : terms)
        if (static_cast<int>(t.mono.nvars()) != ctx.nvars())
            throw MathError("term arity does not match ring");
    std::sort(terms.begin(), terms.end(), [&](const Term<Ring>& a, const Term<Ring>& b) {
        return greater(a.mono, b.mono, ctx.ordering);
    });
    std::vector<Term<Ring>> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff = ctx.ring.add(out.back().coeff, t.coeff);
        else
            out.push_back(std::move(t));
        if (!out.empty() && ctx.ring.is_zero(out.back().coeff)) out.pop_back();
    }
    return {std::move(out)};
}

template <class Ring>
Polynomial<Ring> zero_poly(const RingContext<Ring>&) {
    return {};
}

template <class Ring>
Polynomial<Ring> constant_poly(const RingContext<Ring>& ctx, typename Ring::Elem c) {
    if (ctx.ring.is_zero(c)) return {};
    return {{{std::move(c), Monomial(ctx.names.size())}}};
}

template <class Ring>
Polynomial<Ring> variable_poly(const RingContext<Ring>& ctx, int index) {
    if (index < 0 || index >= ctx.nvars()) throw MathError("variable index out of range");
    Monomial m(ctx.names.size());
    m.exps[index] = 1;
    return {{{ctx.ring.one(), std::move(m)}}};
}

// --- leading data ------------------------------------------------------------

template <class Ring>
const Term<Ring>& leading_term(const Polynomial<Ring>& f) {
    if (f.is_zero()) throw MathError("leading term of the zero polynomial");
    return f.terms.front();
}

template <class Ring>
const Monomial& leading_monomial(const Polynomial<Ring>& f) {
    return leading_term(f).mono;
}

template <class Ring>
const typename Ring::Elem& leading_coefficient(const Polynomial<Ring>& f) {
    return leading_term(f).coeff;
}

template <class Ring>
Polynomial<Ring> tail(const Polynomial<Ring>& f) {
    if (f.is_zero()) throw MathError("tail of the zero polynomial");
    return {{f.terms.begin() + 1, f.terms.end()}};
}

template <class Ring>
int total_degree(const Polynomial<Ring>& f) {
    int d = 0;
    for (const auto& t : f.terms) d = std::max(d, t.mono.degree());
    return d;
}

// --- arithmetic ---------------------------------------------------------------

namespace detail {

// out = f + c * X^m * g, merging two descending term streams into a caller
// buffer. Any of the scaling arguments may be trivial.
template <class Ring>
void merge_scaled_into(const RingContext<Ring>& ctx, std::span<const Term<Ring>> f,
                       std::span<const Term<Ring>> g, const typename Ring::Elem& c,
                       const Monomial* m, std::vector<Term<Ring>>& out) {
    out.clear();
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    auto g_mono = [&](std::size_t jj) { return m ? mono_mul(g[jj].mono, *m) : g[jj].mono; };
    Monomial gm;
    bool gm_fresh = false;
    while (i < f.size() && j < g.size()) {
        if (!gm_fresh) {
            gm = g_mono(j);
            gm_fresh = true;
        }
        int cmp = compare(f[i].mono, gm, ctx.ordering);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            out.push_back({ctx.ring.mul(c, g[j].coeff), std::move(gm)});
            ++j;
            gm_fresh = false;
        } else {
            auto coeff = ctx.ring.add(f[i].coeff, ctx.ring.mul(c, g[j].coeff));
            if (!ctx.ring.is_zero(coeff)) out.push_back({std::move(coeff), std::move(gm)});
            ++i;
            ++j;
            gm_fresh = false;
        }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) out.push_back({ctx.ring.mul(c, g[j].coeff), g_mono(j)});
}

template <class Ring>
std::vector<Term<Ring>> merge_scaled(const RingContext<Ring>& ctx, std::span<const Term<Ring>> f,
                                     std::span<const Term<Ring>> g, const typename Ring::Elem& c,
                                     const Monomial* m) {
    std::vector<Term<Ring>> out;
    merge_scaled_into(ctx, f, g, c, m, out);
    return out;
}

}  // namespace detail

template <class Ring>
Polynomial<Ring> add(const RingContext<Ring>& ctx, const Polynomial<Ring>& f,
                     const Polynomial<Ring>& g) {
    return {detail::merge_scaled<Ring>(ctx, f.terms, g.terms, ctx.ring.one(), nullptr)};
}

template <class Ring>
Polynomial<Ring> sub(const RingContext<Ring>& ctx, const Polynomial<Ring>& f,
                     const Polynomial<Ring>& g) {
    return {detail::merge_scaled<Ring>(ctx, f.terms, g.terms, ctx.ring.neg(ctx.ring.one()), nullptr)};
}

template <class Ring>
Polynomial<Ring> negate_poly(const RingContext<Ring>& ctx, Polynomial<Ring> f) {
    for (auto& t : f.terms) t.coeff = ctx.ring.neg(t.coeff);
    return f;
}

template <class Ring>
Polynomial<Ring> scale(const RingContext<Ring>& ctx, const typename Ring::Elem& c,
                       Polynomial<Ring> f) {
    if (ctx.ring.is_zero(c)) return {};
    for (auto& t : f.terms) t.coeff = ctx.ring.mul(c, t.coeff);
    return f;
}

/// f * (c * X^m).
template <class Ring>
Polynomial<Ring> mul_term(const RingContext<Ring>& ctx, const Polynomial<Ring>& f,
                          const typename Ring::Elem& c, const Monomial& m) {
    if (ctx.ring.is_zero(c)) return {};
    Polynomial<Ring> out;
    out.terms.reserve(f.size());
    for (const auto& t : f.terms) out.terms.push_back({ctx.ring.mul(c, t.coeff), mono_mul(t.mono, m)});
    return out;
}

template <class Ring>
Polynomial<Ring> mul(const RingContext<Ring>& ctx, const Polynomial<Ring>& f,
                     const Polynomial<Ring>& g) {
    if (f.is_zero() || g.is_zero()) return {};
    // Accumulate g-shifts of f; smaller operand outside.
    const Polynomial<Ring>& a = f.size() <= g.size() ? f : g;
    const Polynomial<Ring>& b = f.size() <= g.size() ? g : f;
    std::vector<Term<Ring>> acc;
    for (const auto& t : a.terms)
        acc = detail::merge_scaled<Ring>(ctx, acc, b.terms, t.coeff, &t.mono);
    return {std::move(acc)};
}

template <class Ring>
Polynomial<Ring> pow_poly(const RingContext<Ring>& ctx, const Polynomial<Ring>& f, uint32_t e) {
    Polynomial<Ring> r = constant_poly(ctx, ctx.ring.one());
    Polynomial<Ring> base = f;
    while (e) {
        if (e & 1) r = mul(ctx, r, base);
        base = mul(ctx, base, base);
        e >>= 1;
    }
    return r;
}

/// Homomorphic image of f under x_i |-> images[i].
template <class Ring>
Polynomial<Ring> substitute(const RingContext<Ring>& ctx, const Polynomial<Ring>& f,
                            std::span<const Polynomial<Ring>> images) {
    if (static_cast<int>(images.size()) != ctx.nvars())
        throw MathError("substitute needs one image per variable");
    // Cache powers of each image up to the largest exponent used.
    std::vector<std::vector<Polynomial<Ring>>> powers(images.size());
    auto image_power = [&](std::size_t i, uint16_t e) -> const Polynomial<Ring>& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant_poly(ctx, ctx.ring.one()));
        while (cache.size() <= e) cache.push_back(mul(ctx, cache.back(), images[i]));
        return cache[e];
    };
    Polynomial<Ring> out;
    for (const auto& t : f.terms) {
        Polynomial<Ring> prod = constant_poly(ctx, t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (t.mono.exps[i]) prod = mul(ctx, prod, image_power(i, t.mono.exps[i]));
        out = add(ctx, out, prod);
    }
    return out;
}

template <class Ring>
Polynomial<Ring> make_monic(const RingContext<Ring>& ctx, Polynomial<Ring> f) {
    if (f.is_zero() || ctx.ring.is_one(leading_coefficient(f))) return f;
    auto lc_inv = ctx.ring.inv(leading_coefficient(f));
    return scale(ctx, lc_inv, std::move(f));
}

/// Integer-primitive form over Q: coefficients scaled to integers with
/// content 1 and positive leading coefficient. Same ideal element up to a
/// nonzero scalar.
inline Polynomial<Rationals> primitive_part(const RingContext<Rationals>& ctx,
                                            const Polynomial<Rationals>& f) {
    if (f.is_zero()) return f;
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& t : f.terms) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    }
    BigRational factor = make_rational(den_lcm, num_gcd);
    if (sgn(leading_coefficient(f)) < 0) factor = -factor;
    return scale(ctx, factor, f);
}

}  // namespace symgb

#endif
