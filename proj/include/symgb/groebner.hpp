#ifndef SYMGB_GROEBNER_HPP
#define SYMGB_GROEBNER_HPP

#include <map>
#include <set>

#include "symgb/permutation.hpp"

namespace symgb {

/// Reduced Groebner basis: monic elements, no leading monomial divides
/// another, no tail monomial lies in the leading ideal. Elements sorted
/// ascending by leading monomial; lm_fingerprint is that leading-monomial
/// sequence.
template <class Ring>
struct GroebnerBasis {
    std::vector<Polynomial<Ring>> elements;
    OrderingSpec ordering;
    std::vector<Monomial> lm_fingerprint;

    bool is_unit_ideal() const {
        return elements.size() == 1 && elements[0].size() == 1 && elements[0].terms[0].mono.is_one();
    }
    friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

/// spoly(f,g) = X^(g-a) * f - (LC f / LC g) * X^(g-b) * g, leading terms
/// cancelling at the lcm X^g.
template <class Ring>
Polynomial<Ring> s_polynomial(const RingContext<Ring>& ctx, const Polynomial<Ring>& f,
                              const Polynomial<Ring>& g) {
    if (f.is_zero() || g.is_zero()) throw MathError("s-polynomial of the zero polynomial");
    const auto& lf = f.terms.front();
    const auto& lg = g.terms.front();
    Monomial gamma = mono_lcm(lf.mono, lg.mono);
    auto lhs = mul_term(ctx, f, ctx.ring.one(), mono_div(gamma, lf.mono));
    auto rhs = mul_term(ctx, g, ctx.ring.div(lf.coeff, lg.coeff), mono_div(gamma, lg.mono));
    return sub(ctx, lhs, rhs);
}

namespace detail {

// Reducer-selection rule: among reducers whose leading monomial divides the
// target, take the smallest leading monomial, ties by insertion index. The
// index list is kept sorted accordingly, so the first hit wins.
template <class Ring>
struct ReducerView {
    const RingContext<Ring>& ctx;
    const std::vector<Polynomial<Ring>>* polys;
    std::vector<int> by_lm;    // indices sorted by (LM asc, index asc)
    std::vector<int> degrees;  // leading degrees, parallel to by_lm
    bool degree_sorted;        // degrees ascend along by_lm (degree ordering)

    explicit ReducerView(const RingContext<Ring>& c, const std::vector<Polynomial<Ring>>* ps)
        : ctx(c), polys(ps), degree_sorted(c.ordering.is_degree_ordering()) {}

    void insert(int idx) {
        auto pos = std::lower_bound(by_lm.begin(), by_lm.end(), idx, [&](int a, int b) {
            int c = compare(leading_monomial((*polys)[a]), leading_monomial((*polys)[b]),
                            ctx.ordering);
            if (c != 0) return c < 0;
            return a < b;
        });
        degrees.insert(degrees.begin() + (pos - by_lm.begin()),
                       leading_monomial((*polys)[idx]).degree());
        by_lm.insert(pos, idx);
    }

    const Polynomial<Ring>* find(const Monomial& target) const {
        const int td = target.degree();
        for (std::size_t i = 0; i < by_lm.size(); ++i) {
            if (degrees[i] > td) {
                if (degree_sorted) break;
                continue;
            }
            const Polynomial<Ring>& g = (*polys)[by_lm[i]];
            if (divides(leading_monomial(g), target)) return &g;
        }
        return nullptr;
    }
};

template <class Ring>
Polynomial<Ring> normal_form_impl(const RingContext<Ring>& ctx, const Polynomial<Ring>& f,
                                  const ReducerView<Ring>& reducers) {
    std::vector<Term<Ring>> result;
    std::vector<Term<Ring>> work = f.terms;
    std::vector<Term<Ring>> buf;
    std::size_t head = 0;
    while (head < work.size()) {
        const Term<Ring>& t = work[head];
        const Polynomial<Ring>* g = reducers.find(t.mono);
        if (!g) {
            result.push_back(t);
            ++head;
            continue;
        }
        auto c = ctx.ring.div(t.coeff, leading_coefficient(*g));
        Monomial m = mono_div(t.mono, leading_monomial(*g));
        std::span<const Term<Ring>> rest(work.data() + head + 1, work.size() - head - 1);
        std::span<const Term<Ring>> gtail(g->terms.data() + 1, g->terms.size() - 1);
        merge_scaled_into<Ring>(ctx, rest, gtail, ctx.ring.neg(c), &m, buf);
        work.swap(buf);
        head = 0;
    }
    return {std::move(result)};
}

// Monic over a finite field; integer-primitive over Q so reducers stay small.
template <class Ring>
Polynomial<Ring> interreduce_scale(const RingContext<Ring>& ctx, Polynomial<Ring> f) {
    return make_monic(ctx, std::move(f));
}
inline Polynomial<Rationals> interreduce_scale(const RingContext<Rationals>& ctx,
                                               Polynomial<Rationals> f) {
    return primitive_part(ctx, f);
}

}  // namespace detail

/// Fully reduced remainder of f modulo G: no monomial of the result is
/// divisible by any leading monomial of G, and f - result lies in <G>.
template <class Ring>
Polynomial<Ring> normal_form(const RingContext<Ring>& ctx, const Polynomial<Ring>& f,
                             std::span<const Polynomial<Ring>> G) {
    std::vector<Polynomial<Ring>> nonzero;
    nonzero.reserve(G.size());
    for (const auto& g : G)
        if (!g.is_zero()) nonzero.push_back(g);
    detail::ReducerView<Ring> view(ctx, &nonzero);
    for (int i = 0; i < static_cast<int>(nonzero.size()); ++i) view.insert(i);
    return detail::normal_form_impl(ctx, f, view);
}

template <class Ring>
Polynomial<Ring> normal_form(const RingContext<Ring>& ctx, const Polynomial<Ring>& f,
                             const std::vector<Polynomial<Ring>>& G) {
    return normal_form<Ring>(ctx, f, std::span<const Polynomial<Ring>>(G));
}

template <class Ring>
Polynomial<Ring> normal_form(const RingContext<Ring>& ctx, const Polynomial<Ring>& f,
                             const GroebnerBasis<Ring>& G) {
    return normal_form<Ring>(ctx, f, std::span<const Polynomial<Ring>>(G.elements));
}

/// Minimalize, tail-reduce, make monic and sort: the unique reduced basis of
/// the leading ideal spanned by `polys` (which must already satisfy
/// Buchberger's criterion for the result to be a Groebner basis).
template <class Ring>
GroebnerBasis<Ring> reduce_basis(const RingContext<Ring>& ctx, std::vector<Polynomial<Ring>> polys) {
    GroebnerBasis<Ring> out;
    out.ordering = ctx.ordering;

    std::vector<Polynomial<Ring>> nonzero;
    for (auto& p : polys) {
        if (p.is_zero()) continue;
        if (leading_monomial(p).is_one()) {
            out.elements = {constant_poly(ctx, ctx.ring.one())};
            out.lm_fingerprint = {Monomial(ctx.names.size())};
            return out;
        }
        nonzero.push_back(std::move(p));
    }
    if (nonzero.empty()) return out;

    std::vector<int> order(nonzero.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int c = compare(leading_monomial(nonzero[a]), leading_monomial(nonzero[b]), ctx.ordering);
        if (c != 0) return c < 0;
        return a < b;
    });

    // A leading monomial can only be divided by an earlier (smaller) one.
    std::vector<Polynomial<Ring>> minimal;
    for (int idx : order) {
        const Monomial& lm = leading_monomial(nonzero[idx]);
        bool redundant = false;
        for (const auto& kept : minimal)
            if (divides(leading_monomial(kept), lm)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(nonzero[idx]);
    }

    detail::ReducerView<Ring> view(ctx, &minimal);
    for (int i = 0; i < static_cast<int>(minimal.size()); ++i) view.insert(i);

    for (const auto& g : minimal) {
        // Leading monomials of `minimal` never divide g's tail monomials, so
        // reducing the tail against the full set is safe.
        auto reduced_tail = detail::normal_form_impl(ctx, tail(g), view);
        std::vector<Term<Ring>> terms;
        terms.reserve(1 + reduced_tail.size());
        terms.push_back(g.terms.front());
        for (auto& t : reduced_tail.terms) terms.push_back(std::move(t));
        out.elements.push_back(make_monic(ctx, Polynomial<Ring>{std::move(terms)}));
    }

    std::sort(out.elements.begin(), out.elements.end(),
              [&](const Polynomial<Ring>& a, const Polynomial<Ring>& b) {
                  return less(leading_monomial(a), leading_monomial(b), ctx.ordering);
              });
    for (const auto& g : out.elements) out.lm_fingerprint.push_back(leading_monomial(g));
    return out;
}

/// Buchberger's algorithm with the normal pair-selection strategy (lcm degree,
/// then lcm, then insertion order) and the product and chain criteria.
/// Returns the reduced Groebner basis; canonical for the ideal and ordering.
template <class Ring>
GroebnerBasis<Ring> buchberger(const RingContext<Ring>& ctx,
                               std::span<const Polynomial<Ring>> generators) {
    std::vector<Polynomial<Ring>> basis;
    std::vector<Monomial> lms;
    detail::ReducerView<Ring> view(ctx, &basis);

    struct Pair {
        int deg;
        Monomial lcm;
        int i, j;
    };
    auto pair_less = [&ctx](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = compare(a.lcm, b.lcm, ctx.ordering);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);

    auto add_element = [&](Polynomial<Ring> h) {
        const int t = static_cast<int>(basis.size());
        const Monomial lm_t = leading_monomial(h);
        basis.push_back(std::move(h));
        lms.push_back(lm_t);
        view.insert(t);

        struct Cand {
            Monomial lcm;
            int i;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(t);
        for (int i = 0; i < t; ++i)
            cands.push_back({mono_lcm(lms[i], lm_t), i, mono_coprime(lms[i], lm_t)});

        // Chain criterion, new pairs: keep only minimal lcms ...
        std::vector<char> dead(cands.size(), 0);
        for (std::size_t a = 0; a < cands.size(); ++a) {
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b) continue;
                if (!(cands[b].lcm == cands[a].lcm) && divides(cands[b].lcm, cands[a].lcm)) {
                    dead[a] = 1;
                    break;
                }
            }
        }
        // ... then one representative per lcm value, discarding groups that
        // contain a coprime pair (product criterion).
        std::map<std::vector<uint16_t>, std::vector<std::size_t>> groups;
        for (std::size_t a = 0; a < cands.size(); ++a)
            if (!dead[a])
                groups[std::vector<uint16_t>(cands[a].lcm.exps.begin(), cands[a].lcm.exps.end())]
                    .push_back(a);
        // Chain criterion, old pairs: t's leading monomial splits them.
        for (auto it = queue.begin(); it != queue.end();) {
            const Pair& pr = *it;
            if (divides(lm_t, pr.lcm) && !(mono_lcm(lms[pr.i], lm_t) == pr.lcm) &&
                !(mono_lcm(lms[pr.j], lm_t) == pr.lcm))
                it = queue.erase(it);
            else
                ++it;
        }
        for (auto& [key, members] : groups) {
            bool has_coprime = false;
            for (auto a : members) has_coprime = has_coprime || cands[a].coprime;
            if (has_coprime) continue;
            std::size_t rep = members.front();
            queue.insert({cands[rep].lcm.degree(), cands[rep].lcm, cands[rep].i, t});
        }
    };

    for (const auto& f : generators) {
        if (f.is_zero()) continue;
        auto h = detail::normal_form_impl(ctx, f, view);
        if (!h.is_zero()) add_element(detail::interreduce_scale(ctx, std::move(h)));
    }
    if (basis.empty()) return reduce_basis(ctx, {});

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        auto s = s_polynomial(ctx, basis[pr.i], basis[pr.j]);
        auto h = detail::normal_form_impl(ctx, s, view);
        if (!h.is_zero()) add_element(detail::interreduce_scale(ctx, std::move(h)));
    }
    return reduce_basis(ctx, std::move(basis));
}

template <class Ring>
GroebnerBasis<Ring> buchberger(const RingContext<Ring>& ctx,
                               const std::vector<Polynomial<Ring>>& generators) {
    return buchberger<Ring>(ctx, std::span<const Polynomial<Ring>>(generators));
}

/// Buchberger's criterion, checked pair by pair without shortcuts.
template <class Ring>
bool is_groebner_basis(const RingContext<Ring>& ctx, std::span<const Polynomial<Ring>> G) {
    std::vector<Polynomial<Ring>> nonzero;
    for (const auto& g : G)
        if (!g.is_zero()) nonzero.push_back(g);
    detail::ReducerView<Ring> view(ctx, &nonzero);
    for (int i = 0; i < static_cast<int>(nonzero.size()); ++i) view.insert(i);
    for (std::size_t i = 0; i < nonzero.size(); ++i)
        for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
            auto s = s_polynomial(ctx, nonzero[i], nonzero[j]);
            if (!detail::normal_form_impl(ctx, s, view).is_zero()) return false;
        }
    return true;
}

/// sigma(<F>) = <F> iff every sigma(f) reduces to zero modulo a Groebner
/// basis of <F>.
template <class Ring>
bool check_symmetry(const RingContext<Ring>& ctx, std::span<const Polynomial<Ring>> F,
                    const Permutation& sigma, const GroebnerBasis<Ring>& G) {
    for (const auto& f : F)
        if (!normal_form<Ring>(ctx, apply(ctx, sigma, f), G).is_zero()) return false;
    return true;
}

template <class Ring>
bool check_symmetry(const RingContext<Ring>& ctx, const std::vector<Polynomial<Ring>>& F,
                    const Permutation& sigma, const GroebnerBasis<Ring>& G) {
    return check_symmetry<Ring>(ctx, std::span<const Polynomial<Ring>>(F), sigma, G);
}

}  // namespace symgb

#endif
