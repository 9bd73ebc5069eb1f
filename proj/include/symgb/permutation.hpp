#ifndef SYMGB_PERMUTATION_HPP
#define SYMGB_PERMUTATION_HPP

#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "symgb/polynomial.hpp"

namespace symgb {

/// Permutation of {1..n}, stored as 1-based images.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);
    /// Validates bijectivity.
    static Permutation from_images(std::vector<int> images);

    int size() const { return static_cast<int>(images.size()); }
    int map(int i) const { return images[i - 1]; }
    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if (map(i) != i) return false;
        return true;
    }
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Disjoint cycles covering {1..n}, fixed points included as 1-cycles.
/// Canonical: each cycle starts at its minimal element, cycles sorted by
/// that element. cycle_type is the ascending multiset of lengths.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
    std::vector<int> cycle_type;
};

CycleDecomposition decompose(const Permutation& sigma);

/// lcm of the cycle lengths = least k > 0 with sigma^k = id.
int64_t perm_order(const Permutation& sigma);

Permutation inverse(const Permutation& sigma);
Permutation compose(const Permutation& a, const Permutation& b);  // (a*b)(i) = a(b(i))

/// Parse "(1 2)(3)" / "(1,2)(3)"; a separator-free cycle body like "(12)" is
/// split per digit when n <= 9. Omitted indices are fixed points.
Permutation parse_permutation(std::string_view text, int n);
std::string format_permutation(const Permutation& sigma);

inline Monomial apply(const Permutation& sigma, const Monomial& m) {
    if (static_cast<int>(m.nvars()) != sigma.size())
        throw MathError("permutation size does not match monomial");
    Monomial out(m.nvars());
    for (int i = 1; i <= sigma.size(); ++i) out.exps[sigma.map(i) - 1] = m.exps[i - 1];
    return out;
}

/// The ring automorphism x_i |-> x_{sigma(i)} applied to f.
template <class Ring>
Polynomial<Ring> apply(const RingContext<Ring>& ctx, const Permutation& sigma,
                       const Polynomial<Ring>& f) {
    if (sigma.size() != ctx.nvars()) throw MathError("permutation size does not match ring");
    std::vector<Term<Ring>> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms) terms.push_back({t.coeff, apply(sigma, t.mono)});
    return normalized(ctx, std::move(terms));
}

/// Close F under sigma: F, sigma(F), ..., sigma^{k-1}(F) deduplicated, in
/// first-seen order. Setwise sigma-invariant; generates the same ideal when
/// <F> is sigma-symmetric.
template <class Ring>
std::vector<Polynomial<Ring>> symmetrize_generators(const RingContext<Ring>& ctx,
                                                    std::span<const Polynomial<Ring>> F,
                                                    const Permutation& sigma) {
    std::vector<Polynomial<Ring>> out(F.begin(), F.end());
    std::size_t frontier_begin = 0;
    while (frontier_begin < out.size()) {
        std::size_t frontier_end = out.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            auto image = apply(ctx, sigma, out[i]);
            bool seen = false;
            for (const auto& h : out)
                if (h == image) {
                    seen = true;
                    break;
                }
            if (!seen) out.push_back(std::move(image));
        }
        frontier_begin = frontier_end;
    }
    return out;
}

}  // namespace symgb

#endif
