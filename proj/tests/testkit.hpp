#ifndef SYMGB_TESTKIT_HPP
#define SYMGB_TESTKIT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "symgb/groebner.hpp"

namespace testkit {

// Deterministic RNG wrapper; modulo instead of std::uniform_int_distribution
// so streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    uint64_t next() { return eng_(); }
    uint64_t below(uint64_t n) { return eng_() % n; }
    int64_t in_range(int64_t lo, int64_t hi) {  // inclusive
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

template <class Ring>
symgb::Polynomial<Ring> random_polynomial(const symgb::RingContext<Ring>& ctx, Rng& rng,
                                          int max_terms, int max_deg, int64_t coeff_height) {
    std::vector<symgb::Term<Ring>> terms;
    int nterms = 1 + static_cast<int>(rng.below(max_terms));
    for (int t = 0; t < nterms; ++t) {
        symgb::Monomial m(ctx.names.size());
        int budget = static_cast<int>(rng.below(max_deg + 1));
        for (int j = 0; j < budget; ++j) m.exps[rng.below(ctx.names.size())] += 1;
        int64_t c = rng.in_range(-coeff_height, coeff_height);
        if (c == 0) c = 1;
        terms.push_back({ctx.ring.from_int(c), std::move(m)});
    }
    return normalized(ctx, std::move(terms));
}

inline symgb::Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(images[i], images[rng.below(i + 1)]);
    return symgb::Permutation::from_images(std::move(images));
}

}  // namespace testkit

#endif
