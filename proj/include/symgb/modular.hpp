#ifndef SYMGB_MODULAR_HPP
#define SYMGB_MODULAR_HPP

#include <functional>
#include <optional>
#include <set>

#include "symgb/crt.hpp"
#include "symgb/symmetric.hpp"

namespace symgb {

/// One prime's contribution: the reduced monic basis of the projected ideal,
/// computed with the same ordering as the rational target.
struct ModularSnapshot {
    uint32_t p = 0;
    GroebnerBasis<PrimeField> basis;
};

enum class VerifyMode { ptest, full };

struct LiftConfig {
    int initial_prime_count = 4;
    uint32_t prime_min = 1u << 30;        // inclusive
    uint32_t prime_max = 0x80000000u;     // exclusive
    double growth_factor = 2.0;
    VerifyMode verification = VerifyMode::ptest;
    int worker_count = 1;
    uint64_t seed = 1;
    int max_rounds = 16;
    /// Test hook, called on the snapshot pool after each round's
    /// computations; lets fault-injection tests corrupt snapshots.
    std::function<void(std::vector<ModularSnapshot>&)> snapshot_hook;

    void validate() const;
};

struct ModularRunReport {
    GroebnerBasis<Rationals> basis;
    std::vector<uint32_t> primes_accepted;
    std::vector<uint32_t> primes_rejected;
    int rounds = 0;
    VerifyMode verification = VerifyMode::ptest;
    double wall_s = 0;
};

/// Distinct random primes p in [prime_min, prime_max) with k | (p-1), none
/// dividing a numerator or denominator in F and none excluded. Throws
/// RangeExhaustedError when the range cannot supply `count` primes.
std::vector<uint32_t> choose_primes(int64_t k, int count, const RingContext<Rationals>& ctx,
                                    std::span<const Polynomial<Rationals>> F,
                                    const LiftConfig& cfg, const std::set<uint32_t>& exclude);

RingContext<PrimeField> reduce_context(const RingContext<Rationals>& ctx, uint32_t p);
Polynomial<PrimeField> reduce_mod_p(const RingContext<Rationals>& ctx,
                                    const RingContext<PrimeField>& pctx,
                                    const Polynomial<Rationals>& f);
std::vector<Polynomial<PrimeField>> reduce_mod_p(const RingContext<Rationals>& ctx,
                                                 const RingContext<PrimeField>& pctx,
                                                 std::span<const Polynomial<Rationals>> F);

struct VoteResult {
    std::vector<ModularSnapshot> kept;
    std::vector<uint32_t> rejected;
};

/// Majority vote on the leading-monomial fingerprint; the largest class
/// survives, ties broken toward the lexicographically smallest fingerprint.
VoteResult vote_by_fingerprint(std::vector<ModularSnapshot> snapshots);

struct LiftOutcome {
    std::optional<GroebnerBasis<Rationals>> basis;
    std::vector<ModularSnapshot> kept;
    std::vector<uint32_t> demoted;
};

/// Chinese-remainder each coefficient across the snapshots and reconstruct a
/// rational. Snapshots must share a fingerprint; those whose term supports
/// disagree with the majority are demoted rather than aborting the lift.
/// basis is empty when some coefficient fails to reconstruct.
LiftOutcome lift_to_rationals(const RingContext<Rationals>& ctx,
                              std::vector<ModularSnapshot> snapshots);

/// ptest: recompute at one fresh admissible prime and compare with the
/// reduction of G. full: Buchberger criterion over Q plus containments both
/// ways against a directly computed basis (deterministic, desk scale only).
bool verify_lift(const RingContext<Rationals>& ctx, const GroebnerBasis<Rationals>& G,
                 std::span<const Polynomial<Rationals>> F, const Permutation& sigma,
                 VerifyMode mode, const LiftConfig& cfg, std::set<uint32_t>& used);

/// The modular symmetric algorithm: per-prime symmetric bases in parallel,
/// fingerprint vote, CRT + rational reconstruction, verification; the prime
/// pool grows by growth_factor until a lift passes.
ModularRunReport modular_symmetric_groebner(const RingContext<Rationals>& ctx,
                                            std::span<const Polynomial<Rationals>> F,
                                            const Permutation& sigma, const LiftConfig& cfg = {});

inline ModularRunReport modular_symmetric_groebner(const RingContext<Rationals>& ctx,
                                                   const std::vector<Polynomial<Rationals>>& F,
                                                   const Permutation& sigma,
                                                   const LiftConfig& cfg = {}) {
    return modular_symmetric_groebner(ctx, std::span<const Polynomial<Rationals>>(F), sigma, cfg);
}

}  // namespace symgb

#endif
