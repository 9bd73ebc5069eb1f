#include "symgb/modular.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

namespace symgb {

void LiftConfig::validate() const {
    if (initial_prime_count < 1) throw MathError("initial_prime_count must be >= 1");
    if (prime_min < (1u << 20)) throw MathError("prime_min must be >= 2^20");
    if (prime_max > 0x80000000u || prime_max <= prime_min)
        throw MathError("prime range must satisfy 2^20 <= min < max <= 2^31");
    if (growth_factor < 1.5) throw MathError("growth_factor must be >= 1.5");
    if (worker_count < 1) throw MathError("worker_count must be >= 1");
    if (max_rounds < 1) throw MathError("max_rounds must be >= 1");
}

namespace {

// Collect every prime factor of numerators/denominators? Far too costly.
// It suffices to reject a candidate p when it divides one of the integers,
// which is a cheap residue test per coefficient.
bool prime_touches_coefficients(uint32_t p, std::span<const Polynomial<Rationals>> F) {
    for (const auto& f : F)
        for (const auto& t : f.terms) {
            if (mpz_fdiv_ui(t.coeff.get_num().get_mpz_t(), p) == 0 && sgn(t.coeff) != 0) return true;
            if (mpz_fdiv_ui(t.coeff.get_den().get_mpz_t(), p) == 0) return true;
        }
    return false;
}

}  // namespace

std::vector<uint32_t> choose_primes(int64_t k, int count, const RingContext<Rationals>&,
                                    std::span<const Polynomial<Rationals>> F,
                                    const LiftConfig& cfg, const std::set<uint32_t>& exclude) {
    if (count < 1) throw MathError("prime count must be >= 1");
    if (k < 1) throw MathError("permutation order must be >= 1");
    std::vector<uint32_t> out;
    std::set<uint32_t> taken = exclude;
    std::mt19937_64 rng(cfg.seed ^ 0x70726d73ULL);
    const uint64_t span = cfg.prime_max - cfg.prime_min;
    // Uniform random candidates forced into the k | (p-1) residue class; the
    // admissible primes in a 2^30-wide window are abundant, so rejection
    // sampling terminates fast. The attempt cap turns a truly exhausted
    // range into an error instead of a spin.
    const uint64_t max_attempts = 20000ull * static_cast<uint64_t>(count) + 200000ull;
    uint64_t attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > max_attempts)
            throw RangeExhaustedError("prime range exhausted while sampling " +
                                      std::to_string(count) + " primes with k=" + std::to_string(k));
        uint64_t r = cfg.prime_min + rng() % span;
        uint64_t candidate = r - ((r - 1) % static_cast<uint64_t>(k));
        if (candidate < cfg.prime_min || candidate >= cfg.prime_max) continue;
        uint32_t p = static_cast<uint32_t>(candidate);
        if (taken.count(p)) continue;
        if (!is_prime_u64(p)) continue;
        if (prime_touches_coefficients(p, F)) continue;
        taken.insert(p);
        out.push_back(p);
    }
    return out;
}

RingContext<PrimeField> reduce_context(const RingContext<Rationals>& ctx, uint32_t p) {
    return make_context(PrimeField(p), ctx.names, ctx.ordering);
}

Polynomial<PrimeField> reduce_mod_p(const RingContext<Rationals>& ctx,
                                    const RingContext<PrimeField>& pctx,
                                    const Polynomial<Rationals>& f) {
    (void)ctx;
    std::vector<Term<PrimeField>> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms) terms.push_back({reduce_mod(t.coeff, pctx.ring), t.mono});
    return normalized(pctx, std::move(terms));
}

std::vector<Polynomial<PrimeField>> reduce_mod_p(const RingContext<Rationals>& ctx,
                                                 const RingContext<PrimeField>& pctx,
                                                 std::span<const Polynomial<Rationals>> F) {
    std::vector<Polynomial<PrimeField>> out;
    out.reserve(F.size());
    for (const auto& f : F) out.push_back(reduce_mod_p(ctx, pctx, f));
    return out;
}

namespace {

bool fingerprint_less(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
}

bool fingerprint_equal(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    return a == b;
}

// Full term-support signature of a basis, for the secondary vote inside the
// lift: element count and leading monomials already match, so compare the
// monomial sequences term by term.
bool support_equal(const GroebnerBasis<PrimeField>& a, const GroebnerBasis<PrimeField>& b) {
    if (a.elements.size() != b.elements.size()) return false;
    for (std::size_t i = 0; i < a.elements.size(); ++i) {
        const auto& x = a.elements[i].terms;
        const auto& y = b.elements[i].terms;
        if (x.size() != y.size()) return false;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!(x[j].mono == y[j].mono)) return false;
    }
    return true;
}

bool support_less(const GroebnerBasis<PrimeField>& a, const GroebnerBasis<PrimeField>& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    for (std::size_t i = 0; i < a.elements.size(); ++i) {
        const auto& x = a.elements[i].terms;
        const auto& y = b.elements[i].terms;
        for (std::size_t j = 0; j < std::min(x.size(), y.size()); ++j) {
            if (x[j].mono == y[j].mono) continue;
            return lex_less(x[j].mono, y[j].mono);
        }
        if (x.size() != y.size()) return x.size() < y.size();
    }
    return false;
}

}  // namespace

VoteResult vote_by_fingerprint(std::vector<ModularSnapshot> snapshots) {
    if (snapshots.empty()) throw MathError("vote on an empty snapshot list");
    // Group indices by fingerprint.
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
        bool placed = false;
        for (auto& cls : classes)
            if (fingerprint_equal(snapshots[cls.front()].basis.lm_fingerprint,
                                  snapshots[i].basis.lm_fingerprint)) {
                cls.push_back(i);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({i});
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < classes.size(); ++c) {
        if (classes[c].size() > classes[best].size()) {
            best = c;
        } else if (classes[c].size() == classes[best].size() &&
                   fingerprint_less(snapshots[classes[c].front()].basis.lm_fingerprint,
                                    snapshots[classes[best].front()].basis.lm_fingerprint)) {
            best = c;
        }
    }
    VoteResult out;
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (std::size_t i : classes[c]) {
            if (c == best)
                out.kept.push_back(std::move(snapshots[i]));
            else
                out.rejected.push_back(snapshots[i].p);
        }
    std::sort(out.kept.begin(), out.kept.end(),
              [](const ModularSnapshot& a, const ModularSnapshot& b) { return a.p < b.p; });
    std::sort(out.rejected.begin(), out.rejected.end());
    return out;
}

LiftOutcome lift_to_rationals(const RingContext<Rationals>& ctx,
                              std::vector<ModularSnapshot> snapshots) {
    LiftOutcome out;
    if (snapshots.empty()) throw MathError("lift of an empty snapshot list");

    // Secondary vote on the full term support: an unlucky prime can produce
    // extra or missing tail terms under an unchanged fingerprint.
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
        bool placed = false;
        for (auto& cls : classes)
            if (support_equal(snapshots[cls.front()].basis, snapshots[i].basis)) {
                cls.push_back(i);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({i});
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < classes.size(); ++c) {
        if (classes[c].size() > classes[best].size()) {
            best = c;
        } else if (classes[c].size() == classes[best].size() &&
                   support_less(snapshots[classes[c].front()].basis,
                                snapshots[classes[best].front()].basis)) {
            best = c;
        }
    }
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (std::size_t i : classes[c]) {
            if (c == best)
                out.kept.push_back(std::move(snapshots[i]));
            else
                out.demoted.push_back(snapshots[i].p);
        }
    std::sort(out.kept.begin(), out.kept.end(),
              [](const ModularSnapshot& a, const ModularSnapshot& b) { return a.p < b.p; });
    std::sort(out.demoted.begin(), out.demoted.end());

    const auto& shape = out.kept.front().basis;
    GroebnerBasis<Rationals> lifted;
    lifted.ordering = ctx.ordering;
    lifted.lm_fingerprint = shape.lm_fingerprint;
    for (std::size_t e = 0; e < shape.elements.size(); ++e) {
        std::vector<Term<Rationals>> terms;
        terms.reserve(shape.elements[e].size());
        for (std::size_t t = 0; t < shape.elements[e].terms.size(); ++t) {
            CrtAccumulator acc;
            for (const auto& snap : out.kept)
                acc = crt_extend(acc, snap.basis.elements[e].terms[t].coeff.value, snap.p);
            auto q = farey_reconstruct(acc.residue, acc.modulus);
            if (!q) return out;  // reconstruction failure: caller enlarges
            terms.push_back({*q, shape.elements[e].terms[t].mono});
        }
        lifted.elements.push_back({std::move(terms)});
    }
    out.basis = std::move(lifted);
    return out;
}

bool verify_lift(const RingContext<Rationals>& ctx, const GroebnerBasis<Rationals>& G,
                 std::span<const Polynomial<Rationals>> F, const Permutation& sigma,
                 VerifyMode mode, const LiftConfig& cfg, std::set<uint32_t>& used) {
    if (mode == VerifyMode::full) {
        if (!is_groebner_basis<Rationals>(ctx, G.elements)) return false;
        for (const auto& f : F)
            if (!normal_form<Rationals>(ctx, f, G.elements).is_zero()) return false;
        auto direct = buchberger<Rationals>(ctx, F);
        for (const auto& g : G.elements)
            if (!normal_form<Rationals>(ctx, g, direct.elements).is_zero()) return false;
        return true;
    }

    // ptest: one fresh prime, also avoiding the lifted basis' coefficients.
    const int64_t k = perm_order(sigma);
    uint32_t probe = 0;
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto cand = choose_primes(k, 1, ctx, F, cfg, used);
        used.insert(cand[0]);
        if (!prime_touches_coefficients(cand[0], G.elements)) {
            probe = cand[0];
            break;
        }
    }
    if (probe == 0)
        throw RangeExhaustedError("no admissible verification prime found");

    auto pctx = reduce_context(ctx, probe);
    auto reduced_claim = reduce_mod_p(ctx, pctx, std::span<const Polynomial<Rationals>>(G.elements));
    auto recomputed = symmetric_groebner<PrimeField>(pctx, reduce_mod_p(ctx, pctx, F), sigma);
    return reduced_claim == recomputed.basis.elements;
}

namespace {

std::vector<ModularSnapshot> compute_snapshots(const RingContext<Rationals>& ctx,
                                               std::span<const Polynomial<Rationals>> F,
                                               const Permutation& sigma,
                                               const std::vector<uint32_t>& primes,
                                               int worker_count) {
    std::vector<ModularSnapshot> results(primes.size());
    std::vector<std::exception_ptr> errors(primes.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= primes.size()) return;
            try {
                auto pctx = reduce_context(ctx, primes[i]);
                auto report = symmetric_groebner<PrimeField>(pctx, reduce_mod_p(ctx, pctx, F), sigma);
                results[i] = {primes[i], std::move(report.basis)};
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int nthreads = std::min<int>(worker_count, static_cast<int>(primes.size()));
    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace

ModularRunReport modular_symmetric_groebner(const RingContext<Rationals>& ctx,
                                            std::span<const Polynomial<Rationals>> F,
                                            const Permutation& sigma, const LiftConfig& cfg) {
    cfg.validate();
    if (sigma.size() != ctx.nvars())
        throw MathError("permutation size does not match the ring");
    if (!ctx.ordering.is_degree_ordering())
        throw MathError("the modular symmetric algorithm requires a degree ordering");

    const auto start = std::chrono::steady_clock::now();
    const int64_t k = perm_order(sigma);

    ModularRunReport report;
    report.verification = cfg.verification;

    std::set<uint32_t> attempted;   // every prime ever drawn, never reused
    std::set<uint32_t> bad;         // rejected or demoted
    std::vector<ModularSnapshot> pool;
    std::size_t target = static_cast<std::size_t>(cfg.initial_prime_count);

    for (int round = 1; round <= cfg.max_rounds; ++round) {
        report.rounds = round;
        if (pool.size() < target) {
            const int need = static_cast<int>(target - pool.size());
            auto fresh = choose_primes(k, need, ctx, F, cfg, attempted);
            attempted.insert(fresh.begin(), fresh.end());
            auto snaps = compute_snapshots(ctx, F, sigma, fresh, cfg.worker_count);
            for (auto& s : snaps) pool.push_back(std::move(s));
            std::sort(pool.begin(), pool.end(),
                      [](const ModularSnapshot& a, const ModularSnapshot& b) { return a.p < b.p; });
        }
        if (cfg.snapshot_hook) cfg.snapshot_hook(pool);

        auto vote = vote_by_fingerprint(std::move(pool));
        for (uint32_t p : vote.rejected) bad.insert(p);

        auto lift = lift_to_rationals(ctx, std::move(vote.kept));
        for (uint32_t p : lift.demoted) bad.insert(p);
        pool = std::move(lift.kept);

        if (lift.basis) {
            std::set<uint32_t> used = attempted;
            if (verify_lift(ctx, *lift.basis, F, sigma, cfg.verification, cfg, used)) {
                report.basis = std::move(*lift.basis);
                for (const auto& s : pool) report.primes_accepted.push_back(s.p);
                report.primes_rejected.assign(bad.begin(), bad.end());
                report.wall_s =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                return report;
            }
        }
        target = std::max(target + 1,
                          static_cast<std::size_t>(static_cast<double>(target) * cfg.growth_factor));
    }
    throw ResourceLimitError("modular loop exceeded " + std::to_string(cfg.max_rounds) +
                             " rounds (" + std::to_string(attempted.size()) + " primes attempted)");
}

}  // namespace symgb
