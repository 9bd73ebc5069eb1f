// symgb: reduced Groebner bases of permutation-symmetric ideals.
//
// Subcommands: gen, gb, symm-gb, symod-gb, check. Ideals travel in the
// plain-text format of symgb/ideals.hpp; results print in the same format so
// commands pipe into each other. Usage errors exit 2, computational errors 1.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "symgb/ideals.hpp"
#include "symgb/polynomial_io.hpp"

using json = nlohmann::ordered_json;
using namespace symgb;

namespace {

struct CommonOpts {
    std::string input = "-";
    std::string output_json;
    long characteristic = -1;  // -1: keep file ring; 0: Q; p: F_p
    std::string order;
    std::string perm;
    bool timings = false;
};

IdealSpec load_ideal(const std::string& path) {
    if (path == "-") return parse_ideal_stream(std::cin);
    return parse_ideal_file(path);
}

template <class Ring>
BasicIdealSpec<Ring> with_overrides(BasicIdealSpec<Ring> spec, const CommonOpts& opts) {
    if (!opts.order.empty()) {
        auto ordering = parse_ordering(opts.order, spec.ctx.nvars());
        auto ctx = make_context(spec.ctx.ring, spec.ctx.names, ordering);
        for (auto& g : spec.generators) g = normalized(ctx, std::move(g.terms));
        spec.ctx = std::move(ctx);
    }
    if (!opts.perm.empty()) spec.symmetry = parse_permutation(opts.perm, spec.ctx.nvars());
    return spec;
}

// Applies --char and --order/--perm; a positive characteristic projects a
// rational ideal into F_p.
IdealSpec prepare(IdealSpec spec, const CommonOpts& opts) {
    if (opts.characteristic > 0) {
        if (const auto* q = std::get_if<IdealSpecQ>(&spec)) {
            spec = reduce_ideal(*q, static_cast<uint32_t>(opts.characteristic));
        } else if (std::get<IdealSpecP>(spec).ctx.ring.modulus() !=
                   static_cast<uint32_t>(opts.characteristic)) {
            throw Error("input file already fixes a different characteristic");
        }
    } else if (opts.characteristic == 0 && std::holds_alternative<IdealSpecP>(spec)) {
        throw Error("cannot lift a prime-field ideal file to Q");
    }
    if (auto* q = std::get_if<IdealSpecQ>(&spec)) return with_overrides(std::move(*q), opts);
    return with_overrides(std::move(std::get<IdealSpecP>(spec)), opts);
}

template <class Ring>
std::string render_basis(const RingContext<Ring>& ctx, const GroebnerBasis<Ring>& basis,
                         const std::string& ring_decl) {
    std::string out = "ring: " + ring_decl + "\nvars:";
    for (const auto& n : ctx.names) out += " " + n;
    out += "\norder: " + format_ordering(ctx.ordering) + "\n";
    for (const auto& g : basis.elements) out += to_string(ctx, g) + "\n";
    return out;
}

std::string ring_decl_of(const IdealSpec& spec) {
    if (std::holds_alternative<IdealSpecQ>(spec)) return "Q";
    return "F " + std::to_string(std::get<IdealSpecP>(spec).ctx.ring.modulus());
}

template <class Ring>
json basis_json(const RingContext<Ring>& ctx, const GroebnerBasis<Ring>& basis,
                const std::string& ring_decl, const std::string& algorithm) {
    json j;
    j["algorithm"] = algorithm;
    j["ring"] = ring_decl;
    j["vars"] = ctx.names;
    j["order"] = format_ordering(ctx.ordering);
    j["basis"] = json::array();
    for (const auto& g : basis.elements) j["basis"].push_back(to_string(ctx, g));
    j["fingerprint"] = json::array();
    for (const auto& m : basis.lm_fingerprint) {
        Polynomial<Ring> mono{{{ctx.ring.one(), m}}};
        j["fingerprint"].push_back(to_string(ctx, mono));
    }
    return j;
}

void emit(const json& j, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

int run_gen(const std::string& what, int n, bool u_first, const std::string& output) {
    IdealSpecQ spec = what == "cyclic" ? cyclic_ideal(n) : swiss_francs_ideal(u_first);
    std::string text = print_ideal(IdealSpec{std::move(spec)});
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw Error("cannot write '" + output + "'");
        out << text;
    }
    return 0;
}

template <class Ring>
int run_gb(const BasicIdealSpec<Ring>& spec, const CommonOpts& opts, const std::string& ring_decl) {
    auto t0 = std::chrono::steady_clock::now();
    auto basis = buchberger(spec.ctx, spec.generators);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << render_basis(spec.ctx, basis, ring_decl);
    if (opts.timings) std::cerr << "std: " << secs << " s\n";
    auto j = basis_json(spec.ctx, basis, ring_decl, "gb");
    emit(j, opts.output_json);
    return 0;
}

template <class Ring>
int run_symm_gb(const BasicIdealSpec<Ring>& spec, const CommonOpts& opts, bool verify_symmetry,
                const std::string& ring_decl) {
    if (!spec.symmetry)
        throw Error("symm-gb needs a permutation (perm: header or --perm)");
    SymmetricOptions so{.verify_symmetry = verify_symmetry};
    auto report = symmetric_groebner(spec.ctx, spec.generators, *spec.symmetry, so);
    std::cout << render_basis(spec.ctx, report.basis, ring_decl);
    if (opts.timings) {
        double total = report.timings.transform_s + report.timings.first_gb_s +
                       report.timings.pullback_s + report.timings.second_gb_s;
        auto t0 = std::chrono::steady_clock::now();
        auto direct = buchberger(spec.ctx, spec.generators);
        double std_secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!(direct == report.basis)) throw Error("internal: symmetric/direct disagreement");
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.2f", std_secs > 0 ? total / std_secs : 0.0);
        std::cerr << "transform: " << report.timings.transform_s << " s\n"
                  << "first gb: " << report.timings.first_gb_s << " s\n"
                  << "pullback: " << report.timings.pullback_s << " s\n"
                  << "second gb: " << report.timings.second_gb_s << " s\n"
                  << "symm total: " << total << " s\n"
                  << "std: " << std_secs << " s\n"
                  << "symm/std: " << ratio << "\n";
    }
    auto j = basis_json(spec.ctx, report.basis, ring_decl, "symm-gb");
    j["perm"] = format_permutation(*spec.symmetry);
    j["k"] = report.k;
    emit(j, opts.output_json);
    return 0;
}

int run_symod_gb(const IdealSpecQ& spec, const CommonOpts& opts, const LiftConfig& cfg,
                 bool verify_symmetry) {
    if (!spec.symmetry)
        throw Error("symod-gb needs a permutation (perm: header or --perm)");
    if (verify_symmetry) {
        // Probabilistic symmetry check at one admissible prime.
        auto probe =
            choose_primes(perm_order(*spec.symmetry), 1, spec.ctx, spec.generators, cfg, {});
        auto pctx = reduce_context(spec.ctx, probe[0]);
        auto F = reduce_mod_p(spec.ctx, pctx, spec.generators);
        auto basis = buchberger(pctx, F);
        if (!check_symmetry<PrimeField>(pctx, F, *spec.symmetry, basis))
            throw Error("input ideal is not symmetric under " +
                        format_permutation(*spec.symmetry) + " (checked mod " +
                        std::to_string(probe[0]) + ")");
    }
    auto report = modular_symmetric_groebner(spec.ctx, spec.generators, *spec.symmetry, cfg);
    std::cout << render_basis(spec.ctx, report.basis, "Q");
    if (opts.timings)
        std::cerr << "rounds: " << report.rounds << "\n"
                  << "primes accepted: " << report.primes_accepted.size() << "\n"
                  << "primes rejected: " << report.primes_rejected.size() << "\n"
                  << "total: " << report.wall_s << " s\n";
    auto j = basis_json(spec.ctx, report.basis, "Q", "symod-gb");
    j["perm"] = format_permutation(*spec.symmetry);
    j["primes_used"] = report.primes_accepted;
    j["primes_rejected"] = report.primes_rejected;
    j["rounds"] = report.rounds;
    j["verification"] = cfg.verification == VerifyMode::full ? "full" : "ptest";
    j["seed"] = cfg.seed;
    emit(j, opts.output_json);
    return 0;
}

template <class Ring>
int run_check(const BasicIdealSpec<Ring>& ideal, const BasicIdealSpec<Ring>& claim, bool full) {
    const auto& ctx = ideal.ctx;
    if (claim.ctx.names != ctx.names || !(claim.ctx.ordering == ctx.ordering))
        throw Error("basis file ring does not match the ideal file");

    bool ok = true;
    auto fail = [&](const std::string& what) {
        std::cout << "FAIL " << what << "\n";
        ok = false;
    };

    for (const auto& g : claim.generators)
        if (g.is_zero() || !ctx.ring.is_one(leading_coefficient(g))) {
            fail("claimed basis not monic");
            break;
        }
    if (ok && !is_groebner_basis<Ring>(ctx, claim.generators))
        fail("Buchberger criterion (some s-polynomial does not reduce to zero)");
    if (ok) {
        for (const auto& f : ideal.generators)
            if (!normal_form<Ring>(ctx, f, claim.generators).is_zero()) {
                fail("an ideal generator does not reduce to zero");
                break;
            }
    }
    if (ok && full) {
        auto direct = buchberger(ctx, ideal.generators);
        for (const auto& g : claim.generators)
            if (!normal_form<Ring>(ctx, g, direct.elements).is_zero()) {
                fail("a claimed element lies outside the ideal");
                break;
            }
    }
    if (ok && ideal.symmetry) {
        GroebnerBasis<Ring> as_basis;
        as_basis.ordering = ctx.ordering;
        as_basis.elements = claim.generators;
        if (!check_symmetry<Ring>(ctx, ideal.generators, *ideal.symmetry, as_basis))
            fail("ideal is not symmetric under " + format_permutation(*ideal.symmetry));
    }
    std::cout << (ok ? "OK" : "FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner bases of permutation-symmetric polynomial ideals"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit a benchmark ideal file");
    std::string gen_what;
    int gen_n = 0;
    bool gen_u_first = false;
    std::string gen_output;
    gen->add_option("what", gen_what, "cyclic | swiss-francs")->required();
    gen->add_option("n", gen_n, "number of variables for cyclic");
    gen->add_flag("--u-first", gen_u_first, "swiss-francs labeling u,a1..a4,b1..b4");
    gen->add_option("--output", gen_output, "write to file instead of stdout");

    auto add_common = [](CLI::App* cmd, CommonOpts& opts) {
        cmd->add_option("file", opts.input, "ideal file ('-' for stdin)");
        cmd->add_option("--char", opts.characteristic,
                        "coefficient characteristic (0 = Q, p = F_p)");
        cmd->add_option("--order", opts.order, "dp | lp | block:dp8,lp1");
        cmd->add_option("--perm", opts.perm, "permutation in cycle notation");
        cmd->add_flag("--time", opts.timings, "print phase timings to stderr");
        cmd->add_option("--output", opts.output_json, "write a JSON result file");
    };

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis, direct");
    CommonOpts gb_opts;
    add_common(gb, gb_opts);

    auto* symm = app.add_subcommand("symm-gb", "symmetric algorithm (transform, compute, pull back)");
    CommonOpts symm_opts;
    bool symm_verify_symmetry = false;
    add_common(symm, symm_opts);
    symm->add_flag("--verify-symmetry", symm_verify_symmetry, "check the symmetry contract first");

    auto* symod = app.add_subcommand("symod-gb", "modular symmetric algorithm over Q");
    CommonOpts symod_opts;
    bool symod_verify_symmetry = false;
    LiftConfig cfg;
    std::string verify_mode = "ptest";
    int threads = 1, primes = cfg.initial_prime_count;
    uint64_t seed = cfg.seed;
    add_common(symod, symod_opts);
    symod->add_option("--threads", threads, "parallel per-prime workers");
    symod->add_option("--primes", primes, "initial prime count");
    symod->add_option("--seed", seed, "RNG seed for prime sampling");
    symod->add_option("--verify", verify_mode, "ptest | full")
        ->check(CLI::IsMember({"ptest", "full"}));
    symod->add_option("--prime-min", cfg.prime_min, "lower end of the prime range");
    symod->add_option("--prime-max", cfg.prime_max, "upper end (exclusive) of the prime range");
    symod->add_flag("--verify-symmetry", symod_verify_symmetry,
                    "check the symmetry contract at one prime first");

    auto* check = app.add_subcommand("check", "verify a claimed basis against an ideal");
    std::string check_ideal, check_basis;
    std::string check_mode = "full";
    check->add_option("ideal", check_ideal, "ideal file")->required();
    check->add_option("basis", check_basis, "claimed basis file")->required();
    check->add_option("--verify", check_mode, "ptest skips the containment direction")
        ->check(CLI::IsMember({"ptest", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            if (gen_what == "cyclic") {
                if (gen_n < 2) throw Error("gen cyclic needs N >= 2");
            } else if (gen_what != "swiss-francs") {
                throw Error("unknown generator '" + gen_what + "' (cyclic | swiss-francs)");
            }
            return run_gen(gen_what, gen_n, gen_u_first, gen_output);
        }
        if (gb->parsed()) {
            auto spec = prepare(load_ideal(gb_opts.input), gb_opts);
            if (const auto* q = std::get_if<IdealSpecQ>(&spec)) return run_gb(*q, gb_opts, "Q");
            return run_gb(std::get<IdealSpecP>(spec), gb_opts, ring_decl_of(spec));
        }
        if (symm->parsed()) {
            auto spec = prepare(load_ideal(symm_opts.input), symm_opts);
            if (const auto* q = std::get_if<IdealSpecQ>(&spec))
                return run_symm_gb(*q, symm_opts, symm_verify_symmetry, "Q");
            return run_symm_gb(std::get<IdealSpecP>(spec), symm_opts, symm_verify_symmetry,
                               ring_decl_of(spec));
        }
        if (symod->parsed()) {
            cfg.worker_count = threads;
            cfg.initial_prime_count = primes;
            cfg.seed = seed;
            cfg.verification = verify_mode == "full" ? VerifyMode::full : VerifyMode::ptest;
            auto spec = prepare(load_ideal(symod_opts.input), symod_opts);
            if (!std::holds_alternative<IdealSpecQ>(spec))
                throw Error("symod-gb expects a rational ideal (ring: Q)");
            return run_symod_gb(std::get<IdealSpecQ>(spec), symod_opts, cfg,
                                symod_verify_symmetry);
        }
        if (check->parsed()) {
            auto ideal = load_ideal(check_ideal);
            auto claim = load_ideal(check_basis);
            bool full = check_mode == "full";
            if (const auto* q = std::get_if<IdealSpecQ>(&ideal)) {
                if (!std::holds_alternative<IdealSpecQ>(claim))
                    throw Error("ideal and basis files use different rings");
                return run_check(*q, std::get<IdealSpecQ>(claim), full);
            }
            if (!std::holds_alternative<IdealSpecP>(claim))
                throw Error("ideal and basis files use different rings");
            const auto& pi = std::get<IdealSpecP>(ideal);
            const auto& pc = std::get<IdealSpecP>(claim);
            if (pi.ctx.ring.modulus() != pc.ctx.ring.modulus())
                throw Error("ideal and basis files use different characteristics");
            return run_check(pi, pc, full);
        }
    } catch (const ParseError& e) {
        std::cerr << "symgb: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "symgb: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "symgb: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
