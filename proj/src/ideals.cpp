#include "symgb/ideals.hpp"

#include <fstream>
#include <sstream>

namespace symgb {

IdealSpecQ cyclic_ideal(int n) {
    if (n < 2) throw MathError("cyclic ideal needs n >= 2");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    auto ctx = make_context(Rationals{}, std::move(names), OrderingSpec::degrevlex(n));

    IdealSpecQ spec{std::move(ctx), {}, {}};
    for (int d = 1; d < n; ++d) {
        std::vector<Term<Rationals>> terms;
        for (int i = 0; i < n; ++i) {
            Monomial m(n);
            for (int j = 0; j < d; ++j) m.exps[(i + j) % n] += 1;
            terms.push_back({BigRational(1), std::move(m)});
        }
        spec.generators.push_back(normalized(spec.ctx, std::move(terms)));
    }
    Monomial all(n);
    for (int i = 0; i < n; ++i) all.exps[i] = 1;
    spec.generators.push_back(normalized(
        spec.ctx, {{BigRational(1), std::move(all)}, {BigRational(-1), Monomial(n)}}));

    std::vector<int> images(n);
    for (int i = 1; i <= n; ++i) images[i - 1] = i % n + 1;
    spec.symmetry = Permutation::from_images(std::move(images));
    return spec;
}

IdealSpecQ swiss_francs_ideal(bool u_first) {
    const int n = 9;
    std::vector<std::string> names;
    if (u_first) names.push_back("u");
    for (int i = 1; i <= 4; ++i) names.push_back("a" + std::to_string(i));
    for (int i = 1; i <= 4; ++i) names.push_back("b" + std::to_string(i));
    if (!u_first) names.push_back("u");
    auto ctx = make_context(Rationals{}, std::move(names), OrderingSpec::degrevlex(n));

    const int base = u_first ? 1 : 0;
    auto var = [&](int idx) { return variable_poly(ctx, idx); };
    auto a = [&](int i) { return var(base + i - 1); };
    auto b = [&](int i) { return var(base + 4 + i - 1); };
    auto u = [&]() { return var(u_first ? 0 : 8); };
    auto one = constant_poly(ctx, BigRational(1));

    IdealSpecQ spec{ctx, {}, {}};
    spec.generators.push_back(sub(ctx, a(1), b(1)));
    {
        auto sa = zero_poly(ctx), sb = zero_poly(ctx);
        for (int i = 1; i <= 4; ++i) {
            sa = add(ctx, sa, a(i));
            sb = add(ctx, sb, b(i));
        }
        spec.generators.push_back(sa);
        spec.generators.push_back(sb);
    }
    auto bilinear = [&](int i, int k) { return add(ctx, one, mul(ctx, a(i), b(k))); };
    auto bilinear_t = [&](int k, int i) { return add(ctx, one, mul(ctx, a(k), b(i))); };
    for (int i = 1; i <= 4; ++i) {
        auto f = zero_poly(ctx);
        for (int j = 1; j <= 4; ++j) {
            auto term = mul(ctx, b(j), bilinear(i, i));
            for (int k = 1; k <= 4; ++k)
                if (k != j) term = mul(ctx, term, bilinear(i, k));
            f = add(ctx, f, term);
        }
        auto last = b(i);
        for (int k = 1; k <= 4; ++k) last = mul(ctx, last, bilinear(i, k));
        spec.generators.push_back(add(ctx, f, last));
    }
    for (int i = 1; i <= 4; ++i) {
        auto g = zero_poly(ctx);
        for (int j = 1; j <= 4; ++j) {
            auto term = mul(ctx, a(j), bilinear(i, i));
            for (int k = 1; k <= 4; ++k)
                if (k != j) term = mul(ctx, term, bilinear_t(k, i));
            g = add(ctx, g, term);
        }
        auto last = a(i);
        for (int k = 1; k <= 4; ++k) last = mul(ctx, last, bilinear_t(k, i));
        spec.generators.push_back(add(ctx, g, last));
    }
    spec.generators.push_back(sub(ctx, one, mul(ctx, u(), a(1))));

    // Transposes {a3,a4} and {b3,b4} in whichever labeling is active.
    std::vector<int> images(n);
    for (int i = 1; i <= n; ++i) images[i - 1] = i;
    auto swap_imgs = [&](int x, int y) { std::swap(images[x - 1], images[y - 1]); };
    swap_imgs(base + 3, base + 4);
    swap_imgs(base + 7, base + 8);
    spec.symmetry = Permutation::from_images(std::move(images));
    return spec;
}

IdealSpecP reduce_ideal(const IdealSpecQ& spec, uint32_t p) {
    auto pctx = reduce_context(spec.ctx, p);
    IdealSpecP out{pctx, {}, spec.symmetry};
    out.generators = reduce_mod_p(spec.ctx, pctx, spec.generators);
    return out;
}

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> split_meaningful_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::size_t b = raw.find_first_not_of(" \t\r");
        std::size_t e = raw.find_last_not_of(" \t\r");
        if (b != std::string_view::npos)
            lines.push_back({number, std::string(raw.substr(b, e - b + 1))});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

std::string expect_header(const Line& line, const char* key) {
    std::string_view text = line.text;
    std::string prefix = std::string(key) + ":";
    if (text.substr(0, prefix.size()) != prefix)
        throw ParseError("expected '" + prefix + " ...'", line.number, 1);
    std::string_view rest = text.substr(prefix.size());
    std::size_t b = rest.find_first_not_of(" \t");
    return b == std::string_view::npos ? std::string() : std::string(rest.substr(b));
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> words;
    std::istringstream in(s);
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

template <class Ring>
IdealSpec parse_body(Ring ring, const std::vector<Line>& lines, std::size_t at) {
    if (at >= lines.size()) throw ParseError("missing 'vars:' header", 1, 1);
    auto names = split_words(expect_header(lines[at], "vars"));
    if (names.empty()) throw ParseError("no variables listed", lines[at].number, 1);
    ++at;
    if (at >= lines.size()) throw ParseError("missing 'order:' header", lines[at - 1].number, 1);
    OrderingSpec ordering;
    try {
        ordering = parse_ordering(expect_header(lines[at], "order"), static_cast<int>(names.size()));
    } catch (const MathError& e) {
        throw ParseError(e.what(), lines[at].number, 1);
    }
    ++at;

    BasicIdealSpec<Ring> spec{make_context(std::move(ring), names, ordering), {}, {}};
    if (at < lines.size() && lines[at].text.starts_with("perm:")) {
        try {
            spec.symmetry = parse_permutation(expect_header(lines[at], "perm"), spec.ctx.nvars());
        } catch (const MathError& e) {
            throw ParseError(e.what(), lines[at].number, 1);
        }
        ++at;
    }
    for (; at < lines.size(); ++at)
        spec.generators.push_back(parse_polynomial(spec.ctx, lines[at].text, lines[at].number));
    return spec;
}

}  // namespace

IdealSpec parse_ideal_text(std::string_view text) {
    auto lines = split_meaningful_lines(text);
    if (lines.empty()) throw ParseError("empty ideal file", 1, 1);
    auto ring_decl = expect_header(lines[0], "ring");
    auto words = split_words(ring_decl);
    if (words.size() == 1 && words[0] == "Q") return parse_body(Rationals{}, lines, 1);
    if (words.size() == 2 && words[0] == "F") {
        uint32_t p = 0;
        try {
            p = static_cast<uint32_t>(std::stoul(words[1]));
        } catch (...) {
            throw ParseError("bad characteristic '" + words[1] + "'", lines[0].number, 1);
        }
        try {
            return parse_body(PrimeField(p), lines, 1);
        } catch (const MathError& e) {
            throw ParseError(e.what(), lines[0].number, 1);
        }
    }
    throw ParseError("ring must be 'Q' or 'F <prime>'", lines[0].number, 1);
}

IdealSpec parse_ideal_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ideal_text(buf.str());
}

IdealSpec parse_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_ideal_stream(in);
}

namespace {

template <class Ring>
std::string print_ideal_impl(const BasicIdealSpec<Ring>& spec, const std::string& ring_decl) {
    std::string out = "ring: " + ring_decl + "\nvars:";
    for (const auto& n : spec.ctx.names) out += " " + n;
    out += "\norder: " + format_ordering(spec.ctx.ordering) + "\n";
    if (spec.symmetry) out += "perm: " + format_permutation(*spec.symmetry) + "\n";
    for (const auto& g : spec.generators) out += to_string(spec.ctx, g) + "\n";
    return out;
}

}  // namespace

std::string print_ideal(const IdealSpec& spec) {
    if (const auto* q = std::get_if<IdealSpecQ>(&spec)) return print_ideal_impl(*q, "Q");
    const auto& p = std::get<IdealSpecP>(spec);
    return print_ideal_impl(p, "F " + std::to_string(p.ctx.ring.modulus()));
}

}  // namespace symgb
