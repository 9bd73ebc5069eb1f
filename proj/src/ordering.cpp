#include "symgb/ordering.hpp"

#include <charconv>

namespace symgb {

OrderingSpec OrderingSpec::block(std::vector<OrderingSegment> segs) {
    if (segs.empty()) throw MathError("block ordering needs at least one segment");
    for (const auto& s : segs)
        if (s.nvars <= 0) throw MathError("block ordering segment must be nonempty");
    return {std::move(segs)};
}

std::string format_ordering(const OrderingSpec& spec) {
    auto name = [](OrderKind k) { return k == OrderKind::degrevlex ? "dp" : "lp"; };
    if (spec.segments.size() == 1) return name(spec.segments[0].kind);
    std::string out = "block:";
    for (std::size_t i = 0; i < spec.segments.size(); ++i) {
        if (i) out += ',';
        out += name(spec.segments[i].kind);
        out += std::to_string(spec.segments[i].nvars);
    }
    return out;
}

OrderingSpec parse_ordering(std::string_view text, int nvars) {
    if (text == "dp") return OrderingSpec::degrevlex(nvars);
    if (text == "lp") return OrderingSpec::lex(nvars);
    if (text.substr(0, 6) == "block:") {
        std::vector<OrderingSegment> segs;
        std::string_view rest = text.substr(6);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string_view piece = rest.substr(0, comma);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            OrderKind kind;
            if (piece.substr(0, 2) == "dp")
                kind = OrderKind::degrevlex;
            else if (piece.substr(0, 2) == "lp")
                kind = OrderKind::lex;
            else
                throw MathError("unknown ordering segment '" + std::string(piece) + "'");
            int count = 0;
            auto digits = piece.substr(2);
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), count);
            if (ec != std::errc() || ptr != digits.data() + digits.size() || count <= 0)
                throw MathError("bad segment count in ordering '" + std::string(piece) + "'");
            segs.push_back({kind, count});
        }
        auto spec = OrderingSpec::block(std::move(segs));
        if (spec.nvars() != nvars)
            throw MathError("block ordering covers " + std::to_string(spec.nvars()) +
                            " variables, ring has " + std::to_string(nvars));
        return spec;
    }
    throw MathError("unknown ordering '" + std::string(text) + "' (use dp, lp or block:...)");
}

}  // namespace symgb
