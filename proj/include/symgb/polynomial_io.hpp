#ifndef SYMGB_POLYNOMIAL_IO_HPP
#define SYMGB_POLYNOMIAL_IO_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "symgb/polynomial.hpp"

namespace symgb {

// --- printing ----------------------------------------------------------------

namespace detail {

inline bool coeff_is_negative(const Rationals&, const BigRational& c) { return sgn(c) < 0; }
inline BigRational coeff_abs(const Rationals&, const BigRational& c) { return abs(c); }
inline bool coeff_is_negative(const PrimeField&, FpElement) { return false; }
inline FpElement coeff_abs(const PrimeField&, FpElement c) { return c; }

}  // namespace detail

template <class Ring>
std::string to_string(const RingContext<Ring>& ctx, const Polynomial<Ring>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms) {
        bool negative = detail::coeff_is_negative(ctx.ring, t.coeff);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        auto c = detail::coeff_abs(ctx.ring, t.coeff);
        bool unit_coeff = ctx.ring.is_one(c);
        bool printed = false;
        if (!unit_coeff || t.mono.is_one()) {
            out += ctx.ring.to_string(c);
            printed = true;
        }
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            uint16_t e = t.mono.exps[i];
            if (!e) continue;
            if (printed) out += '*';
            out += ctx.names[i];
            if (e > 1) {
                out += '^';
                out += std::to_string(e);
            }
            printed = true;
        }
    }
    return out;
}

// --- parsing -----------------------------------------------------------------

namespace detail {

template <class Ring>
class PolyParser {
public:
    PolyParser(const RingContext<Ring>& ctx, std::string_view text, int line)
        : ctx_(ctx), text_(text), line_(line) {}

    Polynomial<Ring> run() {
        auto p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
    }
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial<Ring> parse_expr() {
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        auto acc = parse_term();
        if (negate) acc = negate_poly(ctx_, std::move(acc));
        for (;;) {
            if (eat('+'))
                acc = add(ctx_, acc, parse_term());
            else if (eat('-'))
                acc = sub(ctx_, acc, parse_term());
            else
                break;
        }
        return acc;
    }

    Polynomial<Ring> parse_term() {
        auto acc = parse_factor();
        while (eat('*')) acc = mul(ctx_, acc, parse_factor());
        return acc;
    }

    Polynomial<Ring> parse_factor() {
        auto base = parse_atom();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("exponent must be a nonnegative integer");
            uint32_t e = parse_small_uint();
            return pow_poly(ctx_, base, e);
        }
        return base;
    }

    Polynomial<Ring> parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a term");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto num = ctx_.ring.from_decimal(parse_digits());
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected denominator digits");
                auto den = ctx_.ring.from_decimal(parse_digits());
                if (ctx_.ring.is_zero(den)) fail("zero denominator");
                num = ctx_.ring.div(num, den);
            }
            return constant_poly(ctx_, num);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = parse_ident();
            for (int i = 0; i < ctx_.nvars(); ++i)
                if (ctx_.names[i] == name) return variable_poly(ctx_, i);
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view parse_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }
    uint32_t parse_small_uint() {
        auto d = parse_digits();
        if (d.size() > 5) fail("exponent too large");
        uint32_t v = 0;
        for (char ch : d) v = v * 10 + static_cast<uint32_t>(ch - '0');
        if (v > 0xffff) fail("exponent too large");
        return v;
    }
    std::string parse_ident() {
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    const RingContext<Ring>& ctx_;
    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse the textual polynomial syntax `3*x^2*y - 5/7*z + 1`. `line` only
/// seeds error positions when embedded in a file.
template <class Ring>
Polynomial<Ring> parse_polynomial(const RingContext<Ring>& ctx, std::string_view text,
                                  int line = 1) {
    return detail::PolyParser<Ring>(ctx, text, line).run();
}

}  // namespace symgb

#endif
