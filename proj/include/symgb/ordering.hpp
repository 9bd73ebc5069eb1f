#ifndef SYMGB_ORDERING_HPP
#define SYMGB_ORDERING_HPP

#include <string>
#include <string_view>
#include <vector>

#include "symgb/monomial.hpp"

namespace symgb {

enum class OrderKind : uint8_t { lex, degrevlex };

struct OrderingSegment {
    OrderKind kind;
    int nvars;
    friend bool operator==(const OrderingSegment&, const OrderingSegment&) = default;
};

/// A monomial ordering: a single lex/degrevlex segment, or a block ordering
/// whose segments partition the variables and are compared left to right.
struct OrderingSpec {
    std::vector<OrderingSegment> segments;

    static OrderingSpec lex(int nvars) { return {{{OrderKind::lex, nvars}}}; }
    static OrderingSpec degrevlex(int nvars) { return {{{OrderKind::degrevlex, nvars}}}; }
    static OrderingSpec block(std::vector<OrderingSegment> segs);

    int nvars() const {
        int n = 0;
        for (const auto& s : segments) n += s.nvars;
        return n;
    }
    /// True when total degree is compared first, as Buchberger's callers in
    /// the symmetric algorithms require.
    bool is_degree_ordering() const {
        return segments.size() == 1 && segments[0].kind == OrderKind::degrevlex;
    }

    friend bool operator==(const OrderingSpec&, const OrderingSpec&) = default;
};

namespace detail {

// a, b restricted to [lo, lo+n); returns -1/0/+1.
inline int compare_segment(const Monomial& a, const Monomial& b, std::size_t lo, int n,
                           OrderKind kind) {
    if (kind == OrderKind::lex) {
        for (int i = 0; i < n; ++i) {
            uint16_t ea = a.exps[lo + i], eb = b.exps[lo + i];
            if (ea != eb) return ea > eb ? 1 : -1;
        }
        return 0;
    }
    // degrevlex: total degree first, then the last differing exponent with
    // inverted sense (smaller exponent wins).
    int da = 0, db = 0;
    for (int i = 0; i < n; ++i) {
        da += a.exps[lo + i];
        db += b.exps[lo + i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = n - 1; i >= 0; --i) {
        uint16_t ea = a.exps[lo + i], eb = b.exps[lo + i];
        if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
}

}  // namespace detail

/// Three-way compare under the ordering: -1 when a < b, 0, +1.
inline int compare(const Monomial& a, const Monomial& b, const OrderingSpec& spec) {
    check_same_arity(a, b);
    if (static_cast<int>(a.nvars()) != spec.nvars())
        throw MathError("ordering arity does not match monomial length");
    if (spec.segments.size() == 1)
        return detail::compare_segment(a, b, 0, spec.segments[0].nvars, spec.segments[0].kind);
    std::size_t lo = 0;
    for (const auto& seg : spec.segments) {
        int c = detail::compare_segment(a, b, lo, seg.nvars, seg.kind);
        if (c != 0) return c;
        lo += seg.nvars;
    }
    return 0;
}

inline bool less(const Monomial& a, const Monomial& b, const OrderingSpec& spec) {
    return compare(a, b, spec) < 0;
}
inline bool greater(const Monomial& a, const Monomial& b, const OrderingSpec& spec) {
    return compare(a, b, spec) > 0;
}

/// Text forms "dp", "lp", "block:dp8,lp1".
std::string format_ordering(const OrderingSpec& spec);
OrderingSpec parse_ordering(std::string_view text, int nvars);

}  // namespace symgb

#endif
