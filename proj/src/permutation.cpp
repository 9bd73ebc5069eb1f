#include "symgb/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace symgb {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n == 0) throw MathError("empty permutation");
    std::vector<bool> seen(n, false);
    for (int v : images) {
        if (v < 1 || v > n || seen[v - 1]) throw MathError("not a permutation of 1..n");
        seen[v - 1] = true;
    }
    return {std::move(images)};
}

CycleDecomposition decompose(const Permutation& sigma) {
    const int n = sigma.size();
    CycleDecomposition out;
    std::vector<bool> visited(n, false);
    for (int start = 1; start <= n; ++start) {
        if (visited[start - 1]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            visited[cur - 1] = true;
            cycle.push_back(cur);
            cur = sigma.map(cur);
        } while (cur != start);
        out.cycles.push_back(std::move(cycle));
    }
    // Cycles already start at their minimal element and are sorted by it,
    // because start scans upward over unvisited indices.
    for (const auto& c : out.cycles) out.cycle_type.push_back(static_cast<int>(c.size()));
    std::sort(out.cycle_type.begin(), out.cycle_type.end());
    return out;
}

int64_t perm_order(const Permutation& sigma) {
    int64_t k = 1;
    for (const auto& c : decompose(sigma).cycles) k = std::lcm(k, static_cast<int64_t>(c.size()));
    return k;
}

Permutation inverse(const Permutation& sigma) {
    std::vector<int> inv(sigma.size());
    for (int i = 1; i <= sigma.size(); ++i) inv[sigma.map(i) - 1] = i;
    return {std::move(inv)};
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw MathError("permutation size mismatch");
    std::vector<int> images(a.size());
    for (int i = 1; i <= a.size(); ++i) images[i - 1] = a.map(b.map(i));
    return {std::move(images)};
}

Permutation parse_permutation(std::string_view text, int n) {
    if (n < 1) throw MathError("ring needs at least one variable");
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(n, false);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    bool any_cycle = false;
    while (pos < text.size()) {
        if (text[pos] != '(') throw MathError("expected '(' in cycle notation");
        ++pos;
        std::vector<int> indices;
        bool saw_separator = false;
        std::vector<std::string> tokens;
        std::string cur;
        while (pos < text.size() && text[pos] != ')') {
            char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                cur += c;
            } else if (c == ' ' || c == ',' || c == '\t') {
                if (c == ',' || !cur.empty()) saw_separator = true;
                if (!cur.empty()) tokens.push_back(std::exchange(cur, {}));
            } else {
                throw MathError(std::string("unexpected character '") + c + "' in cycle notation");
            }
            ++pos;
        }
        if (pos >= text.size()) throw MathError("unterminated cycle");
        ++pos;  // ')'
        if (!cur.empty()) tokens.push_back(cur);
        if (tokens.empty()) throw MathError("empty cycle");
        if (tokens.size() == 1 && !saw_separator && tokens[0].size() > 1) {
            // Paper-style "(12)": per-digit only when unambiguous.
            if (n > 9)
                throw MathError("cycle '" + tokens[0] +
                                "' is ambiguous for n >= 10; separate indices with spaces or commas");
            for (char c : tokens[0]) indices.push_back(c - '0');
        } else {
            for (const auto& tok : tokens) indices.push_back(std::stoi(tok));
        }
        for (int v : indices) {
            if (v < 1 || v > n) throw MathError("cycle index " + std::to_string(v) + " out of range");
            if (used[v - 1]) throw MathError("index " + std::to_string(v) + " repeated across cycles");
            used[v - 1] = true;
        }
        for (std::size_t i = 0; i < indices.size(); ++i)
            images[indices[i] - 1] = indices[(i + 1) % indices.size()];
        any_cycle = true;
        skip_ws();
    }
    if (!any_cycle) throw MathError("empty permutation text");
    return Permutation::from_images(std::move(images));
}

std::string format_permutation(const Permutation& sigma) {
    std::string out;
    for (const auto& cycle : decompose(sigma).cycles) {
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    return out;
}

}  // namespace symgb
