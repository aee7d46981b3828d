#pragma once

// Bricks of RA_n as string modules: an interval support [first, last] and, for
// each edge i -> i+1 inside it, which of a_i (Down) or a_i^* (Up) acts.

#include "arc.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace brickyard {

enum class Action { Down, Up };

inline const char* action_name(Action a) { return a == Action::Down ? "down" : "up"; }

struct StringBrick {
    int n = 1;
    int first = 1;
    int last = 1;
    std::vector<Action> actions; // actions[k] belongs to the edge first+k -> first+k+1

    StringBrick() = default;
    StringBrick(int n_, int first_, int last_, std::vector<Action> actions_)
        : n(n_), first(first_), last(last_), actions(std::move(actions_)) {
        if (first < 1 || last < first || last > n) throw std::invalid_argument("string brick support out of range");
        if (static_cast<int>(actions.size()) != last - first)
            throw std::invalid_argument("string brick needs one action per support edge");
    }

    static StringBrick simple(int n, int vertex) { return StringBrick(n, vertex, vertex, {}); }

    /// Parses compact action strings such as "DU" (Down then Up).
    static StringBrick from_string(int n, int first, int last, const std::string& acts) {
        std::vector<Action> a;
        for (char ch : acts) {
            if (ch == 'D' || ch == 'd') a.push_back(Action::Down);
            else if (ch == 'U' || ch == 'u') a.push_back(Action::Up);
            else throw std::invalid_argument("actions must be D or U");
        }
        return StringBrick(n, first, last, std::move(a));
    }

    Action action(int edge) const { return actions.at(edge - first); }
    bool supports(int vertex) const { return vertex >= first && vertex <= last; }

    std::string to_string() const {
        std::string s = "[" + std::to_string(first) + "," + std::to_string(last);
        if (!actions.empty()) {
            s += ":";
            for (auto a : actions) s += a == Action::Down ? 'D' : 'U';
        }
        return s + "]";
    }

    auto operator<=>(const StringBrick&) const = default;
};

inline StringBrick sigma(const Arc& a, int n) {
    if (a.top() > n + 1) throw std::invalid_argument("arc does not fit on n+1 nodes");
    std::vector<Action> acts;
    for (int i = a.bottom() + 1; i < a.top(); ++i) acts.push_back(a.side(i) == Side::Left ? Action::Down : Action::Up);
    return StringBrick(n, a.bottom(), a.top() - 1, std::move(acts));
}

inline Arc sigma_inverse(const StringBrick& b, Color color) {
    std::vector<Side> sides;
    for (auto act : b.actions) sides.push_back(act == Action::Down ? Side::Left : Side::Right);
    return Arc(color, b.first, b.last + 1, std::move(sides));
}

inline std::vector<StringBrick> enumerate_bricks(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    std::vector<StringBrick> out;
    for (const auto& a : all_arcs(n + 1, Color::Green)) out.push_back(sigma(a, n));
    return out;
}

/// Common subarcs that are predecessor-closed in arc(S) and successor-closed
/// in arc(T): one for each basis element of Hom(S, T).
inline std::vector<Arc> hom_arc_basis(const StringBrick& S, const StringBrick& T) {
    Arc a = sigma_inverse(S, Color::Green);
    Arc b = sigma_inverse(T, Color::Green);
    std::vector<Arc> out;
    for (const auto& g : common_subarcs(a, b))
        if (is_predecessor_closed(g, a) && is_successor_closed(g, b)) out.push_back(g);
    return out;
}

/// A two-sided arc map witnessing a nonzero class in Ext^1(S, T): a common
/// span [c, d] (possibly a single node) that is predecessor-closed in arc(T)
/// and successor-closed in arc(S), together with the spliced middle terms.
struct TwoSidedArcMap {
    int c = 0;
    int d = 0;
    std::vector<Side> sides;
    std::optional<Arc> e1; // from the bottom of arc(S) to the top of arc(T)
    std::optional<Arc> e2; // from the bottom of arc(T) to the top of arc(S)
};

inline std::vector<TwoSidedArcMap> two_sided_arc_maps(const StringBrick& S, const StringBrick& T) {
    Arc a = sigma_inverse(S, Color::Green);
    Arc b = sigma_inverse(T, Color::Green);
    std::vector<TwoSidedArcMap> out;
    int lo = std::max(a.bottom(), b.bottom());
    int hi = std::min(a.top(), b.top());
    for (int c = lo; c <= hi; ++c) {
        std::vector<Side> bits;
        for (int d = c; d <= hi; ++d) {
            if (d > c + 1) {
                if (a.side(d - 1) != b.side(d - 1)) break;
                bits.push_back(a.side(d - 1));
            }
            if (!predecessor_closed_span(b, c, d) || !successor_closed_span(a, c, d)) continue;
            bool lower_empty = c == a.bottom() && c == b.bottom();
            bool upper_empty = d == a.top() && d == b.top();
            if (lower_empty || upper_empty) continue;

            TwoSidedArcMap m{c, d, bits, std::nullopt, std::nullopt};
            auto splice = [&](const Arc& low, const Arc& high, Side fallback) -> std::optional<Arc> {
                int p = low.bottom(), q = high.top();
                if (p >= q) return std::nullopt;
                std::vector<Side> s;
                for (int x = p + 1; x < q; ++x) {
                    if (x < c) s.push_back(low.side(x));
                    else if (x == c) s.push_back(low.side_at(x).value_or(fallback));
                    else if (x < d) s.push_back(bits[x - c - 1]);
                    else if (x == d) s.push_back(high.side_at(x).value_or(fallback));
                    else s.push_back(high.side(x));
                }
                return Arc(Color::Green, p, q, std::move(s));
            };
            m.e1 = splice(a, b, Side::Left);
            m.e2 = splice(b, a, Side::Right);
            out.push_back(std::move(m));
        }
    }
    return out;
}

struct ExtMiddleTerms {
    std::optional<StringBrick> e1;
    std::optional<StringBrick> e2;
};

/// Middle terms of an extension T -> E -> S detected by arcs, or nothing when
/// no two-sided arc map exists.
inline std::optional<ExtMiddleTerms> ext_nonzero_by_arcs(const StringBrick& S, const StringBrick& T) {
    auto maps = two_sided_arc_maps(S, T);
    if (maps.empty()) return std::nullopt;
    ExtMiddleTerms m;
    if (maps.front().e1) m.e1 = sigma(*maps.front().e1, S.n);
    if (maps.front().e2) m.e2 = sigma(*maps.front().e2, S.n);
    return m;
}

/// The stacked picture of a string: Down steps go one row lower, Up steps one
/// row higher; rows are listed top to bottom and joined by '/'.
inline std::string stacked_label(const StringBrick& b) {
    std::map<int, std::vector<int>, std::greater<int>> rows;
    int h = 0;
    rows[h].push_back(b.first);
    for (int v = b.first + 1; v <= b.last; ++v) {
        h += b.action(v - 1) == Action::Down ? -1 : 1;
        rows[h].push_back(v);
    }
    std::string out;
    bool wide = b.n > 9;
    for (const auto& [height, verts] : rows) {
        if (!out.empty()) out += '/';
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (wide && i) out += ',';
            out += std::to_string(verts[i]);
        }
    }
    return out;
}

} // namespace brickyard
