#pragma once

// Arcs on a column of nodes 1..N (bottom to top). Each interior node of an
// arc records which side of the arc the node lies on: Left means the arc
// passes to the right of the node.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace brickyard {

enum class Color { Green, Red };
enum class Side { Left, Right };

inline const char* color_name(Color c) { return c == Color::Green ? "green" : "red"; }
inline char side_char(Side s) { return s == Side::Left ? 'L' : 'R'; }
inline Side flip(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

class Arc {
public:
    Arc() = default;
    Arc(Color color, int bottom, int top, std::vector<Side> sides)
        : color_(color), bottom_(bottom), top_(top), sides_(std::move(sides)) {
        if (bottom < 1 || top <= bottom) throw std::invalid_argument("arc needs 1 <= bottom < top");
        if (static_cast<int>(sides_.size()) != top - bottom - 1)
            throw std::invalid_argument("arc needs one side bit per interior node");
    }

    /// Parses side bits written as a string of 'L'/'R' characters.
    static Arc from_string(Color color, int bottom, int top, const std::string& bits) {
        std::vector<Side> s;
        for (char ch : bits) {
            if (ch == 'L' || ch == 'l') s.push_back(Side::Left);
            else if (ch == 'R' || ch == 'r') s.push_back(Side::Right);
            else throw std::invalid_argument("side bits must be L or R");
        }
        return Arc(color, bottom, top, std::move(s));
    }

    Color color() const { return color_; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const std::vector<Side>& sides() const { return sides_; }

    bool is_interior(int node) const { return node > bottom_ && node < top_; }
    bool contains(int node) const { return node >= bottom_ && node <= top_; }

    Side side(int node) const {
        if (!is_interior(node)) throw std::out_of_range("node is not interior to the arc");
        return sides_[node - bottom_ - 1];
    }
    std::optional<Side> side_at(int node) const {
        if (!is_interior(node)) return std::nullopt;
        return sides_[node - bottom_ - 1];
    }

    /// Green arcs travel downward, red arcs upward.
    int src() const { return color_ == Color::Green ? top_ : bottom_; }
    int tar() const { return color_ == Color::Green ? bottom_ : top_; }

    Arc recolored(Color c) const { return Arc(c, bottom_, top_, sides_); }

    std::string to_string() const {
        std::string s = std::string(color_ == Color::Green ? "G" : "R") + "(" + std::to_string(bottom_) + "," +
                        std::to_string(top_);
        if (!sides_.empty()) {
            s += ":";
            for (auto b : sides_) s += side_char(b);
        }
        return s + ")";
    }

    auto operator<=>(const Arc&) const = default;

private:
    Color color_ = Color::Green;
    int bottom_ = 1;
    int top_ = 2;
    std::vector<Side> sides_;
};

struct ArcDiagram {
    int nodes = 0;
    std::vector<Arc> arcs;

    void sort() { std::sort(arcs.begin(), arcs.end()); }
    bool operator==(const ArcDiagram& o) const {
        auto a = arcs, b = o.arcs;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return nodes == o.nodes && a == b;
    }
};

namespace detail {
// Horizontal position of an arc relative to a node it spans: -1 passes on the
// left, +1 passes on the right, 0 ends there.
inline int offset(const Arc& a, int node) {
    auto s = a.side_at(node);
    if (!s) return 0;
    return *s == Side::Left ? 1 : -1;
}
} // namespace detail

/// True when the two arcs can be drawn without meeting in their interiors.
inline bool noncrossing(const Arc& a, const Arc& b) {
    int lo = std::max(a.bottom(), b.bottom());
    int hi = std::min(a.top(), b.top());
    bool a_left = false, b_left = false;
    for (int x = lo; x <= hi; ++x) {
        int pa = detail::offset(a, x), pb = detail::offset(b, x);
        if (pa < pb) a_left = true;
        if (pb < pa) b_left = true;
    }
    return !(a_left && b_left);
}

enum class SubarcRelation { NotSubarc, Subarc, PredecessorClosed, SuccessorClosed, Both };

inline const char* relation_name(SubarcRelation r) {
    switch (r) {
    case SubarcRelation::NotSubarc: return "not-subarc";
    case SubarcRelation::Subarc: return "subarc";
    case SubarcRelation::PredecessorClosed: return "predecessor-closed";
    case SubarcRelation::SuccessorClosed: return "successor-closed";
    case SubarcRelation::Both: return "both";
    }
    return "?";
}

/// Closure tests for the node interval [c, d] inside a; c == d is allowed and
/// describes a single node.
inline bool predecessor_closed_span(const Arc& a, int c, int d) {
    auto sc = a.side_at(c), sd = a.side_at(d);
    return (!sc || *sc == Side::Right) && (!sd || *sd == Side::Left);
}
inline bool successor_closed_span(const Arc& a, int c, int d) {
    auto sc = a.side_at(c), sd = a.side_at(d);
    return (!sc || *sc == Side::Left) && (!sd || *sd == Side::Right);
}

/// Whether a passes on the same side as the given bits at every node strictly
/// between c and d (the bits are indexed from c+1).
inline bool agrees_between(const Arc& a, int c, int d, const std::vector<Side>& bits) {
    for (int x = c + 1; x < d; ++x)
        if (a.side(x) != bits[x - c - 1]) return false;
    return true;
}

inline bool is_subarc(const Arc& g, const Arc& a) {
    if (g.bottom() < a.bottom() || g.top() > a.top()) return false;
    return agrees_between(a, g.bottom(), g.top(), g.sides());
}

/// Classifies g against a; color is ignored.
inline SubarcRelation subarc_relation(const Arc& g, const Arc& a) {
    if (!is_subarc(g, a)) return SubarcRelation::NotSubarc;
    bool pred = predecessor_closed_span(a, g.bottom(), g.top());
    bool succ = successor_closed_span(a, g.bottom(), g.top());
    if (pred && succ) return SubarcRelation::Both;
    if (pred) return SubarcRelation::PredecessorClosed;
    if (succ) return SubarcRelation::SuccessorClosed;
    return SubarcRelation::Subarc;
}

inline bool is_predecessor_closed(const Arc& g, const Arc& a) {
    auto r = subarc_relation(g, a);
    return r == SubarcRelation::PredecessorClosed || r == SubarcRelation::Both;
}
inline bool is_successor_closed(const Arc& g, const Arc& a) {
    auto r = subarc_relation(g, a);
    return r == SubarcRelation::SuccessorClosed || r == SubarcRelation::Both;
}

/// Common subarcs of a and b (color taken from a), in lexicographic order of endpoints.
inline std::vector<Arc> common_subarcs(const Arc& a, const Arc& b) {
    std::vector<Arc> out;
    int lo = std::max(a.bottom(), b.bottom());
    int hi = std::min(a.top(), b.top());
    for (int c = lo; c < hi; ++c)
        for (int d = c + 1; d <= hi; ++d) {
            bool same = true;
            std::vector<Side> bits;
            for (int x = c + 1; x < d && same; ++x) {
                if (a.side(x) != b.side(x)) same = false;
                else bits.push_back(a.side(x));
            }
            if (!same) break; // longer spans from c disagree too
            out.emplace_back(a.color(), c, d, std::move(bits));
        }
    return out;
}

/// When a and b cross, a common subarc that is predecessor-closed in one of
/// them and successor-closed in the other.
inline std::optional<Arc> crossing_witness(const Arc& a, const Arc& b) {
    if (noncrossing(a, b)) return std::nullopt;
    for (const auto& g : common_subarcs(a, b)) {
        if ((is_predecessor_closed(g, a) && is_successor_closed(g, b)) ||
            (is_predecessor_closed(g, b) && is_successor_closed(g, a)))
            return g;
    }
    throw std::logic_error("crossing arcs without a closed common subarc: " + a.to_string() + " " + b.to_string());
}

/// Whether b is left of a. Arcs sharing fewer than two nodes are never
/// related; crossing arcs are rejected.
inline bool is_left_of(const Arc& b, const Arc& a) {
    if (!noncrossing(a, b)) throw std::invalid_argument("left-of is undefined for crossing arcs");
    int lo = std::max(a.bottom(), b.bottom());
    int hi = std::min(a.top(), b.top());
    if (hi - lo < 1) return false;
    for (int i = lo; i <= hi; ++i) {
        if (b.is_interior(i) && a.is_interior(i) && b.side(i) == Side::Left && a.side(i) != Side::Left) return false;
    }
    for (int e : {b.bottom(), b.top()})
        if (a.is_interior(e) && a.side(e) != Side::Left) return false;
    for (int e : {a.bottom(), a.top()})
        if (b.is_interior(e) && b.side(e) != Side::Right) return false;
    return true;
}

/// Empty when d is a noncrossing diagram of one color, otherwise a description
/// of the first violated condition.
inline std::optional<std::string> diagram_violation(const ArcDiagram& d) {
    for (const auto& a : d.arcs)
        if (a.top() > d.nodes) return "arc " + a.to_string() + " leaves the node set";
    for (std::size_t i = 0; i < d.arcs.size(); ++i)
        for (std::size_t j = i + 1; j < d.arcs.size(); ++j) {
            const auto& a = d.arcs[i];
            const auto& b = d.arcs[j];
            if (a.color() != b.color()) return std::string("diagram mixes colors");
            if (a == b) return "repeated arc " + a.to_string();
            if (a.bottom() == b.bottom()) return "arcs " + a.to_string() + " and " + b.to_string() + " share a bottom endpoint";
            if (a.top() == b.top()) return "arcs " + a.to_string() + " and " + b.to_string() + " share a top endpoint";
            if (!noncrossing(a, b)) return "arcs " + a.to_string() + " and " + b.to_string() + " cross";
        }
    return std::nullopt;
}

/// Every arc on the given number of nodes, ordered by (bottom, top, sides).
inline std::vector<Arc> all_arcs(int nodes, Color color) {
    std::vector<Arc> out;
    for (int p = 1; p <= nodes; ++p)
        for (int q = p + 1; q <= nodes; ++q) {
            int k = q - p - 1;
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                std::vector<Side> s(k);
                for (int i = 0; i < k; ++i) s[i] = (mask >> (k - 1 - i)) & 1u ? Side::Right : Side::Left;
                out.emplace_back(color, p, q, std::move(s));
            }
        }
    return out;
}

} // namespace brickyard
