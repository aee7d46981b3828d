#pragma once

// Reading's maps from permutations to noncrossing arc diagrams. A descent
// (resp. ascent) w_i w_{i+1} becomes an arc between the two values; a value r
// strictly between them lies on the left of the arc when it sits to the left
// of position i in the word, and on the right when it sits past i+1.

#include "arc.hpp"
#include "permutation.hpp"

#include <optional>
#include <stdexcept>

namespace brickyard {

namespace detail {
inline ArcDiagram reading_diagram(const Permutation& w, Color color) {
    ArcDiagram d;
    d.nodes = static_cast<int>(w.size());
    const auto& v = w.word();
    std::vector<std::size_t> pos(v.size() + 1);
    for (std::size_t i = 0; i < v.size(); ++i) pos[v[i]] = i;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        bool descent = v[i] > v[i + 1];
        if (descent != (color == Color::Green)) continue;
        int p = std::min(v[i], v[i + 1]);
        int q = std::max(v[i], v[i + 1]);
        std::vector<Side> sides;
        for (int r = p + 1; r < q; ++r) sides.push_back(pos[r] < i ? Side::Left : Side::Right);
        d.arcs.emplace_back(color, p, q, std::move(sides));
    }
    d.sort();
    return d;
}
} // namespace detail

inline ArcDiagram delta(const Permutation& w) { return detail::reading_diagram(w, Color::Green); }
inline ArcDiagram delta_bar(const Permutation& w) { return detail::reading_diagram(w, Color::Red); }

/// Brute-force inverse over all permutations; fine up to nine letters. The
/// color only matters for an empty diagram (identity for green, the longest
/// element for red).
inline Permutation delta_inverse(const ArcDiagram& d, std::optional<Color> color_hint = std::nullopt) {
    if (d.nodes < 1) throw std::invalid_argument("diagram needs at least one node");
    if (d.nodes > 9) throw std::invalid_argument("delta_inverse is limited to at most 9 nodes");
    if (auto v = diagram_violation(d)) throw std::invalid_argument("not a noncrossing diagram: " + *v);
    Color color = d.arcs.empty() ? color_hint.value_or(Color::Green) : d.arcs.front().color();
    if (color_hint && *color_hint != color) throw std::invalid_argument("diagram color does not match the requested map");
    ArcDiagram target = d;
    target.sort();
    std::vector<int> w(d.nodes);
    for (int i = 0; i < d.nodes; ++i) w[i] = i + 1;
    do {
        Permutation p(w);
        if (detail::reading_diagram(p, color).arcs == target.arcs) return p;
    } while (std::next_permutation(w.begin(), w.end()));
    throw std::logic_error("no permutation maps to the given diagram");
}

} // namespace brickyard
