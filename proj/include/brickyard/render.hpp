#pragma once

// Text renderings of (possibly two-colored) arc diagrams.

#include "arc.hpp"

#include <iomanip>
#include <sstream>
#include <string>

namespace brickyard {

/// Each node is one row, highest node on top. Each arc owns a column: '*' at
/// its endpoints, 'L' or 'R' where the node lies left or right of the arc,
/// '.' outside its support.
inline std::string render_ascii(const ArcDiagram& d) {
    std::ostringstream out;
    int width = static_cast<int>(std::to_string(d.nodes).size());
    out << std::string(width + 3, ' ');
    for (std::size_t k = 0; k < d.arcs.size(); ++k) {
        const auto& a = d.arcs[k];
        out << ' ' << (a.color() == Color::Green ? 'G' : 'R') << a.bottom() << '-' << a.top();
    }
    out << '\n';
    for (int v = d.nodes; v >= 1; --v) {
        out << std::setw(width) << v << " o ";
        for (const auto& a : d.arcs) {
            std::string label = std::string(1, a.color() == Color::Green ? 'G' : 'R') + std::to_string(a.bottom()) + "-" +
                                std::to_string(a.top());
            char mark = '.';
            if (v == a.bottom() || v == a.top()) mark = '*';
            else if (a.is_interior(v)) mark = side_char(a.side(v));
            std::string cell(label.size(), ' ');
            cell[cell.size() / 2] = mark;
            out << ' ' << cell;
        }
        out << '\n';
    }
    return out.str();
}

/// A standalone TikZ document. Nodes sit on a vertical line; an arc bends to
/// the right past nodes that lie on its left and to the left past the others.
inline std::string render_tikz(const ArcDiagram& d) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    out << "\\documentclass[tikz]{standalone}\n\\begin{document}\n\\begin{tikzpicture}[>=stealth]\n";
    for (int v = 1; v <= d.nodes; ++v)
        out << "  \\node[circle,fill,inner sep=1.5pt,label=left:{\\small " << v << "}] (n" << v << ") at (0," << v - 1
            << ") {};\n";
    for (const auto& a : d.arcs) {
        bool green = a.color() == Color::Green;
        double bend = 0.35 + 0.25 * (a.top() - a.bottom() - 1);
        out << "  \\draw[" << (green ? "green!60!black" : "red") << ",thick,->] plot[smooth] coordinates {";
        // green arcs run top to bottom, red arcs bottom to top
        auto x_at = [&](int v) {
            if (!a.is_interior(v)) return 0.0;
            return a.side(v) == Side::Left ? bend : -bend;
        };
        int step = green ? -1 : 1;
        int from = green ? a.top() : a.bottom();
        int to = green ? a.bottom() : a.top();
        for (int v = from;; v += step) {
            out << " (" << x_at(v) << "," << v - 1 << ")";
            if (v == to) break;
            double mid = (x_at(v) + x_at(v + step)) / 2;
            if (mid == 0.0) mid = green ? 0.3 : -0.3;
            out << " (" << mid << "," << v - 1 + step * 0.5 << ")";
        }
        out << " };\n";
    }
    out << "\\end{tikzpicture}\n\\end{document}\n";
    return out.str();
}

} // namespace brickyard
