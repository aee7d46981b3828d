#pragma once

// JSON encodings for arcs, diagrams, permutations, bricks, representations and
// semibrick pairs.

#include "semibrick.hpp"
#include "type_a.hpp"

#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace brickyard::io {

using json = nlohmann::json;

/// Bad input as opposed to a failing property.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::uint32_t characteristic_from_env(std::uint32_t fallback = 101) {
    const char* v = std::getenv("BRICKYARD_CHAR");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    unsigned long p = std::strtoul(v, &end, 10);
    if (*end || p < 2 || p > 65521) throw InputError("BRICKYARD_CHAR must be a prime below 65536");
    return static_cast<std::uint32_t>(p);
}

inline json to_json(const Arc& a) {
    json sides = json::array();
    for (auto s : a.sides()) sides.push_back(std::string(1, side_char(s)));
    return {{"color", color_name(a.color())}, {"bottom", a.bottom()}, {"top", a.top()}, {"sides", sides}};
}

inline Color color_from_json(const json& j) {
    auto c = j.get<std::string>();
    if (c == "green") return Color::Green;
    if (c == "red") return Color::Red;
    throw InputError("arc color must be \"green\" or \"red\"");
}

inline Arc arc_from_json(const json& j) {
    try {
        std::vector<Side> sides;
        for (const auto& s : j.at("sides")) {
            auto t = s.get<std::string>();
            if (t == "L") sides.push_back(Side::Left);
            else if (t == "R") sides.push_back(Side::Right);
            else throw InputError("arc sides must be \"L\" or \"R\"");
        }
        return Arc(color_from_json(j.at("color")), j.at("bottom").get<int>(), j.at("top").get<int>(), std::move(sides));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed arc: ") + e.what());
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline json to_json(const ArcDiagram& d) {
    json arcs = json::array();
    for (const auto& a : d.arcs) arcs.push_back(to_json(a));
    return {{"nodes", d.nodes}, {"arcs", arcs}};
}

/// Reads a diagram without validating it; callers decide which checks apply.
inline ArcDiagram diagram_from_json(const json& j) {
    try {
        ArcDiagram d;
        d.nodes = j.at("nodes").get<int>();
        if (d.nodes < 1) throw InputError("diagram needs at least one node");
        for (const auto& a : j.at("arcs")) d.arcs.push_back(arc_from_json(a));
        for (const auto& a : d.arcs)
            if (a.top() > d.nodes) throw InputError("arc " + a.to_string() + " leaves the node set");
        d.sort();
        return d;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed diagram: ") + e.what());
    }
}

inline json to_json(const Permutation& w) { return w.word(); }

inline Permutation permutation_from_json(const json& j) {
    try {
        return Permutation(j.get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed permutation: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline json to_json(const StringBrick& b) {
    json acts = json::array();
    for (auto a : b.actions) acts.push_back(action_name(a));
    return {{"n", b.n}, {"support", {b.first, b.last}}, {"actions", acts}};
}

inline StringBrick string_brick_from_json(const json& j) {
    try {
        auto sup = j.at("support").get<std::vector<int>>();
        if (sup.size() != 2) throw InputError("support must be [p, q]");
        std::vector<Action> acts;
        for (const auto& a : j.at("actions")) {
            auto t = a.get<std::string>();
            if (t == "down") acts.push_back(Action::Down);
            else if (t == "up") acts.push_back(Action::Up);
            else throw InputError("actions must be \"down\" or \"up\"");
        }
        return StringBrick(j.at("n").get<int>(), sup[0], sup[1], std::move(acts));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed string brick: ") + e.what());
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline json to_json(const Algebra& A, const Representation& M) {
    json dims = json::object();
    for (int v = 0; v < A.vertex_count(); ++v) dims[A.vertex_names[v]] = M.dims[v];
    json maps = json::object();
    for (std::size_t a = 0; a < A.arrows.size(); ++a) {
        json rows = json::array();
        const auto& m = M.maps[a];
        for (std::size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
            rows.push_back(row);
        }
        maps[A.arrows[a].name] = rows;
    }
    json j = {{"algebra", A.kind_name()}, {"dims", dims}, {"maps", maps}, {"char", A.field.characteristic()}};
    if (A.kind == AlgebraKind::RA) j["n"] = A.n;
    return j;
}

/// Missing vertices count as zero, missing arrows as zero maps.
inline Representation representation_from_json(const Algebra& A, const json& j) {
    try {
        if (j.contains("algebra") && j.at("algebra").get<std::string>() != A.kind_name())
            throw InputError("representation belongs to algebra " + j.at("algebra").get<std::string>() + ", expected " +
                             A.kind_name());
        if (j.contains("n") && A.kind == AlgebraKind::RA && j.at("n").get<int>() != A.n)
            throw InputError("representation has n = " + std::to_string(j.at("n").get<int>()) + ", expected " +
                             std::to_string(A.n));
        std::vector<std::size_t> dims(A.vertex_count(), 0);
        for (const auto& [name, value] : j.at("dims").items()) {
            auto d = value.get<long long>();
            if (d < 0) throw InputError("negative dimension at vertex " + name);
            dims[A.vertex_index(name)] = static_cast<std::size_t>(d);
        }
        auto R = blank_rep(A, dims);
        if (j.contains("maps"))
            for (const auto& [name, rows] : j.at("maps").items()) {
                int a = A.arrow_index(name);
                auto& m = R.maps[a];
                if (rows.size() != m.rows()) throw InputError("arrow " + name + " has the wrong number of rows");
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    if (rows[r].size() != m.cols()) throw InputError("arrow " + name + " has the wrong number of columns");
                    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = A.field.reduce(rows[r][c].get<long long>());
                }
            }
        if (auto v = rep_violation(A, R)) throw InputError("not a module: " + *v);
        return R;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed representation: ") + e.what());
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

/// A brick as it appears in pair files: string form over RA_n, matrices over D4.
inline json brick_to_json(const BrickUniverse& U, int id) {
    if (auto s = U.string_brick(id); s && U.is_ra()) return to_json(*s);
    return to_json(U.algebra(), U.rep(id));
}

inline int brick_from_json(BrickUniverse& U, const json& j) {
    try {
        if (j.contains("support")) {
            if (!U.is_ra()) throw InputError("string bricks only exist over RA_n");
            auto b = string_brick_from_json(j);
            if (b.n != U.algebra().n) throw InputError("brick " + b.to_string() + " has the wrong n");
            return U.id_of(b);
        }
        return U.intern(representation_from_json(U.algebra(), j));
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline json to_json(const BrickUniverse& U, const SemibrickPair& X) {
    json D = json::array(), Up = json::array();
    for (int id : X.D) D.push_back(brick_to_json(U, id));
    for (int id : X.U) Up.push_back(brick_to_json(U, id));
    json j = {{"universe", U.is_ra() ? "RA" : "PiD4"}, {"D", D}, {"U", Up}, {"char", U.algebra().field.characteristic()}};
    if (U.is_ra()) j["n"] = U.algebra().n;
    return j;
}

/// Short human names, for reports only.
inline json labels(const BrickUniverse& U, const std::vector<int>& ids) {
    json a = json::array();
    for (int id : ids) a.push_back(U.label(id));
    return a;
}

inline json pair_labels(const BrickUniverse& U, const SemibrickPair& X) {
    return {{"D", labels(U, X.D)}, {"U", labels(U, X.U)}};
}

struct LoadedPair {
    BrickUniverse universe;
    SemibrickPair pair;
    std::vector<int> D_order; // ids in file order
    std::vector<int> U_order;
};

/// Builds the universe named in the file and interns its bricks. The field
/// characteristic comes from "char" when present, else from BRICKYARD_CHAR.
inline LoadedPair pair_from_json(const json& j, Backend backend = Backend::Arc) {
    try {
        auto kind = j.at("universe").get<std::string>();
        std::uint32_t p = j.contains("char") ? j.at("char").get<std::uint32_t>() : characteristic_from_env();
        std::optional<BrickUniverse> U;
        try {
            if (kind == "RA") {
                int n = j.at("n").get<int>();
                if (n < 1 || n > 8) throw InputError("n must lie in 1..8");
                U.emplace(BrickUniverse::ra(n, p, backend));
            } else if (kind == "PiD4") {
                U.emplace(BrickUniverse::pi_d4(p));
            } else {
                throw InputError("universe must be \"RA\" or \"PiD4\"");
            }
        } catch (const InputError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        SemibrickPair X;
        for (const auto& b : j.at("D")) X.D.push_back(brick_from_json(*U, b));
        for (const auto& b : j.at("U")) X.U.push_back(brick_from_json(*U, b));
        auto d_order = X.D, u_order = X.U;
        X.normalize();
        return {std::move(*U), std::move(X), std::move(d_order), std::move(u_order)};
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed semibrick pair: ") + e.what());
    }
}

inline json trace_to_json(const BrickUniverse& U, const std::vector<MutationStep>& trace) {
    json t = json::array();
    for (const auto& s : trace) t.push_back({{"mutate_at", U.label(s.at)}, {"result", pair_labels(U, s.result)}});
    return t;
}

inline json compatibility_to_json(const BrickUniverse& U, const Compatibility& c) {
    json per = json::array();
    for (const auto& [id, kind] : c.per_brick) per.push_back({{"brick", U.label(id)}, {"map", map_kind_name(kind)}});
    json j = {{"compatible", c.compatible}, {"maps", per}};
    if (c.obstruction >= 0) j["obstruction"] = U.label(c.obstruction);
    return j;
}

} // namespace brickyard::io
