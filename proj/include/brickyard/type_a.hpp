#pragma once

// Type A specifics: SMCs from permutations, the full-rank completion, and the
// permutation oracle for completability.

#include "reading.hpp"
#include "semibrick.hpp"

#include <bitset>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace brickyard {

inline std::vector<int> ids_of_diagram(const BrickUniverse& U, const ArcDiagram& d) {
    std::vector<int> ids;
    for (const auto& a : d.arcs) ids.push_back(U.id_of(sigma(a, U.algebra().n)));
    std::sort(ids.begin(), ids.end());
    return ids;
}

inline SemibrickPair smc_from_permutation(const BrickUniverse& U, const Permutation& w) {
    if (!U.is_ra()) throw std::invalid_argument("permutations only describe RA_n universes");
    if (w.rank() != U.algebra().n) throw std::invalid_argument("permutation size does not match the universe");
    return SemibrickPair(ids_of_diagram(U, delta(w)), ids_of_diagram(U, delta_bar(w)));
}

inline ArcDiagram diagram_of(const BrickUniverse& U, const std::vector<int>& ids, Color color) {
    ArcDiagram d;
    d.nodes = U.algebra().n + 1;
    for (int id : ids) d.arcs.push_back(sigma_inverse(*U.string_brick(id), color));
    d.sort();
    return d;
}

/// Green arcs of D and red arcs of U in one picture.
inline ArcDiagram two_colored_diagram(const BrickUniverse& U, const SemibrickPair& X) {
    ArcDiagram d = diagram_of(U, X.D, Color::Green);
    auto r = diagram_of(U, X.U, Color::Red);
    d.arcs.insert(d.arcs.end(), r.arcs.begin(), r.arcs.end());
    d.sort();
    return d;
}

class CompletionError : public std::runtime_error {
public:
    enum class Kind { NotFullRank, Degree, Cycle, Disconnected, Mismatch };
    CompletionError(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    Kind kind() const { return kind_; }
    static const char* kind_name(Kind k) {
        switch (k) {
        case Kind::NotFullRank: return "not-full-rank";
        case Kind::Degree: return "degree";
        case Kind::Cycle: return "cycle";
        case Kind::Disconnected: return "disconnected";
        case Kind::Mismatch: return "mismatch";
        }
        return "?";
    }

private:
    Kind kind_;
};

/// Orders the nodes along the directed arcs (green top to bottom, red bottom
/// to top) and reads off the permutation.
inline Permutation complete_full_rank(const BrickUniverse& U, const SemibrickPair& X) {
    using K = CompletionError::Kind;
    int n = U.algebra().n;
    if (static_cast<int>(X.size()) != n)
        throw CompletionError(K::NotFullRank, "pair has " + std::to_string(X.size()) + " bricks, full rank is " +
                                                  std::to_string(n));
    auto d = two_colored_diagram(U, X);
    std::vector<int> next(n + 2, 0), indeg(n + 2, 0);
    for (const auto& a : d.arcs) {
        int s = a.src(), t = a.tar();
        if (next[s] || indeg[t])
            throw CompletionError(K::Degree, "node " + std::to_string(next[s] ? s : t) + " meets two arcs in the same direction");
        next[s] = t;
        ++indeg[t];
    }
    int start = 0;
    for (int v = 1; v <= n + 1; ++v)
        if (!indeg[v]) {
            if (start) throw CompletionError(K::Disconnected, "arcs do not connect all nodes");
            start = v;
        }
    if (!start) throw CompletionError(K::Cycle, "arcs form a directed cycle");
    std::vector<int> word;
    std::vector<char> seen(n + 2, 0);
    for (int v = start; v; v = next[v]) {
        if (seen[v]) throw CompletionError(K::Cycle, "arcs form a directed cycle");
        seen[v] = 1;
        word.push_back(v);
    }
    if (static_cast<int>(word.size()) != n + 1) {
        // n arcs with in- and out-degree at most one: whatever the path misses
        // carries as many arcs as nodes, so it closes up into a cycle
        for (int v = 1; v <= n + 1; ++v)
            if (!seen[v] && next[v]) throw CompletionError(K::Cycle, "arcs off the main path form a directed cycle");
        throw CompletionError(K::Disconnected, "arcs do not connect all nodes");
    }
    Permutation w(word);
    if (smc_from_permutation(U, w) != X)
        throw CompletionError(K::Mismatch, "the permutation " + w.to_string() + " does not reproduce the pair");
    return w;
}

inline bool is_semibrick(const BrickUniverse& U, const std::vector<int>& ids) {
    for (int a : ids)
        for (int b : ids)
            if (a != b && U.hom_dim(a, b)) return false;
    return true;
}

/// The unique D' with D' ⊔ U[1] an SMC.
inline std::vector<int> completion_of_U(const BrickUniverse& U, const std::vector<int>& ups) {
    if (!is_semibrick(U, ups)) throw std::invalid_argument("U is not a semibrick");
    auto w = delta_inverse(diagram_of(U, ups, Color::Red), Color::Red);
    return ids_of_diagram(U, delta(w));
}

/// The unique U' with D ⊔ U'[1] an SMC.
inline std::vector<int> completion_of_D(const BrickUniverse& U, const std::vector<int>& downs) {
    if (!is_semibrick(U, downs)) throw std::invalid_argument("D is not a semibrick");
    auto w = delta_inverse(diagram_of(U, downs, Color::Green), Color::Green);
    return ids_of_diagram(U, delta_bar(w));
}

/// Completability by brute force over permutations: X lies in some SMC iff
/// D ⊆ σδ(w) and U ⊆ σδ̄(w) for a permutation w.
class PermutationOracle {
public:
    using Mask = std::bitset<128>;

    explicit PermutationOracle(const BrickUniverse& U) {
        if (!U.is_ra()) throw std::invalid_argument("the permutation oracle needs an RA_n universe");
        if (U.size() > 128) throw std::invalid_argument("the permutation oracle supports at most 128 bricks");
        for (const auto& w : all_permutations(U.algebra().n + 1)) {
            auto X = smc_from_permutation(U, w);
            Mask d, u;
            for (int id : X.D) d.set(id);
            for (int id : X.U) u.set(id);
            perms_.push_back(w);
            masks_.push_back({d, u});
        }
    }

    std::optional<Permutation> witness(const SemibrickPair& X) const {
        Mask d, u;
        for (int id : X.D) d.set(id);
        for (int id : X.U) u.set(id);
        for (std::size_t k = 0; k < masks_.size(); ++k)
            if ((d & ~masks_[k].first).none() && (u & ~masks_[k].second).none()) return perms_[k];
        return std::nullopt;
    }
    bool completable(const SemibrickPair& X) const { return witness(X).has_value(); }
    std::size_t size() const { return perms_.size(); }

private:
    std::vector<Permutation> perms_;
    std::vector<std::pair<Mask, Mask>> masks_;
};

/// Bricks that can join X on either side without breaking the
/// semibrick-pair conditions; empty for a maximal pair.
inline std::vector<std::pair<int, bool>> extensions_of(const BrickUniverse& U, const PairTables& tab,
                                                       const SemibrickPair& X) {
    std::vector<std::pair<int, bool>> out;
    for (int b = 0; b < static_cast<int>(U.size()); ++b) {
        if (X.contains_D(b) || X.contains_U(b)) continue;
        if (tab.can_join_D(b, X)) out.push_back({b, true});
        if (tab.can_join_U(b, X)) out.push_back({b, false});
    }
    return out;
}

} // namespace brickyard
