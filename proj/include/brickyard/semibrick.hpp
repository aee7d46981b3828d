#pragma once

// Semibrick pairs D ⊔ U[1] over a brick universe, mutation, and the
// completability search.

#include "universe.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace brickyard {

struct SemibrickPair {
    std::vector<int> D; // shift 0, sorted ids
    std::vector<int> U; // shift 1, sorted ids

    SemibrickPair() = default;
    SemibrickPair(std::vector<int> d, std::vector<int> u) : D(std::move(d)), U(std::move(u)) { normalize(); }

    void normalize() {
        std::sort(D.begin(), D.end());
        std::sort(U.begin(), U.end());
    }
    std::size_t size() const { return D.size() + U.size(); }
    bool contains_D(int id) const { return std::binary_search(D.begin(), D.end(), id); }
    bool contains_U(int id) const { return std::binary_search(U.begin(), U.end(), id); }
    auto operator<=>(const SemibrickPair&) const = default;
};

struct Violation {
    enum class Kind { Duplicate, HomInD, HomInU, HomDU, ExtDU, TooLarge } kind;
    int first = -1;
    int second = -1;
    std::string describe(const BrickUniverse& U) const {
        auto name = [&](int id) { return id < 0 ? std::string("-") : U.label(id); };
        switch (kind) {
        case Kind::Duplicate: return "brick " + name(first) + " is listed twice";
        case Kind::HomInD: return "Hom(" + name(first) + ", " + name(second) + ") != 0 inside D";
        case Kind::HomInU: return "Hom(" + name(first) + ", " + name(second) + ") != 0 inside U";
        case Kind::HomDU: return "Hom(" + name(first) + ", " + name(second) + ") != 0 from D to U";
        case Kind::ExtDU: return "Ext(" + name(first) + ", " + name(second) + ") != 0 from D to U";
        case Kind::TooLarge: return "more bricks than the rank of the algebra";
        }
        return "?";
    }
};

inline std::optional<Violation> find_violation(const BrickUniverse& U, const SemibrickPair& X) {
    using K = Violation::Kind;
    std::vector<int> all = X.D;
    all.insert(all.end(), X.U.begin(), X.U.end());
    for (std::size_t i = 0; i < X.D.size(); ++i)
        for (std::size_t j = i + 1; j < X.D.size(); ++j)
            if (X.D[i] == X.D[j]) return Violation{K::Duplicate, X.D[i], X.D[j]};
    for (std::size_t i = 0; i < X.U.size(); ++i)
        for (std::size_t j = i + 1; j < X.U.size(); ++j)
            if (X.U[i] == X.U[j]) return Violation{K::Duplicate, X.U[i], X.U[j]};
    for (int a : X.D)
        for (int b : X.D)
            if (a != b && U.hom_dim(a, b)) return Violation{K::HomInD, a, b};
    for (int a : X.U)
        for (int b : X.U)
            if (a != b && U.hom_dim(a, b)) return Violation{K::HomInU, a, b};
    for (int s : X.D)
        for (int t : X.U) {
            if (U.hom_dim(s, t)) return Violation{K::HomDU, s, t};
            if (U.ext_dim(s, t)) return Violation{K::ExtDU, s, t};
        }
    if (static_cast<int>(X.size()) > U.rank()) return Violation{K::TooLarge, -1, -1};
    return std::nullopt;
}

inline bool is_semibrick_pair(const BrickUniverse& U, const SemibrickPair& X) { return !find_violation(U, X); }

struct Compatibility {
    bool compatible = true;
    std::vector<std::pair<int, MapKind>> per_brick; // approximated brick and its map kind
    int obstruction = -1;                            // first brick with a Neither map
};

inline Compatibility singly_left_compatible(BrickUniverse& U, const SemibrickPair& X, int S) {
    if (!X.contains_D(S)) throw std::invalid_argument("left mutation needs a brick of D");
    Compatibility c;
    for (int T : X.U) {
        auto ap = U.left_approximation(T, S);
        c.per_brick.push_back({T, ap.kind});
        if (ap.kind == MapKind::Neither && c.compatible) {
            c.compatible = false;
            c.obstruction = T;
        }
    }
    return c;
}

inline Compatibility singly_right_compatible(BrickUniverse& U, const SemibrickPair& X, int S) {
    if (!X.contains_U(S)) throw std::invalid_argument("right mutation needs a brick of U");
    Compatibility c;
    for (int T : X.D) {
        auto ap = U.right_approximation(S, T);
        c.per_brick.push_back({T, ap.kind});
        if (ap.kind == MapKind::Neither && c.compatible) {
            c.compatible = false;
            c.obstruction = T;
        }
    }
    return c;
}

inline SemibrickPair mutate_left(BrickUniverse& U, const SemibrickPair& X, int S) {
    auto c = singly_left_compatible(U, X, S);
    if (!c.compatible)
        throw std::invalid_argument("not singly left mutation compatible at " + U.label(S) + ": the map from " +
                                    U.label(c.obstruction) + " is neither mono nor epi");
    SemibrickPair Y;
    Y.U.push_back(S);
    for (int T : X.D)
        if (T != S) Y.D.push_back(U.extend_below(T, S));
    for (int T : X.U) {
        auto ap = U.left_approximation(T, S);
        (ap.result_in_D ? Y.D : Y.U).push_back(ap.result);
    }
    Y.normalize();
    return Y;
}

inline SemibrickPair mutate_right(BrickUniverse& U, const SemibrickPair& X, int S) {
    auto c = singly_right_compatible(U, X, S);
    if (!c.compatible)
        throw std::invalid_argument("not singly right mutation compatible at " + U.label(S) + ": the map to " +
                                    U.label(c.obstruction) + " is neither mono nor epi");
    SemibrickPair Y;
    Y.D.push_back(S);
    for (int T : X.U)
        if (T != S) Y.U.push_back(U.extend_above(T, S));
    for (int T : X.D) {
        auto ap = U.right_approximation(S, T);
        (ap.result_in_D ? Y.D : Y.U).push_back(ap.result);
    }
    Y.normalize();
    return Y;
}

struct MutationStep {
    int at = -1;          // brick of D mutated at
    SemibrickPair result; // state after the step
};

struct CompletabilityReport {
    bool completable = false;
    std::vector<MutationStep> trace; // successful left-mutation path
    // When not completable: a dead-end state and a Neither pair inside it.
    std::optional<SemibrickPair> dead_end;
    int obstruction_S = -1;
    int obstruction_T = -1;
    std::size_t states_visited = 0;
    bool depth_limited = false;
    std::optional<SemibrickPair> terminal; // the state U'[1] that ends the search
};

/// Depth-first search over left mutations, smallest key first.
inline CompletabilityReport is_completable(BrickUniverse& U, const SemibrickPair& X) {
    if (auto v = find_violation(U, X)) throw std::invalid_argument("not a semibrick pair: " + v->describe(U));
    CompletabilityReport rep;
    std::set<SemibrickPair> visited;
    std::vector<MutationStep> path;
    int bound = U.chain_bound();

    std::function<bool(const SemibrickPair&, int)> dfs = [&](const SemibrickPair& Y, int depth) -> bool {
        ++rep.states_visited;
        if (Y.D.empty()) {
            rep.terminal = Y;
            return true;
        }
        if (depth >= bound) {
            rep.depth_limited = true;
            return false;
        }
        std::vector<int> order = Y.D;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return U.key(a) < U.key(b); });
        bool any = false;
        for (int S : order) {
            auto c = singly_left_compatible(U, Y, S);
            if (!c.compatible) continue;
            any = true;
            auto Z = mutate_left(U, Y, S);
            if (!visited.insert(Z).second) continue;
            path.push_back({S, Z});
            if (dfs(Z, depth + 1)) return true;
            path.pop_back();
        }
        if (!any && !rep.dead_end) {
            rep.dead_end = Y;
            rep.obstruction_S = order.front();
            rep.obstruction_T = singly_left_compatible(U, Y, order.front()).obstruction;
        }
        return false;
    };
    visited.insert(X);
    rep.completable = dfs(X, 0);
    if (rep.completable) {
        rep.trace = path;
        rep.dead_end.reset();
        rep.obstruction_S = rep.obstruction_T = -1;
    }
    if (!rep.completable && rep.depth_limited) throw std::logic_error("completability search exceeded the chain bound");
    return rep;
}

enum class Trichotomy { NoMap, Mono, Epi, None };

inline const char* trichotomy_name(Trichotomy t) {
    switch (t) {
    case Trichotomy::NoMap: return "no-map";
    case Trichotomy::Mono: return "mono";
    case Trichotomy::Epi: return "epi";
    case Trichotomy::None: return "none";
    }
    return "?";
}

/// Which alternative of the K-stone trichotomy holds for S ⊔ T[1].
inline Trichotomy kstone_trichotomy(BrickUniverse& U, int S, int T) {
    auto d = U.hom_dim(T, S);
    if (d == 0) return Trichotomy::NoMap;
    if (d > 1) return Trichotomy::None; // a mono or epi forces a one-dimensional Hom space
    auto ap = U.left_approximation(T, S);
    if (ap.kind == MapKind::Mono) return Trichotomy::Mono;
    if (ap.kind == MapKind::Epi) return Trichotomy::Epi;
    return Trichotomy::None;
}

struct PairwiseReport {
    bool pairwise = true;
    int bad_S = -1;
    int bad_T = -1;
};

/// Every mixed pair {S} ⊔ {T}[1] completable. The trichotomy answers first and
/// the mutation search confirms it; a disagreement is a hard error.
inline PairwiseReport is_pairwise_completable(BrickUniverse& U, const SemibrickPair& X) {
    PairwiseReport r;
    for (int S : X.D)
        for (int T : X.U) {
            bool fast = kstone_trichotomy(U, S, T) != Trichotomy::None;
            bool slow = is_completable(U, SemibrickPair({S}, {T})).completable;
            if (fast != slow)
                throw std::logic_error("trichotomy and mutation search disagree on " + U.label(S) + " ⊔ " + U.label(T) +
                                       "[1]");
            if (!fast && r.pairwise) {
                r.pairwise = false;
                r.bad_S = S;
                r.bad_T = T;
            }
        }
    return r;
}

/// Simples of the smallest wide subcategory containing X, read off a
/// successful left-mutation path; nothing when X is not mutation compatible.
inline std::optional<std::vector<int>> wide_hull_simples(BrickUniverse& U, const SemibrickPair& X) {
    auto r = is_completable(U, X);
    if (!r.completable) return std::nullopt;
    return r.terminal->U;
}

/// Pairwise orthogonality tables for fast enumeration over a fixed universe.
struct PairTables {
    std::size_t n = 0;
    std::vector<std::vector<char>> hom; // hom[a][b] != 0
    std::vector<std::vector<char>> ext;
    explicit PairTables(const BrickUniverse& U) : n(U.size()) {
        hom.assign(n, std::vector<char>(n, 0));
        ext.assign(n, std::vector<char>(n, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                hom[a][b] = U.hom_dim(static_cast<int>(a), static_cast<int>(b)) != 0;
                ext[a][b] = U.ext_dim(static_cast<int>(a), static_cast<int>(b)) != 0;
            }
    }
    bool can_join_D(int x, const SemibrickPair& X) const {
        for (int d : X.D)
            if (hom[x][d] || hom[d][x]) return false;
        for (int u : X.U)
            if (hom[x][u] || ext[x][u]) return false;
        return true;
    }
    bool can_join_U(int x, const SemibrickPair& X) const {
        for (int u : X.U)
            if (hom[x][u] || hom[u][x]) return false;
        for (int d : X.D)
            if (hom[d][x] || ext[d][x]) return false;
        return true;
    }
};

/// Calls visit on every semibrick pair whose bricks lie in the (already
/// populated) universe, with size between min_size and max_size.
inline void for_each_semibrick_pair(const BrickUniverse& U, const PairTables& tab, std::size_t min_size,
                                    std::size_t max_size, const std::function<void(const SemibrickPair&)>& visit) {
    SemibrickPair X;
    std::function<void(int)> rec = [&](int next) {
        if (X.size() >= min_size) visit(X);
        if (X.size() == max_size) return;
        for (int b = next; b < static_cast<int>(tab.n); ++b) {
            if (tab.can_join_D(b, X)) {
                X.D.push_back(b);
                rec(b + 1);
                X.D.pop_back();
            }
            if (tab.can_join_U(b, X)) {
                X.U.push_back(b);
                rec(b + 1);
                X.U.pop_back();
            }
        }
    };
    (void)U;
    rec(0);
}

} // namespace brickyard
