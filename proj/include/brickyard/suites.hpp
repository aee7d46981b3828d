#pragma once

// Exhaustive verification suites. Each suite runs at one n and reports
// pass/fail with the first counterexample it meets.

#include "d4.hpp"
#include "io.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace brickyard {

struct SuiteReport {
    std::string name;
    int n = 0;
    bool pass = true;
    std::size_t checked = 0;
    io::json witness;        // null, or the first counterexample / the reproduced object
    io::json mutation_trace; // null or an array
    io::json details = io::json::object();
    double seconds = 0;

    void fail(io::json w) {
        if (pass) witness = std::move(w);
        pass = false;
    }
    // timing stays out so that reports are reproducible byte for byte
    io::json to_json() const {
        return {{"suite", name}, {"n", n},           {"pass", pass},       {"checked", checked},
                {"witness", witness}, {"mutation_trace", mutation_trace}, {"details", details}};
    }
};

struct SuiteOptions {
    int n = -1; // -1: the suite's default
    std::uint64_t seed = 1;
    std::uint32_t p = 101;
    std::size_t samples = 10000;
};

/// Uniformly shuffled greedy construction of a semibrick pair of size at most
/// max_size; the target size is drawn first.
inline SemibrickPair random_semibrick_pair(const PairTables& tab, std::mt19937_64& rng, std::size_t max_size) {
    std::vector<int> ids(tab.n);
    for (std::size_t i = 0; i < tab.n; ++i) ids[i] = static_cast<int>(i);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::size_t target = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
    SemibrickPair X;
    for (int b : ids) {
        if (X.size() == target) break;
        bool d_first = rng() & 1u;
        for (int attempt = 0; attempt < 2; ++attempt) {
            bool to_d = (attempt == 0) == d_first;
            if (to_d && tab.can_join_D(b, X)) {
                X.D.push_back(b);
                break;
            }
            if (!to_d && tab.can_join_U(b, X)) {
                X.U.push_back(b);
                break;
            }
        }
    }
    X.normalize();
    return X;
}

namespace suites {

using io::json;

inline int factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

inline void reading_census(SuiteReport& r, const SuiteOptions&) {
    int n = r.n;
    std::set<std::vector<Arc>> green, red;
    for (const auto& w : all_permutations(n + 1)) {
        ++r.checked;
        auto st = perm_stats(w);
        auto g = delta(w), b = delta_bar(w);
        if (auto v = diagram_violation(g)) r.fail({{"permutation", w.to_string()}, {"problem", "delta: " + *v}});
        if (auto v = diagram_violation(b)) r.fail({{"permutation", w.to_string()}, {"problem", "delta_bar: " + *v}});
        if (g.arcs.size() != st.descents.size() || b.arcs.size() != st.ascents.size())
            r.fail({{"permutation", w.to_string()}, {"problem", "arc count differs from descent/ascent count"}});
        if (delta_inverse(g, Color::Green) != w || delta_inverse(b, Color::Red) != w)
            r.fail({{"permutation", w.to_string()}, {"problem", "round trip through delta_inverse failed"}});
        green.insert(g.arcs);
        red.insert(b.arcs);
    }
    std::size_t expect = static_cast<std::size_t>(factorial(n + 1));
    r.details = {{"permutations", expect}, {"distinct_green", green.size()}, {"distinct_red", red.size()}};
    if (green.size() != expect || red.size() != expect) r.fail({{"problem", "delta or delta_bar is not injective"}});
}

inline void brick_census(SuiteReport& r, const SuiteOptions&) {
    int n = r.n;
    auto bricks = enumerate_bricks(n);
    std::set<StringBrick> distinct(bricks.begin(), bricks.end());
    std::size_t expect = (std::size_t{1} << (n + 1)) - n - 2;
    r.checked = bricks.size();
    r.details = {{"bricks", bricks.size()}, {"expected", expect}};
    if (bricks.size() != expect || distinct.size() != expect) r.fail({{"problem", "brick count differs from 2^(n+1)-n-2"}});
    for (const auto& b : bricks)
        for (auto c : {Color::Green, Color::Red}) {
            auto a = sigma_inverse(b, c);
            if (sigma(a, n) != b || a.color() != c) r.fail({{"brick", b.to_string()}, {"problem", "sigma round trip"}});
        }
    for (auto c : {Color::Green, Color::Red})
        for (const auto& a : all_arcs(n + 1, c))
            if (sigma_inverse(sigma(a, n), c) != a) r.fail({{"arc", a.to_string()}, {"problem", "sigma_inverse round trip"}});
}

inline void oracle_hom(SuiteReport& r, const SuiteOptions& o) {
    auto A = make_ra(r.n, o.p);
    auto bricks = enumerate_bricks(r.n);
    std::vector<Representation> reps;
    for (const auto& b : bricks) reps.push_back(rep_of_string(A, b));
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < bricks.size(); ++i)
        for (std::size_t j = 0; j < bricks.size(); ++j) {
            ++r.checked;
            auto arcs = hom_arc_basis(bricks[i], bricks[j]).size();
            auto oracle = hom_dim(A, reps[i], reps[j]);
            nonzero += oracle != 0;
            if (arcs != oracle)
                r.fail({{"S", stacked_label(bricks[i])}, {"T", stacked_label(bricks[j])}, {"arc_count", arcs}, {"oracle", oracle}});
        }
    r.details = {{"ordered_pairs", r.checked}, {"nonzero_hom", nonzero}};
}

inline void oracle_ext(SuiteReport& r, const SuiteOptions& o) {
    auto A = make_ra(r.n, o.p);
    auto bricks = enumerate_bricks(r.n);
    std::vector<Representation> reps;
    for (const auto& b : bricks) reps.push_back(rep_of_string(A, b));
    std::size_t nonzero = 0, count_agree = 0, middle_checked = 0, max_dim = 0;
    for (std::size_t i = 0; i < bricks.size(); ++i)
        for (std::size_t j = 0; j < bricks.size(); ++j) {
            ++r.checked;
            const auto& S = bricks[i];
            const auto& T = bricks[j];
            auto ext = ext_space(A, reps[i], reps[j]);
            max_dim = std::max(max_dim, ext.dim);
            auto maps = two_sided_arc_maps(S, T);
            auto arcs = ext_nonzero_by_arcs(S, T);
            nonzero += ext.dim != 0;
            count_agree += maps.size() == ext.dim;
            if (arcs.has_value() != (ext.dim != 0)) {
                r.fail({{"S", stacked_label(S)}, {"T", stacked_label(T)}, {"arcs_nonzero", arcs.has_value()}, {"oracle", ext.dim}});
                continue;
            }
            if (ext.dim != 1) continue;
            // T -> E -> S from the oracle against E1 ⊕ E2 read off the arcs
            auto E = extension_from_cocycle(A, ext.basis.front(), reps[i], reps[j]);
            Representation mid = zero_rep(A);
            if (arcs->e1) mid = direct_sum(A, mid, rep_of_string(A, *arcs->e1));
            if (arcs->e2) mid = direct_sum(A, mid, rep_of_string(A, *arcs->e2));
            ++middle_checked;
            if (!is_iso(A, E, mid))
                r.fail({{"S", stacked_label(S)}, {"T", stacked_label(T)}, {"problem", "middle term differs from E1 + E2"}});
        }
    r.details = {{"ordered_pairs", r.checked},
                 {"nonzero_ext", nonzero},
                 {"max_ext_dim", max_dim},
                 {"two_sided_map_count_equals_dim", count_agree},
                 {"middle_terms_checked", middle_checked}};
}

inline void kstone(SuiteReport& r, const SuiteOptions& o) {
    auto A = make_ra(r.n, o.p);
    for (const auto& b : enumerate_bricks(r.n)) {
        ++r.checked;
        auto M = rep_of_string(A, b);
        auto e = hom_dim(A, M, M), x = ext_dim(A, M, M);
        if (e != 1 || x != 0) r.fail({{"brick", stacked_label(b)}, {"end", e}, {"self_ext", x}});
    }
    auto D = make_pi_d4(o.p);
    std::vector<std::pair<std::string, Representation>> named = {{"M = 1/3", d4::M(D)},
                                                                 {"N = 1/2", d4::N(D)},
                                                                 {"N' = 2/1/4", d4::N_prime(D)},
                                                                 {"E = 1/23/1/4", d4::E(D)},
                                                                 {"1/23", d4::one_over_23(D)}};
    json d4 = json::array();
    for (const auto& [name, M] : named) {
        ++r.checked;
        auto e = hom_dim(D, M, M), x = ext_dim(D, M, M);
        d4.push_back({{"module", name}, {"end", e}, {"self_ext", x}});
        if (e != 1 || x != 0) r.fail({{"module", name}, {"end", e}, {"self_ext", x}});
    }
    r.details = {{"ra_bricks", r.checked - named.size()}, {"d4_modules", d4}};
}

/// The alternatives of the trichotomy read straight off a Hom basis.
inline bool trichotomy_holds(const Algebra& A, const Representation& T, const Representation& S) {
    auto basis = hom_space(A, T, S);
    if (basis.empty()) return true;
    if (basis.size() > 1) return false;
    auto k = classify_morphism(A, basis.front());
    return k == MapKind::Mono || k == MapKind::Epi;
}

inline void trichotomy(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::ra(r.n, o.p);
    PermutationOracle oracle(U);
    std::size_t compatible = 0, mixed = 0;
    for (int S = 0; S < static_cast<int>(U.size()); ++S)
        for (int T = 0; T < static_cast<int>(U.size()); ++T) {
            if (S == T) continue;
            SemibrickPair X({S}, {T});
            if (!is_semibrick_pair(U, X)) continue;
            ++mixed;
            ++r.checked;
            bool search = is_completable(U, X).completable;
            bool tri = trichotomy_holds(U.algebra(), U.rep(T), U.rep(S));
            bool perm = oracle.completable(X);
            compatible += search;
            if (search != tri || search != perm)
                r.fail({{"S", U.label(S)}, {"T", U.label(T)}, {"search", search}, {"trichotomy", tri}, {"permutations", perm}});
        }
    r.details = {{"mixed_rank2_pairs", mixed}, {"completable", compatible}};
}

inline void a3_pairwise(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::ra(r.n, o.p);
    PairTables tab(U);
    std::size_t pairwise = 0;
    for_each_semibrick_pair(U, tab, 0, static_cast<std::size_t>(r.n), [&](const SemibrickPair& X) {
        ++r.checked;
        if (!is_pairwise_completable(U, X).pairwise) return;
        ++pairwise;
        if (!is_completable(U, X).completable) r.fail(io::pair_labels(U, X));
    });
    r.details = {{"semibrick_pairs", r.checked}, {"pairwise_completable", pairwise}};
}

inline int brick_by_label(const BrickUniverse& U, const std::string& label) {
    for (int id = 0; id < static_cast<int>(U.size()); ++id)
        if (U.label(id) == label) return id;
    throw std::logic_error("no brick labelled " + label);
}

inline void a4_counterexample(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::ra(4, o.p);
    int s234 = brick_by_label(U, "2/3/4"), s4 = brick_by_label(U, "4"), s321 = brick_by_label(U, "3/2/1");
    int s23 = brick_by_label(U, "2/3");
    SemibrickPair X({s234}, {s4, s321});
    SemibrickPair expected({s23}, {s234, s321});
    auto check = [&](bool ok, const std::string& what) {
        ++r.checked;
        r.details[what] = ok;
        if (!ok) r.fail({{"failed", what}});
    };
    check(is_semibrick_pair(U, X), "X is a semibrick pair");
    auto c = singly_left_compatible(U, X, s234);
    check(c.compatible, "X is singly left compatible at 2/3/4");
    check(is_pairwise_completable(U, X).pairwise, "X is pairwise completable");
    auto comp = is_completable(U, X);
    check(!comp.completable, "X is not completable");
    check(!PermutationOracle(U).completable(X), "no permutation contains X");
    SemibrickPair Xp = c.compatible ? mutate_left(U, X, s234) : SemibrickPair{};
    check(Xp == expected, "left mutation at 2/3/4 gives X'");
    auto c2 = singly_left_compatible(U, Xp, s23);
    check(!c2.compatible && c2.obstruction == s321, "X' fails at 2/3 through 3/2/1");
    auto kind = U.left_approximation(s321, s23).kind;
    check(kind == MapKind::Neither, "the map 3/2/1 -> 2/3 is neither mono nor epi");
    check(!is_pairwise_completable(U, Xp).pairwise, "X' is not pairwise completable");
    if (r.pass) {
        r.witness = {{"X", io::to_json(U, X)}, {"X_labels", io::pair_labels(U, X)}, {"X_prime", io::pair_labels(U, Xp)},
                     {"neither_map", {{"from", "3/2/1"}, {"to", "2/3"}}}};
        r.mutation_trace = json::array({{{"mutate_at", "2/3/4"}, {"result", io::pair_labels(U, Xp)}}});
    }
}

inline void d4_counterexample(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::pi_d4(o.p);
    const auto& A = U.algebra();
    int M = U.intern(d4::M(A), "1/3"), N = U.intern(d4::N(A), "1/2"), Np = U.intern(d4::N_prime(A), "2/1/4");
    int E = U.intern(d4::E(A), "1/23/1/4");
    auto check = [&](bool ok, const std::string& what) {
        ++r.checked;
        r.details[what] = ok;
        if (!ok) r.fail({{"failed", what}});
    };
    check(U.hom_dim(N, Np) == 0, "Hom(N,N') = 0");
    check(U.hom_dim(N, M) == 0, "Hom(N,M) = 0");
    check(U.hom_dim(Np, M) == 0, "Hom(N',M) = 0");
    check(U.hom_dim(M, Np) == 0, "Hom(M,N') = 0");
    check(U.ext_dim(N, M) == 0, "Ext(N,M) = 0");
    check(U.ext_dim(N, Np) == 0, "Ext(N,N') = 0");
    SemibrickPair Xp({N}, {Np, M});
    check(is_semibrick_pair(U, Xp), "X' is a semibrick pair");
    auto c = singly_left_compatible(U, Xp, N);
    check(!c.compatible && c.obstruction == Np, "X' fails single left compatibility at N through N'");
    check(singly_right_compatible(U, Xp, M).compatible, "X' is singly right compatible at M");
    SemibrickPair X = mutate_right(U, Xp, M);
    check(X == SemibrickPair({M, N}, {E}), "right mutation of X' at M gives {M,N} + {E}[1]");
    check(is_semibrick_pair(U, X), "X is a semibrick pair");
    check(singly_left_compatible(U, X, M).compatible && singly_left_compatible(U, X, N).compatible,
          "X is singly left compatible");
    auto comp = is_completable(U, X);
    check(!comp.completable, "X is not completable");
    // N' sits inside E with quotient M
    check(U.ext_dim(M, Np) == 1 && is_iso(A, universal_extension(A, U.rep(M), U.rep(Np)), U.rep(E)),
          "E is the extension of M by N'");
    r.details["bricks interned"] = U.size();
    if (r.pass) {
        r.witness = {{"X", io::to_json(U, X)}, {"X_labels", io::pair_labels(U, X)}, {"X_prime", io::pair_labels(U, Xp)},
                     {"dead_end", comp.dead_end ? io::pair_labels(U, *comp.dead_end) : json(nullptr)}};
        r.mutation_trace = json::array({{{"right_mutate_at", "1/3"}, {"result", io::pair_labels(U, X)}}});
    }
}

inline void fullrank_smc(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::ra(r.n, o.p);
    PairTables tab(U);
    std::set<SemibrickPair> smcs;
    for (const auto& w : all_permutations(r.n + 1)) smcs.insert(smc_from_permutation(U, w));
    std::size_t pairwise = 0;
    auto n = static_cast<std::size_t>(r.n);
    for_each_semibrick_pair(U, tab, n, n, [&](const SemibrickPair& X) {
        ++r.checked;
        if (!is_pairwise_completable(U, X).pairwise) return;
        ++pairwise;
        if (!smcs.count(X)) {
            r.fail({{"pair", io::pair_labels(U, X)}, {"problem", "pairwise completable full-rank pair is not an SMC"}});
            return;
        }
        try {
            auto w = complete_full_rank(U, X);
            if (smc_from_permutation(U, w) != X) r.fail({{"pair", io::pair_labels(U, X)}, {"problem", "wrong permutation"}});
        } catch (const CompletionError& e) {
            r.fail({{"pair", io::pair_labels(U, X)}, {"problem", e.what()}});
        }
    });
    r.details = {{"full_rank_pairs", r.checked}, {"pairwise_completable", pairwise}};
}

inline void single_brick(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::ra(r.n, o.p);
    PairTables tab(U);
    std::set<SemibrickPair> smcs;
    for (const auto& w : all_permutations(r.n + 1)) smcs.insert(smc_from_permutation(U, w));
    auto n = static_cast<std::size_t>(r.n);
    for_each_semibrick_pair(U, tab, n, n, [&](const SemibrickPair& X) {
        if (X.D.size() != 1 && X.U.size() != 1) return;
        ++r.checked;
        if (!smcs.count(X)) r.fail(io::pair_labels(U, X));
    });
    r.details = {{"pairs_with_a_single_brick_side", r.checked}};
}

inline bool is_quotient(const BrickUniverse& U, int S, int R) {
    return is_predecessor_closed(sigma_inverse(*U.string_brick(R), Color::Green), sigma_inverse(*U.string_brick(S), Color::Green));
}
inline bool is_submodule(const BrickUniverse& U, int T, int V) {
    return is_successor_closed(sigma_inverse(*U.string_brick(V), Color::Green), sigma_inverse(*U.string_brick(T), Color::Green));
}

inline void exists_surjection(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::ra(r.n, o.p);
    PairTables tab(U);
    for_each_semibrick_pair(U, tab, 0, static_cast<std::size_t>(r.n), [&](const SemibrickPair& X) {
        ++r.checked;
        auto Dp = completion_of_U(U, X.U);
        for (int S : X.D)
            if (std::none_of(Dp.begin(), Dp.end(), [&](int R) { return is_quotient(U, S, R); }))
                r.fail({{"pair", io::pair_labels(U, X)}, {"brick", U.label(S)}, {"problem", "no quotient in D'"}});
        auto Up = completion_of_D(U, X.D);
        for (int T : X.U)
            if (std::none_of(Up.begin(), Up.end(), [&](int V) { return is_submodule(U, T, V); }))
                r.fail({{"pair", io::pair_labels(U, X)}, {"brick", U.label(T)}, {"problem", "no submodule in U'"}});
    });
}

inline void no_common_quotients(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::ra(r.n, o.p);
    PairTables tab(U);
    std::size_t hyp_d = 0, hyp_u = 0;
    auto n = static_cast<std::size_t>(r.n);
    for_each_semibrick_pair(U, tab, n, n, [&](const SemibrickPair& X) {
        ++r.checked;
        auto Dp = completion_of_U(U, X.U);
        bool disjoint = true;
        std::set<int> seen;
        for (int S : X.D)
            for (int R : Dp)
                if (is_quotient(U, S, R) && !seen.insert(R).second) disjoint = false;
        if (disjoint) {
            ++hyp_d;
            if (Dp != X.D) r.fail({{"pair", io::pair_labels(U, X)}, {"problem", "D != D' although quotients are disjoint"}});
        }
        auto Up = completion_of_D(U, X.D);
        disjoint = true;
        seen.clear();
        for (int T : X.U)
            for (int V : Up)
                if (is_submodule(U, T, V) && !seen.insert(V).second) disjoint = false;
        if (disjoint) {
            ++hyp_u;
            if (Up != X.U) r.fail({{"pair", io::pair_labels(U, X)}, {"problem", "U != U' although submodules are disjoint"}});
        }
    });
    r.details = {{"full_rank_pairs", r.checked}, {"quotient_hypothesis", hyp_d}, {"submodule_hypothesis", hyp_u}};
}

inline void mutation_oracle(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::ra(r.n, o.p);
    PairTables tab(U);
    PermutationOracle oracle(U);
    std::size_t exhaustive = 0, completable = 0, longest = 0;
    auto compare = [&](const SemibrickPair& X) {
        ++r.checked;
        auto rep = is_completable(U, X);
        longest = std::max(longest, rep.trace.size());
        completable += rep.completable;
        if (rep.completable != oracle.completable(X))
            r.fail({{"pair", io::pair_labels(U, X)}, {"search", rep.completable}, {"permutations", !rep.completable}});
    };
    for_each_semibrick_pair(U, tab, 0, static_cast<std::size_t>(r.n), [&](const SemibrickPair& X) {
        ++exhaustive;
        compare(X);
    });
    std::size_t sampled = 0;
    if (r.n >= 4) {
        std::mt19937_64 rng(o.seed);
        for (std::size_t k = 0; k < o.samples; ++k, ++sampled) compare(random_semibrick_pair(tab, rng, r.n));
    }
    r.details = {{"exhaustive_pairs", exhaustive}, {"sampled_pairs", sampled}, {"seed", o.seed},
                 {"completable", completable}, {"longest_witness", longest}};
}

inline void smc_census(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::ra(r.n, o.p);
    PairTables tab(U);
    std::set<SemibrickPair> seen;
    for (const auto& w : all_permutations(r.n + 1)) {
        ++r.checked;
        auto X = smc_from_permutation(U, w);
        seen.insert(X);
        if (static_cast<int>(X.size()) != r.n) r.fail({{"permutation", w.to_string()}, {"problem", "size differs from n"}});
        if (auto v = find_violation(U, X)) r.fail({{"permutation", w.to_string()}, {"problem", v->describe(U)}});
        auto ext = extensions_of(U, tab, X);
        if (!ext.empty())
            r.fail({{"permutation", w.to_string()}, {"problem", "not maximal"}, {"extra", U.label(ext.front().first)}});
    }
    std::size_t expect = static_cast<std::size_t>(factorial(r.n + 1));
    r.details = {{"smcs", seen.size()}, {"expected", expect}};
    if (seen.size() != expect) r.fail({{"problem", "smc_from_permutation is not injective"}});
}

inline void size3_reduction(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::ra(r.n, o.p);
    PairTables tab(U);
    bool all = true, size3 = true;
    json first, first3;
    for_each_semibrick_pair(U, tab, 0, static_cast<std::size_t>(r.n), [&](const SemibrickPair& X) {
        ++r.checked;
        if (!is_pairwise_completable(U, X).pairwise || is_completable(U, X).completable) return;
        if (all) first = io::pair_labels(U, X);
        all = false;
        if (X.size() == 3) {
            if (size3) first3 = io::pair_labels(U, X);
            size3 = false;
        }
    });
    r.details = {{"pairwise_property", all}, {"size3_pairs_completable", size3}};
    if (!all) r.details["counterexample"] = first;
    if (!size3) r.details["size3_counterexample"] = first3;
    if (all != size3) r.fail({{"problem", "the property and its size-3 restriction disagree"}});
}

inline void mutation_duality(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::ra(r.n, o.p);
    PairTables tab(U);
    std::size_t left = 0, right = 0;
    for_each_semibrick_pair(U, tab, 0, static_cast<std::size_t>(r.n), [&](const SemibrickPair& X) {
        for (int S : X.D) {
            if (!singly_left_compatible(U, X, S).compatible) continue;
            ++left;
            ++r.checked;
            auto Y = mutate_left(U, X, S);
            if (auto v = find_violation(U, Y)) r.fail({{"pair", io::pair_labels(U, X)}, {"left_at", U.label(S)}, {"problem", v->describe(U)}});
            else if (mutate_right(U, Y, S) != X) r.fail({{"pair", io::pair_labels(U, X)}, {"left_at", U.label(S)}, {"problem", "right mutation does not undo"}});
        }
        for (int T : X.U) {
            if (!singly_right_compatible(U, X, T).compatible) continue;
            ++right;
            ++r.checked;
            auto Y = mutate_right(U, X, T);
            if (auto v = find_violation(U, Y)) r.fail({{"pair", io::pair_labels(U, X)}, {"right_at", U.label(T)}, {"problem", v->describe(U)}});
            else if (mutate_left(U, Y, T) != X) r.fail({{"pair", io::pair_labels(U, X)}, {"right_at", U.label(T)}, {"problem", "left mutation does not undo"}});
        }
    });
    r.details = {{"left_mutations", left}, {"right_mutations", right}};
}

inline void wide_hull(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::ra(r.n, o.p);
    PairTables tab(U);
    PermutationOracle oracle(U);
    for_each_semibrick_pair(U, tab, 1, std::min<std::size_t>(3, r.n), [&](const SemibrickPair& X) {
        ++r.checked;
        auto hull = wide_hull_simples(U, X);
        if (hull.has_value() != oracle.completable(X)) r.fail({{"pair", io::pair_labels(U, X)}, {"problem", "hull exists iff completable fails"}});
        else if (hull && (hull->size() != X.size() || !is_semibrick(U, *hull)))
            r.fail({{"pair", io::pair_labels(U, X)}, {"problem", "hull is not a semibrick of the right size"}});
    });
}

inline void arc_semibrick(SuiteReport& r, const SuiteOptions& o) {
    auto U = BrickUniverse::ra(r.n, o.p);
    int m = static_cast<int>(U.size());
    auto test = [&](const std::vector<int>& ids) {
        for (auto c : {Color::Green, Color::Red}) {
            ++r.checked;
            ArcDiagram d;
            d.nodes = r.n + 1;
            for (int id : ids) d.arcs.push_back(sigma_inverse(*U.string_brick(id), c));
            bool diagram = !diagram_violation(d);
            if (diagram != is_semibrick(U, ids)) r.fail({{"bricks", io::labels(U, ids)}, {"color", color_name(c)}, {"diagram", diagram}});
        }
    };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            test({a, b});
            for (int c = b + 1; c < m; ++c) test({a, b, c});
        }
}

inline void field_independence(SuiteReport& r, const SuiteOptions& o) {
    std::vector<std::uint32_t> primes = {2, 3, 101};
    std::vector<BrickUniverse> Us;
    for (auto p : primes) Us.push_back(BrickUniverse::ra(r.n, p, Backend::Matrix, false));
    int m = static_cast<int>(Us[0].size());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            ++r.checked;
            for (std::size_t k = 1; k < Us.size(); ++k)
                if (Us[k].ext_dim(a, b) != Us[0].ext_dim(a, b) || Us[k].hom_dim(a, b) != Us[0].hom_dim(a, b))
                    r.fail({{"S", Us[0].label(a)}, {"T", Us[0].label(b)}, {"char", primes[k]}});
        }
    PairTables tab(Us[0]);
    for_each_semibrick_pair(Us[0], tab, 0, static_cast<std::size_t>(r.n), [&](const SemibrickPair& X) {
        ++r.checked;
        bool c0 = is_completable(Us[0], X).completable, p0 = is_pairwise_completable(Us[0], X).pairwise;
        for (std::size_t k = 1; k < Us.size(); ++k)
            if (is_completable(Us[k], X).completable != c0 || is_pairwise_completable(Us[k], X).pairwise != p0)
                r.fail({{"pair", io::pair_labels(Us[0], X)}, {"char", primes[k]}});
    });
    (void)o;
}

struct SuiteInfo {
    std::function<void(SuiteReport&, const SuiteOptions&)> run;
    int default_n;
    int min_n;
    int max_n;
    std::string about;
};

inline const std::map<std::string, SuiteInfo>& registry() {
    static const std::map<std::string, SuiteInfo> r = {
        {"reading-census", {reading_census, 4, 1, 5, "delta and delta_bar are bijections onto noncrossing diagrams"}},
        {"brick-census", {brick_census, 6, 1, 8, "2^(n+1)-n-2 bricks, sigma round trips"}},
        {"oracle-hom", {oracle_hom, 3, 1, 5, "arc Hom count equals the linear-algebra Hom dimension"}},
        {"oracle-ext", {oracle_ext, 3, 1, 5, "two-sided arc maps detect Ext and predict middle terms"}},
        {"kstone", {kstone, 4, 1, 5, "End = K and no self-extensions, RA_n bricks and the D4 modules"}},
        {"trichotomy", {trichotomy, 4, 1, 5, "rank-2 pairs: completable iff no map, a mono or an epi"}},
        {"a3-pairwise", {a3_pairwise, 3, 1, 4, "pairwise completable implies completable"}},
        {"a4-counterexample", {a4_counterexample, 4, 4, 4, "the pairwise completable, non-completable RA_4 pair"}},
        {"d4-counterexample", {d4_counterexample, 4, 4, 4, "the D4 preprojective counterexample"}},
        {"fullrank-smc", {fullrank_smc, 3, 1, 4, "pairwise completable full-rank pairs are SMCs"}},
        {"single-brick", {single_brick, 4, 1, 4, "full rank with one brick on a side is an SMC"}},
        {"exists-surjection", {exists_surjection, 3, 1, 4, "each S in D has a quotient in D'; dually for U"}},
        {"no-common-quotients", {no_common_quotients, 3, 1, 4, "disjoint quotient sets force D = D'; dually"}},
        {"mutation-oracle", {mutation_oracle, 3, 1, 4, "mutation search agrees with the permutation search"}},
        {"smc-census", {smc_census, 4, 1, 5, "(n+1)! maximal SMCs of size n"}},
        {"size3-reduction", {size3_reduction, 4, 1, 4, "the pairwise property is decided by size-3 pairs"}},
        {"mutation-duality", {mutation_duality, 3, 1, 4, "mutations give semibrick pairs and undo each other"}},
        {"wide-hull", {wide_hull, 3, 1, 4, "wide-hull simples exist exactly for completable pairs"}},
        {"arc-semibrick", {arc_semibrick, 4, 1, 4, "noncrossing diagrams are exactly semibricks"}},
        {"field-independence", {field_independence, 3, 1, 3, "answers agree over F_2, F_3 and F_101"}},
    };
    return r;
}

} // namespace suites

inline std::string normalize_suite_name(std::string s) {
    for (auto& c : s) c = c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : suites::registry()) out.push_back(k);
    return out;
}

/// Throws std::out_of_range for an unknown suite and std::invalid_argument
/// for an n outside the suite's bounds.
inline SuiteReport verify_suite(const std::string& name, const SuiteOptions& opt = {}) {
    auto key = normalize_suite_name(name);
    const auto& reg = suites::registry();
    auto it = reg.find(key);
    if (it == reg.end()) throw std::out_of_range("unknown suite " + name);
    SuiteReport r;
    r.name = key;
    r.n = opt.n < 0 ? it->second.default_n : opt.n;
    if (r.n < it->second.min_n || r.n > it->second.max_n)
        throw std::invalid_argument("suite " + key + " accepts n in " + std::to_string(it->second.min_n) + ".." +
                                    std::to_string(it->second.max_n));
    auto t0 = std::chrono::steady_clock::now();
    it->second.run(r, opt);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace brickyard
