#include "brickyard/type_a.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace brickyard;

namespace {
int id(const BrickUniverse& U, int p, int q, const std::string& acts) {
    return U.id_of(StringBrick::from_string(U.algebra().n, p, q, acts));
}
int simple(const BrickUniverse& U, int v) { return U.id_of(StringBrick::simple(U.algebra().n, v)); }
std::vector<int> simples(const BrickUniverse& U) {
    std::vector<int> s;
    for (int v = 1; v <= U.algebra().n; ++v) s.push_back(simple(U, v));
    std::sort(s.begin(), s.end());
    return s;
}
} // namespace

TEST(SmcFromPermutation, Examples) {
    auto U = BrickUniverse::ra(4);
    EXPECT_EQ(smc_from_permutation(U, Permutation::identity(5)), SemibrickPair({}, simples(U)));
    EXPECT_EQ(smc_from_permutation(U, Permutation::longest(5)), SemibrickPair(simples(U), {}));
    auto X = smc_from_permutation(U, Permutation::parse("53412"));
    EXPECT_EQ(X, SemibrickPair({id(U, 1, 3, "UD"), id(U, 3, 4, "U")}, {simple(U, 1), simple(U, 3)}));
    EXPECT_THROW(smc_from_permutation(U, Permutation::parse("123")), std::invalid_argument);
}

TEST(SmcFromPermutation, CensusAgainstLinearAlgebra) {
    for (int n = 1; n <= 4; ++n) {
        auto U = BrickUniverse::ra(n);
        auto M = BrickUniverse::ra(n, 101, Backend::Matrix);
        std::set<SemibrickPair> seen;
        for (const auto& w : all_permutations(n + 1)) {
            auto X = smc_from_permutation(U, w);
            EXPECT_EQ(static_cast<int>(X.size()), n);
            EXPECT_TRUE(is_semibrick_pair(M, X)) << w.to_string();
            // maximal: no brick can be added on either side
            for (int b = 0; b < static_cast<int>(M.size()); ++b) {
                if (X.contains_D(b) || X.contains_U(b)) continue;
                auto D = X.D;
                D.push_back(b);
                auto Uv = X.U;
                Uv.push_back(b);
                EXPECT_FALSE(is_semibrick_pair(M, SemibrickPair(X.D, Uv)));
                EXPECT_FALSE(is_semibrick_pair(M, SemibrickPair(D, X.U)));
            }
            seen.insert(X);
        }
        EXPECT_EQ(seen.size(), all_permutations(n + 1).size());
    }
}

TEST(CompleteFullRank, Examples) {
    auto U = BrickUniverse::ra(4);
    SemibrickPair X({id(U, 1, 3, "UD"), id(U, 3, 4, "U")}, {simple(U, 1), simple(U, 3)});
    EXPECT_EQ(complete_full_rank(U, X).to_string(), "53412");
    EXPECT_EQ(complete_full_rank(U, SemibrickPair({}, simples(U))), Permutation::identity(5));
    EXPECT_EQ(complete_full_rank(U, SemibrickPair(simples(U), {})), Permutation::longest(5));
}

TEST(CompleteFullRank, RoundTripsEverySmc) {
    for (int n = 1; n <= 4; ++n) {
        auto U = BrickUniverse::ra(n);
        for (const auto& w : all_permutations(n + 1)) EXPECT_EQ(complete_full_rank(U, smc_from_permutation(U, w)), w);
    }
}

TEST(CompleteFullRank, Errors) {
    auto expect_kind = [](auto&& f, CompletionError::Kind k) {
        try {
            f();
            ADD_FAILURE() << "no error";
        } catch (const CompletionError& e) {
            EXPECT_EQ(e.kind(), k) << e.what();
        }
    };
    {
        auto U = BrickUniverse::ra(4);
        SemibrickPair X({id(U, 2, 4, "DD")}, {simple(U, 4), id(U, 1, 3, "UU")});
        expect_kind([&] { complete_full_rank(U, X); }, CompletionError::Kind::NotFullRank);
    }
    {
        auto U = BrickUniverse::ra(2);
        SemibrickPair X({simple(U, 1), id(U, 1, 2, "D")}, {});
        expect_kind([&] { complete_full_rank(U, X); }, CompletionError::Kind::Degree);
    }
    {
        auto U = BrickUniverse::ra(3);
        SemibrickPair X({simple(U, 1), simple(U, 3)}, {simple(U, 1)});
        expect_kind([&] { complete_full_rank(U, X); }, CompletionError::Kind::Cycle);
    }
    {
        auto U = BrickUniverse::ra(3);
        SemibrickPair X({id(U, 1, 3, "DD")}, {});
        expect_kind([&] { complete_full_rank(U, X); }, CompletionError::Kind::NotFullRank);
    }
    {
        // the arcs chain 3 -> 1 -> 2, but the permutation 312 puts node 2 right of the green arc
        auto U = BrickUniverse::ra(2);
        SemibrickPair X({id(U, 1, 2, "D")}, {simple(U, 1)});
        expect_kind([&] { complete_full_rank(U, X); }, CompletionError::Kind::Mismatch);
    }
}

TEST(Completion, Examples) {
    auto U = BrickUniverse::ra(4);
    EXPECT_TRUE(completion_of_U(U, simples(U)).empty());
    EXPECT_EQ(completion_of_U(U, {}), simples(U));
    auto d = completion_of_U(U, {simple(U, 1), simple(U, 3)});
    std::vector<int> expect = {id(U, 1, 3, "UD"), id(U, 3, 4, "U")};
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(d, expect);
    EXPECT_EQ(completion_of_D(U, expect), (std::vector<int>{simple(U, 1), simple(U, 3)}));
    EXPECT_TRUE(completion_of_D(U, simples(U)).empty());
    EXPECT_THROW(completion_of_U(U, {simple(U, 1), id(U, 1, 2, "D")}), std::invalid_argument);
}

TEST(Completion, ProducesSmcs) {
    auto U = BrickUniverse::ra(3);
    PairTables tab(U);
    std::size_t count = 0;
    for_each_semibrick_pair(U, tab, 0, 3, [&](const SemibrickPair& X) {
        if (!X.D.empty()) return;
        auto d = completion_of_U(U, X.U);
        SemibrickPair Y(d, X.U);
        EXPECT_TRUE(is_semibrick_pair(U, Y));
        EXPECT_EQ(static_cast<int>(Y.size()), 3);
        ++count;
    });
    // one semibrick per permutation of four letters
    EXPECT_EQ(count, 24u);
}

TEST(PermutationOracle, AgreesWithMutationSearch) {
    for (int n = 1; n <= 3; ++n) {
        auto U = BrickUniverse::ra(n);
        PermutationOracle oracle(U);
        EXPECT_EQ(oracle.size(), all_permutations(n + 1).size());
        PairTables tab(U);
        for_each_semibrick_pair(U, tab, 0, n, [&](const SemibrickPair& X) {
            auto w = oracle.witness(X);
            ASSERT_EQ(w.has_value(), is_completable(U, X).completable);
            if (w) {
                auto Y = smc_from_permutation(U, *w);
                for (int d : X.D) EXPECT_TRUE(Y.contains_D(d));
                for (int u : X.U) EXPECT_TRUE(Y.contains_U(u));
            }
        });
    }
}

TEST(PermutationOracle, A4Pair) {
    auto U = BrickUniverse::ra(4);
    PermutationOracle oracle(U);
    SemibrickPair X({id(U, 2, 4, "DD")}, {simple(U, 4), id(U, 1, 3, "UU")});
    EXPECT_FALSE(oracle.completable(X));
    EXPECT_TRUE(oracle.completable(smc_from_permutation(U, Permutation::parse("53412"))));
}

TEST(WideHull, SmcsHaveFullRankHulls) {
    auto U = BrickUniverse::ra(3);
    for (const auto& w : all_permutations(4)) {
        auto hull = wide_hull_simples(U, smc_from_permutation(U, w));
        ASSERT_TRUE(hull.has_value());
        EXPECT_EQ(hull->size(), 3u);
        EXPECT_TRUE(is_semibrick(U, *hull));
    }
}

TEST(TwoColoredDiagram, FullArcExample) {
    auto U = BrickUniverse::ra(4);
    auto d = two_colored_diagram(U, smc_from_permutation(U, Permutation::parse("53412")));
    EXPECT_EQ(d.nodes, 5);
    EXPECT_EQ(d.arcs.size(), 4u);
    std::size_t green = 0;
    for (const auto& a : d.arcs) green += a.color() == Color::Green;
    EXPECT_EQ(green, 2u);
}
