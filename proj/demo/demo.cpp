// A short tour: the SMC of 53412, a completable pair and its mutation path,
// and the RA_4 pair that is pairwise completable but not completable.

#include <brickyard.hpp>

#include <iostream>

using namespace brickyard;

static void show(const BrickUniverse& U, const std::string& title, const SemibrickPair& X) {
    std::cout << title << ": " << io::pair_labels(U, X).dump() << "\n";
}

int main() {
    auto U = BrickUniverse::ra(4);
    Permutation w({5, 3, 4, 1, 2});
    auto X = smc_from_permutation(U, w);
    show(U, "SMC of 53412", X);
    std::cout << render_ascii(two_colored_diagram(U, X)) << "\n";
    std::cout << "recovered permutation: " << complete_full_rank(U, X).to_string() << "\n\n";

    auto id = [&](const std::string& label) { return suites::brick_by_label(U, label); };

    SemibrickPair Y({id("2")}, {id("4")});
    show(U, "pair", Y);
    auto rep = is_completable(U, Y);
    std::cout << "completable: " << std::boolalpha << rep.completable << "\n";
    for (const auto& s : rep.trace) show(U, "  mutate at " + U.label(s.at), s.result);
    std::cout << "\n";

    SemibrickPair Z({id("2/3/4")}, {id("4"), id("3/2/1")});
    show(U, "pair", Z);
    std::cout << "pairwise completable: " << is_pairwise_completable(U, Z).pairwise << "\n";
    auto bad = is_completable(U, Z);
    std::cout << "completable: " << bad.completable << "\n";
    if (bad.dead_end) {
        show(U, "  stuck at", *bad.dead_end);
        std::cout << "  no mutation at " << U.label(bad.obstruction_S) << " because of " << U.label(bad.obstruction_T)
                  << "\n";
    }
    return 0;
}
