#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "homset.hpp"

using namespace bqf;

namespace {

// Small diagrams (<= 6 semiarcs) for brute-force cross-checks.
std::vector<LinkDiagram> small_diagrams() {
    std::vector<const char*> texts = {
        "X + 2 1 3 4\nX + 4 3 1 2\n",               // Hopf link
        "X + 1 1 2 2\nX + 2 2 1 1\n",               // invalid-free: see below
        "X + 1 2 2 3\nX - 3 4 4 1\n",               // unknot with a poke
        "X + 2 1 4 5\nX + 5 4 6 1\nX + 3 6 2 3\n",  // invalid-free: see below
        "O 1\n",
        "O 1\nO 2\n",
    };
    std::vector<LinkDiagram> out;
    for (const char* t : texts) {
        auto D = parse_diagram(t);
        if (D) out.push_back(*D);
    }
    return out;
}

}  // namespace

TEST_CASE("trefoil counting invariant is 3") {
    // positive braid closure of (sigma_1)^3 on two strands
    auto D = parse_diagram("X + 2 1 3 4\nX + 4 3 5 6\nX + 6 5 1 2\n");
    REQUIRE(D);
    CHECK(counting_invariant(*D, fixtures::trefoil3()) == 3);
    // the trivial-ish two-element biquandle sees 2^1 colorings on the unknot
    auto U = parse_diagram("O 1\n");
    CHECK(counting_invariant(*U, fixtures::two_elem()) == 2);
}

TEST_CASE("backtracking equals brute force on small diagrams") {
    auto diagrams = small_diagrams();
    CHECK(diagrams.size() >= 4);
    std::vector<Biquandle> bqs = {fixtures::trefoil3(), fixtures::onefare3(),
                                  fixtures::vhopf3(), fixtures::two_elem()};
    for (const auto& D : diagrams)
        for (const auto& B : bqs) {
            auto fast = enumerate_colorings(D, B);
            auto slow = colorings_brute(D, B);
            CHECK(fast == slow);  // same colorings, same (lexicographic) order
            CHECK(std::is_sorted(fast.begin(), fast.end()));
        }
}

TEST_CASE("negative crossings use the inverse maps") {
    // figure-eight as braid closure [1,-2,1,-2] needs both directions
    auto D = parse_diagram(
        "X + 2 1 4 5\nX - 5 3 7 6\nX + 6 4 1 8\nX - 8 7 3 2\n");
    REQUIRE(D);
    auto B = fixtures::through4();
    CHECK(counting_invariant(*D, B) == 16);
}
