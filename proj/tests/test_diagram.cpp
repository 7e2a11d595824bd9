#include <doctest.h>

#include <set>

#include "diagram.hpp"

using namespace bqf;

namespace {

const char* kHopfText =
    "# Hopf link\n"
    "X + 2 1 3 4\n"
    "X + 4 3 1 2\n";

}  // namespace

TEST_CASE("diagram parse, components and round trip") {
    std::string err;
    auto D = parse_diagram(kHopfText, &err);
    REQUIRE(D);
    CHECK(D->S == 4);
    CHECK(D->crossings.size() == 2);
    CHECK(D->ncomp == 2);
    CHECK(D->comp[0] == D->comp[3]);
    CHECK(D->comp[1] == D->comp[2]);
    CHECK(D->comp[0] != D->comp[1]);
    auto D2 = parse_diagram(diagram_to_text(*D), &err);
    REQUIRE(D2);
    CHECK(diagram_to_text(*D2) == diagram_to_text(*D));
    // free components
    auto U = parse_diagram("O 1\nO 2\n", &err);
    REQUIRE(U);
    CHECK(U->ncomp == 2);
    CHECK(U->crossings.empty());
}

TEST_CASE("diagram parse errors") {
    std::string err;
    CHECK(!parse_diagram("X * 1 2 3 4\n", &err));       // bad sign
    CHECK(!parse_diagram("X + 0 2 3 4\n", &err));       // nonpositive id
    CHECK(!parse_diagram("X + 1 2 3 4 5\n", &err));     // trailing token
    CHECK(!parse_diagram("Y + 1 2 3 4\n", &err));       // unknown record
    CHECK(!parse_diagram("X + 1 1 2 2\n", &err));       // semiarc used twice as input
    CHECK(!parse_diagram("X + 2 1 3 4\nX + 4 3 1 2\nO 1\n", &err));  // free id on a crossing
}

TEST_CASE("route extraction") {
    auto D = *parse_diagram(kHopfText);
    auto r1 = routes(*&D, 1, RouteKind::Complete);
    CHECK(r1.size() == 4);  // each semiarc once, sorted
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].edges.size() == 1);
        CHECK(r1[i].edges[0] == (int)i);
        CHECK(r1[i].k == 0);
    }
    auto rt = routes(D, 2, RouteKind::Through);
    auto rc = routes(D, 2, RouteKind::Crooked);
    auto ra = routes(D, 2, RouteKind::Complete);
    CHECK(rt.size() == 4);
    CHECK(rc.size() == 4);
    CHECK(ra.size() == 8);  // complete = through union crooked
    std::multiset<std::vector<int>> all, split;
    for (const auto& r : ra) all.insert(r.edges);
    for (const auto& r : rt) split.insert(r.edges);
    for (const auto& r : rc) split.insert(r.edges);
    CHECK(all == split);
    // through routes stay on one strand: under-in to under-out
    CHECK(rt[0].edges == std::vector<int>{1, 2});
    CHECK(rc[0].edges == std::vector<int>{1, 3});
    // negative crossings carry k = 1
    auto N = *parse_diagram("X - 2 1 3 4\nX - 4 3 1 2\n");
    for (const auto& r : routes(N, 2, RouteKind::Complete)) CHECK(r.k == 1);
}

TEST_CASE("PD conversion of the trefoil") {
    std::string err;
    auto D = convert_pd("PD X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n", &err);
    REQUIRE(D);
    CHECK(D->S == 6);
    CHECK(D->crossings.size() == 3);
    CHECK(D->ncomp == 1);
    int sgn = D->crossings[0].sign;
    for (const auto& c : D->crossings) CHECK(c.sign == sgn);
    // under strand always runs a -> c
    CHECK(D->crossings[0].ui == 0);
    CHECK(D->crossings[0].uo == 1);
    CHECK(!convert_pd("", &err));
    CHECK(!convert_pd("X(1,2,3", &err));
}
