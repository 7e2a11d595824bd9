#include <doctest.h>

#include <array>

#include "fixtures.hpp"

using namespace bqf;

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

// S_3 as permutations of {0,1,2} listed in a fixed order.
std::vector<std::vector<int>> s3_table() {
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                             {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    auto index = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c;
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index(c);
        }
    return t;
}

Biquandle trivial(int n) {
    Biquandle B;
    B.n = n;
    B.under.assign(n, std::vector<int>(n));
    B.over.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) B.under[x][y] = B.over[x][y] = x;
    return B;
}

}  // namespace

TEST_CASE("axiom verification") {
    CHECK(verify(fixtures::trefoil3()).valid);
    CHECK(verify(trivial(4)).valid);
    Biquandle bad = fixtures::trefoil3();
    bad.under[0][0] = bad.under[1][0];  // column 1 no longer a permutation
    auto rep = verify(bad);
    CHECK(!rep.valid);
    bool has_ii = false;
    for (const auto& v : rep.violations)
        if (v.axiom.rfind("ii", 0) == 0) has_ii = true;
    CHECK(has_ii);
    Biquandle mal;
    mal.n = 2;
    CHECK(verify(mal).violations.front().axiom == "malformed");
}

TEST_CASE("quandle detection") {
    CHECK(is_quandle(fixtures::through4()));
    CHECK(!is_quandle(fixtures::trefoil3()));
}

TEST_CASE("inverse maps invert the forward maps") {
    for (const Biquandle& B : {fixtures::trefoil3(), fixtures::crooked4(), trivial(3)}) {
        auto M = inverse_maps(B);
        for (int y = 0; y < B.n; ++y)
            for (int x = 0; x < B.n; ++x) {
                CHECK(B.under[M.inv_beta[y][x]][y] == x);
                CHECK(B.over[M.inv_alpha[y][x]][y] == x);
            }
        for (int x = 0; x < B.n; ++x)
            for (int y = 0; y < B.n; ++y) {
                auto [px, py] = M.inv_S[(std::size_t)B.over[y][x] * B.n + B.under[x][y]];
                CHECK(px == x);
                CHECK(py == y);
            }
    }
    // trefoil example: beta_1 is the transposition (1 2)
    auto M = inverse_maps(fixtures::trefoil3());
    CHECK(M.inv_beta[0] == std::vector<int>{1, 0, 2});
}

TEST_CASE("Alexander biquandles") {
    auto B = alexander_biquandle(3, 2, 1);
    REQUIRE(B);
    CHECK(verify(*B).valid);
    CHECK(is_quandle(*B));  // s = 1 gives a quandle
    CHECK(!alexander_biquandle(4, 3, 2));  // s not a unit
    auto B2 = alexander_biquandle(4, 3, 3);
    REQUIRE(B2);
    CHECK(verify(*B2).valid);
    // exhaustive over small moduli and unit pairs
    for (i64 m = 2; m <= 6; ++m)
        for (i64 t = 1; t < m; ++t)
            for (i64 s = 1; s < m; ++s) {
                auto A = alexander_biquandle(m, t, s);
                if (A) CHECK(verify(*A).valid);
            }
}

TEST_CASE("conjugation and Wada constructions") {
    auto triv = conjugation_biquandle(cyclic_table(2), 1);
    REQUIRE(triv);
    CHECK(triv->under == trivial(2).under);
    auto s3 = conjugation_biquandle(s3_table(), 1);
    REQUIRE(s3);
    CHECK(verify(*s3).valid);
    CHECK(is_quandle(*s3));
    auto w = wada_biquandle(cyclic_table(3));
    REQUIRE(w);
    CHECK(verify(*w).valid);
    // invalid group table rejected
    auto bad = cyclic_table(3);
    bad[1][1] = 1;
    CHECK(!conjugation_biquandle(bad, 1));
    CHECK(!wada_biquandle(bad));
    // constructors verify across all cyclic groups up to order 6
    for (int n = 1; n <= 6; ++n) {
        for (int p = 1; p <= 2; ++p) {
            auto c = conjugation_biquandle(cyclic_table(n), p);
            REQUIRE(c);
            CHECK(verify(*c).valid);
        }
        auto wd = wada_biquandle(cyclic_table(n));
        REQUIRE(wd);
        CHECK(verify(*wd).valid);
    }
}

TEST_CASE("text round trip and parse errors") {
    for (const Biquandle& B : {fixtures::trefoil3(), fixtures::z6bq()}) {
        std::string text = biquandle_to_text(B);
        auto P = parse_biquandle(text);
        REQUIRE(P);
        CHECK(P->n == B.n);
        CHECK(P->under == B.under);
        CHECK(P->over == B.over);
    }
    std::string err;
    CHECK(!parse_biquandle("", &err));
    CHECK(!parse_biquandle("2\n1 2\n2 9\n\n1 1\n2 2\n", &err));  // out of range
    CHECK(!parse_biquandle("2\n1 2\n\n1 1\n2 2\n", &err));       // short under table
    CHECK(parse_biquandle("# comment\n2\n1 2\n2 1\n\n1 1\n2 2\n"));
}
