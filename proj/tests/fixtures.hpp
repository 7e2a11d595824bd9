// Shared fixtures: the small biquandles and fare tables exercised throughout
// the test suite, entered 1-indexed exactly as tabulated.
#pragma once

#include <vector>

#include "biquandle.hpp"
#include "fare.hpp"

namespace fixtures {

using bqf::Biquandle;

inline Biquandle make_bq(std::vector<std::vector<int>> under1,
                         std::vector<std::vector<int>> over1) {
    Biquandle B;
    B.n = (int)under1.size();
    B.under = std::move(under1);
    B.over = std::move(over1);
    for (auto* t : {&B.under, &B.over})
        for (auto& row : *t)
            for (int& v : row) --v;
    return B;
}

// 3-element biquandle with 3 colorings on the trefoil.
inline Biquandle trefoil3() {
    return make_bq({{2, 2, 1}, {1, 1, 2}, {3, 3, 3}}, {{2, 2, 2}, {1, 1, 1}, {3, 3, 3}});
}

// 3-element biquandle with exactly four 1-fares over Z_2.
inline Biquandle onefare3() {
    return make_bq({{1, 1, 1}, {2, 3, 3}, {3, 2, 2}}, {{1, 1, 1}, {3, 3, 3}, {2, 2, 2}});
}

inline Biquandle vhopf3() {
    return make_bq({{3, 1, 3}, {2, 2, 2}, {1, 3, 1}}, {{3, 3, 3}, {2, 2, 2}, {1, 1, 1}});
}

inline Biquandle two_elem() {
    return make_bq({{2, 2}, {1, 1}}, {{2, 2}, {1, 1}});
}

// 4-element quandle with 125 through 2-fares over Z_5.
inline Biquandle through4() {
    return make_bq({{1, 3, 4, 2}, {4, 2, 1, 3}, {2, 4, 3, 1}, {3, 1, 2, 4}},
                   {{1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}, {4, 4, 4, 4}});
}

inline Biquandle z6bq() {
    return make_bq({{1, 3, 4, 2}, {2, 4, 3, 1}, {3, 1, 2, 4}, {4, 2, 1, 3}},
                   {{1, 1, 1, 1}, {4, 4, 4, 4}, {2, 2, 2, 2}, {3, 3, 3, 3}});
}

// 4-element biquandle with 3125 crooked 2-fares over Z_5 (under = over).
inline Biquandle crooked4() {
    std::vector<std::vector<int>> t = {{3, 1, 4, 2}, {2, 4, 1, 3}, {1, 3, 2, 4}, {4, 2, 3, 1}};
    return make_bq(t, t);
}

inline bqf::FareTable make_fare2(int order, bqf::RouteKind kind, bqf::i64 m,
                                 const std::vector<std::vector<int>>& vals) {
    bqf::FareTable f;
    f.order = order;
    f.kind = kind;
    f.group.moduli = {m};
    f.n = (int)vals.size();
    for (const auto& row : vals)
        for (int v : row) f.values.push_back({{v}});
    return f;
}

}  // namespace fixtures
