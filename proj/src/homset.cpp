#include "homset.hpp"

#include <functional>

namespace bqf {

namespace {

// Each crossing is one bidirectional pair constraint: S_fwd(in-pair) = out-pair
// with S_fwd(x, y) = (x |> y, y |>bar x).  At a negative crossing the roles of
// the in- and out-slots swap.
struct PairConstraint {
    int i1, i2, o1, o2;  // semiarc ids: fwd(i1, i2) = (o1, o2)
};

}  // namespace

std::vector<Coloring> enumerate_colorings(const LinkDiagram& D, const Biquandle& B) {
    int n = B.n, S = D.S;
    std::vector<PairConstraint> cons;
    for (const Crossing& c : D.crossings) {
        if (c.sign > 0) cons.push_back({c.ui, c.oi, c.uo, c.oo});
        else cons.push_back({c.uo, c.oo, c.ui, c.oi});
    }
    // forward map and its inverse on pairs
    std::vector<int> fu((std::size_t)n * n), fo((std::size_t)n * n);
    std::vector<int> bu((std::size_t)n * n, -1), bo((std::size_t)n * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int p = B.under[x][y], q = B.over[y][x];
            fu[(std::size_t)x * n + y] = p;
            fo[(std::size_t)x * n + y] = q;
            bu[(std::size_t)p * n + q] = x;
            bo[(std::size_t)p * n + q] = y;
        }
    std::vector<std::vector<int>> touch(S);
    for (std::size_t i = 0; i < cons.size(); ++i) {
        const auto& pc = cons[i];
        for (int e : {pc.i1, pc.i2, pc.o1, pc.o2}) {
            auto& t = touch[e];
            if (t.empty() || t.back() != (int)i) t.push_back((int)i);
        }
    }
    std::vector<int> col(S, -1);
    std::vector<Coloring> out;
    std::vector<int> changed, queue;

    auto set_val = [&](int e, int v) -> bool {
        if (col[e] < 0) {
            col[e] = v;
            changed.push_back(e);
            queue.push_back(e);
            return true;
        }
        return col[e] == v;
    };
    auto propagate = [&]() -> bool {
        while (!queue.empty()) {
            int e = queue.back();
            queue.pop_back();
            for (int ci : touch[e]) {
                const auto& pc = cons[ci];
                if (col[pc.i1] >= 0 && col[pc.i2] >= 0) {
                    std::size_t k = (std::size_t)col[pc.i1] * n + col[pc.i2];
                    if (!set_val(pc.o1, fu[k]) || !set_val(pc.o2, fo[k])) return false;
                }
                if (col[pc.o1] >= 0 && col[pc.o2] >= 0) {
                    std::size_t k = (std::size_t)col[pc.o1] * n + col[pc.o2];
                    if (bu[k] < 0) return false;  // pair outside the S image
                    if (!set_val(pc.i1, bu[k]) || !set_val(pc.i2, bo[k])) return false;
                }
            }
        }
        return true;
    };
    std::function<void()> dfs = [&]() {
        int e0 = -1;
        for (int e = 0; e < S; ++e)
            if (col[e] < 0) { e0 = e; break; }
        if (e0 < 0) {
            out.push_back(col);
            return;
        }
        for (int v = 0; v < n; ++v) {
            std::size_t mark = changed.size();
            col[e0] = v;
            queue.assign(1, e0);
            if (propagate()) dfs();
            while (changed.size() > mark) {
                col[changed.back()] = -1;
                changed.pop_back();
            }
            queue.clear();
            col[e0] = -1;
        }
    };
    dfs();
    return out;
}

i64 counting_invariant(const LinkDiagram& D, const Biquandle& B) {
    return (i64)enumerate_colorings(D, B).size();
}

std::vector<Coloring> colorings_brute(const LinkDiagram& D, const Biquandle& B) {
    int n = B.n, S = D.S;
    std::vector<Coloring> out;
    Coloring c(S, 0);
    while (true) {
        bool ok = true;
        for (const Crossing& x : D.crossings) {
            if (x.sign > 0) {
                if (c[x.uo] != B.under[c[x.ui]][c[x.oi]] ||
                    c[x.oo] != B.over[c[x.oi]][c[x.ui]]) { ok = false; break; }
            } else {
                if (c[x.ui] != B.under[c[x.uo]][c[x.oo]] ||
                    c[x.oi] != B.over[c[x.oo]][c[x.uo]]) { ok = false; break; }
            }
        }
        if (ok) out.push_back(c);
        int i = S - 1;
        while (i >= 0 && ++c[i] == n) c[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

}  // namespace bqf
