#include "fare.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bqf {

namespace {

// One crossing-shaped term in an axiom row: the quadruple of colors
// (under-in, over-in, under-out, over-out) seen by some crossing of the
// moved diagram, weighted by +-1.
struct Quad {
    int ui, oi, uo, oo;
};

void add_quad(Vec& row, int n, const Quad& q, int coeff, RouteKind kind) {
    auto bump = [&](int a, int b) { row[(std::size_t)a * n + b] += coeff; };
    if (kind == RouteKind::Through || kind == RouteKind::Complete) {
        bump(q.ui, q.uo);
        bump(q.oo, q.oi);
    }
    if (kind == RouteKind::Crooked || kind == RouteKind::Complete) {
        bump(q.ui, q.oi);
        bump(q.oo, q.uo);
    }
}

std::vector<Vec> dedup(std::vector<Vec> rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const Vec& r) {
                                  return std::all_of(r.begin(), r.end(),
                                                     [](i64 v) { return v == 0; });
                              }),
               rows.end());
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

std::vector<Vec> order1_rows(const Biquandle& B) {
    int n = B.n;
    const auto& u = B.under;
    const auto& o = B.over;
    std::vector<Vec> rows;
    auto add = [&](std::initializer_list<std::pair<int, int>> terms) {
        Vec r(n, 0);
        for (auto [idx, c] : terms) r[idx] += c;
        rows.push_back(std::move(r));
    };
    for (int x = 0; x < n; ++x) add({{u[x][x], 1}, {x, 1}});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) add({{x, 1}, {y, 1}, {u[x][y], 1}, {o[y][x], 1}});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                add({{u[x][y], 1},
                     {o[z][y], 1},
                     {o[y][x], 1},
                     {u[x][z], -1},
                     {u[y][z], -1},
                     {o[z][x], -1}});
    return dedup(std::move(rows));
}

std::vector<Vec> order2_rows(const Biquandle& B, RouteKind kind) {
    int n = B.n;
    const auto& u = B.under;
    const auto& o = B.over;
    // Under the signed evaluation, undoing crossings of the crooked and
    // complete families enter moves with reversed weight; through routes do
    // not carry the sign into the type-II relation.
    bool signed_ii = kind != RouteKind::Through;
    auto X = [&](int a, int b) { return Quad{a, b, u[a][b], o[b][a]}; };
    std::vector<Vec> rows;
    auto add = [&](std::initializer_list<std::pair<Quad, int>> terms) {
        Vec r((std::size_t)n * n, 0);
        for (const auto& [q, c] : terms) add_quad(r, n, q, c, kind);
        rows.push_back(std::move(r));
    };
    for (int x = 0; x < n; ++x) add({{X(x, x), 1}});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            add({{X(x, y), 1}, {Quad{u[x][y], o[y][x], x, y}, signed_ii ? -1 : 1}});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int xy = u[x][y], yx = o[y][x], xz = u[x][z];
                int zx = o[z][x], yz = u[y][z], zy = o[z][y];
                add({{X(x, y), 1},
                     {X(y, z), 1},
                     {X(xy, zy), 1},
                     {X(x, z), -1},
                     {X(yx, zx), -1},
                     {X(xz, yz), -1}});
            }
    return dedup(std::move(rows));
}

}  // namespace

std::vector<Vec> axiom_system(const Biquandle& B, int order, RouteKind kind) {
    return order == 1 ? order1_rows(B) : order2_rows(B, kind);
}

std::vector<KernelDesc> fare_kernels(const Biquandle& B, int order, RouteKind kind,
                                     const CoeffGroup& G) {
    int cols = order == 1 ? B.n : B.n * B.n;
    return solve_over_group(axiom_system(B, order, kind), cols, G);
}

i64 fare_count(const Biquandle& B, int order, RouteKind kind, const CoeffGroup& G) {
    return solution_count(fare_kernels(B, order, kind, G));
}

void enumerate_fares(const Biquandle& B, int order, RouteKind kind, const CoeffGroup& G,
                     const std::function<bool(const FareTable&)>& fn) {
    int cols = order == 1 ? B.n : B.n * B.n;
    auto per = fare_kernels(B, order, kind, G);
    enumerate_group_solutions(per, G, cols, [&](const std::vector<GroupElem>& v) {
        FareTable f;
        f.order = order;
        f.kind = kind;
        f.group = G;
        f.n = B.n;
        f.values = v;
        return fn(f);
    });
}

bool satisfies_axioms(const Biquandle& B, const FareTable& f) {
    int cols = f.order == 1 ? B.n : B.n * B.n;
    if ((int)f.values.size() != cols) return false;
    auto rows = axiom_system(B, f.order, f.kind);
    for (const Vec& r : rows)
        for (std::size_t c = 0; c < f.group.components(); ++c) {
            i64 m = f.group.moduli[c], acc = 0;
            for (int j = 0; j < cols; ++j)
                acc = (acc + r[j] % m * f.values[j].residues[c]) % m;
            if ((acc % m + m) % m != 0) return false;
        }
    return true;
}

GroupElem total_fare(const LinkDiagram& D, const Coloring& c, const FareTable& f) {
    GroupElem acc = group_zero(f.group);
    auto rts = routes(D, f.order, f.kind);
    for (const Route& r : rts) {
        std::size_t idx = r.edges.size() == 1
                              ? (std::size_t)c[r.edges[0]]
                              : (std::size_t)c[r.edges[0]] * f.n + c[r.edges[1]];
        GroupElem v = f.values[idx];
        if (r.k % 2 != 0) v = group_neg(f.group, v);
        acc = group_add(f.group, acc, v);
    }
    return acc;
}

FareMultiset fare_multiset_serial(const LinkDiagram& D, const Biquandle& B,
                                  const FareTable& f) {
    FareMultiset M;
    for (const Coloring& c : enumerate_colorings(D, B)) ++M[total_fare(D, c, f)];
    return M;
}

FareMultiset fare_multiset(const LinkDiagram& D, const Biquandle& B, const FareTable& f) {
    auto cols = enumerate_colorings(D, B);
    auto rts = routes(D, f.order, f.kind);
    FareMultiset M;
#ifdef _OPENMP
    int nt = omp_get_max_threads();
#else
    int nt = 1;
#endif
    std::vector<FareMultiset> local((std::size_t)nt);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)cols.size(); ++i) {
#ifdef _OPENMP
        int t = omp_get_thread_num();
#else
        int t = 0;
#endif
        const Coloring& c = cols[(std::size_t)i];
        GroupElem acc = group_zero(f.group);
        for (const Route& r : rts) {
            std::size_t idx = r.edges.size() == 1
                                  ? (std::size_t)c[r.edges[0]]
                                  : (std::size_t)c[r.edges[0]] * f.n + c[r.edges[1]];
            GroupElem v = f.values[idx];
            if (r.k % 2 != 0) v = group_neg(f.group, v);
            acc = group_add(f.group, acc, v);
        }
        ++local[(std::size_t)t][acc];
    }
    for (const auto& L : local)
        for (const auto& [k, v] : L) M[k] += v;
    return M;
}

namespace {

std::string exponent_str(const GroupElem& e) {
    if (e.residues.size() == 1 && e.residues[0] == 1) return "x";
    return "x^" + group_elem_str(e);
}

}  // namespace

std::string render_additive(const FareMultiset& M) {
    if (M.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [val, mult] : M) {
        if (!first) out << "+";
        first = false;
        bool zero = std::all_of(val.residues.begin(), val.residues.end(),
                                [](i64 r) { return r == 0; });
        if (zero) out << mult;
        else if (mult == 1) out << exponent_str(val);
        else out << mult << exponent_str(val);
    }
    return out.str();
}

std::optional<std::string> render_multiplicative(const FareMultiset& M) {
    // Roots live in a single Z_m; a direct-sum exponent has no linear factor.
    for (const auto& [val, mult] : M)
        if (val.residues.size() != 1) return std::nullopt;
    if (M.empty()) return "1";
    std::ostringstream out;
    for (const auto& [val, mult] : M) {
        i64 r = val.residues[0];
        if (r == 0) out << "x";
        else out << "(x-" << r << ")";
        if (mult != 1) out << "^" << mult;
    }
    return out.str();
}

std::optional<Decomposition> decompose(const Biquandle& B, const FareTable& f) {
    if (f.order != 2 || f.kind != RouteKind::Complete) return std::nullopt;
    int cols = B.n * B.n;
    auto KT = fare_kernels(B, 2, RouteKind::Through, f.group);
    auto KC = fare_kernels(B, 2, RouteKind::Crooked, f.group);
    Decomposition d;
    for (FareTable* t : {&d.through, &d.crooked}) {
        t->order = 2;
        t->group = f.group;
        t->n = B.n;
        t->values.assign((std::size_t)cols, group_zero(f.group));
    }
    d.through.kind = RouteKind::Through;
    d.crooked.kind = RouteKind::Crooked;
    for (std::size_t comp = 0; comp < f.group.components(); ++comp) {
        Vec target(cols);
        for (int j = 0; j < cols; ++j) target[j] = f.values[j].residues[comp];
        auto w = in_subgroup_sum(target, KT[comp], KC[comp]);
        if (!w) return std::nullopt;
        for (int j = 0; j < cols; ++j) {
            d.through.values[j].residues[comp] = w->a[j];
            d.crooked.values[j].residues[comp] = w->b[j];
        }
    }
    return d;
}

std::string route_kind_str(RouteKind k) {
    switch (k) {
        case RouteKind::Through: return "through";
        case RouteKind::Crooked: return "crooked";
        default: return "complete";
    }
}

std::optional<RouteKind> parse_route_kind(const std::string& s) {
    if (s == "through") return RouteKind::Through;
    if (s == "crooked") return RouteKind::Crooked;
    if (s == "complete") return RouteKind::Complete;
    return std::nullopt;
}

std::string fare_to_text(const FareTable& f) {
    std::ostringstream out;
    out << "fare order=" << f.order << " kind="
        << (f.order == 1 ? "plain" : route_kind_str(f.kind))
        << " group=" << f.group.to_string() << " n=" << f.n << "\n";
    if (f.order == 1) {
        for (int x = 0; x < f.n; ++x)
            out << x + 1 << " -> " << group_elem_str(f.values[(std::size_t)x]) << "\n";
    } else {
        for (int x = 0; x < f.n; ++x)
            for (int y = 0; y < f.n; ++y)
                out << x + 1 << " " << y + 1 << " -> "
                    << group_elem_str(f.values[(std::size_t)x * f.n + y]) << "\n";
    }
    return out.str();
}

std::optional<FareTable> parse_fare(const std::string& text, std::string* err) {
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& m) -> std::optional<FareTable> {
        if (err) *err = "line " + std::to_string(lineno) + ": " + m;
        return std::nullopt;
    };
    FareTable f;
    bool have_header = false;
    std::vector<bool> seen;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!have_header) {
            if (tok != "fare") return fail("expected 'fare' header");
            int seen_fields = 0;
            std::string kv;
            std::string kind_s;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) return fail("bad header field '" + kv + "'");
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "order") {
                    if (val != "1" && val != "2") return fail("order must be 1 or 2");
                    f.order = val == "1" ? 1 : 2;
                } else if (key == "kind") {
                    kind_s = val;
                } else if (key == "group") {
                    auto g = CoeffGroup::parse(val);
                    if (!g) return fail("bad group spec '" + val + "'");
                    f.group = *g;
                } else if (key == "n") {
                    try { f.n = std::stoi(val); } catch (...) { return fail("bad n"); }
                    if (f.n < 1) return fail("n must be positive");
                } else {
                    return fail("unknown header field '" + key + "'");
                }
                ++seen_fields;
            }
            if (seen_fields != 4) return fail("header needs order=, kind=, group=, n=");
            if (f.order == 1) {
                if (kind_s != "plain") return fail("order-1 fares have kind=plain");
            } else {
                auto k = parse_route_kind(kind_s);
                if (!k) return fail("kind must be through, crooked or complete");
                f.kind = *k;
            }
            std::size_t cols = f.order == 1 ? (std::size_t)f.n : (std::size_t)f.n * f.n;
            f.values.assign(cols, group_zero(f.group));
            seen.assign(cols, false);
            have_header = true;
            continue;
        }
        int x = 0, y = 0;
        try { x = std::stoi(tok); } catch (...) { return fail("bad index"); }
        if (f.order == 2) {
            if (!(ls >> y)) return fail("order-2 entries need two indices");
        }
        std::string arrow;
        if (!(ls >> arrow) || arrow != "->") return fail("expected '->'");
        std::string rest, piece;
        while (ls >> piece) rest += piece;
        auto v = parse_group_elem(f.group, rest);
        if (!v) return fail("bad group element '" + rest + "'");
        if (x < 1 || x > f.n || (f.order == 2 && (y < 1 || y > f.n)))
            return fail("index out of range");
        std::size_t idx = f.order == 1 ? (std::size_t)(x - 1)
                                       : (std::size_t)(x - 1) * f.n + (y - 1);
        if (seen[idx]) return fail("duplicate entry");
        seen[idx] = true;
        f.values[idx] = *v;
    }
    if (!have_header) {
        if (err) *err = "missing 'fare' header";
        return std::nullopt;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) {
            if (err) *err = "missing entry for index " + std::to_string(i + 1);
            return std::nullopt;
        }
    return f;
}

std::string multiset_str(const FareMultiset& M) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [val, mult] : M) {
        if (!first) out << ", ";
        first = false;
        out << mult << "x" << group_elem_str(val);
    }
    out << "}";
    return out.str();
}

}  // namespace bqf
