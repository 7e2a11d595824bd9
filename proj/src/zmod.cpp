#include "zmod.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace bqf {

namespace {

i64 mod_reduce(i64 v, i64 m) {
    v %= m;
    if (v < 0) v += m;
    return v;
}

// g = gcd(a, b) = s*a + t*b
i64 ext_gcd(i64 a, i64 b, i64& s, i64& t) {
    if (b == 0) { s = 1; t = 0; return a; }
    i64 s1, t1;
    i64 g = ext_gcd(b, a % b, s1, t1);
    s = t1;
    t = s1 - (a / b) * t1;
    return g;
}

i64 mod_inv(i64 a, i64 m) {  // gcd(a, m) == 1 assumed
    i64 s, t;
    ext_gcd(mod_reduce(a, m), m, s, t);
    return mod_reduce(s, m);
}

// Unit u (mod m) with u * a = gcd(a, m) (mod m).
i64 unit_for(i64 a, i64 m) {
    a = mod_reduce(a, m);
    if (a == 0) return 1;
    i64 h = std::gcd(a, m);
    i64 ap = a / h, mh = m / h;
    i64 u = (mh == 1) ? 1 : mod_inv(ap % mh, mh);
    while (std::gcd(u, m) != 1) u += mh;   // lift to a unit mod m
    return mod_reduce(u, m);
}

// Row-echelon Howell reduction over Z_m on `rows` (each of width `width`).
// The first `lead_cols` columns are eliminated; remaining columns ride along
// (used to track transformations).  Returns the reduced rows (zero rows in
// the leading part are kept at the end so callers can harvest them).
std::vector<Vec> howell_rows(std::vector<Vec> rows, int width, int lead_cols, i64 m) {
    auto add_mul = [&](Vec& dst, const Vec& src, i64 f) {
        for (int c = 0; c < width; ++c) dst[c] = mod_reduce(dst[c] + f * src[c], m);
    };
    std::size_t pivot = 0;
    for (int j = 0; j < lead_cols; ++j) {
        // Fold every row below the pivot into one row carrying the column gcd.
        std::size_t sel = pivot;
        while (sel < rows.size() && rows[sel][j] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot], rows[sel]);
        for (std::size_t i = pivot + 1; i < rows.size(); ++i) {
            if (rows[i][j] == 0) continue;
            i64 a = rows[pivot][j], b = rows[i][j], s, t;
            i64 g = ext_gcd(a, b, s, t);
            Vec np(width), ni(width);
            for (int c = 0; c < width; ++c) {
                np[c] = mod_reduce(s * rows[pivot][c] + t * rows[i][c], m);
                ni[c] = mod_reduce(-(b / g) * rows[pivot][c] + (a / g) * rows[i][c], m);
            }
            rows[pivot] = std::move(np);
            rows[i] = std::move(ni);
        }
        // Normalize the pivot entry to the canonical divisor gcd(a, m).
        i64 u = unit_for(rows[pivot][j], m);
        for (int c = 0; c < width; ++c) rows[pivot][c] = mod_reduce(u * rows[pivot][c], m);
        i64 h = rows[pivot][j];
        if (h == 0) continue;  // annihilated entirely (entry was a zero divisor times m)
        // Entries above the pivot reduce into [0, h).
        for (std::size_t i = 0; i < pivot; ++i) {
            i64 q = rows[i][j] / h;
            if (q) add_mul(rows[i], rows[pivot], -q);
        }
        // Annihilator row keeps the span Howell-complete when h | m properly.
        if (h > 1) {
            Vec ann(width);
            i64 f = m / h;
            for (int c = 0; c < width; ++c) ann[c] = mod_reduce(f * rows[pivot][c], m);
            if (std::any_of(ann.begin(), ann.end(), [](i64 v) { return v != 0; }))
                rows.push_back(std::move(ann));
        }
        ++pivot;
    }
    return rows;
}

int lead_col(const Vec& r, int lead_cols) {
    for (int c = 0; c < lead_cols; ++c)
        if (r[c] != 0) return c;
    return lead_cols;
}

}  // namespace

i64 CoeffGroup::order() const {
    i64 p = 1;
    for (i64 m : moduli) p *= m;
    return p;
}

std::string CoeffGroup::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (i) s += 'x';
        s += std::to_string(moduli[i]);
    }
    return s;
}

std::optional<CoeffGroup> CoeffGroup::parse(const std::string& spec) {
    CoeffGroup g;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        try {
            std::size_t used = 0;
            i64 m = std::stoll(part, &used);
            if (used != part.size() || m < 2) return std::nullopt;
            g.moduli.push_back(m);
        } catch (...) {
            return std::nullopt;
        }
    }
    if (g.moduli.empty()) return std::nullopt;
    return g;
}

GroupElem group_zero(const CoeffGroup& g) { return {Vec(g.moduli.size(), 0)}; }

GroupElem group_add(const CoeffGroup& g, const GroupElem& a, const GroupElem& b) {
    GroupElem r = a;
    for (std::size_t i = 0; i < g.moduli.size(); ++i)
        r.residues[i] = mod_reduce(r.residues[i] + b.residues[i], g.moduli[i]);
    return r;
}

GroupElem group_neg(const CoeffGroup& g, const GroupElem& a) {
    GroupElem r = a;
    for (std::size_t i = 0; i < g.moduli.size(); ++i)
        r.residues[i] = mod_reduce(-r.residues[i], g.moduli[i]);
    return r;
}

std::string group_elem_str(const GroupElem& e) {
    if (e.residues.size() == 1) return std::to_string(e.residues[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < e.residues.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e.residues[i]);
    }
    return s + ")";
}

std::optional<GroupElem> parse_group_elem(const CoeffGroup& g, const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    GroupElem e;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            e.residues.push_back(std::stoll(part, &used));
            if (used != part.size()) return std::nullopt;
        } catch (...) {
            return std::nullopt;
        }
    }
    if (e.residues.size() != g.moduli.size()) return std::nullopt;
    for (std::size_t i = 0; i < e.residues.size(); ++i) {
        if (e.residues[i] < 0 || e.residues[i] >= g.moduli[i]) return std::nullopt;
    }
    return e;
}

MatMod howell_form(const MatMod& M) {
    std::vector<Vec> rows;
    rows.reserve(M.rows);
    for (int r = 0; r < M.rows; ++r) {
        Vec row(M.cols);
        for (int c = 0; c < M.cols; ++c) row[c] = mod_reduce(M.at(r, c), M.m);
        rows.push_back(std::move(row));
    }
    rows = howell_rows(std::move(rows), M.cols, M.cols, M.m);
    std::erase_if(rows, [&](const Vec& r) {
        return std::all_of(r.begin(), r.end(), [](i64 v) { return v == 0; });
    });
    std::sort(rows.begin(), rows.end(), [&](const Vec& a, const Vec& b) {
        return lead_col(a, M.cols) < lead_col(b, M.cols);
    });
    MatMod H(M.m, (int)rows.size(), M.cols);
    for (int r = 0; r < H.rows; ++r)
        for (int c = 0; c < H.cols; ++c) H.at(r, c) = rows[r][c];
    return H;
}

i64 KernelDesc::size() const {
    i64 p = 1;
    for (i64 o : orders) p *= o;
    return p;
}

void KernelDesc::for_each(const std::function<bool(const Vec&)>& fn) const {
    Vec counter(orders.size(), 0);
    Vec cur(cols, 0);
    auto rebuild = [&]() {
        std::fill(cur.begin(), cur.end(), 0);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (counter[i] == 0) continue;
            for (int c = 0; c < cols; ++c)
                cur[c] = mod_reduce(cur[c] + counter[i] * gens[i][c], m);
        }
    };
    while (true) {
        rebuild();
        if (!fn(cur)) return;
        std::size_t i = 0;
        while (i < counter.size()) {
            if (++counter[i] < orders[i]) break;
            counter[i] = 0;
            ++i;
        }
        if (i == counter.size()) return;
    }
}

std::vector<Vec> KernelDesc::all() const {
    std::vector<Vec> out;
    out.reserve((std::size_t)size());
    for_each([&](const Vec& v) { out.push_back(v); return true; });
    return out;
}

KernelDesc kernel(const MatMod& M) {
    // Left kernel of M^T via Howell reduction of [M^T | I]; rows whose
    // leading part vanishes have right-kernel vectors of M in the tail.
    int lead = M.rows, tail = M.cols;
    std::vector<Vec> aug;
    aug.reserve(M.cols);
    for (int c = 0; c < M.cols; ++c) {
        Vec row(lead + tail, 0);
        for (int r = 0; r < M.rows; ++r) row[r] = mod_reduce(M.at(r, c), M.m);
        row[lead + c] = 1;
        aug.push_back(std::move(row));
    }
    aug = howell_rows(std::move(aug), lead + tail, lead, M.m);
    std::vector<Vec> gens;
    for (const Vec& row : aug) {
        bool zero_lead = std::all_of(row.begin(), row.begin() + lead,
                                     [](i64 v) { return v == 0; });
        if (!zero_lead) continue;
        Vec g(row.begin() + lead, row.end());
        if (std::any_of(g.begin(), g.end(), [](i64 v) { return v != 0; }))
            gens.push_back(std::move(g));
    }
    // Canonicalize the generator set itself so coefficient tuples are unique.
    gens = howell_rows(std::move(gens), M.cols, M.cols, M.m);
    std::erase_if(gens, [&](const Vec& r) {
        return std::all_of(r.begin(), r.end(), [](i64 v) { return v == 0; });
    });
    std::sort(gens.begin(), gens.end(), [&](const Vec& a, const Vec& b) {
        return lead_col(a, M.cols) < lead_col(b, M.cols);
    });
    KernelDesc K;
    K.m = M.m;
    K.cols = M.cols;
    for (Vec& g : gens) {
        i64 head = g[lead_col(g, M.cols)];
        K.orders.push_back(M.m / head);
        K.gens.push_back(std::move(g));
    }
    return K;
}

bool in_span(const Vec& target, const std::vector<Vec>& howell, i64 m) {
    Vec t = target;
    for (i64& v : t) v = mod_reduce(v, m);
    int cols = (int)t.size();
    for (const Vec& row : howell) {
        int j = lead_col(row, cols);
        if (j == cols) continue;
        i64 h = row[j];
        if (t[j] % h != 0) return false;
        i64 c = (t[j] / h) % (m / h);
        for (int k = 0; k < cols; ++k) t[k] = mod_reduce(t[k] - c * row[k], m);
    }
    return std::all_of(t.begin(), t.end(), [](i64 v) { return v == 0; });
}

std::optional<SumWitness> in_subgroup_sum(const Vec& target,
                                          const KernelDesc& K1,
                                          const KernelDesc& K2) {
    assert(K1.m == K2.m && K1.cols == K2.cols);
    i64 m = K1.m;
    int cols = K1.cols;
    int ng = (int)(K1.gens.size() + K2.gens.size());
    // Stack both generator sets, tracking which original combination each
    // reduced row is, so the split witness can be reconstructed.
    std::vector<Vec> rows;
    int idx = 0;
    for (const auto* K : {&K1, &K2}) {
        for (const Vec& g : K->gens) {
            Vec row(cols + ng, 0);
            std::copy(g.begin(), g.end(), row.begin());
            row[cols + idx] = 1;
            rows.push_back(std::move(row));
            ++idx;
        }
    }
    rows = howell_rows(std::move(rows), cols + ng, cols, m);
    Vec t = target, combo(ng, 0);
    for (i64& v : t) v = mod_reduce(v, m);
    for (const Vec& row : rows) {
        int j = lead_col(row, cols);
        if (j == cols) continue;
        i64 h = row[j];
        if (t[j] % h != 0) return std::nullopt;
        i64 c = (t[j] / h) % (m / h);
        for (int k = 0; k < cols; ++k) t[k] = mod_reduce(t[k] - c * row[k], m);
        for (int k = 0; k < ng; ++k) combo[k] = mod_reduce(combo[k] + c * row[cols + k], m);
    }
    if (!std::all_of(t.begin(), t.end(), [](i64 v) { return v == 0; }))
        return std::nullopt;
    SumWitness w;
    w.a.assign(cols, 0);
    w.b.assign(cols, 0);
    int n1 = (int)K1.gens.size();
    for (int i = 0; i < ng; ++i) {
        const Vec& g = i < n1 ? K1.gens[i] : K2.gens[i - n1];
        Vec& dst = i < n1 ? w.a : w.b;
        for (int c = 0; c < cols; ++c) dst[c] = mod_reduce(dst[c] + combo[i] * g[c], m);
    }
    return w;
}

std::vector<KernelDesc> solve_over_group(const std::vector<Vec>& int_rows,
                                         int cols, const CoeffGroup& G) {
    std::vector<KernelDesc> out;
    for (i64 m : G.moduli) {
        MatMod M(m, (int)int_rows.size(), cols);
        for (int r = 0; r < M.rows; ++r)
            for (int c = 0; c < cols; ++c) M.at(r, c) = mod_reduce(int_rows[r][c], m);
        out.push_back(kernel(M));
    }
    return out;
}

i64 solution_count(const std::vector<KernelDesc>& per_component) {
    i64 p = 1;
    for (const auto& K : per_component) p *= K.size();
    return p;
}

void enumerate_group_solutions(const std::vector<KernelDesc>& per_component,
                               const CoeffGroup& G, int cols,
                               const std::function<bool(const std::vector<GroupElem>&)>& fn) {
    std::size_t k = per_component.size();
    std::vector<Vec> cur(k);
    std::vector<GroupElem> sol(cols);
    for (int c = 0; c < cols; ++c) sol[c].residues.assign(k, 0);
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (stop) return;
        if (i == k) {
            for (int c = 0; c < cols; ++c)
                for (std::size_t j = 0; j < k; ++j) sol[c].residues[j] = cur[j][c];
            if (!fn(sol)) stop = true;
            return;
        }
        per_component[i].for_each([&](const Vec& v) {
            cur[i] = v;
            rec(i + 1);
            return !stop;
        });
    };
    rec(0);
}

}  // namespace bqf
