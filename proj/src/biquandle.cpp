#include "biquandle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace bqf {

namespace {

bool table_ok(const std::vector<std::vector<int>>& t, int n) {
    if ((int)t.size() != n) return false;
    for (const auto& row : t) {
        if ((int)row.size() != n) return false;
        for (int v : row)
            if (v < 0 || v >= n) return false;
    }
    return true;
}

// Validates a 0-indexed group multiplication table and returns inverses.
std::optional<std::vector<int>> group_inverses(const std::vector<std::vector<int>>& mult) {
    int n = (int)mult.size();
    if (!table_ok(mult, n) || n == 0) return std::nullopt;
    // identity
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (mult[cand][x] != x || mult[x][cand] != x) { ok = false; break; }
        if (ok) { e = cand; break; }
    }
    if (e < 0) return std::nullopt;
    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) return std::nullopt;
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mult[a][b] == e && mult[b][a] == e) { inv[a] = b; break; }
        if (inv[a] < 0) return std::nullopt;
    }
    return inv;
}

}  // namespace

AxiomReport verify(const Biquandle& B) {
    AxiomReport rep;
    int n = B.n;
    if (n <= 0 || !table_ok(B.under, n) || !table_ok(B.over, n)) {
        rep.violations.push_back({"malformed", {}});
        return rep;
    }
    const auto& u = B.under;
    const auto& o = B.over;
    for (int x = 0; x < n; ++x)
        if (u[x][x] != o[x][x]) rep.violations.push_back({"i", {x + 1}});
    for (int y = 0; y < n; ++y) {
        std::set<int> bu, ao;
        for (int x = 0; x < n; ++x) { bu.insert(u[x][y]); ao.insert(o[x][y]); }
        if ((int)bu.size() != n) rep.violations.push_back({"ii-beta", {y + 1}});
        if ((int)ao.size() != n) rep.violations.push_back({"ii-alpha", {y + 1}});
    }
    std::set<std::pair<int, int>> simg;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) simg.insert({o[y][x], u[x][y]});
    if ((int)simg.size() != n * n) rep.violations.push_back({"ii-S", {}});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (u[u[x][y]][u[z][y]] != u[u[x][z]][o[y][z]])
                    rep.violations.push_back({"iii-1", {x + 1, y + 1, z + 1}});
                if (o[u[x][y]][u[z][y]] != u[o[x][z]][o[y][z]])
                    rep.violations.push_back({"iii-2", {x + 1, y + 1, z + 1}});
                if (o[o[x][y]][o[z][y]] != o[o[x][z]][u[y][z]])
                    rep.violations.push_back({"iii-3", {x + 1, y + 1, z + 1}});
            }
    rep.valid = rep.violations.empty();
    return rep;
}

bool is_quandle(const Biquandle& B) {
    for (int x = 0; x < B.n; ++x)
        for (int y = 0; y < B.n; ++y)
            if (B.over[x][y] != x) return false;
    return true;
}

InverseMaps inverse_maps(const Biquandle& B) {
    int n = B.n;
    InverseMaps M;
    M.inv_beta.assign(n, std::vector<int>(n, -1));
    M.inv_alpha.assign(n, std::vector<int>(n, -1));
    M.inv_S.assign((std::size_t)n * n, {-1, -1});
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            M.inv_beta[y][B.under[x][y]] = x;
            M.inv_alpha[y][B.over[x][y]] = x;
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int p = B.over[y][x], q = B.under[x][y];
            M.inv_S[(std::size_t)p * n + q] = {x, y};
        }
    return M;
}

std::optional<Biquandle> alexander_biquandle(i64 m, i64 t, i64 s) {
    if (m < 2 || std::gcd(((t % m) + m) % m, m) != 1 || std::gcd(((s % m) + m) % m, m) != 1)
        return std::nullopt;
    Biquandle B;
    B.n = (int)m;
    B.under.assign(B.n, std::vector<int>(B.n));
    B.over.assign(B.n, std::vector<int>(B.n));
    for (i64 x = 0; x < m; ++x)
        for (i64 y = 0; y < m; ++y) {
            B.under[x][y] = (int)((((t * x + (s - t) * y) % m) + m) % m);
            B.over[x][y] = (int)((((s * x) % m) + m) % m);
        }
    return B;
}

std::optional<Biquandle> conjugation_biquandle(const std::vector<std::vector<int>>& mult, int pow) {
    auto inv = group_inverses(mult);
    if (!inv) return std::nullopt;
    int n = (int)mult.size();
    auto power = [&](int g, int k) {
        int r = -1;  // identity located via g * g^-1
        r = mult[g][(*inv)[g]];
        int base = k >= 0 ? g : (*inv)[g];
        for (int i = 0; i < std::abs(k); ++i) r = mult[r][base];
        return r;
    };
    Biquandle B;
    B.n = n;
    B.under.assign(n, std::vector<int>(n));
    B.over.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int yn = power(y, pow), ym = power(y, -pow);
            B.under[x][y] = mult[mult[ym][x]][yn];
            B.over[x][y] = x;
        }
    return B;
}

std::optional<Biquandle> wada_biquandle(const std::vector<std::vector<int>>& mult) {
    auto inv = group_inverses(mult);
    if (!inv) return std::nullopt;
    int n = (int)mult.size();
    Biquandle B;
    B.n = n;
    B.under.assign(n, std::vector<int>(n));
    B.over.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            B.under[x][y] = mult[mult[(*inv)[y]][x]][(*inv)[y]];
            B.over[x][y] = (*inv)[x];
        }
    return B;
}

std::optional<Biquandle> parse_biquandle(const std::string& text, std::string* err) {
    std::vector<std::string> lines;
    {
        std::stringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            lines.push_back(line);
        }
    }
    auto fail = [&](const std::string& m) -> std::optional<Biquandle> {
        if (err) *err = m;
        return std::nullopt;
    };
    std::size_t i = 0;
    auto next_nonblank = [&]() -> std::optional<std::string> {
        while (i < lines.size()) {
            std::string& l = lines[i];
            if (l.find_first_not_of(" \t\r") != std::string::npos) return lines[i++];
            ++i;
        }
        return std::nullopt;
    };
    auto header = next_nonblank();
    if (!header) return fail("empty biquandle file");
    int n = 0;
    {
        std::stringstream ss(*header);
        if (!(ss >> n) || n < 1) return fail("bad size line");
        std::string extra;
        if (ss >> extra) return fail("bad size line");
    }
    Biquandle B;
    B.n = n;
    auto read_table = [&](std::vector<std::vector<int>>& t) -> bool {
        for (int r = 0; r < n; ++r) {
            auto l = next_nonblank();
            if (!l) return false;
            std::stringstream ss(*l);
            std::vector<int> row;
            int v;
            while (ss >> v) row.push_back(v - 1);
            if ((int)row.size() != n) return false;
            for (int x : row)
                if (x < 0 || x >= n) return false;
            t.push_back(std::move(row));
        }
        return true;
    };
    if (!read_table(B.under)) return fail("bad under table");
    if (!read_table(B.over)) return fail("bad over table");
    if (next_nonblank()) return fail("trailing content");
    return B;
}

std::string biquandle_to_text(const Biquandle& B) {
    std::ostringstream out;
    out << B.n << "\n";
    auto dump = [&](const std::vector<std::vector<int>>& t) {
        for (const auto& row : t) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? " " : "") << row[c] + 1;
            out << "\n";
        }
    };
    dump(B.under);
    out << "\n";
    dump(B.over);
    return out.str();
}

}  // namespace bqf
