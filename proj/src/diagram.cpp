#include "diagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace bqf {

namespace {

// Fills comp/ncomp from the successor structure; returns false when the
// semiarc cycles are not closed (every crossing-borne semiarc needs exactly
// one successor).
bool finalize(LinkDiagram& D, std::string* err) {
    std::vector<int> nxt(D.S, -1), in_seen(D.S, 0), out_seen(D.S, 0);
    for (const Crossing& c : D.crossings) {
        for (int e : {c.ui, c.oi}) ++in_seen[e];
        for (int e : {c.uo, c.oo}) ++out_seen[e];
        nxt[c.ui] = c.uo;
        nxt[c.oi] = c.oo;
    }
    std::set<int> freeset(D.free_semiarcs.begin(), D.free_semiarcs.end());
    if (freeset.size() != D.free_semiarcs.size()) {
        if (err) *err = "duplicate O line";
        return false;
    }
    for (int e = 0; e < D.S; ++e) {
        bool free_loop = freeset.count(e) > 0;
        int want = free_loop ? 0 : 1;
        if (in_seen[e] != want || out_seen[e] != want) {
            if (err)
                *err = "semiarc " + std::to_string(e + 1) +
                       " must appear exactly once as input and once as output";
            return false;
        }
    }
    D.comp.assign(D.S, -1);
    D.ncomp = 0;
    for (int e = 0; e < D.S; ++e) {
        if (D.comp[e] >= 0) continue;
        int id = D.ncomp++;
        if (freeset.count(e)) {
            D.comp[e] = id;
            continue;
        }
        int x = e;
        while (D.comp[x] < 0) {
            D.comp[x] = id;
            x = nxt[x];
        }
    }
    return true;
}

}  // namespace

std::optional<LinkDiagram> parse_diagram(const std::string& text, std::string* err) {
    LinkDiagram D;
    std::vector<std::array<int, 5>> raw;  // sign, ui, oi, uo, oo (1-based ids)
    std::vector<int> raw_free;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& m) -> std::optional<LinkDiagram> {
        if (err) *err = "line " + std::to_string(lineno) + ": " + m;
        return std::nullopt;
    };
    int max_id = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "X") {
            std::string sgn;
            int a, b, c, d;
            if (!(ls >> sgn >> a >> b >> c >> d) || (sgn != "+" && sgn != "-"))
                return fail("expected 'X <+|-> <ui> <oi> <uo> <oo>'");
            if (a < 1 || b < 1 || c < 1 || d < 1) return fail("semiarc ids are positive");
            raw.push_back({sgn == "+" ? 1 : -1, a, b, c, d});
            max_id = std::max({max_id, a, b, c, d});
        } else if (tag == "O") {
            int a;
            if (!(ls >> a) || a < 1) return fail("expected 'O <semiarc>'");
            raw_free.push_back(a);
            max_id = std::max(max_id, a);
        } else {
            return fail("unknown record '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) return fail("trailing tokens");
    }
    D.S = max_id;
    for (const auto& r : raw)
        D.crossings.push_back({r[0], r[1] - 1, r[2] - 1, r[3] - 1, r[4] - 1});
    for (int f : raw_free) D.free_semiarcs.push_back(f - 1);
    lineno = 0;
    if (!finalize(D, err)) return std::nullopt;
    return D;
}

std::string diagram_to_text(const LinkDiagram& D) {
    std::ostringstream out;
    for (const Crossing& c : D.crossings)
        out << "X " << (c.sign > 0 ? "+" : "-") << " " << c.ui + 1 << " " << c.oi + 1
            << " " << c.uo + 1 << " " << c.oo + 1 << "\n";
    for (int f : D.free_semiarcs) out << "O " << f + 1 << "\n";
    return out.str();
}

std::vector<Route> routes(const LinkDiagram& D, int order, RouteKind kind) {
    std::vector<Route> out;
    if (order == 1) {
        std::set<int> seen;
        for (const Crossing& c : D.crossings)
            for (int e : {c.ui, c.oi, c.uo, c.oo})
                if (seen.insert(e).second) out.push_back({{e}, 0});
        std::sort(out.begin(), out.end(),
                  [](const Route& a, const Route& b) { return a.edges < b.edges; });
        return out;
    }
    for (const Crossing& c : D.crossings) {
        int k = c.sign < 0 ? 1 : 0;
        if (kind == RouteKind::Through || kind == RouteKind::Complete) {
            out.push_back({{c.ui, c.uo}, k});
            out.push_back({{c.oi, c.oo}, k});
        }
        if (kind == RouteKind::Crooked || kind == RouteKind::Complete) {
            out.push_back({{c.ui, c.oo}, k});
            out.push_back({{c.oi, c.uo}, k});
        }
    }
    return out;
}

int crossing_free_components(const LinkDiagram& D) {
    return (int)D.free_semiarcs.size();
}

std::optional<LinkDiagram> convert_pd(const std::string& text, std::string* err) {
    std::vector<std::array<int, 4>> quads;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& m) -> std::optional<LinkDiagram> {
        if (err) *err = "line " + std::to_string(lineno) + ": " + m;
        return std::nullopt;
    };
    int max_edge = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        // Accept "PD X(a,b,c,d)" or "X(a,b,c,d)"; multiple per line allowed.
        std::size_t pos = 0;
        bool any = false;
        while ((pos = line.find("X(", pos)) != std::string::npos) {
            std::size_t close = line.find(')', pos);
            if (close == std::string::npos) return fail("unterminated X(...)");
            std::string body = line.substr(pos + 2, close - pos - 2);
            std::replace(body.begin(), body.end(), ',', ' ');
            std::stringstream bs(body);
            std::array<int, 4> q;
            if (!(bs >> q[0] >> q[1] >> q[2] >> q[3])) return fail("bad X(...) quadruple");
            for (int e : q) {
                if (e < 1) return fail("edge labels are positive");
                max_edge = std::max(max_edge, e);
            }
            quads.push_back(q);
            pos = close + 1;
            any = true;
        }
        std::string rest;
        std::stringstream check(line);
        if (!any && (check >> rest) && rest != "PD") return fail("expected PD X(...) records");
    }
    if (quads.empty()) {
        if (err) *err = "no crossings";
        return std::nullopt;
    }
    int m2 = max_edge;  // edges are numbered 1..2n along the link
    LinkDiagram D;
    D.S = m2;
    for (const auto& q : quads) {
        int a = q[0], b = q[1], c = q[2], d = q[3];
        // Quadruple is CCW from the incoming under-edge: under strand a -> c,
        // over strand occupies slots b and d.  The over strand runs in the
        // direction of increasing edge label (successor mod 2n).
        bool b_to_d;
        if (d == b + 1) b_to_d = true;
        else if (b == d + 1) b_to_d = false;
        else b_to_d = d < b;  // label wrap-around at a component boundary
        if (b_to_d) {
            // over enters at b (CCW-after the under-in): left-handed crossing
            D.crossings.push_back({-1, a - 1, b - 1, c - 1, d - 1});
        } else {
            D.crossings.push_back({+1, a - 1, d - 1, c - 1, b - 1});
        }
    }
    lineno = 0;
    if (!finalize(D, err)) return std::nullopt;
    return D;
}

}  // namespace bqf
