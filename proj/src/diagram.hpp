// Oriented classical/virtual link diagrams as signed crossing lists over
// semiarcs, plus route extraction.  Virtual crossings are never vertices:
// a semiarc runs between consecutive classical crossing points, so the
// diagram format simply omits virtual crossings.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bqf {

struct Crossing {
    int sign;            // +1 or -1
    int ui, oi, uo, oo;  // 0-based semiarc ids: under-in, over-in, under-out, over-out
};

struct LinkDiagram {
    int S = 0;                       // total semiarcs (including free loops)
    std::vector<Crossing> crossings;
    std::vector<int> free_semiarcs;  // one semiarc per crossing-free component
    std::vector<int> comp;           // semiarc -> component id
    int ncomp = 0;
};

enum class RouteKind { Through, Crooked, Complete };

struct Route {
    std::vector<int> edges;  // 1 or 2 semiarc ids
    int k = 0;               // negative internal crossings; sign factor (-1)^k
};

// Text format, one crossing per line: "X <sign> <ui> <oi> <uo> <oo>" with
// sign in {+,-} and 1-based semiarc ids; "O <id>" declares a crossing-free
// unknot component; '#' starts a comment.
std::optional<LinkDiagram> parse_diagram(const std::string& text, std::string* err = nullptr);
std::string diagram_to_text(const LinkDiagram& D);

std::vector<Route> routes(const LinkDiagram& D, int order, RouteKind kind);
int crossing_free_components(const LinkDiagram& D);

// Classical PD ingestion: lines "PD X(a,b,c,d)" (or bare "X(a,b,c,d)"),
// quadruple counterclockwise from the incoming under-edge; the over strand
// runs along the edge-label successor direction, which also fixes the sign.
std::optional<LinkDiagram> convert_pd(const std::string& text, std::string* err = nullptr);

}  // namespace bqf
