// Fare axiom systems, fare enumeration, total-fare evaluation over the
// homset, multiset/polynomial invariants and decomposability.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biquandle.hpp"
#include "diagram.hpp"
#include "homset.hpp"
#include "zmod.hpp"

namespace bqf {

struct FareTable {
    int order = 1;                 // 1 or 2
    RouteKind kind = RouteKind::Complete;  // order-2 only
    CoeffGroup group;
    int n = 0;                     // biquandle size
    std::vector<GroupElem> values; // order 1: index x; order 2: index x*n+y
};

// Homogeneous integer-coefficient axiom system over the fare unknowns
// (n unknowns at order 1, n^2 at order 2), deduplicated and sorted.
std::vector<Vec> axiom_system(const Biquandle& B, int order, RouteKind kind);

// Kernels of the axiom system, one per component modulus of G.
std::vector<KernelDesc> fare_kernels(const Biquandle& B, int order, RouteKind kind,
                                     const CoeffGroup& G);

i64 fare_count(const Biquandle& B, int order, RouteKind kind, const CoeffGroup& G);

// Streams every fare table exactly once.
void enumerate_fares(const Biquandle& B, int order, RouteKind kind, const CoeffGroup& G,
                     const std::function<bool(const FareTable&)>& fn);

// Direct substitution check against the axiom system (independent of the
// kernel solver).
bool satisfies_axioms(const Biquandle& B, const FareTable& f);

// Signed total fare of one coloring: sum over routes of (-1)^k phi(colors).
GroupElem total_fare(const LinkDiagram& D, const Coloring& c, const FareTable& f);

// Canonical multiset: sorted (value, multiplicity) pairs.
using FareMultiset = std::map<GroupElem, i64>;
FareMultiset fare_multiset(const LinkDiagram& D, const Biquandle& B, const FareTable& f);
// Serial reference evaluation (the parallel version above must match it).
FareMultiset fare_multiset_serial(const LinkDiagram& D, const Biquandle& B, const FareTable& f);

// "4+6x+6x^4" (additive) / "x^4(x-1)^6(x-4)^6" (multiplicative).  The
// multiplicative form requires a cyclic (single-modulus) group.
std::string render_additive(const FareMultiset& M);
std::optional<std::string> render_multiplicative(const FareMultiset& M);

// Complete fare = through fare + crooked fare?  Witness returned when yes.
struct Decomposition {
    FareTable through, crooked;
};
std::optional<Decomposition> decompose(const Biquandle& B, const FareTable& complete_fare);

// Fare file I/O.  Header: "fare order=<1|2> kind=<plain|complete|through|crooked>
// group=<m1[xm2...]> n=<size>"; then one line per tuple "x [y] -> value".
std::optional<FareTable> parse_fare(const std::string& text, std::string* err = nullptr);
std::string fare_to_text(const FareTable& f);

std::string multiset_str(const FareMultiset& M);  // "{4x0, 6x1, 6x4}"

std::string route_kind_str(RouteKind k);  // "through" / "crooked" / "complete"
std::optional<RouteKind> parse_route_kind(const std::string& s);

}  // namespace bqf
