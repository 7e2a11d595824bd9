// Biquandle colorings of a diagram (the homset) via backtracking with
// constraint propagation, emitted in lexicographic order.
#pragma once

#include <vector>

#include "biquandle.hpp"
#include "diagram.hpp"

namespace bqf {

using Coloring = std::vector<int>;  // semiarc id -> element (0-based)

// Colorings in lexicographic order of the full assignment vector.
std::vector<Coloring> enumerate_colorings(const LinkDiagram& D, const Biquandle& B);

i64 counting_invariant(const LinkDiagram& D, const Biquandle& B);

// Reference brute-force enumeration (n^S filter), for cross-checking.
std::vector<Coloring> colorings_brute(const LinkDiagram& D, const Biquandle& B);

}  // namespace bqf
