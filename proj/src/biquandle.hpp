// Finite biquandles: operation tables, axiom verification, inverse maps and
// the standard constructions (Alexander, conjugation, Wada).
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zmod.hpp"

namespace bqf {

// Elements are 0-indexed internally; all I/O is 1-indexed to match the usual
// table conventions.
struct Biquandle {
    int n = 0;
    std::vector<std::vector<int>> under;  // under[x][y] = x |> y
    std::vector<std::vector<int>> over;   // over[x][y]  = x |>bar y
};

struct AxiomViolation {
    std::string axiom;          // "i", "ii-beta", "ii-alpha", "ii-S", "iii-1", ...
    std::vector<int> witness;   // 1-indexed witness tuple
};

struct AxiomReport {
    bool valid = false;
    std::vector<AxiomViolation> violations;
};

AxiomReport verify(const Biquandle& B);
bool is_quandle(const Biquandle& B);

struct InverseMaps {
    // inv_beta[y][v] = x with under[x][y] == v; likewise inv_alpha for over.
    std::vector<std::vector<int>> inv_beta, inv_alpha;
    // inv_S maps (over[y][x], under[x][y]) back to (x, y), flattened n*n.
    std::vector<std::pair<int, int>> inv_S;
};
InverseMaps inverse_maps(const Biquandle& B);

// x |> y = t*x + (s-t)*y,  x |>bar y = s*x over Z_m; t, s must be units.
std::optional<Biquandle> alexander_biquandle(i64 m, i64 t, i64 s);

// Group-based constructions; `mult` is an n x n group multiplication table
// (0-indexed, validated).  conjugation: x |> y = y^-n x y^n, x |>bar y = x.
// wada: x |> y = y^-1 x y^-1, x |>bar y = x^-1 (as printed; verify() is the
// arbiter of validity).
std::optional<Biquandle> conjugation_biquandle(const std::vector<std::vector<int>>& mult, int pow);
std::optional<Biquandle> wada_biquandle(const std::vector<std::vector<int>>& mult);

// Text format: line "n", n rows of the under table, blank line, n rows of the
// over table; entries 1..n; '#' starts a comment line.
std::optional<Biquandle> parse_biquandle(const std::string& text, std::string* err = nullptr);
std::string biquandle_to_text(const Biquandle& B);

}  // namespace bqf
