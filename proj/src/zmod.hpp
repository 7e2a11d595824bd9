// Exact linear algebra over Z_m (m possibly composite) and over direct sums
// of cyclic groups.  Kernels of homogeneous systems are parametrized by a
// Howell-form generator basis, which gives duplicate-free enumeration even
// when m has zero divisors.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bqf {

using i64 = std::int64_t;
using Vec = std::vector<i64>;

// Finite abelian group Z_{m1} + ... + Z_{mk}; empty moduli = trivial group.
struct CoeffGroup {
    std::vector<i64> moduli;

    std::size_t components() const { return moduli.size(); }
    i64 order() const;
    std::string to_string() const;                   // "m1xm2x..."
    static std::optional<CoeffGroup> parse(const std::string& spec);
};

// Element of a CoeffGroup: one residue per component.
struct GroupElem {
    Vec residues;

    bool operator==(const GroupElem&) const = default;
    bool operator<(const GroupElem& o) const { return residues < o.residues; }
};

GroupElem group_zero(const CoeffGroup& g);
GroupElem group_add(const CoeffGroup& g, const GroupElem& a, const GroupElem& b);
GroupElem group_neg(const CoeffGroup& g, const GroupElem& a);
std::string group_elem_str(const GroupElem& e);      // "3" or "(1,0)"
std::optional<GroupElem> parse_group_elem(const CoeffGroup& g, const std::string& text);

// Dense row-major matrix with entries reduced into [0, m).
struct MatMod {
    i64 m = 2;
    int rows = 0, cols = 0;
    Vec a;

    MatMod() = default;
    MatMod(i64 mod, int r, int c) : m(mod), rows(r), cols(c), a((std::size_t)r * c, 0) {}
    i64& at(int r, int c) { return a[(std::size_t)r * cols + c]; }
    i64 at(int r, int c) const { return a[(std::size_t)r * cols + c]; }
    bool operator==(const MatMod&) const = default;
};

// Howell normal form: unique canonical form for the row span over Z_m.
MatMod howell_form(const MatMod& M);

// Kernel {x : M x = 0 (mod m)} described by Howell-form generators.  Every
// kernel element is sum(c_i * gen_i) for exactly one coefficient tuple with
// 0 <= c_i < order_i.
struct KernelDesc {
    i64 m = 2;
    int cols = 0;
    std::vector<Vec> gens;   // Howell-form rows
    Vec orders;              // orders[i] = m / leading entry of gens[i]

    i64 size() const;
    // Streams every kernel element exactly once; stop early by returning false.
    void for_each(const std::function<bool(const Vec&)>& fn) const;
    std::vector<Vec> all() const;   // materialized (small kernels only)
};

KernelDesc kernel(const MatMod& M);

// Membership of `target` in the row span of a Howell-form matrix.
bool in_span(const Vec& target, const std::vector<Vec>& howell_rows, i64 m);

// target = a + b with a in K1, b in K2?  Decided by span membership of the
// stacked generator matrix; on success the witness pair (a, b) is returned.
struct SumWitness {
    Vec a, b;
};
std::optional<SumWitness> in_subgroup_sum(const Vec& target,
                                          const KernelDesc& K1,
                                          const KernelDesc& K2);

// Integer-coefficient homogeneous system solved independently per component
// modulus of G.  Returns one KernelDesc per component.
std::vector<KernelDesc> solve_over_group(const std::vector<Vec>& int_rows,
                                         int cols, const CoeffGroup& G);

// Number of solutions over G (product of per-component kernel sizes).
i64 solution_count(const std::vector<KernelDesc>& per_component);

// Streams solutions over G as vectors of GroupElem (length = cols);
// enumeration order is the mixed-radix product of per-component orders.
void enumerate_group_solutions(const std::vector<KernelDesc>& per_component,
                               const CoeffGroup& G, int cols,
                               const std::function<bool(const std::vector<GroupElem>&)>& fn);

}  // namespace bqf
