#pragma once

#include <vector>

#include "smashquot/gamma.hpp"
#include "smashquot/unit_group.hpp"

namespace smashquot {

// Quotient datum (G, N, Phi) for the cyclic action Z_M on Gamma_{M,N}:
//   G     subgroup of Z_M = <h>, stored as the sorted list of h-exponents,
//   N     sublattice of T (normal subgroups contained in T),
//   Phi   values on the HNF basis of N, one unit per element of G, extended
//         to all of N multiplicatively.
struct QuotientDatum {
    std::size_t M = 2, N_order = 2;  // ambient Gamma_{M,N}
    std::vector<std::size_t> G;      // h-exponents, sorted, containing 0
    SubgroupHNF N;
    UnitGroupRef value_spec;
    // phi[b][k] = Phi(basis_b)(h^{G[k]})
    std::vector<std::vector<UnitValue>> phi;

    bool phi_is_trivial() const;
    std::size_t g_position(std::size_t h_exp) const;  // index into G
    // Phi at an arbitrary element of N (throws if w is outside N)
    std::vector<UnitValue> phi_at(const std::vector<Int>& w) const;

    static QuotientDatum trivial(const GammaContext& ctx, UnitGroupRef value_spec);
};

struct DatumReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::string str() const;
};

// Defining axioms: G is a subgroup; N is normal (t-stable) and G-stable;
// the cocycle identity Phi(r)(lh) = Phi(l^{-1}.r)(h) Phi(r)(l) on the basis
// for all pairs in G x G; conjugation invariance Phi(t^a . r) = Phi(r).
DatumReport validate_datum(const GammaContext& ctx, const QuotientDatum& d);

// Theorem-backed consequences: Phi(r)(1) = 1, Phi(h.r)(h) = Phi(r^{-1})(h^{-1}),
// and Phi(s^{-1} n s) = Phi(n) on sampled conjugators.  Failures indicate an
// implementation bug, not bad input.
DatumReport derived_consequences(const GammaContext& ctx, const QuotientDatum& d,
                                 unsigned seed = 1);

// true iff every Phi(r) is multiplicative on G (lands in Hom(G, k^x))
bool is_char_valued(const QuotientDatum& d);

}  // namespace smashquot
