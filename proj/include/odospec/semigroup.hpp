#ifndef ODOSPEC_SEMIGROUP_HPP
#define ODOSPEC_SEMIGROUP_HPP

#include <set>
#include <vector>

#include "odospec/diffop.hpp"

namespace odospec {

/// Numerical semigroup of operator orders, tabulated up to an explicit bound.
/// All membership claims are quantified over that bound.
struct NumericalSemigroup {
    std::vector<int> generators;
    int bound = 0;
    std::vector<bool> member;  // member[d] for d = 0..bound
    std::set<int> gaps;        // non-members below the conductor (or below bound)
    int conductor = -1;        // least d0 with every d >= d0 a member; -1 if not within bound
    bool coprime = true;       // gcd of generators is 1 (finite gap set)

    bool contains(int d) const { return d >= 0 && d <= bound && member[static_cast<size_t>(d)]; }
};

/// True iff some pair of the given orders is coprime (the rank-1 criterion).
bool rank1_check(const std::vector<int>& orders);

/// Membership table, gaps and conductor. Default bound: 4 * (product of the
/// two smallest generators), large enough for every conductor claim made.
NumericalSemigroup semigroup_from_generators(const std::vector<int>& gens, int bound = -1);

/// P^a Q^b of order d with a*ord(P) + b*ord(Q) = d; the exponent pair is the
/// minimal-b solution of the Bezout construction.
DiffOp element_of_order(const DiffOp& p, const DiffOp& q, int d);

struct CodimResult {
    int count = 0;       // #(N \ (N + d))
    bool equals_d = false;
};
/// dim(A/PA) computed as #(N \ (N + d)) by enumeration over the table.
CodimResult degree_via_codim(const NumericalSemigroup& sg, int d);

} // namespace odospec

#endif
