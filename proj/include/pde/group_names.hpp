#pragma once

#include <string>
#include <vector>

#include "pde/bitset.hpp"
#include "pde/symmetry_group.hpp"

namespace pde {

// Multiplication table of a quotient Gamma / N for N normal in Gamma.
struct QuotientTable {
    std::vector<std::vector<int>> mult;  // identity coset at 0
    int order() const { return static_cast<int>(mult.size()); }
};

QuotientTable quotient_table(const SignedGroup& G, const Bitset& gamma, const Bitset& normal);

// Standard name by invariants (order, abelian type, involutions, ...):
// cyclic and abelian products, dihedral, S3/S4/S5, A4/A5, Q; fallback G<n>.
std::string group_name(const QuotientTable& t);
std::string subgroup_name(const SignedGroup& G, const Bitset& members);

}  // namespace pde
