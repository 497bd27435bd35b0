#pragma once

#include <vector>

#include "pde/bitset.hpp"
#include "pde/common.hpp"
#include "pde/symmetry_group.hpp"

namespace pde {

// Complex irreducible character table of a subgroup, computed numerically by
// simultaneous diagonalization of the class-sum algebra.
struct CharacterTable {
    int group_order = 0;
    std::vector<std::vector<uint16_t>> classes;  // parent-group element indices
    std::vector<int> class_of;                   // parent element -> class id (-1 outside)
    CMat chi;                                    // rows k, columns classes
    std::vector<int> degrees;                    // complex degrees, chi(e)
    std::vector<int> indicators;                 // Frobenius-Schur, in {-1,0,1}
    std::vector<int> conj_partner;               // k with conj pair; self if real
    int trivial_k = -1;

    int irreducible_count() const { return static_cast<int>(degrees.size()); }
    int class_count() const { return static_cast<int>(classes.size()); }
    Complex value(int k, int element) const { return chi(k, class_of[element]); }
};

CharacterTable character_table(const SignedGroup& G, const Bitset& members,
                               uint64_t seed = 0x5EEDu, int retries = 12);

// (1/|G|) sum_g chi(g^2); throws if the value is not within 1e-6 of an integer.
int frobenius_schur(const CharacterTable& ct, int k, const SignedGroup& G);

}  // namespace pde
