#pragma once

#include <vector>

#include "pde/character.hpp"

namespace pde {

// One real isotypic component V^(k) of a subgroup action on R^n.
struct IsotypicComponent {
    int char_k = -1;        // representative character row
    int indicator = 0;      // Frobenius-Schur: 1 real, 0 complex pair, -1 quaternionic
    int complex_degree = 0; // d~
    int real_degree = 0;    // d; doubled for complex and quaternionic cases
    int dim = 0;            // dim V^(k)
    Mat projector;          // n x n, symmetric idempotent
    Mat basis;              // n x dim, orthonormal columns in vertex coordinates
};

// Components are indexed so that the trivial representation comes first
// (V^(1) = fix) except when -1 is a member, in which case the components
// with chi(-1) = -d are listed first, matching the labeling used for the
// full signed group where only those components are nonzero.
struct IsotypicDecomposition {
    std::vector<IsotypicComponent> comps;
    int trivial_comp = -1;  // position of the trivial-character component
};

IsotypicDecomposition isotypic_decomposition(const SignedGroup& G, const Bitset& members,
                                             const CharacterTable& ct);

}  // namespace pde
