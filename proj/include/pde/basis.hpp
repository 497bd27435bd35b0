#pragma once

#include <vector>

#include "pde/digraph.hpp"
#include "pde/isotypic.hpp"
#include "pde/spectrum.hpp"

namespace pde {

// Orthonormal eigenbasis of L in which every vector lies in a single
// isotypic component of the full signed group.
struct SymmetryAdaptedBasis {
    Mat psi;                    // n x m columns
    Vec lambda;                 // eigenvalue per column
    std::vector<int> comp_tag;  // component index within the Gamma_0 decomposition
    bool orbit_fallback = false;

    int size() const { return static_cast<int>(lambda.size()); }
};

// Seeds each component with the eigenbasis of L restricted to
// V^(k) ∩ fix(Gamma_{j_k}) for the first emitted arrow Gamma_0 -k-> Gamma_j,
// then extends over the group orbit by Gram-Schmidt so the seed survives.
SymmetryAdaptedBasis symmetry_adapted_basis(const Mat& L, const SignedGroup& G,
                                            const SymmetryList& S,
                                            const IsotypicDecomposition& dec0,
                                            const std::vector<BifurcationArrow>& arrows);

// Coordinates of every component basis in the eigenbasis: [B_i^(k)]_Psi.
struct ProjectionBasis {
    int subgroup = -1;
    int comp = -1;
    Mat coords;  // m x dim, orthonormal columns
};

std::vector<ProjectionBasis> projection_bases(const SymmetryAdaptedBasis& basis,
                                              const std::vector<IsotypicDecomposition>& dec);

}  // namespace pde
