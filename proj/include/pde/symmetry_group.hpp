#pragma once

#include <cstdint>
#include <vector>

#include "pde/bitset.hpp"
#include "pde/graph.hpp"
#include "pde/signed_symmetry.hpp"

namespace pde {

// Finite group of signed symmetries with composition tables.
// Element 0 is the identity; unsigned elements precede signed ones.
class SignedGroup {
public:
    SignedGroup() = default;
    static SignedGroup from_elements(std::vector<SignedSymmetry> elements);

    int order() const { return static_cast<int>(elements_.size()); }
    int degree() const { return n_; }  // acts on R^n
    const SignedSymmetry& element(int i) const { return elements_[i]; }
    const std::vector<SignedSymmetry>& elements() const { return elements_; }

    uint16_t mult(int a, int b) const { return mult_[static_cast<size_t>(a) * order() + b]; }
    uint16_t inverse(int a) const { return inv_[a]; }
    uint16_t conjugate(int g, int h) const {  // g h g^-1
        return mult(mult(g, h), inv_[g]);
    }
    int element_order(int a) const;
    int index_of(const SignedSymmetry& g) const;  // -1 if absent

    // Subgroup generated by the given element indices.
    Bitset closure(const std::vector<uint16_t>& gens) const;
    // Greedy small generating set for a member bitset.
    std::vector<uint16_t> generating_set(const Bitset& members) const;
    Bitset conjugate_set(const Bitset& members, int g) const;

    // Conjugacy classes of group elements (within the whole group).
    std::vector<std::vector<uint16_t>> element_classes() const;

private:
    std::vector<SignedSymmetry> elements_;
    std::vector<uint16_t> mult_;
    std::vector<uint16_t> inv_;
    int n_ = 0;
};

struct Subgroup {
    Bitset members;
    std::vector<uint16_t> gens;
    int order = 0;
};

// Exact fixed-point subspace data for a set of signed permutations,
// built by sign-aware union-find on vertex classes.
struct FixSpace {
    Mat basis;  // n x dim, orthonormal, entries 0 or +-1/sqrt(class size)
    int dim() const { return static_cast<int>(basis.cols()); }
};

// fix(<gens>, R^n); gens indexes into the group.
FixSpace fix_subspace(const SignedGroup& G, const std::vector<uint16_t>& gens);

// Pointwise stabilizer of fix(<gens>) within the whole group (exact test).
Bitset pointwise_stabilizer_of_fix(const SignedGroup& G, const std::vector<uint16_t>& gens);

// All graph automorphisms as unsigned SignedSymmetry, found by
// degree-partition refinement with backtracking.
std::vector<SignedSymmetry> automorphisms(const Graph& g, long long node_budget = 10'000'000);

// Gamma_0 = Aut(G) x Z_2 when the nonlinearity is odd, Aut(G) x {+1} otherwise.
SignedGroup build_gamma0(const std::vector<SignedSymmetry>& auts, bool odd);

// The master list of isotropy subgroups and their conjugacy classes.
struct SymmetryList {
    std::vector<Subgroup> groups;            // Gamma_0 first
    std::vector<int> type_of;                // subgroup index -> type index
    std::vector<std::vector<int>> types;     // type index -> member subgroups
};

SymmetryList isotropy_symmetries(const SignedGroup& G, int subgroup_budget = 100000);

// Elements of G fixing u within tol * max(1, ||u||_inf).
Bitset stabilizer_of_vector(const SignedGroup& G, const Vec& u, double tol = 1e-6);

}  // namespace pde
