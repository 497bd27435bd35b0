#pragma once

#include <string>
#include <vector>

#include "pde/isotypic.hpp"
#include "pde/symmetry_group.hpp"

namespace pde {

enum class ArrowStyle { solid, dashed, dotted };

// One symmetry-breaking bifurcation arrow Gamma_i --k--> Gamma_j, with the
// daughter deduplicated over Gamma_i-conjugacy.
struct BifurcationArrow {
    int mother = -1;          // index into the symmetry list
    int comp = -1;            // 0-based component index in the mother's decomposition
    int daughter = -1;        // representative daughter index
    std::string bif_group;    // name of Gamma_i / Gamma'_{i,k}
    int quotient_order = 0;   // |N_{Gamma_i}(Gamma_j) / Gamma_j|
    int fix_dim = 0;          // dim fix(Gamma_j) ∩ V^(k)
    ArrowStyle style = ArrowStyle::dotted;
};

std::vector<BifurcationArrow> bifurcation_arrows(const SignedGroup& G, const SymmetryList& S,
                                                 const std::vector<IsotypicDecomposition>& dec,
                                                 uint64_t seed = 0xA770);

struct CondensationResult {
    bool computed = false;               // false when the Aut(Gamma_0) budget was exceeded
    std::vector<std::vector<int>> classes;  // partition of symmetry-type indices
    std::string warning;
};

CondensationResult condensation_classes(const SignedGroup& G, const SymmetryList& S,
                                        long long budget = 5'000'000);

// DOT text; `condensed` collapses types into condensation classes and
// annotates edge multiplicities.  Vertical rank follows subgroup order.
std::string export_digraph(const SignedGroup& G, const SymmetryList& S,
                           const std::vector<BifurcationArrow>& arrows,
                           const CondensationResult& cond, bool condensed);

// Sidecar table consumed by the continuation solver:
// one line per arrow, "i k j group quotient_order style fixdim".
std::string format_arrow_table(const std::vector<BifurcationArrow>& arrows);
std::vector<BifurcationArrow> parse_arrow_table(const std::string& text);

}  // namespace pde
