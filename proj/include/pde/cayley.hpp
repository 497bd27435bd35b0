#pragma once

#include <string>
#include <vector>

#include "pde/graph.hpp"

namespace pde {

// Abstract finite group given by its multiplication table, identity at 0.
struct GroupTable {
    std::vector<std::vector<int>> mult;
    std::vector<std::string> names;

    int order() const { return static_cast<int>(mult.size()); }
    int inverse(int a) const;
    int element_order(int a) const;
    bool is_involution(int a) const { return a != 0 && mult[a][a] == 0; }
};

GroupTable cyclic_group(int n);
GroupTable dihedral_group(int n);   // order 2n
GroupTable symmetric_group_s3();
GroupTable quaternion_group();

struct DecoratedCayley {
    Graph graph;
    std::vector<int> group_vertices;  // vertex index of each group element
    int aut_order = 0;                // post-hoc automorphism count
    bool verified = false;            // aut_order == group order
};

// Builds a simple undirected graph whose automorphism group realizes the
// given group.  Directed Cayley edges are replaced by decoration gadgets.
// Involutive generator #t contributes the plain edge plus a path of t-1
// extra vertices closing a cycle through both endpoints (symmetric; no
// direction needed).  The first non-involutive generator contributes the
// direct edge, a parallel two-edge path through x, and a tail x--y--g.d^2
// whose skip to the square pins the direction; later non-involutive
// generators #t contribute a chain of t extras with a leaf marking the
// source.  The automorphism group is verified post hoc; on mismatch the
// graph is still returned with verified = false.
DecoratedCayley decorate_cayley(const GroupTable& table, const std::vector<int>& generators,
                                long long aut_budget = 10'000'000);

}  // namespace pde
