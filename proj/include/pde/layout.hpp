#pragma once

#include <vector>

#include "pde/graph.hpp"

namespace pde {

// Planar spring embedding of a graph.
struct Layout {
    std::vector<double> x, y;
    int complexity = 0;      // distinct pairwise distances, 6-decimal buckets
    bool converged = false;

    int size() const { return static_cast<int>(x.size()); }
};

struct LayoutResult {
    Layout best;
    std::vector<Layout> alternates;  // retained non-optimal restarts
};

// Charge/spring force model with Q^2 = 1, eps = 1e-3, nu = 1, D = 1.1 and
// stepsize 0.1.  Runs `restarts` seeded random initial placements (in
// parallel when OpenMP is enabled; the merge is deterministic), keeps the
// minimum-complexity converged layout, and rotates it so the most common
// edge slope is horizontal.
LayoutResult spring_layout(const Graph& g, int restarts, uint64_t seed);

int layout_complexity(const Layout& l);

}  // namespace pde
