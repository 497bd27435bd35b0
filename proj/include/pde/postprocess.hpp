#pragma once

#include <string>
#include <vector>

#include "pde/continuation.hpp"
#include "pde/graph.hpp"
#include "pde/layout.hpp"

namespace pde {

// y_w(u) = sum_i w_i |u_i|; Gamma_0-invariant for constant weights
struct SchematicFunction {
    Vec w;

    static SchematicFunction ones(int n) {
        SchematicFunction f;
        f.w = Vec::Ones(n);
        return f;
    }
    double y(const Vec& u) const { return w.dot(u.cwiseAbs()); }
};

// Columnar text, one polyline per live branch: "branch s y mi sym" rows
// separated by blank lines.
std::string diagram_export(const std::vector<Branch>& branches, const SchematicFunction& y);

// Representative of the Aut(G)-orbit of u minimizing sum_{i<j} u_i u_j |d_ij|
// (or, behind the flag, the number of distinct values u_i u_j |d_ij|), with
// mirror-symmetric plots preferred on ties and lexicographic order last.
Vec contour_select(const Vec& u, const Layout& layout,
                   const std::vector<SignedSymmetry>& auts, bool literal_set_size = false);

// SVG with edges under sign-colored disks of area proportional to |u_i|.
std::string contour_export(const Vec& u, const Layout& layout, const Graph& g);

struct ReportInputs {
    const std::vector<Branch>* branches = nullptr;
    const std::vector<BifurcationRecord>* bifurcations = nullptr;
    std::string stats_text;
    std::vector<std::string> sym_names;   // per subgroup, optional
    std::vector<int> sym_type;            // per subgroup, optional
    std::vector<std::string> warnings;
    std::vector<std::pair<int, std::string>> contours;  // branch id -> file
};

std::string report(const ReportInputs& in);

}  // namespace pde
