#pragma once

#include <map>
#include <string>
#include <vector>

#include "pde/basis.hpp"
#include "pde/continuation.hpp"
#include "pde/layout.hpp"
#include "pde/spectrum.hpp"

namespace pde {

// ----- run input file (key = value text) -----
struct RunConfig {
    std::string edgelist;      // path to an edgelist file
    std::string graph;         // or a builtin generator name
    std::string out_dir = "out";
    std::string nonlinearity = "cubic";
    double alpha = 1.0, beta = 1.0;
    double s_min = -4.0, s_max = 4.0;
    double norm_max = 40.0;
    double c_min = 0.01, c_max = 0.4, c_init = 0.1, tau = 0.002;
    double epsilon = 0.05;
    uint64_t seed = 1;
    std::map<int, int> fnc;    // keys "fnc<d>"
    int layout_restarts = 8;
    int threads = 0;
    int m = 0;
    double s0 = std::numeric_limits<double>::quiet_NaN();

    SolverConfig solver_config() const;
};

RunConfig parse_run_config(const std::string& text);
RunConfig read_run_config(const std::string& path);

// ----- preprocessing artifacts -----
std::string format_layout(const Layout& l);
Layout parse_layout(const std::string& text);

std::string format_eigen(const Spectrum& s);
Spectrum parse_eigen(const std::string& text);

// one signed permutation per line: sign prefix then the image row
std::string format_permutations(const SignedGroup& G);
SignedGroup parse_permutations(const std::string& text);

std::string format_symmetries(const SymmetryList& S);
SymmetryList parse_symmetries(const std::string& text, const SignedGroup& G);

// projection bases per (i, k): header "i k dim" then one vector per line
std::string format_projection_bases(const std::vector<ProjectionBasis>& bases);
std::vector<ProjectionBasis> parse_projection_bases(const std::string& text);

std::string format_isotypic_meta(const std::vector<IsotypicDecomposition>& dec);
// reconstructs decompositions (bases in vertex coordinates from the given
// per-component blocks; projectors are left empty)
std::vector<IsotypicDecomposition> parse_isotypic(const std::string& meta_text,
                                                  const std::vector<ProjectionBasis>& vertex_bases,
                                                  int subgroup_count);

std::string format_basis(const SymmetryAdaptedBasis& b);
SymmetryAdaptedBasis parse_basis(const std::string& text);

// ----- solver outputs -----
std::string format_solutions(const RunResult& r);
std::string format_bifurcations(const RunResult& r);
std::string format_stats(const RunResult& r);

struct LoadedRun {
    std::vector<Branch> branches;
    std::vector<BifurcationRecord> bifurcations;
};
LoadedRun parse_solutions(const std::string& solutions_text, const std::string& bif_text,
                          const SymmetryAdaptedBasis& basis);

// file helpers
std::string slurp(const std::string& path);
void spit(const std::string& path, const std::string& content);

}  // namespace pde
