#pragma once

#include <map>
#include <string>
#include <vector>

#include "pde/digraph.hpp"
#include "pde/gnga.hpp"

namespace pde {

struct SolverConfig {
    double s_min = -4.0, s_max = 4.0;
    double norm_max = 40.0;           // window bound on ||u||_1
    double c_min = 0.01, c_max = 0.4; // speed range
    double c_init = 0.1;
    double tau = 0.002;               // speed underflow threshold
    double epsilon = 0.05;            // cylinder radius, scaled by max(1, ||u*||)
    uint64_t seed = 1;
    std::string nonlinearity = "cubic";
    double alpha = 1.0, beta = 1.0;   // cubic_ab parameters
    int m = 0;                        // Galerkin size; 0 = n
    std::map<int, int> fnc_override;  // dim -> consecutive no-news budget
    int bif_depth = 10;               // find_bifpoints recursion cap
    int max_branches = 5000;
    double dedup_tol = 1e-5;
    double s0 = std::numeric_limits<double>::quiet_NaN();  // default: s_max
};

// number of consecutive unproductive cGNGA calls tolerated for dimension d
int f_nc(int d);
int f_nc_with_override(int d, const SolverConfig& cfg);

// speed multiplier from the angle of the last three points;
// equals 1 at 0.1 rad, approaches 2 for collinear points
double speed_factor(double angle);

struct SolutionPoint {
    Vec a;
    double s = 0;
    Vec u;            // vertex values, cached
    double gnorm = 0;
    int mi = 0;
    int sym = -1;     // index into the symmetry list
    double action = 0;
    double norm1 = 0;
    bool anomalous_constant = false;
    bool degenerate = false;
};

struct Branch {
    int id = -1;
    int sym = -1;
    int parent_bif = -1;  // -1 for the seed branch
    std::vector<SolutionPoint> points;
    std::string termination;
    bool duplicate = false;  // merged into an earlier branch after the run
    int duplicate_of = -1;
};

struct BifurcationRecord {
    int id = -1;
    int mother_branch = -1;
    int mother_sym = -1;
    Vec a_star;
    Vec u_star;
    double s_star = 0;
    int dim_e = 0;
    std::vector<int> comps;   // components of the mother decomposition meeting E
    int degeneracy = 0;       // 0 none, else accidental degeneracy type 1, 2, 3
    std::vector<int> daughters;  // branch ids
    bool audit_ran = false;
    bool audit_ok = false;
};

struct RunArtifacts {
    const SignedGroup* G = nullptr;
    const SymmetryList* S = nullptr;
    const std::vector<IsotypicDecomposition>* dec = nullptr;
    const std::vector<BifurcationArrow>* arrows = nullptr;
    const SymmetryAdaptedBasis* basis = nullptr;
};

struct RunResult {
    std::vector<Branch> branches;
    std::vector<BifurcationRecord> bifurcations;
    GngaStats stats;
    std::vector<std::string> warnings;
    long long follow_failures = 0;

    int live_branch_count() const {
        int c = 0;
        for (const auto& b : branches)
            if (!b.duplicate) ++c;
        return c;
    }
};

RunResult run_solver(const SolverConfig& cfg, const RunArtifacts& art);

}  // namespace pde
