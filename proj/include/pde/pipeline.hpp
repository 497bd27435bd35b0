#pragma once

#include <string>
#include <vector>

#include "pde/basis.hpp"
#include "pde/character.hpp"
#include "pde/continuation.hpp"
#include "pde/graph.hpp"
#include "pde/io.hpp"
#include "pde/layout.hpp"

namespace pde {

struct AnalyzeOptions {
    bool odd = true;  // nonlinearity parity decides Gamma_0
    int layout_restarts = 8;
    uint64_t seed = 1;
    long long aut_budget = 10'000'000;
    int subgroup_budget = 100000;
    long long aut_gamma_budget = 5'000'000;
};

// Everything the continuation solver and the postprocessing stages need.
struct Preprocess {
    Graph graph;
    Mat L;
    Spectrum spectrum;
    LayoutResult layout;
    std::vector<SignedSymmetry> auts;
    SignedGroup G;
    SymmetryList S;
    std::vector<CharacterTable> tables;
    std::vector<IsotypicDecomposition> dec;
    std::vector<BifurcationArrow> arrows;
    CondensationResult cond;
    SymmetryAdaptedBasis basis;
    std::vector<std::string> sym_names;

    RunArtifacts view() const {
        RunArtifacts a;
        a.G = &G;
        a.S = &S;
        a.dec = &dec;
        a.arrows = &arrows;
        a.basis = &basis;
        return a;
    }
};

Preprocess analyze(const Graph& g, const AnalyzeOptions& opts = {});

// Writes the full artifact set (layout, eigen, permutations, symmetries,
// projection bases, basis, arrow table, digraphs) into dir.
void write_artifacts(const Preprocess& pre, const std::string& dir);

// Reconstructs the solver inputs from an artifact directory.
struct LoadedArtifacts {
    Graph graph;
    Layout layout;
    SignedGroup G;
    SymmetryList S;
    std::vector<IsotypicDecomposition> dec;
    std::vector<BifurcationArrow> arrows;
    SymmetryAdaptedBasis basis;

    RunArtifacts view() const {
        RunArtifacts a;
        a.G = &G;
        a.S = &S;
        a.dec = &dec;
        a.arrows = &arrows;
        a.basis = &basis;
        return a;
    }
};

LoadedArtifacts load_artifacts(const std::string& dir);

void write_run_outputs(const RunResult& run, const std::string& dir);

}  // namespace pde
