#include "pde/pipeline.hpp"

#include <filesystem>

#include "pde/digraph.hpp"
#include "pde/group_names.hpp"

namespace pde {

Preprocess analyze(const Graph& g, const AnalyzeOptions& opts) {
    Preprocess pre;
    pre.graph = g;
    pre.L = laplacian(g);
    pre.spectrum = symmetric_eigen(pre.L);
    pre.layout = spring_layout(g, opts.layout_restarts, opts.seed);
    pre.auts = automorphisms(g, opts.aut_budget);
    pre.G = build_gamma0(pre.auts, opts.odd);
    pre.S = isotropy_symmetries(pre.G, opts.subgroup_budget);
    for (const auto& sub : pre.S.groups) {
        pre.tables.push_back(character_table(pre.G, sub.members));
        pre.dec.push_back(isotypic_decomposition(pre.G, sub.members, pre.tables.back()));
        pre.sym_names.push_back(subgroup_name(pre.G, sub.members));
    }
    pre.arrows = bifurcation_arrows(pre.G, pre.S, pre.dec);
    pre.cond = condensation_classes(pre.G, pre.S, opts.aut_gamma_budget);
    pre.basis = symmetry_adapted_basis(pre.L, pre.G, pre.S, pre.dec[0], pre.arrows);
    return pre;
}

void write_artifacts(const Preprocess& pre, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    auto path = [&](const char* name) { return (fs::path(dir) / name).string(); };

    spit(path("edgelist.txt"), format_edgelist(pre.graph));
    spit(path("layout.txt"), format_layout(pre.layout.best));
    {
        std::string alts;
        for (const auto& alt : pre.layout.alternates) {
            alts += "# complexity " + std::to_string(alt.complexity) + "\n";
            alts += format_layout(alt);
            alts += "\n";
        }
        spit(path("layout_alternates.txt"), alts);
    }
    spit(path("eigen.txt"), format_eigen(pre.spectrum));
    spit(path("permutations.txt"), format_permutations(pre.G));
    spit(path("symmetries.txt"), format_symmetries(pre.S));
    spit(path("isotypic_meta.txt"), format_isotypic_meta(pre.dec));

    // component bases in vertex coordinates, spec header "i k dim"
    std::vector<ProjectionBasis> vertex_bases;
    for (size_t i = 0; i < pre.dec.size(); ++i)
        for (size_t c = 0; c < pre.dec[i].comps.size(); ++c) {
            ProjectionBasis b;
            b.subgroup = static_cast<int>(i);
            b.comp = static_cast<int>(c);
            b.coords = pre.dec[i].comps[c].basis;
            vertex_bases.push_back(std::move(b));
        }
    spit(path("projbases_vertex.txt"), format_projection_bases(vertex_bases));
    spit(path("projbases_psi.txt"),
         format_projection_bases(projection_bases(pre.basis, pre.dec)));
    spit(path("basis.txt"), format_basis(pre.basis));
    spit(path("arrows.txt"), format_arrow_table(pre.arrows));
    spit(path("digraph.dot"), export_digraph(pre.G, pre.S, pre.arrows, pre.cond, false));
    spit(path("digraph_condensed.dot"), export_digraph(pre.G, pre.S, pre.arrows, pre.cond, true));
    {
        std::string names;
        for (size_t i = 0; i < pre.sym_names.size(); ++i)
            names += std::to_string(i) + " " + pre.sym_names[i] + "\n";
        spit(path("symmetry_names.txt"), names);
    }
}

LoadedArtifacts load_artifacts(const std::string& dir) {
    namespace fs = std::filesystem;
    auto path = [&](const char* name) { return (fs::path(dir) / name).string(); };

    LoadedArtifacts art;
    art.graph = read_edgelist_file(path("edgelist.txt"));
    art.layout = parse_layout(slurp(path("layout.txt")));
    art.G = parse_permutations(slurp(path("permutations.txt")));
    art.S = parse_symmetries(slurp(path("symmetries.txt")), art.G);
    auto vertex_bases = parse_projection_bases(slurp(path("projbases_vertex.txt")));
    art.dec = parse_isotypic(slurp(path("isotypic_meta.txt")), vertex_bases,
                             static_cast<int>(art.S.groups.size()));
    art.arrows = parse_arrow_table(slurp(path("arrows.txt")));
    art.basis = parse_basis(slurp(path("basis.txt")));
    return art;
}

void write_run_outputs(const RunResult& run, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    auto path = [&](const char* name) { return (fs::path(dir) / name).string(); };
    spit(path("solutions.txt"), format_solutions(run));
    spit(path("bifurcations.txt"), format_bifurcations(run));
    spit(path("stats.txt"), format_stats(run));
    if (!run.warnings.empty()) {
        std::string w;
        for (const auto& s : run.warnings) w += s + "\n";
        spit(path("warnings.txt"), w);
    }
}

}  // namespace pde
