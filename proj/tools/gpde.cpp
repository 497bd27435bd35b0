#include <filesystem>
#include <iostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "pde/builtin_graphs.hpp"
#include "pde/pipeline.hpp"
#include "pde/postprocess.hpp"

namespace fs = std::filesystem;

namespace {

struct CliOverrides {
    std::string config;
    std::string out;
    std::string nonlinearity;
    std::string format = "svg";
    double s_min = std::numeric_limits<double>::quiet_NaN();
    double s_max = std::numeric_limits<double>::quiet_NaN();
    double epsilon = std::numeric_limits<double>::quiet_NaN();
    long long seed = -1;
    int threads = 0;
};

pde::RunConfig effective_config(const CliOverrides& cli) {
    pde::RunConfig rc = pde::read_run_config(cli.config);
    if (!cli.out.empty()) rc.out_dir = cli.out;
    if (!cli.nonlinearity.empty()) rc.nonlinearity = cli.nonlinearity;
    if (!std::isnan(cli.s_min)) rc.s_min = cli.s_min;
    if (!std::isnan(cli.s_max)) rc.s_max = cli.s_max;
    if (!std::isnan(cli.epsilon)) rc.epsilon = cli.epsilon;
    if (cli.seed >= 0) rc.seed = static_cast<uint64_t>(cli.seed);
    if (cli.threads > 0) rc.threads = cli.threads;
    if (rc.threads > 0) omp_set_num_threads(rc.threads);
    return rc;
}

pde::Graph config_graph(const pde::RunConfig& rc) {
    if (!rc.edgelist.empty()) return pde::read_edgelist_file(rc.edgelist);
    return pde::builtin_graph(rc.graph);
}

void do_analyze(const pde::RunConfig& rc) {
    pde::AnalyzeOptions opts;
    opts.odd = pde::make_nonlinearity(rc.nonlinearity, rc.alpha, rc.beta).odd();
    opts.layout_restarts = rc.layout_restarts;
    opts.seed = rc.seed;
    pde::Preprocess pre = pde::analyze(config_graph(rc), opts);
    pde::write_artifacts(pre, rc.out_dir);
    std::cout << "analyze: n=" << pre.graph.vertex_count() << " |Aut|=" << pre.auts.size()
              << " symmetries=" << pre.S.groups.size() << " types=" << pre.S.types.size()
              << " arrows=" << pre.arrows.size() << "\n";
}

void do_solve(const pde::RunConfig& rc) {
    pde::LoadedArtifacts art = pde::load_artifacts(rc.out_dir);
    pde::RunResult run = pde::run_solver(rc.solver_config(), art.view());
    pde::write_run_outputs(run, rc.out_dir);
    std::cout << "solve: branches=" << run.live_branch_count()
              << " bifurcations=" << run.bifurcations.size()
              << " warnings=" << run.warnings.size() << "\n";
}

void do_render(const pde::RunConfig& rc, const std::string& format) {
    pde::LoadedArtifacts art = pde::load_artifacts(rc.out_dir);
    pde::LoadedRun run =
        pde::parse_solutions(pde::slurp((fs::path(rc.out_dir) / "solutions.txt").string()),
                             pde::slurp((fs::path(rc.out_dir) / "bifurcations.txt").string()),
                             art.basis);
    // action values are not stored in the solutions file
    pde::Problem prob;
    prob.basis = &art.basis;
    prob.f = pde::make_nonlinearity(rc.nonlinearity, rc.alpha, rc.beta);
    for (auto& br : run.branches) {
        for (auto& p : br.points) {
            p.action = pde::action(prob, p.a, p.s);
            if (p.sym >= 0) br.sym = p.sym;
        }
    }

    auto y = pde::SchematicFunction::ones(art.graph.vertex_count());
    pde::spit((fs::path(rc.out_dir) / "diagram.txt").string(),
              pde::diagram_export(run.branches, y));

    std::vector<pde::SignedSymmetry> auts;
    for (int g = 0; g < art.G.order(); ++g)
        if (art.G.element(g).sign > 0) auts.push_back(art.G.element(g));

    std::vector<std::pair<int, std::string>> contour_files;
    if (format == "svg") {
        fs::create_directories(fs::path(rc.out_dir) / "contours");
        for (const auto& br : run.branches) {
            if (br.points.empty()) continue;
            const pde::SolutionPoint* rep = &br.points.front();
            for (const auto& p : br.points)
                if (p.norm1 > rep->norm1) rep = &p;
            pde::Vec chosen = pde::contour_select(rep->u, art.layout, auts);
            std::string file = "contours/branch_" + std::to_string(br.id) + ".svg";
            pde::spit((fs::path(rc.out_dir) / file).string(),
                      pde::contour_export(chosen, art.layout, art.graph));
            contour_files.push_back({br.id, file});
        }
    }

    pde::ReportInputs ri;
    ri.branches = &run.branches;
    ri.bifurcations = &run.bifurcations;
    ri.stats_text = pde::slurp((fs::path(rc.out_dir) / "stats.txt").string());
    for (size_t i = 0; i < art.S.groups.size(); ++i) ri.sym_type.push_back(art.S.type_of[i]);
    try {
        std::string names = pde::slurp((fs::path(rc.out_dir) / "symmetry_names.txt").string());
        std::istringstream in(names);
        std::string line;
        ri.sym_names.assign(art.S.groups.size(), "");
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            size_t idx;
            std::string name;
            if (ls >> idx >> name && idx < ri.sym_names.size()) ri.sym_names[idx] = name;
        }
    } catch (const pde::Error&) {
        // names are optional
    }
    ri.contours = contour_files;
    pde::spit((fs::path(rc.out_dir) / "report.md").string(), pde::report(ri));
    std::cout << "render: diagram.txt, report.md";
    if (!contour_files.empty()) std::cout << ", " << contour_files.size() << " contour plots";
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bifurcation analysis for -Lu + f_s(u) = 0 on graphs"};
    app.require_subcommand(1);
    CliOverrides cli;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* opt = cmd->add_option("--config", cli.config, "run input file (key = value)");
        if (needs_config) opt->required();
        cmd->add_option("--out", cli.out, "output directory override");
        cmd->add_option("--seed", cli.seed, "random seed override");
        cmd->add_option("--nonlinearity", cli.nonlinearity, "nonlinearity id override");
        cmd->add_option("--s-min", cli.s_min, "window lower bound override");
        cmd->add_option("--s-max", cli.s_max, "window upper bound override");
        cmd->add_option("--epsilon", cli.epsilon, "cylinder radius override");
        cmd->add_option("--threads", cli.threads, "OpenMP thread count");
        cmd->add_option("--format", cli.format, "render format: svg, txt, dot")
            ->check(CLI::IsMember({"svg", "txt", "dot"}));
    };

    auto* analyze = app.add_subcommand("analyze", "preprocessing: layout, groups, digraph, basis");
    add_common(analyze, true);
    auto* solve = app.add_subcommand("solve", "continuation from existing preprocessing");
    add_common(solve, true);
    auto* render = app.add_subcommand("render", "diagrams, contours and report from a solve");
    add_common(render, true);
    auto* all = app.add_subcommand("all", "full pipeline");
    add_common(all, true);

    std::string gen_name, gen_out;
    auto* gen = app.add_subcommand("gen", "write a builtin edgelist");
    gen->add_option("name", gen_name, "path-N, cycle-N, petersen, dodecahedron, soccerball, cayley-z5, cayley-s3, cayley-q8")
        ->required();
    gen->add_option("--out", gen_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            std::string text = pde::format_edgelist(pde::builtin_graph(gen_name));
            if (gen_out.empty())
                std::cout << text;
            else
                pde::spit(gen_out, text);
            return 0;
        }
        pde::RunConfig rc = effective_config(cli);
        if (analyze->parsed()) {
            do_analyze(rc);
        } else if (solve->parsed()) {
            do_solve(rc);
        } else if (render->parsed()) {
            do_render(rc, cli.format);
        } else if (all->parsed()) {
            do_analyze(rc);
            do_solve(rc);
            do_render(rc, cli.format);
        }
    } catch (const pde::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 9;
    }
    return 0;
}
