#include "pde/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace pde {

namespace {

std::string g15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank) out.push_back(line);
    }
    return out;
}

}  // namespace

SolverConfig RunConfig::solver_config() const {
    SolverConfig cfg;
    cfg.s_min = s_min;
    cfg.s_max = s_max;
    cfg.norm_max = norm_max;
    cfg.c_min = c_min;
    cfg.c_max = c_max;
    cfg.c_init = c_init;
    cfg.tau = tau;
    cfg.epsilon = epsilon;
    cfg.seed = seed;
    cfg.nonlinearity = nonlinearity;
    cfg.alpha = alpha;
    cfg.beta = beta;
    cfg.m = m;
    cfg.fnc_override = fnc;
    cfg.s0 = s0;
    return cfg;
}

RunConfig parse_run_config(const std::string& text) {
    RunConfig rc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw parse_error("config line " + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "edgelist") rc.edgelist = val;
            else if (key == "graph") rc.graph = val;
            else if (key == "out_dir") rc.out_dir = val;
            else if (key == "nonlinearity") rc.nonlinearity = val;
            else if (key == "alpha") rc.alpha = std::stod(val);
            else if (key == "beta") rc.beta = std::stod(val);
            else if (key == "s_min") rc.s_min = std::stod(val);
            else if (key == "s_max") rc.s_max = std::stod(val);
            else if (key == "s0") rc.s0 = std::stod(val);
            else if (key == "norm_max") rc.norm_max = std::stod(val);
            else if (key == "c_min") rc.c_min = std::stod(val);
            else if (key == "c_max") rc.c_max = std::stod(val);
            else if (key == "c_init") rc.c_init = std::stod(val);
            else if (key == "tau") rc.tau = std::stod(val);
            else if (key == "epsilon") rc.epsilon = std::stod(val);
            else if (key == "seed") rc.seed = std::stoull(val);
            else if (key == "layout_restarts") rc.layout_restarts = std::stoi(val);
            else if (key == "threads") rc.threads = std::stoi(val);
            else if (key == "m") rc.m = std::stoi(val);
            else if (key.rfind("fnc", 0) == 0) rc.fnc[std::stoi(key.substr(3))] = std::stoi(val);
            else throw parse_error("unknown config key: " + key);
        } catch (const std::invalid_argument&) {
            throw parse_error("config line " + std::to_string(lineno) + ": bad value for " + key);
        }
    }
    if (rc.edgelist.empty() && rc.graph.empty())
        throw parse_error("config needs either 'edgelist' or 'graph'");
    return rc;
}

RunConfig read_run_config(const std::string& path) { return parse_run_config(slurp(path)); }

// ----- layout -----

std::string format_layout(const Layout& l) {
    std::ostringstream out;
    char buf[80];
    for (int i = 0; i < l.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%d %.6f %.6f\n", i + 1, l.x[i], l.y[i]);
        out << buf;
    }
    return out.str();
}

Layout parse_layout(const std::string& text) {
    Layout l;
    for (const auto& line : nonblank_lines(text)) {
        std::istringstream ls(line);
        int i;
        double x, y;
        if (!(ls >> i >> x >> y)) throw parse_error("malformed layout line: " + line);
        if (static_cast<int>(l.x.size()) < i) {
            l.x.resize(i);
            l.y.resize(i);
        }
        l.x[i - 1] = x;
        l.y[i - 1] = y;
    }
    return l;
}

// ----- eigen data -----

std::string format_eigen(const Spectrum& s) {
    std::ostringstream out;
    out << s.size() << "\n";
    for (int j = 0; j < s.size(); ++j) {
        out << g15(s.values[j]);
        for (int i = 0; i < s.size(); ++i) out << ' ' << g15(s.vectors(i, j));
        out << "\n";
    }
    return out.str();
}

Spectrum parse_eigen(const std::string& text) {
    auto lines = nonblank_lines(text);
    if (lines.empty()) throw parse_error("empty eigen file");
    int n = std::stoi(lines[0]);
    Spectrum s;
    s.values.resize(n);
    s.vectors.resize(n, n);
    if (static_cast<int>(lines.size()) != n + 1) throw parse_error("eigen file row count mismatch");
    for (int j = 0; j < n; ++j) {
        std::istringstream ls(lines[j + 1]);
        if (!(ls >> s.values[j])) throw parse_error("bad eigen line");
        for (int i = 0; i < n; ++i)
            if (!(ls >> s.vectors(i, j))) throw parse_error("bad eigen line");
    }
    return s;
}

// ----- permutations -----

std::string format_permutations(const SignedGroup& G) {
    std::ostringstream out;
    for (int g = 0; g < G.order(); ++g) {
        const SignedSymmetry& e = G.element(g);
        out << (e.sign > 0 ? '+' : '-');
        for (int i = 0; i < e.size(); ++i) out << ' ' << e.perm[i] + 1;
        out << "\n";
    }
    return out.str();
}

SignedGroup parse_permutations(const std::string& text) {
    std::vector<SignedSymmetry> elems;
    for (const auto& line : nonblank_lines(text)) {
        std::istringstream ls(line);
        char sign;
        ls >> sign;
        if (sign != '+' && sign != '-') throw parse_error("permutation line must start with +/-");
        SignedSymmetry e;
        e.sign = sign == '+' ? 1 : -1;
        int img;
        while (ls >> img) e.perm.push_back(img - 1);
        if (e.perm.empty()) throw parse_error("empty permutation line");
        elems.push_back(std::move(e));
    }
    return SignedGroup::from_elements(std::move(elems));
}

// ----- symmetry list -----

std::string format_symmetries(const SymmetryList& S) {
    std::ostringstream out;
    out << "# subgroup order type : element indices\n";
    for (size_t i = 0; i < S.groups.size(); ++i) {
        out << i << ' ' << S.groups[i].order << ' ' << S.type_of[i] << " :";
        for (int e : S.groups[i].members.to_indices()) out << ' ' << e;
        out << "\n";
    }
    return out.str();
}

SymmetryList parse_symmetries(const std::string& text, const SignedGroup& G) {
    SymmetryList S;
    for (const auto& line : nonblank_lines(text)) {
        std::istringstream ls(line);
        size_t idx;
        int order, type;
        char colon;
        if (!(ls >> idx >> order >> type >> colon) || colon != ':')
            throw parse_error("malformed symmetries line: " + line);
        Subgroup sub;
        sub.members = Bitset(G.order());
        int e;
        while (ls >> e) sub.members.set(e);
        sub.order = sub.members.count();
        if (sub.order != order) throw parse_error("symmetries line order mismatch");
        sub.gens = G.generating_set(sub.members);
        if (idx != S.groups.size()) throw parse_error("symmetries lines out of order");
        S.groups.push_back(std::move(sub));
        S.type_of.push_back(type);
        if (static_cast<int>(S.types.size()) <= type) S.types.resize(type + 1);
        S.types[type].push_back(static_cast<int>(idx));
    }
    return S;
}

// ----- projection bases -----

std::string format_projection_bases(const std::vector<ProjectionBasis>& bases) {
    std::ostringstream out;
    for (const auto& b : bases) {
        out << b.subgroup << ' ' << b.comp << ' ' << b.coords.cols() << "\n";
        for (int c = 0; c < b.coords.cols(); ++c) {
            for (int r = 0; r < b.coords.rows(); ++r)
                out << (r ? " " : "") << g15(b.coords(r, c));
            out << "\n";
        }
    }
    return out.str();
}

std::vector<ProjectionBasis> parse_projection_bases(const std::string& text) {
    std::vector<ProjectionBasis> out;
    auto lines = nonblank_lines(text);
    size_t pos = 0;
    while (pos < lines.size()) {
        std::istringstream hs(lines[pos++]);
        ProjectionBasis b;
        int dim;
        if (!(hs >> b.subgroup >> b.comp >> dim)) throw parse_error("bad projection basis header");
        std::vector<std::vector<double>> rows;
        for (int c = 0; c < dim; ++c) {
            if (pos >= lines.size()) throw parse_error("projection basis truncated");
            std::istringstream ls(lines[pos++]);
            std::vector<double> vals;
            double x;
            while (ls >> x) vals.push_back(x);
            rows.push_back(std::move(vals));
        }
        int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
        b.coords.resize(n, dim);
        for (int c = 0; c < dim; ++c)
            for (int r = 0; r < n; ++r) b.coords(r, c) = rows[c][r];
        out.push_back(std::move(b));
    }
    return out;
}

std::string format_isotypic_meta(const std::vector<IsotypicDecomposition>& dec) {
    std::ostringstream out;
    out << "# subgroup comp indicator complex_degree real_degree dim trivial\n";
    for (size_t i = 0; i < dec.size(); ++i)
        for (size_t c = 0; c < dec[i].comps.size(); ++c) {
            const auto& comp = dec[i].comps[c];
            out << i << ' ' << c << ' ' << comp.indicator << ' ' << comp.complex_degree << ' '
                << comp.real_degree << ' ' << comp.dim << ' '
                << (static_cast<int>(c) == dec[i].trivial_comp ? 1 : 0) << "\n";
        }
    return out.str();
}

std::vector<IsotypicDecomposition> parse_isotypic(const std::string& meta_text,
                                                  const std::vector<ProjectionBasis>& vertex_bases,
                                                  int subgroup_count) {
    std::vector<IsotypicDecomposition> dec(subgroup_count);
    for (const auto& line : nonblank_lines(meta_text)) {
        std::istringstream ls(line);
        int i, c, ind, dc, dr, dim, triv;
        if (!(ls >> i >> c >> ind >> dc >> dr >> dim >> triv))
            throw parse_error("bad isotypic meta line: " + line);
        if (static_cast<int>(dec[i].comps.size()) != c)
            throw parse_error("isotypic meta lines out of order");
        IsotypicComponent comp;
        comp.indicator = ind;
        comp.complex_degree = dc;
        comp.real_degree = dr;
        comp.dim = dim;
        dec[i].comps.push_back(std::move(comp));
        if (triv) dec[i].trivial_comp = c;
    }
    for (const auto& b : vertex_bases) {
        auto& comp = dec[b.subgroup].comps[b.comp];
        comp.basis = b.coords;
        if (static_cast<int>(b.coords.cols()) != comp.dim)
            throw parse_error("isotypic basis dimension mismatch");
    }
    return dec;
}

// ----- symmetry-adapted basis -----

std::string format_basis(const SymmetryAdaptedBasis& b) {
    std::ostringstream out;
    for (int j = 0; j < b.size(); ++j) {
        out << j + 1 << ' ' << g15(b.lambda[j]) << ' ' << b.comp_tag[j];
        for (int i = 0; i < b.psi.rows(); ++i) out << ' ' << g15(b.psi(i, j));
        out << "\n";
    }
    return out.str();
}

SymmetryAdaptedBasis parse_basis(const std::string& text) {
    auto lines = nonblank_lines(text);
    const int m = static_cast<int>(lines.size());
    SymmetryAdaptedBasis b;
    b.lambda.resize(m);
    std::vector<std::vector<double>> cols;
    for (int j = 0; j < m; ++j) {
        std::istringstream ls(lines[j]);
        int idx, tag;
        double lam;
        if (!(ls >> idx >> lam >> tag)) throw parse_error("bad basis line");
        b.lambda[j] = lam;
        b.comp_tag.push_back(tag);
        std::vector<double> col;
        double x;
        while (ls >> x) col.push_back(x);
        cols.push_back(std::move(col));
    }
    int n = cols.empty() ? 0 : static_cast<int>(cols[0].size());
    b.psi.resize(n, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) b.psi(i, j) = cols[j][i];
    return b;
}

// ----- solver outputs -----

std::string format_solutions(const RunResult& r) {
    std::ostringstream out;
    out << "# branch parent_bif s mi sym norm1 coefficients...\n";
    for (const auto& br : r.branches) {
        if (br.duplicate) continue;
        for (const auto& p : br.points) {
            out << br.id << ' ' << br.parent_bif << ' ' << g15(p.s) << ' ' << p.mi << ' ' << p.sym
                << ' ' << g15(p.norm1);
            for (int j = 0; j < p.a.size(); ++j) out << ' ' << g15(p.a[j]);
            out << "\n";
        }
    }
    return out.str();
}

std::string format_bifurcations(const RunResult& r) {
    std::ostringstream out;
    out << "# s_star mother_branch dim_e n_comps comps... degeneracy n_daughters daughters... audit\n";
    for (const auto& b : r.bifurcations) {
        out << g15(b.s_star) << ' ' << b.mother_branch << ' ' << b.dim_e << ' ' << b.comps.size();
        for (int c : b.comps) out << ' ' << c;
        out << ' ' << b.degeneracy << ' ' << b.daughters.size();
        for (int d : b.daughters) out << ' ' << d;
        out << ' ' << (b.audit_ran ? (b.audit_ok ? "pass" : "fail") : "skipped") << "\n";
    }
    return out.str();
}

std::string format_stats(const RunResult& r) {
    std::ostringstream out;
    auto rate = [](long long iters, long long calls) {
        return calls ? static_cast<double>(iters) / static_cast<double>(calls) : 0.0;
    };
    out << "tgnga_calls " << r.stats.tgnga_calls << "\n";
    out << "tgnga_iterations " << r.stats.tgnga_iters << "\n";
    out << "tgnga_iterations_per_call " << g15(rate(r.stats.tgnga_iters, r.stats.tgnga_calls)) << "\n";
    out << "cgnga_calls " << r.stats.cgnga_calls << "\n";
    out << "cgnga_iterations " << r.stats.cgnga_iters << "\n";
    out << "cgnga_iterations_per_call " << g15(rate(r.stats.cgnga_iters, r.stats.cgnga_calls)) << "\n";
    out << "secant_calls " << r.stats.secant_calls << "\n";
    out << "secant_iterations " << r.stats.secant_iters << "\n";
    out << "secant_iterations_per_call " << g15(rate(r.stats.secant_iters, r.stats.secant_calls))
        << "\n";
    out << "branches " << r.live_branch_count() << "\n";
    out << "bifurcations " << r.bifurcations.size() << "\n";
    out << "follow_failures " << r.follow_failures << "\n";
    return out.str();
}

LoadedRun parse_solutions(const std::string& solutions_text, const std::string& bif_text,
                          const SymmetryAdaptedBasis& basis) {
    LoadedRun run;
    for (const auto& line : nonblank_lines(solutions_text)) {
        std::istringstream ls(line);
        int branch, parent, mi, sym;
        double s, norm1;
        if (!(ls >> branch >> parent >> s >> mi >> sym >> norm1))
            throw parse_error("bad solutions line: " + line);
        SolutionPoint p;
        p.s = s;
        p.mi = mi;
        p.sym = sym;
        p.norm1 = norm1;
        std::vector<double> a;
        double x;
        while (ls >> x) a.push_back(x);
        p.a = Eigen::Map<Vec>(a.data(), static_cast<int>(a.size()));
        p.u = basis.psi * p.a;
        while (static_cast<int>(run.branches.size()) <= branch) {
            Branch b;
            b.id = static_cast<int>(run.branches.size());
            run.branches.push_back(std::move(b));
        }
        run.branches[branch].parent_bif = parent;
        run.branches[branch].points.push_back(std::move(p));
    }
    for (const auto& line : nonblank_lines(bif_text)) {
        std::istringstream ls(line);
        BifurcationRecord b;
        size_t nc, nd;
        if (!(ls >> b.s_star >> b.mother_branch >> b.dim_e >> nc))
            throw parse_error("bad bifurcation line: " + line);
        for (size_t i = 0; i < nc; ++i) {
            int c;
            ls >> c;
            b.comps.push_back(c);
        }
        ls >> b.degeneracy >> nd;
        for (size_t i = 0; i < nd; ++i) {
            int d;
            ls >> d;
            b.daughters.push_back(d);
        }
        std::string audit;
        ls >> audit;
        b.audit_ran = audit != "skipped";
        b.audit_ok = audit == "pass";
        b.id = static_cast<int>(run.bifurcations.size());
        run.bifurcations.push_back(std::move(b));
    }
    return run;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw missing_file_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw missing_file_error("cannot write file: " + path);
    out << content;
}

}  // namespace pde
