#include "pde/postprocess.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace pde {

std::string diagram_export(const std::vector<Branch>& branches, const SchematicFunction& y) {
    std::ostringstream out;
    out << "# branch s y mi sym\n";
    char buf[160];
    for (const auto& br : branches) {
        if (br.duplicate || br.points.empty()) continue;
        for (const auto& p : br.points) {
            std::snprintf(buf, sizeof buf, "%d %.15g %.15g %d %d\n", br.id, p.s, y.y(p.u), p.mi,
                          p.sym);
            out << buf;
        }
        out << "\n";
    }
    return out.str();
}

namespace {

// permutations realizing a horizontal or vertical mirror of the layout
std::vector<std::vector<int>> mirror_permutations(const Layout& l) {
    std::vector<std::vector<int>> mirrors;
    const int n = l.size();
    for (int axis = 0; axis < 2; ++axis) {
        std::vector<int> perm(n, -1);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            double tx = axis == 0 ? l.x[i] : -l.x[i];
            double ty = axis == 0 ? -l.y[i] : l.y[i];
            int match = -1;
            for (int j = 0; j < n; ++j)
                if (std::abs(l.x[j] - tx) < 1e-6 && std::abs(l.y[j] - ty) < 1e-6) {
                    match = j;
                    break;
                }
            if (match < 0) ok = false;
            perm[i] = match;
        }
        if (ok) mirrors.push_back(std::move(perm));
    }
    return mirrors;
}

double pair_objective(const Vec& u, const Layout& l) {
    double acc = 0.0;
    for (int i = 0; i < u.size(); ++i)
        for (int j = i + 1; j < u.size(); ++j) {
            double dx = l.x[i] - l.x[j], dy = l.y[i] - l.y[j];
            acc += u[i] * u[j] * std::sqrt(dx * dx + dy * dy);
        }
    return acc;
}

double set_size_objective(const Vec& u, const Layout& l) {
    std::set<long long> vals;
    for (int i = 0; i < u.size(); ++i)
        for (int j = i + 1; j < u.size(); ++j) {
            double dx = l.x[i] - l.x[j], dy = l.y[i] - l.y[j];
            vals.insert(llround(u[i] * u[j] * std::sqrt(dx * dx + dy * dy) * 1e6));
        }
    return static_cast<double>(vals.size());
}

bool has_visible_mirror(const Vec& u, const std::vector<std::vector<int>>& mirrors) {
    double scale = 1e-6 * std::max(1.0, u.lpNorm<Eigen::Infinity>());
    for (const auto& perm : mirrors) {
        bool ok = true;
        for (int i = 0; i < u.size() && ok; ++i)
            if (std::abs(u[perm[i]] - u[i]) > scale) ok = false;
        if (ok) return true;
    }
    return false;
}

bool lex_less(const Vec& a, const Vec& b) {
    for (int i = 0; i < a.size(); ++i) {
        double da = std::round(a[i] * 1e9), db = std::round(b[i] * 1e9);
        if (da != db) return da < db;
    }
    return false;
}

}  // namespace

Vec contour_select(const Vec& u, const Layout& layout, const std::vector<SignedSymmetry>& auts,
                   bool literal_set_size) {
    auto mirrors = mirror_permutations(layout);
    Vec best = u;
    double best_obj = 0.0;
    bool best_mirror = false;
    bool first = true;
    for (const auto& g : auts) {
        Vec cand = g.apply(u);
        double obj =
            literal_set_size ? set_size_objective(cand, layout) : pair_objective(cand, layout);
        bool mir = has_visible_mirror(cand, mirrors);
        bool better;
        if (first) {
            better = true;
        } else if (std::abs(obj - best_obj) > 1e-9 * std::max(1.0, std::abs(best_obj))) {
            better = obj < best_obj;
        } else if (mir != best_mirror) {
            better = mir;
        } else {
            better = lex_less(cand, best);
        }
        if (better) {
            best = cand;
            best_obj = obj;
            best_mirror = mir;
            first = false;
        }
    }
    return best;
}

std::string contour_export(const Vec& u, const Layout& layout, const Graph& g) {
    const int n = layout.size();
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (int i = 0; i < n; ++i) {
        xmin = std::min(xmin, layout.x[i]);
        xmax = std::max(xmax, layout.x[i]);
        ymin = std::min(ymin, layout.y[i]);
        ymax = std::max(ymax, layout.y[i]);
    }
    double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double view = 400.0, margin = 40.0;
    double scale = (view - 2 * margin) / span;
    auto px = [&](int i) { return margin + (layout.x[i] - xmin) * scale; };
    auto py = [&](int i) { return margin + (ymax - layout.y[i]) * scale; };

    double umax = u.lpNorm<Eigen::Infinity>();
    double cutoff = 1e-3 * umax;
    double rmax = 14.0, rmin = 3.0;

    std::ostringstream out;
    char buf[256];
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
           "viewBox=\"0 0 400 400\">\n";
    for (auto [i, j] : g.edges()) {
        std::snprintf(buf, sizeof buf,
                      "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                      "stroke=\"#888\" stroke-width=\"1\"/>\n",
                      px(i), py(i), px(j), py(j));
        out << buf;
    }
    for (int i = 0; i < n; ++i) {
        const char* fill;
        double r;
        if (umax <= 0.0 || std::abs(u[i]) <= cutoff) {
            fill = "#999";
            r = rmin;
        } else {
            fill = u[i] > 0 ? "#fff" : "#000";
            r = std::max(rmin, rmax * std::sqrt(std::abs(u[i]) / umax));
        }
        std::snprintf(buf, sizeof buf,
                      "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"%s\" "
                      "stroke=\"#000\" stroke-width=\"0.8\"/>\n",
                      px(i), py(i), r, fill);
        out << buf;
    }
    out << "</svg>\n";
    return out.str();
}

std::string report(const ReportInputs& in) {
    std::ostringstream out;
    out << "# Run report\n\n";

    auto sym_label = [&](int sym) {
        std::string label = "G" + std::to_string(sym);
        if (sym >= 0 && sym < static_cast<int>(in.sym_type.size()))
            label = "S" + std::to_string(in.sym_type[sym]);
        if (sym >= 0 && sym < static_cast<int>(in.sym_names.size()) && !in.sym_names[sym].empty())
            label += " (" + in.sym_names[sym] + ")";
        return label;
    };

    out << "## Branches\n\n";
    out << "| id | symmetry | MI range | parent bif | s range | J at ends | points |\n";
    out << "|---:|---|---|---:|---|---|---:|\n";
    for (const auto& br : *in.branches) {
        if (br.duplicate || br.points.empty()) continue;
        int mi_lo = br.points.front().mi, mi_hi = mi_lo;
        double s_lo = br.points.front().s, s_hi = s_lo;
        for (const auto& p : br.points) {
            mi_lo = std::min(mi_lo, p.mi);
            mi_hi = std::max(mi_hi, p.mi);
            s_lo = std::min(s_lo, p.s);
            s_hi = std::max(s_hi, p.s);
        }
        char buf[256];
        std::snprintf(buf, sizeof buf, "| %d | %s | %d..%d | %d | [%.6g, %.6g] | %.6g / %.6g | %zu |\n",
                      br.id, sym_label(br.sym).c_str(), mi_lo, mi_hi, br.parent_bif, s_lo, s_hi,
                      br.points.front().action, br.points.back().action, br.points.size());
        out << buf;
    }

    out << "\n## Bifurcation points\n\n";
    out << "| id | s* | mother | dim E | components | degeneracy | daughters | index audit |\n";
    out << "|---:|---|---:|---:|---|---|---|---|\n";
    for (const auto& b : *in.bifurcations) {
        std::string comps, daughters;
        for (int c : b.comps) comps += (comps.empty() ? "" : ",") + std::to_string(c + 1);
        for (int d : b.daughters) daughters += (daughters.empty() ? "" : ",") + std::to_string(d);
        std::string deg = b.degeneracy ? "type " + std::to_string(b.degeneracy) : "none";
        char buf[256];
        std::snprintf(buf, sizeof buf, "| %d | %.8g | %d | %d | %s | %s | %s | %s |\n", b.id,
                      b.s_star, b.mother_branch, b.dim_e, comps.c_str(), deg.c_str(),
                      daughters.empty() ? "-" : daughters.c_str(),
                      b.audit_ran ? (b.audit_ok ? "pass" : "FAIL") : "skipped");
        out << buf;
    }

    if (!in.contours.empty()) {
        out << "\n## Contour plots\n\n";
        for (const auto& [id, file] : in.contours)
            out << "- branch " << id << ": " << file << "\n";
    }

    out << "\n## Solver statistics\n\n```\n" << in.stats_text << "```\n";

    if (!in.warnings.empty()) {
        out << "\n## Warnings\n\n";
        for (const auto& w : in.warnings) out << "- " << w << "\n";
    }
    return out.str();
}

}  // namespace pde
