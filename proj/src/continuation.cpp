#include "pde/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "pde/linalg.hpp"
#include "pde/rng.hpp"

namespace pde {

int f_nc(int d) { return 1 + 20 * (d - 1) * (d - 1); }

int f_nc_with_override(int d, const SolverConfig& cfg) {
    auto it = cfg.fnc_override.find(d);
    return it != cfg.fnc_override.end() ? it->second : f_nc(d);
}

double speed_factor(double angle) {
    return std::min(2.0, 2.0 * std::exp(-angle * std::log(2.0) / 0.1));
}

namespace {

struct Job {
    Vec a;
    double s = 0;
    Vec v;  // m+1 direction
    int parent_bif = -1;
};

class Solver {
public:
    Solver(const SolverConfig& cfg, const RunArtifacts& art) : cfg_(cfg), art_(art), rng_(cfg.seed) {
        prob_.basis = art.basis;
        prob_.f = make_nonlinearity(cfg.nonlinearity, cfg.alpha, cfg.beta);
        m_ = art.basis->size();
        if (cfg_.m > 0 && cfg_.m < m_)
            throw structure_error("Galerkin truncation m < n is a config hook only; run with m = n");
        fix_in_a_.resize(art.S->groups.size());
        comp_in_a_.resize(art.S->groups.size());
    }

    RunResult run() {
        seed_queue();
        while (!queue_.empty()) {
            if (static_cast<int>(out_.branches.size()) >= cfg_.max_branches)
                throw budget_error("branch budget exceeded");
            Job job = queue_.front();
            queue_.pop_front();
            follow_branch(job);
        }
        mark_duplicate_branches();
        return std::move(out_);
    }

private:
    const SolverConfig& cfg_;
    const RunArtifacts& art_;
    Rng rng_;
    Problem prob_;
    int m_ = 0;
    RunResult out_;
    std::deque<Job> queue_;
    std::vector<Mat> fix_in_a_;                // per subgroup, lazily filled ([fix]_Psi)
    std::vector<std::map<int, Mat>> comp_in_a_;  // per subgroup, per component

    const SignedGroup& G() const { return *art_.G; }
    const SymmetryList& S() const { return *art_.S; }

    const Mat& fix_coords(int i) {
        if (fix_in_a_[i].size() == 0) {
            FixSpace fx = fix_subspace(G(), S().groups[i].gens);
            fix_in_a_[i] = art_.basis->psi.transpose() * fx.basis;
        }
        return fix_in_a_[i];
    }

    const Mat& comp_coords(int i, int c) {
        auto it = comp_in_a_[i].find(c);
        if (it == comp_in_a_[i].end()) {
            Mat coords = art_.basis->psi.transpose() * (*art_.dec)[i].comps[c].basis;
            it = comp_in_a_[i].emplace(c, std::move(coords)).first;
        }
        return it->second;
    }

    bool in_window(const SolutionPoint& p) const {
        return p.s >= cfg_.s_min && p.s <= cfg_.s_max && p.norm1 <= cfg_.norm_max;
    }

    SolutionPoint make_point(const Vec& a, double s) {
        SolutionPoint p;
        p.a = a;
        p.s = s;
        p.u = prob_.vertex_values(a);
        p.gnorm = gradient_coeffs(prob_, a, s).lpNorm<Eigen::Infinity>();
        SignatureInfo sig = signature(hessian_coeffs(prob_, a, s));
        p.mi = sig.mi;
        p.degenerate = sig.critical_eigenspace().cols() > 0;
        p.sym = identify_symmetry(p.u);
        p.action = action(prob_, a, s);
        p.norm1 = p.u.lpNorm<1>();
        double mean = p.u.mean();
        p.anomalous_constant = (p.u.array() - mean).abs().maxCoeff() < 1e-8;
        return p;
    }

    int identify_symmetry(const Vec& u) const {
        Bitset detected = stabilizer_of_vector(G(), u, 1e-6);
        for (size_t i = 0; i < S().groups.size(); ++i)
            if (detected.contains(S().groups[i].members)) return static_cast<int>(i);
        return static_cast<int>(S().groups.size()) - 1;  // trivial group is last
    }

    void seed_queue() {
        double s0 = std::isnan(cfg_.s0) ? cfg_.s_max : cfg_.s0;
        Vec a0 = Vec::Zero(m_);
        Vec down = Vec::Zero(m_ + 1);
        down[m_] = -1.0;
        queue_.push_back({a0, s0, down, -1});
        if (s0 < cfg_.s_max - 1e-12) {
            Vec up = Vec::Zero(m_ + 1);
            up[m_] = 1.0;
            queue_.push_back({a0, s0, up, -1});
        }
    }

    static double point_distance(const SolutionPoint& p, const Vec& a, double s) {
        return std::sqrt((p.a - a).squaredNorm() + (p.s - s) * (p.s - s));
    }

    void follow_branch(const Job& job) {
        Branch br;
        br.id = static_cast<int>(out_.branches.size());
        out_.branches.push_back({});  // reserve the slot so daughters get later ids
        br.parent_bif = job.parent_bif;

        SolutionPoint p_c = make_point(job.a, job.s);
        br.sym = p_c.sym;
        br.points.push_back(p_c);
        Vec v = job.v;
        double c = std::clamp(cfg_.c_init, cfg_.c_min, cfg_.c_max);

        while (in_window(br.points.back()) && c > cfg_.tau) {
            const SolutionPoint& cur = br.points.back();
            Vec guess_a = cur.a + c * v.head(m_);
            double guess_s = cur.s + c * v[m_];
            NewtonResult res = tGNGA(prob_, guess_a, guess_s, v, {}, &out_.stats);
            bool acceptable = res.converged;
            SolutionPoint p_n;
            if (acceptable) {
                if (point_distance(cur, res.a, res.s) > 2.0 * c) acceptable = false;
            }
            if (acceptable) {
                p_n = make_point(res.a, res.s);
                if (p_n.sym != br.sym) acceptable = false;  // missed bifurcation guard
            }
            if (!acceptable) {
                ++out_.follow_failures;
                c *= 0.5;
                continue;
            }
            SolutionPoint p_o = br.points.back();
            br.points.push_back(p_n);
            Vec pc_full(m_ + 1), po_full(m_ + 1);
            pc_full << p_n.a, p_n.s;
            po_full << p_o.a, p_o.s;
            v = (pc_full - po_full).normalized();

            // speed heuristics from the angle of the last three points
            if (br.points.size() >= 3) {
                const SolutionPoint& p1 = br.points[br.points.size() - 3];
                Vec d1(m_ + 1), d2(m_ + 1);
                d1 << p_o.a - p1.a, p_o.s - p1.s;
                d2 << p_n.a - p_o.a, p_n.s - p_o.s;
                double cosang = d1.normalized().dot(d2.normalized());
                double angle = std::acos(std::clamp(cosang, -1.0, 1.0));
                c = std::clamp(c * speed_factor(angle), cfg_.c_min, cfg_.c_max);
            }

            for (auto& bif : find_bifpoints(p_o, p_n, v, 0))
                process_bifurcation(bif, br);
        }
        br.termination = c <= cfg_.tau ? "speed underflow" : "window exit";
        out_.branches[br.id] = std::move(br);
    }

    struct FoundBif {
        SolutionPoint p;        // the degenerate point
        SignatureInfo sig;
        SolutionPoint side_lo;  // mother neighbors ordered by s
        SolutionPoint side_hi;
    };

    std::vector<FoundBif> find_bifpoints(const SolutionPoint& p_o, const SolutionPoint& p_c,
                                         const Vec& v, int depth) {
        std::vector<FoundBif> out;
        if (p_o.mi == p_c.mi) return out;
        SecantResult sec =
            secant(prob_, p_o.a, p_o.s, p_o.mi, p_c.a, p_c.s, p_c.mi, 30, &out_.stats);
        if (!sec.ok) {
            out_.warnings.push_back("secant failed between s=" + std::to_string(p_o.s) +
                                    " and s=" + std::to_string(p_c.s) + ": " + sec.failure);
            return out;
        }
        Mat E = sec.sig.critical_eigenspace();
        int jump = std::abs(p_c.mi - p_o.mi);
        if (static_cast<int>(E.cols()) == jump) {
            if (is_fold(p_o, sec, p_c, v)) return out;  // fold points are not bifurcations
            FoundBif fb;
            fb.p = make_point(sec.a, sec.s);
            fb.sig = sec.sig;
            fb.side_lo = p_o.s <= p_c.s ? p_o : p_c;
            fb.side_hi = p_o.s <= p_c.s ? p_c : p_o;
            out.push_back(std::move(fb));
            return out;
        }
        if (depth >= cfg_.bif_depth) {
            out_.warnings.push_back("bifurcation segment unresolved at recursion cap near s=" +
                                    std::to_string(sec.s));
            return out;
        }
        // split the segment at the projected midpoint and recurse
        Vec mid_a = 0.5 * (p_o.a + p_c.a);
        double mid_s = 0.5 * (p_o.s + p_c.s);
        Vec chord(m_ + 1);
        chord << p_c.a - p_o.a, p_c.s - p_o.s;
        chord.normalize();
        NewtonResult mid = tGNGA(prob_, mid_a, mid_s, chord, {}, &out_.stats);
        if (!mid.converged) {
            out_.warnings.push_back("midpoint projection failed while splitting a segment near s=" +
                                    std::to_string(mid_s));
            return out;
        }
        SolutionPoint p_m = make_point(mid.a, mid.s);
        if (point_distance(p_m, p_o.a, p_o.s) < 1e-12 ||
            point_distance(p_m, p_c.a, p_c.s) < 1e-12) {
            out_.warnings.push_back("segment split degenerated near s=" + std::to_string(mid_s));
            return out;
        }
        auto left = find_bifpoints(p_o, p_m, v, depth + 1);
        auto right = find_bifpoints(p_m, p_c, v, depth + 1);
        left.insert(left.end(), right.begin(), right.end());
        return left;
    }

    bool is_fold(const SolutionPoint& p_o, const SecantResult& sec, const SolutionPoint& p_c,
                 const Vec& v) const {
        Mat E = sec.sig.critical_eigenspace();
        if (E.cols() != 1) return false;
        bool s_reverses = (sec.s - p_o.s) * (p_c.s - sec.s) < 0.0;
        if (!s_reverses) return false;
        double tangency = std::abs(E.col(0).dot(v.head(m_)));
        return tangency > 0.9;
    }

    void process_bifurcation(FoundBif& fb, Branch& mother) {
        // skip bifurcation points already processed elsewhere (orbit-aware)
        for (const auto& rec : out_.bifurcations) {
            if (std::abs(rec.s_star - fb.p.s) > 1e-6) continue;
            for (int g = 0; g < G().order(); ++g) {
                Vec gu = G().element(g).apply(fb.p.u);
                if ((gu - rec.u_star).lpNorm<Eigen::Infinity>() < 1e-4) return;
            }
        }

        BifurcationRecord rec;
        rec.id = static_cast<int>(out_.bifurcations.size());
        rec.mother_branch = mother.id;
        rec.mother_sym = mother.sym;
        rec.a_star = fb.p.a;
        rec.u_star = fb.p.u;
        rec.s_star = fb.p.s;
        Mat E = fb.sig.critical_eigenspace();
        rec.dim_e = static_cast<int>(E.cols());

        const int i = mother.sym;
        const auto& dec = (*art_.dec)[i];
        std::vector<int> comp_dims;
        int covered = 0;
        for (size_t c = 0; c < dec.comps.size(); ++c) {
            if (dec.comps[c].dim == 0) continue;
            Mat W = subspace_intersection(E, comp_coords(i, static_cast<int>(c)));
            if (W.cols() > 0) {
                rec.comps.push_back(static_cast<int>(c));
                comp_dims.push_back(static_cast<int>(W.cols()));
                covered += static_cast<int>(W.cols());
            }
        }
        if (covered != rec.dim_e)
            out_.warnings.push_back("critical eigenspace does not split across isotypic components at s=" +
                                    std::to_string(rec.s_star));

        // accidental degeneracy typing
        rec.degeneracy = 0;
        bool has_trivial = dec.trivial_comp >= 0 &&
                           std::find(rec.comps.begin(), rec.comps.end(), dec.trivial_comp) !=
                               rec.comps.end();
        if (has_trivial) {
            rec.degeneracy = 1;
        } else if (rec.comps.size() > 1) {
            rec.degeneracy = 2;
        } else {
            for (size_t t = 0; t < rec.comps.size(); ++t)
                if (comp_dims[t] > dec.comps[rec.comps[t]].real_degree) rec.degeneracy = 3;
        }

        std::vector<SolutionPoint> daughters = find_daughters(fb, rec, i, E);
        for (auto& q : daughters) {
            Vec q_full(m_ + 1), star(m_ + 1);
            q_full << q.a, q.s;
            star << rec.a_star, rec.s_star;
            Vec dir = (q_full - star).normalized();
            rec.daughters.push_back(static_cast<int>(out_.branches.size()) +
                                    static_cast<int>(queue_.size()));
            queue_.push_back({q.a, q.s, dir, rec.id});
        }
        run_index_audit(rec, fb, daughters);
        out_.bifurcations.push_back(std::move(rec));
    }

    // E and subspaces live in coefficient coordinates
    std::vector<SolutionPoint> find_daughters(const FoundBif& fb, const BifurcationRecord& rec,
                                              int i, const Mat& E) {
        const auto& dec = (*art_.dec)[i];
        std::vector<SolutionPoint> daughters;
        double eps = cfg_.epsilon * std::max(1.0, fb.p.a.norm());

        // expected daughter symmetry indices from the arrow table
        std::vector<int> J;
        for (const auto& a : *art_.arrows) {
            if (a.mother != i) continue;
            if (std::find(rec.comps.begin(), rec.comps.end(), a.comp) == rec.comps.end()) continue;
            if (std::find(J.begin(), J.end(), a.daughter) == J.end()) J.push_back(a.daughter);
        }
        bool anomaly = dec.trivial_comp >= 0 &&
                       std::find(rec.comps.begin(), rec.comps.end(), dec.trivial_comp) !=
                           rec.comps.end();
        if (anomaly && std::find(J.begin(), J.end(), i) == J.end())
            J.push_back(i);  // daughters that keep the mother symmetry
        std::sort(J.begin(), J.end());

        std::vector<std::pair<int, Mat>> subspaces;  // (j, basis of E_j)
        for (int j : J) {
            Mat Ej = subspace_intersection(E, fix_coords(j));
            if (Ej.cols() > 0) subspaces.push_back({j, std::move(Ej)});
        }
        if (E.cols() > 1) subspaces.push_back({-1, E});  // unpredicted daughters

        for (auto& [j, Ej] : subspaces) {
            int budget = f_nc_with_override(static_cast<int>(Ej.cols()), cfg_);
            int no_changes = 0;
            while (no_changes < budget) {
                Vec coeff(Ej.cols());
                for (int t = 0; t < coeff.size(); ++t) coeff[t] = rng_.gaussian();
                if (coeff.norm() < 1e-12) continue;
                Vec e = Ej * coeff;
                e *= eps / e.norm();

                NewtonOptions opts;
                opts.escape_radius = std::max(0.25, 12.0 * eps);
                bool found_new = false;
                NewtonResult q =
                    cGNGA(prob_, fb.p.a, fb.p.s, fb.p.a + e, fb.p.s, Ej, eps, opts, &out_.stats);
                if (q.converged) {
                    SolutionPoint pt = make_point(q.a, q.s);
                    if (is_new_daughter(pt, daughters, i)) {
                        found_new = true;
                        daughters.push_back(pt);
                        // a fresh daughter earns the mirror guess a try
                        NewtonResult q2 = cGNGA(prob_, fb.p.a, fb.p.s, fb.p.a - e, fb.p.s, Ej, eps,
                                                opts, &out_.stats);
                        if (q2.converged) {
                            SolutionPoint pt2 = make_point(q2.a, q2.s);
                            if (is_new_daughter(pt2, daughters, i)) daughters.push_back(pt2);
                        }
                    }
                }
                if (found_new)
                    no_changes = 0;
                else
                    ++no_changes;
            }
        }
        return daughters;
    }

    bool is_new_daughter(const SolutionPoint& q, const std::vector<SolutionPoint>& list, int i) {
        for (const auto& d : list) {
            double best = std::numeric_limits<double>::infinity();
            for (int g : S().groups[i].members.to_indices()) {
                Vec gu = G().element(g).apply(q.u);
                best = std::min(best,
                                (gu - d.u).lpNorm<Eigen::Infinity>() + std::abs(q.s - d.s));
                if (best <= cfg_.dedup_tol) break;
            }
            if (best <= cfg_.dedup_tol) return false;
        }
        return true;
    }

    void run_index_audit(BifurcationRecord& rec, const FoundBif& fb,
                         const std::vector<SolutionPoint>& daughters) {
        rec.audit_ran = true;
        long long lo = (fb.side_lo.mi % 2 == 0) ? 1 : -1;
        long long hi = (fb.side_hi.mi % 2 == 0) ? 1 : -1;
        const int i = rec.mother_sym;
        for (const auto& q : daughters) {
            Bitset stab = stabilizer_of_vector(G(), q.u, 1e-6) & S().groups[i].members;
            int orbit = S().groups[i].order / std::max(1, stab.count());
            long long term = static_cast<long long>(orbit) * ((q.mi % 2 == 0) ? 1 : -1);
            if (q.s < rec.s_star)
                lo += term;
            else
                hi += term;
        }
        rec.audit_ok = (lo == hi);
        if (!rec.audit_ok)
            out_.warnings.push_back(
                "Poincare-Hopf index audit failed at s=" + std::to_string(rec.s_star) +
                "; consider a larger f_nc");
    }

    // Post-run pass marking branches that retrace an earlier branch (the same
    // curve reached from a second bifurcation) as duplicates.
    void mark_duplicate_branches() {
        auto& branches = out_.branches;
        for (size_t b = 0; b < branches.size(); ++b) {
            if (branches[b].duplicate || branches[b].points.size() < 2) continue;
            for (size_t a = 0; a < b; ++a) {
                if (branches[a].duplicate) continue;
                if (branches[a].points.size() < 2) continue;
                if (S().type_of[branches[a].sym] != S().type_of[branches[b].sym]) continue;
                int g = mutual_retrace(branches[a], branches[b]);
                if (g >= 0) {
                    branches[b].duplicate = true;
                    branches[b].duplicate_of = static_cast<int>(a);
                    break;
                }
            }
        }
    }

    // returns the group element mapping branch B onto branch A, or -1
    int mutual_retrace(const Branch& A, const Branch& B) {
        double tol = 5e-2;
        auto s_range = [](const Branch& br) {
            double lo = br.points.front().s, hi = lo;
            for (const auto& p : br.points) {
                lo = std::min(lo, p.s);
                hi = std::max(hi, p.s);
            }
            return std::pair(lo, hi);
        };
        auto [alo, ahi] = s_range(A);
        auto [blo, bhi] = s_range(B);
        if (std::abs(alo - blo) > 2 * cfg_.c_max || std::abs(ahi - bhi) > 2 * cfg_.c_max) return -1;
        for (int g = 0; g < G().order(); ++g) {
            bool all_near = true;
            for (size_t t = 0; t < B.points.size() && all_near; t += 1) {
                if (dist_to_polyline(G().element(g).apply(B.points[t].u), B.points[t].s, A) > tol)
                    all_near = false;
            }
            if (!all_near) continue;
            // require the match to be mutual so half-branches stay separate
            int ginv = G().inverse(g);
            bool mutual = true;
            for (size_t t = 0; t < A.points.size() && mutual; t += 1) {
                if (dist_to_polyline(G().element(ginv).apply(A.points[t].u), A.points[t].s, B) > tol)
                    mutual = false;
            }
            if (mutual) return g;
        }
        return -1;
    }

    static double dist_to_polyline(const Vec& u, double s, const Branch& br) {
        double best = std::numeric_limits<double>::infinity();
        for (size_t t = 0; t + 1 < br.points.size(); ++t) {
            const auto& p = br.points[t];
            const auto& q = br.points[t + 1];
            Vec du = q.u - p.u;
            double ds = q.s - p.s;
            double len2 = du.squaredNorm() + ds * ds;
            double proj = 0.0;
            if (len2 > 0)
                proj = std::clamp(((u - p.u).dot(du) + (s - p.s) * ds) / len2, 0.0, 1.0);
            Vec ru = u - p.u - proj * du;
            double rs = s - p.s - proj * ds;
            best = std::min(best, std::sqrt(ru.squaredNorm() + rs * rs));
        }
        // single-point branches
        if (br.points.size() == 1) {
            const auto& p = br.points.front();
            best = std::sqrt((u - p.u).squaredNorm() + (s - p.s) * (s - p.s));
        }
        return best;
    }
};

}  // namespace

RunResult run_solver(const SolverConfig& cfg, const RunArtifacts& art) {
    Solver solver(cfg, art);
    return solver.run();
}

}  // namespace pde
