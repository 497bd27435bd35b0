#include "pde/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pde/group_names.hpp"
#include "pde/linalg.hpp"
#include "pde/rng.hpp"

namespace pde {

namespace {

// gamma acts as the identity on every column of basis
bool acts_trivially(const SignedGroup& G, int gi, const Mat& basis, double tol = 1e-9) {
    const SignedSymmetry& g = G.element(gi);
    for (int c = 0; c < basis.cols(); ++c) {
        for (int i = 0; i < basis.rows(); ++i)
            if (std::abs(g.sign * basis(i, c) - basis(g.perm[i], c)) > tol) return false;
    }
    return true;
}

Bitset pointwise_stab_of_basis(const SignedGroup& G, const Bitset& within, const Mat& basis) {
    Bitset out(G.order());
    for (int gi = 0; gi < G.order(); ++gi)
        if (within.test(gi) && acts_trivially(G, gi, basis)) out.set(gi);
    return out;
}

class SubgroupIndex {
public:
    explicit SubgroupIndex(const SymmetryList& S) : S_(S) {
        for (size_t i = 0; i < S.groups.size(); ++i)
            by_hash_[S.groups[i].members.hash()].push_back(static_cast<int>(i));
    }
    int locate(const Bitset& members) const {
        auto it = by_hash_.find(members.hash());
        if (it == by_hash_.end()) return -1;
        for (int i : it->second)
            if (S_.groups[i].members == members) return i;
        return -1;
    }

private:
    const SymmetryList& S_;
    std::map<uint64_t, std::vector<int>> by_hash_;
};

int locate_subgroup(const SymmetryList& S, const Bitset& members) {
    for (size_t i = 0; i < S.groups.size(); ++i)
        if (S.groups[i].members == members) return static_cast<int>(i);
    return -1;
}

}  // namespace

std::vector<BifurcationArrow> bifurcation_arrows(const SignedGroup& G, const SymmetryList& S,
                                                 const std::vector<IsotypicDecomposition>& dec,
                                                 uint64_t seed) {
    std::vector<BifurcationArrow> arrows;
    Rng rng(seed);
    const int q = static_cast<int>(S.groups.size());
    SubgroupIndex index(S);
    std::vector<FixSpace> fixes(q);
    for (int j = 0; j < q; ++j) fixes[j] = fix_subspace(G, S.groups[j].gens);

    for (int i = 0; i < q; ++i) {
        const Subgroup& mother = S.groups[i];
        for (size_t c = 0; c < dec[i].comps.size(); ++c) {
            const IsotypicComponent& comp = dec[i].comps[c];
            if (comp.dim == 0) continue;

            // isotropy subgroups of the mother action on this component,
            // collected from the master list
            std::vector<int> H;
            std::vector<Mat> fix_in_comp(q);
            for (int j = 0; j < q; ++j) {
                if (j == i || !mother.members.contains(S.groups[j].members)) continue;
                Mat W = subspace_intersection(fixes[j].basis, comp.basis);
                if (W.cols() == 0) continue;
                Bitset pst = pointwise_stab_of_basis(G, mother.members, W);
                if (pst == S.groups[j].members) {
                    H.push_back(j);
                    fix_in_comp[j] = W;
                }
            }
            // sampled-stabilizer cross check: the stabilizer of a random
            // vector of the component must appear in H (or be the mother)
            for (int trial = 0; trial < 50; ++trial) {
                Vec coeff(comp.dim);
                for (int t = 0; t < comp.dim; ++t) coeff[t] = rng.gaussian();
                Vec w = comp.basis * coeff;
                Bitset stab = stabilizer_of_vector(G, w, 1e-9) & mother.members;
                if (stab == mother.members) continue;
                int idx = index.locate(stab);
                if (idx >= 0 && std::find(H.begin(), H.end(), idx) == H.end()) {
                    H.push_back(idx);
                    fix_in_comp[idx] = subspace_intersection(fixes[idx].basis, comp.basis);
                }
            }

            // maximal members of H below the mother
            std::vector<int> maximal;
            for (int a : H) {
                bool top = true;
                for (int b : H)
                    if (b != a && S.groups[b].members.contains(S.groups[a].members) &&
                        !(S.groups[b].members == S.groups[a].members))
                        top = false;
                if (top) maximal.push_back(a);
            }
            std::sort(maximal.begin(), maximal.end());

            // deduplicate daughters conjugate under the mother
            std::vector<int> reps;
            std::set<int> seen;
            for (int j : maximal) {
                if (seen.count(j)) continue;
                reps.push_back(j);
                for (int g : mother.members.to_indices()) {
                    Bitset conj = G.conjugate_set(S.groups[j].members, g);
                    int idx = index.locate(conj);
                    if (idx >= 0) seen.insert(idx);
                }
            }

            // kernel of the mother action on the component
            Bitset kernel = pointwise_stab_of_basis(G, mother.members, comp.basis);

            for (int j : reps) {
                BifurcationArrow a;
                a.mother = i;
                a.comp = static_cast<int>(c);
                a.daughter = j;
                a.bif_group = group_name(quotient_table(G, mother.members, kernel));
                // normalizer of the daughter within the mother
                int nsize = 0;
                for (int g : mother.members.to_indices())
                    if (G.conjugate_set(S.groups[j].members, g) == S.groups[j].members) ++nsize;
                a.quotient_order = nsize / S.groups[j].order;
                a.fix_dim = static_cast<int>(fix_in_comp[j].cols());
                a.style = a.quotient_order == 2   ? ArrowStyle::solid
                          : a.quotient_order == 1 ? ArrowStyle::dashed
                                                  : ArrowStyle::dotted;
                arrows.push_back(std::move(a));
            }
        }
    }
    return arrows;
}

// ---------------------------------------------------------------------------
// Condensation classes: orbits of symmetry types under the symmetry
// preserving automorphisms of Gamma_0.

namespace {

struct AutGroupSearch {
    const SignedGroup& G;
    std::vector<uint16_t> gens;
    std::vector<int> bfs_parent, bfs_gen, bfs_order;  // element words
    std::vector<std::vector<uint16_t>> candidates;     // per generator
    long long budget;
    long long nodes = 0;
    std::vector<std::vector<uint16_t>> found;  // full element maps

    AutGroupSearch(const SignedGroup& g, long long b) : G(g), budget(b) {}

    void run() {
        const int N = G.order();
        Bitset whole(N);
        for (int i = 0; i < N; ++i) whole.set(i);
        gens = G.generating_set(whole);
        // BFS word for every element
        bfs_parent.assign(N, -1);
        bfs_gen.assign(N, -1);
        std::vector<uint16_t> order{0};
        std::vector<char> seen(N, 0);
        seen[0] = 1;
        for (size_t h = 0; h < order.size(); ++h)
            for (size_t t = 0; t < gens.size(); ++t) {
                uint16_t y = G.mult(order[h], gens[t]);
                if (!seen[y]) {
                    seen[y] = 1;
                    bfs_parent[y] = order[h];
                    bfs_gen[y] = static_cast<int>(t);
                    order.push_back(y);
                }
            }
        bfs_order.assign(order.begin(), order.end());

        // candidate images: same element order and conjugacy class size
        auto classes = G.element_classes();
        std::vector<int> class_size(N, 0);
        for (const auto& cls : classes)
            for (uint16_t e : cls) class_size[e] = static_cast<int>(cls.size());
        candidates.resize(gens.size());
        for (size_t t = 0; t < gens.size(); ++t) {
            int og = G.element_order(gens[t]);
            for (int h = 0; h < N; ++h)
                if (G.element_order(h) == og && class_size[h] == class_size[gens[t]])
                    candidates[t].push_back(static_cast<uint16_t>(h));
        }
        std::vector<uint16_t> img(gens.size(), 0);
        extend(0, img);
    }

    void extend(size_t t, std::vector<uint16_t>& img) {
        if (t == gens.size()) {
            check(img);
            return;
        }
        for (uint16_t h : candidates[t]) {
            if (++nodes > budget) throw budget_error("Aut(Gamma_0) search budget exceeded");
            img[t] = h;
            bool ok = true;
            // pairwise product orders must match
            for (size_t s = 0; s <= t && ok; ++s) {
                if (G.element_order(G.mult(gens[s], gens[t])) !=
                    G.element_order(G.mult(img[s], img[t])))
                    ok = false;
            }
            if (ok) extend(t + 1, img);
        }
    }

    void check(const std::vector<uint16_t>& img) {
        const int N = G.order();
        std::vector<int> phi(N, -1);
        phi[0] = 0;
        for (int e : bfs_order) {
            if (e == 0) continue;
            phi[e] = G.mult(phi[bfs_parent[e]], img[bfs_gen[e]]);
        }
        // homomorphism on (element, generator) pairs implies it globally
        for (int x = 0; x < N; ++x)
            for (size_t t = 0; t < gens.size(); ++t)
                if (phi[G.mult(x, gens[t])] != G.mult(phi[x], img[t])) return;
        std::vector<char> hit(N, 0);
        for (int x = 0; x < N; ++x) {
            if (hit[phi[x]]) return;  // not a bijection
            hit[phi[x]] = 1;
        }
        found.push_back(std::vector<uint16_t>(phi.begin(), phi.end()));
    }
};

}  // namespace

CondensationResult condensation_classes(const SignedGroup& G, const SymmetryList& S,
                                        long long budget) {
    CondensationResult out;
    AutGroupSearch search(G, budget);
    try {
        search.run();
    } catch (const Error& e) {
        out.computed = false;
        out.warning = std::string("condensation skipped: ") + e.what();
        return out;
    }

    const int ntypes = static_cast<int>(S.types.size());
    // orbits of symmetry types under the symmetry-preserving automorphisms
    std::vector<int> cls(ntypes, -1);
    auto type_image = [&](const std::vector<uint16_t>& phi, int type) -> int {
        int rep = S.types[type].front();
        Bitset image(G.order());
        for (int e : S.groups[rep].members.to_indices()) image.set(phi[e]);
        int idx = locate_subgroup(S, image);
        return idx < 0 ? -1 : S.type_of[idx];
    };
    // keep only the automorphisms that permute the symmetry list
    std::vector<const std::vector<uint16_t>*> preserving;
    for (const auto& phi : search.found) {
        bool ok = true;
        for (size_t i = 0; i < S.groups.size() && ok; ++i) {
            Bitset image(G.order());
            for (int e : S.groups[i].members.to_indices()) image.set(phi[e]);
            if (locate_subgroup(S, image) < 0) ok = false;
        }
        if (ok) preserving.push_back(&phi);
    }
    for (int t = 0; t < ntypes; ++t) {
        if (cls[t] >= 0) continue;
        int id = static_cast<int>(out.classes.size());
        out.classes.push_back({});
        std::vector<int> stack{t};
        cls[t] = id;
        out.classes[id].push_back(t);
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (const auto* phi : preserving) {
                int img = type_image(*phi, cur);
                if (img >= 0 && cls[img] < 0) {
                    cls[img] = id;
                    out.classes[id].push_back(img);
                    stack.push_back(img);
                }
            }
        }
        std::sort(out.classes[id].begin(), out.classes[id].end());
    }
    out.computed = true;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

const char* style_attr(ArrowStyle s) {
    switch (s) {
        case ArrowStyle::solid: return "solid";
        case ArrowStyle::dashed: return "dashed";
        default: return "dotted";
    }
}

struct DigraphEdge {
    int from_type, to_type;
    std::string label;
    ArrowStyle style;
    bool operator<(const DigraphEdge& o) const {
        return std::tie(from_type, to_type, label, style) <
               std::tie(o.from_type, o.to_type, o.label, o.style);
    }
};

}  // namespace

std::string export_digraph(const SignedGroup& G, const SymmetryList& S,
                           const std::vector<BifurcationArrow>& arrows,
                           const CondensationResult& cond, bool condensed) {
    std::set<DigraphEdge> edges;
    for (const auto& a : arrows)
        edges.insert({S.type_of[a.mother], S.type_of[a.daughter], a.bif_group, a.style});

    std::ostringstream out;
    out << "digraph bifurcation {\n";
    out << "  rankdir=TB;\n  node [shape=" << (condensed ? "box" : "plaintext") << "];\n";

    auto type_order = [&](int t) { return S.groups[S.types[t].front()].order; };

    if (!condensed || !cond.computed) {
        if (condensed && !cond.computed) out << "  // " << cond.warning << "\n";
        // group nodes of equal subgroup order on one rank
        std::map<int, std::vector<int>, std::greater<int>> ranks;
        for (size_t t = 0; t < S.types.size(); ++t) ranks[type_order(static_cast<int>(t))].push_back(static_cast<int>(t));
        for (auto& [ord, ts] : ranks) {
            out << "  { rank=same;";
            for (int t : ts) out << " S" << t << ";";
            out << " }\n";
        }
        for (const auto& e : edges)
            out << "  S" << e.from_type << " -> S" << e.to_type << " [style=" << style_attr(e.style)
                << ", label=\"" << e.label << "\"];\n";
    } else {
        std::vector<int> class_of(S.types.size());
        for (size_t c = 0; c < cond.classes.size(); ++c)
            for (int t : cond.classes[c]) class_of[t] = static_cast<int>(c);
        std::map<int, std::vector<int>, std::greater<int>> ranks;
        for (size_t c = 0; c < cond.classes.size(); ++c) {
            std::string label;
            for (int t : cond.classes[c]) {
                if (!label.empty()) label += ", ";
                label += "S" + std::to_string(t);
            }
            out << "  C" << c << " [label=\"" << label << "\"];\n";
            ranks[type_order(cond.classes[c].front())].push_back(static_cast<int>(c));
        }
        for (auto& [ord, cs] : ranks) {
            out << "  { rank=same;";
            for (int c : cs) out << " C" << c << ";";
            out << " }\n";
        }
        // merge edges by class; numerals count connections per member type
        std::set<std::tuple<int, int, std::string, ArrowStyle>> done;
        for (const auto& e : edges) {
            int cf = class_of[e.from_type], ct = class_of[e.to_type];
            auto key = std::tuple(cf, ct, e.label, e.style);
            if (done.count(key)) continue;
            done.insert(key);
            int tail = 0, head = 0;
            int tail_rep = cond.classes[cf].front(), head_rep = cond.classes[ct].front();
            for (const auto& f : edges) {
                if (f.label != e.label || f.style != e.style) continue;
                if (f.from_type == tail_rep && class_of[f.to_type] == ct) ++tail;
                if (f.to_type == head_rep && class_of[f.from_type] == cf) ++head;
            }
            out << "  C" << cf << " -> C" << ct << " [style=" << style_attr(e.style)
                << ", label=\"" << e.label << "\"";
            if (tail > 1) out << ", taillabel=\"" << tail << "\"";
            if (head > 1) out << ", headlabel=\"" << head << "\"";
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string format_arrow_table(const std::vector<BifurcationArrow>& arrows) {
    std::ostringstream out;
    out << "# mother_i comp_k daughter_j bif_group quotient_order style fix_dim\n";
    for (const auto& a : arrows)
        out << a.mother << ' ' << a.comp << ' ' << a.daughter << ' ' << a.bif_group << ' '
            << a.quotient_order << ' ' << style_attr(a.style) << ' ' << a.fix_dim << '\n';
    return out.str();
}

std::vector<BifurcationArrow> parse_arrow_table(const std::string& text) {
    std::vector<BifurcationArrow> arrows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        BifurcationArrow a;
        std::string style;
        if (!(ls >> a.mother >> a.comp >> a.daughter >> a.bif_group >> a.quotient_order >> style >>
              a.fix_dim))
            throw parse_error("malformed arrow table line: " + line);
        a.style = style == "solid"    ? ArrowStyle::solid
                  : style == "dashed" ? ArrowStyle::dashed
                                      : ArrowStyle::dotted;
        arrows.push_back(std::move(a));
    }
    return arrows;
}

}  // namespace pde
