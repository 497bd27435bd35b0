#include "pde/symmetry_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace pde {

SignedGroup SignedGroup::from_elements(std::vector<SignedSymmetry> elements) {
    SignedGroup G;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    G.elements_ = std::move(elements);
    if (G.elements_.empty()) throw structure_error("group needs at least the identity");
    G.n_ = G.elements_[0].size();
    if (!G.elements_[0].is_identity())
        throw structure_error("canonical element order must start with the identity");

    std::map<SignedSymmetry, uint16_t> index;
    for (size_t i = 0; i < G.elements_.size(); ++i)
        index[G.elements_[i]] = static_cast<uint16_t>(i);

    const int N = G.order();
    G.mult_.assign(static_cast<size_t>(N) * N, 0);
    G.inv_.assign(N, 0);
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            auto it = index.find(G.elements_[a].compose(G.elements_[b]));
            if (it == index.end()) throw structure_error("element set is not closed under composition");
            G.mult_[static_cast<size_t>(a) * N + b] = it->second;
            if (it->second == 0) G.inv_[a] = static_cast<uint16_t>(b);
        }
    }
    return G;
}

int SignedGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mult(x, a);
        ++k;
    }
    return k;
}

int SignedGroup::index_of(const SignedSymmetry& g) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it != elements_.end() && *it == g) return static_cast<int>(it - elements_.begin());
    return -1;
}

Bitset SignedGroup::closure(const std::vector<uint16_t>& gens) const {
    Bitset members(order());
    members.set(0);
    std::vector<uint16_t> list{0};
    for (size_t head = 0; head < list.size(); ++head) {
        for (uint16_t g : gens) {
            uint16_t y = mult(list[head], g);
            if (!members.test(y)) {
                members.set(y);
                list.push_back(y);
            }
        }
    }
    return members;
}

std::vector<uint16_t> SignedGroup::generating_set(const Bitset& members) const {
    std::vector<uint16_t> gens;
    Bitset have(order());
    have.set(0);
    for (int i = 0; i < order(); ++i) {
        if (!members.test(i) || have.test(i)) continue;
        gens.push_back(static_cast<uint16_t>(i));
        have = closure(gens);
    }
    return gens;
}

Bitset SignedGroup::conjugate_set(const Bitset& members, int g) const {
    Bitset out(order());
    for (int h = 0; h < order(); ++h)
        if (members.test(h)) out.set(conjugate(g, h));
    return out;
}

std::vector<std::vector<uint16_t>> SignedGroup::element_classes() const {
    std::vector<int> cls(order(), -1);
    std::vector<std::vector<uint16_t>> classes;
    for (int h = 0; h < order(); ++h) {
        if (cls[h] >= 0) continue;
        int id = static_cast<int>(classes.size());
        classes.push_back({});
        for (int g = 0; g < order(); ++g) {
            int x = conjugate(g, h);
            if (cls[x] < 0) {
                cls[x] = id;
                classes[id].push_back(static_cast<uint16_t>(x));
            }
        }
        std::sort(classes[id].begin(), classes[id].end());
    }
    return classes;
}

// ---------------------------------------------------------------------------
// Fixed-point subspaces via sign-aware union-find on vertex classes.

namespace {

struct SignedUnionFind {
    std::vector<int> parent, rank_;
    std::vector<int8_t> sgn;    // sign relative to parent
    std::vector<char> dead;     // class forced to zero

    explicit SignedUnionFind(int n) : parent(n), rank_(n, 0), sgn(n, 1), dead(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::pair<int, int> find(int x) {
        if (parent[x] == x) return {x, 1};
        auto [r, s] = find(parent[x]);
        parent[x] = r;
        sgn[x] = static_cast<int8_t>(sgn[x] * s);
        return {r, sgn[x]};
    }

    // impose u_a = rel * u_b
    void unite(int a, int b, int rel) {
        auto [ra, sa] = find(a);
        auto [rb, sb] = find(b);
        if (ra == rb) {
            if (sa != rel * sb) dead[ra] = 1;  // u = -u forces zero
            return;
        }
        if (rank_[ra] < rank_[rb]) {
            std::swap(ra, rb);
            std::swap(sa, sb);
            rel = rel;  // relation is symmetric under the swap with signs below
        }
        // attach rb under ra with sign chosen so u_a = rel*u_b holds
        parent[rb] = ra;
        sgn[rb] = static_cast<int8_t>(sa * rel * sb);
        dead[ra] = dead[ra] | dead[rb];
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
    }
};

SignedUnionFind build_fix_classes(const SignedGroup& G, const std::vector<uint16_t>& gens) {
    const int n = G.degree();
    SignedUnionFind uf(n);
    for (uint16_t gi : gens) {
        const SignedSymmetry& g = G.element(gi);
        for (int i = 0; i < n; ++i) uf.unite(g.perm[i], i, g.sign);  // u_{pi(i)} = beta u_i
    }
    return uf;
}

}  // namespace

FixSpace fix_subspace(const SignedGroup& G, const std::vector<uint16_t>& gens) {
    const int n = G.degree();
    SignedUnionFind uf = build_fix_classes(G, gens);
    std::vector<std::vector<std::pair<int, int>>> classes(n);  // root -> (vertex, sign)
    for (int i = 0; i < n; ++i) {
        auto [r, s] = uf.find(i);
        if (!uf.dead[r]) classes[r].push_back({i, s});
    }
    int dim = 0;
    for (int r = 0; r < n; ++r)
        if (!classes[r].empty()) ++dim;
    FixSpace fx;
    fx.basis = Mat::Zero(n, dim);
    int col = 0;
    for (int r = 0; r < n; ++r) {
        if (classes[r].empty()) continue;
        double scale = 1.0 / std::sqrt(static_cast<double>(classes[r].size()));
        for (auto [v, s] : classes[r]) fx.basis(v, col) = s * scale;
        ++col;
    }
    return fx;
}

Bitset pointwise_stabilizer_of_fix(const SignedGroup& G, const std::vector<uint16_t>& gens) {
    const int n = G.degree();
    SignedUnionFind uf = build_fix_classes(G, gens);
    std::vector<int> root(n);
    std::vector<int> rsign(n);
    std::vector<char> zero(n);
    for (int i = 0; i < n; ++i) {
        auto [r, s] = uf.find(i);
        root[i] = r;
        rsign[i] = s;
        zero[i] = uf.dead[r];
    }
    Bitset out(G.order());
    for (int gi = 0; gi < G.order(); ++gi) {
        const SignedSymmetry& g = G.element(gi);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            int j = g.perm[i];  // condition u_j = beta u_i on all of fix
            if (zero[i] && zero[j]) continue;
            if (zero[i] != zero[j]) {
                ok = false;
            } else {
                ok = root[i] == root[j] && rsign[j] == g.sign * rsign[i];
            }
        }
        if (ok) out.set(gi);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Graph automorphisms: equitable partition refinement plus backtracking.

namespace {

std::vector<int> refine_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n);
    for (int i = 0; i < n; ++i) color[i] = g.degree(i);
    // normalize
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> s;
            s.push_back(color[i]);
            std::vector<int> nb;
            for (int j : g.neighbors(i)) nb.push_back(color[j]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[i] = {std::move(s), i};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int c = 0;
        for (int k = 0; k < n; ++k) {
            if (k > 0 && sorted[k].first != sorted[k - 1].first) ++c;
            next[sorted[k].second] = c;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

struct AutSearch {
    const Graph& g;
    std::vector<int> color;
    std::vector<int> order;    // vertex visit order
    std::vector<int> img;      // partial map, -1 unset
    std::vector<char> used;
    long long nodes = 0;
    long long budget;
    std::vector<SignedSymmetry>* out;

    AutSearch(const Graph& graph, long long b, std::vector<SignedSymmetry>* o)
        : g(graph), budget(b), out(o) {}

    void run() {
        const int n = g.vertex_count();
        color = refine_colors(g);
        // BFS-ish order starting from the rarest color class keeps the
        // adjacency consistency check selective early.
        std::vector<int> freq(n + 1, 0);
        for (int c : color) ++freq[c];
        int start = 0;
        for (int i = 1; i < n; ++i)
            if (std::tuple(freq[color[i]], color[i], i) < std::tuple(freq[color[start]], color[start], start))
                start = i;
        std::vector<char> seen(n, 0);
        order.push_back(start);
        seen[start] = 1;
        for (size_t h = 0; h < order.size(); ++h)
            for (int w : g.neighbors(order[h]))
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
        for (int i = 0; i < n; ++i)
            if (!seen[i]) order.push_back(i);  // unreachable only if disconnected

        img.assign(n, -1);
        used.assign(n, 0);
        extend(0);
    }

    void extend(int depth) {
        const int n = g.vertex_count();
        if (depth == n) {
            SignedSymmetry a;
            a.perm = img;
            a.sign = +1;
            out->push_back(a);
            return;
        }
        int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[w] || color[w] != color[v]) continue;
            if (++nodes > budget) throw budget_error("automorphism search budget exceeded");
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                int u = order[d];
                if (g.adjacent(v, u) != g.adjacent(w, img[u])) ok = false;
            }
            if (!ok) continue;
            img[v] = w;
            used[w] = 1;
            extend(depth + 1);
            img[v] = -1;
            used[w] = 0;
        }
    }
};

}  // namespace

std::vector<SignedSymmetry> automorphisms(const Graph& g, long long node_budget) {
    std::vector<SignedSymmetry> out;
    AutSearch search(g, node_budget, &out);
    search.run();
    std::sort(out.begin(), out.end());
    return out;
}

SignedGroup build_gamma0(const std::vector<SignedSymmetry>& auts, bool odd) {
    std::vector<SignedSymmetry> elems = auts;
    if (odd) {
        for (const auto& a : auts) {
            SignedSymmetry m = a;
            m.sign = -1;
            elems.push_back(m);
        }
    }
    return SignedGroup::from_elements(std::move(elems));
}

// ---------------------------------------------------------------------------
// Isotropy subgroup enumeration.
//
// A subgroup is an isotropy subgroup iff it equals the pointwise stabilizer
// of its own fixed-point subspace.  Every such subgroup is reachable from
// the stabilizer closures of cyclic subgroups by repeated join-then-close,
// so a worklist over (known subgroup, cyclic seed) pairs enumerates them all.

namespace {

struct SubgroupSet {
    std::unordered_map<uint64_t, std::vector<int>> by_hash;
    std::vector<Subgroup> list;

    int find(const Bitset& b) const {
        auto it = by_hash.find(b.hash());
        if (it == by_hash.end()) return -1;
        for (int i : it->second)
            if (list[i].members == b) return i;
        return -1;
    }

    int insert(const SignedGroup& G, const Bitset& b, std::vector<uint16_t> hint_gens) {
        int found = find(b);
        if (found >= 0) return found;
        Subgroup s;
        s.members = b;
        s.order = b.count();
        // extend hint generators until they generate the full member set
        std::vector<uint16_t> gens;
        for (uint16_t h : hint_gens)
            if (b.test(h)) gens.push_back(h);
        Bitset have = G.closure(gens);
        while (!(have == b)) {
            for (int i = 0; i < G.order(); ++i) {
                if (b.test(i) && !have.test(i)) {
                    gens.push_back(static_cast<uint16_t>(i));
                    break;
                }
            }
            have = G.closure(gens);
        }
        s.gens = std::move(gens);
        int id = static_cast<int>(list.size());
        list.push_back(std::move(s));
        by_hash[b.hash()].push_back(id);
        return id;
    }
};

}  // namespace

SymmetryList isotropy_symmetries(const SignedGroup& G, int subgroup_budget) {
    const int N = G.order();
    SubgroupSet S;

    // Seeds: stabilizer closures of cyclic subgroups (identity included).
    std::vector<int> seeds;
    {
        std::unordered_map<uint64_t, std::vector<int>> seen;
        for (int g = 0; g < N; ++g) {
            Bitset closed = pointwise_stabilizer_of_fix(G, {static_cast<uint16_t>(g)});
            int id = S.insert(G, closed, {static_cast<uint16_t>(g)});
            bool fresh = true;
            for (int other : seen[closed.hash()])
                if (S.list[other].members == closed) fresh = false;
            if (fresh) {
                seen[closed.hash()].push_back(id);
                seeds.push_back(id);
            }
        }
        // Gamma_0 itself is always an isotropy subgroup.
        Bitset whole(N);
        for (int i = 0; i < N; ++i) whole.set(i);
        int id = S.insert(G, whole, G.generating_set(whole));
        seeds.push_back(id);
    }

    std::vector<int> queue = seeds;
    for (size_t head = 0; head < queue.size(); ++head) {
        int ti = queue[head];
        for (size_t si = 0; si < seeds.size(); ++si) {
            const Subgroup& T = S.list[ti];
            const Subgroup& C = S.list[seeds[si]];
            if (T.members.contains(C.members)) continue;
            std::vector<uint16_t> gens = T.gens;
            gens.insert(gens.end(), C.gens.begin(), C.gens.end());
            Bitset joined = G.closure(gens);
            Bitset closed = pointwise_stabilizer_of_fix(G, gens);
            if (!closed.contains(joined))
                throw numeric_error("stabilizer closure lost generators");
            if (S.find(closed) < 0) {
                if (static_cast<int>(S.list.size()) >= subgroup_budget)
                    throw budget_error("isotropy subgroup enumeration exceeded budget of " +
                                       std::to_string(subgroup_budget) + " subgroups");
                int id = S.insert(G, closed, gens);
                queue.push_back(id);
            }
        }
    }

    // Order: Gamma_0 first, then descending order, then member-set lex.
    std::vector<int> perm(S.list.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        const Subgroup& A = S.list[a];
        const Subgroup& B = S.list[b];
        if (A.order != B.order) return A.order > B.order;
        return A.members < B.members;
    });

    SymmetryList out;
    out.groups.reserve(S.list.size());
    std::unordered_map<uint64_t, std::vector<int>> where;
    for (int idx : perm) {
        where[S.list[idx].members.hash()].push_back(static_cast<int>(out.groups.size()));
        out.groups.push_back(std::move(S.list[idx]));
    }
    auto locate = [&](const Bitset& b) -> int {
        auto it = where.find(b.hash());
        if (it == where.end()) return -1;
        for (int i : it->second)
            if (out.groups[i].members == b) return i;
        return -1;
    };

    out.type_of.assign(out.groups.size(), -1);
    for (size_t i = 0; i < out.groups.size(); ++i) {
        if (out.type_of[i] >= 0) continue;
        int type = static_cast<int>(out.types.size());
        out.types.push_back({});
        for (int g = 0; g < N; ++g) {
            Bitset conj = G.conjugate_set(out.groups[i].members, g);
            int j = locate(conj);
            if (j < 0) throw numeric_error("conjugate of an isotropy subgroup is missing from the list");
            if (out.type_of[j] < 0) {
                out.type_of[j] = type;
                out.types[type].push_back(j);
            }
        }
        std::sort(out.types[type].begin(), out.types[type].end());
    }
    return out;
}

Bitset stabilizer_of_vector(const SignedGroup& G, const Vec& u, double tol) {
    const double scale = tol * std::max(1.0, u.lpNorm<Eigen::Infinity>());
    Bitset out(G.order());
    for (int gi = 0; gi < G.order(); ++gi) {
        const SignedSymmetry& g = G.element(gi);
        bool ok = true;
        for (int i = 0; i < u.size() && ok; ++i)
            if (std::abs(g.sign * u[i] - u[g.perm[i]]) > scale) ok = false;
        if (ok) out.set(gi);
    }
    return out;
}

}  // namespace pde
