#include "pde/cayley.hpp"

#include <algorithm>
#include <map>

#include "pde/symmetry_group.hpp"

namespace pde {

int GroupTable::inverse(int a) const {
    for (int b = 0; b < order(); ++b)
        if (mult[a][b] == 0) return b;
    throw structure_error("group table has no inverse for element " + std::to_string(a));
}

int GroupTable::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mult[x][a];
        ++k;
    }
    return k;
}

GroupTable cyclic_group(int n) {
    GroupTable t;
    t.mult.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t.mult[a][b] = (a + b) % n;
    for (int a = 0; a < n; ++a) t.names.push_back("a" + std::to_string(a));
    return t;
}

GroupTable dihedral_group(int n) {
    // element 2q+e = r^q s^e with s r = r^-1 s
    GroupTable t;
    const int N = 2 * n;
    t.mult.assign(N, std::vector<int>(N));
    auto enc = [n](int q, int e) { return 2 * ((q % n + n) % n) + e; };
    for (int a = 0; a < N; ++a) {
        int qa = a / 2, ea = a % 2;
        for (int b = 0; b < N; ++b) {
            int qb = b / 2, eb = b % 2;
            int q = ea ? qa - qb : qa + qb;
            t.mult[a][b] = enc(q, ea ^ eb);
        }
    }
    for (int a = 0; a < N; ++a)
        t.names.push_back("r" + std::to_string(a / 2) + (a % 2 ? "s" : ""));
    return t;
}

GroupTable symmetric_group_s3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(perms.begin(), perms.end());
    GroupTable t;
    const int N = 6;
    t.mult.assign(N, std::vector<int>(N));
    auto find = [&](const std::array<int, 3>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            std::array<int, 3> q;
            for (int i = 0; i < 3; ++i) q[i] = perms[a][perms[b][i]];
            t.mult[a][b] = find(q);
        }
    const char* labels[6] = {"e", "(23)", "(12)", "(123)", "(132)", "(13)"};
    for (int a = 0; a < N; ++a) t.names.push_back(labels[a]);
    return t;
}

GroupTable quaternion_group() {
    // 0..7 = 1, -1, i, -i, j, -j, k, -k
    auto id = [](int unit, int sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
    // quaternion unit products: table[a][b] = (unit, sign)
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    GroupTable t;
    t.mult.assign(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, sa = a % 2 ? -1 : 1;
            int ub = b / 2, sb = b % 2 ? -1 : 1;
            t.mult[a][b] = id(unit[ua][ub], sa * sb * sgn[ua][ub]);
        }
    t.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return t;
}

DecoratedCayley decorate_cayley(const GroupTable& table, const std::vector<int>& generators,
                                long long aut_budget) {
    const int N = table.order();
    if (N < 1) throw structure_error("empty group");
    for (int d : generators)
        if (d <= 0 || d >= N) throw structure_error("generator index out of range or identity");

    // check that the generators generate
    {
        std::vector<char> seen(N, 0);
        std::vector<int> list{0};
        seen[0] = 1;
        for (size_t h = 0; h < list.size(); ++h)
            for (int d : generators) {
                int y = table.mult[list[h]][d];
                if (!seen[y]) {
                    seen[y] = 1;
                    list.push_back(y);
                }
            }
        if (static_cast<int>(list.size()) != N)
            throw structure_error("generators do not generate the group");
    }

    std::vector<std::pair<int, int>> edges;
    int next = N;  // decoration vertices appended after the group vertices
    auto fresh = [&next]() { return next++; };

    int inv_rank = 0, dir_rank = 0;
    for (int d : generators) {
        if (table.is_involution(d)) {
            ++inv_rank;
            for (int g = 0; g < N; ++g) {
                int h = table.mult[g][d];
                if (g > h) continue;  // one gadget per unordered pair
                edges.push_back({g, h});
                if (inv_rank >= 2) {
                    // path of inv_rank-1 extra vertices closing a cycle g..h
                    std::vector<int> path;
                    for (int t = 0; t < inv_rank - 1; ++t) path.push_back(fresh());
                    edges.push_back({g, path.front()});
                    for (size_t t = 0; t + 1 < path.size(); ++t)
                        edges.push_back({path[t], path[t + 1]});
                    edges.push_back({path.back(), h});
                }
            }
        } else {
            ++dir_rank;
            if (dir_rank == 1) {
                // direct edge with a parallel path through x, plus a tail
                // from x to the image of the square g.d^2; the skip pins the
                // edge direction even on a lone cyclic generator
                for (int g = 0; g < N; ++g) {
                    int h = table.mult[g][d];
                    int hh = table.mult[h][d];
                    int x = fresh(), yv = fresh();
                    edges.push_back({g, h});
                    edges.push_back({g, x});
                    edges.push_back({x, h});
                    edges.push_back({x, yv});
                    edges.push_back({yv, hh});
                }
            } else {
                // chain of dir_rank extra vertices with a leaf marking the
                // source side
                for (int g = 0; g < N; ++g) {
                    int h = table.mult[g][d];
                    std::vector<int> chain;
                    for (int t = 0; t < dir_rank; ++t) chain.push_back(fresh());
                    edges.push_back({g, chain.front()});
                    for (size_t t = 0; t + 1 < chain.size(); ++t)
                        edges.push_back({chain[t], chain[t + 1]});
                    edges.push_back({chain.back(), h});
                    edges.push_back({chain.front(), fresh()});
                }
            }
        }
    }

    DecoratedCayley out;
    out.graph = Graph(next, std::move(edges));
    for (int g = 0; g < N; ++g) out.group_vertices.push_back(g);
    out.aut_order = static_cast<int>(automorphisms(out.graph, aut_budget).size());
    out.verified = (out.aut_order == N);
    return out;
}

}  // namespace pde
