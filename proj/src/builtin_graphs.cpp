#include "pde/builtin_graphs.hpp"

#include <array>
#include <cmath>
#include <map>

#include "pde/cayley.hpp"

namespace pde {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, edges);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer cycle
        edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
        edges.push_back({i, 5 + i});                // spokes
    }
    return Graph(10, edges);
}

namespace {

// icosahedron geometry: 12 vertices, 30 edges, 20 triangular faces
struct Icosahedron {
    std::vector<std::array<double, 3>> pos;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 3>> faces;

    Icosahedron() {
        const double phi = 0.5 * (1.0 + std::sqrt(5.0));
        for (double a : {-1.0, 1.0})
            for (double b : {-phi, phi}) {
                pos.push_back({0, a, b});
                pos.push_back({a, b, 0});
                pos.push_back({b, 0, a});
            }
        auto d2 = [&](int i, int j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += (pos[i][k] - pos[j][k]) * (pos[i][k] - pos[j][k]);
            return s;
        };
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j)
                if (std::abs(d2(i, j) - 4.0) < 1e-9) edges.push_back({i, j});
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j)
                for (int k = j + 1; k < 12; ++k)
                    if (std::abs(d2(i, j) - 4.0) < 1e-9 && std::abs(d2(j, k) - 4.0) < 1e-9 &&
                        std::abs(d2(i, k) - 4.0) < 1e-9)
                        faces.push_back({i, j, k});
    }

    bool adjacent(int i, int j) const {
        for (auto [a, b] : edges)
            if ((a == i && b == j) || (a == j && b == i)) return true;
        return false;
    }
};

}  // namespace

Graph dodecahedron_graph() {
    // dual of the icosahedron: vertices are faces, edges join faces
    // sharing an icosahedron edge
    Icosahedron ico;
    std::vector<std::pair<int, int>> edges;
    auto shared = [&](const std::array<int, 3>& f, const std::array<int, 3>& g) {
        int count = 0;
        for (int a : f)
            for (int b : g)
                if (a == b) ++count;
        return count;
    };
    for (size_t i = 0; i < ico.faces.size(); ++i)
        for (size_t j = i + 1; j < ico.faces.size(); ++j)
            if (shared(ico.faces[i], ico.faces[j]) == 2)
                edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    return Graph(20, edges);
}

Graph truncated_icosahedron_graph() {
    // vertices are (icosahedron vertex, incident edge) flags; each vertex of
    // the icosahedron becomes a pentagon, each edge contributes one edge
    Icosahedron ico;
    std::map<std::pair<int, int>, int> flag;  // (vertex, edge index)
    int next = 0;
    std::vector<std::vector<int>> incident(12);
    for (size_t e = 0; e < ico.edges.size(); ++e) {
        incident[ico.edges[e].first].push_back(static_cast<int>(e));
        incident[ico.edges[e].second].push_back(static_cast<int>(e));
    }
    for (int v = 0; v < 12; ++v)
        for (int e : incident[v]) flag[{v, e}] = next++;

    std::vector<std::pair<int, int>> edges;
    auto other = [&](int e, int v) {
        return ico.edges[e].first == v ? ico.edges[e].second : ico.edges[e].first;
    };
    // pentagon edges: two flags at v are joined when the far endpoints of
    // their edges are adjacent (the edges share a triangular face at v)
    for (int v = 0; v < 12; ++v)
        for (size_t x = 0; x < incident[v].size(); ++x)
            for (size_t y = x + 1; y < incident[v].size(); ++y) {
                int e1 = incident[v][x], e2 = incident[v][y];
                if (ico.adjacent(other(e1, v), other(e2, v)))
                    edges.push_back({flag[{v, e1}], flag[{v, e2}]});
            }
    // original edges survive between their two flags
    for (size_t e = 0; e < ico.edges.size(); ++e)
        edges.push_back({flag[{ico.edges[e].first, static_cast<int>(e)}],
                         flag[{ico.edges[e].second, static_cast<int>(e)}]});
    return Graph(60, edges);
}

Graph builtin_graph(const std::string& name) {
    if (name.rfind("path-", 0) == 0) return path_graph(std::stoi(name.substr(5)));
    if (name.rfind("cycle-", 0) == 0) return cycle_graph(std::stoi(name.substr(6)));
    if (name == "petersen") return petersen_graph();
    if (name == "dodecahedron") return dodecahedron_graph();
    if (name == "soccerball") return truncated_icosahedron_graph();
    if (name == "cayley-z5") return decorate_cayley(cyclic_group(5), {1}).graph;
    if (name == "cayley-s3") return decorate_cayley(symmetric_group_s3(), {2, 1}).graph;
    if (name == "cayley-q8") return decorate_cayley(quaternion_group(), {2, 4}).graph;
    throw parse_error("unknown builtin graph: " + name);
}

}  // namespace pde
