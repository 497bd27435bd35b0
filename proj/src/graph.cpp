#include "pde/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace pde {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n <= 0) throw structure_error("graph must have at least one vertex");
    std::set<std::pair<int, int>> uniq;
    for (auto [i, j] : edges) {
        if (i == j) throw structure_error("loop edge at vertex " + std::to_string(i + 1));
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw structure_error("edge endpoint out of range");
        uniq.insert({std::min(i, j), std::max(i, j)});
    }
    edges_.assign(uniq.begin(), uniq.end());
    adj_.assign(static_cast<size_t>(n) * n, 0);
    nbr_.assign(n, {});
    for (auto [i, j] : edges_) {
        adj_[static_cast<size_t>(i) * n + j] = 1;
        adj_[static_cast<size_t>(j) * n + i] = 1;
        nbr_[i].push_back(j);
        nbr_[j].push_back(i);
    }
    for (auto& v : nbr_) std::sort(v.begin(), v.end());
    if (!is_connected()) throw structure_error("graph is not connected");
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : nbr_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

Graph parse_edgelist(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long i, j;
        if (!(ls >> i)) continue;  // blank line
        if (!(ls >> j))
            throw parse_error("line " + std::to_string(lineno) + ": expected two integers");
        std::string rest;
        if (ls >> rest)
            throw parse_error("line " + std::to_string(lineno) + ": trailing token '" + rest + "'");
        if (i < 1 || j < 1)
            throw parse_error("line " + std::to_string(lineno) + ": vertex labels are 1-based positive integers");
        n = std::max(n, static_cast<int>(std::max(i, j)));
        edges.push_back({static_cast<int>(i) - 1, static_cast<int>(j) - 1});
    }
    if (n == 0) throw parse_error("edgelist is empty");
    return Graph(n, std::move(edges));
}

Graph read_edgelist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw missing_file_error("cannot open edgelist file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edgelist(ss.str());
}

std::string format_edgelist(const Graph& g) {
    std::ostringstream out;
    for (auto [i, j] : g.edges()) out << i + 1 << ' ' << j + 1 << '\n';
    return out.str();
}

Mat laplacian(const Graph& g) {
    const int n = g.vertex_count();
    Mat L = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) L(i, i) = g.degree(i);
    for (auto [i, j] : g.edges()) {
        L(i, j) = -1.0;
        L(j, i) = -1.0;
    }
    return L;
}

}  // namespace pde
