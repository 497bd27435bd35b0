#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pde/common.hpp"

namespace pde {

// Simple connected graph. Vertices are 1-based in files, 0-based internally.
class Graph {
public:
    Graph() = default;

    // edges are 0-based pairs; duplicates are collapsed, loops rejected.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool adjacent(int i, int j) const { return adj_[static_cast<size_t>(i) * n_ + j] != 0; }
    int degree(int i) const { return static_cast<int>(nbr_[i].size()); }
    const std::vector<int>& neighbors(int i) const { return nbr_[i]; }
    bool is_connected() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // sorted, i < j
    std::vector<char> adj_;
    std::vector<std::vector<int>> nbr_;
};

// Parses "i j" pairs, one per line, 1-based; '#' starts a comment line.
// Rejects loops and disconnected graphs.
Graph parse_edgelist(const std::string& text);
Graph read_edgelist_file(const std::string& path);
std::string format_edgelist(const Graph& g);

// Degree-minus-adjacency matrix; every row sums to zero.
Mat laplacian(const Graph& g);

}  // namespace pde
