#pragma once

#include <string>

#include "pde/graph.hpp"

namespace pde {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph petersen_graph();
Graph dodecahedron_graph();
Graph truncated_icosahedron_graph();

// named generators for the CLI: path-N, cycle-N, petersen, dodecahedron,
// soccerball, cayley-z5, cayley-s3, cayley-q8
Graph builtin_graph(const std::string& name);

}  // namespace pde
