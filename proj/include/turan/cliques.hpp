#pragma once

#include <cstdint>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// N_r(G): number of r-vertex subsets inducing a complete graph. N_1 = n,
// N_2 = e(G), and 0 when r > n.
std::uint64_t count_cliques(const Graph& g, int r);

// N_0..N_max in one pass; entry i is N_i (N_0 = 1).
std::vector<std::uint64_t> clique_profile(const Graph& g, int max_order);

// Cliques of order r containing v (the paper's d^r(v)).
std::uint64_t cliques_at(const Graph& g, Vertex v, int r);

}  // namespace turan
