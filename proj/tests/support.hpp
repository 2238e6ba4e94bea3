#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "turan/graph.hpp"

namespace turan::testing {

using boost::multiprecision::cpp_int;

// Reference implementations. They share no code with the library and are
// deliberately naive.

// Pascal's triangle.
cpp_int pascal(std::int64_t n, std::int64_t k);

// Maximum matching by trying every edge subset recursively (n <= 12).
int brute_matching(const Graph& g);

// Counts r-subsets whose pairs are all adjacent by scanning every subset.
std::uint64_t brute_cliques(const Graph& g, int r);

// Longest cycle by enumerating every simple cycle from its smallest vertex.
int brute_circumference(const Graph& g);

// Components of G - X by repeated flood fill over an adjacency matrix.
std::vector<int> brute_component_sizes(const Graph& g, const std::vector<Vertex>& x);

// Graph on n vertices from the low C(n,2) bits of `mask`, pairs in graph6
// order.
Graph graph_from_mask(int n, std::uint64_t mask);

Graph random_graph(std::mt19937& rng, int n, double p);
// Random spanning tree plus extra random edges.
Graph random_connected_graph(std::mt19937& rng, int n, double extra);

// Permutes the labels of g.
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace turan::testing
