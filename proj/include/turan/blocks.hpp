#pragma once

#include <cstddef>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Maximal 2-connected subgraphs and bridges as sorted vertex lists, in
// lexicographic order. Isolated vertices are singleton blocks.
std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g);
std::vector<Vertex> cut_vertices(const Graph& g);

// Blocks B_1..B_h of a connected graph ordered so that for i >= 2 the block
// B_i meets B_1 u ... u B_{i-1} in exactly one vertex u_i.
struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;     // ascending
  std::vector<Vertex> representatives;  // u_i; entry 0 is -1
};

// B_1 is the lexicographically smallest block. Among blocks that can come
// next, the one with the smallest u_i (then smallest vertex list) is taken.
// Disconnected input throws DisconnectedGraphError.
BlockDecomposition block_decomposition(const Graph& g);

// Same ordering rule but starting from blocks[first] of the default order.
BlockDecomposition block_decomposition(const Graph& g, std::size_t first);

// St(G, B_1, u_1): every later block B_i is re-attached at u_1 by replacing
// its edges v u_i with v u_1. `b1_index` indexes block_decomposition(g).blocks.
Graph star_transform(const Graph& g, std::size_t b1_index, Vertex u1);

// G[v -> A]: drop every edge at v, then join v to each vertex of A.
Graph switch_vertex(const Graph& g, Vertex v, const std::vector<Vertex>& targets);

}  // namespace turan
