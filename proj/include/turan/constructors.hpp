#pragma once

#include <cstdint>

#include "turan/block_star.hpp"
#include "turan/graph.hpp"

namespace turan {

// Largest order a witness is rendered at; beyond it only the formula side is
// available and SizeLimitError is thrown.
inline constexpr std::int64_t kMaxRenderOrder = 20000;

// Clique on vertices 0..k-a-1; the dominators are 0..a-1 and every later
// vertex is joined to exactly them.
Graph build_H(const HGraphParams& params);

// Central block first (hub = vertex 0), then each attached clique in
// non-increasing order, sharing only the hub.
Graph build_block_star(const BlockStarSpec& spec);

// Witness of ex(n, K_r, {C_{>=2k+1}, M_{s+1}}) for the applicable case.
Graph build_extremal_odd(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t r);
// Rendered argmax witness of ex(n, K_r, {C_{>=2k}, M_{s+1}}).
Graph build_extremal_even(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t r);

// St^1(n,2k,q): H_{n-(q-1)(2k-2),2k-1,k-1} with q-1 blocks K_{2k-1}.
// St^2(n,2k,q): the same with central block H_{n-(q-1)(2k-2),2k,k-1}.
BlockStarSpec st1_spec(std::int64_t n, std::int64_t k, std::int64_t q);
BlockStarSpec st2_spec(std::int64_t n, std::int64_t k, std::int64_t q);
Graph build_St1(std::int64_t n, std::int64_t k, std::int64_t q);
Graph build_St2(std::int64_t n, std::int64_t k, std::int64_t q);

// q copies of K_{k-1} and one K_{p+1} sharing vertex 0, n = q(k-2) + p + 1.
BlockStarSpec woodall_G0_spec(std::int64_t n, std::int64_t k);
Graph build_woodall_G0(std::int64_t n, std::int64_t k);

// Complete k-partite graph: one class of n - s vertices first, then k - 1
// classes of total size s as equal as possible, larger ones first.
Graph build_multipartite_G(std::int64_t n, std::int64_t k, std::int64_t s);

}  // namespace turan
