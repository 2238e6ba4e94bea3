#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct CircumferenceResult {
  int length = 0;             // longest cycle found; 0 for forests
  std::vector<Vertex> cycle;  // its vertices in traversal order
  bool budget_exceeded = false;  // length is then only a lower bound
  std::uint64_t expansions = 0;
};

// Exact longest cycle by depth-first search over simple paths, run per
// block. Twin vertices are explored in label order only, and a path is
// abandoned once the vertices still reachable cannot beat the best cycle.
// `budget` caps the number of path extensions.
CircumferenceResult circumference(const Graph& g, std::optional<std::uint64_t> budget = std::nullopt);

// First cycle of length >= k found, or nothing. Every cycle lies inside one
// block, so blocks with fewer than k vertices are skipped.
std::optional<std::vector<Vertex>> find_cycle_geq(const Graph& g, int k);
bool has_cycle_geq(const Graph& g, int k);

}  // namespace turan
