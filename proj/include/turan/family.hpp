#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct FamilyReport {
  bool family_free = true;
  // Set when a cycle of length >= k_c exists: a longest cycle of G.
  std::optional<std::vector<Vertex>> cycle_witness;
  // Set when nu(G) > s: s + 1 disjoint edges.
  std::optional<std::vector<Edge>> matching_witness;
  int matching_number = 0;

  // One line per violated constraint, or "family-free".
  std::string describe(const ForbiddenFamily& fam) const;
};

FamilyReport is_family_free(const Graph& g, const ForbiddenFamily& fam);

}  // namespace turan
