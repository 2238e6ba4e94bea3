#include "turan/cliques.hpp"

#include "turan/errors.hpp"

namespace turan {
namespace {

// Extends a clique by members of `candidates` (all larger than the last
// chosen vertex), tallying the clique orders reached.
void extend(const Graph& g, const VertexSet& candidates, int depth, int max_order,
            std::vector<std::uint64_t>& tally, std::vector<VertexSet>& scratch) {
  if (depth == max_order) return;
  candidates.for_each([&](Vertex v) {
    ++tally[static_cast<std::size_t>(depth + 1)];
    if (depth + 1 == max_order) return;
    VertexSet& next = scratch[static_cast<std::size_t>(depth)];
    next = candidates;
    next &= g.neighbors(v);
    // keep only labels above v so each clique is produced once
    for (Vertex w = next.first(); w != -1 && w <= v; w = next.next(w)) next.erase(w);
    if (!next.empty()) extend(g, next, depth + 1, max_order, tally, scratch);
  });
}

}  // namespace

std::vector<std::uint64_t> clique_profile(const Graph& g, int max_order) {
  detail::require(max_order >= 0, "clique order must be non-negative");
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(max_order) + 1, 0);
  tally[0] = 1;
  if (max_order == 0 || g.order() == 0) return tally;
  std::vector<VertexSet> scratch(static_cast<std::size_t>(max_order), VertexSet(g.order()));
  extend(g, g.all_vertices(), 0, max_order, tally, scratch);
  return tally;
}

std::uint64_t count_cliques(const Graph& g, int r) {
  detail::require(r >= 1, "count_cliques: r must be >= 1");
  if (r > g.order()) return 0;
  if (r == 1) return static_cast<std::uint64_t>(g.order());
  if (r == 2) return g.size();
  return clique_profile(g, r)[static_cast<std::size_t>(r)];
}

std::uint64_t cliques_at(const Graph& g, Vertex v, int r) {
  detail::require(r >= 1, "cliques_at: r must be >= 1");
  if (r == 1) return 1;
  const auto& nb = g.neighbors(v);
  std::vector<Vertex> members = nb.members();
  return count_cliques(g.induced(members), r - 1);
}

}  // namespace turan
