#include "turan/blocks.hpp"

#include <algorithm>
#include <utility>

#include "turan/errors.hpp"

namespace turan {

std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g) {
  const int n = g.order();
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<Vertex>> adj(un);
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).members();

  std::vector<int> disc(un, -1), low(un, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Vertex>> blocks;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    if (adj[static_cast<std::size_t>(root)].empty()) {
      disc[static_cast<std::size_t>(root)] = timer++;
      blocks.push_back({root});
      continue;
    }
    std::vector<Frame> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto fv = static_cast<std::size_t>(f.v);
      if (f.next < adj[fv].size()) {
        const Vertex w = adj[fv][f.next++];
        const auto uw = static_cast<std::size_t>(w);
        if (disc[uw] == -1) {
          edge_stack.push_back({f.v, w});
          disc[uw] = low[uw] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[uw] < disc[fv]) {
          edge_stack.push_back({f.v, w});
          low[fv] = std::min(low[fv], disc[uw]);
        }
        continue;
      }
      const Vertex child = f.v;
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex v = stack.back().v;
      const auto uv = static_cast<std::size_t>(v);
      low[uv] = std::min(low[uv], low[static_cast<std::size_t>(child)]);
      if (low[static_cast<std::size_t>(child)] >= disc[uv]) {
        VertexSet members(n);
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          members.insert(e.u);
          members.insert(e.v);
          if (e.u == v && e.v == child) break;
        }
        blocks.push_back(members.members());
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  for (const auto& b : biconnected_blocks(g))
    for (Vertex v : b) ++seen[static_cast<std::size_t>(v)];
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (seen[static_cast<std::size_t>(v)] > 1) out.push_back(v);
  return out;
}

namespace {

BlockDecomposition order_blocks(const Graph& g, std::vector<std::vector<Vertex>> blocks, std::size_t first) {
  BlockDecomposition d;
  d.cut_vertices = cut_vertices(g);
  std::vector<char> placed(blocks.size(), 0);
  VertexSet covered(g.order());
  auto place = [&](std::size_t i, Vertex rep) {
    placed[i] = 1;
    for (Vertex v : blocks[i]) covered.insert(v);
    d.blocks.push_back(blocks[i]);
    d.representatives.push_back(rep);
  };
  place(first, -1);
  while (d.blocks.size() < blocks.size()) {
    std::size_t best = blocks.size();
    Vertex best_rep = -1;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (placed[i]) continue;
      int shared = 0;
      Vertex rep = -1;
      for (Vertex v : blocks[i])
        if (covered.contains(v)) {
          ++shared;
          rep = v;
        }
      if (shared != 1) continue;
      if (best == blocks.size() || rep < best_rep || (rep == best_rep && blocks[i] < blocks[best])) {
        best = i;
        best_rep = rep;
      }
    }
    if (best == blocks.size()) throw DisconnectedGraphError("block_decomposition: graph is not connected");
    place(best, best_rep);
  }
  return d;
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) { return block_decomposition(g, 0); }

BlockDecomposition block_decomposition(const Graph& g, std::size_t first) {
  if (g.order() == 0 || !is_connected(g))
    throw DisconnectedGraphError("block_decomposition: graph must be connected and non-empty");
  auto blocks = biconnected_blocks(g);
  detail::require(first < blocks.size(), "block_decomposition: block index out of range");
  auto d = order_blocks(g, std::move(blocks), 0);
  if (first == 0) return d;
  return order_blocks(g, std::move(d.blocks), first);
}

Graph star_transform(const Graph& g, std::size_t b1_index, Vertex u1) {
  const auto d = block_decomposition(g, b1_index);
  const auto& b1 = d.blocks.front();
  detail::require(std::binary_search(b1.begin(), b1.end(), u1),
                  "star_transform: u1 = " + std::to_string(u1) + " is not a vertex of B1");
  Graph h = g;
  for (std::size_t i = 1; i < d.blocks.size(); ++i) {
    const Vertex ui = d.representatives[i];
    if (ui == u1) continue;
    // Edges of B_i at u_i are untouched by earlier steps, so adjacency in
    // the original graph identifies them.
    for (Vertex v : d.blocks[i]) {
      if (v == ui || !g.adjacent(v, ui)) continue;
      h.remove_edge(v, ui);
      h.add_edge(v, u1);
    }
  }
  return h;
}

Graph switch_vertex(const Graph& g, Vertex v, const std::vector<Vertex>& targets) {
  detail::require(v >= 0 && v < g.order(), "switch_vertex: vertex out of range");
  detail::require(std::find(targets.begin(), targets.end(), v) == targets.end(),
                  "switch_vertex: v must not belong to A");
  Graph h = g;
  h.isolate(v);
  for (Vertex a : targets) h.add_edge(v, a);
  return h;
}

}  // namespace turan
