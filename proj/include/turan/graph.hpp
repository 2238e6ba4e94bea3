#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace turan {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Fixed-universe bit set over vertex labels 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  int universe() const noexcept { return universe_; }
  bool contains(Vertex v) const noexcept {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v) noexcept { words_[static_cast<std::size_t>(v) >> 6] |= bit(v); }
  void erase(Vertex v) noexcept { words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v); }
  void clear() noexcept;
  void fill() noexcept;

  int count() const noexcept;
  bool empty() const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  // Smallest member, or -1.
  Vertex first() const noexcept;
  // Smallest member strictly greater than v, or -1.
  Vertex next(Vertex v) const noexcept;

  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& subtract(const VertexSet& other) noexcept;

  std::vector<Vertex> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int b = __builtin_ctzll(word);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        word &= word - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static std::uint64_t bit(Vertex v) noexcept { return std::uint64_t{1} << (v & 63); }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

VertexSet operator&(VertexSet a, const VertexSet& b);
VertexSet operator|(VertexSet a, const VertexSet& b);

// Simple undirected graph on vertices 0..order-1 stored as bit rows, so
// adjacency tests are constant time at every order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return size_; }

  bool adjacent(Vertex u, Vertex v) const;
  const VertexSet& neighbors(Vertex v) const;
  int degree(Vertex v) const;

  // Returns false when the edge is already present. Loops and labels
  // outside 0..order-1 throw PreconditionError.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  void isolate(Vertex v);

  // Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // Subgraph induced by `vertices`; vertex vertices[i] becomes label i.
  Graph induced(std::span<const Vertex> vertices) const;

  VertexSet all_vertices() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::size_t size_ = 0;
  std::vector<VertexSet> adjacency_;
};

Graph complete_graph(int order);
Graph cycle_graph(int order);
Graph path_graph(int order);
Graph star_graph(int order);  // K_{1,order-1} centred at 0
Graph perfect_matching_graph(int edges);

// Connected components restricted to `allowed` (all vertices when absent),
// each sorted ascending, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(
    const Graph& g, const std::optional<VertexSet>& allowed = std::nullopt);
bool is_connected(const Graph& g);

// The forbidden family {C_{>=k_c}, M_{s+1}} together with the counted
// clique order r.
struct ForbiddenFamily {
  std::optional<int> cycle_min_len;   // forbids every cycle of length >= this
  std::optional<int> matching_bound;  // requires matching number <= this
  int clique_order = 2;

  void validate() const;
  std::string describe() const;

  friend bool operator==(const ForbiddenFamily&, const ForbiddenFamily&) = default;
};

}  // namespace turan
