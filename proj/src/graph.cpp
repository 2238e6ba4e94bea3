#include "turan/graph.hpp"

#include <algorithm>
#include <sstream>

#include "turan/errors.hpp"

namespace turan {

VertexSet::VertexSet(int universe)
    : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

void VertexSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

void VertexSet::fill() noexcept {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  const int tail = universe_ & 63;
  if (tail != 0 && !words_.empty()) words_.back() = (std::uint64_t{1} << tail) - 1;
}

int VertexSet::count() const noexcept {
  int c = 0;
  for (auto w : words_) c += __builtin_popcountll(w);
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + __builtin_ctzll(words_[w]));
  return -1;
}

Vertex VertexSet::next(Vertex v) const noexcept {
  ++v;
  if (v >= universe_) return -1;
  std::size_t w = static_cast<std::size_t>(v) >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (v & 63));
  while (true) {
    if (word != 0) return static_cast<Vertex>(w * 64 + __builtin_ctzll(word));
    if (++w == words_.size()) return -1;
    word = words_[w];
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

Graph::Graph(int order) : order_(order) {
  detail::require(order >= 0, "graph order must be non-negative");
  adjacency_.assign(static_cast<std::size_t>(order), VertexSet(order));
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_) {
    std::ostringstream os;
    os << "vertex " << v << " outside 0.." << order_ - 1;
    throw PreconditionError(os.str());
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(u)].contains(v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const { return neighbors(v).count(); }

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  detail::require(u != v, "loops are not allowed (vertex " + std::to_string(u) + ")");
  auto& row = adjacency_[static_cast<std::size_t>(u)];
  if (row.contains(v)) return false;
  row.insert(v);
  adjacency_[static_cast<std::size_t>(v)].insert(u);
  ++size_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  auto& row = adjacency_[static_cast<std::size_t>(u)];
  if (!row.contains(v)) return false;
  row.erase(v);
  adjacency_[static_cast<std::size_t>(v)].erase(u);
  --size_;
  return true;
}

void Graph::isolate(Vertex v) {
  for (Vertex w : neighbors(v).members()) remove_edge(v, w);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (Vertex u = 0; u < order_; ++u) {
    adjacency_[static_cast<std::size_t>(u)].for_each([&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) sub.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return sub;
}

VertexSet Graph::all_vertices() const {
  VertexSet s(order_);
  s.fill();
  return s;
}

Graph complete_graph(int order) {
  Graph g(order);
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int order) {
  detail::require(order >= 3, "a cycle needs at least 3 vertices");
  Graph g(order);
  for (Vertex v = 0; v < order; ++v) g.add_edge(v, (v + 1) % order);
  return g;
}

Graph path_graph(int order) {
  Graph g(order);
  for (Vertex v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int order) {
  Graph g(order);
  for (Vertex v = 1; v < order; ++v) g.add_edge(0, v);
  return g;
}

Graph perfect_matching_graph(int edges) {
  Graph g(2 * edges);
  for (Vertex i = 0; i < edges; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const std::optional<VertexSet>& allowed) {
  VertexSet left = allowed ? *allowed : g.all_vertices();
  std::vector<std::vector<Vertex>> out;
  for (Vertex root = left.first(); root != -1; root = left.first()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.insert(root);
    left.erase(root);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet grown(g.order());
      frontier.for_each([&](Vertex v) { grown |= g.neighbors(v); });
      grown &= left;
      left.subtract(grown);
      frontier = std::move(grown);
    }
    out.push_back(comp.members());
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

void ForbiddenFamily::validate() const {
  if (cycle_min_len) detail::require(*cycle_min_len >= 3, "cycle threshold k_c must be >= 3");
  if (matching_bound) detail::require(*matching_bound >= 0, "matching bound s must be >= 0");
  detail::require(clique_order >= 2, "clique order r must be >= 2");
}

std::string ForbiddenFamily::describe() const {
  std::ostringstream os;
  os << "{";
  const char* sep = "";
  if (cycle_min_len) {
    os << "C_{>=" << *cycle_min_len << "}";
    sep = ", ";
  }
  if (matching_bound) os << sep << "M_" << *matching_bound + 1;
  os << "}, counting K_" << clique_order;
  return os.str();
}

}  // namespace turan
