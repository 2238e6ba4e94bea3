#include "support.hpp"

#include <algorithm>
#include <functional>

namespace turan::testing {

cpp_int pascal(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<cpp_int> row{1};
  for (std::int64_t i = 1; i <= n; ++i) {
    std::vector<cpp_int> next(static_cast<std::size_t>(i) + 1, 1);
    for (std::int64_t j = 1; j < i; ++j)
      next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

int brute_matching(const Graph& g) {
  const auto edges = g.edges();
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  std::function<int(std::size_t)> go = [&](std::size_t i) -> int {
    if (i == edges.size()) return 0;
    int best = go(i + 1);
    const auto [u, v] = edges[i];
    if (!used[static_cast<std::size_t>(u)] && !used[static_cast<std::size_t>(v)]) {
      used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
      best = std::max(best, 1 + go(i + 1));
      used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = false;
    }
    return best;
  };
  return go(0);
}

std::uint64_t brute_cliques(const Graph& g, int r) {
  const int n = g.order();
  if (r > n) return 0;
  std::uint64_t count = 0;
  std::vector<int> pick;
  std::function<void(int)> go = [&](int from) {
    if (static_cast<int>(pick.size()) == r) {
      for (std::size_t i = 0; i < pick.size(); ++i)
        for (std::size_t j = i + 1; j < pick.size(); ++j)
          if (!g.adjacent(pick[i], pick[j])) return;
      ++count;
      return;
    }
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      go(v + 1);
      pick.pop_back();
    }
  };
  go(0);
  return count;
}

int brute_circumference(const Graph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<bool> on(static_cast<std::size_t>(n), false);
  std::function<void(int, int, int)> go = [&](int start, int at, int len) {
    for (int w = start; w < n; ++w) {
      if (!g.adjacent(at, w)) continue;
      if (w == start) {
        if (len >= 3) best = std::max(best, len);
      } else if (!on[static_cast<std::size_t>(w)]) {
        on[static_cast<std::size_t>(w)] = true;
        go(start, w, len + 1);
        on[static_cast<std::size_t>(w)] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    on[static_cast<std::size_t>(s)] = true;
    go(s, s, 1);
    on[static_cast<std::size_t>(s)] = false;
  }
  return best;
}

std::vector<int> brute_component_sizes(const Graph& g, const std::vector<Vertex>& x) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  for (Vertex v : x) label[static_cast<std::size_t>(v)] = -2;
  std::vector<int> sizes;
  for (int root = 0; root < n; ++root) {
    if (label[static_cast<std::size_t>(root)] != -1) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    std::vector<int> stack{root};
    label[static_cast<std::size_t>(root)] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++sizes.back();
      for (int w = 0; w < n; ++w)
        if (label[static_cast<std::size_t>(w)] == -1 && g.adjacent(v, w)) {
          label[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
    }
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1U) g.add_edge(i, j);
  return g;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_connected_graph(std::mt19937& rng, int n, double extra) {
  Graph g = random_graph(rng, n, extra);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    g.add_edge(parent(rng), v);
  }
  return g;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph out(g.order());
  for (const auto& e : g.edges())
    out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return out;
}

}  // namespace turan::testing
