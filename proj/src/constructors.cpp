#include "turan/constructors.hpp"

#include "turan/errors.hpp"
#include "turan/formulas.hpp"
#include "turan/optimizer.hpp"

namespace turan {
namespace {

void check_render(std::int64_t order) {
  if (order > kMaxRenderOrder)
    throw SizeLimitError("graph of order " + std::to_string(order) + " exceeds the render limit " +
                         std::to_string(kMaxRenderOrder));
}

void add_clique(Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
}

}  // namespace

Graph build_H(const HGraphParams& params) {
  params.validate();
  check_render(params.n);
  Graph g(static_cast<int>(params.n));
  const auto c = static_cast<Vertex>(params.clique_order());
  const auto a = static_cast<Vertex>(params.a);
  for (Vertex u = 0; u < c; ++u)
    for (Vertex v = u + 1; v < c; ++v) g.add_edge(u, v);
  for (Vertex v = c; v < params.n; ++v)
    for (Vertex d = 0; d < a; ++d) g.add_edge(d, v);
  return g;
}

Graph build_block_star(const BlockStarSpec& spec) {
  spec.validate();
  check_render(spec.order());
  Graph g(static_cast<int>(spec.order()));
  const auto m = static_cast<Vertex>(spec.central_order());
  if (const auto* h = std::get_if<HGraphParams>(&spec.central)) {
    const Graph central = build_H(*h);
    for (const auto& e : central.edges()) g.add_edge(e.u, e.v);
  } else {
    std::vector<Vertex> vs(static_cast<std::size_t>(m));
    for (Vertex v = 0; v < m; ++v) vs[static_cast<std::size_t>(v)] = v;
    add_clique(g, vs);
  }
  Vertex next = m;
  for (auto c : spec.sorted_attached()) {
    std::vector<Vertex> vs{0};
    for (std::int64_t i = 1; i < c; ++i) vs.push_back(next++);
    add_clique(g, vs);
  }
  return g;
}

Graph build_extremal_odd(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t r) {
  return build_block_star(ex_odd(n, k, s, r).witness);
}

Graph build_extremal_even(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t r) {
  return build_block_star(ex_even(n, k, s, r).witness);
}

namespace {

BlockStarSpec st_spec(std::int64_t n, std::int64_t k, std::int64_t q, std::int64_t central_k) {
  detail::require(k >= 2, "St(n,2k,q) needs k >= 2");
  detail::require(q >= 1, "St(n,2k,q) needs q >= 1");
  BlockStarSpec spec;
  spec.central = HGraphParams{n - (q - 1) * (2 * k - 2), central_k, k - 1};
  spec.attached.assign(static_cast<std::size_t>(q - 1), 2 * k - 1);
  spec.validate();
  return spec;
}

}  // namespace

BlockStarSpec st1_spec(std::int64_t n, std::int64_t k, std::int64_t q) { return st_spec(n, k, q, 2 * k - 1); }
BlockStarSpec st2_spec(std::int64_t n, std::int64_t k, std::int64_t q) { return st_spec(n, k, q, 2 * k); }
Graph build_St1(std::int64_t n, std::int64_t k, std::int64_t q) { return build_block_star(st1_spec(n, k, q)); }
Graph build_St2(std::int64_t n, std::int64_t k, std::int64_t q) { return build_block_star(st2_spec(n, k, q)); }

BlockStarSpec woodall_G0_spec(std::int64_t n, std::int64_t k) {
  const auto w = woodall_split(n, k);
  BlockStarSpec spec;
  if (w.q == 0) {
    spec.central = CliqueBlock{w.p + 1};
    return spec;
  }
  spec.central = CliqueBlock{k - 1};
  spec.attached.assign(static_cast<std::size_t>(w.q - 1), k - 1);
  if (w.p >= 1) spec.attached.push_back(w.p + 1);
  return spec;
}

Graph build_woodall_G0(std::int64_t n, std::int64_t k) { return build_block_star(woodall_G0_spec(n, k)); }

Graph build_multipartite_G(std::int64_t n, std::int64_t k, std::int64_t s) {
  detail::require(k >= 2, "G(n,k,s) needs k >= 2");
  detail::require(s >= k - 1, "G(n,k,s) needs s >= k - 1");
  detail::require(n > s, "G(n,k,s) needs n > s");
  check_render(n);
  std::vector<std::int64_t> sizes{n - s};
  const std::int64_t parts = k - 1;
  for (std::int64_t i = 0; i < parts; ++i) sizes.push_back(s / parts + (i < s % parts ? 1 : 0));
  std::vector<int> cls;
  for (std::size_t c = 0; c < sizes.size(); ++c)
    for (std::int64_t i = 0; i < sizes[c]; ++i) cls.push_back(static_cast<int>(c));
  Graph g(static_cast<int>(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (cls[static_cast<std::size_t>(u)] != cls[static_cast<std::size_t>(v)]) g.add_edge(u, v);
  return g;
}

}  // namespace turan
