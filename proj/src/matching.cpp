#include "turan/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "turan/errors.hpp"

namespace turan {
namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(n_)) {
    for (Vertex v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbors(v).members();
    mate_.assign(static_cast<std::size_t>(n_), -1);
  }

  Matching run() {
    // greedy start
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[idx(v)] != -1) continue;
      for (Vertex w : adj_[idx(v)]) {
        if (mate_[idx(w)] == -1) {
          mate_[idx(v)] = w;
          mate_[idx(w)] = v;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[idx(root)] != -1) continue;
      Vertex u = find_path(root);
      while (u != -1) {
        const Vertex pv = parent_[idx(u)];
        const Vertex ppv = mate_[idx(pv)];
        mate_[idx(u)] = pv;
        mate_[idx(pv)] = u;
        u = ppv;
      }
    }
    Matching m;
    m.mate = mate_;
    for (Vertex v = 0; v < n_; ++v)
      if (mate_[idx(v)] > v) ++m.size;
    return m;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(idx(n_), 0);
    while (true) {
      a = base_[idx(a)];
      seen[idx(a)] = 1;
      if (mate_[idx(a)] == -1) break;
      a = parent_[idx(mate_[idx(a)])];
    }
    while (true) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(mate_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[idx(v)] != b) {
      in_blossom_[idx(base_[idx(v)])] = 1;
      in_blossom_[idx(base_[idx(mate_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = mate_[idx(v)];
      v = parent_[idx(mate_[idx(v)])];
    }
  }

  Vertex find_path(Vertex root) {
    used_.assign(idx(n_), 0);
    parent_.assign(idx(n_), -1);
    base_.resize(idx(n_));
    std::iota(base_.begin(), base_.end(), 0);
    used_[idx(root)] = 1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex to : adj_[idx(v)]) {
        if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
        if (to == root || (mate_[idx(to)] != -1 && parent_[idx(mate_[idx(to)])] != -1)) {
          const Vertex cur = lca(v, to);
          in_blossom_.assign(idx(n_), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[idx(base_[idx(i)])]) {
              base_[idx(i)] = cur;
              if (!used_[idx(i)]) {
                used_[idx(i)] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (mate_[idx(to)] == -1) return to;
          used_[idx(mate_[idx(to)])] = 1;
          q.push(mate_[idx(to)]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> mate_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] > static_cast<Vertex>(v)) out.push_back({static_cast<Vertex>(v), mate[v]});
  return out;
}

Matching maximum_matching(const Graph& g) { return Blossom(g).run(); }

int max_matching(const Graph& g) { return maximum_matching(g).size; }

long long BergeTutteCertificate::bound() const {
  long long b = static_cast<long long>(x.size());
  for (const auto& c : components) b += static_cast<long long>(c.size() / 2);
  return b;
}

std::vector<int> BergeTutteCertificate::component_sizes() const {
  std::vector<int> out;
  for (const auto& c : components) out.push_back(static_cast<int>(c.size()));
  return out;
}

std::vector<Vertex> BergeTutteCertificate::isolated() const {
  std::vector<Vertex> out;
  for (const auto& c : components)
    if (c.size() == 1) out.push_back(c.front());
  return out;
}

std::vector<std::size_t> BergeTutteCertificate::nontrivial() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].size() >= 2) out.push_back(i);
  return out;
}

BergeTutteCertificate evaluate_certificate(const Graph& g, std::span<const Vertex> x, int s) {
  BergeTutteCertificate cert;
  cert.x.assign(x.begin(), x.end());
  std::sort(cert.x.begin(), cert.x.end());
  VertexSet rest = g.all_vertices();
  for (Vertex v : cert.x) rest.erase(v);
  cert.components = connected_components(g, rest);
  cert.s = s;
  cert.slack = s - cert.bound();
  return cert;
}

bool validate_certificate(const Graph& g, const BergeTutteCertificate& cert) {
  const auto fresh = evaluate_certificate(g, cert.x, cert.s);
  return fresh.components == cert.components && fresh.slack == cert.slack && cert.slack >= 0;
}

std::optional<BergeTutteCertificate> berge_tutte_certificate(const Graph& g, int s) {
  const int n = g.order();
  if (n > kCertificateSubsetLimit)
    throw SizeLimitError("berge_tutte_certificate: subset search is limited to " +
                         std::to_string(kCertificateSubsetLimit) + " vertices, got " + std::to_string(n));
  detail::require(s >= 0, "berge_tutte_certificate: s must be >= 0");

  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    rows[static_cast<std::size_t>(e.u)] |= 1U << e.v;
    rows[static_cast<std::size_t>(e.v)] |= 1U << e.u;
  }
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;

  // |X| + sum floor(|C|/2) over components of G - X
  auto bound_of = [&](std::uint32_t xmask) {
    long long total = __builtin_popcount(xmask);
    std::uint32_t left = all & ~xmask;
    while (left) {
      std::uint32_t comp = left & (~left + 1);
      std::uint32_t frontier = comp;
      while (frontier) {
        std::uint32_t grown = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) grown |= rows[static_cast<std::size_t>(__builtin_ctz(f))];
        grown &= left & ~comp;
        comp |= grown;
        frontier = grown;
      }
      left &= ~comp;
      total += __builtin_popcount(comp) / 2;
    }
    return total;
  };

  std::vector<int> pick;
  for (int size = 0; size <= std::min(s, n); ++size) {
    pick.resize(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint32_t xmask = 0;
      for (int v : pick) xmask |= 1U << v;
      if (bound_of(xmask) <= s) {
        std::vector<Vertex> x(pick.begin(), pick.end());
        return evaluate_certificate(g, x, s);
      }
      // next combination in lexicographic order
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

std::optional<BergeTutteCertificate> gallai_edmonds_certificate(const Graph& g, int s) {
  detail::require(s >= 0, "gallai_edmonds_certificate: s must be >= 0");
  const int nu = max_matching(g);
  if (nu > s) return std::nullopt;
  VertexSet missable(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    Graph without = g;
    without.isolate(v);
    if (max_matching(without) == nu) missable.insert(v);
  }
  VertexSet a(g.order());
  missable.for_each([&](Vertex v) { a |= g.neighbors(v); });
  a.subtract(missable);
  const auto x = a.members();
  return evaluate_certificate(g, x, s);
}

}  // namespace turan
