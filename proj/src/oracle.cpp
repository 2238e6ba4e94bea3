#include "turan/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "turan/cliques.hpp"
#include "turan/errors.hpp"
#include "turan/family.hpp"
#include "turan/graph_io.hpp"

namespace turan {
namespace {

using Mask = std::uint32_t;
using Rows = std::array<Mask, kCanonicalMaxOrder>;

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

Rows rows_of(const Graph& g) {
  Rows rows{};
  for (const auto& e : g.edges()) {
    rows[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    rows[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  return rows;
}

std::uint64_t code_of(const Rows& rows, int n) {
  const int bits = n * (n - 1) / 2;
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((rows[static_cast<std::size_t>(i)] >> j) & 1U) code |= std::uint64_t{1} << (bits - 1 - pair_index(i, j));
  return code;
}

// Lexicographically smallest code by filling slots 0..n-1 and cutting any
// branch whose code prefix already exceeds the best one. Among unplaced
// vertices that are twins only the smallest is tried, since swapping twins
// is an automorphism fixing everything already placed.
class Canonizer {
 public:
  Canonizer(const Rows& rows, int n) : rows_(rows), n_(n), bits_(n * (n - 1) / 2) {}

  std::uint64_t run() {
    best_ = ~std::uint64_t{0};
    if (n_ <= 1) return 0;
    extend(0, 0, 0);
    return best_;
  }

 private:
  bool twins(int u, int w) const {
    const Mask both = (Mask{1} << u) | (Mask{1} << w);
    return (rows_[static_cast<std::size_t>(u)] & ~both) == (rows_[static_cast<std::size_t>(w)] & ~both);
  }

  void extend(int slot, Mask placed, std::uint64_t prefix) {
    if (slot == n_) {
      best_ = std::min(best_, prefix);
      return;
    }
    Mask tried = 0;
    for (int v = 0; v < n_; ++v) {
      if ((placed >> v) & 1U) continue;
      bool skip = false;
      for (Mask t = tried; t != 0; t &= t - 1)
        if (twins(__builtin_ctz(t), v)) {
          skip = true;
          break;
        }
      if (skip) continue;
      tried |= Mask{1} << v;
      std::uint64_t code = prefix;
      for (int i = 0; i < slot; ++i)
        if ((rows_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] >> v) & 1U)
          code |= std::uint64_t{1} << (bits_ - 1 - pair_index(i, slot));
      // Bits of slots after `slot` are still zero in `code`.
      const int filled = slot * (slot + 1) / 2;
      const int shift = bits_ - filled;
      if (shift < 64 && (code >> shift) > (best_ >> shift)) continue;
      order_[static_cast<std::size_t>(slot)] = v;
      extend(slot + 1, placed | (Mask{1} << v), code);
    }
  }

  const Rows& rows_;
  int n_;
  int bits_;
  std::array<int, kCanonicalMaxOrder> order_{};
  std::uint64_t best_ = 0;
};

std::uint64_t canonical_rows(const Rows& rows, int n) { return Canonizer(rows, n).run(); }

std::uint64_t count_in(const Rows& rows, Mask mask, int r) {
  if (r == 0) return 1;
  if (r == 1) return static_cast<std::uint64_t>(__builtin_popcount(mask));
  std::uint64_t total = 0;
  for (Mask m = mask; m != 0; m &= m - 1) {
    const int v = __builtin_ctz(m);
    const Mask later = mask & ~((Mask{2} << v) - 1);
    total += count_in(rows, later & rows[static_cast<std::size_t>(v)], r - 1);
  }
  return total;
}

int matching_in(const Rows& rows, Mask mask) {
  if (mask == 0) return 0;
  const int v = __builtin_ctz(mask);
  const Mask rest = mask & (mask - 1);
  int best = matching_in(rows, rest);
  for (Mask m = rest & rows[static_cast<std::size_t>(v)]; m != 0; m &= m - 1)
    best = std::max(best, 1 + matching_in(rows, rest & ~(Mask{1} << __builtin_ctz(m))));
  return best;
}

// Is there a u-v path with at least `need` vertices?
bool long_path(const Rows& rows, int u, int v, Mask used, int have, int need) {
  if (u == v) return have >= need;
  for (Mask m = rows[static_cast<std::size_t>(u)] & ~used; m != 0; m &= m - 1) {
    const int w = __builtin_ctz(m);
    if (w == v && have + 1 < need) continue;
    if (long_path(rows, w, v, used | (Mask{1} << w), have + 1, need)) return true;
  }
  return false;
}

struct Problem {
  int n = 0;
  int m = 0;
  int r = 2;
  ForbiddenFamily fam;
  std::vector<std::pair<int, int>> edges;
  std::vector<Rows> rest;  // rest[i]: rows of edges i..m-1
  Mask all = 0;

  Problem(int order, const ForbiddenFamily& f) : n(order), r(f.clique_order), fam(f) {
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
    m = static_cast<int>(edges.size());
    rest.assign(static_cast<std::size_t>(m) + 1, Rows{});
    for (int i = m - 1; i >= 0; --i) {
      rest[static_cast<std::size_t>(i)] = rest[static_cast<std::size_t>(i) + 1];
      const auto [u, v] = edges[static_cast<std::size_t>(i)];
      rest[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] |= Mask{1} << v;
      rest[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
    all = (Mask{1} << n) - 1;
  }

  // Would adding uv to an F-free graph create a member of F?
  bool can_add(const Rows& rows, int u, int v) const {
    if (fam.matching_bound) {
      const Mask rest_mask = all & ~(Mask{1} << u) & ~(Mask{1} << v);
      if (1 + matching_in(rows, rest_mask) > *fam.matching_bound) return false;
    }
    if (fam.cycle_min_len && long_path(rows, u, v, Mask{1} << u, 1, *fam.cycle_min_len)) return false;
    return true;
  }

  std::uint64_t gain(const Rows& rows, int u, int v) const {
    if (r == 2) return 1;
    return count_in(rows, rows[static_cast<std::size_t>(u)] & rows[static_cast<std::size_t>(v)], r - 2);
  }

  std::uint64_t upper_bound(const Rows& rows, std::uint64_t edges_now, int idx) const {
    if (r == 2) return edges_now + static_cast<std::uint64_t>(m - idx);
    Rows u{};
    for (int v = 0; v < n; ++v)
      u[static_cast<std::size_t>(v)] = rows[static_cast<std::size_t>(v)] | rest[static_cast<std::size_t>(idx)][static_cast<std::size_t>(v)];
    return count_in(u, all, r);
  }
};

struct ChunkResult {
  bool any = false;
  std::uint64_t best = 0;
  std::set<std::uint64_t> codes;  // smallest canonical codes at `best`
  bool overflow = false;
  std::uint64_t examined = 0;
};

class ChunkSearch {
 public:
  ChunkSearch(const Problem& p, std::uint64_t floor) : p_(p), floor_(floor) {}

  ChunkResult run(const Rows& rows, std::uint64_t count, std::uint64_t edges_now, int idx) {
    rows_ = rows;
    dfs(count, edges_now, idx);
    return std::move(res_);
  }

 private:
  std::uint64_t target() const { return res_.any ? std::max(res_.best, floor_) : floor_; }

  void dfs(std::uint64_t count, std::uint64_t edges_now, int idx) {
    if (p_.upper_bound(rows_, edges_now, idx) < target()) return;
    if (idx == p_.m) {
      leaf(count);
      return;
    }
    const auto [u, v] = p_.edges[static_cast<std::size_t>(idx)];
    if (p_.can_add(rows_, u, v)) {
      const std::uint64_t add = p_.gain(rows_, u, v);
      rows_[static_cast<std::size_t>(u)] |= Mask{1} << v;
      rows_[static_cast<std::size_t>(v)] |= Mask{1} << u;
      dfs(count + add, edges_now + 1, idx + 1);
      rows_[static_cast<std::size_t>(u)] &= ~(Mask{1} << v);
      rows_[static_cast<std::size_t>(v)] &= ~(Mask{1} << u);
    }
    dfs(count, edges_now, idx + 1);
  }

  void leaf(std::uint64_t count) {
    ++res_.examined;
    if (count < target()) return;
    if (!res_.any || count > res_.best) {
      res_.any = true;
      res_.best = count;
      res_.codes.clear();
      res_.overflow = false;
    }
    res_.codes.insert(canonical_rows(rows_, p_.n));
    if (res_.codes.size() > kOracleWitnessCap) {
      res_.codes.erase(std::prev(res_.codes.end()));
      res_.overflow = true;
    }
  }

  const Problem& p_;
  std::uint64_t floor_;
  Rows rows_{};
  ChunkResult res_;
};

// N_r of the graph built by adding every edge that keeps it F-free.
std::uint64_t greedy_floor(const Problem& p) {
  Rows rows{};
  std::uint64_t count = 0;
  for (const auto& [u, v] : p.edges) {
    if (!p.can_add(rows, u, v)) continue;
    count += p.gain(rows, u, v);
    rows[static_cast<std::size_t>(u)] |= Mask{1} << v;
    rows[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return count;
}

constexpr int kChunkBits = 10;

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  detail::require(g.order() <= kCanonicalMaxOrder, "adjacency codes need order <= 11");
  return code_of(rows_of(g), g.order());
}

Graph graph_from_code(int n, std::uint64_t code) {
  detail::require(n >= 0 && n <= kCanonicalMaxOrder, "adjacency codes need order <= 11");
  const int bits = n * (n - 1) / 2;
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> (bits - 1 - pair_index(i, j))) & 1U) g.add_edge(i, j);
  return g;
}

std::uint64_t canonical_form(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    throw SizeLimitError("canonical form supports order <= " + std::to_string(kCanonicalMaxOrder));
  return canonical_rows(rows_of(g), g.order());
}

Graph canonical_graph(const Graph& g) { return graph_from_code(g.order(), canonical_form(g)); }

OracleResult brute_force_ex(int n, const ForbiddenFamily& fam, unsigned jobs) {
  fam.validate();
  detail::require(n >= 1, "oracle needs n >= 1");
  if (n > kOracleMaxOrder)
    throw SizeLimitError("oracle supports n <= " + std::to_string(kOracleMaxOrder) +
                         "; larger orders need a dedicated search tool");
  const auto start = std::chrono::steady_clock::now();
  const Problem p(n, fam);
  const std::uint64_t floor = greedy_floor(p);
  const int split = std::min(kChunkBits, p.m);
  const std::size_t chunks = std::size_t{1} << split;
  std::vector<ChunkResult> results(chunks);

  auto work = [&](std::size_t c) {
    Rows rows{};
    std::uint64_t count = 0;
    std::uint64_t edges_now = 0;
    for (int i = 0; i < split; ++i) {
      if ((c >> (split - 1 - i)) & 1U) continue;  // bit set: edge omitted
      const auto [u, v] = p.edges[static_cast<std::size_t>(i)];
      if (!p.can_add(rows, u, v)) return;
      count += p.gain(rows, u, v);
      ++edges_now;
      rows[static_cast<std::size_t>(u)] |= Mask{1} << v;
      rows[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
    results[c] = ChunkSearch(p, floor).run(rows, count, edges_now, split);
  };

  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, chunks));
  if (jobs <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) work(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < chunks; c = next++) work(c);
      });
    for (auto& th : pool) th.join();
  }

  OracleResult out;
  out.n = n;
  out.family = fam;
  bool any = false;
  for (const auto& r : results) {
    out.examined += r.examined;
    if (r.any && (!any || r.best > out.max)) {
      out.max = r.best;
      any = true;
    }
  }
  if (!any) throw std::logic_error("oracle: search found no graph attaining the greedy floor");
  std::set<std::uint64_t> codes;
  for (const auto& r : results) {
    if (!r.any || r.best != out.max) continue;
    codes.insert(r.codes.begin(), r.codes.end());
    out.truncated = out.truncated || r.overflow;
  }
  if (codes.size() > kOracleWitnessCap) out.truncated = true;
  for (auto code : codes) {
    if (out.witnesses.size() == kOracleWitnessCap) break;
    const Graph g = graph_from_code(n, code);
    if (!is_family_free(g, fam).family_free || count_cliques(g, fam.clique_order) != out.max)
      throw std::logic_error("oracle: witness failed independent verification");
    out.witnesses.push_back(io::to_graph6(g));
  }
  out.witness_classes = out.witnesses.size();
  out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string oracle_json(const OracleResult& r, bool stable) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  nlohmann::ordered_json fam;
  fam["k_c"] = r.family.cycle_min_len ? nlohmann::ordered_json(*r.family.cycle_min_len) : nlohmann::ordered_json();
  fam["s"] = r.family.matching_bound ? nlohmann::ordered_json(*r.family.matching_bound) : nlohmann::ordered_json();
  fam["r"] = r.family.clique_order;
  j["family"] = fam;
  j["max"] = r.max;
  j["witnesses"] = r.witnesses;
  j["witness_classes"] = r.witness_classes;
  j["truncated"] = r.truncated;
  j["examined"] = r.examined;
  if (!stable) j["elapsed_ms"] = std::round(r.elapsed_ms * 1000) / 1000;
  return j.dump(2);
}

std::vector<Graph> enumerate_family_free(int n, const ForbiddenFamily& fam) {
  fam.validate();
  detail::require(n >= 0, "order must be non-negative");
  if (n > kOracleMaxOrder) throw SizeLimitError("enumeration supports n <= " + std::to_string(kOracleMaxOrder));
  std::set<std::uint64_t> level{0};  // the empty graph on 0 vertices
  for (int order = 1; order <= n; ++order) {
    std::set<std::uint64_t> next;
    for (auto code : level) {
      const Graph base = graph_from_code(order - 1, code);
      for (Mask nb = 0; nb < (Mask{1} << (order - 1)); ++nb) {
        Graph g(order);
        for (const auto& e : base.edges()) g.add_edge(e.u, e.v);
        for (int v = 0; v < order - 1; ++v)
          if ((nb >> v) & 1U) g.add_edge(v, order - 1);
        if (!is_family_free(g, fam).family_free) continue;
        next.insert(canonical_form(g));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto code : level) out.push_back(graph_from_code(n, code));
  return out;
}

Parity parse_parity(const std::string& s) {
  if (s == "odd") return Parity::odd;
  if (s == "even") return Parity::even;
  throw PreconditionError("parity must be 'odd' or 'even', got '" + s + "'");
}

std::string parity_name(Parity p) { return p == Parity::odd ? "odd" : "even"; }

ForbiddenFamily theorem_family(Parity parity, int k, int s, int r) {
  ForbiddenFamily fam;
  fam.cycle_min_len = parity == Parity::odd ? 2 * k + 1 : 2 * k;
  fam.matching_bound = s;
  fam.clique_order = r;
  fam.validate();
  return fam;
}

std::optional<ExtremalValue> formula_value(Parity parity, std::int64_t n, std::int64_t k, std::int64_t s,
                                           std::int64_t r) {
  try {
    if (parity == Parity::odd) return ex_odd(n, k, s, r);
    if (r == 2) return ex_even_edges(n, k, s);
    return ex_even(n, k, s, r);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

RegionReport verify_formula_region(int k, int s, int r, Parity parity, int n_from, int n_to, unsigned jobs) {
  detail::require(n_from >= 1 && n_from <= n_to, "region needs 1 <= n_from <= n_to");
  RegionReport rep;
  rep.k = k;
  rep.s = s;
  rep.r = r;
  rep.parity = parity;
  const auto fam = theorem_family(parity, k, s, r);
  for (int n = n_from; n <= n_to; ++n) {
    RegionRow row;
    row.n = n;
    row.oracle = brute_force_ex(n, fam, jobs).max;
    if (auto f = formula_value(parity, n, k, s, r)) {
      row.formula = f->value;
      row.below_threshold = f->asymptotic_warning;
      row.agree = f->value == row.oracle;
    }
    rep.rows.push_back(row);
  }
  for (auto it = rep.rows.rbegin(); it != rep.rows.rend() && it->agree; ++it) rep.agreement_from = it->n;
  return rep;
}

std::string RegionReport::describe() const {
  std::ostringstream os;
  os << parity_name(parity) << " k=" << k << " s=" << s << " r=" << r << '\n';
  os << std::setw(4) << "n" << std::setw(10) << "oracle" << std::setw(10) << "formula" << "  note\n";
  for (const auto& row : rows) {
    os << std::setw(4) << row.n << std::setw(10) << row.oracle << std::setw(10)
       << (row.formula ? row.formula->str() : std::string("-")) << "  ";
    if (!row.formula)
      os << "formula not applicable";
    else
      os << (row.agree ? "agree" : "differ") << (row.below_threshold ? ", below asymptotic threshold" : "");
    os << '\n';
  }
  if (agreement_from)
    os << "agreement from n=" << *agreement_from << " through n=" << rows.back().n << '\n';
  else
    os << "no agreement in range\n";
  return os.str();
}

}  // namespace turan
