#include "turan/cycles.hpp"

#include <algorithm>
#include <map>

#include "turan/blocks.hpp"
#include "turan/errors.hpp"

namespace turan {
namespace {

struct BudgetExhausted {};

// Searches one 2-connected piece (relabelled 0..m-1).
class BlockCycleSearch {
 public:
  // threshold > 0: stop at the first cycle of length >= threshold.
  // threshold == 0: maximise.
  BlockCycleSearch(const Graph& block, int threshold, std::optional<std::uint64_t> budget)
      : g_(block), m_(block.order()), threshold_(threshold), budget_(budget),
        class_of_(static_cast<std::size_t>(m_), -1) {
    build_twin_classes();
  }

  // Returns true when the search completed (not cut off by the budget).
  bool run() {
    std::vector<Vertex> starts(static_cast<std::size_t>(m_));
    for (Vertex v = 0; v < m_; ++v) starts[static_cast<std::size_t>(v)] = v;
    std::stable_sort(starts.begin(), starts.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
    VertexSet allowed = g_.all_vertices();
    std::vector<char> class_done(classes_.size(), 0);
    try {
      for (Vertex s : starts) {
        if (done()) break;
        const int remaining = allowed.count();
        if (threshold_ > 0 ? remaining < threshold_ : remaining <= best_len_) break;
        const int cls = class_of_[static_cast<std::size_t>(s)];
        if (cls >= 0 && class_done[static_cast<std::size_t>(cls)]) {
          allowed.erase(s);
          continue;
        }
        search_from(s, allowed);
        if (cls >= 0) class_done[static_cast<std::size_t>(cls)] = 1;
        allowed.erase(s);
      }
    } catch (const BudgetExhausted&) {
      return false;
    }
    return true;
  }

  int best_length() const { return best_len_; }
  const std::vector<Vertex>& best_cycle() const { return best_cycle_; }
  std::uint64_t expansions() const { return expansions_; }

 private:
  bool done() const { return threshold_ > 0 && best_len_ >= threshold_; }

  void build_twin_classes() {
    // Vertices with equal open neighbourhoods (false twins) or equal closed
    // neighbourhoods (true twins); the two relations cannot overlap.
    std::map<std::vector<std::uint64_t>, std::vector<Vertex>> open, closed;
    for (Vertex v = 0; v < m_; ++v) {
      const auto& nb = g_.neighbors(v);
      open[{nb.words().begin(), nb.words().end()}].push_back(v);
      VertexSet c = nb;
      c.insert(v);
      closed[{c.words().begin(), c.words().end()}].push_back(v);
    }
    auto take = [&](auto& groups) {
      for (auto& [key, members] : groups) {
        if (members.size() < 2) continue;
        const int id = static_cast<int>(classes_.size());
        for (Vertex v : members) class_of_[static_cast<std::size_t>(v)] = id;
        classes_.push_back(members);
      }
    };
    take(open);
    take(closed);
  }

  void search_from(Vertex s, const VertexSet& allowed) {
    start_ = s;
    avail_ = allowed;
    avail_.erase(s);
    path_.assign(1, s);
    extend(s);
  }

  // Size of the part of avail_ reachable from v.
  int reachable_from(Vertex v) const {
    VertexSet seen(m_);
    VertexSet frontier = g_.neighbors(v) & avail_;
    int count = 0;
    while (!frontier.empty()) {
      seen |= frontier;
      count += frontier.count();
      VertexSet grown(m_);
      frontier.for_each([&](Vertex w) { grown |= g_.neighbors(w); });
      grown &= avail_;
      grown.subtract(seen);
      frontier = std::move(grown);
    }
    return count;
  }

  bool twin_allowed(Vertex w) const {
    const int cls = class_of_[static_cast<std::size_t>(w)];
    if (cls < 0) return true;
    for (Vertex u : classes_[static_cast<std::size_t>(cls)]) {
      if (u == w) return true;
      if (avail_.contains(u)) return false;  // a smaller interchangeable vertex is free
    }
    return true;
  }

  void extend(Vertex v) {
    if (budget_ && expansions_ >= *budget_) throw BudgetExhausted{};
    ++expansions_;
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && g_.adjacent(v, start_) && len > best_len_) {
      best_len_ = len;
      best_cycle_ = path_;
      if (done() || best_len_ == m_) return;
    }
    const int reach = reachable_from(v);
    if (threshold_ > 0 ? len + reach < threshold_ : len + reach <= best_len_) return;
    const VertexSet next = g_.neighbors(v) & avail_;
    for (Vertex w = next.first(); w != -1; w = next.next(w)) {
      if (!twin_allowed(w)) continue;
      avail_.erase(w);
      path_.push_back(w);
      extend(w);
      path_.pop_back();
      avail_.insert(w);
      if (done() || best_len_ == m_) return;
    }
  }

  const Graph& g_;
  int m_;
  int threshold_;
  std::optional<std::uint64_t> budget_;
  std::vector<int> class_of_;
  std::vector<std::vector<Vertex>> classes_;

  Vertex start_ = 0;
  VertexSet avail_;
  std::vector<Vertex> path_;
  int best_len_ = 0;
  std::vector<Vertex> best_cycle_;
  std::uint64_t expansions_ = 0;
};

std::vector<std::vector<Vertex>> cyclic_blocks_by_size(const Graph& g) {
  auto blocks = biconnected_blocks(g);
  std::erase_if(blocks, [](const auto& b) { return b.size() < 3; });
  std::stable_sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return blocks;
}

std::vector<Vertex> to_global(const std::vector<Vertex>& local, const std::vector<Vertex>& block) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(block[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace

CircumferenceResult circumference(const Graph& g, std::optional<std::uint64_t> budget) {
  CircumferenceResult result;
  for (const auto& block : cyclic_blocks_by_size(g)) {
    if (static_cast<int>(block.size()) <= result.length) break;
    std::optional<std::uint64_t> left;
    if (budget) left = *budget > result.expansions ? *budget - result.expansions : 0;
    const Graph local = g.induced(block);
    BlockCycleSearch search(local, 0, left);
    const bool complete = search.run();
    result.expansions += search.expansions();
    if (search.best_length() > result.length) {
      result.length = search.best_length();
      result.cycle = to_global(search.best_cycle(), block);
    }
    if (!complete) {
      result.budget_exceeded = true;
      break;
    }
  }
  return result;
}

std::optional<std::vector<Vertex>> find_cycle_geq(const Graph& g, int k) {
  detail::require(k >= 3, "cycle threshold must be >= 3");
  for (const auto& block : cyclic_blocks_by_size(g)) {
    if (static_cast<int>(block.size()) < k) break;
    const Graph local = g.induced(block);
    BlockCycleSearch search(local, k, std::nullopt);
    search.run();
    if (search.best_length() >= k) return to_global(search.best_cycle(), block);
  }
  return std::nullopt;
}

bool has_cycle_geq(const Graph& g, int k) { return find_cycle_geq(g, k).has_value(); }

}  // namespace turan
