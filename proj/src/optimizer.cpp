#include "turan/optimizer.hpp"

#include "turan/errors.hpp"

namespace turan {
namespace {

std::int64_t slack_term(TripleFamily f, std::int64_t k) { return f == TripleFamily::T1 ? k : k - 1; }

void check(std::int64_t k, std::int64_t s) {
  detail::require(k >= 3, "triple enumeration needs k >= 3: with k = 2 the y coefficient is 0 and y is unbounded");
  detail::require(s >= k - 1, "triple enumeration needs s >= k - 1");
}

}  // namespace

std::string family_name(TripleFamily f) { return f == TripleFamily::T1 ? "T1" : "T2"; }

bool triple_feasible(std::int64_t k, std::int64_t s, TripleFamily family, std::int64_t x, std::int64_t y,
                     std::int64_t z) {
  if (x < 0 || y < 0 || z < 1 || z > 2 * k - 1) return false;
  return (k - 1) * x + (k - 2) * y + (z - 1) / 2 + slack_term(family, k) <= s;
}

std::vector<FeasibleTriple> enumerate_feasible(std::int64_t k, std::int64_t s, TripleFamily family,
                                               std::int64_t r) {
  check(k, s);
  std::vector<FeasibleTriple> out;
  const std::int64_t budget = s - slack_term(family, k);
  for (std::int64_t x = 0; (k - 1) * x <= budget; ++x) {
    for (std::int64_t y = 0; (k - 1) * x + (k - 2) * y <= budget; ++y) {
      const std::int64_t left = budget - (k - 1) * x - (k - 2) * y;
      for (std::int64_t z = 1; z <= 2 * k - 1 && (z - 1) / 2 <= left; ++z)
        out.push_back({x, y, z, family, g_value(x, y, z, k, r)});
    }
  }
  return out;
}

FeasibleTriple maximize_g(std::int64_t k, std::int64_t r, std::int64_t s, TripleFamily family) {
  const auto all = enumerate_feasible(k, s, family, r);
  detail::require(!all.empty(), family_name(family) + " is empty for k=" + std::to_string(k) +
                                    ", s=" + std::to_string(s));
  // Enumeration is lexicographic, so the first maximizer is the smallest.
  const FeasibleTriple* best = &all.front();
  for (const auto& t : all)
    if (t.g > best->g) best = &t;
  return *best;
}

EvenOptimum even_optimum(std::int64_t k, std::int64_t r, std::int64_t s) {
  auto t2 = maximize_g(k, r, s, TripleFamily::T2);
  EvenOptimum out{t2.g - binom(k - 1, r - 2), t2};
  if (s >= k) {
    auto t1 = maximize_g(k, r, s, TripleFamily::T1);
    if (t1.g >= out.offset) out = {t1.g, t1};
  }
  return out;
}

std::int64_t even_spec_order(std::int64_t k, const FeasibleTriple& t) {
  const std::int64_t central = t.family == TripleFamily::T1 ? 2 * k : 2 * k - 1;
  return central + t.x * (2 * k - 2) + t.y * (2 * k - 3) + (t.z - 1);
}

BlockStarSpec even_spec(std::int64_t n, std::int64_t k, const FeasibleTriple& t) {
  const std::int64_t need = even_spec_order(k, t);
  detail::require(n >= need, "even witness needs n >= " + std::to_string(need) + " (n=" + std::to_string(n) + ")");
  BlockStarSpec spec;
  const std::int64_t m = n - (need - (t.family == TripleFamily::T1 ? 2 * k : 2 * k - 1));
  spec.central = HGraphParams{m, t.family == TripleFamily::T1 ? 2 * k : 2 * k - 1, k - 1};
  spec.attached.assign(static_cast<std::size_t>(t.x), 2 * k - 1);
  spec.attached.insert(spec.attached.end(), static_cast<std::size_t>(t.y), 2 * k - 2);
  if (t.z >= 2) spec.attached.push_back(t.z);
  return spec;
}

BlockStarSpec extremal_even_witness(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t s) {
  detail::require(r >= 2 && k >= r, "even witness needs k >= r >= 2");
  return even_spec(n, k, even_optimum(k, r, s).triple);
}

}  // namespace turan
