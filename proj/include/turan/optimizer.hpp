#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/block_star.hpp"
#include "turan/formulas.hpp"

namespace turan {

// T1: (k-1)x + (k-2)y + floor((z-1)/2) + k <= s
// T2: (k-1)x + (k-2)y + floor((z-1)/2) + k - 1 <= s
enum class TripleFamily { T1, T2 };
std::string family_name(TripleFamily f);

struct FeasibleTriple {
  std::int64_t x = 0, y = 0, z = 1;
  TripleFamily family = TripleFamily::T1;
  BigInt g;
};

bool triple_feasible(std::int64_t k, std::int64_t s, TripleFamily family, std::int64_t x, std::int64_t y,
                     std::int64_t z);

// Every feasible triple in lexicographic (x, y, z) order, with g evaluated at
// clique order r. Needs k >= 3 (for k = 2 the y coefficient vanishes and y is
// unbounded) and s >= k - 1. T1 is empty when s = k - 1.
std::vector<FeasibleTriple> enumerate_feasible(std::int64_t k, std::int64_t s, TripleFamily family,
                                               std::int64_t r = 2);

// Maximum of g with the lexicographically smallest maximizer. Throws on an
// empty family.
FeasibleTriple maximize_g(std::int64_t k, std::int64_t r, std::int64_t s, TripleFamily family);

// The n-free offset max{max_T1 g, max_T2 g - C(k-1, r-2)} and the triple
// attaining it. Ties go to T1; an empty T1 is skipped.
struct EvenOptimum {
  BigInt offset;
  FeasibleTriple triple;
};
EvenOptimum even_optimum(std::int64_t k, std::int64_t r, std::int64_t s);

// Central block H_{m,2k,k-1} (T1) or H_{m,2k-1,k-1} (T2), x blocks K_{2k-1},
// y blocks K_{2k-2} and a K_z when z >= 2, with m chosen so the order is n.
// m must be at least the central cycle parameter.
BlockStarSpec even_spec(std::int64_t n, std::int64_t k, const FeasibleTriple& t);
std::int64_t even_spec_order(std::int64_t k, const FeasibleTriple& t);

BlockStarSpec extremal_even_witness(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t s);

}  // namespace turan
