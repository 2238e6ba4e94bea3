#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "turan/block_star.hpp"

namespace turan {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k); zero when k < 0 or k > n.
BigInt binom(std::int64_t n, std::int64_t k);

// f_b(n,k,a) = C(k-a, b) + (n-k+a) C(a, b-1); needs 2 <= 2a <= k,
// n >= k - a and b >= 1.
BigInt f_value(std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t b);

inline constexpr std::int64_t kTauScanLimit = 1'000'000;

// Smallest k0 with k0 C(k, r-1) < C(k0 + 1, r).
std::int64_t tau(std::int64_t k, std::int64_t r);

enum class OddCase { case1, case2, case3 };

// Decomposition s = k + q(k-1) + t used when cycles of length >= 2k+1 are
// forbidden.
struct OddCaseParams {
  std::int64_t k = 0, r = 0, s = 0;
  std::int64_t q = 0;    // floor((s-k)/(k-1))
  std::int64_t t = 0;    // s - k - q(k-1), in [0, k-2]
  std::int64_t big_a = 0;  // k + 1 + q(2k-1) + (2t+1)
  std::int64_t tau = 0;  // tau_{k,r}
  OddCase which = OddCase::case1;

  // Requires k+1 >= r, k >= 2, r >= 2, s >= 2k+1.
  static OddCaseParams make(std::int64_t k, std::int64_t r, std::int64_t s);
};

// Decomposition s = q(k-1) + t for cycles of length >= 2k forbidden.
struct EvenCaseParams {
  std::int64_t k = 0, s = 0;
  std::int64_t q = 0;  // floor(s/(k-1)) >= 1
  std::int64_t t = 0;  // in [0, k-2]
  int epsilon = 0;     // 1 iff t >= 1

  // Requires k >= 2 and s >= k-1.
  static EvenCaseParams make(std::int64_t k, std::int64_t s);
};

BigInt h_value(std::int64_t r, std::int64_t k, std::int64_t s);

// g(x,y,z) = x C(2k-1,r) + y C(2k-2,r) + C(z,r) + C(k+1,r)
//            - (k+1 + x(2k-2) + y(2k-3) + (z-1)) C(k-1,r-1)
BigInt g_value(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t k, std::int64_t r);

enum class Regime { odd_case1, odd_case2, odd_case3, even_t1, even_t2, even_st1, even_st2 };
std::string regime_name(Regime r);

struct ExtremalValue {
  BigInt value;
  Regime regime = Regime::odd_case1;
  BlockStarSpec witness;
  // Set when n < 6s, below which the linear-in-n regime is not assumed.
  bool asymptotic_warning = false;
  std::int64_t witness_order = 0;
};

bool below_asymptotic_threshold(std::int64_t n, std::int64_t s);

// Smallest n for which the witness of each theorem can be rendered with its
// central block of order at least its cycle parameter.
std::int64_t odd_witness_order(std::int64_t k, std::int64_t s, std::int64_t r);
std::int64_t even_edges_witness_order(std::int64_t k, std::int64_t s);

// ex(n, K_r, {C_{>=2k+1}, M_{s+1}}) = C(k, r-1) n + h(r,k,s).
ExtremalValue ex_odd(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t r);

// ex(n, K_r, {C_{>=2k}, M_{s+1}}) = C(k-1, r-1) n
//   + max{ max_{T1} g, max_{T2} g - C(k-1, r-2) }.
ExtremalValue ex_even(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t r);

// ex(n, {C_{>=2k}, M_{s+1}}) = (k-1)n - C(k,2) + (k-1)(q-1) + epsilon.
ExtremalValue ex_even_edges(std::int64_t n, std::int64_t k, std::int64_t s);

// Maximum edges with matching number <= s: max{f_2(n,2s+1,s), C(2s+1,2)}
// when n >= 2s+1. For n <= 2s every graph qualifies and the value is C(n,2).
BigInt ex_matching_only(std::int64_t n, std::int64_t s);

// n = q(k-2) + p + 1 with q >= 0 and 0 <= p <= k-2; q = floor((n-1)/(k-2)).
struct WoodallSplit {
  std::int64_t q = 0;
  std::int64_t p = 0;
};
WoodallSplit woodall_split(std::int64_t n, std::int64_t k);

// q C(k-1, 2) + C(p+1, 2): most edges of an n-vertex graph with no cycle of
// length >= k.
BigInt woodall_bound(std::int64_t n, std::int64_t k);

std::string to_string(const BigInt& v);

}  // namespace turan
