#include "turan/formulas.hpp"

#include <algorithm>
#include <sstream>

#include "turan/errors.hpp"
#include "turan/optimizer.hpp"

namespace turan {
namespace {

std::string params(std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
  std::ostringstream os;
  const char* sep = "";
  for (const auto& [name, v] : kv) {
    os << sep << name << '=' << v;
    sep = ", ";
  }
  return os.str();
}

void check_odd(std::int64_t k, std::int64_t s, std::int64_t r) {
  const auto p = " (" + params({{"k", k}, {"s", s}, {"r", r}}) + ")";
  detail::require(k >= 2, "odd case needs k >= 2" + p);
  detail::require(r >= 2, "odd case needs r >= 2" + p);
  detail::require(k + 1 >= r, "odd case needs k + 1 >= r" + p);
  detail::require(s >= 2 * k + 1, "odd case needs s >= 2k + 1" + p);
}

}  // namespace

BigInt binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt f_value(std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t b) {
  const auto p = " (" + params({{"n", n}, {"k", k}, {"a", a}, {"b", b}}) + ")";
  detail::require(a >= 1, "f_b(n,k,a) needs a >= 1" + p);
  detail::require(k >= 2 * a, "f_b(n,k,a) needs k >= 2a" + p);
  detail::require(n >= k - a, "f_b(n,k,a) needs n >= k - a" + p);
  detail::require(b >= 1, "f_b(n,k,a) needs b >= 1" + p);
  return binom(k - a, b) + BigInt(n - k + a) * binom(a, b - 1);
}

std::int64_t tau(std::int64_t k, std::int64_t r) {
  detail::require(k >= 2 && r >= 2, "tau_{k,r} needs k >= 2 and r >= 2 (" + params({{"k", k}, {"r", r}}) + ")");
  const BigInt c = binom(k, r - 1);
  for (std::int64_t k0 = 1; k0 <= kTauScanLimit; ++k0)
    if (c * k0 < binom(k0 + 1, r)) return k0;
  throw PreconditionError("tau_{k,r}: no k0 <= 10^6 found (" + params({{"k", k}, {"r", r}}) + ")");
}

OddCaseParams OddCaseParams::make(std::int64_t k, std::int64_t r, std::int64_t s) {
  check_odd(k, s, r);
  OddCaseParams p;
  p.k = k;
  p.r = r;
  p.s = s;
  p.q = (s - k) / (k - 1);
  p.t = s - k - p.q * (k - 1);
  p.big_a = k + 1 + p.q * (2 * k - 1) + (2 * p.t + 1);
  p.tau = turan::tau(k, r);
  if (2 * k <= p.tau)
    p.which = OddCase::case1;
  else if (2 * p.t + 1 < p.tau)
    p.which = OddCase::case2;
  else
    p.which = OddCase::case3;
  return p;
}

EvenCaseParams EvenCaseParams::make(std::int64_t k, std::int64_t s) {
  const auto p = " (" + params({{"k", k}, {"s", s}}) + ")";
  detail::require(k >= 2, "even case needs k >= 2" + p);
  detail::require(s >= k - 1, "even case needs s >= k - 1" + p);
  EvenCaseParams e;
  e.k = k;
  e.s = s;
  e.q = s / (k - 1);
  e.t = s - e.q * (k - 1);
  e.epsilon = e.t >= 1 ? 1 : 0;
  return e;
}

BigInt h_value(std::int64_t r, std::int64_t k, std::int64_t s) {
  const auto p = OddCaseParams::make(k, r, s);
  const BigInt c = binom(k, r - 1);
  switch (p.which) {
    case OddCase::case1:
      return binom(k + 1, r) - BigInt(k + 1) * c;
    case OddCase::case2:
      return BigInt(p.q) * binom(2 * k, r) + binom(k + 1, r) - BigInt(k + 1 + p.q * (2 * k - 1)) * c;
    case OddCase::case3:
      return BigInt(p.q) * binom(2 * k, r) + binom(2 * p.t + 2, r) + binom(k + 1, r) - BigInt(p.big_a) * c;
  }
  return 0;
}

BigInt g_value(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t k, std::int64_t r) {
  detail::require(x >= 0 && y >= 0, "g(x,y,z) needs x, y >= 0");
  detail::require(z >= 1 && z <= 2 * k - 1, "g(x,y,z) needs 1 <= z <= 2k - 1 (z=" + std::to_string(z) + ")");
  return BigInt(x) * binom(2 * k - 1, r) + BigInt(y) * binom(2 * k - 2, r) + binom(z, r) + binom(k + 1, r) -
         BigInt(k + 1 + x * (2 * k - 2) + y * (2 * k - 3) + (z - 1)) * binom(k - 1, r - 1);
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::odd_case1: return "Case1";
    case Regime::odd_case2: return "Case2";
    case Regime::odd_case3: return "Case3";
    case Regime::even_t1: return "T1";
    case Regime::even_t2: return "T2";
    case Regime::even_st1: return "St1";
    case Regime::even_st2: return "St2";
  }
  return "?";
}

bool below_asymptotic_threshold(std::int64_t n, std::int64_t s) { return n < 6 * s; }

namespace {

BlockStarSpec odd_spec(std::int64_t n, const OddCaseParams& p) {
  BlockStarSpec spec;
  const std::int64_t k = p.k;
  std::int64_t m = n;
  if (p.which != OddCase::case1) {
    m -= p.q * (2 * k - 1);
    spec.attached.assign(static_cast<std::size_t>(p.q), 2 * k);
  }
  if (p.which == OddCase::case3) {
    m -= 2 * p.t + 1;
    spec.attached.push_back(2 * p.t + 2);
  }
  spec.central = HGraphParams{m, 2 * k + 1, k};
  return spec;
}

BlockStarSpec st_spec(std::int64_t n, std::int64_t k, std::int64_t q, bool second) {
  BlockStarSpec spec;
  spec.central = HGraphParams{n - (q - 1) * (2 * k - 2), second ? 2 * k : 2 * k - 1, k - 1};
  spec.attached.assign(static_cast<std::size_t>(q - 1), 2 * k - 1);
  return spec;
}

}  // namespace

std::int64_t odd_witness_order(std::int64_t k, std::int64_t s, std::int64_t r) {
  const auto p = OddCaseParams::make(k, r, s);
  std::int64_t order = 2 * k + 1;
  if (p.which != OddCase::case1) order += p.q * (2 * k - 1);
  if (p.which == OddCase::case3) order += 2 * p.t + 1;
  return order;
}

std::int64_t even_edges_witness_order(std::int64_t k, std::int64_t s) {
  const auto e = EvenCaseParams::make(k, s);
  const std::int64_t central = e.epsilon ? 2 * k : 2 * k - 1;
  return st_spec(central + (e.q - 1) * (2 * k - 2), k, e.q, e.epsilon == 1).order();
}

ExtremalValue ex_odd(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t r) {
  const auto p = OddCaseParams::make(k, r, s);
  ExtremalValue out;
  out.witness_order = odd_witness_order(k, s, r);
  detail::require(n >= out.witness_order, "odd case needs n >= " + std::to_string(out.witness_order) +
                                              ", the witness order (" + params({{"n", n}}) + ")");
  out.value = binom(k, r - 1) * n + h_value(r, k, s);
  out.regime = p.which == OddCase::case1   ? Regime::odd_case1
               : p.which == OddCase::case2 ? Regime::odd_case2
                                           : Regime::odd_case3;
  out.witness = odd_spec(n, p);
  out.asymptotic_warning = below_asymptotic_threshold(n, s);
  return out;
}

ExtremalValue ex_even(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t r) {
  const auto p = " (" + params({{"k", k}, {"s", s}, {"r", r}}) + ")";
  detail::require(k >= 3, "even case (general r) needs k >= 3" + p);
  detail::require(r >= 2, "even case needs r >= 2" + p);
  detail::require(k >= r, "even case needs k >= r" + p);
  detail::require(s >= k - 1, "even case needs s >= k - 1" + p);
  const auto opt = even_optimum(k, r, s);
  ExtremalValue out;
  out.witness_order = even_spec_order(k, opt.triple);
  detail::require(n >= out.witness_order, "even case needs n >= " + std::to_string(out.witness_order) +
                                              ", the witness order (" + params({{"n", n}}) + ")");
  out.value = binom(k - 1, r - 1) * n + opt.offset;
  out.regime = opt.triple.family == TripleFamily::T1 ? Regime::even_t1 : Regime::even_t2;
  out.witness = even_spec(n, k, opt.triple);
  out.asymptotic_warning = below_asymptotic_threshold(n, s);
  return out;
}

ExtremalValue ex_even_edges(std::int64_t n, std::int64_t k, std::int64_t s) {
  const auto e = EvenCaseParams::make(k, s);
  ExtremalValue out;
  out.witness_order = even_edges_witness_order(k, s);
  detail::require(n >= out.witness_order, "even case needs n >= " + std::to_string(out.witness_order) +
                                              ", the witness order (" + params({{"n", n}}) + ")");
  out.value = BigInt(k - 1) * n - binom(k, 2) + BigInt(k - 1) * (e.q - 1) + e.epsilon;
  out.regime = e.epsilon ? Regime::even_st2 : Regime::even_st1;
  out.witness = st_spec(n, k, e.q, e.epsilon == 1);
  out.asymptotic_warning = below_asymptotic_threshold(n, s);
  return out;
}

BigInt ex_matching_only(std::int64_t n, std::int64_t s) {
  detail::require(n >= 1 && s >= 1, "matching bound needs n >= 1 and s >= 1 (" + params({{"n", n}, {"s", s}}) + ")");
  if (n <= 2 * s) return binom(n, 2);
  return std::max(f_value(n, 2 * s + 1, s, 2), binom(2 * s + 1, 2));
}

WoodallSplit woodall_split(std::int64_t n, std::int64_t k) {
  detail::require(k >= 3 && n >= 1, "Woodall bound needs k >= 3 and n >= 1 (" + params({{"n", n}, {"k", k}}) + ")");
  return {(n - 1) / (k - 2), (n - 1) % (k - 2)};
}

BigInt woodall_bound(std::int64_t n, std::int64_t k) {
  const auto w = woodall_split(n, k);
  return BigInt(w.q) * binom(k - 1, 2) + binom(w.p + 1, 2);
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace turan
