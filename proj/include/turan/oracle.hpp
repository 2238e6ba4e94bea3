#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/formulas.hpp"
#include "turan/graph.hpp"

namespace turan {

inline constexpr int kOracleMaxOrder = 8;
inline constexpr int kCanonicalMaxOrder = 11;
inline constexpr std::size_t kOracleWitnessCap = 100;

// Upper-triangle adjacency bits in graph6 order ((0,1), (0,2), (1,2), (0,3),
// ...), first pair in the most significant position.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

// Minimum adjacency_code over all vertex permutations. Needs n <= 11.
std::uint64_t canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

struct OracleResult {
  int n = 0;
  ForbiddenFamily family;
  std::uint64_t max = 0;
  std::vector<std::string> witnesses;  // graph6 of canonical forms, sorted by code
  std::size_t witness_classes = 0;     // classes kept (at most the cap)
  bool truncated = false;              // more classes attain the max than were kept
  std::uint64_t examined = 0;          // complete labeled graphs reached by the search
  double elapsed_ms = 0;
};

// Exact ex(n, K_r, F) over all labeled graphs on n <= 8 vertices. Edges are
// decided in graph6 order, adding before omitting; a branch is dropped when
// adding an edge would create a member of F, or when even adding every
// undecided edge leaves fewer K_r than the best graph so far. The first ten
// edge decisions split the work into chunks run on `jobs` threads (0 means
// hardware concurrency). Results do not depend on `jobs`.
OracleResult brute_force_ex(int n, const ForbiddenFamily& fam, unsigned jobs = 1);

// JSON object {n, family, max, witnesses, examined, elapsed_ms, ...};
// `stable` omits elapsed_ms.
std::string oracle_json(const OracleResult& r, bool stable = false);

// Every F-free graph on n <= 8 vertices once up to isomorphism, as canonical
// graphs ordered by code.
std::vector<Graph> enumerate_family_free(int n, const ForbiddenFamily& fam);

enum class Parity { odd, even };
Parity parse_parity(const std::string& s);
std::string parity_name(Parity p);

// Forbidden family of the odd (C_{>=2k+1}) or even (C_{>=2k}) theorem.
ForbiddenFamily theorem_family(Parity parity, int k, int s, int r);

// Formula value at n, or nothing when the hypotheses or the witness order
// rule n out. Even parity with r = 2 uses the edge formula.
std::optional<ExtremalValue> formula_value(Parity parity, std::int64_t n, std::int64_t k, std::int64_t s,
                                           std::int64_t r);

struct RegionRow {
  int n = 0;
  std::uint64_t oracle = 0;
  std::optional<BigInt> formula;
  bool below_threshold = false;
  bool agree = false;
};

struct RegionReport {
  int k = 0, s = 0, r = 0;
  Parity parity = Parity::odd;
  std::vector<RegionRow> rows;
  // Smallest n from which the formula agrees with the oracle through the
  // end of the range.
  std::optional<int> agreement_from;
  std::string describe() const;
};

RegionReport verify_formula_region(int k, int s, int r, Parity parity, int n_from, int n_to, unsigned jobs = 1);

}  // namespace turan
