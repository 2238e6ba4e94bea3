#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct Matching {
  std::vector<Vertex> mate;  // -1 when unmatched
  int size = 0;

  std::vector<Edge> edges() const;
};

// Maximum matching via Edmonds' blossom contraction, O(n^3).
Matching maximum_matching(const Graph& g);
int max_matching(const Graph& g);

// Certificate for nu(G) <= s: a set X such that
// |X| + sum over components C of G - X of floor(|C|/2) <= s.
struct BergeTutteCertificate {
  std::vector<Vertex> x;
  std::vector<std::vector<Vertex>> components;  // of G - X, by smallest member
  int s = 0;
  long long slack = 0;  // s - (|X| + sum floor(|C_i|/2))

  long long bound() const;
  std::vector<int> component_sizes() const;
  // I_X(G): isolated vertices of G - X.
  std::vector<Vertex> isolated() const;
  // Components with at least two vertices (the index set J_X(G)).
  std::vector<std::size_t> nontrivial() const;
};

inline constexpr int kCertificateSubsetLimit = 20;

// Recomputes the components of G - X from scratch and fills in the slack.
BergeTutteCertificate evaluate_certificate(const Graph& g, std::span<const Vertex> x, int s);

// Checks the stored components against the graph and the slack arithmetic.
bool validate_certificate(const Graph& g, const BergeTutteCertificate& cert);

// Searches X by increasing size (lexicographic within a size) and returns
// the first feasible set, or nothing when nu(G) > s. Orders above
// kCertificateSubsetLimit throw SizeLimitError.
std::optional<BergeTutteCertificate> berge_tutte_certificate(const Graph& g, int s);

// Extracts X = A(G) from the Gallai-Edmonds decomposition (vertices adjacent
// to, but outside, the set missed by some maximum matching). Works at any
// order; X attains |X| + sum floor(|C|/2) = nu(G).
std::optional<BergeTutteCertificate> gallai_edmonds_certificate(const Graph& g, int s);

}  // namespace turan
