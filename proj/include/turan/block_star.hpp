#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace turan {

// H_{n,k,a}: a clique on k - a vertices, plus n - (k - a) further vertices
// each joined to the same a vertices of the clique.
struct HGraphParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t a = 0;

  // k >= 2a >= 2 and n >= k - a.
  void validate() const;
  std::int64_t clique_order() const { return k - a; }

  friend bool operator==(const HGraphParams&, const HGraphParams&) = default;
};

struct CliqueBlock {
  std::int64_t order = 0;
  friend bool operator==(const CliqueBlock&, const CliqueBlock&) = default;
};

// A central block with cliques hung at a single hub vertex. The hub is
// dominator 0 of an H central block (vertex 0 of a clique).
struct BlockStarSpec {
  std::variant<HGraphParams, CliqueBlock> central;
  std::vector<std::int64_t> attached;  // clique orders, each >= 2

  void validate() const;
  std::int64_t central_order() const;
  // central order + sum (c_i - 1)
  std::int64_t order() const;
  // attached orders in rendering order (non-increasing)
  std::vector<std::int64_t> sorted_attached() const;

  // Readable form such as "H_{20,5,2} + 2xK_6 + K_4".
  std::string describe() const;

  // Line format: "H n k a" or "K c", then one attached order per line.
  std::string to_text() const;
  static BlockStarSpec parse(std::string_view text);

  friend bool operator==(const BlockStarSpec&, const BlockStarSpec&) = default;
};

}  // namespace turan
