#include "turan/block_star.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "turan/errors.hpp"

namespace turan {

void HGraphParams::validate() const {
  detail::require(a >= 1, "H_{n,k,a}: a must be >= 1 (k >= 2a >= 2)");
  detail::require(k >= 2 * a, "H_{n,k,a}: k must be >= 2a");
  detail::require(n >= k - a, "H_{n,k,a}: n must be >= k - a");
}

void BlockStarSpec::validate() const {
  if (const auto* h = std::get_if<HGraphParams>(&central)) {
    h->validate();
  } else {
    detail::require(std::get<CliqueBlock>(central).order >= 1, "block star: central clique order must be >= 1");
  }
  for (auto c : attached) detail::require(c >= 2, "block star: attached clique orders must be >= 2");
}

std::int64_t BlockStarSpec::central_order() const {
  if (const auto* h = std::get_if<HGraphParams>(&central)) return h->n;
  return std::get<CliqueBlock>(central).order;
}

std::int64_t BlockStarSpec::order() const {
  std::int64_t total = central_order();
  for (auto c : attached) total += c - 1;
  return total;
}

std::vector<std::int64_t> BlockStarSpec::sorted_attached() const {
  auto out = attached;
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string BlockStarSpec::describe() const {
  std::ostringstream os;
  if (const auto* h = std::get_if<HGraphParams>(&central)) {
    os << "H_{" << h->n << ',' << h->k << ',' << h->a << '}';
  } else {
    os << "K_" << std::get<CliqueBlock>(central).order;
  }
  const auto parts = sorted_attached();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    os << " + ";
    if (j - i > 1) os << j - i << 'x';
    os << "K_" << parts[i];
    i = j;
  }
  return os.str();
}

std::string BlockStarSpec::to_text() const {
  std::ostringstream os;
  if (const auto* h = std::get_if<HGraphParams>(&central)) {
    os << "H " << h->n << ' ' << h->k << ' ' << h->a << '\n';
  } else {
    os << "K " << std::get<CliqueBlock>(central).order << '\n';
  }
  for (auto c : sorted_attached()) os << c << '\n';
  return os.str();
}

BlockStarSpec BlockStarSpec::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  BlockStarSpec spec;
  bool have_central = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto bad = [&](const std::string& why) {
      return ParseError("block-star spec line " + std::to_string(line_no) + ": " + why);
    };
    if (!have_central) {
      if (head == "H") {
        HGraphParams h;
        if (!(ls >> h.n >> h.k >> h.a)) throw bad("expected 'H n k a'");
        spec.central = h;
      } else if (head == "K") {
        CliqueBlock c;
        if (!(ls >> c.order)) throw bad("expected 'K c'");
        spec.central = c;
      } else {
        throw bad("first line must be 'H n k a' or 'K c'");
      }
      have_central = true;
    } else {
      std::istringstream hs(head);
      std::int64_t c = 0;
      if (!(hs >> c) || !hs.eof()) throw bad("expected one clique order");
      spec.attached.push_back(c);
    }
    std::string extra;
    if (ls >> extra) throw bad("trailing text");
  }
  if (!have_central) throw ParseError("block-star spec: missing central block line");
  spec.validate();
  return spec;
}

}  // namespace turan
