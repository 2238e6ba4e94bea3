#include "turan/family.hpp"

#include <sstream>

#include "turan/cycles.hpp"
#include "turan/matching.hpp"

namespace turan {
namespace {

// Budget for upgrading the first long cycle found into a longest one.
constexpr std::uint64_t kWitnessBudget = 2'000'000;

}  // namespace

FamilyReport is_family_free(const Graph& g, const ForbiddenFamily& fam) {
  fam.validate();
  FamilyReport report;
  const Matching m = maximum_matching(g);
  report.matching_number = m.size;
  if (fam.cycle_min_len) {
    if (auto cycle = find_cycle_geq(g, *fam.cycle_min_len)) {
      report.family_free = false;
      auto longest = circumference(g, kWitnessBudget);
      report.cycle_witness = longest.cycle.size() > cycle->size() ? longest.cycle : *cycle;
    }
  }
  if (fam.matching_bound && m.size > *fam.matching_bound) {
    report.family_free = false;
    auto edges = m.edges();
    edges.resize(static_cast<std::size_t>(*fam.matching_bound) + 1);
    report.matching_witness = std::move(edges);
  }
  return report;
}

std::string FamilyReport::describe(const ForbiddenFamily& fam) const {
  if (family_free) return "family-free";
  std::ostringstream os;
  if (cycle_witness) {
    os << "contains a cycle of length " << cycle_witness->size() << " >= " << *fam.cycle_min_len << ":";
    for (Vertex v : *cycle_witness) os << ' ' << v;
  }
  if (matching_witness) {
    if (cycle_witness) os << '\n';
    os << "contains a matching of size " << matching_witness->size() << " > " << *fam.matching_bound << ":";
    for (const auto& e : *matching_witness) os << " (" << e.u << ',' << e.v << ')';
  }
  return os.str();
}

}  // namespace turan
