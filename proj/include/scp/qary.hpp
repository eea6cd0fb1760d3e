#ifndef SCP_QARY_HPP
#define SCP_QARY_HPP

#include <cstdint>
#include <vector>

#include "scp/collection.hpp"

namespace scp {

// Per-coordinate surjections {0,...,q-1} -> {0,1} (stars map to stars),
// lifting binary partitions to alphabet q.
struct ExpansionMap {
  std::vector<std::vector<int>> maps;  // maps[i][v] in {0,1}

  // phi_i(0) = 0 and phi_i(v) = 1 for v > 0, for every coordinate.
  static ExpansionMap thresholds(int n, int q);

  int n() const { return static_cast<int>(maps.size()); }
  int q() const { return maps.empty() ? 0 : static_cast<int>(maps.front().size()); }
};

void validate(const ExpansionMap& phis, int n, int q);

// Full preimage { s : phi(s) in F } of a binary partition; a partition of
// {0,...,q-1}^n preserving tightness and irreducibility.
SubcubeCollection expand(const SubcubeCollection& F, const ExpansionMap& phis);

// Tight irreducible partition of {0,...,q-1}^n of size (n-1)q(q-1) + 1: the
// threshold expansion of the weight-optimal family A_n.
SubcubeCollection minimal_qary(int n, int q);

// { 0^i b *^(n-i-1) : 0 <= i < n, 1 <= b < q } + { 0^n }: a tight partition
// of size (q-1)n + 1 attaining the minimal-cover bound.
SubcubeCollection staircase_cover(int n, int q);

struct CoverFlags {
  bool is_cover = false;
  bool is_minimal_cover = false;  // cover and every member has a private point
};

inline constexpr std::uint64_t kCoverPointBudget = std::uint64_t{1} << 24;

// Exhaustive point-coverage check; members may overlap. Throws budget_error
// when q^n exceeds the point budget.
CoverFlags cover_flags(const SubcubeCollection& F,
                       std::uint64_t point_budget = kCoverPointBudget);

}  // namespace scp

#endif
