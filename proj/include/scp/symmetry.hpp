#ifndef SCP_SYMMETRY_HPP
#define SCP_SYMMETRY_HPP

#include <cstdint>
#include <vector>

#include "scp/collection.hpp"

namespace scp {

// A cube symmetry: a coordinate permutation combined with one symbol
// permutation per coordinate (stars are fixed). Input coordinate i lands at
// coord_perm[i], carrying symbol_perms[i][old symbol].
struct CubeSymmetry {
  std::vector<int> coord_perm;                 // permutation of 0..n-1
  std::vector<std::vector<int>> symbol_perms;  // n permutations of 0..q-1
};

CubeSymmetry identity_symmetry(int q, int n);

// Validates the permutations; throws precondition_error on malformed input.
void validate(const CubeSymmetry& sym, int q, int n);

Subcube apply(const CubeSymmetry& sym, const Subcube& s);

// Relabeled collection, members re-sorted into serialization order.
SubcubeCollection apply(const CubeSymmetry& sym, const SubcubeCollection& F);

inline constexpr std::uint64_t kCanonicalBudget = 10'000'000;

// Lexicographically least serialization of apply(sym, F) over the full group
// of n! * (q!)^n symmetries, by brute-force scan. Two collections have equal
// canonical forms iff they are isomorphic. Throws budget_error when the group
// is larger than `budget`.
SubcubeCollection canonical_form(const SubcubeCollection& F,
                                 std::uint64_t budget = kCanonicalBudget);

bool are_isomorphic(const SubcubeCollection& F, const SubcubeCollection& G,
                    std::uint64_t budget = kCanonicalBudget);

}  // namespace scp

#endif
