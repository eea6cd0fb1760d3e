#ifndef SCP_IRREDUCIBILITY_HPP
#define SCP_IRREDUCIBILITY_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "scp/collection.hpp"
#include "scp/errors.hpp"

namespace scp {

// The closure-based reducibility decision procedure, generic over any element
// family that supports intersection testing, joins and a dimension (so the
// exact measure identity sum q^dim(member) = q^dim(join) decides whether a
// disjoint union fills its join). Subcubes and affine subspaces both qualify.
//
// An Ops type provides:
//   bool intersects(const E&, const E&)
//   E    join(const E&, const E&)
//   int  dimension(const E&)
//   int  ambient(const E&)     // n
//   int  radix()               // q
//   bool equal(const E&, const E&)

template <class E>
struct ReducibilityWitness {
  std::vector<std::size_t> member_indices;  // the set G, sorted
  E join_element;                           // the subcube / subspace equal to the union of G
};

template <class E>
struct IrreducibilityVerdict {
  std::optional<ReducibilityWitness<E>> witness;  // empty = irreducible
  std::uint64_t pairs_examined = 0;
  bool irreducible() const { return !witness.has_value(); }
};

template <class E>
struct ClosureResult {
  std::vector<std::size_t> indices;  // sorted
  E join;
};

// Least superset of {seed_i, seed_j} closed under absorbing any member that
// intersects the running join. The resulting set does not depend on the scan
// order; `scan_order` (a permutation of the indices) exists so tests can
// exercise that.
template <class E, class Ops>
ClosureResult<E> closure(std::span<const E> members, std::size_t seed_i, std::size_t seed_j,
                         const Ops& ops, std::span<const std::size_t> scan_order = {}) {
  const std::size_t m = members.size();
  if (seed_i >= m || seed_j >= m || seed_i == seed_j)
    throw precondition_error("closure: seed indices out of range or equal");
  std::vector<char> in_set(m, 0);
  in_set[seed_i] = in_set[seed_j] = 1;
  E running = ops.join(members[seed_i], members[seed_j]);
  // once the join is the whole space every member intersects it
  bool full = ops.dimension(running) == ops.ambient(running);
  bool changed = !full;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos < m; ++pos) {
      std::size_t k = scan_order.empty() ? pos : scan_order[pos];
      if (in_set[k]) continue;
      if (ops.intersects(members[k], running)) {
        in_set[k] = 1;
        running = ops.join(running, members[k]);
        changed = true;
        if (ops.dimension(running) == ops.ambient(running)) {
          full = true;
          break;
        }
      }
    }
    if (full) break;
  }
  if (full)
    for (std::size_t k = 0; k < m; ++k) in_set[k] = 1;
  std::vector<std::size_t> indices;
  for (std::size_t k = 0; k < m; ++k)
    if (in_set[k]) indices.push_back(k);
  return ClosureResult<E>{std::move(indices), std::move(running)};
}

// Decides irreducibility of a partition by running the closure from every
// seed pair in lexicographic order; the first pair whose closure is a proper
// subset yields the witness, so the verdict is deterministic.
template <class E, class Ops>
IrreducibilityVerdict<E> test_irreducible_generic(std::span<const E> members, const Ops& ops) {
  IrreducibilityVerdict<E> verdict;
  const std::size_t m = members.size();
  if (m < 2) return verdict;  // no admissible G exists
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      ++verdict.pairs_examined;
      ClosureResult<E> c = closure<E, Ops>(members, i, j, ops);
      if (c.indices.size() < m) {
        verdict.witness = ReducibilityWitness<E>{std::move(c.indices), std::move(c.join)};
        return verdict;
      }
    }
  }
  return verdict;
}

inline constexpr std::size_t kPartialIrreducibilityCap = 20;

// Exhaustive reducibility test for partial collections (pairwise disjoint,
// need not cover): looks for a subset G, |G| > 1, whose union is an element
// other than the full space. The union-is-element test is decided by the
// exact measure identity against the join. The closure shortcut is only
// justified for partitions, hence the subset enumeration and the hard cap.
// G may be the entire input; only a full-space join is excluded unless
// `full_space_allowed` is set.
template <class E, class Ops>
std::optional<ReducibilityWitness<E>> find_partial_witness(
    std::span<const E> members, const Ops& ops, bool full_space_allowed = false,
    std::size_t cap = kPartialIrreducibilityCap) {
  const std::size_t m = members.size();
  if (m > cap)
    throw budget_error("partial irreducibility check limited to " + std::to_string(cap) +
                       " members, got " + std::to_string(m));
  if (m < 2) return std::nullopt;
  const int n = ops.ambient(members[0]);
  for (std::uint64_t mask = 3; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::optional<E> running;
    std::vector<int> dims;
    std::vector<std::size_t> indices;
    for (std::size_t k = 0; k < m; ++k) {
      if (!(mask >> k & 1)) continue;
      running = running ? ops.join(*running, members[k]) : members[k];
      dims.push_back(ops.dimension(members[k]));
      indices.push_back(k);
    }
    int jd = ops.dimension(*running);
    if (jd == n && !full_space_allowed) continue;
    if (measure_sums_to(dims, ops.radix(), jd))
      return ReducibilityWitness<E>{std::move(indices), std::move(*running)};
  }
  return std::nullopt;
}

// Subcube instantiation.

struct SubcubeOps {
  bool intersects(const Subcube& a, const Subcube& b) const { return !conflicts(a, b); }
  Subcube join(const Subcube& a, const Subcube& b) const { return scp::join(a, b); }
  int dimension(const Subcube& a) const { return a.dimension(); }
  int ambient(const Subcube& a) const { return a.n(); }
  int radix() const { return q_; }
  bool equal(const Subcube& a, const Subcube& b) const { return a == b; }
  int q_ = 2;
};

using SubcubeWitness = ReducibilityWitness<Subcube>;
using SubcubeVerdict = IrreducibilityVerdict<Subcube>;

inline SubcubeVerdict test_irreducible(const SubcubeCollection& F) {
  assert(F.size() < 2 || is_partition(F));
  return test_irreducible_generic(std::span<const Subcube>(F.members()), SubcubeOps{F.q()});
}

inline ClosureResult<Subcube> closure(const SubcubeCollection& F, std::size_t i, std::size_t j) {
  return closure(std::span<const Subcube>(F.members()), i, j, SubcubeOps{F.q()});
}

inline std::optional<SubcubeWitness> is_partial_irreducible(
    const SubcubeCollection& Fp, bool full_cube_join_allowed = false,
    std::size_t cap = kPartialIrreducibilityCap) {
  return find_partial_witness(std::span<const Subcube>(Fp.members()), SubcubeOps{Fp.q()},
                              full_cube_join_allowed, cap);
}

}  // namespace scp

#endif
