#ifndef SCP_SEARCH_HPP
#define SCP_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scp/affine.hpp"
#include "scp/collection.hpp"

namespace scp {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchConstraints {
  std::optional<std::uint64_t> max_size;
  std::optional<std::uint64_t> min_size;
  bool require_tight = false;
  std::optional<int> homogeneous_codim;
  bool require_irreducible = false;
  bool prune_reducible_pairs = false;
  std::uint64_t node_budget = kDefaultNodeBudget;
  bool deterministic = true;
  int threads = 1;
};

struct SearchReport {
  std::string objective;
  // Extremal value; empty together with exists=false means proven nonexistence.
  std::optional<std::int64_t> value;
  bool exists = false;
  std::vector<SubcubeCollection> certificates;  // canonicalized
  std::vector<AffinePartition> avsp_certificates;
  std::uint64_t nodes = 0;
  std::uint64_t partitions_visited = 0;
  double wall_seconds = 0.0;
  // True only for full searches; a truncated search never reports its value
  // as final.
  bool complete = false;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t partitions_visited = 0;
  bool complete = false;
};

// Depth-first enumeration of subcube partitions of {0,...,q-1}^n: branch on
// the least uncovered point and try, in lexicographic word order, every
// subcube whose least point is that point and which is disjoint from the
// members chosen so far. Each partition satisfying the constraints is handed
// to the visitor exactly once. Requires q^n <= 64.
EnumerationStats enumerate_partitions(int n, int q, const SearchConstraints& constraints,
                                      const std::function<void(const SubcubeCollection&)>& visitor);

// Minimal size of a tight irreducible partition of {0,...,q-1}^n.
SearchReport min_size_search(int n, int q, SearchConstraints constraints = {});

// Maximal number of points / maximal size over irreducible partitions of
// {0,1}^n (tightness not required).
SearchReport max_points_search(int n, SearchConstraints constraints = {});
SearchReport max_size_search(int n, SearchConstraints constraints = {});

// Existence of irreducible (n,k)-homogeneous partitions; certificates carry
// one representative per canonical class and `value` is the class count.
// The first member is fixed to 0^k *^(n-k) (completeness up to isomorphism).
SearchReport homogeneous_search(int n, int k, SearchConstraints constraints = {});

// Minimal size of a tight minimal cover of {0,...,q-1}^n (members may
// overlap; every member must cover a private point).
SearchReport min_cover_search(int n, int q, SearchConstraints constraints = {});

// Minimal size of a tight irreducible affine vector space partition of
// {0,1}^n.
SearchReport avsp_min_size_search(int n, SearchConstraints constraints = {});

struct BoundsRecord {
  int n = 0;
  int q = 2;
  // Size of any tight irreducible binary partition is at least n+3 (n >= 4).
  std::optional<std::int64_t> binary_min_size_lower;
  // Size of any tight minimal cover (hence tight partition) is at least
  // (q-1)n + 1.
  std::int64_t cover_size_lower = 0;
  // Size of any irreducible binary partition is at most
  // floor((2n-1) / (3n-1) * 2^n) (n >= 3).
  std::optional<std::int64_t> max_size_upper;
  // Size of any tight affine vector space partition is at least n+1.
  std::int64_t avsp_size_lower = 0;
};

BoundsRecord bounds(int n, int q = 2);

// Lengths n admitting an irreducible (n,k)-homogeneous partition satisfy
// k+1 <= n <= 2^k - 3 (k >= 2, n >= 4).
std::pair<std::int64_t, std::int64_t> homogeneous_length_range(int k);

}  // namespace scp

#endif
