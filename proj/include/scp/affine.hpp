#ifndef SCP_AFFINE_HPP
#define SCP_AFFINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scp/collection.hpp"
#include "scp/irreducibility.hpp"

namespace scp {

// Vectors of F_2^n packed into machine words; coordinate i (0-based) is bit
// n-1-i, so the numeric order of packed points equals the lexicographic
// order of coordinate strings.

namespace gf2 {

std::uint64_t pack_point(const std::vector<int>& coords);
std::vector<int> unpack_point(std::uint64_t v, int n);

// Reduced row echelon basis: rows with strictly decreasing pivot bits, each
// pivot cleared from every other row. Returns the rank; `rows` is rewritten.
int echelonize(std::vector<std::uint64_t>& rows);

// Reduce x against an echelonized basis (canonical coset representative).
std::uint64_t reduce(std::uint64_t x, const std::vector<std::uint64_t>& rows);

bool in_span(std::uint64_t x, const std::vector<std::uint64_t>& rows);

// Basis of the intersection of two row spaces (Zassenhaus block reduction).
std::vector<std::uint64_t> intersect_spans(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b);

}  // namespace gf2

// A coset x + V of F_2^n in canonical form: echelonized basis and a
// representative with zeros in every pivot position. Two values are equal as
// records iff they denote the same coset.
class AffineSubspace {
 public:
  AffineSubspace(int n, std::uint64_t rep, std::vector<std::uint64_t> basis);

  int n() const { return n_; }
  std::uint64_t rep() const { return rep_; }
  const std::vector<std::uint64_t>& basis() const { return basis_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  int codimension() const { return n_ - dimension(); }

  bool contains_point(std::uint64_t p) const;

  friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
    return a.n_ == b.n_ && a.rep_ == b.rep_ && a.basis_ == b.basis_;
  }

 private:
  int n_;
  std::uint64_t rep_;
  std::vector<std::uint64_t> basis_;
};

AffineSubspace affine_from_subcube(const Subcube& s);

bool affine_intersects(const AffineSubspace& U, const AffineSubspace& W);

// Smallest affine subspace containing both: a + span(V, W, a+b).
AffineSubspace affine_join(const AffineSubspace& U, const AffineSubspace& W);

struct AffinePartition {
  int n = 0;
  std::vector<AffineSubspace> members;

  std::size_t size() const { return members.size(); }
  friend bool operator==(const AffinePartition&, const AffinePartition&) = default;
};

// Member-wise embedding of a binary subcube collection.
AffinePartition embed(const SubcubeCollection& F);

bool avsp_is_partition(const AffinePartition& F);

// Intersection of all linear parts is the zero space.
bool avsp_is_tight(const AffinePartition& F);

struct AffineOps {
  bool intersects(const AffineSubspace& a, const AffineSubspace& b) const {
    return affine_intersects(a, b);
  }
  AffineSubspace join(const AffineSubspace& a, const AffineSubspace& b) const {
    return affine_join(a, b);
  }
  int dimension(const AffineSubspace& a) const { return a.dimension(); }
  int ambient(const AffineSubspace& a) const { return a.n(); }
  int radix() const { return 2; }
  bool equal(const AffineSubspace& a, const AffineSubspace& b) const { return a == b; }
};

using AffineWitness = ReducibilityWitness<AffineSubspace>;
using AffineVerdict = IrreducibilityVerdict<AffineSubspace>;

AffineVerdict avsp_test_irreducible(const AffinePartition& F);

struct CompressResult {
  AffinePartition partition;
  bool tight = false;  // the star-pattern tightness criterion
};

// Merges each star-pattern class of an irreducible binary partition into one
// affine subspace. Throws precondition_error naming the class whose union is
// not affine. The tight flag evaluates the pattern criterion: the star
// patterns of the per-class subcube joins intersect trivially.
CompressResult compress(const SubcubeCollection& F);

// Generalized compression: `groups` partitions the member indices of F, each
// group lying inside one star-pattern class with an affine union, and each
// per-class family of unions must be irreducible as a partial collection
// (checked exhaustively under the usual cap).
AffinePartition compress_with_grouping(const SubcubeCollection& F,
                                       const std::vector<std::vector<std::size_t>>& groups);

// The inductive small-size construction: grows F (helped by H, which fixes
// the star-first-coordinate members and the pattern-class bookkeeping) by 2k
// coordinates, then compresses. Output has size m(H) + k * m'(H).
AffinePartition avsp_inductive(const SubcubeCollection& F, const SubcubeCollection& H, int k);

// Tight irreducible affine partitions of minimal known size:
// (3n-1)/2 for odd n, 6 for n = 4, 3n/2 - 1 for even n >= 6.
AffinePartition avsp_family(int n);

// AVSP text grammar: header `avsp n=<n>`, then one subspace per line as
// `rep=<bits>; basis=<bits>,<bits>,...` (possibly empty basis). Subspaces are
// re-canonicalized on load.
AffinePartition parse_avsp(std::string_view text);
std::string format_avsp(const AffinePartition& F);

}  // namespace scp

#endif
