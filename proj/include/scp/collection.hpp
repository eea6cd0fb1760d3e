#ifndef SCP_COLLECTION_HPP
#define SCP_COLLECTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "scp/subcube.hpp"

namespace scp {

// An ordered collection of same-shape subcubes: a candidate partition, cover,
// or (when flagged) a partial collection that need not cover anything.
class SubcubeCollection {
 public:
  SubcubeCollection(int q, int n, std::vector<Subcube> members, bool partial = false);

  int q() const { return q_; }
  int n() const { return n_; }
  bool partial() const { return partial_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Subcube>& members() const { return members_; }
  const Subcube& member(std::size_t i) const { return members_[i]; }

  bool contains_member(const Subcube& s) const;

  // Copy with members in serialization order (lexicographic, star greatest).
  SubcubeCollection sorted() const;

  friend bool operator==(const SubcubeCollection& a, const SubcubeCollection& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int q_;
  int n_;
  bool partial_;
  std::vector<Subcube> members_;
};

// True iff the members are pairwise disjoint and their measures add up to the
// whole cube, checked in exact integer arithmetic. False on the empty
// collection.
bool is_partition(const SubcubeCollection& F);

// True iff every coordinate is mentioned by some member.
bool is_tight(const SubcubeCollection& F);

// Exact check that sum of q^dims[i] equals q^target_dim, by base-q digit
// counting (no big integers, no floating point).
bool measure_sums_to(std::span<const int> dims, int q, int target_dim);

struct WeightVector {
  // counts[h] = number of members of weight h; length n+1.
  std::vector<std::uint64_t> counts;

  std::vector<std::uint64_t> suffix_sums() const;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// Histogram of member weights. Binary collections only.
WeightVector weight_vector(const SubcubeCollection& F);

// a majorizes b iff every suffix sum of a dominates the one of b.
bool majorizes(const WeightVector& a, const WeightVector& b);

// Sum of (q-1)^weight(s) over the members of a binary collection; the size of
// its threshold expansion to alphabet q.
std::uint64_t phi_sum(const SubcubeCollection& F, int q);

struct DimStats {
  int delta = 0;                      // minimum dimension
  std::optional<int> delta_star;      // min dimension among members ending with star
  std::optional<int> delta_b;         // min dimension among members ending with non-star
  int Delta = 0;                      // minimum codimension
  friend bool operator==(const DimStats&, const DimStats&) = default;
};

DimStats dim_stats(const SubcubeCollection& F);

struct StructureFlags {
  bool regular = false;
  std::optional<int> homogeneous_codim;        // set iff uniform codimension and tight
  std::vector<std::uint64_t> mentions_per_coordinate;
};

StructureFlags structure_flags(const SubcubeCollection& F);

}  // namespace scp

#endif
