#ifndef SCP_SUBCUBE_HPP
#define SCP_SUBCUBE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scp/errors.hpp"

namespace scp {

// Symbol value for an unconstrained coordinate.
inline constexpr int kStar = -1;

inline constexpr int kMinAlphabet = 2;
inline constexpr int kMaxAlphabet = 36;  // one serialization character per symbol
inline constexpr int kMaxLength = 64;    // masks are single machine words

// An axis-aligned subcube of {0,...,q-1}^n, written as a word over
// {0,...,q-1,*}. Immutable after construction. Coordinates are 0-based in
// this API; reports use 1-based labels.
//
// Besides the symbol word, a fixed-coordinate mask and one mask per symbol
// value are kept so that conflict/join/containment run word-parallel.
class Subcube {
 public:
  Subcube(int q, std::vector<int> symbols);
  static Subcube all_stars(int q, int n);

  int q() const { return q_; }
  int n() const { return n_; }

  // Symbol at coordinate i, or kStar.
  int symbol(int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  bool is_star(int i) const { return symbol(i) == kStar; }

  const std::vector<int>& symbols() const { return symbols_; }

  // Bit i set iff coordinate i is mentioned (non-star).
  std::uint64_t fixed_mask() const { return fixed_; }
  // Bit i set iff coordinate i carries symbol v.
  std::uint64_t value_mask(int v) const { return value_masks_[static_cast<std::size_t>(v)]; }
  // Bit i set iff coordinate i is a star.
  std::uint64_t star_pattern_mask() const;

  int codimension() const;
  int dimension() const { return n_ - codimension(); }

  std::string to_string() const;

  friend bool operator==(const Subcube& a, const Subcube& b) {
    return a.q_ == b.q_ && a.symbols_ == b.symbols_;
  }

 private:
  int q_;
  int n_;
  std::uint64_t fixed_;
  std::vector<int> symbols_;
  std::vector<std::uint64_t> value_masks_;
};

// Serialization order: symbolwise, with 0 < 1 < ... < q-1 < STAR.
std::strong_ordering compare_words(const Subcube& a, const Subcube& b);

struct SubcubeWordLess {
  bool operator()(const Subcube& a, const Subcube& b) const {
    return compare_words(a, b) == std::strong_ordering::less;
  }
};

// True iff some coordinate carries two distinct non-star symbols;
// equivalently, the subcubes are disjoint.
bool conflicts(const Subcube& s, const Subcube& t);

// Smallest subcube containing both (equal non-star symbols kept, else star).
Subcube join(const Subcube& s, const Subcube& t);

// True iff t is contained in s: every mentioned coordinate of s carries the
// same symbol in t.
bool contains(const Subcube& s, const Subcube& t);

// Number of 1-symbols. Binary subcubes only.
int weight(const Subcube& s);
// Parity of the weight: 0 even, 1 odd. Binary subcubes only.
int parity(const Subcube& s);

// Star pattern as a sorted list of 1-based coordinates.
std::vector<int> star_pattern(const Subcube& s);

struct SubcubeStats {
  int dimension = 0;
  int codimension = 0;
  std::optional<int> weight;  // binary only
  std::optional<int> parity;  // binary only
  std::vector<int> star_pattern;  // 1-based coordinates
};

SubcubeStats stats(const Subcube& s);

// Word rewriting helpers used by the constructions.
Subcube prefixed(int symbol, const Subcube& s);
Subcube suffixed(const Subcube& s, int symbol);
Subcube concat(const Subcube& a, const Subcube& b);
Subcube rotated_left(const Subcube& s);   // x1..xn -> x2..xn x1
Subcube rotated_right(const Subcube& s);  // inverse of rotated_left
Subcube flipped(const Subcube& s, int coordinate);  // swap 0 and 1; binary only
Subcube without_first(const Subcube& s);
Subcube without_last(const Subcube& s, int count = 1);

namespace detail {
void require_same_shape(const Subcube& s, const Subcube& t, const char* op);
}

}  // namespace scp

#endif
