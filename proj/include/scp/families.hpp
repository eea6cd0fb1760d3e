#ifndef SCP_FAMILIES_HPP
#define SCP_FAMILIES_HPP

#include <optional>
#include <utility>

#include "scp/collection.hpp"

namespace scp {

// Explicit binary constructions. Every function returns a collection with
// members in serialization order; tests re-verify partition/tightness/
// irreducibility of each output.

// {0x : x in F0\F1} + {1x : x in F1\F0} + {*x : x in F0 and F1}. Both inputs
// must be binary partitions of the same length.
SubcubeCollection merge(const SubcubeCollection& F0, const SubcubeCollection& F1);

// Tight irreducible partition of size 2n-1, grown by merging from the
// length-3 base {000, *01, 1*0, 01*, 111}.
SubcubeCollection family_s(int n);

enum class WeightVariant { A, B, C, D };

// Tight irreducible partitions of size 2n-1 with extremal weight vectors:
// A, B, C have weight vector (1, n-1, n-1, 0, ...), D has (1, n, n-3, 1, 0, ...).
// B flips coordinate 1 of A, D flips coordinate 3, C flips both.
SubcubeCollection family_weight(int n, WeightVariant variant);

// Two subcubes form an nfs-pair when they differ on exactly two positions
// i, j with {s_i, t_i} = {0, 1} and t_j = *. The flip rewrites the pair while
// preserving the union, generalizing x00 + x1* = x*0 + x11.
bool is_nfs_pair(const Subcube& s, const Subcube& t);
std::pair<Subcube, Subcube> nfs_flip(const Subcube& s, const Subcube& t);

// Replaces an nfs-pair of F by both versions, one per half-cube:
// {*x : x in F, x != s,t} + {bs, bt, (1-b)s', (1-b)t'}; size grows by 2.
SubcubeCollection twist(const SubcubeCollection& F, const Subcube& s, const Subcube& t, int b);

// Tight irreducible partition of odd length n with Theta(n^3) members: the
// point 0^n, all rotations of 0^m 1 *^m, and one subcube per admissible
// (i, j, k) triple.
SubcubeCollection cubic(int n);

// Tight irreducible partition of odd length n built from all rotations of
// concatenations of the blocks *1 and 0, plus the point 1^n. Its size is
// F(n+1) + F(n-1) + 1 in Fibonacci numbers.
SubcubeCollection lagarias_shor(int n);

// k-fold substitution of the first coordinate by an XOR of k+1 fresh
// coordinates; preserves irreducibility and multiplies point count by 2^k.
// F must be an irreducible binary partition other than {0*^(n-1), 1*^(n-1)}.
SubcubeCollection xor_extend(const SubcubeCollection& F, int k);

// Element of Z4, or a pair of cyclically adjacent elements.
struct GrayState {
  int value = 0;                 // first element, 0..3
  bool pair = false;             // pair means {value, value+1 mod 4}
  static GrayState singleton(int v);
  static GrayState adjacent_pair(int first, int second);
};

// The fixed bijection Z4 -> {0,1}^2 (00, 01, 11, 10); adjacent pairs map to
// the covering edge, e.g. {1,2} -> *1.
Subcube gray_enc(const GrayState& g);

// No member ends with **, and complementing the last two symbols of a member
// (stars untouched) never yields another member.
bool has_complementation_property(const SubcubeCollection& F);

// One inductive step of the doubling construction: four shifted copies of F,
// with four edges swapped around 0^(n-1)*. Requires F irreducible, containing
// 0^(n-1)*, with the complementation property; the output (length n+2, size
// 4|F|) again satisfies all of that.
SubcubeCollection perezhogin_step(const SubcubeCollection& F);

// Irreducible partitions of maximal size 5 * 2^(n-3) (n != 4), built by
// iterating perezhogin_step from length-3 and length-6 bases. For n = 4 the
// exceptional 9-member partition is returned.
SubcubeCollection maximal_family(int n);

// Irreducible (n, n-1)-homogeneous partitions (perfect matchings of the cube
// graph) for n >= 4, n != 5.
SubcubeCollection special_perfect_matching(int n);

// The 16-member irreducible (6,4)-homogeneous partition.
SubcubeCollection homogeneous_6_4();

// { *t** : t* in F } + { 0tb*, 1t*b : tb in F }; length n+2, min dimension
// grows by at least one.
SubcubeCollection merge_stars(const SubcubeCollection& F);

// Tight irreducible partitions maximizing the minimum dimension:
// delta = (n-3)/2 for odd n, (n-4)/2 for n = 4, (n-2)/2 for even n >= 6.
SubcubeCollection min_dim_family(int n);

// Rewrites an irreducible (n,k)-homogeneous partition (k >= 2) into a
// (3n,2k)-homogeneous one: n rounds of replacing t* by ***t and tb by
// b*0t, *b1t.
SubcubeCollection homogeneous_pump(const SubcubeCollection& F);

}  // namespace scp

#endif
