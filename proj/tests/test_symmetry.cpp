#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "scp/families.hpp"
#include "scp/irreducibility.hpp"
#include "scp/symmetry.hpp"

using namespace scp;
using scptest::as_set;
using scptest::coll;

namespace {
const SubcubeCollection s3 = coll({"000", "*01", "1*0", "01*", "111"});
const SubcubeCollection a3 = coll({"*00", "001", "01*", "110", "1*1"});

CubeSymmetry flip_symmetry(int q, int n, int coordinate) {
  CubeSymmetry sym = identity_symmetry(q, n);
  std::swap(sym.symbol_perms[static_cast<std::size_t>(coordinate)][0],
            sym.symbol_perms[static_cast<std::size_t>(coordinate)][1]);
  return sym;
}

CubeSymmetry random_symmetry(int q, int n, std::mt19937_64& rng) {
  CubeSymmetry sym = identity_symmetry(q, n);
  std::shuffle(sym.coord_perm.begin(), sym.coord_perm.end(), rng);
  for (auto& p : sym.symbol_perms) std::shuffle(p.begin(), p.end(), rng);
  return sym;
}
}  // namespace

TEST_CASE("apply") {
  // flipping the third coordinate of A_3 gives S_3
  CHECK(as_set(apply(flip_symmetry(2, 3, 2), a3)) == as_set(s3));
  CHECK(apply(identity_symmetry(2, 3), s3) == s3.sorted());

  // cyclic left rotation: coordinate i+1 moves to slot i
  CubeSymmetry rot = identity_symmetry(2, 3);
  rot.coord_perm = {2, 0, 1};
  CHECK(as_set(apply(rot, s3)) == as_set({"000", "111", "01*", "*01", "1*0"}));

  CubeSymmetry bad = identity_symmetry(2, 3);
  bad.coord_perm = {0, 0, 1};
  CHECK_THROWS_AS(apply(bad, s3), precondition_error);
}

TEST_CASE("canonical_form identifies flip-related families") {
  SubcubeCollection d3 = apply(flip_symmetry(2, 3, 2), a3);
  CHECK(canonical_form(a3) == canonical_form(d3));
  CHECK(are_isomorphic(a3, d3));
  CHECK(are_isomorphic(s3, s3));
  CHECK_FALSE(are_isomorphic(s3, coll({"0*", "10", "11"})));  // different sizes
}

TEST_CASE("canonical_form is orbit-invariant") {
  std::mt19937_64 rng(31);
  for (const SubcubeCollection& F : {s3, a3, coll({"00*", "01*", "1*0", "1*1"})}) {
    SubcubeCollection canon = canonical_form(F);
    for (int trial = 0; trial < 100; ++trial)
      CHECK(canonical_form(apply(random_symmetry(F.q(), F.n(), rng), F)) == canon);
  }
}

TEST_CASE("verification predicates are invariant under symmetry") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    SubcubeCollection F = scptest::random_partition(4, 2, rng);
    SubcubeCollection G = apply(random_symmetry(2, 4, rng), F);
    CHECK(is_partition(G) == is_partition(F));
    CHECK(is_tight(G) == is_tight(F));
    CHECK(test_irreducible(G).irreducible() == test_irreducible(F).irreducible());
    auto dims = [](const SubcubeCollection& C) {
      std::multiset<int> out;
      for (const auto& s : C.members()) out.insert(s.dimension());
      return out;
    };
    CHECK(dims(G) == dims(F));
    CHECK(structure_flags(G).homogeneous_codim == structure_flags(F).homogeneous_codim);
  }
}

TEST_CASE("canonical_form budget") {
  SubcubeCollection wide(2, 16, {Subcube::all_stars(2, 16)});
  CHECK_THROWS_AS(canonical_form(wide), budget_error);
}
