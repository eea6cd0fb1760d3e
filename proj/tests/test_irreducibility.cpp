#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "scp/irreducibility.hpp"

using namespace scp;
using scptest::coll;
using scptest::cube;

namespace {
const SubcubeCollection s3 = coll({"000", "*01", "1*0", "01*", "111"});

// Exhaustive oracle: a subset G with 1 < |G| < |F| whose union is a subcube.
bool reducible_oracle(const SubcubeCollection& F) {
  const auto& ms = F.members();
  const std::size_t m = ms.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    int pc = std::popcount(mask);
    if (pc < 2 || pc == static_cast<int>(m)) continue;
    std::optional<Subcube> j;
    std::vector<int> dims;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1) {
        j = j ? join(*j, ms[k]) : ms[k];
        dims.push_back(ms[k].dimension());
      }
    if (measure_sums_to(dims, F.q(), j->dimension())) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("closure") {
  SubcubeCollection F = coll({"0*", "10", "11"});
  auto c = closure(F, 1, 2);
  CHECK(c.indices == std::vector<std::size_t>{1, 2});
  CHECK(c.join == cube("1*"));

  for (std::size_t i = 0; i < s3.size(); ++i)
    for (std::size_t j = i + 1; j < s3.size(); ++j) {
      auto full = closure(s3, i, j);
      CHECK(full.indices.size() == s3.size());
      CHECK(full.join == Subcube::all_stars(2, 3));
    }

  SubcubeCollection halves = coll({"0*", "1*"});
  auto h = closure(halves, 0, 1);
  CHECK(h.indices.size() == 2);
  CHECK(h.join == Subcube::all_stars(2, 2));

  CHECK_THROWS_AS(closure(F, 0, 7), precondition_error);
}

TEST_CASE("closure is independent of the absorption order") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    SubcubeCollection F = scptest::random_partition(4, 2, rng);
    if (F.size() < 2) continue;
    std::vector<std::size_t> order(F.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i + 1 < F.size(); ++i)
      for (std::size_t j = i + 1; j < F.size(); ++j) {
        auto base = closure(F, i, j);
        std::shuffle(order.begin(), order.end(), rng);
        auto shuffled = closure(std::span<const Subcube>(F.members()), i, j, SubcubeOps{F.q()},
                                order);
        CHECK(base.indices == shuffled.indices);
        CHECK(base.join == shuffled.join);
      }
  }
}

TEST_CASE("test_irreducible") {
  auto v = test_irreducible(coll({"0*", "10", "11"}));
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->member_indices == std::vector<std::size_t>{1, 2});
  CHECK(v.witness->join_element == cube("1*"));
  CHECK(v.pairs_examined >= 1);

  CHECK(test_irreducible(s3).irreducible());
  CHECK(test_irreducible(s3).pairs_examined == 10);

  // single member and two halves are trivially irreducible
  CHECK(test_irreducible(coll({"**"}, 2)).irreducible());
  CHECK(test_irreducible(coll({"0*", "1*"})).irreducible());
}

TEST_CASE("witness invariants re-verified by measure accounting") {
  std::mt19937_64 rng(17);
  int reducible_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    SubcubeCollection F = scptest::random_partition(3 + static_cast<int>(rng() % 3), 2, rng);
    auto v = test_irreducible(F);
    if (!v.witness) continue;
    ++reducible_seen;
    const auto& w = *v.witness;
    CHECK(w.member_indices.size() > 1);
    CHECK(w.member_indices.size() < F.size());
    std::vector<int> dims;
    for (std::size_t i : w.member_indices) {
      CHECK(contains(w.join_element, F.member(i)));
      dims.push_back(F.member(i).dimension());
    }
    for (std::size_t a = 0; a < w.member_indices.size(); ++a)
      for (std::size_t b = a + 1; b < w.member_indices.size(); ++b)
        CHECK(conflicts(F.member(w.member_indices[a]), F.member(w.member_indices[b])));
    CHECK(measure_sums_to(dims, 2, w.join_element.dimension()));
  }
  CHECK(reducible_seen > 50);
}

TEST_CASE("verdicts agree with the exhaustive subset oracle on random partitions") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    SubcubeCollection F = scptest::random_partition(2 + static_cast<int>(rng() % 3),
                                                    2 + static_cast<int>(rng() % 2), rng);
    if (F.size() > 16) continue;
    CHECK(test_irreducible(F).irreducible() == !reducible_oracle(F));
  }
}

TEST_CASE("is_partial_irreducible") {
  SubcubeCollection partial(2, 3, {cube("1**"), cube("00*")}, true);
  CHECK_FALSE(is_partial_irreducible(partial).has_value());

  SubcubeCollection pair(2, 2, {cube("10"), cube("11")}, true);
  auto w = is_partial_irreducible(pair);
  REQUIRE(w.has_value());
  CHECK(w->join_element == cube("1*"));
  CHECK(w->member_indices == std::vector<std::size_t>{0, 1});

  SubcubeCollection single(2, 3, {cube("101")}, true);
  CHECK_FALSE(is_partial_irreducible(single).has_value());

  // the whole subset is admissible when its union is a proper subcube
  SubcubeCollection whole(2, 3, {cube("100"), cube("101")}, true);
  CHECK(is_partial_irreducible(whole).has_value());

  // full-cube joins only count when explicitly allowed
  SubcubeCollection halves(2, 2, {cube("0*"), cube("1*")}, true);
  CHECK_FALSE(is_partial_irreducible(halves).has_value());
  CHECK(is_partial_irreducible(halves, /*full_cube_join_allowed=*/true).has_value());

  SubcubeCollection too_big(
      2, 64, std::vector<Subcube>(21, Subcube::all_stars(2, 64)), true);
  CHECK_THROWS_AS(is_partial_irreducible(too_big), budget_error);
}
