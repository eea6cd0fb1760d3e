// Acceptance suite: one pass/fail line per criterion.
//
// Extended-budget targets (minimum size at n=5 and the (5,4)-homogeneous
// nonexistence) run only when SCP_EXTENDED=1 is set in the environment.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "scp/affine.hpp"
#include "scp/families.hpp"
#include "scp/fixtures.hpp"
#include "scp/io.hpp"
#include "scp/irreducibility.hpp"
#include "scp/qary.hpp"
#include "scp/search.hpp"
#include "scp/symmetry.hpp"

using namespace scp;

namespace {

struct Criterion {
  int failures = 0;
  std::vector<std::string> messages;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    messages.push_back(what);
  }
};

std::multiset<std::string> as_set(const SubcubeCollection& F) {
  std::multiset<std::string> out;
  for (const auto& s : F.members()) out.insert(s.to_string());
  return out;
}

SubcubeCollection rotate_left_all(const SubcubeCollection& F) {
  std::vector<Subcube> out;
  for (const Subcube& s : F.members()) out.push_back(rotated_left(s));
  return SubcubeCollection(F.q(), F.n(), std::move(out));
}

std::multiset<std::string> fixture_set(const char* name) {
  return as_set(parse_scp(find_fixture(name)->content));
}

std::uint64_t fib(int k) {
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return a;
}

bool extended_enabled() {
  const char* v = std::getenv("SCP_EXTENDED");
  return v && std::strcmp(v, "1") == 0;
}

// Every binary construction exercised by criteria 2 and 6, with the claims
// that hold for it.
struct GeneratedFamily {
  std::string name;
  SubcubeCollection F;
  bool tight_claimed = true;
};

std::vector<GeneratedFamily> generated_families(int max_n) {
  std::vector<GeneratedFamily> out;
  for (int n = 3; n <= max_n; ++n)
    out.push_back({"s(" + std::to_string(n) + ")", family_s(n)});
  for (int n = 3; n <= max_n; ++n)
    for (auto [v, tag] : {std::pair{WeightVariant::A, "A"}, {WeightVariant::B, "B"},
                          {WeightVariant::C, "C"}, {WeightVariant::D, "D"}})
      out.push_back({"weight(" + std::to_string(n) + "," + tag + ")", family_weight(n, v)});
  for (int n = 3; n <= max_n; n += 2)
    out.push_back({"cubic(" + std::to_string(n) + ")", cubic(n)});
  for (int n = 1; n <= std::min(max_n, 9); n += 2)
    out.push_back({"lagarias_shor(" + std::to_string(n) + ")", lagarias_shor(n)});
  for (int n = 4; n <= max_n; ++n)
    out.push_back({"xor_extend(s3," + std::to_string(n - 3) + ")",
                   xor_extend(family_s(3), n - 3), /*tight_claimed=*/false});
  for (int n = 3; n <= max_n; ++n)
    out.push_back({"maximal(" + std::to_string(n) + ")", maximal_family(n)});
  for (int n = 4; n <= max_n; ++n)
    if (n != 5)
      out.push_back({"spm(" + std::to_string(n) + ")", special_perfect_matching(n)});
  for (int n = 3; n <= max_n; ++n)
    out.push_back({"min_dim(" + std::to_string(n) + ")", min_dim_family(n)});
  out.push_back({"homogeneous_6_4", homogeneous_6_4()});
  for (int n = 3; n <= std::min(max_n, 6); ++n)
    for (int q = 2; q <= 5; ++q)
      out.push_back({"minimal_qary(" + std::to_string(n) + "," + std::to_string(q) + ")",
                     minimal_qary(n, q)});
  return out;
}

void criterion_1(Criterion& c) {
  c.expect(as_set(family_s(3)) == fixture_set("s3"), "family_s(3) != listing");
  c.expect(as_set(family_s(4)) == fixture_set("s4"), "family_s(4) != listing");
  c.expect(as_set(rotate_left_all(family_weight(5, WeightVariant::A))) == fixture_set("a5"),
           "rotated weight(5,A) != listing");
  c.expect(as_set(rotate_left_all(family_weight(5, WeightVariant::B))) == fixture_set("b5"),
           "rotated weight(5,B) != listing");
  c.expect(as_set(rotate_left_all(family_weight(5, WeightVariant::C))) == fixture_set("c5"),
           "rotated weight(5,C) != listing");
  c.expect(as_set(rotate_left_all(family_weight(5, WeightVariant::D))) == fixture_set("d5"),
           "rotated weight(5,D) != listing");
  c.expect(as_set(cubic(5)) == fixture_set("cubic-5"), "cubic(5) != listing");
  c.expect(as_set(lagarias_shor(5)) == fixture_set("lagarias-shor-5"),
           "lagarias_shor(5) != listing");
  c.expect(as_set(maximal_family(3)) == fixture_set("maximal-3"), "maximal(3) != listing");
  c.expect(as_set(special_perfect_matching(4)) == fixture_set("spm-4"), "spm(4) != listing");
  c.expect(as_set(homogeneous_6_4()) == fixture_set("homogeneous-6-4"),
           "homogeneous_6_4 != listing");
}

void criterion_2(Criterion& c) {
  for (const Fixture& f : fixtures()) {
    FixtureExpectations exp = fixture_expectations(f.content);
    if (f.avsp) {
      AffinePartition F = parse_avsp(f.content);
      c.expect(avsp_is_partition(F) == exp.partition, std::string(f.name) + ": partition");
      if (exp.tight)
        c.expect(avsp_is_tight(F) == *exp.tight, std::string(f.name) + ": tight");
      if (exp.irreducible)
        c.expect(avsp_test_irreducible(F).irreducible() == *exp.irreducible,
                 std::string(f.name) + ": irreducible");
    } else {
      SubcubeCollection F = parse_scp(f.content);
      c.expect(is_partition(F) == exp.partition, std::string(f.name) + ": partition");
      if (exp.tight) c.expect(is_tight(F) == *exp.tight, std::string(f.name) + ": tight");
      if (exp.irreducible)
        c.expect(test_irreducible(F).irreducible() == *exp.irreducible,
                 std::string(f.name) + ": irreducible");
      if (exp.homogeneous_codim)
        c.expect(structure_flags(F).homogeneous_codim == exp.homogeneous_codim,
                 std::string(f.name) + ": homogeneous");
    }
  }
  for (const GeneratedFamily& g : generated_families(10)) {
    c.expect(is_partition(g.F), g.name + ": partition");
    if (g.tight_claimed) c.expect(is_tight(g.F), g.name + ": tight");
    c.expect(test_irreducible(g.F).irreducible(), g.name + ": irreducible");
  }
  for (int n = 3; n <= 10; ++n) {
    AffinePartition F = avsp_family(n);
    c.expect(avsp_is_partition(F), "avsp_family: partition");
    c.expect(avsp_is_tight(F), "avsp_family: tight");
    c.expect(avsp_test_irreducible(F).irreducible(), "avsp_family: irreducible");
  }
}

void criterion_3(Criterion& c) {
  auto recheck = [&](const SubcubeCollection& F, const std::string& name) {
    if (F.size() <= 200)
      c.expect(is_partition(F) && test_irreducible(F).irreducible(), name + ": recheck");
  };
  for (int n = 3; n <= 20; ++n) {
    SubcubeCollection F = family_s(n);
    c.expect(F.size() == 2 * static_cast<std::size_t>(n) - 1, "family_s size law");
    recheck(F, "family_s");
  }
  for (int n = 1; n <= 19; n += 2) {
    SubcubeCollection F = lagarias_shor(n);
    c.expect(F.size() == fib(n + 1) + fib(n - 1) + 1, "lagarias_shor size law");
    recheck(F, "lagarias_shor");
  }
  for (int n : {3, 5, 6, 7, 8}) {
    SubcubeCollection F = maximal_family(n);
    c.expect(F.size() == (std::uint64_t{5} << (n - 3)), "maximal size law");
    recheck(F, "maximal");
  }
  for (int n = 4; n <= 16; ++n) {
    SubcubeCollection F = xor_extend(family_s(3), n - 3);
    std::uint64_t points = 0;
    for (const Subcube& s : F.members())
      if (s.dimension() == 0) ++points;
    c.expect(points == (std::uint64_t{1} << (n - 2)), "xor_extend point law");
  }
  for (int n = 3; n <= 6; ++n)
    for (int q = 2; q <= 5; ++q) {
      SubcubeCollection F = minimal_qary(n, q);
      c.expect(F.size() == static_cast<std::size_t>((n - 1) * q * (q - 1) + 1),
               "minimal_qary size law");
      recheck(F, "minimal_qary");
    }
  for (int n = 1; n <= 8; ++n)
    for (int q = 2; q <= 5; ++q)
      c.expect(staircase_cover(n, q).size() == static_cast<std::size_t>((q - 1) * n + 1),
               "staircase size law");
  std::vector<std::size_t> avsp_sizes{4, 6, 7, 8, 10, 11, 13, 14, 16, 17};
  for (int n = 3; n <= 12; ++n)
    c.expect(avsp_family(n).size() == avsp_sizes[static_cast<std::size_t>(n - 3)],
             "avsp_family size law at n=" + std::to_string(n));
}

void criterion_4(Criterion& c) {
  SearchConstraints cons;
  cons.node_budget = ~std::uint64_t{0};

  auto ms32 = min_size_search(3, 2, cons);
  c.expect(ms32.complete && ms32.value == 5, "min_size(3,2) == 5");
  auto ms42 = min_size_search(4, 2, cons);
  c.expect(ms42.complete && ms42.value == 7, "min_size(4,2) == 7");
  auto ms33 = min_size_search(3, 3, cons);
  c.expect(ms33.complete && ms33.value == 13, "min_size(3,3) == 13");

  for (auto [n, expected] : std::vector<std::pair<int, int>>{{3, 2}, {4, 4}, {5, 8}}) {
    auto r = max_points_search(n, cons);
    c.expect(r.complete && r.value == expected,
             "max_points(" + std::to_string(n) + ") == " + std::to_string(expected));
  }

  auto xs3 = max_size_search(3, cons);
  c.expect(xs3.complete && xs3.value == 5, "max_size(3) == 5");
  auto xs4 = max_size_search(4, cons);
  c.expect(xs4.complete && xs4.value == 9, "max_size(4) == 9, size 10 impossible");

  auto h43 = homogeneous_search(4, 3, cons);
  c.expect(h43.complete && h43.exists && h43.certificates.size() == 1,
           "homogeneous(4,3) exists, unique class");
  auto h64 = homogeneous_search(6, 4, cons);
  c.expect(h64.complete && h64.exists && h64.certificates.size() == 1,
           "homogeneous(6,4) exists, unique class");
  if (h64.certificates.size() == 1)
    c.expect(as_set(h64.certificates[0]) == as_set(canonical_form(homogeneous_6_4())),
             "homogeneous(6,4) class is the known one");
  auto h52 = homogeneous_search(5, 2, cons);
  c.expect(h52.complete && !h52.exists, "homogeneous(5,2) does not exist");
  for (int n = 2; n <= 5; ++n) {
    auto r = homogeneous_search(n, 1, cons);
    c.expect(r.complete && !r.exists, "homogeneous(" + std::to_string(n) + ",1) does not exist");
  }

  for (auto [n, q, expected] :
       std::vector<std::tuple<int, int, int>>{{2, 2, 3}, {3, 2, 4}, {2, 3, 5}}) {
    auto r = min_cover_search(n, q, cons);
    c.expect(r.complete && r.value == expected, "min_cover(" + std::to_string(n) + "," +
                                                    std::to_string(q) +
                                                    ") == " + std::to_string(expected));
  }

  auto av3 = avsp_min_size_search(3, cons);
  c.expect(av3.complete && av3.value == 4, "avsp_min_size(3) == 4");
  auto av4 = avsp_min_size_search(4, cons);
  c.expect(av4.complete && av4.value == 6, "avsp_min_size(4) == 6");

  if (extended_enabled()) {
    auto ms52 = min_size_search(5, 2, cons);
    c.expect(ms52.complete && ms52.value == 9, "extended: min_size(5,2) == 9");
    auto h54 = homogeneous_search(5, 4, cons);
    c.expect(h54.complete && !h54.exists, "extended: homogeneous(5,4) does not exist");
    auto xs5 = max_size_search(5, cons);
    c.expect(xs5.complete && xs5.value == 20, "extended: max_size(5) == 20");
  } else {
    std::cout << "  (extended-budget targets skipped; set SCP_EXTENDED=1)\n";
  }
}

void criterion_5(Criterion& c) {
  // parity split of every witness on randomly generated reducible partitions
  std::mt19937_64 rng(2024);
  int witnesses = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    // quick random partition: cover least uncovered point with a random
    // admissible subcube
    std::uint64_t total = std::uint64_t{1} << n;
    std::vector<char> covered(total, 0);
    std::vector<Subcube> members;
    for (std::uint64_t p = 0; p < total; ++p) {
      if (covered[p]) continue;
      std::vector<int> w(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = static_cast<int>(p >> (n - 1 - i) & 1);
      Subcube cur(2, w);
      for (int i = 0; i < n; ++i) {
        if (w[static_cast<std::size_t>(i)] != 0 || (rng() & 3) != 0) continue;
        std::vector<int> t = cur.symbols();
        t[static_cast<std::size_t>(i)] = kStar;
        Subcube cand(2, t);
        bool free = true;
        for (std::uint64_t pt = 0; pt < total; ++pt) {
          bool inside = true;
          for (int j = 0; j < n && inside; ++j)
            if (!cand.is_star(j) && cand.symbol(j) != static_cast<int>(pt >> (n - 1 - j) & 1))
              inside = false;
          if (inside && covered[pt]) free = false;
        }
        if (free) cur = cand;
      }
      for (std::uint64_t pt = 0; pt < total; ++pt) {
        bool inside = true;
        for (int j = 0; j < n && inside; ++j)
          if (!cur.is_star(j) && cur.symbol(j) != static_cast<int>(pt >> (n - 1 - j) & 1))
            inside = false;
        if (inside) covered[pt] = 1;
      }
      members.push_back(std::move(cur));
    }
    SubcubeCollection F(2, n, std::move(members));
    auto verdict = test_irreducible(F);
    if (!verdict.witness) continue;
    ++witnesses;
    const auto& G = verdict.witness->member_indices;
    std::set<std::uint64_t> patterns;
    for (std::size_t i : G) patterns.insert(F.member(i).star_pattern_mask());
    for (std::uint64_t S : patterns) {
      bool minimal = true;
      for (std::uint64_t P : patterns)
        if (P != S && (P & ~S) == 0) minimal = false;
      if (!minimal) continue;
      int even = 0, odd = 0;
      for (std::size_t i : G)
        if (F.member(i).star_pattern_mask() == S) (parity(F.member(i)) ? odd : even)++;
      c.expect(even == odd, "parity split violated");
    }
  }
  c.expect(witnesses > 200, "too few reducible samples");

  // regularity (n >= 2) and the weight floor (n >= 3) on the generated
  // tight irreducibles
  for (const GeneratedFamily& g : generated_families(8)) {
    if (!g.tight_claimed || g.F.q() != 2 || g.F.n() < 2) continue;
    c.expect(structure_flags(g.F).regular, g.name + ": regular");
    if (g.F.n() >= 3) {
      auto w = weight_vector(g.F).counts;
      std::uint64_t heavy = 0;
      for (std::size_t h = 2; h < w.size(); ++h) heavy += w[h];
      c.expect(heavy >= 1, g.name + ": weight floor");
    }
  }

  // binomial weight vectors for homogeneous partitions and pump outputs
  auto binom = [](int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
      r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
  };
  for (const SubcubeCollection& F :
       {special_perfect_matching(4), special_perfect_matching(6), special_perfect_matching(7),
        homogeneous_6_4(), homogeneous_pump(special_perfect_matching(4)),
        homogeneous_pump(homogeneous_6_4())}) {
    auto flags = structure_flags(F);
    c.expect(flags.homogeneous_codim.has_value(), "homogeneous fixture is homogeneous");
    if (!flags.homogeneous_codim) continue;
    int k = *flags.homogeneous_codim;
    auto w = weight_vector(F).counts;
    bool ok = true;
    for (int h = 0; h <= F.n(); ++h)
      if (w[static_cast<std::size_t>(h)] != (h <= k ? binom(k, h) : 0)) ok = false;
    c.expect(ok, "binomial weight vector");
  }

  // 50 random surjective expansions per base family
  for (int n = 3; n <= 5; ++n)
    for (int q = 3; q <= 4; ++q) {
      SubcubeCollection base = family_weight(n, WeightVariant::A);
      for (int trial = 0; trial < 50; ++trial) {
        ExpansionMap phis;
        phis.maps.assign(static_cast<std::size_t>(n),
                         std::vector<int>(static_cast<std::size_t>(q), 0));
        for (auto& m : phis.maps) {
          do {
            for (auto& v : m) v = static_cast<int>(rng() & 1);
          } while (std::count(m.begin(), m.end(), 0) == 0 ||
                   std::count(m.begin(), m.end(), 1) == 0);
        }
        SubcubeCollection G = expand(base, phis);
        c.expect(is_partition(G) && is_tight(G) && test_irreducible(G).irreducible(),
                 "expansion preservation");
      }
    }

  // closure verdicts match the exhaustive subset oracle on ALL partitions, n <= 3
  for (int n = 1; n <= 3; ++n) {
    SearchConstraints cons;
    enumerate_partitions(n, 2, cons, [&](const SubcubeCollection& F) {
      bool oracle = false;
      const auto& ms = F.members();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ms.size()); ++mask) {
        int pc = std::popcount(mask);
        if (pc < 2 || pc == static_cast<int>(ms.size())) continue;
        std::optional<Subcube> j;
        std::vector<int> dims;
        for (std::size_t k = 0; k < ms.size(); ++k)
          if (mask >> k & 1) {
            j = j ? join(*j, ms[k]) : ms[k];
            dims.push_back(ms[k].dimension());
          }
        if (measure_sums_to(dims, 2, j->dimension())) oracle = true;
      }
      c.expect(test_irreducible(F).irreducible() == !oracle, "closure vs subset oracle");
    });
  }
}

void criterion_6(Criterion& c) {
  c.expect(bounds(7).max_size_upper == 83, "bounds(7) == 83");
  c.expect(bounds(8).max_size_upper == 166, "bounds(8) == 166");
  c.expect(bounds(9).max_size_upper == 334, "bounds(9) == 334");
  for (const GeneratedFamily& g : generated_families(10)) {
    if (g.F.q() != 2 || g.F.n() < 4 || !g.tight_claimed) continue;
    c.expect(g.F.size() >= static_cast<std::size_t>(g.F.n()) + 3,
             g.name + ": size >= n+3");
  }
  for (int n = 3; n <= 12; ++n)
    c.expect(avsp_family(n).size() >= static_cast<std::size_t>(n) + 1, "avsp size >= n+1");
  for (int n = 1; n <= 8; ++n)
    for (int q = 2; q <= 5; ++q) {
      SubcubeCollection F = staircase_cover(n, q);
      if (static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(q) <= 24) {
        CoverFlags flags = cover_flags(F);
        c.expect(flags.is_cover && flags.is_minimal_cover, "staircase is a tight minimal cover");
      }
      c.expect(F.size() >= static_cast<std::size_t>((q - 1) * n + 1), "cover bound");
    }
  SearchConstraints cons;
  cons.node_budget = ~std::uint64_t{0};
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    auto r = min_cover_search(n, q, cons);
    c.expect(r.value >= (q - 1) * n + 1, "searched covers respect the bound");
  }
}

void criterion_7(Criterion& c) {
  auto check_step = [&](const SubcubeCollection& from, const std::string& name) {
    SubcubeCollection to = perezhogin_step(from);
    c.expect(to.size() == 4 * from.size(), name + ": size quadruples");
    c.expect(has_complementation_property(to), name + ": complementation");
    std::vector<int> word(static_cast<std::size_t>(to.n()), 0);
    word.back() = kStar;
    c.expect(to.contains_member(Subcube(2, word)), name + ": contains 0^(n+1)*");
    std::vector<std::uint64_t> hfrom(static_cast<std::size_t>(from.n()) + 1, 0),
        hto(static_cast<std::size_t>(to.n()) + 1, 0);
    for (const Subcube& s : from.members()) ++hfrom[static_cast<std::size_t>(s.dimension())];
    for (const Subcube& s : to.members()) ++hto[static_cast<std::size_t>(s.dimension())];
    bool quadrupled = true;
    for (std::size_t d = 0; d < hfrom.size(); ++d)
      if (hto[d] != 4 * hfrom[d]) quadrupled = false;
    c.expect(quadrupled, name + ": dimension counts quadruple");
    c.expect(is_partition(to) && is_tight(to) && test_irreducible(to).irreducible(),
             name + ": verified");
    return to;
  };
  SubcubeCollection f3 = maximal_family(3);
  SubcubeCollection f5 = check_step(f3, "3->5");
  check_step(f5, "5->7");           // 80 members at n=7
  check_step(maximal_family(6), "6->8");  // 160 members at n=8
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  struct Entry {
    int number;
    const char* title;
    void (*fn)(Criterion&);
  };
  const Entry entries[] = {
      {1, "fixture equality of generator outputs", criterion_1},
      {2, "verification stack on fixtures and families", criterion_2},
      {3, "size laws", criterion_3},
      {4, "table reproduction by exhaustive search", criterion_4},
      {5, "property suites", criterion_5},
      {6, "bound checks", criterion_6},
      {7, "perezhogin chain integrity", criterion_7},
  };
  int failed = 0;
  for (const Entry& e : entries) {
    if (!selected.empty() && !selected.count(e.number)) continue;
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
      e.fn(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << e.number << " (" << e.title << "): "
              << (c.failures == 0 ? "PASS" : "FAIL") << " [" << secs << "s]\n";
    for (const std::string& m : c.messages) std::cout << "    " << m << "\n";
    if (c.failures) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
