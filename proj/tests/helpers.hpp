#ifndef SCP_TEST_HELPERS_HPP
#define SCP_TEST_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "scp/collection.hpp"
#include "scp/io.hpp"

namespace scptest {

inline scp::Subcube cube(std::string_view word, int q = 0) {
  std::vector<int> symbols;
  int max_sym = 1;
  for (char c : word) {
    int v = c == '*' ? scp::kStar : (c >= 'a' ? c - 'a' + 10 : c - '0');
    if (v != scp::kStar) max_sym = std::max(max_sym, v);
    symbols.push_back(v);
  }
  return scp::Subcube(q ? q : max_sym + 1, std::move(symbols));
}

inline scp::SubcubeCollection coll(std::initializer_list<std::string_view> words, int q = 0) {
  int max_sym = 1;
  std::vector<scp::Subcube> members;
  for (auto w : words)
    for (char c : w)
      if (c != '*') max_sym = std::max(max_sym, c >= 'a' ? c - 'a' + 10 : c - '0');
  if (q == 0) q = max_sym + 1;
  int n = 0;
  for (auto w : words) {
    members.push_back(cube(w, q));
    n = members.back().n();
  }
  return scp::SubcubeCollection(q, n, std::move(members));
}

// Order-insensitive comparison.
inline std::multiset<std::string> as_set(const scp::SubcubeCollection& F) {
  std::multiset<std::string> out;
  for (const auto& s : F.members()) out.insert(s.to_string());
  return out;
}

inline std::multiset<std::string> as_set(std::initializer_list<std::string> words) {
  return {words.begin(), words.end()};
}

// All points of {0,...,q-1}^n covered by s, as mixed-radix indices.
inline std::vector<std::uint64_t> points_of(const scp::Subcube& s) {
  std::vector<std::uint64_t> pts{0};
  for (int i = 0; i < s.n(); ++i) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t p : pts) {
      if (s.is_star(i)) {
        for (int v = 0; v < s.q(); ++v)
          next.push_back(p * static_cast<std::uint64_t>(s.q()) + static_cast<std::uint64_t>(v));
      } else {
        next.push_back(p * static_cast<std::uint64_t>(s.q()) +
                       static_cast<std::uint64_t>(s.symbol(i)));
      }
    }
    pts = std::move(next);
  }
  return pts;
}

// Brute-force partition oracle by exhaustive point enumeration.
inline bool is_partition_oracle(const scp::SubcubeCollection& F) {
  if (F.size() == 0) return false;
  std::uint64_t total = 1;
  for (int i = 0; i < F.n(); ++i) total *= static_cast<std::uint64_t>(F.q());
  std::vector<int> cover(total, 0);
  for (const auto& s : F.members())
    for (std::uint64_t p : points_of(s)) ++cover[p];
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

// Uniformly random subcube partition: repeatedly covers the least uncovered
// point with a random admissible subcube (the point itself always qualifies).
inline scp::SubcubeCollection random_partition(int n, int q, std::mt19937_64& rng,
                                               double star_bias = 0.5) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(q);
  std::vector<char> covered(total, 0);
  std::vector<scp::Subcube> members;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t p = 0; p < total; ++p) {
    if (covered[p]) continue;
    // digits of p, coordinate 0 most significant
    std::vector<int> word(static_cast<std::size_t>(n));
    std::uint64_t rest = p;
    for (int i = n - 1; i >= 0; --i) {
      word[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
    }
    // try to star random zero coordinates while staying inside uncovered space
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    scp::Subcube current(q, word);
    for (int i : order) {
      if (word[static_cast<std::size_t>(i)] != 0) continue;
      if (unit(rng) > star_bias) continue;
      std::vector<int> trial = current.symbols();
      trial[static_cast<std::size_t>(i)] = scp::kStar;
      scp::Subcube candidate(q, trial);
      bool free = true;
      for (std::uint64_t pt : points_of(candidate))
        if (covered[pt]) free = false;
      if (free) current = candidate;
    }
    for (std::uint64_t pt : points_of(current)) covered[pt] = 1;
    members.push_back(std::move(current));
  }
  return scp::SubcubeCollection(q, n, std::move(members));
}

}  // namespace scptest

#endif
