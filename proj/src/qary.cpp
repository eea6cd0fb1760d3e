#include "scp/qary.hpp"

#include <algorithm>

#include "scp/families.hpp"

namespace scp {

ExpansionMap ExpansionMap::thresholds(int n, int q) {
  ExpansionMap out;
  out.maps.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(q), 1));
  for (auto& m : out.maps) m[0] = 0;
  return out;
}

void validate(const ExpansionMap& phis, int n, int q) {
  if (phis.n() != n) throw precondition_error("expansion map: expected one map per coordinate");
  for (const auto& m : phis.maps) {
    if (static_cast<int>(m.size()) != q)
      throw precondition_error("expansion map: each map must cover the whole alphabet");
    bool hit0 = false, hit1 = false;
    for (int v : m) {
      if (v == 0) hit0 = true;
      else if (v == 1) hit1 = true;
      else throw precondition_error("expansion map: values must be 0 or 1");
    }
    if (!hit0 || !hit1) throw precondition_error("expansion map: every map must be surjective");
  }
}

SubcubeCollection expand(const SubcubeCollection& F, const ExpansionMap& phis) {
  if (F.q() != 2) throw precondition_error("expand: input must be binary");
  const int q = phis.q();
  validate(phis, F.n(), q);
  std::vector<Subcube> out;
  for (const Subcube& t : F.members()) {
    // Odometer over the preimages of the fixed coordinates.
    std::vector<std::vector<int>> choices(static_cast<std::size_t>(F.n()));
    for (int i = 0; i < F.n(); ++i) {
      if (t.is_star(i)) {
        choices[static_cast<std::size_t>(i)] = {kStar};
      } else {
        for (int v = 0; v < q; ++v)
          if (phis.maps[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] == t.symbol(i))
            choices[static_cast<std::size_t>(i)].push_back(v);
      }
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(F.n()), 0);
    while (true) {
      std::vector<int> word(static_cast<std::size_t>(F.n()));
      for (int i = 0; i < F.n(); ++i)
        word[static_cast<std::size_t>(i)] = choices[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
      out.emplace_back(q, std::move(word));
      int pos = F.n() - 1;
      while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == choices[static_cast<std::size_t>(pos)].size()) {
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  std::sort(out.begin(), out.end(), SubcubeWordLess{});
  return SubcubeCollection(q, F.n(), std::move(out));
}

SubcubeCollection minimal_qary(int n, int q) {
  if (n < 3) throw precondition_error("minimal_qary requires n >= 3");
  if (q < 2) throw precondition_error("minimal_qary requires q >= 2");
  return expand(family_weight(n, WeightVariant::A), ExpansionMap::thresholds(n, q));
}

SubcubeCollection staircase_cover(int n, int q) {
  if (n < 1) throw precondition_error("staircase_cover requires n >= 1");
  if (q < 2) throw precondition_error("staircase_cover requires q >= 2");
  std::vector<Subcube> out;
  for (int i = 0; i < n; ++i)
    for (int b = 1; b < q; ++b) {
      std::vector<int> w(static_cast<std::size_t>(n), kStar);
      for (int j = 0; j < i; ++j) w[static_cast<std::size_t>(j)] = 0;
      w[static_cast<std::size_t>(i)] = b;
      out.emplace_back(q, std::move(w));
    }
  out.emplace_back(q, std::vector<int>(static_cast<std::size_t>(n), 0));
  std::sort(out.begin(), out.end(), SubcubeWordLess{});
  return SubcubeCollection(q, n, std::move(out));
}

CoverFlags cover_flags(const SubcubeCollection& F, std::uint64_t point_budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < F.n(); ++i) {
    total *= static_cast<std::uint64_t>(F.q());
    if (total > point_budget)
      throw budget_error("cover_flags: q^n exceeds the point-enumeration budget");
  }
  // 0 / 1 / 2-or-more covers per point.
  std::vector<std::uint8_t> count(total, 0);
  auto for_each_point = [&](const Subcube& s, auto&& fn) {
    std::vector<std::uint64_t> place(static_cast<std::size_t>(F.n()));
    std::uint64_t weight_ = 1;
    for (int i = F.n() - 1; i >= 0; --i) {
      place[static_cast<std::size_t>(i)] = weight_;
      weight_ *= static_cast<std::uint64_t>(F.q());
    }
    std::uint64_t base = 0;
    std::vector<int> stars;
    for (int i = 0; i < F.n(); ++i) {
      if (s.is_star(i)) stars.push_back(i);
      else base += place[static_cast<std::size_t>(i)] * static_cast<std::uint64_t>(s.symbol(i));
    }
    std::vector<int> digit(stars.size(), 0);
    while (true) {
      std::uint64_t p = base;
      for (std::size_t k = 0; k < stars.size(); ++k)
        p += place[static_cast<std::size_t>(stars[k])] * static_cast<std::uint64_t>(digit[k]);
      fn(p);
      std::size_t pos = stars.size();
      while (pos > 0 && ++digit[pos - 1] == F.q()) digit[--pos] = 0;
      if (pos == 0) break;
    }
  };
  for (const Subcube& s : F.members())
    for_each_point(s, [&](std::uint64_t p) {
      if (count[p] < 2) ++count[p];
    });
  CoverFlags out;
  out.is_cover = std::all_of(count.begin(), count.end(), [](std::uint8_t c) { return c >= 1; });
  if (!out.is_cover) return out;
  out.is_minimal_cover = true;
  for (const Subcube& s : F.members()) {
    bool private_point = false;
    for_each_point(s, [&](std::uint64_t p) {
      if (count[p] == 1) private_point = true;
    });
    if (!private_point) {
      out.is_minimal_cover = false;
      break;
    }
  }
  return out;
}

}  // namespace scp
