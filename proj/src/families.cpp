#include "scp/families.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "scp/irreducibility.hpp"

namespace scp {

namespace {

SubcubeCollection sorted_collection(int q, int n, std::vector<Subcube> members,
                                    bool partial = false) {
  std::sort(members.begin(), members.end(), SubcubeWordLess{});
  return SubcubeCollection(q, n, std::move(members), partial);
}

Subcube word(std::string_view text) {
  std::vector<int> symbols;
  symbols.reserve(text.size());
  for (char c : text) symbols.push_back(c == '*' ? kStar : c - '0');
  return Subcube(2, std::move(symbols));
}

std::vector<Subcube> words(std::initializer_list<std::string_view> texts) {
  std::vector<Subcube> out;
  out.reserve(texts.size());
  for (auto t : texts) out.push_back(word(t));
  return out;
}

// 1*^(n-1), 00*^(n-2), 01*^(n-2): the reducible partner partition driving the
// size-(2n-1) merges.
SubcubeCollection merge_partner(int n) {
  std::vector<int> a(static_cast<std::size_t>(n), kStar), b = a, c = a;
  a[0] = 1;
  b[0] = 0;
  b[1] = 0;
  c[0] = 0;
  c[1] = 1;
  std::vector<Subcube> ms{Subcube(2, a), Subcube(2, b), Subcube(2, c)};
  return sorted_collection(2, n, std::move(ms));
}

SubcubeCollection rotate_left(const SubcubeCollection& F) {
  std::vector<Subcube> out;
  out.reserve(F.size());
  for (const Subcube& s : F.members()) out.push_back(rotated_left(s));
  return sorted_collection(F.q(), F.n(), std::move(out), F.partial());
}

SubcubeCollection flip_coordinate(const SubcubeCollection& F, int coordinate) {
  std::vector<Subcube> out;
  out.reserve(F.size());
  for (const Subcube& s : F.members()) out.push_back(flipped(s, coordinate));
  return sorted_collection(F.q(), F.n(), std::move(out), F.partial());
}

// Last two symbols as a Z4 element or adjacent pair; fails on **.
std::optional<GrayState> decode_tail(const Subcube& s) {
  int u = s.symbol(s.n() - 2);
  int v = s.symbol(s.n() - 1);
  if (u == kStar && v == kStar) return std::nullopt;
  if (u == 0 && v == 0) return GrayState::singleton(0);
  if (u == 0 && v == 1) return GrayState::singleton(1);
  if (u == 1 && v == 1) return GrayState::singleton(2);
  if (u == 1 && v == 0) return GrayState::singleton(3);
  if (u == 0) return GrayState::adjacent_pair(0, 1);  // 0*
  if (v == 1) return GrayState::adjacent_pair(1, 2);  // *1
  if (u == 1) return GrayState::adjacent_pair(2, 3);  // 1*
  return GrayState::adjacent_pair(3, 0);              // *0
}

GrayState shift(const GrayState& g, int delta) {
  int v = ((g.value + delta) % 4 + 4) % 4;
  return g.pair ? GrayState::adjacent_pair(v, (v + 1) % 4) : GrayState::singleton(v);
}

void require_binary_partition(const SubcubeCollection& F, const char* op) {
  if (F.q() != 2) throw precondition_error(std::string(op) + ": expects q=2");
  if (!is_partition(F)) throw precondition_error(std::string(op) + ": input is not a partition");
}

}  // namespace

SubcubeCollection merge(const SubcubeCollection& F0, const SubcubeCollection& F1) {
  if (F0.q() != F1.q() || F0.n() != F1.n()) throw precondition_error("merge: shape mismatch");
  require_binary_partition(F0, "merge");
  require_binary_partition(F1, "merge");
  std::vector<Subcube> out;
  for (const Subcube& x : F0.members())
    out.push_back(prefixed(F1.contains_member(x) ? kStar : 0, x));
  for (const Subcube& x : F1.members())
    if (!F0.contains_member(x)) out.push_back(prefixed(1, x));
  return sorted_collection(2, F0.n() + 1, std::move(out));
}

SubcubeCollection family_s(int n) {
  if (n < 3) throw precondition_error("family_s requires n >= 3");
  SubcubeCollection F = sorted_collection(2, 3, words({"000", "*01", "1*0", "01*", "111"}));
  for (int k = 3; k < n; ++k) F = merge(merge_partner(k), F);
  return F;
}

SubcubeCollection family_weight(int n, WeightVariant variant) {
  if (n < 3) throw precondition_error("family_weight requires n >= 3");
  SubcubeCollection A = sorted_collection(2, 3, words({"*00", "001", "01*", "110", "1*1"}));
  for (int k = 3; k < n; ++k) A = rotate_left(merge(A, merge_partner(k)));
  switch (variant) {
    case WeightVariant::A:
      return A;
    case WeightVariant::B:
      return flip_coordinate(A, 0);
    case WeightVariant::C:
      return flip_coordinate(flip_coordinate(A, 0), 2);
    case WeightVariant::D:
      return flip_coordinate(A, 2);
  }
  throw precondition_error("family_weight: unknown variant");
}

bool is_nfs_pair(const Subcube& s, const Subcube& t) {
  detail::require_same_shape(s, t, "nfs pair");
  if (s.q() != 2) return false;
  int i = -1, j = -1;
  for (int c = 0; c < s.n(); ++c) {
    if (s.symbol(c) == t.symbol(c)) continue;
    if (s.symbol(c) != kStar && t.symbol(c) != kStar) {
      if (i >= 0) return false;
      i = c;
    } else {
      if (j >= 0) return false;
      j = c;
    }
  }
  // positions i (conflicting bits) and j (t_j = *, s_j a bit)
  return i >= 0 && j >= 0 && t.symbol(j) == kStar && s.symbol(j) != kStar;
}

std::pair<Subcube, Subcube> nfs_flip(const Subcube& s, const Subcube& t) {
  if (!is_nfs_pair(s, t)) throw precondition_error("nfs_flip: not an nfs-pair");
  int i = -1, j = -1;
  for (int c = 0; c < s.n(); ++c) {
    if (s.symbol(c) == t.symbol(c)) continue;
    if (s.symbol(c) != kStar && t.symbol(c) != kStar)
      i = c;
    else
      j = c;
  }
  std::vector<int> sp = s.symbols(), tp = t.symbols();
  sp[static_cast<std::size_t>(i)] = kStar;
  // s'_j keeps s_j; t'_i keeps t_i; t'_j is the negation of s'_j
  tp[static_cast<std::size_t>(j)] = 1 - s.symbol(j);
  return {Subcube(2, std::move(sp)), Subcube(2, std::move(tp))};
}

SubcubeCollection twist(const SubcubeCollection& F, const Subcube& s, const Subcube& t, int b) {
  require_binary_partition(F, "twist");
  if (b != 0 && b != 1) throw precondition_error("twist: b must be 0 or 1");
  if (!F.contains_member(s) || !F.contains_member(t))
    throw precondition_error("twist: s and t must be members of F");
  auto [sp, tp] = nfs_flip(s, t);  // throws when (s, t) is not an nfs-pair
  std::vector<Subcube> out;
  for (const Subcube& x : F.members())
    if (!(x == s) && !(x == t)) out.push_back(prefixed(kStar, x));
  out.push_back(prefixed(b, s));
  out.push_back(prefixed(b, t));
  out.push_back(prefixed(1 - b, sp));
  out.push_back(prefixed(1 - b, tp));
  return sorted_collection(2, F.n() + 1, std::move(out));
}

SubcubeCollection cubic(int n) {
  if (n < 3 || n % 2 == 0) throw precondition_error("cubic requires odd n >= 3");
  const int m = (n - 1) / 2;
  std::vector<Subcube> out;
  out.push_back(Subcube(2, std::vector<int>(static_cast<std::size_t>(n), 0)));
  {
    std::vector<int> w(static_cast<std::size_t>(n), kStar);
    for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] = 0;
    w[static_cast<std::size_t>(m)] = 1;
    Subcube rot(2, w);
    for (int r = 0; r < n; ++r) {
      out.push_back(rot);
      rot = rotated_left(rot);
    }
  }
  for (int i = 0; i <= m - 1; ++i)
    for (int j = 0; i + j <= m - 1; ++j)
      for (int k = 0; j + k <= m - 1; ++k) {
        std::vector<int> w;
        w.reserve(static_cast<std::size_t>(n));
        auto run = [&](int count, int sym) { w.insert(w.end(), static_cast<std::size_t>(count), sym); };
        run(i, 0), run(1, 1), run(j, kStar);
        run(k, 0), run(1, 1), run(m - 1 - j - k, kStar);
        run(j, 0), run(1, 1), run(m - 1 - i - j, kStar);
        out.emplace_back(2, std::move(w));
      }
  return sorted_collection(2, n, std::move(out));
}

SubcubeCollection lagarias_shor(int n) {
  if (n < 1 || n % 2 == 0) throw precondition_error("lagarias_shor requires odd n >= 1");
  std::set<Subcube, SubcubeWordLess> members;
  // All concatenations of the blocks *1 (length 2) and 0 (length 1).
  std::vector<std::vector<int>> stack{{}};
  while (!stack.empty()) {
    std::vector<int> w = std::move(stack.back());
    stack.pop_back();
    if (static_cast<int>(w.size()) == n) {
      Subcube s(2, w);
      for (int r = 0; r < n; ++r) {
        members.insert(s);
        s = rotated_left(s);
      }
      continue;
    }
    {
      std::vector<int> zero = w;
      zero.push_back(0);
      stack.push_back(std::move(zero));
    }
    if (static_cast<int>(w.size()) + 2 <= n) {
      w.push_back(kStar);
      w.push_back(1);
      stack.push_back(std::move(w));
    }
  }
  members.insert(Subcube(2, std::vector<int>(static_cast<std::size_t>(n), 1)));
  return SubcubeCollection(2, n, std::vector<Subcube>(members.begin(), members.end()));
}

SubcubeCollection xor_extend(const SubcubeCollection& F, int k) {
  require_binary_partition(F, "xor_extend");
  if (k < 1) throw precondition_error("xor_extend requires k >= 1");
  if (F.size() == 2 && F.member(0).codimension() == 1 && F.member(1).codimension() == 1 &&
      !F.member(0).is_star(0) && !F.member(1).is_star(0))
    throw precondition_error("xor_extend: the two-halves partition is excluded");
  if (!test_irreducible(F).irreducible())
    throw precondition_error("xor_extend: input must be irreducible");
  SubcubeCollection G = F;
  for (int step = 0; step < k; ++step) {
    std::vector<Subcube> out;
    out.reserve(2 * G.size());
    for (const Subcube& s : G.members()) {
      Subcube tail = without_first(s);
      int b = s.symbol(0);
      if (b == kStar) {
        out.push_back(prefixed(kStar, prefixed(kStar, tail)));
      } else {
        out.push_back(prefixed(0, prefixed(b, tail)));
        out.push_back(prefixed(1, prefixed(1 - b, tail)));
      }
    }
    G = sorted_collection(2, G.n() + 1, std::move(out));
  }
  return G;
}

GrayState GrayState::singleton(int v) {
  if (v < 0 || v > 3) throw precondition_error("gray state: value out of Z4");
  return GrayState{v, false};
}

GrayState GrayState::adjacent_pair(int first, int second) {
  if (first < 0 || first > 3 || second < 0 || second > 3)
    throw precondition_error("gray state: value out of Z4");
  if ((first + 1) % 4 != second) {
    if ((second + 1) % 4 == first) std::swap(first, second);
    else throw precondition_error("gray state: pair elements must be adjacent mod 4");
  }
  return GrayState{first, true};
}

Subcube gray_enc(const GrayState& g) {
  static const char* singletons[4] = {"00", "01", "11", "10"};
  static const char* edges[4] = {"0*", "*1", "1*", "*0"};  // edge {v, v+1}
  return word(g.pair ? edges[g.value] : singletons[g.value]);
}

bool has_complementation_property(const SubcubeCollection& F) {
  if (F.q() != 2 || F.n() < 2)
    throw precondition_error("complementation property requires q=2 and n >= 2");
  for (const Subcube& s : F.members()) {
    if (s.is_star(s.n() - 2) && s.is_star(s.n() - 1)) return false;
    std::vector<int> comp = s.symbols();
    for (int i = s.n() - 2; i < s.n(); ++i)
      if (comp[static_cast<std::size_t>(i)] != kStar)
        comp[static_cast<std::size_t>(i)] = 1 - comp[static_cast<std::size_t>(i)];
    if (F.contains_member(Subcube(2, std::move(comp)))) return false;
  }
  return true;
}

SubcubeCollection perezhogin_step(const SubcubeCollection& F) {
  if (F.q() != 2 || F.n() < 2) throw precondition_error("perezhogin_step: requires q=2, n >= 2");
  if (!is_partition(F)) throw precondition_error("perezhogin_step: input is not a partition");
  const int n = F.n();
  std::vector<int> marked(static_cast<std::size_t>(n), 0);
  marked[static_cast<std::size_t>(n) - 1] = kStar;
  const Subcube zero_edge(2, marked);  // 0^(n-1)*
  if (!F.contains_member(zero_edge))
    throw precondition_error("perezhogin_step: input must contain 0^(n-1)*");
  if (!has_complementation_property(F))
    throw precondition_error("perezhogin_step: input lacks the complementation property");
  if (!test_irreducible(F).irreducible())
    throw precondition_error("perezhogin_step: input must be irreducible");

  std::vector<Subcube> out;
  out.reserve(4 * F.size());
  for (const Subcube& s : F.members()) {
    if (s == zero_edge) continue;
    GrayState phi = *decode_tail(s);  // never ** by the complementation property
    Subcube head = without_last(s, 2);
    for (int alpha = 0; alpha < 4; ++alpha)
      out.push_back(concat(concat(head, gray_enc(shift(phi, -alpha))), gray_enc(GrayState::singleton(alpha))));
  }
  Subcube zeros(2, std::vector<int>(static_cast<std::size_t>(n) - 2, 0));
  for (int alpha = 0; alpha < 4; ++alpha)
    out.push_back(concat(concat(zeros, gray_enc(GrayState::singleton((4 - alpha) % 4))),
                         gray_enc(GrayState::adjacent_pair(alpha, (alpha + 1) % 4))));
  return sorted_collection(2, n + 2, std::move(out));
}

SubcubeCollection maximal_family(int n) {
  if (n < 3) throw precondition_error("maximal_family requires n >= 3");
  if (n == 3) return sorted_collection(2, 3, words({"100", "*10", "1*1", "00*", "011"}));
  if (n == 4)
    return sorted_collection(
        2, 4, words({"0000", "0011", "1101", "1110", "*100", "*111", "0*01", "0*10", "10**"}));
  if (n == 6) {
    std::vector<Subcube> out;
    for (int bits = 0; bits < 64; ++bits) {
      int a = bits >> 5 & 1, b = bits >> 4 & 1, c = bits >> 3 & 1;
      int d = bits >> 2 & 1, e = bits >> 1 & 1, f = bits & 1;
      if ((a ^ b) == (c ^ f) && (a ^ b) == 1 - (d ^ e))
        out.push_back(Subcube(2, {a, b, c, d, e, f}));
    }
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; b <= 1; ++b) {
        out.push_back(Subcube(2, {kStar, a, b, a, 1 - b, 1 - a}));
        out.push_back(Subcube(2, {a, kStar, 1 - a, b, 1 - a, b}));
        out.push_back(Subcube(2, {a, b, kStar, 1 - b, 1 - a, b}));
        out.push_back(Subcube(2, {a, b, 1 - a, kStar, a, b}));
        out.push_back(Subcube(2, {a, b, a, 1 - b, kStar, 1 - b}));
        out.push_back(Subcube(2, {a, b, a, b, a, kStar}));
      }
    return sorted_collection(2, 6, std::move(out));
  }
  return perezhogin_step(maximal_family(n - 2));
}

SubcubeCollection special_perfect_matching(int n) {
  if (n < 4 || n == 5)
    throw precondition_error("special_perfect_matching requires n >= 4, n != 5");
  if (n == 4)
    return sorted_collection(
        2, 4, words({"0*10", "01*1", "000*", "1*01", "10*0", "111*", "*100", "*011"}));
  if (n == 7) {
    SubcubeCollection F0 = maximal_family(6);
    SubcubeCollection F1 = flip_coordinate(flip_coordinate(F0, 0), 1);
    return merge(F0, F1);
  }
  return perezhogin_step(special_perfect_matching(n - 2));
}

SubcubeCollection homogeneous_6_4() {
  return sorted_collection(2, 6, words({"0000**", "001**1", "01*01*", "01**00", "0*01*1",
                                        "0**110", "*010*0", "*0*100", "1101**", "111**0",
                                        "10*11*", "10**01", "1*00*0", "1**011", "*111*1",
                                        "*1*001"}));
}

SubcubeCollection merge_stars(const SubcubeCollection& F) {
  require_binary_partition(F, "merge_stars");
  std::vector<Subcube> out;
  for (const Subcube& s : F.members()) {
    Subcube head = without_last(s, 1);
    int b = s.symbol(s.n() - 1);
    if (b == kStar) {
      out.push_back(suffixed(suffixed(prefixed(kStar, head), kStar), kStar));
    } else {
      out.push_back(suffixed(suffixed(prefixed(0, head), b), kStar));
      out.push_back(suffixed(suffixed(prefixed(1, head), kStar), b));
    }
  }
  return sorted_collection(2, F.n() + 2, std::move(out));
}

SubcubeCollection min_dim_family(int n) {
  if (n < 3) throw precondition_error("min_dim_family requires n >= 3");
  if (n == 4) return family_s(4);
  SubcubeCollection F =
      n % 2 == 1 ? family_s(3)
                 : sorted_collection(2, 6, words({"0*0*1*", "00**0*", "001*1*", "010*0*",
                                                  "0110**", "1**0*1", "10***0", "10*1*1",
                                                  "11*0*0", "1101**", "*111**"}));
  while (F.n() < n) F = merge_stars(F);
  return F;
}

SubcubeCollection homogeneous_pump(const SubcubeCollection& F) {
  StructureFlags flags = structure_flags(F);
  if (!flags.homogeneous_codim || *flags.homogeneous_codim < 2)
    throw precondition_error("homogeneous_pump: input must be (n,k)-homogeneous with k >= 2");
  require_binary_partition(F, "homogeneous_pump");
  if (!test_irreducible(F).irreducible())
    throw precondition_error("homogeneous_pump: input must be irreducible");
  const int rounds = F.n();
  SubcubeCollection G = F;
  for (int r = 0; r < rounds; ++r) {
    std::vector<Subcube> out;
    for (const Subcube& s : G.members()) {
      Subcube head = without_last(s, 1);
      int b = s.symbol(s.n() - 1);
      if (b == kStar) {
        out.push_back(prefixed(kStar, prefixed(kStar, prefixed(kStar, head))));
      } else {
        out.push_back(prefixed(b, prefixed(kStar, prefixed(0, head))));
        out.push_back(prefixed(kStar, prefixed(b, prefixed(1, head))));
      }
    }
    G = sorted_collection(2, G.n() + 2, std::move(out));
  }
  return G;
}

}  // namespace scp
