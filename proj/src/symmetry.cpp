#include "scp/symmetry.hpp"

#include <algorithm>
#include <numeric>

namespace scp {

namespace {

bool is_permutation_of_range(const std::vector<int>& p, int k) {
  if (static_cast<int>(p.size()) != k) return false;
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  for (int v : p) {
    if (v < 0 || v >= k || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

// Transformed word under (coordinate permutation, per-source-coordinate
// symbol permutations).
std::vector<int> transform_word(const Subcube& s, const std::vector<int>& coord_perm,
                                const std::vector<const std::vector<int>*>& sym_perms) {
  std::vector<int> out(static_cast<std::size_t>(s.n()), kStar);
  for (int i = 0; i < s.n(); ++i) {
    int v = s.symbol(i);
    out[static_cast<std::size_t>(coord_perm[static_cast<std::size_t>(i)])] =
        v == kStar ? kStar : (*sym_perms[static_cast<std::size_t>(i)])[static_cast<std::size_t>(v)];
  }
  return out;
}

// Word comparison on raw symbol vectors, star greatest.
bool word_less(const std::vector<int>& a, const std::vector<int>& b, int q) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int x = a[i] == kStar ? q : a[i];
    int y = b[i] == kStar ? q : b[i];
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

CubeSymmetry identity_symmetry(int q, int n) {
  CubeSymmetry sym;
  sym.coord_perm.resize(static_cast<std::size_t>(n));
  std::iota(sym.coord_perm.begin(), sym.coord_perm.end(), 0);
  std::vector<int> id(static_cast<std::size_t>(q));
  std::iota(id.begin(), id.end(), 0);
  sym.symbol_perms.assign(static_cast<std::size_t>(n), id);
  return sym;
}

void validate(const CubeSymmetry& sym, int q, int n) {
  if (!is_permutation_of_range(sym.coord_perm, n))
    throw precondition_error("symmetry: coord_perm is not a permutation of [n]");
  if (static_cast<int>(sym.symbol_perms.size()) != n)
    throw precondition_error("symmetry: expected one symbol permutation per coordinate");
  for (const auto& p : sym.symbol_perms)
    if (!is_permutation_of_range(p, q))
      throw precondition_error("symmetry: symbol permutation is not a permutation of [q]");
}

Subcube apply(const CubeSymmetry& sym, const Subcube& s) {
  validate(sym, s.q(), s.n());
  std::vector<const std::vector<int>*> perms;
  perms.reserve(sym.symbol_perms.size());
  for (const auto& p : sym.symbol_perms) perms.push_back(&p);
  return Subcube(s.q(), transform_word(s, sym.coord_perm, perms));
}

SubcubeCollection apply(const CubeSymmetry& sym, const SubcubeCollection& F) {
  validate(sym, F.q(), F.n());
  std::vector<Subcube> out;
  out.reserve(F.size());
  for (const Subcube& s : F.members()) out.push_back(apply(sym, s));
  std::sort(out.begin(), out.end(), SubcubeWordLess{});
  return SubcubeCollection(F.q(), F.n(), std::move(out), F.partial());
}

SubcubeCollection canonical_form(const SubcubeCollection& F, std::uint64_t budget) {
  const int n = F.n();
  const int q = F.q();

  std::uint64_t group = 1;
  for (int i = 2; i <= n; ++i) {
    group *= static_cast<std::uint64_t>(i);
    if (group > budget) throw budget_error("canonical form: group size exceeds budget");
  }
  std::uint64_t qfact = 1;
  for (int i = 2; i <= q; ++i) qfact *= static_cast<std::uint64_t>(i);
  for (int i = 0; i < n; ++i) {
    if (group > budget / qfact) throw budget_error("canonical form: group size exceeds budget");
    group *= qfact;
  }

  // All q! symbol permutations, in lexicographic order.
  std::vector<std::vector<int>> all_sym;
  {
    std::vector<int> p(static_cast<std::size_t>(q));
    std::iota(p.begin(), p.end(), 0);
    do {
      all_sym.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<std::vector<int>> best;
  auto consider = [&](std::vector<std::vector<int>> words) {
    std::sort(words.begin(), words.end(),
              [&](const auto& a, const auto& b) { return word_less(a, b, q); });
    if (best.empty()) {
      best = std::move(words);
      return;
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (word_less(words[i], best[i], q)) {
        best = std::move(words);
        return;
      }
      if (word_less(best[i], words[i], q)) return;
    }
  };

  std::vector<int> coord_perm(static_cast<std::size_t>(n));
  std::iota(coord_perm.begin(), coord_perm.end(), 0);
  std::vector<std::size_t> sym_idx(static_cast<std::size_t>(n), 0);
  std::vector<const std::vector<int>*> perms(static_cast<std::size_t>(n));
  do {
    std::fill(sym_idx.begin(), sym_idx.end(), 0);
    while (true) {
      for (int i = 0; i < n; ++i) perms[static_cast<std::size_t>(i)] = &all_sym[sym_idx[static_cast<std::size_t>(i)]];
      std::vector<std::vector<int>> words;
      words.reserve(F.size());
      for (const Subcube& s : F.members()) words.push_back(transform_word(s, coord_perm, perms));
      consider(std::move(words));
      // odometer over the n symbol permutations
      int pos = n - 1;
      while (pos >= 0 && ++sym_idx[static_cast<std::size_t>(pos)] == all_sym.size()) {
        sym_idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  } while (std::next_permutation(coord_perm.begin(), coord_perm.end()));

  std::vector<Subcube> members;
  members.reserve(best.size());
  for (auto& w : best) members.emplace_back(q, std::move(w));
  return SubcubeCollection(q, n, std::move(members), F.partial());
}

bool are_isomorphic(const SubcubeCollection& F, const SubcubeCollection& G,
                    std::uint64_t budget) {
  if (F.q() != G.q() || F.n() != G.n() || F.size() != G.size()) return false;
  return canonical_form(F, budget) == canonical_form(G, budget);
}

}  // namespace scp
