#include "scp/affine.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <sstream>

#include "scp/families.hpp"
#include "scp/io.hpp"

namespace scp {

namespace gf2 {

std::uint64_t pack_point(const std::vector<int>& coords) {
  std::uint64_t v = 0;
  int n = static_cast<int>(coords.size());
  for (int i = 0; i < n; ++i)
    if (coords[static_cast<std::size_t>(i)]) v |= std::uint64_t{1} << (n - 1 - i);
  return v;
}

std::vector<int> unpack_point(std::uint64_t v, int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = static_cast<int>(v >> (n - 1 - i) & 1);
  return out;
}

int echelonize(std::vector<std::uint64_t>& rows) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t row : rows) {
    for (std::uint64_t b : out) row = std::min(row, row ^ b);
    if (row == 0) continue;
    for (std::uint64_t& b : out) b = std::min(b, b ^ row);
    out.push_back(row);
  }
  std::sort(out.rbegin(), out.rend());
  rows = std::move(out);
  return static_cast<int>(rows.size());
}

std::uint64_t reduce(std::uint64_t x, const std::vector<std::uint64_t>& rows) {
  for (std::uint64_t b : rows) x = std::min(x, x ^ b);
  return x;
}

bool in_span(std::uint64_t x, const std::vector<std::uint64_t>& rows) {
  return reduce(x, rows) == 0;
}

std::vector<std::uint64_t> intersect_spans(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b) {
  // Rows (v | v) for v in a and (w | 0) for w in b; after eliminating the
  // left block, rows with zero left half carry the intersection on the right.
  struct Wide {
    std::uint64_t left, right;
  };
  std::vector<Wide> rows;
  rows.reserve(a.size() + b.size());
  for (std::uint64_t v : a) rows.push_back({v, v});
  for (std::uint64_t w : b) rows.push_back({w, 0});
  std::vector<Wide> ech;
  for (Wide r : rows) {
    for (const Wide& e : ech)
      if (e.left != 0 && (r.left ^ e.left) < r.left) {
        r.left ^= e.left;
        r.right ^= e.right;
      }
    if (r.left != 0) ech.push_back(r);
  }
  std::vector<std::uint64_t> out;
  // Re-run the eliminated-from-the-left rows: everything in span(a) + span(b)
  // with zero left half.
  for (Wide r : rows) {
    for (const Wide& e : ech)
      if (e.left != 0 && (r.left ^ e.left) < r.left) {
        r.left ^= e.left;
        r.right ^= e.right;
      }
    if (r.left == 0 && r.right != 0) out.push_back(r.right);
  }
  echelonize(out);
  return out;
}

}  // namespace gf2

AffineSubspace::AffineSubspace(int n, std::uint64_t rep, std::vector<std::uint64_t> basis)
    : n_(n), rep_(rep), basis_(std::move(basis)) {
  if (n_ < 1 || n_ > kMaxLength) throw precondition_error("affine subspace: length out of [1, 64]");
  std::uint64_t all = (n_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
  if ((rep_ & ~all) != 0) throw precondition_error("affine subspace: representative out of range");
  for (std::uint64_t b : basis_)
    if ((b & ~all) != 0) throw precondition_error("affine subspace: basis vector out of range");
  gf2::echelonize(basis_);
  rep_ = gf2::reduce(rep_, basis_);
}

bool AffineSubspace::contains_point(std::uint64_t p) const {
  return gf2::reduce(p ^ rep_, basis_) == 0;
}

AffineSubspace affine_from_subcube(const Subcube& s) {
  if (s.q() != 2) throw precondition_error("affine_from_subcube: requires q=2");
  const int n = s.n();
  std::uint64_t rep = 0;
  std::vector<std::uint64_t> basis;
  for (int i = 0; i < n; ++i) {
    if (s.is_star(i))
      basis.push_back(std::uint64_t{1} << (n - 1 - i));
    else if (s.symbol(i) == 1)
      rep |= std::uint64_t{1} << (n - 1 - i);
  }
  return AffineSubspace(n, rep, std::move(basis));
}

bool affine_intersects(const AffineSubspace& U, const AffineSubspace& W) {
  if (U.n() != W.n()) throw precondition_error("affine_intersects: shape mismatch");
  std::vector<std::uint64_t> both = U.basis();
  both.insert(both.end(), W.basis().begin(), W.basis().end());
  gf2::echelonize(both);
  return gf2::in_span(U.rep() ^ W.rep(), both);
}

AffineSubspace affine_join(const AffineSubspace& U, const AffineSubspace& W) {
  if (U.n() != W.n()) throw precondition_error("affine_join: shape mismatch");
  std::vector<std::uint64_t> rows = U.basis();
  rows.insert(rows.end(), W.basis().begin(), W.basis().end());
  rows.push_back(U.rep() ^ W.rep());
  return AffineSubspace(U.n(), U.rep(), std::move(rows));
}

AffinePartition embed(const SubcubeCollection& F) {
  AffinePartition out;
  out.n = F.n();
  out.members.reserve(F.size());
  for (const Subcube& s : F.members()) out.members.push_back(affine_from_subcube(s));
  return out;
}

bool avsp_is_partition(const AffinePartition& F) {
  if (F.members.empty()) return false;
  for (std::size_t i = 0; i < F.members.size(); ++i) {
    if (F.members[i].n() != F.n) return false;
    for (std::size_t j = i + 1; j < F.members.size(); ++j)
      if (affine_intersects(F.members[i], F.members[j])) return false;
  }
  std::vector<int> dims;
  dims.reserve(F.members.size());
  for (const AffineSubspace& u : F.members) dims.push_back(u.dimension());
  return measure_sums_to(dims, 2, F.n);
}

bool avsp_is_tight(const AffinePartition& F) {
  if (F.members.empty()) return false;
  std::vector<std::uint64_t> common = F.members.front().basis();
  for (std::size_t i = 1; i < F.members.size() && !common.empty(); ++i)
    common = gf2::intersect_spans(common, F.members[i].basis());
  return common.empty();
}

AffineVerdict avsp_test_irreducible(const AffinePartition& F) {
  assert(F.members.size() < 2 || avsp_is_partition(F));
  return test_irreducible_generic(std::span<const AffineSubspace>(F.members), AffineOps{});
}

namespace {

// Star-pattern classes in first-appearance order.
struct PatternClass {
  std::uint64_t pattern;
  std::vector<std::size_t> indices;
};

std::vector<PatternClass> pattern_classes(const SubcubeCollection& F) {
  std::vector<PatternClass> out;
  std::map<std::uint64_t, std::size_t> seen;
  for (std::size_t i = 0; i < F.size(); ++i) {
    std::uint64_t p = F.member(i).star_pattern_mask();
    auto [it, fresh] = seen.emplace(p, out.size());
    if (fresh) out.push_back({p, {}});
    out[it->second].indices.push_back(i);
  }
  return out;
}

std::string pattern_name(std::uint64_t pattern, int n) {
  std::string out = "{";
  for (int i = 0; i < n; ++i)
    if (pattern >> i & 1) {
      if (out.size() > 1) out += ",";
      out += std::to_string(i + 1);
    }
  return out + "}";
}

// Union of the given members as an affine subspace; nullopt when the union
// does not fill the join (decided by the exact measure identity).
std::optional<AffineSubspace> affine_union(const SubcubeCollection& F,
                                           const std::vector<std::size_t>& indices) {
  std::optional<AffineSubspace> j;
  std::vector<int> dims;
  for (std::size_t i : indices) {
    AffineSubspace u = affine_from_subcube(F.member(i));
    dims.push_back(u.dimension());
    j = j ? affine_join(*j, u) : u;
  }
  if (!measure_sums_to(dims, 2, j->dimension())) return std::nullopt;
  return j;
}

}  // namespace

CompressResult compress(const SubcubeCollection& F) {
  if (F.q() != 2) throw precondition_error("compress: requires q=2");
  if (F.size() == 0) throw precondition_error("compress: empty collection");
  CompressResult out;
  out.partition.n = F.n();
  std::uint64_t pattern_meet = ~std::uint64_t{0};
  for (const PatternClass& cls : pattern_classes(F)) {
    std::optional<AffineSubspace> u = affine_union(F, cls.indices);
    if (!u)
      throw precondition_error("compress: the union of pattern class " +
                               pattern_name(cls.pattern, F.n()) + " is not an affine subspace");
    out.partition.members.push_back(std::move(*u));
    std::optional<Subcube> join_s;
    for (std::size_t i : cls.indices)
      join_s = join_s ? join(*join_s, F.member(i)) : F.member(i);
    pattern_meet &= join_s->star_pattern_mask();
  }
  out.tight = pattern_meet == 0;
  return out;
}

AffinePartition compress_with_grouping(const SubcubeCollection& F,
                                       const std::vector<std::vector<std::size_t>>& groups) {
  if (F.q() != 2) throw precondition_error("compress_with_grouping: requires q=2");
  std::vector<char> used(F.size(), 0);
  for (const auto& g : groups) {
    if (g.empty()) throw precondition_error("compress_with_grouping: empty group");
    for (std::size_t i : g) {
      if (i >= F.size()) throw precondition_error("compress_with_grouping: index out of range");
      if (used[i]) throw precondition_error("compress_with_grouping: member grouped twice");
      used[i] = 1;
      if (F.member(i).star_pattern_mask() != F.member(g.front()).star_pattern_mask())
        throw precondition_error("compress_with_grouping: group spans several pattern classes");
    }
  }
  if (std::find(used.begin(), used.end(), 0) != used.end())
    throw precondition_error("compress_with_grouping: some member is not grouped");

  AffinePartition out;
  out.n = F.n();
  std::map<std::uint64_t, std::vector<AffineSubspace>> per_class;
  for (const auto& g : groups) {
    std::optional<AffineSubspace> u = affine_union(F, g);
    if (!u)
      throw precondition_error("compress_with_grouping: a group's union in class " +
                               pattern_name(F.member(g.front()).star_pattern_mask(), F.n()) +
                               " is not an affine subspace");
    per_class[F.member(g.front()).star_pattern_mask()].push_back(*u);
    out.members.push_back(std::move(*u));
  }
  for (const auto& [pattern, subs] : per_class) {
    if (find_partial_witness(std::span<const AffineSubspace>(subs), AffineOps{}))
      throw precondition_error("compress_with_grouping: the grouped class " +
                               pattern_name(pattern, F.n()) + " is reducible");
  }
  return out;
}

namespace {

SubcubeCollection rotate_left_all(const SubcubeCollection& F) {
  std::vector<Subcube> out;
  out.reserve(F.size());
  for (const Subcube& s : F.members()) out.push_back(rotated_left(s));
  std::sort(out.begin(), out.end(), SubcubeWordLess{});
  return SubcubeCollection(F.q(), F.n(), std::move(out));
}

SubcubeCollection pad_stars(const SubcubeCollection& F, int count) {
  std::vector<Subcube> out;
  out.reserve(F.size());
  for (const Subcube& s : F.members()) {
    Subcube t = s;
    for (int i = 0; i < count; ++i) t = suffixed(t, kStar);
    out.push_back(std::move(t));
  }
  return SubcubeCollection(F.q(), F.n() + count, std::move(out));
}

SubcubeCollection prefix_star(const SubcubeCollection& F) {
  std::vector<Subcube> out;
  out.reserve(F.size());
  for (const Subcube& s : F.members()) out.push_back(prefixed(kStar, s));
  return SubcubeCollection(F.q(), F.n() + 1, std::move(out));
}

bool tightness_criterion(const SubcubeCollection& F) {
  std::uint64_t meet = ~std::uint64_t{0};
  for (const PatternClass& cls : pattern_classes(F)) {
    std::optional<Subcube> j;
    for (std::size_t i : cls.indices) j = j ? join(*j, F.member(i)) : F.member(i);
    meet &= j->star_pattern_mask();
  }
  return meet == 0;
}

}  // namespace

AffinePartition avsp_inductive(const SubcubeCollection& F, const SubcubeCollection& H, int k) {
  if (F.q() != 2 || H.q() != 2 || F.n() != H.n() || F.n() < 2)
    throw precondition_error("avsp_inductive: inputs must be binary of equal length >= 2");
  if (k < 0) throw precondition_error("avsp_inductive: k must be nonnegative");
  // (i) the star-first-coordinate members agree
  std::vector<Subcube> fstar, hstar;
  for (const Subcube& s : F.members())
    if (s.is_star(0)) fstar.push_back(s);
  for (const Subcube& s : H.members())
    if (s.is_star(0)) hstar.push_back(s);
  std::sort(fstar.begin(), fstar.end(), SubcubeWordLess{});
  std::sort(hstar.begin(), hstar.end(), SubcubeWordLess{});
  if (fstar != hstar)
    throw precondition_error("avsp_inductive: hypothesis (i) fails: the members with a star "
                             "first coordinate differ");
  if (fstar.empty())
    throw precondition_error("avsp_inductive: no member has a star first coordinate");
  // (ii) every pattern class has at most two members
  for (const SubcubeCollection* P : {&F, &H})
    for (const PatternClass& cls : pattern_classes(*P))
      if (cls.indices.size() > 2)
        throw precondition_error("avsp_inductive: hypothesis (ii) fails: pattern class " +
                                 pattern_name(cls.pattern, P->n()) + " has more than two members");
  // (iii) the tightness criterion holds for H
  if (!tightness_criterion(H))
    throw precondition_error("avsp_inductive: hypothesis (iii) fails: the tightness criterion "
                             "does not hold for H");

  SubcubeCollection Fk = rotate_left_all(H);
  for (int step = 0; step < k; ++step) {
    SubcubeCollection G = merge(prefix_star(Fk), pad_stars(F, 2 * step + 1));
    Fk = rotate_left_all(rotate_left_all(G));
#ifndef NDEBUG
    assert(is_partition(Fk));
    for (const PatternClass& cls : pattern_classes(Fk)) assert(cls.indices.size() <= 2);
    assert(tightness_criterion(Fk));
#endif
  }
  return compress(Fk).partition;
}

AffinePartition avsp_family(int n) {
  if (n < 3) throw precondition_error("avsp_family requires n >= 3");
  if (n == 4) return compress(family_s(4)).partition;
  if (n % 2 == 1) {
    SubcubeCollection s3 = family_s(3);
    return avsp_inductive(s3, s3, (n - 3) / 2);
  }
  SubcubeCollection t6 = parse_scp(
      "*0110*\n*1101*\n*001*1\n*010*0\n*00**0\n*0*0*1\n**111*\n011*0*\n110*1*\n010***\n11**0*\n");
  return avsp_inductive(t6, t6, (n - 6) / 2);
}

AffinePartition parse_avsp(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  int n = 0;
  bool have_header = false;
  AffinePartition out;
  auto parse_bits = [&](std::string_view bits) -> std::uint64_t {
    if (static_cast<int>(bits.size()) != n)
      throw parse_error("line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                        " bits, got " + std::to_string(bits.size()));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
      char c = bits[static_cast<std::size_t>(i)];
      if (c != '0' && c != '1')
        throw parse_error("line " + std::to_string(lineno) + ": invalid bit '" +
                          std::string(1, c) + "'");
      if (c == '1') v |= std::uint64_t{1} << (n - 1 - i);
    }
    return v;
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line{raw};
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
    line = line.substr(start);
    if (line.empty()) continue;
    if (!have_header) {
      std::istringstream hs{line};
      std::string kw, na;
      hs >> kw >> na;
      if (kw != "avsp" || na.substr(0, 2) != "n=")
        throw parse_error("line " + std::to_string(lineno) + ": expected header `avsp n=<n>`");
      try {
        n = std::stoi(na.substr(2));
      } catch (...) {
        throw parse_error("line " + std::to_string(lineno) + ": bad length in header");
      }
      if (n < 1 || n > kMaxLength)
        throw parse_error("line " + std::to_string(lineno) + ": n out of range [1, 64]");
      have_header = true;
      out.n = n;
      continue;
    }
    // rep=<bits>; basis=<bits>,<bits>,...
    std::string flat;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) flat.push_back(c);
    auto semi = flat.find(';');
    if (flat.substr(0, 4) != "rep=" || semi == std::string::npos ||
        flat.substr(semi + 1, 6) != "basis=")
      throw parse_error("line " + std::to_string(lineno) +
                        ": expected `rep=<bits>; basis=<bits>,...`");
    std::uint64_t rep = parse_bits(std::string_view(flat).substr(4, semi - 4));
    std::vector<std::uint64_t> basis;
    std::string_view rest = std::string_view(flat).substr(semi + 7);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view tok = rest.substr(0, comma);
      if (!tok.empty()) basis.push_back(parse_bits(tok));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    out.members.emplace_back(n, rep, std::move(basis));
  }
  if (!have_header) throw parse_error("missing `avsp n=<n>` header");
  return out;
}

std::string format_avsp(const AffinePartition& F) {
  std::string out = "avsp n=" + std::to_string(F.n) + "\n";
  auto bits = [&](std::uint64_t v) {
    std::string s;
    for (int i = 0; i < F.n; ++i) s.push_back(v >> (F.n - 1 - i) & 1 ? '1' : '0');
    return s;
  };
  for (const AffineSubspace& u : F.members) {
    out += "rep=" + bits(u.rep()) + "; basis=";
    for (std::size_t i = 0; i < u.basis().size(); ++i) {
      if (i) out += ",";
      out += bits(u.basis()[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace scp
