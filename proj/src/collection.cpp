#include "scp/collection.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace scp {

SubcubeCollection::SubcubeCollection(int q, int n, std::vector<Subcube> members, bool partial)
    : q_(q), n_(n), partial_(partial), members_(std::move(members)) {
  if (q_ < kMinAlphabet || q_ > kMaxAlphabet)
    throw precondition_error("alphabet size must be in [2, 36]");
  if (n_ < 1 || n_ > kMaxLength) throw precondition_error("length must be in [1, 64]");
  if (members_.empty() && !partial_)
    throw precondition_error("empty collection must be flagged as partial");
  for (const Subcube& s : members_)
    if (s.q() != q_ || s.n() != n_)
      throw precondition_error("member shape mismatch: expected q=" + std::to_string(q_) +
                               " n=" + std::to_string(n_) + ", got " + s.to_string());
}

bool SubcubeCollection::contains_member(const Subcube& s) const {
  return std::find(members_.begin(), members_.end(), s) != members_.end();
}

SubcubeCollection SubcubeCollection::sorted() const {
  std::vector<Subcube> ms = members_;
  std::sort(ms.begin(), ms.end(), SubcubeWordLess{});
  return SubcubeCollection(q_, n_, std::move(ms), partial_);
}

bool measure_sums_to(std::span<const int> dims, int q, int target_dim) {
  std::vector<std::uint64_t> digit(static_cast<std::size_t>(target_dim) + 1, 0);
  for (int d : dims) {
    if (d > target_dim) return false;
    ++digit[static_cast<std::size_t>(d)];
  }
  std::uint64_t uq = static_cast<std::uint64_t>(q);
  for (int d = 0; d < target_dim; ++d) {
    std::uint64_t& c = digit[static_cast<std::size_t>(d)];
    digit[static_cast<std::size_t>(d) + 1] += c / uq;
    c %= uq;
    if (c != 0) return false;
  }
  return digit[static_cast<std::size_t>(target_dim)] == 1;
}

bool is_partition(const SubcubeCollection& F) {
  if (F.size() == 0) return false;
  const auto& ms = F.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!conflicts(ms[i], ms[j])) return false;
  std::vector<int> dims;
  dims.reserve(ms.size());
  for (const Subcube& s : ms) dims.push_back(s.dimension());
  return measure_sums_to(dims, F.q(), F.n());
}

bool is_tight(const SubcubeCollection& F) {
  std::uint64_t mentioned = 0;
  for (const Subcube& s : F.members()) mentioned |= s.fixed_mask();
  std::uint64_t all = (F.n() == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << F.n()) - 1);
  return mentioned == all;
}

std::vector<std::uint64_t> WeightVector::suffix_sums() const {
  std::vector<std::uint64_t> out(counts.size() + 1, 0);
  for (std::size_t h = counts.size(); h-- > 0;) out[h] = out[h + 1] + counts[h];
  out.pop_back();
  return out;
}

WeightVector weight_vector(const SubcubeCollection& F) {
  if (F.q() != 2) throw precondition_error("weight vector is defined only for q=2");
  WeightVector w;
  w.counts.assign(static_cast<std::size_t>(F.n()) + 1, 0);
  for (const Subcube& s : F.members()) ++w.counts[static_cast<std::size_t>(weight(s))];
  return w;
}

bool majorizes(const WeightVector& a, const WeightVector& b) {
  if (a.counts.size() != b.counts.size())
    throw precondition_error("majorizes: weight vector length mismatch");
  auto sa = a.suffix_sums();
  auto sb = b.suffix_sums();
  for (std::size_t h = 0; h < sa.size(); ++h)
    if (sa[h] < sb[h]) return false;
  return true;
}

std::uint64_t phi_sum(const SubcubeCollection& F, int q) {
  if (F.q() != 2) throw precondition_error("phi_sum expects a binary collection");
  if (q < 2) throw precondition_error("phi_sum: q must be at least 2");
  std::uint64_t total = 0;
  for (const Subcube& s : F.members()) {
    std::uint64_t term = 1;
    for (int h = weight(s); h > 0; --h) {
      std::uint64_t next = term * static_cast<std::uint64_t>(q - 1);
      if (q > 2 && next / static_cast<std::uint64_t>(q - 1) != term)
        throw std::overflow_error("phi_sum overflows 64 bits");
      term = next;
    }
    if (total > std::numeric_limits<std::uint64_t>::max() - term)
      throw std::overflow_error("phi_sum overflows 64 bits");
    total += term;
  }
  return total;
}

DimStats dim_stats(const SubcubeCollection& F) {
  if (F.size() == 0) throw precondition_error("dim_stats: empty collection");
  DimStats out;
  out.delta = F.n() + 1;
  out.Delta = F.n() + 1;
  for (const Subcube& s : F.members()) {
    int d = s.dimension();
    out.delta = std::min(out.delta, d);
    out.Delta = std::min(out.Delta, s.codimension());
    auto& slot = s.is_star(s.n() - 1) ? out.delta_star : out.delta_b;
    if (!slot || *slot > d) slot = d;
  }
  return out;
}

StructureFlags structure_flags(const SubcubeCollection& F) {
  StructureFlags out;
  out.mentions_per_coordinate.assign(static_cast<std::size_t>(F.n()), 0);
  std::vector<std::uint64_t> value_counts(static_cast<std::size_t>(F.n() * F.q()), 0);
  for (const Subcube& s : F.members())
    for (int i = 0; i < F.n(); ++i)
      if (!s.is_star(i)) {
        ++out.mentions_per_coordinate[static_cast<std::size_t>(i)];
        ++value_counts[static_cast<std::size_t>(i * F.q() + s.symbol(i))];
      }
  out.regular = F.size() > 0;
  for (std::uint64_t c : value_counts)
    if (c < 2) out.regular = false;
  if (F.size() > 0 && is_tight(F)) {
    int k = F.member(0).codimension();
    bool uniform = true;
    for (const Subcube& s : F.members())
      if (s.codimension() != k) uniform = false;
    if (uniform) out.homogeneous_codim = k;
  }
  return out;
}

}  // namespace scp
