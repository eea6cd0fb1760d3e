#include "scp/subcube.hpp"

#include <algorithm>
#include <bit>

namespace scp {

Subcube::Subcube(int q, std::vector<int> symbols)
    : q_(q), n_(static_cast<int>(symbols.size())), fixed_(0), symbols_(std::move(symbols)) {
  if (q_ < kMinAlphabet || q_ > kMaxAlphabet)
    throw precondition_error("alphabet size must be in [2, 36], got " + std::to_string(q_));
  if (n_ < 1 || n_ > kMaxLength)
    throw precondition_error("length must be in [1, 64], got " + std::to_string(n_));
  value_masks_.assign(static_cast<std::size_t>(q_), 0);
  for (int i = 0; i < n_; ++i) {
    int v = symbols_[static_cast<std::size_t>(i)];
    if (v == kStar) continue;
    if (v < 0 || v >= q_)
      throw precondition_error("symbol " + std::to_string(v) + " out of range for q=" +
                               std::to_string(q_));
    fixed_ |= std::uint64_t{1} << i;
    value_masks_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << i;
  }
}

Subcube Subcube::all_stars(int q, int n) {
  return Subcube(q, std::vector<int>(static_cast<std::size_t>(n), kStar));
}

std::uint64_t Subcube::star_pattern_mask() const {
  std::uint64_t all = (n_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
  return all & ~fixed_;
}

int Subcube::codimension() const { return std::popcount(fixed_); }

std::string Subcube::to_string() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    int v = symbol(i);
    if (v == kStar)
      out.push_back('*');
    else if (v < 10)
      out.push_back(static_cast<char>('0' + v));
    else
      out.push_back(static_cast<char>('a' + v - 10));
  }
  return out;
}

std::strong_ordering compare_words(const Subcube& a, const Subcube& b) {
  detail::require_same_shape(a, b, "compare");
  for (int i = 0; i < a.n(); ++i) {
    // Stars order above every value.
    int x = a.symbol(i) == kStar ? a.q() : a.symbol(i);
    int y = b.symbol(i) == kStar ? b.q() : b.symbol(i);
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

bool conflicts(const Subcube& s, const Subcube& t) {
  detail::require_same_shape(s, t, "conflicts");
  std::uint64_t common = s.fixed_mask() & t.fixed_mask();
  std::uint64_t agree = 0;
  for (int v = 0; v < s.q(); ++v) agree |= s.value_mask(v) & t.value_mask(v);
  return (common & ~agree) != 0;
}

Subcube join(const Subcube& s, const Subcube& t) {
  detail::require_same_shape(s, t, "join");
  std::vector<int> out(static_cast<std::size_t>(s.n()), kStar);
  for (int i = 0; i < s.n(); ++i)
    if (s.symbol(i) != kStar && s.symbol(i) == t.symbol(i)) out[static_cast<std::size_t>(i)] = s.symbol(i);
  return Subcube(s.q(), std::move(out));
}

bool contains(const Subcube& s, const Subcube& t) {
  detail::require_same_shape(s, t, "contains");
  for (int v = 0; v < s.q(); ++v)
    if ((s.value_mask(v) & ~t.value_mask(v)) != 0) return false;
  return true;
}

int weight(const Subcube& s) {
  if (s.q() != 2) throw precondition_error("weight is defined only for q=2");
  return std::popcount(s.value_mask(1));
}

int parity(const Subcube& s) { return weight(s) & 1; }

std::vector<int> star_pattern(const Subcube& s) {
  std::vector<int> out;
  for (int i = 0; i < s.n(); ++i)
    if (s.is_star(i)) out.push_back(i + 1);
  return out;
}

SubcubeStats stats(const Subcube& s) {
  SubcubeStats st;
  st.dimension = s.dimension();
  st.codimension = s.codimension();
  if (s.q() == 2) {
    st.weight = weight(s);
    st.parity = parity(s);
  }
  st.star_pattern = star_pattern(s);
  return st;
}

Subcube prefixed(int symbol, const Subcube& s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(s.n()) + 1);
  out.push_back(symbol);
  out.insert(out.end(), s.symbols().begin(), s.symbols().end());
  return Subcube(s.q(), std::move(out));
}

Subcube suffixed(const Subcube& s, int symbol) {
  std::vector<int> out = s.symbols();
  out.push_back(symbol);
  return Subcube(s.q(), std::move(out));
}

Subcube concat(const Subcube& a, const Subcube& b) {
  if (a.q() != b.q()) throw precondition_error("concat: alphabet mismatch");
  std::vector<int> out = a.symbols();
  out.insert(out.end(), b.symbols().begin(), b.symbols().end());
  return Subcube(a.q(), std::move(out));
}

Subcube rotated_left(const Subcube& s) {
  std::vector<int> out(s.symbols().begin() + 1, s.symbols().end());
  out.push_back(s.symbol(0));
  return Subcube(s.q(), std::move(out));
}

Subcube rotated_right(const Subcube& s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(s.n()));
  out.push_back(s.symbol(s.n() - 1));
  out.insert(out.end(), s.symbols().begin(), s.symbols().end() - 1);
  return Subcube(s.q(), std::move(out));
}

Subcube flipped(const Subcube& s, int coordinate) {
  if (s.q() != 2) throw precondition_error("flip is defined only for q=2");
  if (coordinate < 0 || coordinate >= s.n()) throw precondition_error("flip: coordinate out of range");
  std::vector<int> out = s.symbols();
  int& v = out[static_cast<std::size_t>(coordinate)];
  if (v != kStar) v = 1 - v;
  return Subcube(s.q(), std::move(out));
}

Subcube without_first(const Subcube& s) {
  if (s.n() < 2) throw precondition_error("cannot drop the only coordinate");
  return Subcube(s.q(), std::vector<int>(s.symbols().begin() + 1, s.symbols().end()));
}

Subcube without_last(const Subcube& s, int count) {
  if (s.n() <= count) throw precondition_error("cannot drop that many coordinates");
  return Subcube(s.q(), std::vector<int>(s.symbols().begin(), s.symbols().end() - count));
}

namespace detail {
void require_same_shape(const Subcube& s, const Subcube& t, const char* op) {
  if (s.q() != t.q() || s.n() != t.n())
    throw precondition_error(std::string(op) + ": shape mismatch (q=" + std::to_string(s.q()) +
                             ",n=" + std::to_string(s.n()) + " vs q=" + std::to_string(t.q()) +
                             ",n=" + std::to_string(t.n()) + ")");
}
}  // namespace detail

}  // namespace scp
