#include "scp/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <thread>

#include "scp/io.hpp"
#include "scp/irreducibility.hpp"
#include "scp/symmetry.hpp"

namespace scp {

namespace {

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------------------
// Point-mask universe for subcube searches. Requires q^n <= 64 so that point
// sets are single machine words. Points are numbered in mixed radix with
// coordinate 0 as the most significant digit, so numeric order equals the
// lexicographic order of words.

struct Cand {
  std::uint64_t mask = 0;         // covered points
  std::uint64_t anchor_bits = 0;  // q=2: value bits in point-index layout
  std::uint32_t pattern = 0;      // star coordinates, bit i = coordinate i
  std::uint8_t dim = 0;
  std::uint8_t parity = 0;        // q=2: parity of the anchor weight
  std::vector<std::uint8_t> digits;  // anchor digits
};

struct Universe {
  int n = 0, q = 0;
  std::uint64_t total = 0;
  std::uint64_t full = 0;
  std::vector<std::uint64_t> place;              // place[i] = q^(n-1-i)
  std::vector<Cand> cands;
  std::vector<std::vector<std::uint32_t>> by_anchor;   // anchor point -> candidate ids, lex order
  std::vector<std::vector<std::uint32_t>> containing;  // point -> candidate ids containing it
  std::vector<std::uint64_t> zero_on;  // pattern -> mask of points with zero digits on it
  std::uint64_t odd_points = 0;        // q=2: points of odd weight
};

Universe build_universe(int n, int q) {
  if (n < 1 || q < 2) throw precondition_error("search: need n >= 1 and q >= 2");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(q);
    if (total > 64) throw budget_error("search: q^n exceeds the 64-point engine limit");
  }
  Universe U;
  U.n = n;
  U.q = q;
  U.total = total;
  U.full = total == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;
  U.place.resize(static_cast<std::size_t>(n));
  std::uint64_t w = 1;
  for (int i = n - 1; i >= 0; --i) {
    U.place[static_cast<std::size_t>(i)] = w;
    w *= static_cast<std::uint64_t>(q);
  }
  U.by_anchor.resize(total);
  U.containing.resize(total);
  U.zero_on.assign(std::size_t{1} << n, 0);
  for (std::uint64_t p = 0; p < total; ++p) {
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(n));
    std::uint32_t zeros = 0;
    int ones = 0;
    for (int i = 0; i < n; ++i) {
      digits[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(p / U.place[static_cast<std::size_t>(i)] % static_cast<std::uint64_t>(q));
      if (digits[static_cast<std::size_t>(i)] == 0) zeros |= std::uint32_t{1} << i;
      if (digits[static_cast<std::size_t>(i)] == 1) ++ones;
    }
    for (std::uint32_t pat = 0; pat < (std::uint32_t{1} << n); ++pat)
      if ((pat & zeros) == pat) U.zero_on[pat] |= std::uint64_t{1} << p;
    if (q == 2 && (ones & 1)) U.odd_points |= std::uint64_t{1} << p;
    // every subcube anchored at p: stars on a subset of the zero digits
    std::uint32_t sub = zeros;
    while (true) {
      Cand c;
      c.pattern = sub;
      c.digits = digits;
      c.dim = static_cast<std::uint8_t>(std::popcount(sub));
      c.mask = std::uint64_t{1} << p;
      for (int i = 0; i < n; ++i)
        if (sub >> i & 1) {
          std::uint64_t m = c.mask;
          for (int v = 1; v < q; ++v)
            m |= c.mask << (static_cast<std::uint64_t>(v) * U.place[static_cast<std::size_t>(i)]);
          c.mask = m;
        }
      if (q == 2) {
        c.anchor_bits = p;
        c.parity = static_cast<std::uint8_t>(std::popcount(p) & 1);
      }
      U.cands.push_back(std::move(c));
      std::uint32_t id = static_cast<std::uint32_t>(U.cands.size() - 1);
      U.by_anchor[p].push_back(id);
      if (sub == 0) break;
      sub = (sub - 1) & zeros;
    }
  }
  // lexicographic word order among candidates with the same anchor: at the
  // first coordinate where the patterns differ, the starred one is greater
  for (auto& list : U.by_anchor)
    std::sort(list.begin(), list.end(), [&](std::uint32_t a, std::uint32_t b) {
      std::uint32_t pa = U.cands[a].pattern, pb = U.cands[b].pattern;
      if (pa == pb) return false;
      int i = std::countr_zero(pa ^ pb);
      return (pa >> i & 1) == 0;
    });
  for (std::uint64_t p = 0; p < total; ++p)
    for (std::uint32_t id = 0; id < U.cands.size(); ++id)
      if (U.cands[id].mask >> p & 1) U.containing[p].push_back(id);
  return U;
}

Subcube cand_to_subcube(const Universe& U, const Cand& c) {
  std::vector<int> symbols(static_cast<std::size_t>(U.n));
  for (int i = 0; i < U.n; ++i)
    symbols[static_cast<std::size_t>(i)] =
        (c.pattern >> i & 1) ? kStar : static_cast<int>(c.digits[static_cast<std::size_t>(i)]);
  return Subcube(U.q, std::move(symbols));
}

SubcubeCollection chosen_to_collection(const Universe& U, const std::vector<std::uint32_t>& ids) {
  std::vector<Subcube> members;
  members.reserve(ids.size());
  for (std::uint32_t id : ids) members.push_back(cand_to_subcube(U, U.cands[id]));
  return SubcubeCollection(U.q, U.n, std::move(members));
}

// Join of two engine candidates: star pattern plus differing digits.
std::uint32_t join_pattern(const Universe& U, const Cand& a, const Cand& b) {
  std::uint32_t pat = a.pattern | b.pattern;
  if (U.q == 2) {
    std::uint64_t diff = a.anchor_bits ^ b.anchor_bits;
    for (int i = 0; i < U.n; ++i)
      if (diff >> std::countr_zero(U.place[static_cast<std::size_t>(i)]) & 1)
        pat |= std::uint32_t{1} << i;
    return pat;
  }
  for (int i = 0; i < U.n; ++i)
    if (!(pat >> i & 1) && a.digits[static_cast<std::size_t>(i)] != b.digits[static_cast<std::size_t>(i)])
      pat |= std::uint32_t{1} << i;
  return pat;
}

// Two disjoint members whose union exactly fills a proper subcube witness
// reducibility of every strict superset; since their union is not the whole
// cube, no completed partition can keep both without being reducible.
bool pair_reducible(const Universe& U, const Cand& a, const Cand& b) {
  if (a.dim != b.dim) return false;  // q^x + q^y = q^z forces x = y, q = 2
  if (U.q != 2) return false;
  std::uint32_t jp = join_pattern(U, a, b);
  if (std::popcount(jp) != a.dim + 1) return false;
  return jp != (std::uint32_t{1} << U.n) - 1;
}

// Engine-level irreducibility check on a completed partition, equivalent to
// the closure algorithm on the member subcubes.
bool completion_irreducible(const Universe& U, const std::vector<std::uint32_t>& ids) {
  const std::size_t m = ids.size();
  if (m < 2) return true;
  std::vector<const Cand*> cs;
  cs.reserve(m);
  for (std::uint32_t id : ids) cs.push_back(&U.cands[id]);
  auto expand_mask = [&](const std::uint8_t* digits, std::uint32_t pat) {
    std::uint64_t point = 0;
    for (int i = 0; i < U.n; ++i)
      if (!(pat >> i & 1))
        point += U.place[static_cast<std::size_t>(i)] * static_cast<std::uint64_t>(digits[i]);
    std::uint64_t mask = std::uint64_t{1} << point;
    for (int i = 0; i < U.n; ++i)
      if (pat >> i & 1) {
        std::uint64_t grown = mask;
        for (int v = 1; v < U.q; ++v)
          grown |= mask << (static_cast<std::uint64_t>(v) * U.place[static_cast<std::size_t>(i)]);
        mask = grown;
      }
    return mask;
  };
  std::vector<std::uint8_t> jd(static_cast<std::size_t>(U.n));
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::uint32_t jp = join_pattern(U, *cs[i], *cs[j]);
      for (int t = 0; t < U.n; ++t)
        jd[static_cast<std::size_t>(t)] = (jp >> t & 1) ? 0 : cs[i]->digits[static_cast<std::size_t>(t)];
      std::uint64_t jmask = expand_mask(jd.data(), jp);
      std::uint64_t in_set = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
      bool grew = true;
      while (grew && jmask != U.full) {
        grew = false;
        for (std::size_t k = 0; k < m; ++k) {
          if (in_set >> k & 1) continue;
          if ((cs[k]->mask & jmask) == 0) continue;
          in_set |= std::uint64_t{1} << k;
          std::uint32_t np = jp | cs[k]->pattern;
          for (int t = 0; t < U.n; ++t)
            if (!(np >> t & 1) && cs[k]->digits[static_cast<std::size_t>(t)] != jd[static_cast<std::size_t>(t)])
              np |= std::uint32_t{1} << t;
          if (np != jp) {
            jp = np;
            for (int t = 0; t < U.n; ++t)
              if (jp >> t & 1) jd[static_cast<std::size_t>(t)] = 0;
            jmask = expand_mask(jd.data(), jp);
          }
          grew = true;
        }
      }
      if (jmask == U.full) continue;  // closure absorbs everything
      if (std::popcount(in_set) < static_cast<int>(m)) return false;
    }
  }
  return true;
}

enum class Objective { Enumerate, MinSize, MaxPoints, MaxSize, Homogeneous, MinCover };

struct Accumulator {
  std::optional<std::int64_t> best;
  std::vector<std::uint32_t> cert;
  std::vector<std::vector<std::uint32_t>> all_certs;  // Homogeneous
  std::uint64_t completions = 0;
};

struct EngineConfig {
  Objective objective = Objective::Enumerate;
  SearchConstraints cons;
  const std::function<void(const SubcubeCollection&)>* visitor = nullptr;
};

class CubeEngine {
 public:
  CubeEngine(const Universe& U, const EngineConfig& cfg) : U_(U), cfg_(cfg) {
    chosen_.reserve(64);
    if (cfg_.objective == Objective::Homogeneous) {
      even_.fill(0);
      odd_.fill(0);
    }
  }

  // Runs the whole search (or one root branch when branch >= 0).
  void run(std::uint64_t budget, int branch = -1) {
    nodes_ = 0;
    truncated_ = false;
    budget_ = budget;
    if (branch < 0) {
      dfs();
      return;
    }
    const auto& roots = root_candidates();
    if (static_cast<std::size_t>(branch) >= roots.size()) return;
    std::uint32_t id = roots[static_cast<std::size_t>(branch)];
    if (!admissible(id)) return;
    push(id);
    dfs();
    pop(id);
  }

  const std::vector<std::uint32_t>& root_candidates() const {
    return cfg_.objective == Objective::MinCover ? U_.containing[0] : U_.by_anchor[0];
  }

  Accumulator acc;
  std::uint64_t nodes() const { return nodes_; }
  bool truncated() const { return truncated_; }
  void seed_best(std::optional<std::int64_t> b) { carried_best_ = b; }

 private:
  bool minimizing() const {
    return cfg_.objective == Objective::MinSize || cfg_.objective == Objective::MinCover;
  }

  std::optional<std::int64_t> current_best() const {
    if (acc.best && carried_best_) return std::min(*acc.best, *carried_best_);
    return acc.best ? acc.best : carried_best_;
  }

  bool admissible(std::uint32_t id) const {
    const Cand& c = U_.cands[id];
    if (cfg_.objective != Objective::MinCover && (c.mask & covered_) != 0) return false;
    if (cfg_.cons.homogeneous_codim &&
        U_.n - static_cast<int>(c.dim) != *cfg_.cons.homogeneous_codim)
      return false;
    if (cfg_.cons.max_size && chosen_.size() + 1 > *cfg_.cons.max_size) return false;
    bool want_pair_prune = cfg_.cons.prune_reducible_pairs || cfg_.cons.require_irreducible;
    if (want_pair_prune && cfg_.objective != Objective::MinCover) {
      for (std::uint32_t t : chosen_)
        if (pair_reducible(U_, U_.cands[id], U_.cands[t])) return false;
      if (U_.q > 2 && !axis_admissible(id)) return false;
    }
    return true;
  }

  // q-ary counterpart of the pair rule: a full line of q members that differ
  // in a single coordinate unions to a proper subcube.
  bool axis_admissible(std::uint32_t id) const {
    const Cand& c = U_.cands[id];
    std::array<int, 64> same_but_one{};
    for (std::uint32_t t : chosen_) {
      const Cand& o = U_.cands[t];
      if (o.pattern != c.pattern || o.dim != c.dim) continue;
      int diff = -1;
      bool single = true;
      for (int i = 0; i < U_.n && single; ++i) {
        if (c.pattern >> i & 1) continue;
        if (o.digits[static_cast<std::size_t>(i)] != c.digits[static_cast<std::size_t>(i)]) {
          if (diff >= 0) single = false;
          diff = i;
        }
      }
      if (single && diff >= 0) ++same_but_one[static_cast<std::size_t>(diff)];
    }
    for (int i = 0; i < U_.n; ++i) {
      if (same_but_one[static_cast<std::size_t>(i)] < U_.q - 1) continue;
      std::uint32_t line = c.pattern | (std::uint32_t{1} << i);
      if (line != (std::uint32_t{1} << U_.n) - 1) return false;
    }
    return true;
  }

  bool bound_allows_continue(std::uint64_t uncovered) const {
    auto best = current_best();
    std::uint64_t ucount = static_cast<std::uint64_t>(std::popcount(uncovered));
    switch (cfg_.objective) {
      case Objective::MinSize:
      case Objective::MinCover: {
        if (!best) return true;
        std::uint64_t max_member = U_.total / static_cast<std::uint64_t>(U_.q);
        std::uint64_t lower = chosen_.size() + (ucount + max_member - 1) / max_member;
        return static_cast<std::int64_t>(lower) < *best;
      }
      case Objective::MaxPoints: {
        if (!best) return true;
        return static_cast<std::int64_t>(points_ + ucount) > *best;
      }
      case Objective::MaxSize: {
        if (!best) return true;
        return static_cast<std::int64_t>(chosen_.size() + ucount) > *best;
      }
      default:
        return true;
    }
  }

  // Parity feasibility for homogeneous searches: an unbalanced pattern class
  // needs enough future anchors (uncovered points >= p, zero on the pattern,
  // of the lacking parity).
  bool parity_feasible(std::uint64_t p) const {
    std::uint64_t geq = ~std::uint64_t{0} << p;
    for (std::uint32_t pat : patterns_in_use_) {
      int e = even_[pat], o = odd_[pat];
      if (e == o) continue;
      std::uint64_t pool = ~covered_ & U_.full & U_.zero_on[pat] & geq;
      std::uint64_t right_parity = (e > o) ? (pool & U_.odd_points) : (pool & ~U_.odd_points);
      if (std::popcount(right_parity) < std::abs(e - o)) return false;
    }
    return true;
  }

  void push(std::uint32_t id) {
    const Cand& c = U_.cands[id];
    chosen_.push_back(id);
    covered_ |= c.mask;
    if (c.dim == 0) ++points_;
    if (cfg_.objective == Objective::Homogeneous) {
      if (std::find(patterns_in_use_.begin(), patterns_in_use_.end(), c.pattern) ==
          patterns_in_use_.end())
        patterns_in_use_.push_back(c.pattern);
      (c.parity ? odd_ : even_)[c.pattern]++;
    }
  }

  void pop(std::uint32_t id) {
    const Cand& c = U_.cands[id];
    chosen_.pop_back();
    if (cfg_.objective == Objective::MinCover) {
      covered_ = 0;
      for (std::uint32_t t : chosen_) covered_ |= U_.cands[t].mask;
    } else {
      covered_ &= ~c.mask;
    }
    if (c.dim == 0) --points_;
    if (cfg_.objective == Objective::Homogeneous) {
      (c.parity ? odd_ : even_)[c.pattern]--;
      if (even_[c.pattern] == 0 && odd_[c.pattern] == 0)
        patterns_in_use_.erase(
            std::find(patterns_in_use_.begin(), patterns_in_use_.end(), c.pattern));
    }
  }

  bool tightness_ok() const {
    std::uint32_t mentioned = 0;
    for (std::uint32_t t : chosen_)
      mentioned |= ~U_.cands[t].pattern & ((std::uint32_t{1} << U_.n) - 1);
    return mentioned == (std::uint32_t{1} << U_.n) - 1;
  }

  void complete() {
    ++acc.completions;
    if (cfg_.cons.min_size && chosen_.size() < *cfg_.cons.min_size) return;
    bool need_tight = cfg_.cons.require_tight || cfg_.objective == Objective::MinSize ||
                      cfg_.objective == Objective::Homogeneous ||
                      cfg_.objective == Objective::MinCover;
    if (need_tight && !tightness_ok()) return;
    if (cfg_.objective == Objective::MinCover) {
      // minimality: every member keeps a private point
      for (std::size_t i = 0; i < chosen_.size(); ++i) {
        std::uint64_t others = 0;
        for (std::size_t j = 0; j < chosen_.size(); ++j)
          if (j != i) others |= U_.cands[chosen_[j]].mask;
        if ((U_.cands[chosen_[i]].mask & ~others) == 0) return;
      }
    }
    bool need_irreducible = cfg_.cons.require_irreducible ||
                            cfg_.objective == Objective::MinSize ||
                            cfg_.objective == Objective::MaxPoints ||
                            cfg_.objective == Objective::MaxSize ||
                            cfg_.objective == Objective::Homogeneous;
    if (need_irreducible && !completion_irreducible(U_, chosen_)) return;

    switch (cfg_.objective) {
      case Objective::Enumerate:
        if (cfg_.visitor) (*cfg_.visitor)(chosen_to_collection(U_, chosen_));
        break;
      case Objective::MinSize:
      case Objective::MinCover: {
        auto size = static_cast<std::int64_t>(chosen_.size());
        if (!current_best() || size < *current_best()) {
          acc.best = size;
          acc.cert = chosen_;
        }
        break;
      }
      case Objective::MaxPoints: {
        if (!current_best() || points_ > *current_best()) {
          acc.best = points_;
          acc.cert = chosen_;
        }
        break;
      }
      case Objective::MaxSize: {
        auto size = static_cast<std::int64_t>(chosen_.size());
        if (!current_best() || size > *current_best()) {
          acc.best = size;
          acc.cert = chosen_;
        }
        break;
      }
      case Objective::Homogeneous:
        acc.all_certs.push_back(chosen_);
        break;
    }
  }

  void dfs() {
    if (truncated_) return;
    if (++nodes_ > budget_) {
      truncated_ = true;
      return;
    }
    std::uint64_t uncovered = ~covered_ & U_.full;
    if (uncovered == 0) {
      complete();
      return;
    }
    if (!bound_allows_continue(uncovered)) return;
    std::uint64_t p = static_cast<std::uint64_t>(std::countr_zero(uncovered));
    if (cfg_.objective == Objective::Homogeneous && !parity_feasible(p)) return;
    const auto& list =
        cfg_.objective == Objective::MinCover ? U_.containing[p] : U_.by_anchor[p];
    if (minimizing()) {
      // larger members first, to find small incumbents early
      for (auto it = list.rbegin(); it != list.rend(); ++it) {
        if (!admissible(*it)) continue;
        push(*it);
        dfs();
        pop(*it);
        if (truncated_) return;
      }
    } else {
      for (std::uint32_t id : list) {
        if (!admissible(id)) continue;
        push(id);
        dfs();
        pop(id);
        if (truncated_) return;
      }
    }
  }

  const Universe& U_;
  EngineConfig cfg_;
  std::uint64_t covered_ = 0;
  std::vector<std::uint32_t> chosen_;
  std::int64_t points_ = 0;
  std::array<std::int16_t, 64> even_{}, odd_{};
  std::vector<std::uint32_t> patterns_in_use_;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_ = 0;
  bool truncated_ = false;
  std::optional<std::int64_t> carried_best_;
};

// Runs root branches sequentially (carrying the incumbent) or on worker
// threads (independently; the merge below is deterministic either way).
struct BranchOutcome {
  Accumulator acc;
  std::uint64_t nodes = 0;
  bool truncated = false;
};

std::vector<BranchOutcome> run_branches(const Universe& U, const EngineConfig& cfg) {
  CubeEngine probe(U, cfg);
  std::size_t branch_count = probe.root_candidates().size();
  std::vector<BranchOutcome> out(branch_count);
  int threads = std::max(1, cfg.cons.threads);
  if (threads == 1) {
    std::optional<std::int64_t> carried;
    for (std::size_t b = 0; b < branch_count; ++b) {
      CubeEngine e(U, cfg);
      e.seed_best(carried);
      e.run(std::max<std::uint64_t>(1, cfg.cons.node_budget / std::max<std::size_t>(1, branch_count)),
            static_cast<int>(b));
      out[b].acc = std::move(e.acc);
      out[b].nodes = e.nodes();
      out[b].truncated = e.truncated();
      if (out[b].acc.best) {
        bool minimize = cfg.objective == Objective::MinSize || cfg.objective == Objective::MinCover;
        if (!carried || (minimize ? *out[b].acc.best < *carried : *out[b].acc.best > *carried))
          carried = out[b].acc.best;
      }
    }
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&]() {
      while (true) {
        std::size_t b = next.fetch_add(1);
        if (b >= branch_count) return;
        CubeEngine e(U, cfg);
        e.run(std::max<std::uint64_t>(1, cfg.cons.node_budget / std::max<std::size_t>(1, branch_count)),
              static_cast<int>(b));
        out[b].acc = std::move(e.acc);
        out[b].nodes = e.nodes();
        out[b].truncated = e.truncated();
      }
    });
  for (auto& th : pool) th.join();
  return out;
}

SearchReport merged_report(const Universe& U, const EngineConfig& cfg, const char* objective_name,
                           bool minimize) {
  auto start = Clock::now();
  auto outcomes = run_branches(U, cfg);
  SearchReport rep;
  rep.objective = objective_name;
  rep.complete = true;
  std::vector<std::uint32_t> cert;
  for (const auto& o : outcomes) {
    rep.nodes += o.nodes;
    rep.partitions_visited += o.acc.completions;
    if (o.truncated) rep.complete = false;
    if (o.acc.best && (!rep.value || (minimize ? *o.acc.best < *rep.value
                                               : *o.acc.best > *rep.value))) {
      rep.value = o.acc.best;
      cert = o.acc.cert;
    }
  }
  rep.exists = rep.value.has_value();
  if (!cert.empty()) {
    SubcubeCollection raw = chosen_to_collection(U, cert);
    rep.certificates.push_back(canonical_form(raw));
  }
  rep.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

// ---------------------------------------------------------------------------
// Affine engine.

struct AffineCand {
  std::uint64_t mask = 0;
  std::uint64_t rep = 0;
  std::vector<std::uint64_t> basis;
  int dim = 0;
};

struct AffineUniverse {
  int n = 0;
  std::uint64_t full = 0;
  std::vector<AffineCand> cands;
  std::vector<std::vector<std::uint32_t>> by_anchor;
};

void gen_subspace_bases(int n, std::vector<std::vector<std::uint64_t>>& out) {
  out.push_back({});  // the zero space
  // pivot sets in decreasing bit order; free entries below the pivot in
  // non-pivot columns
  for (std::uint32_t pivots = 1; pivots < (std::uint32_t{1} << n); ++pivots) {
    std::vector<int> piv;
    for (int b = n - 1; b >= 0; --b)
      if (pivots >> b & 1) piv.push_back(b);
    std::vector<std::vector<int>> free_bits(piv.size());
    int total_free = 0;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      for (int b = piv[r] - 1; b >= 0; --b)
        if (!(pivots >> b & 1)) {
          free_bits[r].push_back(b);
          ++total_free;
        }
    }
    for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << total_free); ++fill) {
      std::vector<std::uint64_t> rows(piv.size());
      int bit = 0;
      for (std::size_t r = 0; r < piv.size(); ++r) {
        rows[r] = std::uint64_t{1} << piv[r];
        for (int b : free_bits[r])
          if (fill >> bit++ & 1) rows[r] |= std::uint64_t{1} << b;
      }
      out.push_back(std::move(rows));
    }
  }
}

AffineUniverse build_affine_universe(int n) {
  if (n < 1 || n > 6) throw budget_error("avsp search: engine limited to n <= 6");
  AffineUniverse U;
  U.n = n;
  std::uint64_t total = std::uint64_t{1} << n;
  U.full = (total == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;
  U.by_anchor.resize(total);
  std::vector<std::vector<std::uint64_t>> bases;
  gen_subspace_bases(n, bases);
  for (auto& basis : bases) {
    // enumerate canonical representatives: zero at every pivot
    std::uint64_t pivmask = 0;
    for (std::uint64_t b : basis) pivmask |= std::uint64_t{1} << (63 - std::countl_zero(b));
    std::vector<std::uint64_t> elements{0};
    for (std::uint64_t b : basis) {
      std::size_t sz = elements.size();
      for (std::size_t i = 0; i < sz; ++i) elements.push_back(elements[i] ^ b);
    }
    for (std::uint64_t rep = 0; rep < total; ++rep) {
      if (rep & pivmask) continue;
      AffineCand c;
      c.rep = rep;
      c.basis = basis;
      c.dim = static_cast<int>(basis.size());
      for (std::uint64_t e : elements) c.mask |= std::uint64_t{1} << (rep ^ e);
      U.cands.push_back(std::move(c));
      U.by_anchor[rep].push_back(static_cast<std::uint32_t>(U.cands.size() - 1));
    }
  }
  for (auto& list : U.by_anchor)
    std::sort(list.begin(), list.end(), [&](std::uint32_t a, std::uint32_t b) {
      const AffineCand& ca = U.cands[a];
      const AffineCand& cb = U.cands[b];
      if (ca.dim != cb.dim) return ca.dim > cb.dim;  // larger members first
      return ca.basis < cb.basis;
    });
  return U;
}

int affine_join_dim(const AffineCand& a, const AffineCand& b) {
  std::vector<std::uint64_t> rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  rows.push_back(a.rep ^ b.rep);
  return gf2::echelonize(rows);
}

struct AvspSearchState {
  AvspSearchState(const AffineUniverse& universe, const SearchConstraints& constraints)
      : U(universe), cons(constraints) {}

  const AffineUniverse& U;
  const SearchConstraints& cons;
  std::uint64_t covered = 0;
  std::vector<std::uint32_t> chosen;
  std::optional<std::int64_t> best;
  std::vector<std::uint32_t> cert;
  std::uint64_t nodes = 0;
  std::uint64_t completions = 0;
  std::uint64_t budget = 0;
  bool truncated = false;

  AffinePartition to_partition(const std::vector<std::uint32_t>& ids) const {
    AffinePartition out;
    out.n = U.n;
    for (std::uint32_t id : ids)
      out.members.emplace_back(U.n, U.cands[id].rep, U.cands[id].basis);
    return out;
  }

  void dfs() {
    if (truncated) return;
    if (++nodes > budget) {
      truncated = true;
      return;
    }
    std::uint64_t uncovered = ~covered & U.full;
    if (uncovered == 0) {
      ++completions;
      AffinePartition F = to_partition(chosen);
      if (!avsp_is_tight(F)) return;
      if (!avsp_test_irreducible(F).irreducible()) return;
      auto size = static_cast<std::int64_t>(chosen.size());
      if (!best || size < *best) {
        best = size;
        cert = chosen;
      }
      return;
    }
    if (best) {
      std::uint64_t half = std::uint64_t{1} << (U.n - 1);
      std::uint64_t ucount = static_cast<std::uint64_t>(std::popcount(uncovered));
      if (static_cast<std::int64_t>(chosen.size() + (ucount + half - 1) / half) >= *best) return;
    }
    std::uint64_t p = static_cast<std::uint64_t>(std::countr_zero(uncovered));
    for (std::uint32_t id : U.by_anchor[p]) {
      const AffineCand& c = U.cands[id];
      if ((c.mask & covered) != 0) continue;
      bool prunable = false;
      for (std::uint32_t t : chosen) {
        const AffineCand& o = U.cands[t];
        if (o.dim == c.dim && affine_join_dim(o, c) == c.dim + 1 && c.dim + 1 < U.n) {
          prunable = true;
          break;
        }
      }
      if (prunable) continue;
      chosen.push_back(id);
      covered |= c.mask;
      dfs();
      covered &= ~c.mask;
      chosen.pop_back();
      if (truncated) return;
    }
  }
};

}  // namespace

EnumerationStats enumerate_partitions(int n, int q, const SearchConstraints& constraints,
                                      const std::function<void(const SubcubeCollection&)>& visitor) {
  Universe U = build_universe(n, q);
  EngineConfig cfg;
  cfg.objective = Objective::Enumerate;
  cfg.cons = constraints;
  cfg.visitor = &visitor;
  cfg.cons.threads = 1;  // visitor order is part of the contract
  auto outcomes = run_branches(U, cfg);
  EnumerationStats stats;
  stats.complete = true;
  for (const auto& o : outcomes) {
    stats.nodes += o.nodes;
    stats.partitions_visited += o.acc.completions;
    if (o.truncated) stats.complete = false;
  }
  return stats;
}

SearchReport min_size_search(int n, int q, SearchConstraints constraints) {
  Universe U = build_universe(n, q);
  EngineConfig cfg;
  cfg.objective = Objective::MinSize;
  cfg.cons = constraints;
  cfg.cons.require_tight = true;
  cfg.cons.require_irreducible = true;
  return merged_report(U, cfg, "min-size", /*minimize=*/true);
}

SearchReport max_points_search(int n, SearchConstraints constraints) {
  Universe U = build_universe(n, 2);
  EngineConfig cfg;
  cfg.objective = Objective::MaxPoints;
  cfg.cons = constraints;
  cfg.cons.require_irreducible = true;
  return merged_report(U, cfg, "max-points", /*minimize=*/false);
}

SearchReport max_size_search(int n, SearchConstraints constraints) {
  Universe U = build_universe(n, 2);
  EngineConfig cfg;
  cfg.objective = Objective::MaxSize;
  cfg.cons = constraints;
  cfg.cons.require_irreducible = true;
  return merged_report(U, cfg, "max-size", /*minimize=*/false);
}

SearchReport homogeneous_search(int n, int k, SearchConstraints constraints) {
  if (k < 1 || k > n) throw precondition_error("homogeneous_search: need 1 <= k <= n");
  auto start = Clock::now();
  Universe U = build_universe(n, 2);
  EngineConfig cfg;
  cfg.objective = Objective::Homogeneous;
  cfg.cons = constraints;
  cfg.cons.homogeneous_codim = k;
  cfg.cons.require_tight = true;
  cfg.cons.require_irreducible = true;

  // Fix the first member to 0^k *^(n-k): any member covering 0^n can be
  // permuted into it, so classes are complete up to isomorphism.
  std::uint32_t fixed_pattern = ((std::uint32_t{1} << n) - 1) & ~((std::uint32_t{1} << k) - 1);
  std::uint32_t fixed_id = std::numeric_limits<std::uint32_t>::max();
  for (std::uint32_t id : U.by_anchor[0])
    if (U.cands[id].pattern == fixed_pattern) fixed_id = id;

  SearchReport rep;
  rep.objective = "homogeneous";
  auto all_roots = U.by_anchor[0];
  U.by_anchor[0] = {fixed_id};
  auto outcomes = run_branches(U, cfg);
  U.by_anchor[0] = all_roots;

  rep.complete = true;
  std::vector<std::vector<std::uint32_t>> completions;
  for (auto& o : outcomes) {
    rep.nodes += o.nodes;
    rep.partitions_visited += o.acc.completions;
    if (o.truncated) rep.complete = false;
    for (auto& c : o.acc.all_certs) completions.push_back(std::move(c));
  }
  // canonical classes
  std::set<std::string> seen;
  for (const auto& ids : completions) {
    SubcubeCollection canon = canonical_form(chosen_to_collection(U, ids));
    if (seen.insert(format_scp(canon, false)).second)
      rep.certificates.push_back(std::move(canon));
  }
  rep.exists = !rep.certificates.empty();
  if (rep.exists) rep.value = static_cast<std::int64_t>(rep.certificates.size());
  rep.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

SearchReport min_cover_search(int n, int q, SearchConstraints constraints) {
  Universe U = build_universe(n, q);
  EngineConfig cfg;
  cfg.objective = Objective::MinCover;
  cfg.cons = constraints;
  cfg.cons.require_tight = true;
  return merged_report(U, cfg, "min-cover", /*minimize=*/true);
}

SearchReport avsp_min_size_search(int n, SearchConstraints constraints) {
  auto start = Clock::now();
  AffineUniverse U = build_affine_universe(n);
  AvspSearchState st(U, constraints);
  st.budget = constraints.node_budget;
  st.dfs();
  SearchReport rep;
  rep.objective = "avsp-min-size";
  rep.nodes = st.nodes;
  rep.partitions_visited = st.completions;
  rep.complete = !st.truncated;
  rep.value = st.best;
  rep.exists = st.best.has_value();
  if (!st.cert.empty()) rep.avsp_certificates.push_back(st.to_partition(st.cert));
  rep.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

BoundsRecord bounds(int n, int q) {
  if (n < 1) throw precondition_error("bounds: n must be positive");
  if (q < 2) throw precondition_error("bounds: q must be at least 2");
  BoundsRecord out;
  out.n = n;
  out.q = q;
  if (q == 2 && n >= 4) out.binary_min_size_lower = n + 3;
  out.cover_size_lower = static_cast<std::int64_t>(q - 1) * n + 1;
  if (q == 2 && n >= 3 && n <= 62) {
    unsigned __int128 num = static_cast<unsigned __int128>(2 * n - 1) << n;
    out.max_size_upper = static_cast<std::int64_t>(num / static_cast<unsigned>(3 * n - 1));
  }
  out.avsp_size_lower = n + 1;
  return out;
}

std::pair<std::int64_t, std::int64_t> homogeneous_length_range(int k) {
  if (k < 2 || k > 62) throw precondition_error("homogeneous_length_range: need 2 <= k <= 62");
  return {k + 1, (std::int64_t{1} << k) - 3};
}

}  // namespace scp
