#include "pgres/search.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <filesystem>
#include <functional>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "pgres/construct.hpp"

namespace pgres {

const char* to_string(SearchKind kind) {
  switch (kind) {
    case SearchKind::Resolving: return "resolving";
    case SearchKind::SemiResolving: return "semi_resolving";
    case SearchKind::DoubleBlocking: return "double_blocking";
  }
  return "unknown";
}

const char* to_string(ProofMode mode) {
  switch (mode) {
    case ProofMode::Exhaustive: return "exhaustive";
    case ProofMode::BranchAndBound: return "branch_and_bound";
    case ProofMode::UpperBoundOnly: return "upper_bound_only";
  }
  return "unknown";
}

SearchKind parse_search_kind(const std::string& s) {
  if (s == "resolving") return SearchKind::Resolving;
  if (s == "semi_resolving" || s == "semi") return SearchKind::SemiResolving;
  if (s == "double_blocking" || s == "2bl") return SearchKind::DoubleBlocking;
  throw Error(ErrorKind::InvalidArgument, "unknown search kind '" + s + "'");
}

// ---------------------------------------------------------------------------
// Constraint systems.

ConstraintSystem build_constraints(const Plane& plane, SearchKind kind) {
  const std::uint32_t n = plane.size();
  ConstraintSystem sys;
  sys.kind = kind;
  sys.q = plane.order();
  sys.plane_size = n;
  sys.universe = kind == SearchKind::Resolving ? 2 * n : n;

  std::vector<std::uint32_t> cand;
  auto sym_diff = [&](std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t offset) {
    std::vector<std::uint32_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    for (auto& x : out) x += offset;
    return out;
  };

  switch (kind) {
    case SearchKind::Resolving:
      // Two points u, v: separated by u, v, or a line through exactly one.
      for (PointId u = 0; u < n; ++u)
        for (PointId v = u + 1; v < n; ++v) {
          cand = sym_diff(plane.lines_through(u), plane.lines_through(v), n);
          cand.push_back(u);
          cand.push_back(v);
          std::sort(cand.begin(), cand.end());
          sys.candidates.push_back(cand);
          sys.demand.push_back(1);
        }
      for (LineId a = 0; a < n; ++a)
        for (LineId b = a + 1; b < n; ++b) {
          cand = sym_diff(plane.points_on(a), plane.points_on(b), 0);
          cand.push_back(n + a);
          cand.push_back(n + b);
          std::sort(cand.begin(), cand.end());
          sys.candidates.push_back(cand);
          sys.demand.push_back(1);
        }
      break;
    case SearchKind::SemiResolving:
      // Two lines are told apart by a point on exactly one of them.
      for (LineId a = 0; a < n; ++a)
        for (LineId b = a + 1; b < n; ++b) {
          sys.candidates.push_back(sym_diff(plane.points_on(a), plane.points_on(b), 0));
          sys.demand.push_back(1);
        }
      break;
    case SearchKind::DoubleBlocking:
      for (LineId l = 0; l < n; ++l) {
        sys.candidates.emplace_back(plane.points_on(l).begin(), plane.points_on(l).end());
        sys.demand.push_back(2);
      }
      break;
  }
  return sys;
}

bool ConstraintSystem::satisfied_by(std::span<const std::uint32_t> elements) const {
  std::vector<char> in(universe, 0);
  for (auto e : elements) in.at(e) = 1;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::uint32_t c = 0;
    for (auto x : candidates[i]) c += in[x];
    if (c < demand[i]) return false;
  }
  return true;
}

MixedSet ConstraintSystem::to_set(std::span<const std::uint32_t> elements) const {
  PointSet pts;
  LineSet lns;
  for (auto e : elements) {
    if (e < plane_size) pts.push_back(e);
    else lns.push_back(e - plane_size);
  }
  return MixedSet(std::move(pts), std::move(lns));
}

std::vector<std::uint32_t> ConstraintSystem::to_elements(const MixedSet& s) const {
  std::vector<std::uint32_t> out(s.points.begin(), s.points.end());
  if (!s.lines.empty() && kind != SearchKind::Resolving)
    throw Error(ErrorKind::InvalidArgument, "point kinds take no lines");
  for (auto l : s.lines) out.push_back(plane_size + l);
  return out;
}

std::vector<Permutation> symmetry_group(const Plane& plane, SearchKind kind) {
  const std::uint32_t n = plane.size();
  const Permutation sigma = singer_cycle(plane);
  const Permutation phi = singer_frobenius(plane);
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0u);

  std::vector<Permutation> frob{id};
  for (Permutation f = phi; f != id; f = compose(phi, f)) frob.push_back(f);

  std::vector<Permutation> points;
  points.reserve(std::size_t(n) * frob.size());
  for (const auto& f : frob) {
    Permutation g = f;
    for (std::uint32_t i = 0; i < n; ++i) {
      points.push_back(g);
      g = compose(sigma, g);
    }
  }
  if (kind != SearchKind::Resolving) return points;

  const Permutation sigma_l = plane.induced_line_permutation(sigma);
  const Permutation phi_l = plane.induced_line_permutation(phi);
  Permutation id_l = id;
  std::vector<Permutation> frob_l{id_l};
  for (std::size_t j = 1; j < frob.size(); ++j) frob_l.push_back(compose(phi_l, frob_l.back()));

  std::vector<Permutation> out;
  out.reserve(points.size());
  std::size_t idx = 0;
  for (const auto& fl : frob_l) {
    Permutation gl = fl;
    for (std::uint32_t i = 0; i < n; ++i) {
      Permutation u(2 * n);
      const Permutation& gp = points[idx++];
      for (std::uint32_t x = 0; x < n; ++x) {
        u[x] = gp[x];
        u[n + x] = n + gl[x];
      }
      out.push_back(std::move(u));
      gl = compose(sigma_l, gl);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Combinatorics.

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t colex_rank(std::span<const std::uint32_t> c) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < c.size(); ++i) r += binomial(c[i], i + 1);
  return r;
}

std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::uint32_t k) {
  std::vector<std::uint32_t> c(k);
  for (std::uint32_t i = k; i >= 1; --i) {
    std::uint32_t x = i - 1;
    while (binomial(x + 1, i) <= rank) ++x;
    c[i - 1] = x;
    rank -= binomial(x, i);
  }
  return c;
}

namespace {

void next_colex(std::vector<std::uint32_t>& c) {
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] + 1 == c[i + 1]) ++i;
  ++c[i];
  for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<std::uint32_t>(j);
}

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(std::uint32_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Bits andnot(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  std::uint32_t count_and(const Bits& o) const {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < W; ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < W; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  template <class F>
  void for_each(F f) const {
    for (std::size_t i = 0; i < W; ++i)
      for (std::uint64_t x = w[i]; x; x &= x - 1) f(static_cast<std::uint32_t>(i * 64 + std::countr_zero(x)));
  }
  std::vector<std::uint32_t> elements() const {
    std::vector<std::uint32_t> out;
    for_each([&](std::uint32_t e) { out.push_back(e); });
    return out;
  }
};

template <std::size_t W>
struct Model {
  std::vector<Bits<W>> masks;
  std::vector<std::uint32_t> demand;
  std::uint32_t universe = 0;

  explicit Model(const ConstraintSystem& sys) : demand(sys.demand), universe(sys.universe) {
    masks.resize(sys.candidates.size());
    for (std::size_t i = 0; i < masks.size(); ++i)
      for (auto x : sys.candidates[i]) masks[i].set(x);
  }

  // `hint` holds the last failing constraint and is checked first.
  bool satisfied(const Bits<W>& s, std::size_t& hint) const {
    if (!masks.empty() && s.count_and(masks[hint]) < demand[hint]) return false;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (s.count_and(masks[i]) < demand[i]) {
        hint = i;
        return false;
      }
    return true;
  }
};

// Stops long-running kernels: node/time budgets and cancellation.
struct Limits {
  std::optional<std::uint64_t> nodes;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  bool expired() const { return deadline && std::chrono::steady_clock::now() >= *deadline; }
};

// --- exhaustive -----------------------------------------------------------

struct ScanResult {
  bool found = false;
  std::uint64_t rank = 0;
  std::vector<std::uint32_t> combination;
};

template <std::size_t W>
ScanResult scan(const Model<W>& m, std::uint32_t k, std::uint64_t first, std::uint64_t last,
                const std::atomic<std::uint64_t>* best) {
  ScanResult out;
  if (first >= last) return out;
  std::vector<std::uint32_t> c = colex_unrank(first, k);
  std::size_t hint = 0;
  for (std::uint64_t r = first; r < last; ++r) {
    if (best && (r & 0xfff) == 0 && best->load(std::memory_order_relaxed) < first) return out;
    Bits<W> s;
    for (auto x : c) s.set(x);
    if (m.satisfied(s, hint)) {
      out.found = true;
      out.rank = r;
      out.combination = std::move(c);
      return out;
    }
    if (r + 1 < last) next_colex(c);
  }
  return out;
}

DecideResult scan_result(const ScanResult& s, std::uint64_t first, std::uint64_t last) {
  DecideResult d;
  d.mode = ProofMode::Exhaustive;
  if (s.found) {
    d.decision = Decision::Feasible;
    d.witness = s.combination;
    d.nodes = s.rank - first + 1;
  } else {
    d.decision = Decision::Infeasible;
    d.nodes = last - first;
  }
  return d;
}

template <std::size_t W>
DecideResult exhaustive_serial_w(const ConstraintSystem& sys, std::uint32_t k, std::uint64_t first,
                                 std::uint64_t last) {
  const Model<W> m(sys);
  return scan_result(scan(m, k, first, last, nullptr), first, last);
}

template <std::size_t W>
DecideResult exhaustive_parallel_w(const ConstraintSystem& sys, std::uint32_t k, std::uint64_t first,
                                   std::uint64_t last) {
  const Model<W> m(sys);
  if (first >= last) return scan_result({}, first, last);
  const std::uint64_t total = last - first;
  const std::uint64_t chunks = std::min<std::uint64_t>(total, std::uint64_t(omp_get_max_threads()) * 8);
  const std::uint64_t step = (total + chunks - 1) / chunks;
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::vector<ScanResult> results(chunks);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(chunks); ++i) {
    const std::uint64_t a = first + std::uint64_t(i) * step;
    const std::uint64_t b = std::min(last, a + step);
    if (a >= b || best.load(std::memory_order_relaxed) < a) continue;
    results[i] = scan(m, k, a, b, &best);
    if (results[i].found) {
      std::uint64_t cur = best.load();
      while (results[i].rank < cur && !best.compare_exchange_weak(cur, results[i].rank)) {
      }
    }
  }
  for (const auto& r : results)
    if (r.found) return scan_result(r, first, last);
  return scan_result({}, first, last);
}

// --- branch and bound -----------------------------------------------------

template <std::size_t W>
struct Unit {
  Bits<W> chosen, excluded;
};

struct Deficit {
  std::uint32_t avail;
  std::uint32_t need;
  std::uint32_t index;
};

enum class Outcome { Found, Exhausted, Aborted };

template <std::size_t W>
class BranchAndBound {
 public:
  BranchAndBound(const Model<W>& m, std::uint32_t k, const Limits& limits,
                 std::atomic<std::uint64_t>& global_nodes, std::function<bool()> cancelled)
      : m_(m), k_(k), limits_(limits), global_(global_nodes), cancelled_(std::move(cancelled)),
        levels_(k + 2), hits_(m.universe, 0) {}

  Outcome run(const Unit<W>& u) {
    nodes_ = 0;
    aborted_ = false;
    const std::uint32_t used = u.chosen.count();
    if (used > k_) return Outcome::Exhausted;
    if (dfs(u.chosen, u.excluded, k_ - used, 0)) return Outcome::Found;
    return aborted_ ? Outcome::Aborted : Outcome::Exhausted;
  }

  std::uint64_t nodes() const { return nodes_; }
  const Bits<W>& witness() const { return witness_; }
  bool budget_hit() const { return budget_hit_; }

 private:
  bool check_stop() {
    if (aborted_) return true;
    const std::uint64_t g = global_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (limits_.nodes && g > *limits_.nodes) {
      budget_hit_ = aborted_ = true;
    } else if ((nodes_ & 0x3ff) == 0 && (limits_.expired())) {
      budget_hit_ = aborted_ = true;
    } else if ((nodes_ & 0x3f) == 0 && cancelled_ && cancelled_()) {
      aborted_ = true;
    }
    return aborted_;
  }

  bool dfs(const Bits<W>& s, const Bits<W>& x, std::uint32_t r, std::size_t depth) {
    ++nodes_;
    if (check_stop()) return false;
    const Bits<W> blocked = s | x;
    auto& defs = levels_[depth];
    defs.clear();
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max(), best_i = 0, total_need = 0;
    for (std::uint32_t i = 0; i < m_.masks.size(); ++i) {
      const std::uint32_t have = s.count_and(m_.masks[i]);
      if (have >= m_.demand[i]) continue;
      const std::uint32_t need = m_.demand[i] - have;
      if (need > r) return false;
      const std::uint32_t avail = m_.masks[i].andnot(blocked).count();
      if (avail < need) return false;
      defs.push_back({avail, need, i});
      total_need += need;
      if (avail < best) {
        best = avail;
        best_i = i;
      }
    }
    if (defs.empty()) {
      witness_ = s;
      return true;
    }
    if (r == 0 || !bounds_ok(defs, blocked, r, total_need)) return false;

    const Bits<W> cand = m_.masks[best_i].andnot(blocked);
    Bits<W> x2 = x;
    bool found = false;
    cand.for_each([&](std::uint32_t c) {
      if (found || aborted_) return;
      Bits<W> s2 = s;
      s2.set(c);
      if (dfs(s2, x2, r - 1, depth + 1)) found = true;
      x2.set(c);
    });
    return found;
  }

  bool bounds_ok(std::vector<Deficit>& defs, const Bits<W>& blocked, std::uint32_t r,
                 std::uint32_t total_need) {
    // Disjoint available sets need separate picks.
    std::sort(defs.begin(), defs.end(), [](const Deficit& a, const Deficit& b) {
      return a.avail != b.avail ? a.avail < b.avail : a.index < b.index;
    });
    Bits<W> used;
    std::uint32_t packed = 0;
    for (const auto& d : defs) {
      const Bits<W> av = m_.masks[d.index].andnot(blocked);
      if (av.intersects(used)) continue;
      used = used | av;
      packed += d.need;
      if (packed > r) return false;
    }
    // Each pick lowers the total deficit by at most the number of deficient
    // constraints it appears in.
    touched_.clear();
    for (const auto& d : defs)
      m_.masks[d.index].andnot(blocked).for_each([&](std::uint32_t e) {
        if (hits_[e]++ == 0) touched_.push_back(e);
      });
    std::vector<std::uint32_t>& top = top_;
    top.clear();
    for (auto e : touched_) {
      top.push_back(hits_[e]);
      hits_[e] = 0;
    }
    const std::size_t take = std::min<std::size_t>(r, top.size());
    std::partial_sort(top.begin(), top.begin() + take, top.end(), std::greater<>());
    std::uint64_t reach = 0;
    for (std::size_t i = 0; i < take; ++i) reach += top[i];
    return reach >= total_need;
  }

  const Model<W>& m_;
  std::uint32_t k_;
  const Limits& limits_;
  std::atomic<std::uint64_t>& global_;
  std::function<bool()> cancelled_;
  std::vector<std::vector<Deficit>> levels_;
  std::vector<std::uint32_t> hits_, touched_, top_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool budget_hit_ = false;
  Bits<W> witness_;
};

template <std::size_t W>
std::vector<Unit<W>> root_units(const Model<W>& m, std::uint32_t k, const std::vector<Permutation>& group) {
  std::vector<Unit<W>> units;
  if (k == 0) {
    units.push_back({});
    return units;
  }
  const std::uint32_t N = m.universe;
  if (group.empty()) {
    // First level of the fail-first branching.
    std::size_t best = 0;
    std::uint32_t best_c = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i < m.masks.size(); ++i) {
      const std::uint32_t c = m.masks[i].count();
      if (c < best_c) {
        best_c = c;
        best = i;
      }
    }
    if (m.masks.empty()) {
      units.push_back({});
      return units;
    }
    Bits<W> ex;
    m.masks[best].for_each([&](std::uint32_t c) {
      Unit<W> u;
      u.chosen.set(c);
      u.excluded = ex;
      units.push_back(u);
      ex.set(c);
    });
    return units;
  }

  // Orbits of a permutation set, listed by smallest element.
  auto orbits = [N](const std::vector<const Permutation*>& gens) {
    std::vector<std::int32_t> label(N, -1);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t x = 0; x < N; ++x) {
      if (label[x] >= 0) continue;
      std::vector<std::uint32_t> orb;
      for (const Permutation* g : gens) {
        const std::uint32_t y = (*g)[x];
        if (label[y] < 0) {
          label[y] = static_cast<std::int32_t>(out.size());
          orb.push_back(y);
        }
      }
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
    return out;
  };

  std::vector<const Permutation*> all;
  for (const auto& g : group) all.push_back(&g);
  Bits<W> excluded;
  for (const auto& orb : orbits(all)) {
    const std::uint32_t r1 = orb.front();
    if (k == 1) {
      Unit<W> u;
      u.chosen.set(r1);
      u.excluded = excluded;
      units.push_back(u);
    } else {
      std::vector<const Permutation*> stab;
      for (const auto& g : group)
        if (g[r1] == r1) stab.push_back(&g);
      Bits<W> ex2 = excluded;
      for (const auto& o2 : orbits(stab)) {
        const std::uint32_t r2 = o2.front();
        if (r2 == r1 || excluded.test(r2)) continue;
        Unit<W> u;
        u.chosen.set(r1);
        u.chosen.set(r2);
        u.excluded = ex2;
        units.push_back(u);
        for (auto y : o2) ex2.set(y);
      }
    }
    for (auto y : orb) excluded.set(y);
  }
  return units;
}

std::vector<std::uint32_t> pad_witness(std::vector<std::uint32_t> w, std::uint32_t k, std::uint32_t universe) {
  std::vector<char> in(universe, 0);
  for (auto e : w) in[e] = 1;
  for (std::uint32_t e = 0; e < universe && w.size() < k; ++e)
    if (!in[e]) w.push_back(e);
  std::sort(w.begin(), w.end());
  return w;
}

template <std::size_t W>
DecideResult bnb_w(const ConstraintSystem& sys, std::uint32_t k, const std::vector<Permutation>& group,
                   bool parallel, const Limits& limits) {
  const Model<W> m(sys);
  DecideResult out;
  out.mode = ProofMode::BranchAndBound;
  if (k > m.universe) return out;
  const auto units = root_units(m, k, group);
  const std::size_t nu = units.size();
  std::vector<std::uint64_t> nodes(nu, 0);
  std::vector<Outcome> outcome(nu, Outcome::Exhausted);
  std::vector<Bits<W>> witness(nu);
  std::atomic<std::uint64_t> global{0};
  std::atomic<std::size_t> winner{nu};

  auto work = [&](std::size_t i) {
    BranchAndBound<W> bb(m, k, limits, global, [&winner, i] { return winner.load(std::memory_order_relaxed) < i; });
    outcome[i] = bb.run(units[i]);
    nodes[i] = bb.nodes();
    if (outcome[i] == Outcome::Found) {
      witness[i] = bb.witness();
      std::size_t cur = winner.load();
      while (i < cur && !winner.compare_exchange_weak(cur, i)) {
      }
    }
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(nu); ++i) {
      if (winner.load(std::memory_order_relaxed) < static_cast<std::size_t>(i)) {
        outcome[i] = Outcome::Aborted;
        continue;
      }
      work(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < nu; ++i) {
      work(i);
      if (outcome[i] != Outcome::Exhausted) break;
    }
  }

  const std::size_t w = winner.load();
  const std::size_t upto = std::min(w + 1, nu);
  for (std::size_t i = 0; i < upto; ++i) {
    out.nodes += nodes[i];
    if (outcome[i] == Outcome::Aborted && i != w) out.decision = Decision::BudgetExceeded;
  }
  if (out.decision == Decision::BudgetExceeded) return out;
  if (w < nu) {
    out.decision = Decision::Feasible;
    out.witness = pad_witness(witness[w].elements(), k, m.universe);
  } else {
    out.decision = Decision::Infeasible;
  }
  return out;
}

template <template <std::size_t> class F, class... Args>
auto dispatch(std::uint32_t universe, Args&&... args) {
  if (universe <= 64) return F<1>::call(std::forward<Args>(args)...);
  if (universe <= 128) return F<2>::call(std::forward<Args>(args)...);
  if (universe <= 256) return F<4>::call(std::forward<Args>(args)...);
  throw Error(ErrorKind::PreconditionUnmet, "search universe exceeds 256 elements");
}

template <std::size_t W>
struct ExSerial {
  static DecideResult call(const ConstraintSystem& s, std::uint32_t k, std::uint64_t a, std::uint64_t b) {
    return exhaustive_serial_w<W>(s, k, a, b);
  }
};
template <std::size_t W>
struct ExParallel {
  static DecideResult call(const ConstraintSystem& s, std::uint32_t k, std::uint64_t a, std::uint64_t b) {
    return exhaustive_parallel_w<W>(s, k, a, b);
  }
};
template <std::size_t W>
struct Bnb {
  static DecideResult call(const ConstraintSystem& s, std::uint32_t k, const std::vector<Permutation>& g,
                           bool parallel, const Limits& l) {
    return bnb_w<W>(s, k, g, parallel, l);
  }
};

// --- checkpoints ----------------------------------------------------------

struct Cursor {
  std::uint64_t next_rank = 0;
  std::uint64_t nodes = 0;
  std::optional<Decision> finished;
  std::vector<std::uint32_t> witness;
};

Cursor load_cursor(const std::string& path, const ConstraintSystem& sys, std::uint32_t k) {
  Cursor c;
  std::ifstream in(path);
  if (!in) return c;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::InvalidArgument, "unreadable checkpoint file " + path);
  }
  if (j.value("kind", "") != to_string(sys.kind) || j.value("q", 0u) != sys.q || j.value("k", 0u) != k)
    return c;  // cursor for another search: start over
  const auto last = j.at("last_combination").get<std::vector<std::uint32_t>>();
  c.next_rank = last.empty() ? 0 : colex_rank(last) + 1;
  c.nodes = j.at("nodes").get<std::uint64_t>();
  const std::string status = j.value("status", "running");
  if (status == "infeasible") c.finished = Decision::Infeasible;
  if (status == "feasible") {
    c.finished = Decision::Feasible;
    c.witness = j.at("witness").get<std::vector<std::uint32_t>>();
  }
  return c;
}

void save_cursor(const std::string& path, const ConstraintSystem& sys, std::uint32_t k, std::uint64_t next_rank,
                 std::uint64_t nodes, const char* status, const std::vector<std::uint32_t>& witness) {
  nlohmann::json j;
  j["kind"] = to_string(sys.kind);
  j["q"] = sys.q;
  j["k"] = k;
  j["last_combination"] = next_rank == 0 ? std::vector<std::uint32_t>{} : colex_unrank(next_rank - 1, k);
  j["nodes"] = nodes;
  j["status"] = status;
  if (!witness.empty()) j["witness"] = witness;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write checkpoint " + path);
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

DecideResult exhaustive_with_limits(const ConstraintSystem& sys, std::uint32_t k, bool parallel,
                                    const Limits& limits, const std::optional<std::string>& checkpoint) {
  constexpr std::uint64_t kBatch = std::uint64_t{1} << 22;
  const std::uint64_t total = binomial(sys.universe, k);
  DecideResult out;
  out.mode = ProofMode::Exhaustive;

  Cursor cur;
  if (checkpoint) cur = load_cursor(*checkpoint, sys, k);
  if (cur.finished) {
    out.decision = *cur.finished;
    out.witness = cur.witness;
    out.nodes = cur.nodes;
    return out;
  }
  std::uint64_t pos = cur.next_rank;
  std::uint64_t nodes = cur.nodes;
  while (pos < total) {
    std::uint64_t end = std::min(total, pos + kBatch);
    if (limits.nodes) {
      if (nodes >= *limits.nodes) break;
      end = std::min(end, pos + (*limits.nodes - nodes));
    }
    const DecideResult d = parallel ? dispatch<ExParallel>(sys.universe, sys, k, pos, end)
                                    : dispatch<ExSerial>(sys.universe, sys, k, pos, end);
    nodes += d.nodes;
    if (d.decision == Decision::Feasible) {
      if (checkpoint) save_cursor(*checkpoint, sys, k, pos + d.nodes, nodes, "feasible", d.witness);
      out.decision = Decision::Feasible;
      out.witness = d.witness;
      out.nodes = nodes;
      return out;
    }
    pos = end;
    if (checkpoint) save_cursor(*checkpoint, sys, k, pos, nodes, pos == total ? "infeasible" : "running", {});
    if (pos < total && limits.expired()) break;
  }
  out.nodes = nodes;
  out.decision = pos >= total ? Decision::Infeasible : Decision::BudgetExceeded;
  return out;
}

Limits make_limits(const SearchOptions& opts, std::chrono::steady_clock::time_point start) {
  Limits l;
  l.nodes = opts.budget_nodes;
  if (opts.budget_seconds)
    l.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(*opts.budget_seconds));
  return l;
}

}  // namespace

DecideResult exhaustive_serial(const ConstraintSystem& sys, std::uint32_t k, std::uint64_t first,
                               std::uint64_t last) {
  return dispatch<ExSerial>(sys.universe, sys, k, first, last);
}

DecideResult exhaustive_parallel(const ConstraintSystem& sys, std::uint32_t k, std::uint64_t first,
                                 std::uint64_t last) {
  return dispatch<ExParallel>(sys.universe, sys, k, first, last);
}

DecideResult branch_and_bound_serial(const ConstraintSystem& sys, std::uint32_t k,
                                     const std::vector<Permutation>& group) {
  return dispatch<Bnb>(sys.universe, sys, k, group, false, Limits{});
}

DecideResult branch_and_bound_parallel(const ConstraintSystem& sys, std::uint32_t k,
                                       const std::vector<Permutation>& group) {
  return dispatch<Bnb>(sys.universe, sys, k, group, true, Limits{});
}

DecideResult decide(const ConstraintSystem& sys, std::uint32_t k, const SearchOptions& opts,
                    const std::vector<Permutation>& group) {
  const auto start = std::chrono::steady_clock::now();
  const Limits limits = make_limits(opts, start);
  if (k > sys.universe) return {};
  SearchMethod method = opts.method;
  if (method == SearchMethod::Auto)
    method = binomial(sys.universe, k) <= kExhaustiveLimit ? SearchMethod::Exhaustive : SearchMethod::BranchAndBound;
  if (method == SearchMethod::Exhaustive) return exhaustive_with_limits(sys, k, opts.parallel, limits, opts.checkpoint);
  static const std::vector<Permutation> kNone;
  return dispatch<Bnb>(sys.universe, sys, k, opts.symmetry ? group : kNone, opts.parallel, limits);
}

// ---------------------------------------------------------------------------
// Minimization.

bool verify_kind(const MixedSet& s, SearchKind kind, const Plane& plane) {
  switch (kind) {
    case SearchKind::Resolving: return is_resolving(s, plane).ok;
    case SearchKind::SemiResolving: return s.lines.empty() && is_semi_resolving(s.points, plane).ok;
    case SearchKind::DoubleBlocking:
      return s.lines.empty() && secant_profile(s.points, plane).is_double_blocking;
  }
  return false;
}

MixedSet known_upper_bound(const Plane& plane, SearchKind kind) {
  const std::uint32_t q = plane.order();
  const bool square = q >= 9 && exact_sqrt(q).has_value();
  switch (kind) {
    case SearchKind::Resolving:
      if (q == 2) return fano_resolving5(plane).set;
      if (q == 4) return hyperoval_resolving10(plane).set;
      return canonical_4q4(plane).set;
    case SearchKind::SemiResolving: {
      if (q == 2) {
        PointSet all(plane.size());
        std::iota(all.begin(), all.end(), 0u);
        return MixedSet(all, {});
      }
      MixedSet best = vertexless_triangle(plane, q >= 4).set;
      if (square) {
        MixedSet b = baer_pair_semi_resolving(plane).set;
        if (b.size() < best.size()) best = b;
      }
      return best;
    }
    case SearchKind::DoubleBlocking: {
      MixedSet best = three_line_double_blocking(plane).set;
      if (square) {
        MixedSet b = baer_pair_double_blocking(plane).set;
        if (b.size() < best.size()) best = b;
      }
      return best;
    }
  }
  return {};
}

SearchResult min_search(const Plane& plane, SearchKind kind, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SearchResult res;
  res.kind = kind;
  res.q = plane.order();
  res.witness = known_upper_bound(plane, kind);
  if (!verify_kind(res.witness, kind, plane)) throw std::logic_error("starting set fails verification");
  res.optimum = static_cast<std::uint32_t>(res.witness.size());

  const ConstraintSystem sys = build_constraints(plane, kind);
  std::vector<Permutation> group;
  if (opts.symmetry) {
    try {
      group = symmetry_group(plane, kind);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::FieldTooLarge) throw;
    }
  }

  const long q = plane.order();
  for (std::uint32_t k = res.optimum; k-- > 0;) {
    SearchOptions phase = opts;
    if (opts.budget_nodes) {
      if (res.nodes_explored >= *opts.budget_nodes) {
        res.budget_exceeded = true;
        break;
      }
      phase.budget_nodes = *opts.budget_nodes - res.nodes_explored;
    }
    if (opts.budget_seconds) {
      const double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      phase.budget_seconds = std::max(0.0, *opts.budget_seconds - used);
    }
    SearchMethod method = opts.method;
    if (method == SearchMethod::Auto)
      method = binomial(sys.universe, k) <= kExhaustiveLimit ? SearchMethod::Exhaustive
                                                              : SearchMethod::BranchAndBound;
    // No semi-resolving set has fewer than 2q-1 points.
    if (kind == SearchKind::SemiResolving && method == SearchMethod::BranchAndBound && long(k) < 2 * q - 1) {
      res.proof_mode = ProofMode::BranchAndBound;
      return res;
    }
    phase.method = method;
    const DecideResult d = decide(sys, k, phase, group);
    res.nodes_explored += d.nodes;
    if (d.decision == Decision::Feasible) {
      MixedSet w = sys.to_set(d.witness);
      if (!verify_kind(w, kind, plane)) throw std::logic_error("search witness fails verification");
      res.witness = std::move(w);
      res.optimum = k;
      continue;
    }
    if (d.decision == Decision::Infeasible) {
      res.proof_mode = d.mode;
      return res;
    }
    res.budget_exceeded = true;
    break;
  }
  if (res.optimum == 0 && !res.budget_exceeded) return res;
  res.proof_mode = ProofMode::UpperBoundOnly;
  return res;
}

SearchResult min_resolving(const Plane& plane, const SearchOptions& opts) {
  return min_search(plane, SearchKind::Resolving, opts);
}

SearchResult min_semi_resolving(const Plane& plane, const SearchOptions& opts) {
  return min_search(plane, SearchKind::SemiResolving, opts);
}

SearchResult min_double_blocking(const Plane& plane, const SearchOptions& opts) {
  return min_search(plane, SearchKind::DoubleBlocking, opts);
}

NoSmallerCertificate verify_no_smaller(const Plane& plane, std::uint32_t k, SearchKind kind,
                                       const SearchOptions& opts) {
  const ConstraintSystem sys = build_constraints(plane, kind);
  SearchOptions o = opts;
  o.method = SearchMethod::Exhaustive;
  const DecideResult d = decide(sys, k, o);
  if (d.decision == Decision::BudgetExceeded)
    throw Error(ErrorKind::BudgetExceeded, "refutation of size " + std::to_string(k) + " ran out of budget");
  NoSmallerCertificate cert;
  cert.nodes = d.nodes;
  cert.holds = d.decision == Decision::Infeasible;
  if (!cert.holds) {
    MixedSet w = sys.to_set(d.witness);
    if (!verify_kind(w, kind, plane)) throw std::logic_error("search witness fails verification");
    cert.witness = std::move(w);
  }
  return cert;
}

}  // namespace pgres
