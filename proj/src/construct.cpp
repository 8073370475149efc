#include "pgres/construct.hpp"

#include <algorithm>
#include <numeric>

namespace pgres {

std::optional<std::uint32_t> exact_sqrt(std::uint32_t q) {
  std::uint32_t r = 0;
  while (std::uint64_t(r + 1) * (r + 1) <= q) ++r;
  if (r * r == q) return r;
  return std::nullopt;
}

MixedSet dual(const MixedSet& s) { return MixedSet(s.lines, s.points); }

namespace {

std::vector<std::uint32_t> without(std::span<const std::uint32_t> xs,
                                   std::initializer_list<std::uint32_t> drop) {
  std::vector<std::uint32_t> out;
  for (auto x : xs)
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  return out;
}

void append(std::vector<std::uint32_t>& out, std::span<const std::uint32_t> xs) {
  out.insert(out.end(), xs.begin(), xs.end());
}

PointId point_at(const Plane& plane, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
  return plane.index_of({Elem{x}, Elem{y}, Elem{z}});
}

void require_order(const Plane& plane, std::uint32_t q, const char* what) {
  if (plane.order() != q) throw Error(ErrorKind::WrongOrder, what);
}

}  // namespace

Construction canonical_4q4(const Plane& plane, PointId p, PointId q, PointId r) {
  const std::uint32_t n = plane.size();
  if (p >= n || q >= n || r >= n) throw Error(ErrorKind::InvalidArgument, "point index out of range");
  if (p == q || p == r || q == r) throw Error(ErrorKind::EqualArguments, "triangle vertices must differ");
  const LineId pq = plane.line_through(p, q);
  if (plane.incident(r, pq)) throw Error(ErrorKind::CollinearPoints, "triangle vertices are collinear");
  const LineId pr = plane.line_through(p, r);
  const LineId rq = plane.line_through(r, q);

  std::vector<PointId> pts = without(plane.points_on(pq), {p, q, r});
  append(pts, without(plane.points_on(pr), {p, q, r}));
  std::vector<LineId> lns = without(plane.lines_through(p), {pq, pr, rq});
  append(lns, without(plane.lines_through(r), {pq, pr, rq}));

  Construction c;
  c.name = "canonical_4q4";
  c.set = MixedSet(std::move(pts), std::move(lns));
  c.params = {{"P", p}, {"Q", q}, {"R", r}};
  return c;
}

Construction canonical_4q4(const Plane& plane) {
  const LineId l = plane.line_through(0, 1);
  PointId r = 0;
  while (plane.incident(r, l)) ++r;
  return canonical_4q4(plane, 0, 1, r);
}

Construction fano_resolving5(const Plane& plane) {
  require_order(plane, 2, "the five-element set lives in PG(2,2)");
  const PointId a = 0, b = 1;
  PointId c = 0;
  while (plane.incident(c, plane.line_through(a, b))) ++c;
  const LineId ab = plane.line_through(a, b), ac = plane.line_through(a, c),
               bc = plane.line_through(b, c);
  auto third = [&](PointId v, LineId x, LineId y) {
    for (LineId l : plane.lines_through(v))
      if (l != x && l != y) return l;
    throw Error(ErrorKind::InvalidArgument, "no third line");
  };
  Construction out;
  out.name = "fano5";
  out.set = MixedSet({a, b, c}, {third(a, ab, ac), third(b, ab, bc)});
  out.params = {{"A", a}, {"B", b}, {"C", c}};
  return out;
}

PointSet hyperoval(const Plane& plane) {
  const Field& F = plane.field();
  if (F.characteristic() != 2) throw Error(ErrorKind::OddOrder, "hyperovals need even order");
  std::vector<PointId> pts;
  for (std::uint32_t t = 0; t < F.order(); ++t) {
    const Elem te{t};
    pts.push_back(plane.index_of({F.one(), te, F.mul(te, te)}));
  }
  pts.push_back(point_at(plane, 0, 0, F.one().v));
  pts.push_back(plane.vertical_point());
  return make_set(std::move(pts));
}

LineSet dual_hyperoval(const Plane& plane) {
  const auto sec = secant_counts(hyperoval(plane), plane);
  LineSet out;
  for (LineId l = 0; l < plane.size(); ++l)
    if (sec[l] == 0) out.push_back(l);
  return out;
}

Construction hyperoval_resolving10(const Plane& plane) {
  require_order(plane, 4, "the ten-element set lives in PG(2,4)");
  PointSet o = hyperoval(plane);
  LineSet od = dual_hyperoval(plane);
  Construction c;
  c.name = "hyperoval10";
  c.params = {{"dropped_point", o.front()}, {"dropped_line", od.front()}};
  o.erase(o.begin());
  od.erase(od.begin());
  c.set = MixedSet(std::move(o), std::move(od));
  return c;
}

// ---------------------------------------------------------------------------
// S* and its completions.

std::map<std::string, std::uint32_t> SStarFrame::params() const {
  std::map<std::string, std::uint32_t> m{{"e", e},   {"f", f},        {"P", p},  {"R", r},
                                         {"R_prime", r_prime}, {"Q", q}, {"l0", l0}, {"l1", l1}};
  if (t) m["T"] = *t;
  return m;
}

namespace {

void check_frame(const Plane& pl, LineId e, LineId f, PointId r, PointId rp, PointId q, LineId l0,
                 LineId l1) {
  const std::uint32_t n = pl.size();
  for (auto x : {e, f, r, rp, q, l0, l1})
    if (x >= n) throw Error(ErrorKind::InvalidArgument, "frame index out of range");
  auto bad = [](const char* m) { throw Error(ErrorKind::InvalidArgument, m); };
  if (e == f) bad("e and f must differ");
  const PointId p = pl.meet(e, f);
  if (!pl.incident(r, e) || !pl.incident(rp, e) || r == p || rp == p || r == rp)
    bad("R and R' must be distinct points of e other than P");
  if (!pl.incident(q, f) || q == p) bad("Q must be a point of f other than P");
  if (!pl.incident(p, l0) || l0 == e || l0 == f) bad("l0 must pass through P and differ from e, f");
  if (!pl.incident(r, l1) || l1 == e) bad("l1 must pass through R and differ from e");
}

}  // namespace

SStarFrame s_star(const Plane& pl, const SStarParams& in) {
  if (!in.e || !in.f || !in.r || !in.r_prime || !in.q || !in.l0 || !in.l1)
    throw Error(ErrorKind::InvalidArgument, "s_star needs e, f, R, R', Q, l0 and l1");
  check_frame(pl, *in.e, *in.f, *in.r, *in.r_prime, *in.q, *in.l0, *in.l1);
  SStarFrame s;
  s.e = *in.e;
  s.f = *in.f;
  s.p = pl.meet(s.e, s.f);
  s.r = *in.r;
  s.r_prime = *in.r_prime;
  s.q = *in.q;
  s.l0 = *in.l0;
  s.l1 = *in.l1;
  if (!pl.incident(s.q, s.l1)) s.t = pl.meet(s.f, s.l1);

  std::vector<PointId> pts = without(pl.points_on(s.e), {s.p, s.r, s.r_prime});
  append(pts, without(pl.points_on(s.f), {s.p, s.q}));
  std::vector<LineId> lns = without(pl.lines_through(s.p), {s.e, s.f, s.l0});
  append(lns, without(pl.lines_through(s.r), {s.e, s.l1}));
  s.points = make_set(std::move(pts));
  s.lines = make_set(std::move(lns));
  return s;
}

namespace {

// Named points and lines of a frame used by the completions.
struct Geometry {
  const Plane* pl = nullptr;
  SStarFrame s;
  LineId rq = 0, rpq = 0, rpt = 0;
  PointId x01 = 0, x0rq = 0, x0rpq = 0, x1rpq = 0, x0rpt = 0;

  bool on(PointId p, LineId l) const { return pl->incident(p, l); }
  LineId join(PointId a, PointId b) const { return pl->line_through(a, b); }
};

Geometry make_geometry(const Plane& pl, const SStarFrame& s) {
  Geometry g;
  g.pl = &pl;
  g.s = s;
  g.rq = pl.line_through(s.r, s.q);
  g.rpq = pl.line_through(s.r_prime, s.q);
  g.x01 = pl.meet(s.l0, s.l1);
  g.x0rq = pl.meet(s.l0, g.rq);
  g.x0rpq = pl.meet(s.l0, g.rpq);
  g.x1rpq = pl.meet(s.l1, g.rpq);
  if (s.t) {
    g.rpt = pl.line_through(s.r_prime, *s.t);
    g.x0rpt = pl.meet(s.l0, g.rpt);
  }
  return g;
}

enum class Extra { None, U, V, Z };

Extra extra_kind(int id) {
  switch (id) {
    case 10: case 12: case 17: case 18: case 19: case 20: case 21: case 22: return Extra::U;
    case 24: return Extra::V;
    case 15: case 16: case 29: case 30: case 31: case 32: return Extra::Z;
    default: return Extra::None;
  }
}

// Candidate values of the free object, in index order.
std::vector<PointId> extra_domain(int id, const Geometry& g) {
  const SStarFrame& s = g.s;
  const Plane& pl = *g.pl;
  switch (extra_kind(id)) {
    case Extra::None: return {0};
    case Extra::U: return without(pl.points_on(s.e), {s.p, s.r, s.r_prime});
    case Extra::V: return s.t ? without(pl.points_on(s.f), {s.p, s.q, *s.t}) : std::vector<PointId>{};
    case Extra::Z: break;
  }
  if (!s.t) return {};
  switch (id) {
    case 15: case 31: return without(pl.points_on(s.l1), {*s.t});
    case 16: case 32: return without(pl.points_on(g.rpt), {s.r_prime, *s.t});
    case 29: return without(pl.points_on(s.l0), {g.x0rpq});
    case 30: return without(pl.points_on(g.rpq), {g.x0rpq, s.r_prime, s.q});
  }
  return {};
}

struct Completion {
  std::vector<PointId> points;
  std::vector<LineId> lines;
};

Completion pl_(std::initializer_list<PointId> p, std::initializer_list<LineId> l) { return {p, l}; }

// The two objects added to S* by completion `id`, or nothing when the
// frame violates the completion's incidence conditions.
std::optional<Completion> complete(int id, const Geometry& g, PointId x) {
  const SStarFrame& s = g.s;
  const bool q_on_l1 = !s.t.has_value();
  switch (id) {
    case 1: return pl_({}, {s.l0, s.l1});
    case 2: return pl_({}, {g.rpq, s.l1});
    case 3: return pl_({s.q}, {s.l1});
    case 4: return pl_({g.x0rq}, {s.l1});
    case 5: if (!q_on_l1) return std::nullopt; return pl_({s.q}, {g.rpq});
    case 6: if (!q_on_l1) return std::nullopt; return pl_({s.r_prime}, {s.l0});
    default: break;
  }
  if (q_on_l1) return std::nullopt;
  const PointId t = *s.t;
  const bool x0rq_on_rpt = g.on(g.x0rq, g.rpt);
  const bool x01_on_rpq = g.on(g.x01, g.rpq);
  switch (id) {
    case 7: return pl_({}, {s.l0, g.rpt});
    case 8: return pl_({}, {g.rpq, g.rpt});
    case 9: return pl_({s.r_prime}, {s.f});
    case 10: return pl_({s.r_prime}, {g.join(x, s.q)});
    case 11: return pl_({s.r_prime}, {s.l0});
    case 12: return pl_({s.r_prime}, {g.join(x, g.x0rq)});
    case 13: if (!x0rq_on_rpt) break; return pl_({g.x0rq}, {s.e});
    case 14: if (x01_on_rpq) break; return pl_({g.x01}, {s.f});
    case 15: return pl_({x}, {s.l0});
    case 16: return pl_({x}, {s.l0});
    case 17: {
      if (!x0rq_on_rpt) break;
      const LineId l = g.join(x, g.x01);
      if (g.on(s.q, l)) break;
      return pl_({g.x0rq}, {l});
    }
    case 18: if (x01_on_rpq) break; return pl_({g.x01}, {g.join(x, g.x0rq)});
    case 19: {
      const LineId l = g.join(x, s.q);
      if (x01_on_rpq || g.on(g.x01, l)) break;
      return pl_({g.x01}, {l});
    }
    case 20: case 21: case 22: {
      const LineId l = g.join(x, s.q);
      if (!g.on(g.x01, l)) break;
      const PointId pt = id == 20 ? g.x01 : id == 21 ? g.x0rpt : g.x1rpq;
      return pl_({pt}, {l});
    }
    case 23: if (!x01_on_rpq) break; return pl_({g.x01}, {g.rpq});
    case 24: {
      if (!x0rq_on_rpt) break;
      const LineId l = g.join(s.r_prime, x);
      if (g.on(g.x01, l) || g.on(g.x0rq, l)) break;
      return pl_({g.x0rq}, {l});
    }
    case 25: case 26: case 27: {
      const LineId l = g.join(s.r_prime, g.x0rq);
      const PointId v = g.pl->meet(l, s.f);
      if (v == s.p || v == t || v == s.q || g.on(g.x01, l)) break;
      if (id != 25 && x01_on_rpq) break;
      const PointId pt = id == 25 ? g.x0rpt : id == 26 ? g.x01 : g.x1rpq;
      return pl_({pt}, {l});
    }
    case 28: if (x0rq_on_rpt) break; return pl_({g.x0rq}, {g.rpt});
    case 29: case 30: if (!x0rq_on_rpt) break; return pl_({x}, {g.rpt});
    case 31: case 32: if (x01_on_rpq) break; return pl_({x}, {g.rpq});
    default: break;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> domain(const std::optional<std::uint32_t>& given,
                                  std::span<const std::uint32_t> all) {
  if (given) {
    if (std::find(all.begin(), all.end(), *given) == all.end()) return {};
    return {*given};
  }
  return {all.begin(), all.end()};
}

std::vector<std::uint32_t> iota_n(std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return v;
}

struct Solution {
  SStarFrame frame;
  Completion added;
  std::optional<PointId> extra;
};

class FrameSolver {
 public:
  FrameSolver(int id, const Plane& pl, const SStarParams& in) : id_(id), pl_(pl), in_(in) {
    // Frames with only e, f, R, R', Q fixed are all equivalent under
    // collineations, so without inner constraints one outer frame suffices.
    search_all_outer_ = in.l0 || in.l1 || in.u || in.v || in.z;
  }

  std::optional<Solution> run() {
    const auto lines = iota_n(pl_.size());
    for (LineId e : domain(in_.e, lines)) {
      if (in_.r && !pl_.incident(*in_.r, e)) continue;
      if (in_.r_prime && !pl_.incident(*in_.r_prime, e)) continue;
      if (in_.q && pl_.incident(*in_.q, e)) continue;
      if ((in_.l0 && *in_.l0 == e) || (in_.l1 && *in_.l1 == e)) continue;
      for (LineId f : domain(in_.f, lines)) {
        if (f == e) continue;
        const PointId p = pl_.meet(e, f);
        if (in_.q && (!pl_.incident(*in_.q, f) || *in_.q == p)) continue;
        if (in_.l0 && (*in_.l0 == f || !pl_.incident(p, *in_.l0))) continue;
        if (in_.l1 && pl_.incident(p, *in_.l1)) continue;
        for (PointId r : domain(in_.r, pl_.points_on(e))) {
          if (r == p) continue;
          if (in_.l1 && !pl_.incident(r, *in_.l1)) continue;
          for (PointId rp : domain(in_.r_prime, pl_.points_on(e))) {
            if (rp == p || rp == r) continue;
            for (PointId q : domain(in_.q, pl_.points_on(f))) {
              if (q == p) continue;
              if (auto sol = inner(e, f, p, r, rp, q)) return sol;
              if (!search_all_outer_) return std::nullopt;
            }
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::optional<Solution> inner(LineId e, LineId f, PointId p, PointId r, PointId rp, PointId q) {
    for (LineId l0 : domain(in_.l0, pl_.lines_through(p))) {
      if (l0 == e || l0 == f) continue;
      for (LineId l1 : domain(in_.l1, pl_.lines_through(r))) {
        if (l1 == e) continue;
        SStarParams full{e, f, r, rp, q, l0, l1, {}, {}, {}};
        const Geometry g = make_geometry(pl_, s_star(pl_, full));
        const Extra kind = extra_kind(id_);
        const std::optional<PointId> given = kind == Extra::U   ? in_.u
                                             : kind == Extra::V ? in_.v
                                             : kind == Extra::Z ? in_.z
                                                                : std::nullopt;
        for (PointId x : domain(given, extra_domain(id_, g))) {
          if (auto c = complete(id_, g, x)) {
            Solution sol{g.s, std::move(*c), std::nullopt};
            if (kind != Extra::None) sol.extra = x;
            return sol;
          }
        }
      }
    }
    return std::nullopt;
  }

  int id_;
  const Plane& pl_;
  const SStarParams& in_;
  bool search_all_outer_ = false;
};

}  // namespace

Construction construction_c(int id, const Plane& pl, const SStarParams& params) {
  if (id < 1 || id > kConstructionCount)
    throw Error(ErrorKind::InvalidId, "construction id must be in 1..32");
  if (pl.order() < 4) throw Error(ErrorKind::OrderTooSmall, "completions of S* need q >= 4");
  const Extra kind = extra_kind(id);
  if ((params.u && kind != Extra::U) || (params.v && kind != Extra::V) || (params.z && kind != Extra::Z))
    throw Error(ErrorKind::InvalidArgument, "parameter not used by this construction");

  const auto sol = FrameSolver(id, pl, params).run();
  if (!sol)
    throw Error(ErrorKind::SideConditionInfeasible,
                "no frame satisfies the conditions of construction C" + std::to_string(id));

  std::vector<PointId> pts = sol->frame.points;
  std::vector<LineId> lns = sol->frame.lines;
  append(pts, sol->added.points);
  append(lns, sol->added.lines);

  Construction c;
  c.name = "C" + std::to_string(id);
  c.set = MixedSet(std::move(pts), std::move(lns));
  c.params = sol->frame.params();
  if (sol->extra) c.params[kind == Extra::U ? "U" : kind == Extra::V ? "V" : "Z"] = *sol->extra;
  if (!sol->added.points.empty()) c.params["added_point"] = sol->added.points.front();
  for (std::size_t i = 0; i < sol->added.lines.size(); ++i)
    c.params[i == 0 ? "added_line" : "added_line_2"] = sol->added.lines[i];
  return c;
}

// ---------------------------------------------------------------------------
// Baer subplanes and blocking sets.

PointSet baer_subplane(const Plane& plane) {
  const auto r = exact_sqrt(plane.order());
  if (!r) throw Error(ErrorKind::NotASquare, "Baer subplanes need square order");
  const auto sub = subfield_elements(plane.field(), *r);
  std::vector<char> in(plane.order(), 0);
  for (Elem x : sub) in[x.v] = 1;
  PointSet out;
  for (PointId p = 0; p < plane.size(); ++p) {
    const Coords& c = plane.point_coords(p);
    if (in[c[0].v] && in[c[1].v] && in[c[2].v]) out.push_back(p);
  }
  return out;
}

std::vector<PointSet> baer_partition(const Plane& plane) {
  const auto r = exact_sqrt(plane.order());
  if (!r) throw Error(ErrorKind::NotASquare, "Baer partitions need square order");
  const std::uint32_t q = plane.order();
  const Permutation sigma = singer_cycle(plane);
  // tau = sigma^(q - r + 1) has order q + r + 1.
  Permutation tau = iota_n(plane.size());
  for (std::uint32_t i = 0; i < q - *r + 1; ++i) tau = compose(sigma, tau);

  std::vector<char> seen(plane.size(), 0);
  std::vector<PointSet> parts;
  for (PointId p = 0; p < plane.size(); ++p) {
    if (seen[p]) continue;
    PointSet orbit;
    for (PointId x = p; !seen[x]; x = tau[x]) {
      seen[x] = 1;
      orbit.push_back(x);
    }
    parts.push_back(make_set(std::move(orbit)));
  }
  return parts;
}

std::array<PointSet, 2> disjoint_baer_pair(const Plane& plane) {
  auto parts = baer_partition(plane);
  return {std::move(parts[0]), std::move(parts[1])};
}

bool is_baer_subplane(std::span<const PointId> s, const Plane& plane) {
  const auto r = exact_sqrt(plane.order());
  if (!r) return false;
  if (make_set({s.begin(), s.end()}).size() != plane.order() + *r + 1) return false;
  for (auto c : secant_counts(s, plane))
    if (c != 1 && c != *r + 1) return false;
  return true;
}

PointSet semi_from_double_blocking(const Plane& plane, std::span<const PointId> b, PointId drop) {
  if (!secant_profile(b, plane).is_double_blocking)
    throw Error(ErrorKind::NotDoubleBlocking, "input is not a double blocking set");
  if (std::find(b.begin(), b.end(), drop) == b.end())
    throw Error(ErrorKind::InvalidArgument, "dropped point is not in the set");
  return without(make_set({b.begin(), b.end()}), {drop});
}

PointSet semi_from_blocking_pair(const Plane& plane, std::span<const PointId> b1,
                                 std::span<const PointId> b2, PointId drop1, PointId drop2) {
  const PointSet s1 = make_set({b1.begin(), b1.end()});
  const PointSet s2 = make_set({b2.begin(), b2.end()});
  PointSet common;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(common));
  if (!common.empty() || !secant_profile(s1, plane).is_blocking || !secant_profile(s2, plane).is_blocking)
    throw Error(ErrorKind::NotDisjointBlockingPair, "inputs are not two disjoint blocking sets");
  if (!std::binary_search(s1.begin(), s1.end(), drop1) || !std::binary_search(s2.begin(), s2.end(), drop2))
    throw Error(ErrorKind::NotDisjointBlockingPair, "one point must be dropped from each blocking set");
  PointSet out = without(s1, {drop1});
  append(out, without(s2, {drop2}));
  return make_set(std::move(out));
}

Construction baer_pair_semi_resolving(const Plane& plane) {
  const auto [b1, b2] = disjoint_baer_pair(plane);
  Construction c;
  c.name = "baer_pair";
  c.set = MixedSet(semi_from_blocking_pair(plane, b1, b2, b1.front(), b2.front()), {});
  c.params = {{"dropped_1", b1.front()}, {"dropped_2", b2.front()}};
  return c;
}

Construction baer_pair_double_blocking(const Plane& plane) {
  const auto [b1, b2] = disjoint_baer_pair(plane);
  PointSet u = b1;
  append(u, b2);
  Construction c;
  c.name = "baer_pair_union";
  c.set = MixedSet(std::move(u), {});
  return c;
}

namespace {

PointSet triangle_points(const Plane& plane, bool with_vertices) {
  const std::uint32_t one = plane.field().one().v;
  const std::array<LineId, 3> sides{point_at(plane, one, 0, 0), point_at(plane, 0, one, 0),
                                    point_at(plane, 0, 0, one)};
  const std::array<PointId, 3> vertices = sides;  // dual indexing: vertex i is off side i only
  std::vector<PointId> pts;
  for (LineId l : sides) append(pts, plane.points_on(l));
  pts = make_set(std::move(pts));
  if (!with_vertices) pts = without(pts, {vertices[0], vertices[1], vertices[2]});
  return pts;
}

}  // namespace

Construction vertexless_triangle(const Plane& plane, bool drop_extra) {
  const std::uint32_t q = plane.order();
  if (q < 3 || (drop_extra && q < 4))
    throw Error(ErrorKind::OrderTooSmall, drop_extra ? "needs q >= 4" : "needs q >= 3");
  PointSet pts = triangle_points(plane, false);
  Construction c;
  c.name = drop_extra ? "vertexless_triangle_minus_one" : "vertexless_triangle";
  if (drop_extra) {
    c.params["dropped"] = pts.front();
    pts.erase(pts.begin());
  }
  c.set = MixedSet(std::move(pts), {});
  return c;
}

Construction three_line_double_blocking(const Plane& plane) {
  Construction c;
  c.name = "three_lines";
  c.set = MixedSet(triangle_points(plane, true), {});
  return c;
}

}  // namespace pgres
