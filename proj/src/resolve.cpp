#include "pgres/resolve.hpp"

#include <algorithm>
#include <map>

namespace pgres {

PointSet make_set(std::vector<std::uint32_t> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

MixedSet::MixedSet(PointSet pts, LineSet lns)
    : points(make_set(std::move(pts))), lines(make_set(std::move(lns))) {}

int distance(Vertex u, Vertex v, const Plane& plane) {
  if (u.kind == v.kind) return u.index == v.index ? 0 : 2;
  const PointId p = u.kind == Vertex::Kind::Point ? u.index : v.index;
  const LineId l = u.kind == Vertex::Kind::Line ? u.index : v.index;
  return plane.incident(p, l) ? 1 : 3;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::SkewLinePair: return "SkewLinePair";
    case ViolationKind::UncoveredPointPair: return "UncoveredPointPair";
    case ViolationKind::TangentPairThroughInnerPoint: return "TangentPairThroughInnerPoint";
    case ViolationKind::OneCoveredPairOnInnerLine: return "OneCoveredPairOnInnerLine";
    case ViolationKind::DistanceListCollision: return "DistanceListCollision";
  }
  return "Unknown";
}

namespace {

std::vector<char> membership(std::span<const std::uint32_t> xs, std::uint32_t n) {
  std::vector<char> in(n, 0);
  for (auto x : xs) {
    if (x >= n) throw Error(ErrorKind::InvalidArgument, "index out of range");
    in[x] = 1;
  }
  return in;
}

// Cover counts of points by a line set; symmetric to secant_counts.
std::vector<std::uint32_t> cover_counts(std::span<const LineId> lines, const Plane& plane) {
  std::vector<std::uint32_t> c(plane.size(), 0);
  for (LineId l : lines)
    for (PointId p : plane.points_on(l)) ++c[p];
  return c;
}

// Emits (first, other) pairs when more than one item is present.
void pair_up(ViolationKind kind, std::vector<std::uint32_t> prefix,
             const std::vector<std::uint32_t>& items, std::vector<Violation>& out) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    std::vector<std::uint32_t> w = prefix;
    w.push_back(items[0]);
    w.push_back(items[i]);
    out.push_back({kind, std::move(w)});
  }
}

VerifyStats point_stats(std::span<const PointId> pts, std::span<const std::uint32_t> secants,
                        const Plane& plane) {
  VerifyStats st;
  st.points = pts.size();
  for (auto s : secants) {
    if (s == 0) st.t += 2;
    else if (s == 1) st.t += 1;
  }
  st.beta = static_cast<long>(pts.size()) - 2 * static_cast<long>(plane.order());
  return st;
}

}  // namespace

std::vector<std::uint32_t> secant_counts(std::span<const PointId> a, const Plane& plane) {
  std::vector<std::uint32_t> c(plane.size(), 0);
  for (PointId p : a) {
    if (p >= plane.size()) throw Error(ErrorKind::InvalidArgument, "point index out of range");
    for (LineId l : plane.lines_through(p)) ++c[l];
  }
  return c;
}

VerifyReport is_resolving_naive(const MixedSet& s, const Plane& plane) {
  const std::uint32_t n = plane.size();
  std::map<std::vector<std::uint8_t>, std::uint32_t> seen;
  VerifyReport rep;
  std::vector<std::uint8_t> key(s.size());
  for (std::uint32_t v = 0; v < 2 * n; ++v) {
    const Vertex x{v < n ? Vertex::Kind::Point : Vertex::Kind::Line, v < n ? v : v - n};
    std::size_t k = 0;
    for (PointId p : s.points) key[k++] = static_cast<std::uint8_t>(distance(x, {Vertex::Kind::Point, p}, plane));
    for (LineId l : s.lines) key[k++] = static_cast<std::uint8_t>(distance(x, {Vertex::Kind::Line, l}, plane));
    auto [it, inserted] = seen.emplace(key, v);
    if (!inserted) {
      rep.ok = false;
      rep.violations.push_back({ViolationKind::DistanceListCollision, {it->second, v}});
      break;
    }
  }
  const auto sec = secant_counts(s.points, plane);
  rep.stats = point_stats(s.points, sec, plane);
  rep.stats.lines = s.lines.size();
  return rep;
}

VerifyReport is_resolving(const MixedSet& s, const Plane& plane) {
  const std::uint32_t n = plane.size();
  const auto in_p = membership(s.points, n);
  const auto in_l = membership(s.lines, n);
  const auto sec = secant_counts(s.points, plane);
  const auto cov = cover_counts(s.lines, plane);
  VerifyReport rep;

  std::vector<std::uint32_t> items;
  for (LineId l = 0; l < n; ++l)
    if (!in_l[l] && sec[l] == 0) items.push_back(l);
  pair_up(ViolationKind::SkewLinePair, {}, items, rep.violations);

  items.clear();
  for (PointId p = 0; p < n; ++p)
    if (!in_p[p] && cov[p] == 0) items.push_back(p);
  pair_up(ViolationKind::UncoveredPointPair, {}, items, rep.violations);

  for (PointId p : s.points) {
    items.clear();
    for (LineId l : plane.lines_through(p))
      if (!in_l[l] && sec[l] == 1) items.push_back(l);
    pair_up(ViolationKind::TangentPairThroughInnerPoint, {p}, items, rep.violations);
  }

  for (LineId l : s.lines) {
    items.clear();
    for (PointId p : plane.points_on(l))
      if (!in_p[p] && cov[p] == 1) items.push_back(p);
    pair_up(ViolationKind::OneCoveredPairOnInnerLine, {l}, items, rep.violations);
  }

  rep.ok = rep.violations.empty();
  rep.stats = point_stats(s.points, sec, plane);
  rep.stats.lines = s.lines.size();
  return rep;
}

VerifyReport is_semi_resolving(std::span<const PointId> a, const Plane& plane) {
  const std::uint32_t n = plane.size();
  membership(a, n);
  const auto sec = secant_counts(a, plane);
  VerifyReport rep;

  std::vector<std::uint32_t> items;
  for (LineId l = 0; l < n; ++l)
    if (sec[l] == 0) items.push_back(l);
  pair_up(ViolationKind::SkewLinePair, {}, items, rep.violations);

  for (PointId p : a) {
    items.clear();
    for (LineId l : plane.lines_through(p))
      if (sec[l] == 1) items.push_back(l);
    pair_up(ViolationKind::TangentPairThroughInnerPoint, {p}, items, rep.violations);
  }
  rep.ok = rep.violations.empty();
  rep.stats = point_stats(a, sec, plane);
  return rep;
}

bool has_distinct_line_distance_lists(std::span<const PointId> a, const Plane& plane) {
  std::map<std::vector<std::uint8_t>, LineId> seen;
  std::vector<std::uint8_t> key(a.size());
  for (LineId l = 0; l < plane.size(); ++l) {
    for (std::size_t i = 0; i < a.size(); ++i)
      key[i] = static_cast<std::uint8_t>(distance({Vertex::Kind::Line, l}, {Vertex::Kind::Point, a[i]}, plane));
    if (!seen.emplace(key, l).second) return false;
  }
  return true;
}

VerifyReport is_split_resolving(std::span<const PointId> points, std::span<const LineId> lines,
                                const Plane& plane) {
  VerifyReport rep = is_semi_resolving(points, plane);
  const auto dual = dualize(lines);
  const VerifyReport line_side = is_semi_resolving(dual, plane);
  for (const auto& v : line_side.violations) {
    const ViolationKind k = v.kind == ViolationKind::SkewLinePair ? ViolationKind::UncoveredPointPair
                                                                   : ViolationKind::OneCoveredPairOnInnerLine;
    rep.violations.push_back({k, v.witnesses});
  }
  rep.ok = rep.violations.empty();
  rep.stats.lines = lines.size();
  return rep;
}

SecantProfile secant_profile(std::span<const PointId> a, const Plane& plane) {
  membership(a, plane.size());
  const auto sec = secant_counts(a, plane);
  SecantProfile prof;
  prof.histogram.assign(plane.order() + 2, 0);
  for (auto s : sec) ++prof.histogram[s];
  prof.is_blocking = prof.histogram[0] == 0;
  prof.is_double_blocking = prof.is_blocking && prof.histogram[1] == 0;
  return prof;
}

IndexReport point_index(std::span<const PointId> a, const Plane& plane) {
  membership(a, plane.size());
  IndexReport rep;
  rep.secants = secant_counts(a, plane);
  const std::uint32_t n = plane.size();
  rep.ind0.assign(n, 0);
  rep.ind1.assign(n, 0);
  rep.ind.assign(n, 0);
  for (LineId l = 0; l < n; ++l) {
    const auto s = rep.secants[l];
    if (s > 1) continue;
    for (PointId p : plane.points_on(l)) (s == 0 ? rep.ind0 : rep.ind1)[p]++;
  }
  for (PointId p = 0; p < n; ++p) rep.ind[p] = 2 * rep.ind0[p] + rep.ind1[p];
  const VerifyStats st = point_stats(a, rep.secants, plane);
  rep.t = st.t;
  rep.beta = st.beta;
  return rep;
}

std::optional<FrameLine> choose_frame_line(PointId p, std::span<const std::uint32_t> secants,
                                           const Plane& plane) {
  std::optional<FrameLine> best;
  for (LineId l : plane.lines_through(p)) {
    const auto s = secants[l];
    if (s < 2 || s + 1 > plane.order()) continue;
    if (!best || s < best->s) best = FrameLine{l, s};  // lines_through is index-sorted
  }
  return best;
}

Prop48Report check_prop48(std::span<const PointId> a, const Plane& plane) {
  const VerifyReport semi = is_semi_resolving(a, plane);
  const long q = plane.order();
  if (!semi.ok) throw Error(ErrorKind::PreconditionUnmet, "point set is not semi-resolving");
  const IndexReport idx = point_index(a, plane);
  if (idx.beta > 2 * q - 4) throw Error(ErrorKind::PreconditionUnmet, "beta exceeds 2q-4");

  Prop48Report rep;
  rep.q = plane.order();
  rep.beta = idx.beta;
  rep.t = idx.t;
  rep.large_threshold = q - idx.beta - 2;
  rep.dichotomy_applicable = 4 * idx.beta <= q - 10;

  const auto in = membership(a, plane.size());
  for (PointId p = 0; p < plane.size(); ++p) {
    if (in[p]) continue;
    const long ind = idx.ind[p];
    if (rep.dichotomy_applicable && !(ind <= 2 || ind >= rep.large_threshold)) {
      rep.dichotomy_holds = false;
      rep.dichotomy_offenders.push_back(p);
    }
    if (ind > q - 2) continue;
    QuadraticEvaluation ev;
    ev.point = p;
    ev.index = static_cast<int>(ind);
    ev.frame = choose_frame_line(p, idx.secants, plane);
    const long base = ind * ind - (q - idx.beta) * ind;
    ev.with_t = base + idx.t;
    ev.with_size = base + 2 * q + idx.beta;
    ev.holds = ev.with_t >= 0 && ev.with_size >= 0;
    rep.all_hold = rep.all_hold && ev.holds;
    rep.evaluations.push_back(ev);
  }
  return rep;
}

SemiovalReport semioval_check(std::span<const PointId> a, const Plane& plane) {
  const auto prof_sec = secant_counts(a, plane);
  SemiovalReport rep;
  rep.is_semioval = !a.empty();
  for (PointId p : a) {
    int tangents = 0;
    for (LineId l : plane.lines_through(p)) tangents += prof_sec[l] == 1;
    if (tangents != 1) rep.is_semioval = false;
  }
  const bool blocking = std::none_of(prof_sec.begin(), prof_sec.end(), [](auto s) { return s == 0; });
  rep.is_blocking_semioval = rep.is_semioval && blocking;
  const long q = plane.order();
  rep.bound_margin = static_cast<long>(a.size()) - ((9 * q + 3) / 4 - 3);
  return rep;
}

}  // namespace pgres
