#include "generator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "errors.hpp"

namespace simpdeg {

namespace {

// Platform-independent uniform draw in [0, k).
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  uint64_t below(uint64_t k) {
    const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % k;
    uint64_t v;
    do {
      v = eng();
    } while (v >= limit);
    return v % k;
  }
};

struct LoopVertex {
  Point p;
  VertexId id;  // index into the original vertex table
};

bool loop_is_simple(const std::vector<Point>& loop) {
  const size_t n = loop.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    const Point& a = loop[i];
    const Point& b = loop[(i + 1) % n];
    if (a == b) return false;
    for (size_t j = i + 1; j < n; ++j) {
      const Point& c = loop[j];
      const Point& d = loop[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // consecutive edges share exactly their common endpoint
        const Point& shared = (j == i + 1) ? b : a;
        const Point& tail = (j == i + 1) ? a : b;
        const Point& head = (j == i + 1) ? d : c;
        if (shared_endpoint_overlap2(shared, tail, head)) return false;
      } else {
        if (segments_intersect_closed2(a, b, c, d)) return false;
      }
    }
  }
  return true;
}

Containment point_in_loop(const Point& q, const std::vector<Point>& loop) {
  // Exact even-odd test via signed crossings; boundary handled first.
  const size_t n = loop.size();
  for (size_t i = 0; i < n; ++i)
    if (on_segment2(q, loop[i], loop[(i + 1) % n])) return Containment::Boundary;
  int crossings = 0;
  for (size_t i = 0; i < n; ++i) {
    const Point& a = loop[i];
    const Point& b = loop[(i + 1) % n];
    bool a_below = a[1] <= q[1], b_below = b[1] <= q[1];
    if (a_below == b_below) continue;
    int side = orient2d(a, b, q);
    if ((b[1] > a[1] && side > 0) || (b[1] < a[1] && side < 0)) ++crossings;
  }
  return crossings % 2 == 1 ? Containment::Inside : Containment::Outside;
}

}  // namespace

Triangulation triangulate_polygon(const std::vector<Point>& outer_in,
                                  const std::vector<std::vector<Point>>& holes_in) {
  if (outer_in.size() < 3) fail(ErrorCode::InvalidPolygon, "outer loop needs >= 3 vertices");
  for (const auto& p : outer_in)
    if (p.size() != 2) fail(ErrorCode::InvalidPolygon, "polygon points must be planar");
  for (const auto& h : holes_in) {
    if (h.size() < 3) fail(ErrorCode::InvalidPolygon, "hole loop needs >= 3 vertices");
    for (const auto& p : h)
      if (p.size() != 2) fail(ErrorCode::InvalidPolygon, "polygon points must be planar");
  }

  // Orientation normalization: outer counterclockwise, holes clockwise.
  std::vector<Point> outer = outer_in;
  if (!loop_is_simple(outer)) fail(ErrorCode::InvalidPolygon, "outer loop is not simple");
  if (twice_signed_area(outer) < 0) std::reverse(outer.begin(), outer.end());
  std::vector<std::vector<Point>> holes = holes_in;
  for (auto& h : holes) {
    if (!loop_is_simple(h)) fail(ErrorCode::InvalidPolygon, "hole loop is not simple");
    if (twice_signed_area(h) > 0) std::reverse(h.begin(), h.end());
  }

  // Hole placement checks: strictly inside the outer loop, pairwise disjoint.
  for (size_t hi = 0; hi < holes.size(); ++hi) {
    for (const auto& p : holes[hi])
      if (point_in_loop(p, outer) != Containment::Inside)
        fail(ErrorCode::InvalidPolygon, "hole vertex " + to_string(p) + " is not strictly inside");
    for (size_t i = 0; i < holes[hi].size(); ++i) {
      const Point& a = holes[hi][i];
      const Point& b = holes[hi][(i + 1) % holes[hi].size()];
      for (size_t j = 0; j < outer.size(); ++j)
        if (segments_intersect_closed2(a, b, outer[j], outer[(j + 1) % outer.size()]))
          fail(ErrorCode::InvalidPolygon, "hole boundary touches the outer boundary");
      for (size_t hj = 0; hj < hi; ++hj)
        for (size_t j = 0; j < holes[hj].size(); ++j)
          if (segments_intersect_closed2(a, b, holes[hj][j],
                                         holes[hj][(j + 1) % holes[hj].size()]))
            fail(ErrorCode::InvalidPolygon, "hole boundaries intersect");
    }
    for (size_t hj = 0; hj < hi; ++hj)
      if (point_in_loop(holes[hi][0], holes[hj]) != Containment::Outside ||
          point_in_loop(holes[hj][0], holes[hi]) != Containment::Outside)
        fail(ErrorCode::InvalidPolygon, "nested holes");
  }

  // Vertex table: outer loop first, then holes, in input order.
  std::vector<Point> table;
  std::vector<LoopVertex> merged;
  for (const auto& p : outer) {
    merged.push_back({p, static_cast<VertexId>(table.size())});
    table.push_back(p);
  }
  std::vector<std::vector<LoopVertex>> hole_loops;
  for (const auto& h : holes) {
    std::vector<LoopVertex> loop;
    for (const auto& p : h) {
      loop.push_back({p, static_cast<VertexId>(table.size())});
      table.push_back(p);
    }
    hole_loops.push_back(std::move(loop));
  }

  // Bridge each hole into the merged loop with a diagonal that crosses
  // nothing; candidates are scanned in lexicographic (merged index, hole
  // index) order, so the construction is deterministic.
  auto segment_clear = [&](const Point& a, const Point& b,
                           const std::vector<std::vector<LoopVertex>>& pending) {
    auto blocked_by = [&](const std::vector<LoopVertex>& loop) {
      const size_t n = loop.size();
      for (size_t i = 0; i < n; ++i) {
        const Point& c = loop[i].p;
        const Point& d = loop[(i + 1) % n].p;
        bool shares = (c == a || c == b || d == a || d == b);
        if (shares) {
          // Edges incident to a bridge endpoint may only touch it there.
          const Point& shared = (c == a || c == b) ? c : d;
          const Point& other = (c == a || c == b) ? d : c;
          const Point& far = (shared == a) ? b : a;
          if (shared_endpoint_overlap2(shared, far, other)) return true;
          // The non-shared endpoint must stay off the open bridge.
          if (other != a && other != b && on_segment2(other, a, b)) return true;
          continue;
        }
        if (segments_intersect_closed2(a, b, c, d)) return true;
      }
      // No loop vertex may sit on the open bridge.
      for (const auto& lv : loop)
        if (lv.p != a && lv.p != b && on_segment2(lv.p, a, b)) return true;
      return false;
    };
    if (blocked_by(merged)) return false;
    for (const auto& loop : pending)
      if (blocked_by(loop)) return false;
    return true;
  };

  for (size_t h = 0; h < hole_loops.size(); ++h) {
    std::vector<std::vector<LoopVertex>> pending(hole_loops.begin() + h, hole_loops.end());
    bool bridged = false;
    for (size_t mi = 0; mi < merged.size() && !bridged; ++mi) {
      for (size_t hi = 0; hi < hole_loops[h].size() && !bridged; ++hi) {
        const Point& a = merged[mi].p;
        const Point& b = hole_loops[h][hi].p;
        if (a == b) continue;
        if (!segment_clear(a, b, pending)) continue;
        // Splice: ...,m[mi], hole[hi..], hole[hi], m[mi], m[mi+1], ...
        std::vector<LoopVertex> next;
        next.insert(next.end(), merged.begin(), merged.begin() + mi + 1);
        for (size_t k = 0; k <= hole_loops[h].size(); ++k)
          next.push_back(hole_loops[h][(hi + k) % hole_loops[h].size()]);
        next.push_back(merged[mi]);
        next.insert(next.end(), merged.begin() + mi + 1, merged.end());
        merged = std::move(next);
        bridged = true;
      }
    }
    if (!bridged) fail(ErrorCode::InvalidPolygon, "no valid bridge diagonal for a hole");
  }

  // Ear clipping on the merged loop (bridge vertices appear twice).
  std::vector<LoopVertex> poly = merged;
  std::vector<Simplex> triangles;
  auto is_ear = [&](size_t i) {
    const size_t n = poly.size();
    const Point& a = poly[(i + n - 1) % n].p;
    const Point& b = poly[i].p;
    const Point& c = poly[(i + 1) % n].p;
    if (orient2d(a, b, c) <= 0) return false;
    for (size_t k = 0; k < n; ++k) {
      if (k == i || k == (i + n - 1) % n || k == (i + 1) % n) continue;
      const Point& q = poly[k].p;
      if (q == a || q == b || q == c) continue;  // duplicated bridge vertices
      if (point_in_triangle2(q, a, b, c) != Containment::Outside) return false;
    }
    return true;
  };
  while (poly.size() > 3) {
    const size_t n = poly.size();
    bool clipped = false;
    for (size_t i = 0; i < n; ++i) {
      if (!is_ear(i)) continue;
      triangles.push_back(
          {{poly[(i + n - 1) % n].id, poly[i].id, poly[(i + 1) % n].id}});
      poly.erase(poly.begin() + i);
      clipped = true;
      break;
    }
    if (!clipped) fail(ErrorCode::InvalidPolygon, "ear clipping failed (degenerate input?)");
  }
  triangles.push_back({{poly[0].id, poly[1].id, poly[2].id}});

  return Triangulation::build(2, std::move(table), std::move(triangles));
}

Triangulation symmetric_disk(int m, InteriorKind interior) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "symmetric disk needs m >= 2");
  // 2m points on the unit diamond |x|+|y| = 1, uniformly in the perimeter
  // parameter; the point at s+2 is the antipode of the point at s.
  auto diamond = [](Rational s) {
    if (s < 1) return Point{1 - s, s};
    if (s < 2) return Point{1 - s, 2 - s};
    if (s < 3) return Point{s - 3, 2 - s};
    return Point{s - 3, s - 4};
  };
  std::vector<Point> table;
  for (int j = 0; j < 2 * m; ++j) table.push_back(diamond(Rational(2 * j, m)));

  std::vector<Simplex> tris;
  if (interior == InteriorKind::Cone) {
    VertexId c = static_cast<VertexId>(table.size());
    table.push_back(Point{Rational(0), Rational(0)});
    for (int j = 0; j < 2 * m; ++j)
      tris.push_back({{c, static_cast<VertexId>(j), static_cast<VertexId>((j + 1) % (2 * m))}});
  } else {
    const int ring0 = 2 * m;
    for (int j = 0; j < 2 * m; ++j) {
      Point inner = table[j];
      for (auto& c : inner) c /= 2;
      table.push_back(std::move(inner));
    }
    VertexId c = static_cast<VertexId>(table.size());
    table.push_back(Point{Rational(0), Rational(0)});
    for (int j = 0; j < 2 * m; ++j) {
      int jn = (j + 1) % (2 * m);
      tris.push_back({{static_cast<VertexId>(j), static_cast<VertexId>(jn),
                       static_cast<VertexId>(ring0 + j)}});
      tris.push_back({{static_cast<VertexId>(jn), static_cast<VertexId>(ring0 + jn),
                       static_cast<VertexId>(ring0 + j)}});
      tris.push_back({{c, static_cast<VertexId>(ring0 + j), static_cast<VertexId>(ring0 + jn)}});
    }
  }
  return Triangulation::build(2, std::move(table), std::move(tris));
}

Triangulation cone_ball(int d) {
  if (d < 2) fail(ErrorCode::InvalidArgument, "cone_ball needs d >= 2");
  std::vector<Point> table;
  table.push_back(Point(d, Rational(0)));  // center
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < d; ++i) {
      Point e(d, Rational(0));
      e[i] = s == 0 ? 1 : -1;
      table.push_back(e);
    }
  auto unit = [&](int i, int sign_neg) { return static_cast<VertexId>(1 + sign_neg * d + i); };
  std::vector<Simplex> cells;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Simplex s;
    s.v.push_back(0);
    for (int i = 0; i < d; ++i) s.v.push_back(unit(i, (mask >> i) & 1));
    cells.push_back(std::move(s));
  }
  return Triangulation::build(d, std::move(table), std::move(cells));
}

std::vector<Point> regular_polygon_points(int n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "polygon needs n >= 3");
  // Exact rational points on the unit circle through the tangent half-angle
  // map, with t snapped to a 1/64 grid around the regular angles.
  std::vector<Point> pts;
  for (int k = 0; k < n; ++k) {
    double phi = -M_PI + 2.0 * M_PI * (k + 0.5) / n;
    double td = std::tan(phi / 2.0);
    Rational t(static_cast<long long>(std::llround(td * 64.0)), 64);
    Rational den = 1 + t * t;
    pts.push_back(Point{(1 - t * t) / den, 2 * t / den});
  }
  return pts;
}

Triangulation fan_polygon(const std::vector<Point>& convex_ccw, const Point& center) {
  std::vector<Point> table = convex_ccw;
  VertexId c = static_cast<VertexId>(table.size());
  table.push_back(center);
  std::vector<Simplex> tris;
  const int n = static_cast<int>(convex_ccw.size());
  for (int j = 0; j < n; ++j)
    tris.push_back({{c, static_cast<VertexId>(j), static_cast<VertexId>((j + 1) % n)}});
  return Triangulation::build(2, std::move(table), std::move(tris));
}

namespace {

std::pair<Triangulation, std::vector<int>> refine_once(const Triangulation& t,
                                                       const std::vector<int>* labels) {
  if (t.dim() != 2 || t.ambient_dim() != 2)
    fail(ErrorCode::InvalidArgument, "refinement is implemented for planar triangulations");
  std::vector<Point> table = t.points();
  std::vector<int> new_labels = labels ? *labels : std::vector<int>();
  std::map<std::pair<VertexId, VertexId>, VertexId> midpoint;
  auto mid = [&](VertexId a, VertexId b) {
    auto key = std::minmax(a, b);
    auto it = midpoint.find({key.first, key.second});
    if (it != midpoint.end()) return it->second;
    Point m(2);
    for (int i = 0; i < 2; ++i) m[i] = (t.point(a)[i] + t.point(b)[i]) / 2;
    VertexId id = static_cast<VertexId>(table.size());
    table.push_back(std::move(m));
    if (labels) new_labels.push_back((*labels)[key.first]);
    midpoint.emplace(std::make_pair(key.first, key.second), id);
    return id;
  };
  std::vector<Simplex> tris;
  for (const auto& s : t.simplices()) {
    VertexId a = s.v[0], b = s.v[1], c = s.v[2];
    VertexId ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
    tris.push_back({{a, ab, ca}});
    tris.push_back({{ab, b, bc}});
    tris.push_back({{ca, bc, c}});
    tris.push_back({{ab, bc, ca}});
  }
  return {Triangulation::build(2, std::move(table), std::move(tris)), std::move(new_labels)};
}

}  // namespace

Triangulation refine(const Triangulation& t, int depth) {
  if (depth <= 0) return t;
  Triangulation cur = t;
  for (int i = 0; i < depth; ++i) cur = refine_once(cur, nullptr).first;
  return cur;
}

std::pair<Triangulation, std::vector<int>> refine_labelled(const Triangulation& t,
                                                           std::vector<int> labels, int depth) {
  Triangulation cur = t;
  for (int i = 0; i < depth; ++i) {
    auto [next, next_labels] = refine_once(cur, &labels);
    cur = std::move(next);
    labels = std::move(next_labels);
  }
  return {std::move(cur), std::move(labels)};
}

Labelling random_labelling(const Triangulation& t, int n, LabelConstraint c, uint64_t seed,
                           const Polytope* p) {
  Rng rng(seed);
  std::vector<int> labels(t.num_vertices(), 1);
  switch (c) {
    case LabelConstraint::Free: {
      for (auto& l : labels) l = static_cast<int>(rng.below(n)) + 1;
      break;
    }
    case LabelConstraint::NlBoundary: {
      for (auto& l : labels) l = static_cast<int>(rng.below(n)) + 1;  // interior defaults
      for (const auto& cyc : t.boundary_cycles()) {
        const size_t m = cyc.loop.size();
        bool accepted = false;
        for (int attempt = 0; attempt < 10000 && !accepted; ++attempt) {
          int start = static_cast<int>(rng.below(n)) + 1;
          std::vector<int> steps(m);
          long long sum = 0;
          for (auto& s : steps) {
            s = static_cast<int>(rng.below(3)) - 1;
            sum += s;
          }
          if (((sum % n) + n) % n != 0) continue;
          int cur = start;
          for (size_t i = 0; i < m; ++i) {
            labels[cyc.loop[i]] = cur;
            cur = (cur - 1 + steps[i] % n + n) % n + 1;
          }
          accepted = true;
        }
        if (!accepted)
          fail(ErrorCode::ConstraintInfeasible, "closed NL walk rejection budget exhausted");
      }
      break;
    }
    case LabelConstraint::Sperner: {
      if (!p) fail(ErrorCode::InvalidArgument, "sperner constraint needs the polytope");
      for (size_t v = 0; v < t.num_vertices(); ++v) {
        std::vector<int> car = p->carrier(t.point(static_cast<VertexId>(v)));
        labels[v] = car[rng.below(car.size())] + 1;
      }
      break;
    }
  }
  return Labelling(t, n, std::move(labels));
}

SignedLabelling random_antipodal_labelling(const Triangulation& t, int n, uint64_t seed,
                                           bool forbid_boundary_complementary) {
  Rng rng(seed);
  std::vector<VertexId> pair = t.antipodal_pairs();
  auto draw_signed = [&]() {
    int v = static_cast<int>(rng.below(2 * n));
    return v < n ? v + 1 : -(v - n + 1);
  };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> labels(t.num_vertices(), 0);
    for (VertexId v = 0; v < static_cast<VertexId>(t.num_vertices()); ++v) {
      if (pair[v] >= 0) {
        if (labels[v] != 0) continue;
        int l = draw_signed();
        labels[v] = l;
        labels[pair[v]] = -l;
      } else {
        labels[v] = draw_signed();
      }
    }
    SignedLabelling sl(t, n, std::move(labels));
    if (forbid_boundary_complementary && !complementary_edges(t, sl).boundary.empty()) continue;
    return sl;
  }
  fail(ErrorCode::ConstraintInfeasible, "antipodal labelling rejection budget exhausted");
}

uint64_t enumerate_labellings(const Triangulation& t, int n, LabelConstraint c, uint64_t cap,
                              const Polytope* p,
                              const std::function<bool(const std::vector<int>&)>& cb) {
  const size_t nv = t.num_vertices();
  // Per-vertex candidate lists for the odometer constraints.
  std::vector<std::vector<int>> candidates(nv);
  if (c == LabelConstraint::Free || c == LabelConstraint::NlBoundary) {
    for (auto& cs : candidates) {
      cs.resize(n);
      for (int i = 0; i < n; ++i) cs[i] = i + 1;
    }
  } else {
    if (!p) fail(ErrorCode::InvalidArgument, "sperner constraint needs the polytope");
    for (size_t v = 0; v < nv; ++v) {
      for (int id : p->carrier(t.point(static_cast<VertexId>(v))))
        candidates[v].push_back(id + 1);
    }
  }

  // Visit order: boundary cycles first (in cycle order) so NL pruning kicks
  // in early, then interior vertices.
  std::vector<VertexId> order;
  std::vector<std::pair<size_t, size_t>> cycle_spans;
  if (c == LabelConstraint::NlBoundary) {
    for (const auto& cyc : t.boundary_cycles()) {
      cycle_spans.push_back({order.size(), cyc.loop.size()});
      for (VertexId v : cyc.loop) order.push_back(v);
    }
  }
  {
    std::set<VertexId> placed(order.begin(), order.end());
    for (VertexId v = 0; v < static_cast<VertexId>(nv); ++v)
      if (!placed.count(v)) order.push_back(v);
  }

  // Cap estimate before walking the space.
  {
    long double space = 1;
    if (c == LabelConstraint::NlBoundary) {
      size_t in_cycles = 0;
      for (const auto& [beg, len] : cycle_spans) {
        space *= static_cast<long double>(n);
        for (size_t i = 1; i < len; ++i) space *= 3;
        in_cycles += len;
      }
      for (size_t i = in_cycles; i < nv; ++i) space *= n;
    } else {
      for (size_t v = 0; v < nv; ++v) space *= candidates[order[v]].size();
    }
    if (space > static_cast<long double>(cap))
      fail(ErrorCode::SpaceTooLarge, "labelling space exceeds the cap");
  }

  auto nl_ok = [n](int a, int b) {
    int d = ((b - a) % n + n) % n;
    return d == 0 || d == 1 || d == n - 1;
  };
  auto in_cycle = [&](size_t pos) -> std::pair<bool, std::pair<size_t, size_t>> {
    for (const auto& span : cycle_spans)
      if (pos >= span.first && pos < span.first + span.second) return {true, span};
    return {false, {0, 0}};
  };

  std::vector<int> labels(nv, 0);
  uint64_t count = 0;
  bool stop = false;

  std::function<void(size_t)> dfs = [&](size_t pos) {
    if (stop) return;
    if (pos == order.size()) {
      ++count;
      if (!cb(labels)) stop = true;
      return;
    }
    VertexId v = order[pos];
    for (int cand : candidates[v]) {
      if (c == LabelConstraint::NlBoundary) {
        auto [cyc, span] = in_cycle(pos);
        if (cyc) {
          size_t off = pos - span.first;
          if (off > 0 && !nl_ok(labels[order[pos - 1]], cand)) continue;
          if (off + 1 == span.second && !nl_ok(cand, labels[order[span.first]])) continue;
        }
      }
      labels[v] = cand;
      dfs(pos + 1);
      if (stop) return;
    }
    labels[v] = 0;
  };
  dfs(0);
  return count;
}

uint64_t enumerate_antipodal(const Triangulation& t, int n, bool forbid_boundary_complementary,
                             uint64_t cap,
                             const std::function<bool(const std::vector<int>&)>& cb) {
  const size_t nv = t.num_vertices();
  std::vector<VertexId> pair = t.antipodal_pairs();
  std::vector<VertexId> free_slots;  // one representative per orbit + interior
  for (VertexId v = 0; v < static_cast<VertexId>(nv); ++v)
    if (pair[v] < 0 || v < pair[v]) free_slots.push_back(v);

  {
    long double space = 1;
    for (size_t i = 0; i < free_slots.size(); ++i) space *= 2.0L * n;
    if (space > static_cast<long double>(cap))
      fail(ErrorCode::SpaceTooLarge, "labelling space exceeds the cap");
  }

  std::vector<int> alphabet;
  for (int k = 1; k <= n; ++k) alphabet.push_back(k);
  for (int k = 1; k <= n; ++k) alphabet.push_back(-k);

  std::vector<int> labels(nv, 0);
  uint64_t count = 0;
  bool stop = false;
  std::function<void(size_t)> dfs = [&](size_t pos) {
    if (stop) return;
    if (pos == free_slots.size()) {
      if (forbid_boundary_complementary) {
        for (size_t e = 0; e < t.edges().size(); ++e) {
          if (!t.edge_on_boundary(e)) continue;
          if (labels[t.edges()[e][0]] == -labels[t.edges()[e][1]]) return;
        }
      }
      ++count;
      if (!cb(labels)) stop = true;
      return;
    }
    VertexId v = free_slots[pos];
    for (int l : alphabet) {
      labels[v] = l;
      if (pair[v] >= 0) labels[pair[v]] = -l;
      dfs(pos + 1);
      if (stop) return;
    }
    return;
  };
  dfs(0);
  return count;
}

}  // namespace simpdeg
