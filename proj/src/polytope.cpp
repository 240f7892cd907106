#include "polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "errors.hpp"

namespace simpdeg {

namespace {

// Enumerate k-subsets of {0..n-1}; cb returns false to stop early.
template <typename Cb>
void for_each_subset(int n, int k, Cb cb) {
  if (k > n || k <= 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!cb(idx)) return;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

Point midpoint(const Point& a, const Point& b) {
  Point m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = (a[i] + b[i]) / 2;
  return m;
}

}  // namespace

Polytope Polytope::build(std::vector<Point> vertices) {
  if (vertices.empty()) fail(ErrorCode::Validation, "polytope has no vertices");
  const int d = static_cast<int>(vertices[0].size());
  if (d < 1) fail(ErrorCode::Validation, "polytope dimension must be >= 1");
  for (const auto& p : vertices)
    if (static_cast<int>(p.size()) != d)
      fail(ErrorCode::Validation, "polytope has inconsistent coordinate lengths");
  const int n = static_cast<int>(vertices.size());
  if (n < d + 1)
    fail(ErrorCode::Validation, "polytope needs at least d+1 vertices");

  Polytope p;
  p.dim_ = d;
  p.vertices_ = std::move(vertices);

  if (d == 2) {
    // One pass settles everything in the plane: each consecutive pair must
    // be a boundary edge with all the other vertices strictly to its left.
    for (int i = 0; i < n; ++i) {
      const Point& a = p.vertices_[i];
      const Point& b = p.vertices_[(i + 1) % n];
      for (int q = 0; q < n; ++q) {
        if (q == i || q == (i + 1) % n) continue;
        if (orient2d(a, b, p.vertices_[q]) <= 0)
          fail(ErrorCode::Validation,
               "polygon vertices are not in strictly convex counterclockwise order "
               "(vertex " + std::to_string(q) + " is not left of edge " +
                   std::to_string(i) + "-" + std::to_string((i + 1) % n) + ")");
      }
    }
  } else {
    if (affine_rank(p.vertices_) != d)
      fail(ErrorCode::Validation, "polytope is not full-dimensional");
    // Convex position by Caratheodory: a vertex inside the hull of the others
    // sits inside some simplex spanned by them.
    for (int i = 0; i < n; ++i) {
      std::vector<Point> others;
      for (int j = 0; j < n; ++j)
        if (j != i) others.push_back(p.vertices_[j]);
      bool inside = false;
      for (int k = 1; k <= d + 1 && !inside; ++k) {
        for_each_subset(n - 1, k, [&](const std::vector<int>& idx) {
          std::vector<Point> pts;
          for (int ix : idx) pts.push_back(others[ix]);
          if (point_in_simplex(p.vertices_[i], pts) != Containment::Outside) {
            inside = true;
            return false;
          }
          return true;
        });
      }
      if (inside)
        fail(ErrorCode::Validation,
             "vertex " + std::to_string(i) + " is not extreme (not in convex position)");
    }
  }

  // Facet enumeration: supporting hyperplanes through d vertices.
  std::map<std::vector<int>, Facet> facets;
  for_each_subset(n, d, [&](const std::vector<int>& idx) {
    std::vector<std::vector<Rational>> rows;
    for (int i = 1; i < d; ++i)
      rows.push_back(diff(p.vertices_[idx[i]], p.vertices_[idx[0]]));
    std::vector<Rational> normal;
    if (d == 1) {
      normal = {Rational(1)};
    } else {
      normal = normal_vector(rows);
      bool zero = true;
      for (const auto& c : normal)
        if (c != 0) zero = false;
      if (zero) return true;  // affinely dependent subset
    }
    Rational offset = dot(normal, p.vertices_[idx[0]]);
    bool pos = false, neg = false;
    std::vector<int> on;
    for (int q = 0; q < n; ++q) {
      Rational side = dot(normal, p.vertices_[q]) - offset;
      if (side > 0) pos = true;
      else if (side < 0) neg = true;
      else on.push_back(q);
    }
    if (pos && neg) return true;  // not supporting
    if (pos) {
      for (auto& c : normal) c = -c;
      offset = -offset;
    }
    std::sort(on.begin(), on.end());
    facets.emplace(on, Facet{on, std::move(normal), std::move(offset)});
    return true;
  });
  for (auto& [key, f] : facets) p.facets_.push_back(std::move(f));
  if (p.facets_.size() < static_cast<size_t>(d + 1))
    fail(ErrorCode::Validation, "facet enumeration found too few facets");

  return p;
}

Containment Polytope::locate(const Point& q) const {
  bool boundary = false;
  for (const auto& f : facets_) {
    Rational side = dot(f.normal, q) - f.offset;
    if (side > 0) return Containment::Outside;
    if (side == 0) boundary = true;
  }
  return boundary ? Containment::Boundary : Containment::Inside;
}

std::vector<int> Polytope::carrier(const Point& q) const {
  if (locate(q) == Containment::Outside)
    fail(ErrorCode::InvalidArgument, "carrier of a point outside the polytope");
  std::vector<int> common;
  bool first = true;
  for (const auto& f : facets_) {
    if (dot(f.normal, q) != f.offset) continue;
    if (first) {
      common = f.vertices;
      first = false;
    } else {
      std::vector<int> merged;
      std::set_intersection(common.begin(), common.end(), f.vertices.begin(), f.vertices.end(),
                            std::back_inserter(merged));
      common = std::move(merged);
    }
  }
  if (first) {
    common.resize(vertices_.size());
    for (size_t i = 0; i < common.size(); ++i) common[i] = static_cast<int>(i);
  }
  return common;
}

int Polytope::facet_containing(const std::vector<int>& vertex_ids) const {
  for (size_t fi = 0; fi < facets_.size(); ++fi) {
    const auto& fv = facets_[fi].vertices;
    bool all = true;
    for (int v : vertex_ids)
      if (!std::binary_search(fv.begin(), fv.end(), v)) {
        all = false;
        break;
      }
    if (all) return static_cast<int>(fi);
  }
  return -1;
}

CoverSet cov(const Polytope& p, const Point& y) {
  const int d = p.dim();
  const int n = static_cast<int>(p.size());
  CoverSet out;
  for (int k = 1; k <= d + 1; ++k) {
    for_each_subset(n, k, [&](const std::vector<int>& idx) {
      std::vector<Point> pts;
      for (int i : idx) pts.push_back(p.vertex(i));
      if (point_in_simplex(y, pts) != Containment::Outside) {
        std::vector<int> labels;
        for (int i : idx) labels.push_back(i + 1);
        if (k == d + 1)
          out.simplices.push_back(std::move(labels));
        else
          out.lower_faces.push_back(std::move(labels));
      }
      return true;
    });
  }
  out.generic = is_generic(p, y);
  return out;
}

bool is_generic(const Polytope& p, const Point& y) {
  const int d = p.dim();
  const int n = static_cast<int>(p.size());
  bool generic = true;
  for_each_subset(n, d, [&](const std::vector<int>& idx) {
    std::vector<Point> pts;
    for (int i : idx) pts.push_back(p.vertex(i));
    if (in_affine_hull(y, pts)) {
      generic = false;
      return false;
    }
    return true;
  });
  return generic;
}

Point generic_interior_point(const Polytope& p) {
  const int d = p.dim();
  Point c(d, Rational(0));
  for (const auto& v : p.vertices())
    for (int i = 0; i < d; ++i) c[i] += v[i];
  for (int i = 0; i < d; ++i) c[i] /= static_cast<int>(p.size());
  for (long long q = 3; q < 2000; q += 2) {
    Point y = c;
    Rational step(1, q);
    Rational acc = step;
    for (int i = 0; i < d; ++i) {
      y[i] += acc;
      acc *= step;
    }
    if (p.locate(y) == Containment::Inside && is_generic(p, y)) return y;
  }
  fail(ErrorCode::SearchExhausted, "no generic interior point found");
}

Point generic_facet_point(const Polytope& p, size_t facet_index) {
  const int d = p.dim();
  if (facet_index >= p.facets().size())
    fail(ErrorCode::InvalidArgument, "facet index out of range");
  const Facet& f = p.facets()[facet_index];

  // Greedy affinely independent subset of size d spanning the facet.
  std::vector<Point> span{p.vertex(f.vertices[0])};
  for (int v : f.vertices) {
    if (static_cast<int>(span.size()) == d) break;
    std::vector<Point> cand = span;
    cand.push_back(p.vertex(v));
    if (affine_rank(cand) == static_cast<int>(span.size())) span = std::move(cand);
  }
  if (static_cast<int>(span.size()) != d)
    fail(ErrorCode::Internal, "facet is not (d-1)-dimensional");

  Point c(d, Rational(0));
  for (const auto& v : span)
    for (int i = 0; i < d; ++i) c[i] += v[i];
  for (int i = 0; i < d; ++i) c[i] /= d;

  std::vector<Point> facet_pts;
  for (int v : f.vertices) facet_pts.push_back(p.vertex(v));

  for (long long q = 3; q < 2000; q += 2) {
    Point z = c;
    Rational acc(1, q);
    for (int j = 1; j < d; ++j) {
      for (int i = 0; i < d; ++i) z[i] += acc * (span[j][i] - span[0][i]);
      acc /= q;
    }
    if (point_in_simplex(z, span) != Containment::Inside) continue;
    bool generic = true;
    if (d >= 2) {
      for_each_subset(static_cast<int>(facet_pts.size()), d - 1,
                      [&](const std::vector<int>& idx) {
                        std::vector<Point> pts;
                        for (int i : idx) pts.push_back(facet_pts[i]);
                        if (in_affine_hull(z, pts)) {
                          generic = false;
                          return false;
                        }
                        return true;
                      });
    }
    if (generic) return z;
  }
  fail(ErrorCode::SearchExhausted, "no generic facet point found");
}

std::optional<PebbleFailure> pebble_set_violation(const Polytope& p,
                                                  const std::vector<Point>& s) {
  std::vector<CoverSet> covers;
  covers.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (p.locate(s[i]) != Containment::Inside || !is_generic(p, s[i])) {
      PebbleFailure f;
      f.nongeneric = true;
      f.first = static_cast<int>(i);
      return f;
    }
    covers.push_back(cov(p, s[i]));
  }
  for (size_t i = 0; i < s.size(); ++i) {
    std::set<std::vector<int>> si(covers[i].simplices.begin(), covers[i].simplices.end());
    for (size_t j = i + 1; j < s.size(); ++j) {
      for (const auto& tup : covers[j].simplices) {
        if (si.count(tup)) {
          PebbleFailure f;
          f.first = static_cast<int>(i);
          f.second = static_cast<int>(j);
          f.shared_simplex = tup;
          return f;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_pebble_set(const Polytope& p, const std::vector<Point>& s) {
  return !pebble_set_violation(p, s).has_value();
}

PebbleSet pebble_set(const Polytope& p) {
  if (p.dim() != 2)
    fail(ErrorCode::PebbleSetUnavailable,
         "pebble construction is implemented for polygons only; supply candidates for d >= 3");
  const int n = static_cast<int>(p.size());
  // One pebble per vertex v not on the cut edge (p0, p1), placed close to v
  // and aimed into the wedge spanned by the rays v->p0 and v->p1. Exact
  // verification decides; the offset shrinks until the covers separate.
  static const long long nudges[][2] = {{0, 1}, {1, 9}, {-1, 9}, {1, 7}, {-1, 7}, {1, 5}, {-1, 5}};
  std::optional<PebbleFailure> last;
  for (const auto& nd : nudges) {
    Rational lambda(nd[0], nd[1]);
    Point m = midpoint(p.vertex(0), p.vertex(1));
    Point target(2);
    for (int i = 0; i < 2; ++i)
      target[i] = (1 - lambda) * m[i] + lambda * p.vertex(0)[i];
    Rational t(1, 4);
    for (int step = 0; step < 40; ++step, t /= 2) {
      std::vector<Point> pts;
      for (int v = 2; v < n; ++v) {
        Point x(2);
        for (int i = 0; i < 2; ++i)
          x[i] = p.vertex(v)[i] + t * (target[i] - p.vertex(v)[i]);
        pts.push_back(std::move(x));
      }
      last = pebble_set_violation(p, pts);
      if (!last) return PebbleSet{std::move(pts)};
    }
  }
  std::string detail = "pebble search exhausted";
  if (last && !last->nongeneric)
    detail += ": covers of candidates " + std::to_string(last->first) + " and " +
              std::to_string(last->second) + " still share a simplex";
  fail(ErrorCode::SearchExhausted, detail);
}

bool is_sperner(const Triangulation& t, const Polytope& p, const Labelling& l) {
  const int d = p.dim();
  if (t.dim() != d || t.ambient_dim() != d)
    fail(ErrorCode::InvalidArgument, "triangulation and polytope dimensions differ");
  if (l.n() != static_cast<int>(p.size()))
    fail(ErrorCode::InvalidArgument, "label alphabet must match the polytope vertex count");
  for (size_t v = 0; v < t.num_vertices(); ++v)
    if (p.locate(t.point(static_cast<VertexId>(v))) == Containment::Outside)
      fail(ErrorCode::NotATriangulationOfP,
           "vertex " + std::to_string(v) + " lies outside the polytope");
  if (d == 2) {
    // Exact area balance: triangles are interior-disjoint and inside P, so
    // equality of total area certifies that T covers P.
    Rational twice_area = 0;
    for (const auto& s : t.simplices()) {
      const Point& a = t.point(s.v[0]);
      const Point& b = t.point(s.v[1]);
      const Point& c = t.point(s.v[2]);
      twice_area += (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    }
    if (twice_area != twice_signed_area(p.vertices()))
      fail(ErrorCode::NotATriangulationOfP, "triangulation does not cover the polytope");
  } else {
    for (const auto& f : t.boundary_faces()) {
      bool on_some_facet = false;
      for (const auto& facet : p.facets()) {
        bool all = true;
        for (VertexId v : f.v)
          if (dot(facet.normal, t.point(v)) != facet.offset) {
            all = false;
            break;
          }
        if (all) {
          on_some_facet = true;
          break;
        }
      }
      if (!on_some_facet)
        fail(ErrorCode::NotATriangulationOfP, "a boundary face of T does not lie on the boundary of P");
    }
  }
  for (size_t v = 0; v < t.num_vertices(); ++v) {
    std::vector<int> car = p.carrier(t.point(static_cast<VertexId>(v)));
    int want = l.at(static_cast<VertexId>(v)) - 1;
    if (!std::binary_search(car.begin(), car.end(), want)) return false;
  }
  return true;
}

bool is_alternating_signed_set(std::vector<int> signed_labels) {
  std::sort(signed_labels.begin(), signed_labels.end(),
            [](int a, int b) { return std::abs(a) < std::abs(b); });
  for (size_t i = 1; i < signed_labels.size(); ++i)
    if (std::abs(signed_labels[i]) == std::abs(signed_labels[i - 1])) return false;
  for (size_t i = 1; i < signed_labels.size(); ++i)
    if ((signed_labels[i] > 0) == (signed_labels[i - 1] > 0)) return false;
  return true;
}

bool is_acs_polytope(const Polytope& p) {
  const int d = p.dim();
  const int total = static_cast<int>(p.size());
  if (total % 2 != 0)
    fail(ErrorCode::NotCentrallySymmetric, "vertex count is odd");
  const int n = total / 2;
  for (int i = 0; i < n; ++i)
    if (p.vertex(i + n) != negated(p.vertex(i)))
      fail(ErrorCode::NotCentrallySymmetric,
           "vertex " + std::to_string(i + n) + " is not the antipode of vertex " +
               std::to_string(i) + " (expected listing p_1..p_n, -p_1..-p_n)");

  Point origin(d, Rational(0));
  auto signed_label = [&](int idx) { return idx < n ? idx + 1 : -(idx - n + 1); };
  bool acs = true;
  for (int k = 2; k <= d + 1 && acs; ++k) {
    for_each_subset(total, k, [&](const std::vector<int>& idx) {
      std::vector<Point> pts;
      for (int i : idx) pts.push_back(p.vertex(i));
      if (point_in_simplex(origin, pts) != Containment::Inside) return true;
      if (k == 2) {
        if (idx[1] != idx[0] + n) {
          acs = false;
          return false;
        }
      } else if (k <= d) {
        acs = false;
        return false;
      } else {
        std::vector<int> labels;
        for (int i : idx) labels.push_back(signed_label(i));
        if (!is_alternating_signed_set(labels)) {
          acs = false;
          return false;
        }
      }
      return true;
    });
  }
  return acs;
}

Polytope standard_simplex_polytope(int d) {
  std::vector<Point> pts;
  if (d == 2) {
    // CCW listing for the plane.
    pts = {Point{Rational(0), Rational(0)}, Point{Rational(1), Rational(0)},
           Point{Rational(0), Rational(1)}};
  } else {
    Point origin(d, Rational(0));
    pts.push_back(origin);
    for (int i = 0; i < d; ++i) {
      Point e(d, Rational(0));
      e[i] = 1;
      pts.push_back(e);
    }
  }
  return Polytope::build(std::move(pts));
}

Polytope crosspolytope(int d) {
  std::vector<Point> pts;
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < d; ++i) {
      Point e(d, Rational(0));
      e[i] = s == 0 ? 1 : -1;
      pts.push_back(e);
    }
  return Polytope::build(std::move(pts));
}

}  // namespace simpdeg
