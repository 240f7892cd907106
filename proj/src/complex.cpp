#include "complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace simpdeg {

namespace {

std::string simplex_str(const std::vector<VertexId>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// Parity of the permutation sorting `v`: +1 even, -1 odd.
int sort_parity(std::vector<VertexId> v) {
  int parity = 1;
  for (size_t i = 0; i < v.size(); ++i) {
    for (size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] < v[i]) {
        std::swap(v[i], v[j]);
        parity = -parity;
      }
    }
  }
  return parity;
}

struct FaceUse {
  int simplex;
  int opposite_pos;  // position of the vertex not on the face
};

}  // namespace

Triangulation Triangulation::build(int dim, std::vector<Point> vertices,
                                   std::vector<Simplex> simplices,
                                   const BuildOptions& opts) {
  if (dim < 1) fail(ErrorCode::Validation, "dimension must be >= 1");
  if (vertices.empty()) fail(ErrorCode::Validation, "no vertices");
  if (simplices.empty()) fail(ErrorCode::Validation, "no simplices");

  const int ambient = static_cast<int>(vertices[0].size());
  if (ambient < dim)
    fail(ErrorCode::Validation, "ambient dimension below simplex dimension");
  for (const auto& p : vertices)
    if (static_cast<int>(p.size()) != ambient)
      fail(ErrorCode::Validation, "inconsistent coordinate lengths");

  const auto nverts = static_cast<VertexId>(vertices.size());
  std::vector<bool> used(vertices.size(), false);
  std::set<std::vector<VertexId>> seen_simplices;
  for (const auto& s : simplices) {
    if (static_cast<int>(s.v.size()) != dim + 1)
      fail(ErrorCode::Validation,
           "simplex " + simplex_str(s.v) + " does not have d+1 vertices");
    std::vector<VertexId> key = s.v;
    std::sort(key.begin(), key.end());
    for (size_t i = 0; i < key.size(); ++i) {
      if (key[i] < 0 || key[i] >= nverts)
        fail(ErrorCode::Validation, "simplex " + simplex_str(s.v) + " references unknown vertex");
      if (i && key[i] == key[i - 1])
        fail(ErrorCode::Validation, "simplex " + simplex_str(s.v) + " repeats a vertex");
    }
    if (!seen_simplices.insert(key).second)
      fail(ErrorCode::Validation, "duplicate simplex " + simplex_str(s.v));
    for (VertexId v : s.v) used[v] = true;
  }
  for (size_t v = 0; v < used.size(); ++v)
    if (!used[v])
      fail(ErrorCode::Validation, "vertex " + std::to_string(v) + " is not used by any simplex");

  {
    std::map<Point, VertexId> coords;
    for (VertexId v = 0; v < nverts; ++v) {
      auto [it, fresh] = coords.emplace(vertices[v], v);
      if (!fresh)
        fail(ErrorCode::Validation, "vertices " + std::to_string(it->second) + " and " +
                                        std::to_string(v) + " share coordinates");
    }
  }

  Triangulation t;
  t.dim_ = dim;
  t.ambient_ = ambient;
  t.vertices_ = std::move(vertices);
  t.simplices_ = std::move(simplices);

  // Nondegeneracy, and tuple normalization to positive orientation when the
  // simplices are full-dimensional in the ambient space.
  if (ambient == dim) {
    for (auto& s : t.simplices_) {
      std::vector<Point> pts;
      pts.reserve(s.v.size());
      for (VertexId v : s.v) pts.push_back(t.vertices_[v]);
      int o = orientation_sign(pts);
      if (o == 0)
        fail(ErrorCode::DegenerateSimplex, "simplex " + simplex_str(s.v) + " is degenerate");
      if (o < 0) {
        if (!opts.auto_orient)
          fail(ErrorCode::IncoherentOrientation,
               "simplex " + simplex_str(s.v) + " is negatively oriented");
        std::swap(s.v[0], s.v[1]);
      }
    }
  } else {
    for (const auto& s : t.simplices_) {
      std::vector<Point> pts;
      for (VertexId v : s.v) pts.push_back(t.vertices_[v]);
      if (affine_rank(pts) != dim)
        fail(ErrorCode::DegenerateSimplex, "simplex " + simplex_str(s.v) + " is degenerate");
    }
  }

  // Face incidence map: sorted (d-1)-face -> uses.
  std::map<std::vector<VertexId>, std::vector<FaceUse>> faces;
  for (size_t si = 0; si < t.simplices_.size(); ++si) {
    const auto& tup = t.simplices_[si].v;
    for (int i = 0; i <= dim; ++i) {
      std::vector<VertexId> f;
      f.reserve(dim);
      for (int j = 0; j <= dim; ++j)
        if (j != i) f.push_back(tup[j]);
      std::sort(f.begin(), f.end());
      faces[f].push_back({static_cast<int>(si), i});
    }
  }
  for (const auto& [f, uses] : faces) {
    if (uses.size() > 2)
      fail(ErrorCode::NonManifoldFace,
           "face " + simplex_str(f) + " is shared by " + std::to_string(uses.size()) + " simplices");
  }

  // Induced orientation sign of the face at `use`, measured against the
  // sorted reference order of the face vertices.
  auto induced_sign = [&](const FaceUse& use) {
    const auto& tup = t.simplices_[use.simplex].v;
    std::vector<VertexId> f;
    for (int j = 0; j <= dim; ++j)
      if (j != use.opposite_pos) f.push_back(tup[j]);
    int s = (use.opposite_pos % 2 == 0) ? 1 : -1;
    return s * sort_parity(f);
  };

  if (ambient == dim) {
    // All simplices are positively oriented; an interior face whose two
    // induced orientations fail to cancel means its simplices lie on the
    // same side, i.e. their interiors overlap.
    for (const auto& [f, uses] : faces) {
      if (uses.size() != 2) continue;
      if (induced_sign(uses[0]) * induced_sign(uses[1]) != -1)
        fail(ErrorCode::OverlapDetected,
             "simplices " + simplex_str(t.simplices_[uses[0].simplex].v) + " and " +
                 simplex_str(t.simplices_[uses[1].simplex].v) +
                 " lie on the same side of their shared face");
    }
    t.orientable_ = true;
  } else {
    // Combinatorial orientation by propagation across interior faces.
    std::vector<std::vector<std::pair<int, int>>> adj(t.simplices_.size());
    for (const auto& [f, uses] : faces) {
      if (uses.size() != 2) continue;
      int rel = -induced_sign(uses[0]) * induced_sign(uses[1]);
      // rel == +1 when the stored tuples already cancel on this face.
      adj[uses[0].simplex].push_back({uses[1].simplex, rel});
      adj[uses[1].simplex].push_back({uses[0].simplex, rel});
    }
    std::vector<int> flip(t.simplices_.size(), 0);  // 0 unknown, +1 keep, -1 flip
    bool ok = true;
    std::pair<int, int> conflict{-1, -1};
    for (size_t seed = 0; seed < t.simplices_.size() && ok; ++seed) {
      if (flip[seed] != 0) continue;
      flip[seed] = 1;
      std::vector<int> stack{static_cast<int>(seed)};
      while (!stack.empty() && ok) {
        int cur = stack.back();
        stack.pop_back();
        for (auto [nb, rel] : adj[cur]) {
          int want = flip[cur] * rel;
          if (flip[nb] == 0) {
            flip[nb] = want;
            stack.push_back(nb);
          } else if (flip[nb] != want) {
            ok = false;
            conflict = {cur, nb};
            break;
          }
        }
      }
    }
    if (!ok) {
      if (opts.require_orientable)
        fail(ErrorCode::IncoherentOrientation,
             "complex is not orientable (conflict between simplices " +
                 simplex_str(t.simplices_[conflict.first].v) + " and " +
                 simplex_str(t.simplices_[conflict.second].v) + ")");
      t.orientable_ = false;
    } else {
      if (!opts.auto_orient) {
        for (size_t i = 0; i < flip.size(); ++i)
          if (flip[i] < 0)
            fail(ErrorCode::IncoherentOrientation,
                 "simplex " + simplex_str(t.simplices_[i].v) + " is oriented against its neighbours");
      } else {
        for (size_t i = 0; i < flip.size(); ++i)
          if (flip[i] < 0) std::swap(t.simplices_[i].v[0], t.simplices_[i].v[1]);
      }
      t.orientable_ = true;
    }
  }

  // Boundary faces with induced orientation.
  // (Recompute uses against possibly reordered tuples.)
  faces.clear();
  for (size_t si = 0; si < t.simplices_.size(); ++si) {
    const auto& tup = t.simplices_[si].v;
    for (int i = 0; i <= dim; ++i) {
      std::vector<VertexId> f;
      for (int j = 0; j <= dim; ++j)
        if (j != i) f.push_back(tup[j]);
      std::sort(f.begin(), f.end());
      faces[f].push_back({static_cast<int>(si), i});
    }
  }
  for (const auto& [key, uses] : faces) {
    if (uses.size() != 1) continue;
    const FaceUse& use = uses[0];
    const auto& tup = t.simplices_[use.simplex].v;
    OrientedFace of;
    for (int j = 0; j <= dim; ++j)
      if (j != use.opposite_pos) of.v.push_back(tup[j]);
    of.sign = (use.opposite_pos % 2 == 0) ? 1 : -1;
    of.parent = use.simplex;
    if (of.v.size() >= 2 && of.sign < 0) {
      std::swap(of.v[0], of.v[1]);
      of.sign = 1;
    }
    t.boundary_faces_.push_back(std::move(of));
  }
  std::sort(t.boundary_faces_.begin(), t.boundary_faces_.end(),
            [](const OrientedFace& a, const OrientedFace& b) { return a.v < b.v; });

  t.vertex_boundary_.assign(t.vertices_.size(), false);
  for (const auto& f : t.boundary_faces_)
    for (VertexId v : f.v) t.vertex_boundary_[v] = true;

  // Edge table.
  {
    std::set<std::array<VertexId, 2>> es;
    for (const auto& s : t.simplices_)
      for (size_t i = 0; i < s.v.size(); ++i)
        for (size_t j = i + 1; j < s.v.size(); ++j)
          es.insert({std::min(s.v[i], s.v[j]), std::max(s.v[i], s.v[j])});
    t.edges_.assign(es.begin(), es.end());
    std::set<std::array<VertexId, 2>> boundary_edges;
    for (const auto& f : t.boundary_faces_) {
      if (f.v.size() < 2) continue;
      for (size_t i = 0; i < f.v.size(); ++i)
        for (size_t j = i + 1; j < f.v.size(); ++j)
          boundary_edges.insert({std::min(f.v[i], f.v[j]), std::max(f.v[i], f.v[j])});
    }
    t.edge_boundary_.resize(t.edges_.size());
    for (size_t i = 0; i < t.edges_.size(); ++i)
      t.edge_boundary_[i] = boundary_edges.count(t.edges_[i]) > 0;
  }

  // Planar glue validation: distinct triangles may only meet in a common
  // vertex or a full common edge. With exact arithmetic the test suite below
  // is complete: a crossing of independent edges, a collinear overlap of
  // edges sharing a vertex, or a non-shared vertex inside the closed other
  // triangle each flag the pair.
  if (dim == 2 && ambient == 2) {
    struct BBox {
      Rational lox, hix, loy, hiy;
    };
    std::vector<BBox> boxes(t.simplices_.size());
    for (size_t i = 0; i < t.simplices_.size(); ++i) {
      const auto& s = t.simplices_[i].v;
      BBox b{t.vertices_[s[0]][0], t.vertices_[s[0]][0], t.vertices_[s[0]][1],
             t.vertices_[s[0]][1]};
      for (int k = 1; k < 3; ++k) {
        const Point& p = t.vertices_[s[k]];
        b.lox = std::min(b.lox, p[0]);
        b.hix = std::max(b.hix, p[0]);
        b.loy = std::min(b.loy, p[1]);
        b.hiy = std::max(b.hiy, p[1]);
      }
      boxes[i] = std::move(b);
    }
    auto pair_overlaps = [&](size_t i, size_t j) {
      const auto& a = t.simplices_[i].v;
      const auto& b = t.simplices_[j].v;
      auto in_b = [&](VertexId v) { return v == b[0] || v == b[1] || v == b[2]; };
      auto in_a = [&](VertexId v) { return v == a[0] || v == a[1] || v == a[2]; };
      static const int E[3][2] = {{0, 1}, {1, 2}, {2, 0}};
      for (const auto& ea : E) {
        VertexId a0 = a[ea[0]], a1 = a[ea[1]];
        for (const auto& eb : E) {
          VertexId b0 = b[eb[0]], b1 = b[eb[1]];
          int shared = (a0 == b0) + (a0 == b1) + (a1 == b0) + (a1 == b1);
          if (shared >= 2) continue;  // same edge
          if (shared == 1) {
            VertexId p = (a0 == b0 || a0 == b1) ? a0 : a1;
            VertexId qa = (p == a0) ? a1 : a0;
            VertexId qb = (p == b0) ? b1 : b0;
            if (shared_endpoint_overlap2(t.vertices_[p], t.vertices_[qa], t.vertices_[qb]))
              return true;
          } else {
            if (segments_intersect_closed2(t.vertices_[a0], t.vertices_[a1], t.vertices_[b0],
                                           t.vertices_[b1]))
              return true;
          }
        }
      }
      for (VertexId v : a)
        if (!in_b(v) && point_in_triangle2(t.vertices_[v], t.vertices_[b[0]], t.vertices_[b[1]],
                                           t.vertices_[b[2]]) != Containment::Outside)
          return true;
      for (VertexId v : b)
        if (!in_a(v) && point_in_triangle2(t.vertices_[v], t.vertices_[a[0]], t.vertices_[a[1]],
                                           t.vertices_[a[2]]) != Containment::Outside)
          return true;
      return false;
    };
    for (size_t i = 0; i < t.simplices_.size(); ++i) {
      for (size_t j = i + 1; j < t.simplices_.size(); ++j) {
        if (boxes[i].hix < boxes[j].lox || boxes[j].hix < boxes[i].lox ||
            boxes[i].hiy < boxes[j].loy || boxes[j].hiy < boxes[i].loy)
          continue;
        if (pair_overlaps(i, j))
          fail(ErrorCode::OverlapDetected,
               "triangles " + simplex_str(t.simplices_[i].v) + " and " +
                   simplex_str(t.simplices_[j].v) + " overlap");
      }
    }
  } else if (dim >= 3 && ambient == dim && opts.check_geometry_higher) {
    for (size_t i = 0; i < t.simplices_.size(); ++i) {
      std::vector<Point> si;
      for (VertexId v : t.simplices_[i].v) si.push_back(t.vertices_[v]);
      for (size_t j = i + 1; j < t.simplices_.size(); ++j) {
        std::vector<Point> sj;
        for (VertexId v : t.simplices_[j].v) sj.push_back(t.vertices_[v]);
        if (simplex_interiors_intersect(si, sj))
          fail(ErrorCode::OverlapDetected,
               "simplices " + simplex_str(t.simplices_[i].v) + " and " +
                   simplex_str(t.simplices_[j].v) + " overlap");
      }
    }
  }

  // Assemble 2D boundary loops and classify them by signed area. Induced
  // orientation already walks with the interior on the left, so outer loops
  // come out counterclockwise and holes clockwise.
  if (dim == 2 && ambient == 2) {
    std::map<VertexId, VertexId> next;
    std::map<VertexId, int> indeg;
    for (const auto& f : t.boundary_faces_) {
      VertexId u = f.v[0], v = f.v[1];
      if (next.count(u))
        fail(ErrorCode::NonManifoldFace,
             "boundary is pinched at vertex " + std::to_string(u));
      next[u] = v;
      indeg[v]++;
    }
    for (const auto& [v, c] : indeg)
      if (c != 1)
        fail(ErrorCode::NonManifoldFace,
             "boundary is pinched at vertex " + std::to_string(v));
    std::set<VertexId> visited;
    for (const auto& [start, ignored] : next) {
      if (visited.count(start)) continue;
      BoundaryCycle cyc;
      VertexId cur = start;
      do {
        cyc.loop.push_back(cur);
        visited.insert(cur);
        auto it = next.find(cur);
        if (it == next.end())
          fail(ErrorCode::NonManifoldFace, "boundary walk broke at vertex " + std::to_string(cur));
        cur = it->second;
      } while (cur != start);
      std::vector<Point> pts;
      for (VertexId v : cyc.loop) pts.push_back(t.vertices_[v]);
      cyc.is_outer = twice_signed_area(pts) > 0;
      // canonical start: minimal vertex id
      auto mn = std::min_element(cyc.loop.begin(), cyc.loop.end());
      std::rotate(cyc.loop.begin(), mn, cyc.loop.end());
      t.cycles_.push_back(std::move(cyc));
    }
    std::sort(t.cycles_.begin(), t.cycles_.end(), [](const BoundaryCycle& a, const BoundaryCycle& b) {
      if (a.is_outer != b.is_outer) return a.is_outer;
      return a.loop < b.loop;
    });
  }

  return t;
}

const std::vector<BoundaryCycle>& Triangulation::boundary_cycles() const {
  if (!(dim_ == 2 && ambient_ == 2))
    fail(ErrorCode::InvalidArgument, "boundary cycles exist only for planar 2D triangulations");
  return cycles_;
}

std::vector<VertexId> Triangulation::boundary_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(vertices_.size()); ++v)
    if (vertex_boundary_[v]) out.push_back(v);
  return out;
}

std::vector<VertexId> Triangulation::antipodal_pairs() const {
  std::map<Point, VertexId> coords;
  for (VertexId v = 0; v < static_cast<VertexId>(vertices_.size()); ++v)
    if (vertex_boundary_[v]) coords[vertices_[v]] = v;

  std::vector<VertexId> pair(vertices_.size(), -1);
  for (const auto& [p, v] : coords) {
    auto it = coords.find(negated(p));
    if (it == coords.end())
      fail(ErrorCode::NotAntipodallySymmetric,
           "boundary vertex " + std::to_string(v) + " at " + to_string(p) + " has no antipode");
    if (it->second == v)
      fail(ErrorCode::NotAntipodallySymmetric,
           "boundary vertex " + std::to_string(v) + " is its own antipode");
    pair[v] = it->second;
  }

  std::set<std::vector<VertexId>> face_sets;
  for (const auto& f : boundary_faces_) {
    std::vector<VertexId> key = f.v;
    std::sort(key.begin(), key.end());
    face_sets.insert(std::move(key));
  }
  for (const auto& f : boundary_faces_) {
    std::vector<VertexId> mapped;
    for (VertexId v : f.v) mapped.push_back(pair[v]);
    std::sort(mapped.begin(), mapped.end());
    if (!face_sets.count(mapped))
      fail(ErrorCode::NotAntipodallySymmetric,
           "boundary face " + simplex_str(f.v) + " has no antipodal face");
  }
  return pair;
}

std::vector<size_t> Triangulation::face_counts() const {
  std::vector<size_t> counts(dim_ + 1, 0);
  for (int k = 0; k <= dim_; ++k) {
    std::set<std::vector<VertexId>> faces;
    for (const auto& s : simplices_) {
      std::vector<int> pick(k + 1);
      // enumerate (k+1)-subsets of the d+1 tuple
      std::vector<int> idx(k + 1);
      for (int i = 0; i <= k; ++i) idx[i] = i;
      while (true) {
        std::vector<VertexId> f;
        for (int i = 0; i <= k; ++i) f.push_back(s.v[idx[i]]);
        std::sort(f.begin(), f.end());
        faces.insert(std::move(f));
        int pos = k;
        while (pos >= 0 && idx[pos] == dim_ - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i <= k; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
    counts[k] = faces.size();
  }
  return counts;
}

}  // namespace simpdeg
