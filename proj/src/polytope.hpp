// Target polytope P, cover sets cov_P(y), pebble sets, Sperner-labelling
// detection, the ACS predicate, and deterministic generic-point search.
#pragma once

#include <optional>
#include <vector>

#include "complex.hpp"
#include "labelling.hpp"

namespace simpdeg {

struct Facet {
  std::vector<int> vertices;     // 0-based vertex indices on the facet, sorted
  std::vector<Rational> normal;  // outward: normal . x <= offset on P
  Rational offset;
};

// Convex polytope given by its n >= d+1 vertices, all extreme. In the plane
// the vertices must additionally be listed in counterclockwise boundary
// order (the label alphabet 1..n walks the boundary).
class Polytope {
 public:
  static Polytope build(std::vector<Point> vertices);

  int dim() const { return dim_; }
  size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(int i) const { return vertices_[i]; }
  const std::vector<Facet>& facets() const { return facets_; }

  Containment locate(const Point& p) const;
  // 0-based vertex indices of the smallest face of P containing p; the whole
  // vertex set when p is interior. Requires p in P.
  std::vector<int> carrier(const Point& p) const;
  // Smallest facet index whose vertex set contains all the given vertex
  // indices, or -1 when the set spans no common facet.
  int facet_containing(const std::vector<int>& vertex_ids) const;

 private:
  int dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
};

// Label tuples are reported 1-based (vertex i of P carries label i+1).
struct CoverSet {
  std::vector<std::vector<int>> simplices;    // sorted (d+1)-tuples, lex order
  std::vector<std::vector<int>> lower_faces;  // smaller simplices containing y
  bool generic = false;
};

CoverSet cov(const Polytope& p, const Point& y);

// True iff y lies on no affine hull of any d-subset of P's vertices.
bool is_generic(const Polytope& p, const Point& y);

// Deterministic searches; exact predicates decide acceptance.
Point generic_interior_point(const Polytope& p);
Point generic_facet_point(const Polytope& p, size_t facet_index);

struct PebbleSet {
  std::vector<Point> points;
};

struct PebbleFailure {
  bool nongeneric = false;      // offending point not generic / not interior
  int first = -1, second = -1;  // offending pair when covers intersect
  std::vector<int> shared_simplex;
};

// nullopt when S is a valid pebble set; otherwise a certificate.
std::optional<PebbleFailure> pebble_set_violation(const Polytope& p,
                                                  const std::vector<Point>& s);
bool is_pebble_set(const Polytope& p, const std::vector<Point>& s);

// Search-and-verify construction of n-2 pebbles for a convex polygon.
PebbleSet pebble_set(const Polytope& p);

// Every vertex of T must be labelled by a vertex of its carrier in P.
// Throws NotATriangulationOfP when T does not triangulate P itself.
bool is_sperner(const Triangulation& t, const Polytope& p, const Labelling& l);

// Signed labels of a candidate Ky Fan witness: distinct magnitudes and
// alternating signs once sorted by magnitude (either leading sign).
bool is_alternating_signed_set(std::vector<int> signed_labels);

// Vertices listed as p_1..p_n, -p_1..-p_n; every simplex spanned by the
// vertices with the origin in its relative interior must be an antipodal
// edge or an alternating d-simplex. Throws NotCentrallySymmetric.
bool is_acs_polytope(const Polytope& p);

// Convenience builders used by checkers and tests.
Polytope standard_simplex_polytope(int d);
Polytope crosspolytope(int d);

}  // namespace simpdeg
