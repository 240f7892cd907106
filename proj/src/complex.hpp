// Exact-coordinate simplicial data model: triangulations, orientation,
// boundary extraction, validation, antipodal pairing.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "rational.hpp"

namespace simpdeg {

using VertexId = int32_t;

struct Simplex {
  std::vector<VertexId> v;  // d+1 distinct vertex ids, positively oriented
                            // tuple once the triangulation is built
};

// A (d-1)-face contained in exactly one d-simplex, carrying the induced
// orientation: the face opposite position i of the parent tuple gets sign
// (-1)^i. For faces with at least two vertices the sign is folded into the
// tuple order (a swap of the first two entries); for d == 1 the face is a
// single vertex and `sign` carries it.
struct OrientedFace {
  std::vector<VertexId> v;
  int sign = 1;
  int parent = -1;
};

// Ordered vertex loop of one 2D boundary component. The stored order is the
// induced one: outer loops run counterclockwise, hole loops clockwise.
struct BoundaryCycle {
  std::vector<VertexId> loop;
  bool is_outer = false;
};

struct BuildOptions {
  // Reorder each simplex tuple to positive orientation (ambient == dim) or
  // to a coherent orientation (ambient > dim) instead of rejecting.
  bool auto_orient = true;
  // Pairwise exact overlap validation. Mandatory for d == 2 in the plane;
  // opt-in for d >= 3 (costly).
  bool check_geometry_higher = false;
  // Reject complexes that cannot be coherently oriented. Only complexes
  // embedded with ambient > dim can be non-orientable; with this off they
  // are accepted and flagged.
  bool require_orientable = true;
};

class Triangulation {
 public:
  static Triangulation build(int dim, std::vector<Point> vertices,
                             std::vector<Simplex> simplices,
                             const BuildOptions& opts = {});

  int dim() const { return dim_; }
  int ambient_dim() const { return ambient_; }
  bool orientable() const { return orientable_; }

  size_t num_vertices() const { return vertices_.size(); }
  const std::vector<Point>& points() const { return vertices_; }
  const Point& point(VertexId v) const { return vertices_[v]; }
  const std::vector<Simplex>& simplices() const { return simplices_; }

  const std::vector<OrientedFace>& boundary_faces() const { return boundary_faces_; }
  // Assembled loops; available only for dim == 2 in the plane.
  const std::vector<BoundaryCycle>& boundary_cycles() const;

  // All 1-faces as sorted (a < b) pairs, lexicographically ordered.
  const std::vector<std::array<VertexId, 2>>& edges() const { return edges_; }
  bool edge_on_boundary(size_t edge_index) const { return edge_boundary_[edge_index]; }

  bool vertex_on_boundary(VertexId v) const { return vertex_boundary_[v]; }
  std::vector<VertexId> boundary_vertices() const;

  // Involutive pairing v <-> -v on boundary vertices; also verifies that the
  // boundary face set is closed under the antipodal map. Entry is -1 for
  // vertices not on the boundary. Throws NotAntipodallySymmetric.
  std::vector<VertexId> antipodal_pairs() const;

  // Counts of all k-faces, k = 0..dim (for Euler characteristic checks).
  std::vector<size_t> face_counts() const;

 private:
  Triangulation() = default;

  int dim_ = 0;
  int ambient_ = 0;
  bool orientable_ = true;
  std::vector<Point> vertices_;
  std::vector<Simplex> simplices_;
  std::vector<OrientedFace> boundary_faces_;
  std::vector<BoundaryCycle> cycles_;
  std::vector<std::array<VertexId, 2>> edges_;
  std::vector<bool> edge_boundary_;
  std::vector<bool> vertex_boundary_;
};

}  // namespace simpdeg
