// Deterministic and seeded construction of triangulations and labellings
// for fixtures, property tests, and exhaustive suites.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "degree.hpp"

namespace simpdeg {

// Triangulates a polygon with holes: each hole is joined to the outer loop
// by a non-crossing diagonal (lexicographically smallest valid pair), then
// the merged loop is ear-clipped. All tests are exact; the result passes
// full build validation.
Triangulation triangulate_polygon(const std::vector<Point>& outer,
                                  const std::vector<std::vector<Point>>& holes = {});

enum class InteriorKind { Cone, Ring };

// Disk with 2m boundary vertices on the unit diamond, closed under negation,
// filled by coning to the origin or through one concentric ring.
Triangulation symmetric_disk(int m, InteriorKind interior = InteriorKind::Cone);

// Cone triangulation of the d-ball over the crosspolytope boundary sphere;
// antipodally symmetric on the boundary.
Triangulation cone_ball(int d);

// n exact rational points near the regular n-gon, counterclockwise. The
// points lie exactly on the unit circle, so they are in strictly convex
// position for any n.
std::vector<Point> regular_polygon_points(int n);

// Fan triangulation of a convex polygon from an interior point.
Triangulation fan_polygon(const std::vector<Point>& convex_ccw, const Point& center);

// Edge-midpoint 4-way subdivision, `depth` times (planar triangulations).
Triangulation refine(const Triangulation& t, int depth);

// Subdivision carrying labels: each midpoint copies the label of the
// lexicographically smaller endpoint (a fixture convention that preserves
// boundary label sequences up to repeats).
std::pair<Triangulation, std::vector<int>> refine_labelled(const Triangulation& t,
                                                           std::vector<int> labels, int depth);

enum class LabelConstraint { Free, NlBoundary, Sperner };

// Seeded labelling generation; the output always satisfies the constraint
// (rejection sampling with a bounded retry budget).
Labelling random_labelling(const Triangulation& t, int n, LabelConstraint c, uint64_t seed,
                           const Polytope* p = nullptr);

SignedLabelling random_antipodal_labelling(const Triangulation& t, int n, uint64_t seed,
                                           bool forbid_boundary_complementary);

// Streams every labelling satisfying the constraint exactly once in a
// deterministic order; throws SpaceTooLarge above `cap`. The callback may
// return false to stop. Returns the number of labellings visited.
uint64_t enumerate_labellings(const Triangulation& t, int n, LabelConstraint c, uint64_t cap,
                              const Polytope* p,
                              const std::function<bool(const std::vector<int>&)>& cb);

// Antipodal signed labellings: one free choice per boundary orbit plus free
// interior labels, mirrored onto the paired vertices.
uint64_t enumerate_antipodal(const Triangulation& t, int n, bool forbid_boundary_complementary,
                             uint64_t cap,
                             const std::function<bool(const std::vector<int>&)>& cb);

}  // namespace simpdeg
