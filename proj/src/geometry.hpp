// Exact geometric predicates over rational coordinates. No floating point
// enters any decision here.
#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace simpdeg {

// Sign of det(M) for a square rational matrix; 0 iff singular. M is consumed.
int sign_of_det(std::vector<std::vector<Rational>> m);

Rational det(std::vector<std::vector<Rational>> m);

// Sign of det[p1-p0, ..., pd-p0] for d+1 points in R^d. Throws
// InvalidArgument on a dimension mismatch. 0 iff the points are affinely
// dependent.
int orientation_sign(const std::vector<Point>& pts);

// 2D specialization, the workhorse predicate.
int orient2d(const Point& a, const Point& b, const Point& c);

// Rank of the linear span of the given vectors.
int linear_rank(std::vector<std::vector<Rational>> rows);

// Dimension of the affine hull of the points (rank of differences).
int affine_rank(const std::vector<Point>& pts);

// True iff y lies in the affine hull of pts.
bool in_affine_hull(const Point& y, const std::vector<Point>& pts);

// Barycentric coordinates of y with respect to an affinely independent
// point set (any size k+1 <= d+1). Returns nullopt when the set is affinely
// dependent or y is outside the affine span.
std::optional<std::vector<Rational>> barycentric(const Point& y,
                                                 const std::vector<Point>& pts);

enum class Containment { Outside, Boundary, Inside };

// Closed/strict containment of y in the simplex spanned by pts (affinely
// independent, any dimension k <= d). "Inside" means the relative interior.
Containment point_in_simplex(const Point& y, const std::vector<Point>& pts);

// 2D fast path: containment of p in triangle (a, b, c), any orientation.
Containment point_in_triangle2(const Point& p, const Point& a, const Point& b,
                               const Point& c);

// Closed 2D segment intersection test, [a,b] vs [c,d], including touching
// and collinear overlap.
bool segments_intersect_closed2(const Point& a, const Point& b, const Point& c,
                                const Point& d);

// For segments sharing the endpoint p: true iff [p,a] and [p,b] overlap in
// more than the shared point (collinear, same direction).
bool shared_endpoint_overlap2(const Point& p, const Point& a, const Point& b);

// True iff c lies on the closed segment [a,b].
bool on_segment2(const Point& c, const Point& a, const Point& b);

// Twice the signed area of a polygon loop (2D shoelace).
Rational twice_signed_area(const std::vector<Point>& loop);

// Generalized cross product: vector orthogonal to the d-1 row vectors in
// R^d (cofactor expansion). Zero vector iff the rows are dependent.
std::vector<Rational> normal_vector(const std::vector<std::vector<Rational>>& rows);

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::vector<Rational> diff(const Point& a, const Point& b) {
  std::vector<Rational> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Strict-inequality linear feasibility (A x < b) by Fourier-Motzkin
// elimination. Exact; intended for desk-scale systems only.
bool strict_system_feasible(std::vector<std::vector<Rational>> a,
                            std::vector<Rational> b);

// True iff the open interiors of two full-dimensional simplices in R^d
// intersect.
bool simplex_interiors_intersect(const std::vector<Point>& s1,
                                 const std::vector<Point>& s2);

}  // namespace simpdeg
