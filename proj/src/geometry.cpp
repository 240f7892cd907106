#include "geometry.hpp"

#include <algorithm>

#include "errors.hpp"

namespace simpdeg {

int sign_of_det(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  int sgn = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      sgn = -sgn;
    }
    if (m[col][col] < 0) sgn = -sgn;
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return sgn;
}

Rational det(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational result = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      result = -result;
    }
    result *= m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return result;
}

int orientation_sign(const std::vector<Point>& pts) {
  if (pts.empty()) fail(ErrorCode::InvalidArgument, "orientation_sign: no points");
  const size_t d = pts[0].size();
  if (pts.size() != d + 1)
    fail(ErrorCode::InvalidArgument,
         "orientation_sign: need d+1 points of dimension d");
  for (const auto& p : pts)
    if (p.size() != d)
      fail(ErrorCode::InvalidArgument, "orientation_sign: dimension mismatch");
  if (d == 2) return orient2d(pts[0], pts[1], pts[2]);
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) m[i][j] = pts[i + 1][j] - pts[0][j];
  return sign_of_det(std::move(m));
}

int orient2d(const Point& a, const Point& b, const Point& c) {
  Rational v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return sign(v);
}

int linear_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (size_t k = col; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int affine_rank(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(pts.size() - 1);
  for (size_t i = 1; i < pts.size(); ++i) rows.push_back(diff(pts[i], pts[0]));
  return linear_rank(std::move(rows));
}

bool in_affine_hull(const Point& y, const std::vector<Point>& pts) {
  if (pts.empty()) return false;
  std::vector<std::vector<Rational>> rows;
  for (size_t i = 1; i < pts.size(); ++i) rows.push_back(diff(pts[i], pts[0]));
  int r = linear_rank(rows);
  rows.push_back(diff(y, pts[0]));
  return linear_rank(std::move(rows)) == r;
}

std::optional<std::vector<Rational>> barycentric(const Point& y,
                                                 const std::vector<Point>& pts) {
  // Solve sum l_i p_i = y, sum l_i = 1 by Gaussian elimination on the
  // (d+1) x (k+2) augmented system.
  const size_t k = pts.size();
  if (k == 0) return std::nullopt;
  const size_t d = pts[0].size();
  std::vector<std::vector<Rational>> m(d + 1, std::vector<Rational>(k + 1));
  for (size_t row = 0; row < d; ++row) {
    for (size_t j = 0; j < k; ++j) m[row][j] = pts[j][row];
    m[row][k] = y[row];
  }
  for (size_t j = 0; j < k; ++j) m[d][j] = 1;
  m[d][k] = 1;

  std::vector<int> pivot_row_of_col(k, -1);
  size_t rank = 0;
  for (size_t col = 0; col < k && rank < d + 1; ++col) {
    size_t pivot = rank;
    while (pivot < d + 1 && m[pivot][col] == 0) ++pivot;
    if (pivot == d + 1) continue;
    std::swap(m[pivot], m[rank]);
    for (size_t r = 0; r < d + 1; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[rank][col];
      for (size_t c = col; c <= k; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_row_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  if (rank < k) return std::nullopt;  // affinely dependent points
  for (size_t r = rank; r < d + 1; ++r)
    if (m[r][k] != 0) return std::nullopt;  // inconsistent: y outside the span
  std::vector<Rational> lambda(k);
  for (size_t col = 0; col < k; ++col) {
    int pr = pivot_row_of_col[col];
    lambda[col] = m[pr][k] / m[pr][col];
  }
  return lambda;
}

Containment point_in_simplex(const Point& y, const std::vector<Point>& pts) {
  auto l = barycentric(y, pts);
  if (!l) return Containment::Outside;
  bool boundary = false;
  for (const auto& c : *l) {
    if (c < 0) return Containment::Outside;
    if (c == 0) boundary = true;
  }
  return boundary ? Containment::Boundary : Containment::Inside;
}

Containment point_in_triangle2(const Point& p, const Point& a, const Point& b,
                               const Point& c) {
  int o = orient2d(a, b, c);
  if (o == 0) fail(ErrorCode::InvalidArgument, "point_in_triangle2: degenerate triangle");
  int s1 = orient2d(a, b, p) * o;
  int s2 = orient2d(b, c, p) * o;
  int s3 = orient2d(c, a, p) * o;
  if (s1 < 0 || s2 < 0 || s3 < 0) return Containment::Outside;
  if (s1 == 0 || s2 == 0 || s3 == 0) return Containment::Boundary;
  return Containment::Inside;
}

bool on_segment2(const Point& c, const Point& a, const Point& b) {
  if (orient2d(a, b, c) != 0) return false;
  Rational lo0 = std::min(a[0], b[0]), hi0 = std::max(a[0], b[0]);
  Rational lo1 = std::min(a[1], b[1]), hi1 = std::max(a[1], b[1]);
  return c[0] >= lo0 && c[0] <= hi0 && c[1] >= lo1 && c[1] <= hi1;
}

bool segments_intersect_closed2(const Point& a, const Point& b, const Point& c,
                                const Point& d) {
  int d1 = orient2d(c, d, a);
  int d2 = orient2d(c, d, b);
  int d3 = orient2d(a, b, c);
  int d4 = orient2d(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment2(a, c, d)) return true;
  if (d2 == 0 && on_segment2(b, c, d)) return true;
  if (d3 == 0 && on_segment2(c, a, b)) return true;
  if (d4 == 0 && on_segment2(d, a, b)) return true;
  return false;
}

bool shared_endpoint_overlap2(const Point& p, const Point& a, const Point& b) {
  if (orient2d(p, a, b) != 0) return false;
  // Collinear: overlap iff a and b point the same way from p.
  Rational d = (a[0] - p[0]) * (b[0] - p[0]) + (a[1] - p[1]) * (b[1] - p[1]);
  return d > 0;
}

Rational twice_signed_area(const std::vector<Point>& loop) {
  Rational s = 0;
  const size_t n = loop.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& p = loop[i];
    const Point& q = loop[(i + 1) % n];
    s += p[0] * q[1] - q[0] * p[1];
  }
  return s;
}

std::vector<Rational> normal_vector(const std::vector<std::vector<Rational>>& rows) {
  const size_t d = rows.empty() ? 0 : rows[0].size();
  if (rows.size() + 1 != d)
    fail(ErrorCode::InvalidArgument, "normal_vector: need d-1 vectors in R^d");
  std::vector<Rational> n(d);
  for (size_t i = 0; i < d; ++i) {
    std::vector<std::vector<Rational>> minor(d - 1, std::vector<Rational>(d - 1));
    for (size_t r = 0; r < d - 1; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < d; ++c) {
        if (c == i) continue;
        minor[r][cc++] = rows[r][c];
      }
    }
    Rational cof = det(std::move(minor));
    n[i] = (i % 2 == 0) ? cof : -cof;
  }
  return n;
}

bool strict_system_feasible(std::vector<std::vector<Rational>> a,
                            std::vector<Rational> b) {
  size_t vars = a.empty() ? 0 : a[0].size();
  while (vars > 0) {
    const size_t v = vars - 1;
    std::vector<std::vector<Rational>> na;
    std::vector<Rational> nb;
    std::vector<size_t> pos, neg;
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i][v] > 0)
        pos.push_back(i);
      else if (a[i][v] < 0)
        neg.push_back(i);
      else {
        std::vector<Rational> row(a[i].begin(), a[i].begin() + v);
        na.push_back(std::move(row));
        nb.push_back(b[i]);
      }
    }
    for (size_t i : pos) {
      for (size_t j : neg) {
        // a_i x < b_i (coef > 0), a_j x < b_j (coef < 0): combine to drop x_v.
        Rational ci = a[i][v], cj = -a[j][v];
        std::vector<Rational> row(v);
        for (size_t k = 0; k < v; ++k) row[k] = a[i][k] * cj + a[j][k] * ci;
        na.push_back(std::move(row));
        nb.push_back(b[i] * cj + b[j] * ci);
      }
    }
    a = std::move(na);
    b = std::move(nb);
    vars = v;
  }
  for (const auto& rhs : b)
    if (rhs <= 0) return false;
  return true;
}

bool simplex_interiors_intersect(const std::vector<Point>& s1,
                                 const std::vector<Point>& s2) {
  const size_t d = s1.empty() ? 0 : s1[0].size();
  if (s1.size() != d + 1 || s2.size() != d + 1)
    fail(ErrorCode::InvalidArgument, "simplex_interiors_intersect: need full-dim simplices");
  // Interior of a simplex: all barycentric coordinates positive. Each is an
  // affine functional of x obtained by replacing one row of the homogeneous
  // matrix [q_i | 1] by [x | 1]; expand by cofactors along that row. Collect
  // the 2(d+1) strict inequalities and test feasibility.
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  auto add_simplex = [&](const std::vector<Point>& s) {
    std::vector<std::vector<Rational>> h(d + 1, std::vector<Rational>(d + 1));
    for (size_t i = 0; i <= d; ++i) {
      for (size_t c = 0; c < d; ++c) h[i][c] = s[i][c];
      h[i][d] = 1;
    }
    int o = sign_of_det(h);
    if (o == 0)
      fail(ErrorCode::InvalidArgument, "simplex_interiors_intersect: degenerate simplex");
    for (size_t j = 0; j <= d; ++j) {
      std::vector<Rational> cof(d + 1);
      for (size_t c = 0; c <= d; ++c) {
        std::vector<std::vector<Rational>> minor;
        minor.reserve(d);
        for (size_t r = 0; r <= d; ++r) {
          if (r == j) continue;
          std::vector<Rational> row;
          row.reserve(d);
          for (size_t cc = 0; cc <= d; ++cc) {
            if (cc == c) continue;
            row.push_back(h[r][cc]);
          }
          minor.push_back(std::move(row));
        }
        Rational m = det(std::move(minor));
        cof[c] = ((j + c) % 2 == 0) ? m : -m;
      }
      // Functional f_j(x) = sum_c x_c cof[c] + cof[d]; need o * f_j(x) > 0,
      // i.e. (-o cof[0..d-1]) . x < o cof[d].
      std::vector<Rational> coef(d);
      for (size_t c = 0; c < d; ++c) coef[c] = -Rational(o) * cof[c];
      a.push_back(std::move(coef));
      b.push_back(Rational(o) * cof[d]);
    }
  };
  add_simplex(s1);
  add_simplex(s2);
  return strict_system_feasible(std::move(a), std::move(b));
}

}  // namespace simpdeg
