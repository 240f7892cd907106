#include "degree.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace simpdeg {

namespace {

void require_nl(const CycleLabelSequence& seq, int n, const char* who) {
  if (!is_neighboring(seq, n))
    fail(ErrorCode::NotNeighboring, std::string(who) + ": sequence is not neighboring for n = " +
                                        std::to_string(n));
}

}  // namespace

long long pair_degree(const CycleLabelSequence& seq, int i, int n) {
  if (i < 1 || i > n) fail(ErrorCode::InvalidArgument, "pair index outside 1..n");
  require_nl(seq, n, "pair_degree");
  const int j = i % n + 1;
  const size_t m = seq.size();
  long long pos = 0, neg = 0;
  for (size_t k = 0; k < m; ++k) {
    int a = seq[k], b = seq[(k + 1) % m];
    if (a == i && b == j) ++pos;
    if (a == j && b == i) ++neg;
  }
  return pos - neg;
}

CycleDegreeReport cycle_degree_report(const CycleLabelSequence& seq, int n) {
  require_nl(seq, n, "cycle_degree");
  const size_t m = seq.size();

  // Transition counting for every adjacent pair in one pass.
  std::vector<long long> up(n, 0), down(n, 0);  // up[i-1]: i -> i+1
  for (size_t k = 0; k < m; ++k) {
    int a = seq[k], b = seq[(k + 1) % m];
    if (a == b) continue;
    if (b == a % n + 1) ++up[a - 1];
    if (a == b % n + 1) ++down[b - 1];
  }
  CycleDegreeReport rep;
  rep.per_pair.resize(n);
  for (int i = 0; i < n; ++i) rep.per_pair[i] = up[i] - down[i];

  // Lift partial sums: steps in {-1, 0, +1}. For n <= 2 the two step
  // directions coincide in the cyclic order, so use literal differences
  // (cyclic sums of which telescope to 0, the degree for n <= 2).
  long long lift_value;
  if (n <= 2) {
    long long s = 0;
    for (size_t k = 0; k < m; ++k) s += seq[(k + 1) % m] - seq[k];
    if (s != 0)
      fail(ErrorCode::InternalInconsistency, "literal lift steps did not telescope");
    lift_value = 0;
  } else {
    long long s = 0;
    for (size_t k = 0; k < m; ++k) {
      int a = seq[k], b = seq[(k + 1) % m];
      int d = ((b - a) % n + n) % n;
      if (d == 1) ++s;
      else if (d == n - 1) --s;
    }
    if (s % n != 0)
      fail(ErrorCode::InternalInconsistency, "lift sum is not a multiple of n");
    lift_value = s / n;
  }

  for (int i = 0; i < n; ++i)
    if (rep.per_pair[i] != lift_value)
      fail(ErrorCode::InternalInconsistency,
           "pair degree deg([" + std::to_string(i + 1) + "," + std::to_string(i % n + 2) +
               "]) = " + std::to_string(rep.per_pair[i]) + " disagrees with lift value " +
               std::to_string(lift_value));
  rep.value = lift_value;
  return rep;
}

long long cycle_degree(const CycleLabelSequence& seq, int n) {
  return cycle_degree_report(seq, n).value;
}

DegreeReport boundary_degree(const Triangulation& t, const Labelling& l) {
  DegreeReport rep;
  rep.method = "cycle-transition-count+lift";
  const auto& cycles = t.boundary_cycles();
  for (size_t c = 0; c < cycles.size(); ++c) {
    CycleLabelSequence seq = cycle_sequence(l, cycles[c]);
    if (!is_neighboring(seq, l.n()))
      fail(ErrorCode::NotNeighboring,
           "boundary cycle " + std::to_string(c) + " is not neighboring for n = " +
               std::to_string(l.n()));
    rep.per_cycle.push_back(cycle_degree_report(seq, l.n()));
    rep.total += rep.per_cycle.back().value;
  }
  return rep;
}

DegreeReport boundary_degree_signed(const Triangulation& t, const SignedLabelling& sl) {
  DegreeReport rep;
  rep.method = "signed-to-cyclic";
  const auto& cycles = t.boundary_cycles();
  for (size_t c = 0; c < cycles.size(); ++c) {
    CycleLabelSequence seq =
        cyclic_sequence_from_signed(cycle_sequence_signed(sl, cycles[c]), sl.n());
    if (!is_neighboring(seq, 2 * sl.n()))
      fail(ErrorCode::NotNeighboring,
           "boundary cycle " + std::to_string(c) +
               " is not neighboring in the cyclic order (1..n,-1..-n)");
    rep.per_cycle.push_back(cycle_degree_report(seq, 2 * sl.n()));
    rep.total += rep.per_cycle.back().value;
  }
  return rep;
}

std::optional<size_t> boundary_image_violation(const Triangulation& t, const Labelling& l,
                                               const Polytope& p) {
  for (size_t fi = 0; fi < t.boundary_faces().size(); ++fi) {
    const auto& f = t.boundary_faces()[fi];
    std::vector<int> ids;
    ids.reserve(f.v.size());
    for (VertexId v : f.v) ids.push_back(l.at(v) - 1);
    if (p.facet_containing(ids) < 0) return fi;
  }
  return std::nullopt;
}

long long map_degree_at(const Triangulation& t, const Labelling& l, const Polytope& p,
                        const Point& y, bool verify_boundary) {
  const int d = p.dim();
  if (t.dim() != d || t.ambient_dim() != d)
    fail(ErrorCode::InvalidArgument,
         "map_degree_at requires a full-dimensional triangulation matching the polytope dimension");
  if (l.n() != static_cast<int>(p.size()))
    fail(ErrorCode::InvalidArgument, "label alphabet must match the polytope vertex count");
  if (!is_generic(p, y))
    fail(ErrorCode::NonGenericPoint,
         "query point " + to_string(y) + " lies on a spanned hyperplane of P");
  if (verify_boundary) {
    if (auto bad = boundary_image_violation(t, l, p))
      fail(ErrorCode::BoundaryImageViolation,
           "boundary face #" + std::to_string(*bad) + " does not map into the boundary of P");
  }

  long long total = 0;
  for (const auto& s : t.simplices()) {
    bool repeated = false;
    for (size_t i = 0; i < s.v.size() && !repeated; ++i)
      for (size_t j = i + 1; j < s.v.size(); ++j)
        if (l.at(s.v[i]) == l.at(s.v[j])) {
          repeated = true;
          break;
        }
    if (repeated) continue;
    std::vector<Point> image;
    image.reserve(s.v.size());
    for (VertexId v : s.v) image.push_back(p.vertex(l.at(v) - 1));
    int o = orientation_sign(image);
    if (o == 0) continue;
    Containment c = d == 2 ? point_in_triangle2(y, image[0], image[1], image[2])
                           : point_in_simplex(y, image);
    if (c == Containment::Boundary)
      fail(ErrorCode::InternalInconsistency,
           "generic point lies on the boundary of an image simplex");
    if (c == Containment::Inside) total += o;
  }
  return total;
}

namespace {

// Shared facet-preimage scan. Returns per-face signed contributions (for the
// oriented degree) or unsigned hits (for the mod-2 degree).
struct FacetScan {
  long long signed_total = 0;
  long long hits = 0;
};

FacetScan facet_preimage_scan(const Triangulation& t, const Labelling& l, const Polytope& p,
                              size_t facet_index) {
  const int d = p.dim();
  const Facet& f = p.facets()[facet_index];
  const Point z = generic_facet_point(p, facet_index);

  FacetScan out;
  for (const auto& face : t.boundary_faces()) {
    std::vector<int> ids;
    ids.reserve(face.v.size());
    bool in_facet = true;
    for (VertexId v : face.v) {
      int id = l.at(v) - 1;
      if (!std::binary_search(f.vertices.begin(), f.vertices.end(), id)) {
        in_facet = false;
        break;
      }
      ids.push_back(id);
    }
    if (!in_facet) continue;
    std::vector<Point> image;
    image.reserve(ids.size());
    for (int id : ids) image.push_back(p.vertex(id));
    auto bc = barycentric(z, image);
    if (!bc) continue;  // degenerate image or z off its span
    bool strict = true;
    for (const auto& c : *bc)
      if (c <= 0) {
        strict = false;
        break;
      }
    if (!strict) continue;
    ++out.hits;
    // Orientation of the image within the facet hyperplane, outward normal
    // listed first.
    std::vector<std::vector<Rational>> m;
    m.push_back(f.normal);
    for (size_t i = 1; i < image.size(); ++i) m.push_back(diff(image[i], image[0]));
    int o = sign_of_det(std::move(m));
    if (o == 0)
      fail(ErrorCode::InternalInconsistency, "nondegenerate facet image with singular frame");
    out.signed_total += o;
  }
  return out;
}

void require_boundary_image(const Triangulation& t, const Labelling& l, const Polytope& p) {
  if (auto bad = boundary_image_violation(t, l, p)) {
    const auto& f = t.boundary_faces()[*bad];
    std::string labels;
    for (VertexId v : f.v) labels += (labels.empty() ? "" : ",") + std::to_string(l.at(v));
    fail(ErrorCode::BoundaryImageViolation,
         "boundary face with labels {" + labels + "} does not map into a proper face of P");
  }
}

}  // namespace

long long boundary_map_degree(const Triangulation& t, const Labelling& l, const Polytope& p,
                              std::optional<size_t> facet_index) {
  const int d = p.dim();
  if (t.dim() != d)
    fail(ErrorCode::InvalidArgument, "triangulation dimension must match the polytope dimension");
  if (l.n() != static_cast<int>(p.size()))
    fail(ErrorCode::InvalidArgument, "label alphabet must match the polytope vertex count");
  if (!t.orientable())
    fail(ErrorCode::IncoherentOrientation,
         "boundary_map_degree requires a coherently oriented triangulation");
  if (t.boundary_faces().empty())
    fail(ErrorCode::InvalidArgument, "triangulation has an empty boundary");
  require_boundary_image(t, l, p);
  return facet_preimage_scan(t, l, p, facet_index.value_or(0)).signed_total;
}

int mod2_degree(const Triangulation& t, const Labelling& l, const Polytope& p,
                std::optional<size_t> facet_index) {
  const int d = p.dim();
  if (t.dim() != d)
    fail(ErrorCode::InvalidArgument, "triangulation dimension must match the polytope dimension");
  if (l.n() != static_cast<int>(p.size()))
    fail(ErrorCode::InvalidArgument, "label alphabet must match the polytope vertex count");
  if (t.boundary_faces().empty())
    fail(ErrorCode::InvalidArgument, "triangulation has an empty boundary");
  require_boundary_image(t, l, p);
  return static_cast<int>(facet_preimage_scan(t, l, p, facet_index.value_or(0)).hits % 2);
}

}  // namespace simpdeg
