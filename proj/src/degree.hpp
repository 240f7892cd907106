// Degree computations: circular degree of cyclic label sequences, boundary
// degree of planar triangulations, signed-preimage degree of the piecewise
// linear map induced by a labelling, and the mod-2 degree.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "labelling.hpp"
#include "polytope.hpp"

namespace simpdeg {

struct CycleDegreeReport {
  std::vector<long long> per_pair;  // per_pair[i-1] = deg([i, i+1]) for i = 1..n
  long long value = 0;
};

struct DegreeReport {
  std::vector<CycleDegreeReport> per_cycle;
  long long total = 0;
  std::string method;
};

// p(i) - n(i): signed count of (i, i+1) transitions around the cycle, index
// arithmetic cyclic. Requires an NL sequence.
long long pair_degree(const CycleLabelSequence& seq, int i, int n);

// The common value of all pair degrees. Runs both the transition count and
// the lift partial-sum algorithm and cross-checks them; a mismatch is a bug
// and raises InternalInconsistency.
CycleDegreeReport cycle_degree_report(const CycleLabelSequence& seq, int n);
long long cycle_degree(const CycleLabelSequence& seq, int n);

// Per-cycle degrees and their sum over all boundary components of a planar
// triangulation, cycles oriented outer-counterclockwise / holes-clockwise.
DegreeReport boundary_degree(const Triangulation& t, const Labelling& l);

// Signed labellings go through the cyclic alphabet (1..n, -1..-n).
DegreeReport boundary_degree_signed(const Triangulation& t, const SignedLabelling& sl);

// Index of a boundary face whose image is not contained in a single proper
// face of P, or nullopt when f_{L,P}(boundary) lies in the boundary of P.
std::optional<size_t> boundary_image_violation(const Triangulation& t, const Labelling& l,
                                               const Polytope& p);

// Signed count over d-simplices whose (nondegenerate) image simplex strictly
// contains y; equals the Brouwer degree of the induced map at y. Requires a
// generic y (throws NonGenericPoint) and a full-dimensional domain.
long long map_degree_at(const Triangulation& t, const Labelling& l, const Polytope& p,
                        const Point& y, bool verify_boundary_image = false);

// Degree of the boundary restriction, computed by signed preimage counting
// of a generic point interior to one facet of P. For planar triangulations
// this must agree with boundary_degree.
long long boundary_map_degree(const Triangulation& t, const Labelling& l, const Polytope& p,
                              std::optional<size_t> facet_index = std::nullopt);

// Parity of the unsigned facet-preimage count; defined without orientations.
int mod2_degree(const Triangulation& t, const Labelling& l, const Polytope& p,
                std::optional<size_t> facet_index = std::nullopt);

}  // namespace simpdeg
