// Checkers that verify each bound against an instance, returning verdicts
// with explicit witness lists and per-hypothesis reports.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "degree.hpp"

namespace simpdeg {

struct PreconditionEntry {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct TheoremVerdict {
  std::string theorem_id;
  long long degree = 0;
  long long bound = 0;
  std::vector<int> witness_simplices;  // indices into T.simplices()
  std::vector<std::array<VertexId, 2>> witness_edges;
  std::vector<PreconditionEntry> preconditions;
  bool preconditions_ok = true;
  bool holds = false;
  std::string notes;
  // check_polytopal only: witness indices matching each pebble's cover.
  std::vector<std::vector<int>> pebble_blocks;

  size_t witness_count() const {
    return witness_simplices.size() + witness_edges.size();
  }
};

// Number of d-simplices of T whose label set equals the vertex set of some
// simplex in cov_P(y), plus the witnesses themselves.
std::pair<long long, std::vector<int>> count_cov_patterned(const Triangulation& t,
                                                           const Labelling& l,
                                                           const Polytope& p, const Point& y);

// At least |deg(L, boundary)| simplices labelled as simplices of cov_P(y).
TheoremVerdict check_theorem_2_1(const Triangulation& t, const Labelling& l, const Polytope& p,
                                 std::optional<Point> y = std::nullopt);

// n = d+1: at least |deg| fully coloured simplices.
TheoremVerdict check_fully_coloured(const Triangulation& t, const Labelling& l,
                                    const Polytope* p = nullptr);

// At least (n-d)|deg| fully labelled simplices, witnesses partitioned by a
// verified pebble set (constructed for polygons when not supplied).
TheoremVerdict check_polytopal(const Triangulation& t, const Labelling& l, const Polytope& p,
                               const std::vector<Point>* pebbles = nullptr);

// At least |deg| internal complementary edges for an antipodal labelling
// without boundary complementary edges.
TheoremVerdict check_tucker(const Triangulation& t, const SignedLabelling& sl);

// At least |deg| alternating simplices for an antipodal NL labelling with no
// complementary edges at all, against an ACS polytope.
TheoremVerdict check_ky_fan(const Triangulation& t, const SignedLabelling& sl,
                            const Polytope* p_acs = nullptr);

// Mod-2 version: one cov-patterned simplex whenever the mod-2 boundary
// degree is nonzero; no orientability requirement.
TheoremVerdict check_mod2(const Triangulation& t, const Labelling& l, const Polytope& p,
                          std::optional<Point> y = std::nullopt);

// Oddness of the degree of an antipodal NL cycle sequence, with the
// concatenation decomposition exposed as a diagnostic.
struct Lemma31Report {
  long long degree = 0;
  bool odd = false;
  int ell = 0;                        // number of decomposition blocks
  std::vector<size_t> k_indices;      // block cut positions in the rotated sequence
  std::vector<long long> r_degrees;   // per-block degrees, each expected ±1
  bool holds = false;
};

Lemma31Report check_lemma_3_1(const CycleLabelSequence& signed_seq, int n);

// The default ACS polygon used when check_ky_fan is not given one: a
// centrally symmetric 2n-gon with exact rational vertices on the unit circle.
Polytope default_acs_polygon(int n);

}  // namespace simpdeg
