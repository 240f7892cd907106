// Vertex labellings, the neighboring (NL) and antipodal (ANL) predicates,
// signed-label conversion, complementary edges.
#pragma once

#include <vector>

#include "complex.hpp"

namespace simpdeg {

// Total labelling into {1, ..., n}.
class Labelling {
 public:
  Labelling(const Triangulation& t, int n, std::vector<int> labels);

  int n() const { return n_; }
  int at(VertexId v) const { return labels_[v]; }
  const std::vector<int>& values() const { return labels_; }

 private:
  int n_;
  std::vector<int> labels_;
};

// Total labelling into {±1, ..., ±n}.
class SignedLabelling {
 public:
  SignedLabelling(const Triangulation& t, int n, std::vector<int> labels);

  int n() const { return n_; }
  int at(VertexId v) const { return labels_[v]; }
  const std::vector<int>& values() const { return labels_; }

 private:
  int n_;
  std::vector<int> labels_;
};

// Signed alphabet to the cyclic alphabet of size 2n: +k -> k, -k -> n+k.
int cyclic_from_signed_label(int signed_label, int n);
int signed_from_cyclic_label(int cyclic_label, int n);

Labelling to_cyclic(const Triangulation& t, const SignedLabelling& sl);
SignedLabelling to_signed(const Triangulation& t, const Labelling& l);

// Label sequence read along a boundary cycle in its stored orientation.
using CycleLabelSequence = std::vector<int>;

CycleLabelSequence cycle_sequence(const Labelling& l, const BoundaryCycle& cycle);
CycleLabelSequence cycle_sequence_signed(const SignedLabelling& l, const BoundaryCycle& cycle);

std::vector<int> cyclic_sequence_from_signed(const CycleLabelSequence& signed_seq, int n);

// True iff every cyclically consecutive pair is equal or adjacent in the
// cyclic order on {1..n} (n and 1 adjacent).
bool is_neighboring(const CycleLabelSequence& seq, int n);

// NL on every boundary cycle (planar 2D triangulations).
bool is_nl_on_boundary(const Triangulation& t, const Labelling& l);

// SL(-v) == -SL(v) for all boundary vertices. Propagates
// NotAntipodallySymmetric from the pairing itself.
bool is_antipodal_on_boundary(const Triangulation& t, const SignedLabelling& sl);

struct EdgeRef {
  VertexId a, b;  // a < b
  bool boundary;
};

struct ComplementaryEdges {
  std::vector<EdgeRef> boundary;
  std::vector<EdgeRef> internal;
  size_t total() const { return boundary.size() + internal.size(); }
};

// All 1-simplices {u, v} with SL(u) == -SL(v), split by boundary membership.
ComplementaryEdges complementary_edges(const Triangulation& t, const SignedLabelling& sl);

}  // namespace simpdeg
