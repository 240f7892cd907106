#include "labelling.hpp"

#include <string>

#include "errors.hpp"

namespace simpdeg {

Labelling::Labelling(const Triangulation& t, int n, std::vector<int> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 1) fail(ErrorCode::Validation, "label count must be >= 1");
  if (labels_.size() != t.num_vertices())
    fail(ErrorCode::Validation, "labelling must be total: expected " +
                                    std::to_string(t.num_vertices()) + " labels, got " +
                                    std::to_string(labels_.size()));
  for (size_t v = 0; v < labels_.size(); ++v)
    if (labels_[v] < 1 || labels_[v] > n)
      fail(ErrorCode::Validation, "label " + std::to_string(labels_[v]) + " at vertex " +
                                      std::to_string(v) + " outside 1.." + std::to_string(n));
}

SignedLabelling::SignedLabelling(const Triangulation& t, int n, std::vector<int> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 1) fail(ErrorCode::Validation, "label magnitude count must be >= 1");
  if (labels_.size() != t.num_vertices())
    fail(ErrorCode::Validation, "labelling must be total: expected " +
                                    std::to_string(t.num_vertices()) + " labels, got " +
                                    std::to_string(labels_.size()));
  for (size_t v = 0; v < labels_.size(); ++v) {
    int l = labels_[v];
    if (l == 0 || l < -n || l > n)
      fail(ErrorCode::Validation, "signed label " + std::to_string(l) + " at vertex " +
                                      std::to_string(v) + " outside ±1..±" + std::to_string(n));
  }
}

int cyclic_from_signed_label(int signed_label, int n) {
  return signed_label > 0 ? signed_label : n - signed_label;
}

int signed_from_cyclic_label(int cyclic_label, int n) {
  return cyclic_label <= n ? cyclic_label : -(cyclic_label - n);
}

Labelling to_cyclic(const Triangulation& t, const SignedLabelling& sl) {
  std::vector<int> out(sl.values().size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = cyclic_from_signed_label(sl.values()[i], sl.n());
  return Labelling(t, 2 * sl.n(), std::move(out));
}

SignedLabelling to_signed(const Triangulation& t, const Labelling& l) {
  if (l.n() % 2 != 0)
    fail(ErrorCode::InvalidArgument, "cyclic label count must be even to convert to signed");
  int n = l.n() / 2;
  std::vector<int> out(l.values().size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = signed_from_cyclic_label(l.values()[i], n);
  return SignedLabelling(t, n, std::move(out));
}

CycleLabelSequence cycle_sequence(const Labelling& l, const BoundaryCycle& cycle) {
  CycleLabelSequence seq;
  seq.reserve(cycle.loop.size());
  for (VertexId v : cycle.loop) seq.push_back(l.at(v));
  return seq;
}

CycleLabelSequence cycle_sequence_signed(const SignedLabelling& l, const BoundaryCycle& cycle) {
  CycleLabelSequence seq;
  seq.reserve(cycle.loop.size());
  for (VertexId v : cycle.loop) seq.push_back(l.at(v));
  return seq;
}

std::vector<int> cyclic_sequence_from_signed(const CycleLabelSequence& signed_seq, int n) {
  std::vector<int> out(signed_seq.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = cyclic_from_signed_label(signed_seq[i], n);
  return out;
}

bool is_neighboring(const CycleLabelSequence& seq, int n) {
  if (seq.empty()) return false;
  const size_t m = seq.size();
  for (size_t i = 0; i < m; ++i) {
    int a = seq[i], b = seq[(i + 1) % m];
    int d = ((b - a) % n + n) % n;
    if (d != 0 && d != 1 && d != n - 1) return false;
  }
  return true;
}

bool is_nl_on_boundary(const Triangulation& t, const Labelling& l) {
  for (const auto& cyc : t.boundary_cycles())
    if (!is_neighboring(cycle_sequence(l, cyc), l.n())) return false;
  return true;
}

bool is_antipodal_on_boundary(const Triangulation& t, const SignedLabelling& sl) {
  std::vector<VertexId> pair = t.antipodal_pairs();
  for (VertexId v = 0; v < static_cast<VertexId>(pair.size()); ++v) {
    if (pair[v] < 0) continue;
    if (sl.at(pair[v]) != -sl.at(v)) return false;
  }
  return true;
}

ComplementaryEdges complementary_edges(const Triangulation& t, const SignedLabelling& sl) {
  ComplementaryEdges out;
  const auto& edges = t.edges();
  for (size_t i = 0; i < edges.size(); ++i) {
    VertexId a = edges[i][0], b = edges[i][1];
    if (sl.at(a) != -sl.at(b)) continue;
    EdgeRef e{a, b, t.edge_on_boundary(i)};
    (e.boundary ? out.boundary : out.internal).push_back(e);
  }
  return out;
}

}  // namespace simpdeg
