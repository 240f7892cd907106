#include "theorems.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace simpdeg {

namespace {

// Run one hypothesis check; failures (returned false or a thrown hypothesis
// error) are recorded instead of propagated.
template <typename Fn>
bool precondition(TheoremVerdict& v, const std::string& name, Fn&& fn) {
  PreconditionEntry e;
  e.name = name;
  try {
    e.pass = fn(e.detail);
  } catch (const Error& err) {
    e.pass = false;
    e.detail = std::string(error_code_name(err.code())) + ": " + err.what();
  }
  v.preconditions.push_back(e);
  if (!e.pass) v.preconditions_ok = false;
  return e.pass;
}

std::vector<int> sorted_distinct_labels(const Simplex& s, const std::vector<int>& labels) {
  std::vector<int> out;
  out.reserve(s.v.size());
  for (VertexId v : s.v) out.push_back(labels[v]);
  std::sort(out.begin(), out.end());
  return out;
}

bool all_distinct(const std::vector<int>& sorted) {
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return false;
  return true;
}

std::vector<int> fully_coloured_simplices(const Triangulation& t, const std::vector<int>& labels) {
  std::vector<int> out;
  for (size_t i = 0; i < t.simplices().size(); ++i) {
    std::vector<int> ls = sorted_distinct_labels(t.simplices()[i], labels);
    if (all_distinct(ls)) out.push_back(static_cast<int>(i));
  }
  return out;
}

long long abs_ll(long long v) { return v < 0 ? -v : v; }

}  // namespace

std::pair<long long, std::vector<int>> count_cov_patterned(const Triangulation& t,
                                                           const Labelling& l,
                                                           const Polytope& p, const Point& y) {
  if (!is_generic(p, y))
    fail(ErrorCode::NonGenericPoint, "query point " + to_string(y) + " is not generic for P");
  if (auto bad = boundary_image_violation(t, l, p))
    fail(ErrorCode::BoundaryImageViolation,
         "boundary face #" + std::to_string(*bad) + " does not map into the boundary of P");
  CoverSet cover = cov(p, y);
  std::set<std::vector<int>> patterns(cover.simplices.begin(), cover.simplices.end());
  std::vector<int> witnesses;
  for (size_t i = 0; i < t.simplices().size(); ++i) {
    std::vector<int> ls = sorted_distinct_labels(t.simplices()[i], l.values());
    if (!all_distinct(ls)) continue;
    if (patterns.count(ls)) witnesses.push_back(static_cast<int>(i));
  }
  return {static_cast<long long>(witnesses.size()), witnesses};
}

TheoremVerdict check_theorem_2_1(const Triangulation& t, const Labelling& l, const Polytope& p,
                                 std::optional<Point> y) {
  TheoremVerdict v;
  v.theorem_id = "theorem-2-1";
  const int d = t.dim();

  precondition(v, "polytope-alphabet", [&](std::string& detail) {
    if (l.n() != static_cast<int>(p.size())) {
      detail = "labels 1.." + std::to_string(l.n()) + " but P has " + std::to_string(p.size()) +
               " vertices";
      return false;
    }
    if (d != p.dim()) {
      detail = "dimension mismatch";
      return false;
    }
    return true;
  });
  if (d == 2 && t.ambient_dim() == 2) {
    precondition(v, "neighboring-on-boundary", [&](std::string& detail) {
      if (is_nl_on_boundary(t, l)) return true;
      detail = "some boundary cycle is not neighboring";
      return false;
    });
  } else {
    precondition(v, "boundary-image-in-dP", [&](std::string& detail) {
      if (auto bad = boundary_image_violation(t, l, p)) {
        detail = "boundary face #" + std::to_string(*bad) + " maps outside the boundary of P";
        return false;
      }
      return true;
    });
  }

  Point query;
  bool have_query = precondition(v, "generic-query-point", [&](std::string& detail) {
    query = y ? *y : generic_interior_point(p);
    if (!is_generic(p, query)) {
      detail = "point " + to_string(query) + " lies on a spanned hyperplane";
      return false;
    }
    return true;
  });

  if (!v.preconditions_ok || !have_query) return v;

  bool deg_ok = precondition(v, "boundary-degree", [&](std::string&) {
    if (d == 2 && t.ambient_dim() == 2)
      v.degree = boundary_degree(t, l).total;
    else
      v.degree = boundary_map_degree(t, l, p);
    return true;
  });
  if (!deg_ok) return v;
  v.bound = abs_ll(v.degree);
  auto [count, witnesses] = count_cov_patterned(t, l, p, query);
  v.witness_simplices = std::move(witnesses);
  v.holds = count >= v.bound;
  return v;
}

TheoremVerdict check_fully_coloured(const Triangulation& t, const Labelling& l,
                                    const Polytope* p) {
  TheoremVerdict v;
  v.theorem_id = "fully-coloured";
  const int d = t.dim();

  precondition(v, "alphabet-size", [&](std::string& detail) {
    if (l.n() != d + 1) {
      detail = "needs n = d+1, got n = " + std::to_string(l.n());
      return false;
    }
    return true;
  });
  if (!v.preconditions_ok) return v;

  if (d == 2 && t.ambient_dim() == 2) {
    // Any (d+1)-labelling is neighboring, so the cycle degree always exists.
    v.degree = boundary_degree(t, l).total;
  } else {
    Polytope def;
    if (!p) def = standard_simplex_polytope(d);
    const Polytope& target = p ? *p : def;
    bool ok = precondition(v, "oriented-boundary-degree", [&](std::string&) {
      v.degree = boundary_map_degree(t, l, target);
      return true;
    });
    if (!ok) return v;
  }
  v.bound = abs_ll(v.degree);
  v.witness_simplices = fully_coloured_simplices(t, l.values());
  v.holds = static_cast<long long>(v.witness_simplices.size()) >= v.bound;
  return v;
}

TheoremVerdict check_polytopal(const Triangulation& t, const Labelling& l, const Polytope& p,
                               const std::vector<Point>* pebbles) {
  TheoremVerdict v;
  v.theorem_id = "polytopal";
  const int d = t.dim();
  const int n = l.n();

  precondition(v, "polytope-alphabet", [&](std::string& detail) {
    if (n != static_cast<int>(p.size())) {
      detail = "labels 1.." + std::to_string(n) + " but P has " + std::to_string(p.size()) +
               " vertices";
      return false;
    }
    if (d != p.dim()) {
      detail = "dimension mismatch";
      return false;
    }
    return true;
  });
  if (d == 2 && t.ambient_dim() == 2) {
    precondition(v, "neighboring-on-boundary", [&](std::string& detail) {
      if (is_nl_on_boundary(t, l)) return true;
      detail = "some boundary cycle is not neighboring";
      return false;
    });
  } else {
    precondition(v, "boundary-image-in-dP", [&](std::string& detail) {
      if (auto bad = boundary_image_violation(t, l, p)) {
        detail = "boundary face #" + std::to_string(*bad) + " maps outside the boundary of P";
        return false;
      }
      return true;
    });
  }

  std::vector<Point> pebble_points;
  bool have_pebbles = precondition(v, "verified-pebble-set", [&](std::string& detail) {
    if (pebbles) {
      pebble_points = *pebbles;
    } else if (d == 2) {
      pebble_points = pebble_set(p).points;
    } else {
      detail = "no pebble set supplied for d >= 3";
      throw Error(ErrorCode::PebbleSetUnavailable, detail);
    }
    if (auto bad = pebble_set_violation(p, pebble_points)) {
      detail = bad->nongeneric
                   ? "candidate " + std::to_string(bad->first) + " is not generic interior"
                   : "candidates " + std::to_string(bad->first) + " and " +
                         std::to_string(bad->second) + " share a cover simplex";
      return false;
    }
    if (static_cast<int>(pebble_points.size()) != n - d) {
      detail = "pebble set has " + std::to_string(pebble_points.size()) + " points, expected " +
               std::to_string(n - d);
      return false;
    }
    return true;
  });

  if (!v.preconditions_ok) return v;

  bool deg_ok = precondition(v, "boundary-degree", [&](std::string&) {
    if (d == 2 && t.ambient_dim() == 2)
      v.degree = boundary_degree(t, l).total;
    else
      v.degree = boundary_map_degree(t, l, p);
    return true;
  });
  if (!deg_ok) return v;
  v.bound = static_cast<long long>(n - d) * abs_ll(v.degree);
  v.witness_simplices = fully_coloured_simplices(t, l.values());

  if (have_pebbles) {
    for (const auto& pt : pebble_points) {
      CoverSet cover = cov(p, pt);
      std::set<std::vector<int>> patterns(cover.simplices.begin(), cover.simplices.end());
      std::vector<int> block;
      for (int wi : v.witness_simplices) {
        std::vector<int> ls = sorted_distinct_labels(t.simplices()[wi], l.values());
        if (patterns.count(ls)) block.push_back(wi);
      }
      v.pebble_blocks.push_back(std::move(block));
    }
  }

  v.holds = static_cast<long long>(v.witness_simplices.size()) >= v.bound;
  return v;
}

TheoremVerdict check_tucker(const Triangulation& t, const SignedLabelling& sl) {
  TheoremVerdict v;
  v.theorem_id = "tucker";
  const int d = t.dim();

  precondition(v, "label-alphabet", [&](std::string& detail) {
    if (sl.n() != d) {
      detail = "Tucker needs labels ±1..±d, got magnitudes up to " + std::to_string(sl.n());
      return false;
    }
    return true;
  });
  precondition(v, "antipodally-symmetric-boundary", [&](std::string& detail) {
    t.antipodal_pairs();
    (void)detail;
    return true;
  });
  precondition(v, "antipodal-labelling", [&](std::string& detail) {
    if (is_antipodal_on_boundary(t, sl)) return true;
    detail = "some boundary vertex has SL(-v) != -SL(v)";
    return false;
  });

  ComplementaryEdges comp = complementary_edges(t, sl);
  precondition(v, "no-boundary-complementary-edges", [&](std::string& detail) {
    if (comp.boundary.empty()) return true;
    detail = "boundary complementary edge (" + std::to_string(comp.boundary[0].a) + "," +
             std::to_string(comp.boundary[0].b) + ")";
    throw Error(ErrorCode::BoundaryComplementaryEdge, detail);
  });

  if (!v.preconditions_ok) return v;

  bool deg_ok = precondition(v, "boundary-degree", [&](std::string&) {
    if (d == 2 && t.ambient_dim() == 2)
      v.degree = boundary_degree_signed(t, sl).total;
    else
      v.degree = boundary_map_degree(t, to_cyclic(t, sl), crosspolytope(d));
    return true;
  });
  if (!deg_ok) return v;
  v.bound = abs_ll(v.degree);

  precondition(v, "degree-odd", [&](std::string& detail) {
    if (v.degree % 2 != 0) return true;
    detail = "degree " + std::to_string(v.degree) + " is even, contradicting the oddness lemma";
    return false;
  });

  for (const auto& e : comp.internal) v.witness_edges.push_back({e.a, e.b});
  v.holds = v.preconditions_ok &&
            static_cast<long long>(v.witness_edges.size()) >= v.bound && v.bound >= 1;
  return v;
}

TheoremVerdict check_ky_fan(const Triangulation& t, const SignedLabelling& sl,
                            const Polytope* p_acs) {
  TheoremVerdict v;
  v.theorem_id = "ky-fan";
  v.notes =
      "NL for signed labels uses the cyclic order (1..n,-1..-n) matching the ACS vertex listing";
  const int d = t.dim();
  const int n = sl.n();

  precondition(v, "antipodally-symmetric-boundary", [&](std::string& detail) {
    t.antipodal_pairs();
    (void)detail;
    return true;
  });
  precondition(v, "antipodal-labelling", [&](std::string& detail) {
    if (is_antipodal_on_boundary(t, sl)) return true;
    detail = "some boundary vertex has SL(-v) != -SL(v)";
    return false;
  });

  ComplementaryEdges comp = complementary_edges(t, sl);
  precondition(v, "no-complementary-edges", [&](std::string& detail) {
    if (comp.total() == 0) return true;
    const EdgeRef& e = comp.boundary.empty() ? comp.internal[0] : comp.boundary[0];
    detail = "complementary edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    throw Error(ErrorCode::ComplementaryEdgePresent, detail);
  });

  Polytope defaulted;
  const Polytope* target = p_acs;
  precondition(v, "acs-polytope", [&](std::string& detail) {
    if (!target) {
      if (d != 2) {
        detail = "an ACS polytope must be supplied for d >= 3";
        return false;
      }
      defaulted = default_acs_polygon(n);
      target = &defaulted;
    }
    if (static_cast<int>(target->size()) != 2 * n) {
      detail = "ACS polytope must have 2n vertices";
      return false;
    }
    if (!is_acs_polytope(*target)) {
      detail = "cov(0) contains a simplex that is neither an antipodal edge nor alternating";
      throw Error(ErrorCode::NotACS, detail);
    }
    return true;
  });

  if (d == 2 && t.ambient_dim() == 2) {
    precondition(v, "neighboring-on-boundary", [&](std::string& detail) {
      Labelling cyc = to_cyclic(t, sl);
      if (is_nl_on_boundary(t, cyc)) return true;
      detail = "a boundary cycle is not neighboring in the signed cyclic order";
      return false;
    });
  }

  if (!v.preconditions_ok) return v;

  bool deg_ok = precondition(v, "boundary-degree", [&](std::string&) {
    if (d == 2 && t.ambient_dim() == 2)
      v.degree = boundary_degree_signed(t, sl).total;
    else
      v.degree = boundary_map_degree(t, to_cyclic(t, sl), *target);
    return true;
  });
  if (!deg_ok) return v;
  v.bound = abs_ll(v.degree);

  for (size_t i = 0; i < t.simplices().size(); ++i) {
    std::vector<int> labels;
    for (VertexId u : t.simplices()[i].v) labels.push_back(sl.at(u));
    if (is_alternating_signed_set(labels)) v.witness_simplices.push_back(static_cast<int>(i));
  }
  v.holds = static_cast<long long>(v.witness_simplices.size()) >= v.bound;
  return v;
}

TheoremVerdict check_mod2(const Triangulation& t, const Labelling& l, const Polytope& p,
                          std::optional<Point> y) {
  TheoremVerdict v;
  v.theorem_id = "mod-2";
  const int d = t.dim();

  precondition(v, "polytope-alphabet", [&](std::string& detail) {
    if (l.n() != static_cast<int>(p.size())) {
      detail = "labels 1.." + std::to_string(l.n()) + " but P has " + std::to_string(p.size()) +
               " vertices";
      return false;
    }
    if (d != p.dim()) {
      detail = "dimension mismatch";
      return false;
    }
    return true;
  });
  precondition(v, "boundary-image-in-dP", [&](std::string& detail) {
    if (auto bad = boundary_image_violation(t, l, p)) {
      detail = "boundary face #" + std::to_string(*bad) + " maps outside the boundary of P";
      return false;
    }
    return true;
  });

  Point query;
  bool have_query = precondition(v, "generic-query-point", [&](std::string& detail) {
    query = y ? *y : generic_interior_point(p);
    if (!is_generic(p, query)) {
      detail = "point " + to_string(query) + " lies on a spanned hyperplane";
      return false;
    }
    return true;
  });

  if (!v.preconditions_ok || !have_query) return v;

  v.degree = mod2_degree(t, l, p);
  v.bound = v.degree == 0 ? 0 : 1;
  auto [count, witnesses] = count_cov_patterned(t, l, p, query);
  v.witness_simplices = std::move(witnesses);
  v.holds = count >= v.bound;
  return v;
}

Lemma31Report check_lemma_3_1(const CycleLabelSequence& signed_seq, int n) {
  Lemma31Report rep;
  if (n < 2) fail(ErrorCode::InvalidArgument, "antipodal labellings need n >= 2");
  const size_t len = signed_seq.size();
  if (len == 0 || len % 2 != 0)
    fail(ErrorCode::NotAntipodallySymmetric, "sequence length must be even");
  const size_t m = len / 2;
  for (size_t i = 0; i < m; ++i)
    if (signed_seq[i + m] != -signed_seq[i])
      fail(ErrorCode::NotAntipodallySymmetric,
           "entry " + std::to_string(i + m) + " is not the negation of entry " + std::to_string(i));
  std::vector<int> cyc = cyclic_sequence_from_signed(signed_seq, n);
  if (!is_neighboring(cyc, 2 * n))
    fail(ErrorCode::NotNeighboring, "sequence is not neighboring in the signed cyclic order");

  rep.degree = cycle_degree(cyc, 2 * n);
  rep.odd = (rep.degree % 2) != 0;

  // Decomposition of the proof: rotate so the walk starts at +1, cut the
  // first half at alternating first occurrences of -1 and +1, and close each
  // piece with its own negation.
  size_t start = 0;
  while (start < len && signed_seq[start] != 1) ++start;
  if (start == len)
    fail(ErrorCode::InternalInconsistency, "antipodal NL sequence without label +1");
  std::vector<int> rot(len);
  for (size_t i = 0; i < len; ++i) rot[i] = signed_seq[(start + i) % len];

  std::vector<size_t> ks{0};
  int target = -1;
  while (true) {
    size_t next = ks.back() + 1;
    while (next <= m && rot[next] != target) ++next;
    if (next > m) break;
    ks.push_back(next);
    target = -target;
  }
  rep.k_indices = ks;
  rep.ell = static_cast<int>(ks.size()) - 1;

  long long sum = 0;
  for (size_t b = 0; b + 1 < ks.size(); ++b) {
    size_t lo = ks[b], hi = ks[b + 1];
    std::vector<int> block;
    for (size_t i = lo; i <= hi; ++i) block.push_back(rot[i]);
    for (size_t i = lo + 1; i + 1 <= hi; ++i) block.push_back(-rot[i]);
    long long dg = cycle_degree(cyclic_sequence_from_signed(block, n), 2 * n);
    rep.r_degrees.push_back(dg);
    sum += dg;
  }
  bool blocks_ok = rep.ell >= 1 && rep.ell % 2 == 1;
  for (long long dg : rep.r_degrees)
    if (dg != 1 && dg != -1) blocks_ok = false;
  if (sum != rep.degree)
    fail(ErrorCode::InternalInconsistency,
         "block degrees sum to " + std::to_string(sum) + " but deg(L) = " +
             std::to_string(rep.degree));
  rep.holds = rep.odd && blocks_ok;
  return rep;
}

Polytope default_acs_polygon(int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "ACS polygon needs n >= 2");
  // n exact rational points on the upper unit circle (tangent half-angle
  // t = k/n), then their antipodes: listing p_1..p_n, -p_1..-p_n.
  std::vector<Point> pts;
  for (int k = 0; k < n; ++k) {
    Rational t(k, n);
    Rational den = 1 + t * t;
    pts.push_back(Point{(1 - t * t) / den, 2 * t / den});
  }
  for (int k = 0; k < n; ++k) pts.push_back(negated(pts[k]));
  return Polytope::build(std::move(pts));
}

}  // namespace simpdeg
