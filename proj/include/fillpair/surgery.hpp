#ifndef FILLPAIR_SURGERY_HPP
#define FILLPAIR_SURGERY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fillpair/surface_map.hpp"

namespace fillpair {

// Point-local surgeries at a crossing p.  SingleSWNE bands the faces of
// the SW and NE corners of p; SingleNWSE is its mirror; Double attaches
// two bands, (NW,SW) and (SW,NE), rerouting beta through one extra
// interior crossing west of p.
enum class SurgeryKind { SingleSWNE, SingleNWSE, Double };

// Side of the splice point carrying the entry crossing of an arc.
enum class EntrySide { East, West };

// Placement of an interior arc crossing: `gap` g is the stretch of alpha
// between seed crossings g and g+1 (mod m); `rank` orders the crossings
// sharing a gap, west to east.  Entry/exit crossings sit at the reserved
// extremes of the gaps flanking their splice point and need no rank.
struct CrossingPosition {
  int gap = 0;
  int rank = 0;
  friend bool operator==(const CrossingPosition &, const CrossingPosition &) = default;
};

// One gamma arc of an attaching scheme: beta is sheared at `splice`, runs
// through the entry crossing adjacent on `entry_side`, the interior
// crossings in order, and the exit crossing adjacent on the far side.
// Every crossing with alpha is coherent (south to north).
struct GammaArc {
  int splice = 0;
  EntrySide entry_side = EntrySide::East;
  std::vector<CrossingPosition> interior;
  friend bool operator==(const GammaArc &, const GammaArc &) = default;
};

struct Scheme {
  int seed_m = 0;
  std::vector<GammaArc> arcs;

  // One handle per consecutive pair of arc crossings.
  int handle_count() const {
    int h = 0;
    for (const auto &arc : arcs)
      h += 1 + static_cast<int>(arc.interior.size());
    return h;
  }

  friend bool operator==(const Scheme &, const Scheme &) = default;
};

inline GammaArc point_arc(SurgeryKind kind, int crossing, int seed_m) {
  switch (kind) {
  case SurgeryKind::SingleSWNE:
    return GammaArc{crossing, EntrySide::East, {}};
  case SurgeryKind::SingleNWSE:
    return GammaArc{crossing, EntrySide::West, {}};
  case SurgeryKind::Double:
    return GammaArc{crossing, EntrySide::East,
                    {CrossingPosition{(crossing + seed_m - 1) % seed_m, 0}}};
  }
  throw error("point_arc: unknown surgery kind");
}

inline Scheme point_scheme(int seed_m,
                           const std::vector<std::pair<int, SurgeryKind>> &surgeries) {
  Scheme scheme{seed_m, {}};
  for (auto [crossing, kind] : surgeries)
    scheme.arcs.push_back(point_arc(kind, crossing, seed_m));
  return scheme;
}

// Multigraph on the seed faces with one edge per handle, in arc order then
// segment order.  Self-loops allowed.
struct AGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

struct ComponentInfo {
  std::vector<int> vertices;
  int edge_count = 0;
  bool acyclic = false;
};

// Throws naming the violated condition; valid schemes pass silently.
inline void validate_scheme_structure(const Scheme &scheme) {
  const int m = scheme.seed_m;
  if (m < 1)
    throw error("scheme: seed must have at least one crossing");
  std::vector<char> spliced(m, 0);
  std::vector<std::vector<int>> gap_ranks(m);
  for (const auto &arc : scheme.arcs) {
    if (arc.splice < 0 || arc.splice >= m)
      throw error("scheme: splice point " + std::to_string(arc.splice) +
                  " out of range");
    if (spliced[arc.splice])
      throw error("scheme: duplicate splice point " + std::to_string(arc.splice));
    spliced[arc.splice] = 1;
    for (const auto &pos : arc.interior) {
      if (pos.gap < 0 || pos.gap >= m)
        throw error("scheme: invalid gap index " + std::to_string(pos.gap));
      auto &ranks = gap_ranks[pos.gap];
      if (std::find(ranks.begin(), ranks.end(), pos.rank) != ranks.end())
        throw error("scheme: rank collision in gap " + std::to_string(pos.gap));
      ranks.push_back(pos.rank);
    }
  }
}

namespace detail {

// Gap sequence of an arc's crossings in traversal order, entry first.
inline std::vector<int> arc_gap_sequence(const GammaArc &arc, int m) {
  const int east_gap = arc.splice;
  const int west_gap = (arc.splice + m - 1) % m;
  std::vector<int> gaps;
  gaps.push_back(arc.entry_side == EntrySide::East ? east_gap : west_gap);
  for (const auto &pos : arc.interior)
    gaps.push_back(pos.gap);
  gaps.push_back(arc.entry_side == EntrySide::East ? west_gap : east_gap);
  return gaps;
}

} // namespace detail

// The band between consecutive arc crossings leaves the north side of the
// earlier one and lands on the south side of the later one; on the seed
// the face north of gap q is q and the face south of it is q-1.
inline AGraph a_graph(const Scheme &scheme) {
  validate_scheme_structure(scheme);
  const int m = scheme.seed_m;
  AGraph graph;
  graph.vertex_count = m;
  for (const auto &arc : scheme.arcs) {
    const auto gaps = detail::arc_gap_sequence(arc, m);
    for (size_t i = 0; i + 1 < gaps.size(); ++i)
      graph.edges.emplace_back(gaps[i], (gaps[i + 1] + m - 1) % m);
  }
  return graph;
}

inline std::vector<ComponentInfo> components(const AGraph &graph) {
  std::vector<std::vector<int>> adj(graph.vertex_count);
  for (auto [u, v] : graph.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> comp_of(graph.vertex_count, -1);
  std::vector<ComponentInfo> comps;
  for (int start = 0; start < graph.vertex_count; ++start) {
    if (comp_of[start] >= 0)
      continue;
    const int id = static_cast<int>(comps.size());
    ComponentInfo info;
    std::vector<int> stack{start};
    comp_of[start] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      info.vertices.push_back(u);
      for (int w : adj[u]) {
        if (comp_of[w] < 0) {
          comp_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(info.vertices.begin(), info.vertices.end());
    comps.push_back(std::move(info));
  }
  for (auto [u, v] : graph.edges)
    comps[comp_of[u]].edge_count++;
  for (auto &info : comps)
    info.acyclic =
        info.edge_count == static_cast<int>(info.vertices.size()) - 1;
  return comps;
}

inline bool is_forest(const AGraph &graph) {
  for (const auto &info : components(graph))
    if (!info.acyclic)
      return false;
  return true;
}

inline bool is_tree(const AGraph &graph) {
  auto comps = components(graph);
  return comps.size() == 1 && comps.front().acyclic;
}

// --- shear and splice -------------------------------------------------
//
// Crossing ids after a surgery: surviving crossings keep their ids, the
// exit crossing of each arc reuses the splice point's id, and entry plus
// interior crossings take fresh ids in creation order (arc order; within
// an arc: entry, then interiors along the traversal).  This makes the
// scheme route and the repeated-surgery route produce identical pairs.

// Splices one new band at `crossing`.  Beta is rerouted through two new
// crossings flanking the old one; both remain south-to-north.  The face
// count drops by one when the two banded corner faces differ and rises by
// one when the band runs a face to itself.
inline CurvePair single_surgery(const CurvePair &pair, int crossing,
                                SurgeryKind kind) {
  if (kind == SurgeryKind::Double)
    throw error("single_surgery: kind must be SingleSWNE or SingleNWSE");
  const int n = pair.n();
  if (crossing < 0 || crossing >= n)
    throw error("single_surgery: unknown crossing id " + std::to_string(crossing));
  const int fresh = n;
  std::vector<int> h = pair.h().images();
  std::vector<int> v = pair.v().images();
  h.push_back(0);
  v.push_back(0);
  // beta runs entry first: insert the fresh crossing before the old one
  v[pair.v().preimage(crossing)] = fresh;
  v[fresh] = crossing;
  if (kind == SurgeryKind::SingleSWNE) {
    // entry east of the splice point
    h[fresh] = h[crossing];
    h[crossing] = fresh;
  } else {
    // entry west
    h[pair.h().preimage(crossing)] = fresh;
    h[fresh] = crossing;
  }
  return CurvePair(Permutation(std::move(h)), Permutation(std::move(v)));
}

// Splices two bands at `crossing`: beta rises east of it, crosses back in
// the gap immediately west, rises again just west of it.  Alpha meets the
// three new crossings in the order (mid, exit, entry) around the old slot.
inline CurvePair double_surgery(const CurvePair &pair, int crossing) {
  const int n = pair.n();
  if (crossing < 0 || crossing >= n)
    throw error("double_surgery: unknown crossing id " + std::to_string(crossing));
  const int entry = n;
  const int mid = n + 1;
  const int before = pair.h().preimage(crossing);
  const int after = pair.h()(crossing);
  std::vector<int> h = pair.h().images();
  std::vector<int> v = pair.v().images();
  h.resize(n + 2);
  v.resize(n + 2);
  h[crossing] = entry;
  h[entry] = after == crossing ? mid : after; // n == 1 wraps through mid
  h[mid] = crossing;
  if (before != crossing)
    h[before] = mid;
  v[pair.v().preimage(crossing)] = entry;
  v[entry] = mid;
  v[mid] = crossing;
  return CurvePair(Permutation(std::move(h)), Permutation(std::move(v)));
}

// Realizes every arc of the scheme simultaneously on torus_seed(seed_m).
inline CurvePair apply_scheme(const Scheme &scheme) {
  validate_scheme_structure(scheme);
  const int m = scheme.seed_m;
  const int arc_count = static_cast<int>(scheme.arcs.size());

  std::vector<int> arc_at(m, -1);
  for (int i = 0; i < arc_count; ++i)
    arc_at[scheme.arcs[i].splice] = i;

  // ids: exits reuse splice ids, entry/interiors take fresh ones
  std::vector<int> entry_id(arc_count), exit_id(arc_count);
  std::vector<std::vector<int>> interior_id(arc_count);
  int next = m;
  for (int i = 0; i < arc_count; ++i) {
    entry_id[i] = next++;
    for (size_t j = 0; j < scheme.arcs[i].interior.size(); ++j)
      interior_id[i].push_back(next++);
    exit_id[i] = scheme.arcs[i].splice;
  }

  // interior crossings per gap, west to east by rank
  std::vector<std::vector<std::pair<int, int>>> gap_members(m); // (rank, id)
  for (int i = 0; i < arc_count; ++i)
    for (size_t j = 0; j < scheme.arcs[i].interior.size(); ++j) {
      const auto &pos = scheme.arcs[i].interior[j];
      gap_members[pos.gap].emplace_back(pos.rank, interior_id[i][j]);
    }
  for (auto &members : gap_members)
    std::sort(members.begin(), members.end());

  std::vector<int> alpha;
  for (int q = 0; q < m; ++q) {
    if (arc_at[q] < 0)
      alpha.push_back(q);
    else {
      // slot adjacent to q on its east side
      const auto &arc = scheme.arcs[arc_at[q]];
      alpha.push_back(arc.entry_side == EntrySide::East ? entry_id[arc_at[q]]
                                                        : exit_id[arc_at[q]]);
    }
    for (auto [rank, id] : gap_members[q])
      alpha.push_back(id);
    const int r = (q + 1) % m;
    if (arc_at[r] >= 0) {
      // slot adjacent to q+1 on its west side
      const auto &arc = scheme.arcs[arc_at[r]];
      alpha.push_back(arc.entry_side == EntrySide::East ? exit_id[arc_at[r]]
                                                        : entry_id[arc_at[r]]);
    }
  }

  std::vector<int> beta;
  for (int q = 0; q < m; ++q) {
    if (arc_at[q] < 0) {
      beta.push_back(q);
      continue;
    }
    const int i = arc_at[q];
    beta.push_back(entry_id[i]);
    for (int id : interior_id[i])
      beta.push_back(id);
    beta.push_back(exit_id[i]);
  }

  const int total = m + scheme.handle_count();
  std::vector<int> h(total), v(total);
  for (size_t i = 0; i < alpha.size(); ++i)
    h[alpha[i]] = alpha[(i + 1) % alpha.size()];
  for (size_t i = 0; i < beta.size(); ++i)
    v[beta[i]] = beta[(i + 1) % beta.size()];
  return CurvePair(Permutation(std::move(h)), Permutation(std::move(v)));
}

struct SchemeTarget {
  int genus = 0;
  int punctures = 0; // 0 = closed
};

struct SchemeReport {
  bool structurally_valid = true;
  std::string structural_error;
  int seed_m = 0;
  int handles = 0;
  int target_genus = 0;
  int target_punctures = 0;
  bool balance_ok = false; // handles == target_genus - 1
  int component_count = 0;
  bool forest = false;
  bool tree = false;
  int predicted_n = 0;
  std::optional<int> predicted_faces; // set when the A-graph is a forest
  std::optional<int> predicted_genus;
  int actual_n = 0;
  int actual_faces = 0;
  int actual_genus = 0;
  bool predictions_match = false;
  bool minimal = false; // actual counts hit the target minima
};

inline SchemeReport validate_scheme(const Scheme &scheme,
                                    const SchemeTarget &target) {
  SchemeReport report;
  report.seed_m = scheme.seed_m;
  report.target_genus = target.genus;
  report.target_punctures = target.punctures;
  try {
    validate_scheme_structure(scheme);
  } catch (const error &e) {
    report.structurally_valid = false;
    report.structural_error = e.what();
    return report;
  }
  report.handles = scheme.handle_count();
  report.balance_ok = report.handles == target.genus - 1;

  const AGraph graph = a_graph(scheme);
  const auto comps = components(graph);
  report.component_count = static_cast<int>(comps.size());
  report.forest = is_forest(graph);
  report.tree = report.forest && report.component_count == 1;

  report.predicted_n = scheme.seed_m + report.handles;
  if (report.forest) {
    report.predicted_faces = report.component_count;
    const int chi = report.component_count - report.predicted_n;
    if ((2 - chi) % 2 == 0)
      report.predicted_genus = (2 - chi) / 2;
  }

  const CurvePair pair = apply_scheme(scheme);
  const SurfaceStats st = stats(pair);
  report.actual_n = st.crossings;
  report.actual_faces = st.faces;
  report.actual_genus = st.genus;

  report.predictions_match = report.actual_n == report.predicted_n &&
                             (!report.predicted_faces ||
                              *report.predicted_faces == report.actual_faces) &&
                             (!report.predicted_genus ||
                              *report.predicted_genus == report.actual_genus);

  const int g = target.genus;
  const int p = target.punctures;
  if (p == 0)
    report.minimal = report.actual_n == 2 * g - 1 && report.actual_faces == 1 &&
                     report.actual_genus == g;
  else
    report.minimal = report.actual_n == 2 * g + p - 2 &&
                     report.actual_faces == p && report.actual_genus == g;
  return report;
}

} // namespace fillpair

#endif
