#ifndef FILLPAIR_CONSTRUCTIONS_HPP
#define FILLPAIR_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fillpair/surgery.hpp"

namespace fillpair {

// Attaching scheme for odd genus g: single SWNE surgeries at crossings
// 1..g-1 of the g-crossing seed.  The A-graph is a path, hence a tree.
inline Scheme odd_scheme(int g) {
  if (g < 3 || g % 2 == 0)
    throw error("odd_scheme: genus must be odd and >= 3");
  Scheme scheme{g, {}};
  for (int p = 1; p < g; ++p)
    scheme.arcs.push_back(point_arc(SurgeryKind::SingleSWNE, p, g));
  return scheme;
}

// Attaching scheme for even genus g: one double surgery at crossing 0,
// then single SWNE surgeries at crossings 3..g-1.
inline Scheme even_scheme(int g) {
  if (g < 4 || g % 2 != 0)
    throw error("even_scheme: genus must be even and >= 4");
  Scheme scheme{g, {}};
  scheme.arcs.push_back(point_arc(SurgeryKind::Double, 0, g));
  for (int p = 3; p < g; ++p)
    scheme.arcs.push_back(point_arc(SurgeryKind::SingleSWNE, p, g));
  return scheme;
}

inline Scheme minimal_scheme(int g) {
  if (g == 2)
    throw error("no 3-crossing filling pair exists on genus 2: every "
                "1-handle attachment at either seed crossing bands a face to "
                "itself, so no attaching tree exists; genus 2 needs 4 crossings");
  if (g < 3)
    throw error("minimal_scheme: genus must be >= 3");
  return g % 2 == 1 ? odd_scheme(g) : even_scheme(g);
}

// Minimally intersecting coherent filling pair on the closed genus-g
// surface: n = 2g-1 crossings and a single complementary disc.
inline CurvePair minimal_closed(int g) {
  return apply_scheme(minimal_scheme(g));
}

struct Genus2Candidate {
  int crossing = 0;
  SurgeryKind kind = SurgeryKind::SingleSWNE;
  std::pair<int, int> edge{0, 0};
  bool self_loop = false;
};

struct Genus2Report {
  std::vector<Genus2Candidate> candidates;
  int tree_count = 0;
};

// Exhausts the point-local schemes with one handle on the 2-crossing
// seed.  Every candidate edge is a self-loop (the seed's two faces meet
// both crossings on both relevant corners), so no attaching tree exists
// and no 3-crossing filling pair arises.
inline Genus2Report genus2_search() {
  Genus2Report report;
  for (int crossing = 0; crossing < 2; ++crossing) {
    for (SurgeryKind kind : {SurgeryKind::SingleSWNE, SurgeryKind::SingleNWSE}) {
      const Scheme scheme = point_scheme(2, {{crossing, kind}});
      const AGraph graph = a_graph(scheme);
      Genus2Candidate cand;
      cand.crossing = crossing;
      cand.kind = kind;
      cand.edge = graph.edges.front();
      cand.self_loop = cand.edge.first == cand.edge.second;
      if (is_tree(graph))
        report.tree_count++;
      report.candidates.push_back(cand);
    }
  }
  return report;
}

// Scheme for the punctured construction: start from the parity scheme on
// the (g+p-1)-crossing seed and drop the last p-1 single-surgery handles,
// leaving a forest with p tree components.  Dropping the (NW,SW) handle
// of a double demotes it to a single SWNE surgery; that path is kept as a
// fallback though the shipped schemes never need it.
inline Scheme punctured_scheme(int g, int p) {
  if (g < 3)
    throw error("punctured_scheme: genus must be >= 3");
  if (p < 1)
    throw error("punctured_scheme: puncture count must be >= 1");
  Scheme scheme = minimal_scheme(g + p - 1);
  int to_remove = p - 1;
  for (int i = static_cast<int>(scheme.arcs.size()) - 1;
       i >= 0 && to_remove > 0; --i) {
    if (scheme.arcs[i].interior.empty()) {
      scheme.arcs.erase(scheme.arcs.begin() + i);
      --to_remove;
    }
  }
  for (auto &arc : scheme.arcs) {
    if (to_remove == 0)
      break;
    if (!arc.interior.empty()) {
      arc.interior.clear(); // demote a double to a single SWNE
      --to_remove;
    }
  }
  if (to_remove > 0)
    throw error("punctured_scheme: infeasible handle removal request");
  return scheme;
}

// Minimal coherent filling pair on the genus-g surface with p punctures:
// n = 2g+p-2 crossings, p complementary discs, one puncture in each.
inline CurvePair minimal_punctured(int g, int p) {
  const Scheme scheme = punctured_scheme(g, p);
  const CurvePair bare = apply_scheme(scheme);
  const int face_count = faces(bare).face_count();
  if (face_count != p)
    throw error("minimal_punctured: face count does not match puncture count");
  std::map<int, int> marks;
  for (int f = 0; f < p; ++f)
    marks[f] = 1;
  return CurvePair(bare.h(), bare.v(), std::move(marks));
}

struct EnumerationOptions {
  long long budget = 1'000'000; // candidate assignments to examine
  bool dedup = true;
  bool modulo_swap = false;     // also identify (h,v) with (v,h)
  bool modulo_reversal = false; // also identify (h,v) with its mirrors
                                // (h^-1,v), (h,v^-1), (h^-1,v^-1)
};

struct EnumerationClass {
  CurvePair representative;
  Scheme scheme;
  int size = 1;
};

struct EnumerationResult {
  std::vector<EnumerationClass> classes;
  long long candidates = 0;
  int survivors = 0;
  bool partial = false;
};

namespace detail {

// Variant orbit of (h, v) under the enabled symmetries: reversing either
// curve's orientation mirrors the configuration, swapping exchanges the
// curve roles; the closure of the enabled generators is compared.
inline bool pairs_equivalent(const CurvePair &a, const CurvePair &b,
                             const EnumerationOptions &opts) {
  std::vector<std::pair<Permutation, Permutation>> variants;
  variants.emplace_back(b.h(), b.v());
  if (opts.modulo_reversal) {
    variants.emplace_back(b.h().inverse(), b.v());
    variants.emplace_back(b.h(), b.v().inverse());
    variants.emplace_back(b.h().inverse(), b.v().inverse());
  }
  if (opts.modulo_swap) {
    const size_t unswapped = variants.size();
    for (size_t i = 0; i < unswapped; ++i)
      variants.emplace_back(variants[i].second, variants[i].first);
  }
  for (const auto &[h2, v2] : variants)
    if (simultaneous_conjugacy(a.h(), a.v(), h2, v2))
      return true;
  return false;
}

} // namespace detail

// Exhausts assignments of {none, SingleSWNE, SingleNWSE, Double} to the
// seed crossings with g-1 handles in total, keeps the assignments whose
// A-graph is a tree, applies them, and groups the resulting pairs by
// simultaneous conjugacy.  Deterministic: assignments are visited in
// lexicographic order and class representatives are first-seen.
inline EnumerationResult
enumerate_point_schemes(int g, const EnumerationOptions &opts = {}) {
  if (g < 1)
    throw error("enumerate_point_schemes: genus must be >= 1");
  const int m = g;
  const int handles_wanted = g - 1;
  EnumerationResult result;

  std::vector<std::pair<int, SurgeryKind>> chosen;
  // kinds in lexicographic order: none, SWNE, NWSE, Double
  const std::vector<std::optional<SurgeryKind>> kinds = {
      std::nullopt, SurgeryKind::SingleSWNE, SurgeryKind::SingleNWSE,
      SurgeryKind::Double};

  auto weight = [](SurgeryKind kind) {
    return kind == SurgeryKind::Double ? 2 : 1;
  };

  auto record = [&](const Scheme &scheme) {
    const AGraph graph = a_graph(scheme);
    if (!is_tree(graph))
      return;
    CurvePair pair = apply_scheme(scheme);
    const SurfaceStats st = stats(pair);
    if (st.crossings != 2 * g - 1 || st.faces != 1 || st.genus != g ||
        !pair.h().is_full_cycle() || !pair.v().is_full_cycle())
      throw error("enumerate_point_schemes: tree scheme failed minimality");
    result.survivors++;
    if (opts.dedup) {
      for (auto &cls : result.classes) {
        if (detail::pairs_equivalent(pair, cls.representative, opts)) {
          cls.size++;
          return;
        }
      }
    }
    result.classes.push_back({std::move(pair), scheme, 1});
  };

  bool stop = false;
  auto visit = [&](auto &&self, int crossing, int remaining) -> void {
    if (stop)
      return;
    if (crossing == m) {
      if (remaining != 0)
        return;
      if (result.candidates >= opts.budget) {
        result.partial = true;
        stop = true;
        return;
      }
      result.candidates++;
      record(point_scheme(m, chosen));
      return;
    }
    for (const auto &kind : kinds) {
      if (!kind) {
        self(self, crossing + 1, remaining);
      } else if (weight(*kind) <= remaining) {
        chosen.emplace_back(crossing, *kind);
        self(self, crossing + 1, remaining - weight(*kind));
        chosen.pop_back();
      }
      if (stop)
        return;
    }
  };
  visit(visit, 0, handles_wanted);
  return result;
}

} // namespace fillpair

#endif
