#include <catch2/catch_amalgamated.hpp>

#include "fillpair/surgery.hpp"
#include "test_support.hpp"

using namespace fillpair;

namespace {

std::pair<int, int> normalized(std::pair<int, int> e) {
  return {std::min(e.first, e.second), std::max(e.first, e.second)};
}

std::vector<std::pair<int, int>> normalized_edges(const AGraph &graph) {
  std::vector<std::pair<int, int>> out;
  for (auto e : graph.edges)
    out.push_back(normalized(e));
  return out;
}

} // namespace

TEST_CASE("single surgery on seeds") {
  SECTION("seed 3, SWNE at crossing 1: distinct faces band together") {
    const CurvePair out = single_surgery(torus_seed(3), 1, SurgeryKind::SingleSWNE);
    const SurfaceStats st = stats(out);
    REQUIRE(st.crossings == 4);
    REQUIRE(st.faces == 2);
    REQUIRE(st.genus == 2);
  }
  SECTION("seed 2, SWNE at crossing 0: the band runs a face to itself") {
    const CurvePair out = single_surgery(torus_seed(2), 0, SurgeryKind::SingleSWNE);
    const SurfaceStats st = stats(out);
    REQUIRE(st.crossings == 3);
    REQUIRE(st.faces == 3);
    REQUIRE(st.genus == 1);
  }
  SECTION("NWSE always self-bands on a seed") {
    const CurvePair out = single_surgery(torus_seed(3), 1, SurgeryKind::SingleNWSE);
    const SurfaceStats st = stats(out);
    REQUIRE(st.faces == 4);
    REQUIRE(st.genus == 1);
  }
  SECTION("crossing count always grows by one") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = std::uniform_int_distribution<int>(1, 10)(rng);
      const CurvePair pair = testing::random_pair(n, rng);
      const int p = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const auto kind = trial % 2 ? SurgeryKind::SingleSWNE : SurgeryKind::SingleNWSE;
      REQUIRE(single_surgery(pair, p, kind).n() == n + 1);
    }
  }
  SECTION("face count moves by one, direction set by the banded faces") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = std::uniform_int_distribution<int>(1, 10)(rng);
      const CurvePair pair = testing::random_pair(n, rng);
      const int p = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const FaceDecomposition dec = faces(pair);
      const bool swne = trial % 2 == 0;
      const int f1 = dec.face_of_corner(
          {p, swne ? Quadrant::SW : Quadrant::NW});
      const int f2 = dec.face_of_corner(
          {p, swne ? Quadrant::NE : Quadrant::SE});
      const CurvePair out = single_surgery(
          pair, p, swne ? SurgeryKind::SingleSWNE : SurgeryKind::SingleNWSE);
      const int delta = faces(out).face_count() - dec.face_count();
      REQUIRE(delta == (f1 != f2 ? -1 : 1));
    }
  }
  SECTION("bad input") {
    REQUIRE_THROWS_AS(single_surgery(torus_seed(3), 5, SurgeryKind::SingleSWNE),
                      error);
    REQUIRE_THROWS_AS(single_surgery(torus_seed(3), 0, SurgeryKind::Double),
                      error);
  }
}

TEST_CASE("double surgery") {
  SECTION("seed 4 at crossing 0") {
    const CurvePair out = double_surgery(torus_seed(4), 0);
    const SurfaceStats st = stats(out);
    REQUIRE(st.crossings == 6);
    REQUIRE(st.faces == 2);
    REQUIRE(st.genus == 3);
  }
  SECTION("crossing count always grows by two") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = std::uniform_int_distribution<int>(1, 10)(rng);
      const CurvePair pair = testing::random_pair(n, rng);
      const int p = std::uniform_int_distribution<int>(0, n - 1)(rng);
      REQUIRE(double_surgery(pair, p).n() == n + 2);
    }
  }
  SECTION("three distinct banded faces drop the face count by two") {
    const CurvePair seed = torus_seed(5);
    const FaceDecomposition dec = faces(seed);
    const int p = 0;
    const int ne = dec.face_of_corner({p, Quadrant::NE});
    const int sw = dec.face_of_corner({p, Quadrant::SW});
    const int nw = dec.face_of_corner({p, Quadrant::NW});
    REQUIRE(ne != sw);
    REQUIRE(sw != nw);
    REQUIRE(ne != nw);
    REQUIRE(faces(double_surgery(seed, p)).face_count() == dec.face_count() - 2);
  }
}

TEST_CASE("a-graph edges") {
  SECTION("odd scheme for genus 3") {
    const Scheme scheme = point_scheme(3, {{1, SurgeryKind::SingleSWNE},
                                           {2, SurgeryKind::SingleSWNE}});
    REQUIRE(normalized_edges(a_graph(scheme)) ==
            std::vector<std::pair<int, int>>{{1, 2}, {0, 2}});
  }
  SECTION("double surgery contribution on seed 4") {
    const Scheme scheme = point_scheme(4, {{0, SurgeryKind::Double}});
    REQUIRE(normalized_edges(a_graph(scheme)) ==
            std::vector<std::pair<int, int>>{{0, 2}, {2, 3}});
  }
  SECTION("seed 2 single is a self-loop") {
    const Scheme scheme = point_scheme(2, {{0, SurgeryKind::SingleSWNE}});
    const AGraph graph = a_graph(scheme);
    REQUIRE(graph.edges.size() == 1);
    REQUIRE(graph.edges.front().first == graph.edges.front().second);
    REQUIRE_FALSE(is_tree(graph));
  }
  SECTION("NWSE is a self-loop on every seed") {
    for (int m : {2, 3, 5}) {
      const Scheme scheme = point_scheme(m, {{1 % m, SurgeryKind::SingleNWSE}});
      const auto edge = a_graph(scheme).edges.front();
      REQUIRE(edge.first == edge.second);
    }
  }
}

TEST_CASE("tree and forest predicates") {
  SECTION("isolated vertices form a forest of singletons") {
    const AGraph graph{4, {}};
    REQUIRE(is_forest(graph));
    REQUIRE_FALSE(is_tree(graph));
    REQUIRE(components(graph).size() == 4);
  }
  SECTION("a path is a tree") {
    const AGraph graph{4, {{0, 1}, {1, 2}, {2, 3}}};
    REQUIRE(is_tree(graph));
  }
  SECTION("a doubled edge is not") {
    const AGraph graph{3, {{0, 2}, {0, 2}, {1, 0}}};
    REQUIRE_FALSE(is_tree(graph));
    REQUIRE_FALSE(is_forest(graph));
  }
}

TEST_CASE("apply_scheme basics") {
  SECTION("empty scheme reproduces the seed") {
    REQUIRE(apply_scheme(Scheme{4, {}}) == torus_seed(4));
  }
  SECTION("one-arc schemes agree with the direct surgeries") {
    for (int m = 2; m <= 8; ++m) {
      for (int p = 0; p < m; ++p) {
        REQUIRE(apply_scheme(point_scheme(m, {{p, SurgeryKind::SingleSWNE}})) ==
                single_surgery(torus_seed(m), p, SurgeryKind::SingleSWNE));
        REQUIRE(apply_scheme(point_scheme(m, {{p, SurgeryKind::SingleNWSE}})) ==
                single_surgery(torus_seed(m), p, SurgeryKind::SingleNWSE));
        REQUIRE(apply_scheme(point_scheme(m, {{p, SurgeryKind::Double}})) ==
                double_surgery(torus_seed(m), p));
      }
    }
  }
  SECTION("two single surgeries compose to the two-arc scheme") {
    for (int m = 2; m <= 8; ++m) {
      for (int p = 0; p < m; ++p) {
        for (int q = 0; q < m; ++q) {
          if (p == q)
            continue;
          for (auto kp : {SurgeryKind::SingleSWNE, SurgeryKind::SingleNWSE}) {
            for (auto kq : {SurgeryKind::SingleSWNE, SurgeryKind::SingleNWSE}) {
              const CurvePair via_scheme =
                  apply_scheme(point_scheme(m, {{p, kp}, {q, kq}}));
              const CurvePair composed =
                  single_surgery(single_surgery(torus_seed(m), p, kp), q, kq);
              REQUIRE(via_scheme == composed);
            }
          }
        }
      }
    }
  }
  SECTION("structure violations are named") {
    REQUIRE_THROWS_WITH(
        apply_scheme(Scheme{3, {GammaArc{1, EntrySide::East, {}},
                                GammaArc{1, EntrySide::West, {}}}}),
        Catch::Matchers::ContainsSubstring("duplicate splice point"));
    REQUIRE_THROWS_WITH(
        apply_scheme(Scheme{3, {GammaArc{0, EntrySide::East, {{5, 0}}}}}),
        Catch::Matchers::ContainsSubstring("invalid gap index"));
    REQUIRE_THROWS_WITH(
        apply_scheme(Scheme{4, {GammaArc{0, EntrySide::East, {{2, 3}, {2, 3}}}}}),
        Catch::Matchers::ContainsSubstring("rank collision"));
    REQUIRE_THROWS_WITH(
        apply_scheme(Scheme{3, {GammaArc{7, EntrySide::East, {}}}}),
        Catch::Matchers::ContainsSubstring("out of range"));
  }
}

TEST_CASE("five-handle single-arc scheme on seed 6") {
  // splice at crossing 1, east entry, interior crossings in gaps 3,0,4,2
  Scheme scheme{6, {GammaArc{1, EntrySide::East,
                             {{3, 0}, {0, 0}, {4, 0}, {2, 0}}}}};
  REQUIRE(scheme.handle_count() == 5);
  const AGraph graph = a_graph(scheme);
  REQUIRE(is_tree(graph));
  const CurvePair pair = apply_scheme(scheme);
  const SurfaceStats st = stats(pair);
  REQUIRE(st.crossings == 11);
  REQUIRE(st.faces == 1);
  REQUIRE(st.genus == 6);
}

TEST_CASE("scheme bookkeeping on random schemes") {
  std::mt19937 rng(41);
  int checked = 0;
  int tree_seen = 0;
  while (checked < 120) {
    const int m = std::uniform_int_distribution<int>(3, 8)(rng);
    const Scheme scheme = testing::random_scheme(m, m - 1, rng);
    const CurvePair pair = apply_scheme(scheme);
    const SurfaceStats st = stats(pair);

    // crossing and Euler bookkeeping
    REQUIRE(st.crossings == m + scheme.handle_count());
    REQUIRE(st.crossings - 2 * st.crossings == -m - scheme.handle_count());
    REQUIRE(st.euler_characteristic == st.faces - st.crossings);

    // coherence is preserved by construction
    REQUIRE(verify_coherent_import(pair, std::vector<int>(pair.n(), 1)).coherent);

    // one boundary component exactly when the A-graph is a tree
    const bool tree = is_tree(a_graph(scheme));
    REQUIRE((st.faces == 1) == tree);
    if (tree)
      ++tree_seen;
    ++checked;
  }
  REQUIRE(tree_seen > 5); // both directions of the equivalence were exercised
  REQUIRE(tree_seen < checked);
}

TEST_CASE("forests split the boundary into one component per tree") {
  SECTION("handles below the tree threshold") {
    std::mt19937 rng(43);
    int forest_cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int m = std::uniform_int_distribution<int>(3, 8)(rng);
      const int handles = std::uniform_int_distribution<int>(1, m - 2)(rng);
      const Scheme scheme = testing::random_scheme(m, handles, rng);
      const AGraph graph = a_graph(scheme);
      if (!is_forest(graph))
        continue;
      ++forest_cases;
      REQUIRE(faces(apply_scheme(scheme)).face_count() ==
              static_cast<int>(components(graph).size()));
    }
    REQUIRE(forest_cases > 20);
  }
  SECTION("two-component forest on seed 5") {
    const Scheme scheme = point_scheme(5, {{1, SurgeryKind::SingleSWNE},
                                           {2, SurgeryKind::SingleSWNE},
                                           {3, SurgeryKind::SingleSWNE}});
    const AGraph graph = a_graph(scheme);
    REQUIRE(is_forest(graph));
    REQUIRE(components(graph).size() == 2);
    const SurfaceStats st = stats(apply_scheme(scheme));
    REQUIRE(st.crossings == 8);
    REQUIRE(st.faces == 2);
    REQUIRE(st.genus == 4);
  }
}

TEST_CASE("validate_scheme reports") {
  SECTION("odd scheme for genus 5") {
    Scheme scheme{5, {}};
    for (int p = 1; p < 5; ++p)
      scheme.arcs.push_back(point_arc(SurgeryKind::SingleSWNE, p, 5));
    const SchemeReport report = validate_scheme(scheme, {5, 0});
    REQUIRE(report.structurally_valid);
    REQUIRE(report.handles == 4);
    REQUIRE(report.balance_ok);
    REQUIRE(report.tree);
    REQUIRE(report.predicted_n == 9);
    REQUIRE(report.predicted_faces == 1);
    REQUIRE(report.predicted_genus == 5);
    REQUIRE(report.actual_n == 9);
    REQUIRE(report.actual_faces == 1);
    REQUIRE(report.actual_genus == 5);
    REQUIRE(report.predictions_match);
    REQUIRE(report.minimal);
  }
  SECTION("balanced but cyclic: not minimal") {
    const Scheme scheme = point_scheme(3, {{1, SurgeryKind::SingleSWNE},
                                           {2, SurgeryKind::SingleNWSE}});
    const SchemeReport report = validate_scheme(scheme, {3, 0});
    REQUIRE(report.balance_ok);
    REQUIRE_FALSE(report.tree);
    REQUIRE(report.actual_faces != 1);
    REQUIRE_FALSE(report.minimal);
  }
  SECTION("forest hitting a punctured target") {
    const Scheme scheme = point_scheme(5, {{1, SurgeryKind::SingleSWNE},
                                           {2, SurgeryKind::SingleSWNE},
                                           {3, SurgeryKind::SingleSWNE}});
    const SchemeReport report = validate_scheme(scheme, {4, 2});
    REQUIRE(report.balance_ok);
    REQUIRE(report.forest);
    REQUIRE(report.component_count == 2);
    REQUIRE(report.actual_faces == 2);
    REQUIRE(report.minimal);
  }
  SECTION("invalid structure is carried in the report") {
    const SchemeReport report = validate_scheme(
        Scheme{3, {GammaArc{0, EntrySide::East, {}},
                   GammaArc{0, EntrySide::East, {}}}},
        {3, 0});
    REQUIRE_FALSE(report.structurally_valid);
    REQUIRE(report.structural_error.find("duplicate") != std::string::npos);
  }
}
