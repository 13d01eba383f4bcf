#ifndef FILLPAIR_SURFACE_MAP_HPP
#define FILLPAIR_SURFACE_MAP_HPP

#include <compare>
#include <vector>

#include "fillpair/curve_pair.hpp"

namespace fillpair {

// Quadrants of a crossing, in the corner order used for face ids.
enum class Quadrant : int { NE = 0, NW = 1, SW = 2, SE = 3 };

struct Corner {
  int crossing = 0;
  Quadrant quadrant = Quadrant::NE;
  friend auto operator<=>(const Corner &, const Corner &) = default;
};

inline int corner_index(const Corner &c) {
  return 4 * c.crossing + static_cast<int>(c.quadrant);
}

inline Corner corner_of_index(int idx) {
  return Corner{idx / 4, static_cast<Quadrant>(idx % 4)};
}

// Rotation system of the 4-valent graph alpha ∪ beta.  Darts are numbered
// 4*crossing + d with d: 0 = east (alpha out), 1 = north (beta out),
// 2 = west (alpha in), 3 = south (beta in).  The vertex rotation is the
// counterclockwise order (E, N, W, S); the edge involution pairs the east
// dart of x with the west dart of h(x) and the north dart of x with the
// south dart of v(x).
struct DartMap {
  int n = 0;
  std::vector<int> rotation;   // next dart ccw around its vertex
  std::vector<int> involution; // opposite dart of the same edge

  int dart_count() const { return 4 * n; }
  int edge_count() const { return 2 * n; }

  // Next dart along the boundary of the face: rotation^-1 ∘ involution.
  int face_next(int d) const {
    int e = involution[d];
    return (e & ~3) | ((e + 3) & 3);
  }
};

inline DartMap dart_map(const CurvePair &pair) {
  const int n = pair.n();
  DartMap dm;
  dm.n = n;
  dm.rotation.resize(4 * n);
  dm.involution.resize(4 * n);
  const Permutation hi = pair.h().inverse();
  const Permutation vi = pair.v().inverse();
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < 4; ++k)
      dm.rotation[4 * x + k] = 4 * x + (k + 1) % 4;
    dm.involution[4 * x + 0] = 4 * pair.h()(x) + 2;
    dm.involution[4 * x + 2] = 4 * hi(x) + 0;
    dm.involution[4 * x + 1] = 4 * pair.v()(x) + 3;
    dm.involution[4 * x + 3] = 4 * vi(x) + 1;
  }
  return dm;
}

// Complementary discs of alpha ∪ beta as cyclic corner sequences.  Face
// ids are assigned by the smallest contained NE corner (every face has
// one: the corner walk cycles NE, NW, SW, SE); each sequence starts
// there.  On torus seeds this reproduces the compass labels exactly.
struct FaceDecomposition {
  std::vector<std::vector<Corner>> faces;
  std::vector<int> face_of; // indexed by corner_index

  int face_count() const { return static_cast<int>(faces.size()); }
  int face_of_corner(const Corner &c) const { return face_of[corner_index(c)]; }
};

// The dart walked out of a face turn sweeps the corner between itself and
// the next rotation dart; that corner shares the dart's index.
inline FaceDecomposition faces(const CurvePair &pair) {
  const DartMap dm = dart_map(pair);
  FaceDecomposition dec;
  dec.face_of.assign(dm.dart_count(), -1);
  for (int x = 0; x < dm.n; ++x) {
    const int d0 = 4 * x; // east dart = NE corner
    if (dec.face_of[d0] >= 0)
      continue;
    const int id = dec.face_count();
    std::vector<Corner> corners;
    int d = d0;
    do {
      dec.face_of[d] = id;
      corners.push_back(corner_of_index(d));
      d = dm.face_next(d);
    } while (d != d0);
    dec.faces.push_back(std::move(corners));
  }
  return dec;
}

// Face labels of torus_seed(m) from the seed's corner identities:
// face j = {NE_j, NW_{j+1}, SE_{j+1}, SW_{j+2}} (indices mod m).
inline std::vector<int> seed_face_labels(int m) {
  if (m < 1)
    throw error("seed_face_labels: m must be >= 1");
  std::vector<int> label(4 * m);
  for (int x = 0; x < m; ++x) {
    label[corner_index({x, Quadrant::NE})] = x;
    label[corner_index({x, Quadrant::NW})] = (x + m - 1) % m;
    label[corner_index({x, Quadrant::SE})] = (x + m - 1) % m;
    label[corner_index({x, Quadrant::SW})] = (x + 2 * m - 2) % m;
  }
  return label;
}

struct SurfaceStats {
  int crossings = 0;            // n
  int edges = 0;                // 2n
  int faces = 0;                // complementary discs
  int euler_characteristic = 0; // closed surface: F - n
  int genus = 0;
  int boundary_count = 0;       // components of the neighborhood boundary
  int punctures = 0;
};

inline SurfaceStats stats(const CurvePair &pair) {
  SurfaceStats st;
  st.crossings = pair.n();
  st.edges = 2 * pair.n();
  st.faces = faces(pair).face_count();
  st.euler_characteristic = st.faces - st.crossings;
  const int twice_genus = 2 - st.euler_characteristic;
  if (twice_genus % 2 != 0 || twice_genus < 0)
    throw error("stats: non-integer genus; the map is internally inconsistent");
  st.genus = twice_genus / 2;
  st.boundary_count = st.faces;
  st.punctures = pair.puncture_count();
  return st;
}

struct CoherenceReport {
  bool coherent = false;
  int geometric = 0;     // |alpha ∩ beta|
  int algebraic_abs = 0; // |sum of crossing signs|
};

// Checks a crossing-sign vector of an imported pair: the pair is coherent
// exactly when all signs agree, and then geometric = |algebraic|.
inline CoherenceReport verify_coherent_import(const CurvePair &pair,
                                              const std::vector<int> &signs) {
  if (static_cast<int>(signs.size()) != pair.n())
    throw parse_error("sign vector length differs from crossing count");
  CoherenceReport report;
  report.geometric = pair.n();
  int sum = 0;
  bool all_equal = true;
  for (int s : signs) {
    if (s != 1 && s != -1)
      throw parse_error("crossing signs must be +1 or -1");
    sum += s;
    if (s != signs.front())
      all_equal = false;
  }
  report.algebraic_abs = sum < 0 ? -sum : sum;
  report.coherent = all_equal;
  return report;
}

} // namespace fillpair

#endif
