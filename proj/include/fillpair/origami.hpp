#ifndef FILLPAIR_ORIGAMI_HPP
#define FILLPAIR_ORIGAMI_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "fillpair/surface_map.hpp"

namespace fillpair {

// Square-tiled surface: unit squares indexed 0..n-1 with right/left
// gluings given by one permutation and bottom/top gluings by the other.
struct Origami {
  Permutation right_neighbor;
  Permutation top_neighbor;

  int squares() const { return right_neighbor.degree(); }
  friend bool operator==(const Origami &, const Origami &) = default;
};

enum class Direction { Horizontal, Vertical };

// A coherent pair is already an origami: squares are crossings, the right
// neighbor is the alpha successor and the top neighbor the beta successor.
inline Origami to_origami(const CurvePair &pair) {
  if (!is_transitive(pair.h(), pair.v()))
    throw error("to_origami: gluing permutations do not act transitively");
  return Origami{pair.h(), pair.v()};
}

inline CurvePair from_origami(const Origami &origami) {
  return CurvePair(origami.right_neighbor, origami.top_neighbor);
}

// Maximal rings of squares glued along one direction: the cycles of the
// corresponding neighbor permutation.
inline std::vector<std::vector<int>> cylinders(const Origami &origami,
                                               Direction direction) {
  const Permutation &p = direction == Direction::Horizontal
                             ? origami.right_neighbor
                             : origami.top_neighbor;
  return p.cycles().cycles;
}

struct SingularityProfile {
  std::vector<int> zero_orders; // one per face, in face-id order
  std::string stratum;          // positive orders, descending
  int marked_points = 0;        // faces of order zero
};

// Cone points of the square tiling, one per complementary face: a face
// with 4k corners has cone angle 2*pi*k, i.e. a zero of order k-1.
inline SingularityProfile singularities(const CurvePair &pair) {
  const FaceDecomposition dec = faces(pair);
  SingularityProfile profile;
  for (const auto &face : dec.faces) {
    if (face.size() % 4 != 0)
      throw error("singularities: face corner count not divisible by 4");
    const int order = static_cast<int>(face.size()) / 4 - 1;
    profile.zero_orders.push_back(order);
    if (order == 0)
      profile.marked_points++;
  }
  std::vector<int> positive;
  for (int order : profile.zero_orders)
    if (order > 0)
      positive.push_back(order);
  std::sort(positive.rbegin(), positive.rend());
  profile.stratum = "H(";
  for (size_t i = 0; i < positive.size(); ++i) {
    if (i)
      profile.stratum += ",";
    profile.stratum += std::to_string(positive[i]);
  }
  profile.stratum += ")";
  return profile;
}

} // namespace fillpair

#endif
