#ifndef FILLPAIR_CURVE_PAIR_HPP
#define FILLPAIR_CURVE_PAIR_HPP

#include <map>
#include <utility>

#include "fillpair/permutation.hpp"

namespace fillpair {

// A coherent pair of curves on an oriented surface, encoded by the two
// cyclic successor maps on the shared crossing set: h follows alpha
// eastward, v follows beta northward.  Every crossing of beta with alpha
// runs south to north, so the encoding carries coherence by construction.
// Both curves are single closed curves, hence h and v are full cycles.
//
// puncture_marks assigns a positive puncture count to complementary
// faces (by face id); empty for the closed case.
class CurvePair {
public:
  CurvePair(Permutation alpha_next, Permutation beta_next,
            std::map<int, int> puncture_marks = {})
      : h_(std::move(alpha_next)), v_(std::move(beta_next)),
        marks_(std::move(puncture_marks)) {
    if (h_.degree() != v_.degree())
      throw error("curve pair: alpha and beta must share one crossing set");
    if (!h_.is_full_cycle())
      throw error("curve pair: alpha is not a single closed curve");
    if (!v_.is_full_cycle())
      throw error("curve pair: beta is not a single closed curve");
    for (auto [face, count] : marks_)
      if (face < 0 || count < 1)
        throw error("curve pair: puncture marks must be positive counts on faces");
  }

  int n() const { return h_.degree(); }
  const Permutation &h() const { return h_; }
  const Permutation &v() const { return v_; }
  const std::map<int, int> &puncture_marks() const { return marks_; }

  int puncture_count() const {
    int total = 0;
    for (auto [face, count] : marks_)
      total += count;
    return total;
  }

  friend bool operator==(const CurvePair &, const CurvePair &) = default;

private:
  Permutation h_;
  Permutation v_;
  std::map<int, int> marks_;
};

// The seed pair on the torus: alpha a (0,1) curve, beta an (m,1) curve,
// crossing m times.  Both successor maps are the standard m-cycle.
inline CurvePair torus_seed(int m) {
  return CurvePair(Permutation::rotation(m), Permutation::rotation(m));
}

} // namespace fillpair

#endif
