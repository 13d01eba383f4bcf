#ifndef FILLPAIR_PERMUTATION_HPP
#define FILLPAIR_PERMUTATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fillpair/errors.hpp"

namespace fillpair {

// Disjoint cycles covering 0..n-1.  Each cycle starts at its smallest
// element and cycles are ordered by that element.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
};

// A bijection on {0..n-1}, stored as its image array.
class Permutation {
public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty())
      throw error("permutation degree must be positive");
    std::vector<char> seen(images_.size(), 0);
    for (int img : images_) {
      if (img < 0 || img >= degree() || seen[img])
        throw error("permutation images must be a bijection on 0.." +
                    std::to_string(degree() - 1));
      seen[img] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(check_degree(n));
    for (int i = 0; i < n; ++i)
      im[i] = i;
    return Permutation(std::move(im));
  }

  // i -> i+1 (mod n); the cyclic successor map of a torus seed.
  static Permutation rotation(int n) {
    std::vector<int> im(check_degree(n));
    for (int i = 0; i < n; ++i)
      im[i] = (i + 1) % n;
    return Permutation(std::move(im));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int> &images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i)
      im[images_[i]] = i;
    return Permutation(std::move(im));
  }

  int preimage(int x) const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] == x)
        return i;
    throw error("preimage: index out of range");
  }

  CycleDecomposition cycles() const {
    CycleDecomposition dec;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i])
        continue;
      std::vector<int> cycle;
      for (int j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        cycle.push_back(j);
      }
      dec.cycles.push_back(std::move(cycle));
    }
    return dec;
  }

  int cycle_count() const {
    int count = 0;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i])
        continue;
      ++count;
      for (int j = i; !seen[j]; j = images_[j])
        seen[j] = 1;
    }
    return count;
  }

  bool is_full_cycle() const { return cycle_count() == 1; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  static int check_degree(int n) {
    if (n < 1)
      throw error("permutation degree must be positive");
    return n;
  }

  std::vector<int> images_;
};

// i -> a(b(i))
inline Permutation compose(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw error("compose: degree mismatch");
  std::vector<int> im(a.degree());
  for (int i = 0; i < a.degree(); ++i)
    im[i] = a(b(i));
  return Permutation(std::move(im));
}

// s p s^-1
inline Permutation conjugate(const Permutation &s, const Permutation &p) {
  if (s.degree() != p.degree())
    throw error("conjugate: degree mismatch");
  std::vector<int> im(s.degree());
  for (int i = 0; i < s.degree(); ++i)
    im[s(i)] = s(p(i));
  return Permutation(std::move(im));
}

// The commutator word v^-1 h^-1 v h (h applied first).  For a curve pair
// (h, v) its cycles are in bijection with the complementary discs: each
// disc's NE corners form one cycle.
inline Permutation commutator(const Permutation &h, const Permutation &v) {
  if (h.degree() != v.degree())
    throw error("commutator: degree mismatch");
  const Permutation hi = h.inverse();
  const Permutation vi = v.inverse();
  std::vector<int> im(h.degree());
  for (int i = 0; i < h.degree(); ++i)
    im[i] = vi(hi(v(h(i))));
  return Permutation(std::move(im));
}

// True when <h, v> acts transitively on 0..n-1.
inline bool is_transitive(const Permutation &h, const Permutation &v) {
  if (h.degree() != v.degree())
    throw error("is_transitive: degree mismatch");
  const int n = h.degree();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {h(x), v(x)}) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

namespace detail {

// Depth-first search for sigma with sigma h1 sigma^-1 = h2 and
// sigma v1 sigma^-1 = v2.  Propagation through h and v pins the whole
// orbit of a seed assignment, so transitive pairs cost one propagation
// per candidate image of 0; extra orbits are handled by backtracking.
class ConjugacySearch {
public:
  ConjugacySearch(const Permutation &h1, const Permutation &v1,
                  const Permutation &h2, const Permutation &v2)
      : h1_(h1), v1_(v1), h2_(h2), v2_(v2), n_(h1.degree()),
        sigma_(n_, -1), used_(n_, 0) {}

  std::optional<Permutation> run() {
    if (!solve(0))
      return std::nullopt;
    return Permutation(sigma_);
  }

private:
  bool assign(int s, int t, std::vector<int> &trail, std::vector<int> &work) {
    if (sigma_[s] >= 0)
      return sigma_[s] == t;
    if (used_[t])
      return false;
    sigma_[s] = t;
    used_[t] = 1;
    trail.push_back(s);
    work.push_back(s);
    return true;
  }

  bool propagate(int s0, int t0, std::vector<int> &trail) {
    std::vector<int> work;
    if (!assign(s0, t0, trail, work))
      return false;
    while (!work.empty()) {
      int s = work.back();
      work.pop_back();
      int t = sigma_[s];
      if (!assign(h1_(s), h2_(t), trail, work))
        return false;
      if (!assign(v1_(s), v2_(t), trail, work))
        return false;
    }
    return true;
  }

  bool solve(int from) {
    int s = -1;
    for (int i = from; i < n_; ++i)
      if (sigma_[i] < 0) {
        s = i;
        break;
      }
    if (s < 0)
      return true;
    for (int t = 0; t < n_; ++t) {
      if (used_[t])
        continue;
      std::vector<int> trail;
      if (propagate(s, t, trail) && solve(s + 1))
        return true;
      for (int a : trail) {
        used_[sigma_[a]] = 0;
        sigma_[a] = -1;
      }
    }
    return false;
  }

  const Permutation &h1_, &v1_, &h2_, &v2_;
  int n_;
  std::vector<int> sigma_;
  std::vector<char> used_;
};

} // namespace detail

// Witness sigma with sigma h1 sigma^-1 = h2 and sigma v1 sigma^-1 = v2,
// or nullopt when the pairs are not simultaneously conjugate.  Every
// returned witness is re-verified before being handed out.
inline std::optional<Permutation>
simultaneous_conjugacy(const Permutation &h1, const Permutation &v1,
                       const Permutation &h2, const Permutation &v2) {
  if (h1.degree() != v1.degree() || h2.degree() != v2.degree())
    throw error("simultaneous_conjugacy: degree mismatch within a pair");
  if (h1.degree() != h2.degree())
    throw error("simultaneous_conjugacy: degree mismatch between pairs");
  auto witness = detail::ConjugacySearch(h1, v1, h2, v2).run();
  if (witness) {
    if (conjugate(*witness, h1) != h2 || conjugate(*witness, v1) != v2)
      throw error("simultaneous_conjugacy: witness failed verification");
  }
  return witness;
}

inline std::optional<Permutation>
simultaneous_conjugacy(const std::pair<Permutation, Permutation> &p1,
                       const std::pair<Permutation, Permutation> &p2) {
  return simultaneous_conjugacy(p1.first, p1.second, p2.first, p2.second);
}

} // namespace fillpair

#endif
