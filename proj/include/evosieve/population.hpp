#pragma once

// The evolving population: an ordered collection of distinct, nonzero,
// sign-canonical points with a size cap. A hash index over the coefficient
// vectors backs the duplicate checks; iteration always uses the ordered
// member vector, never the index.

#include <cassert>
#include <cstddef>
#include <unordered_set>
#include <utility>
#include <vector>

#include "evosieve/bigint.hpp"
#include "evosieve/errors.hpp"
#include "evosieve/point.hpp"

namespace evosieve {

template <class I>
class PopulationT {
 public:
  explicit PopulationT(std::size_t max_size) : max_size_(max_size) {}

  std::size_t size() const { return members_.size(); }
  std::size_t max_size() const { return max_size_; }
  const std::vector<PointT<I>>& members() const { return members_; }
  const PointT<I>& operator[](std::size_t i) const { return members_[i]; }

  bool contains(const std::vector<I>& coeffs) const {
    return index_.count(coeffs) != 0;
  }

  // False iff the point is already present. Throws when the cap is full.
  bool insert(PointT<I> p) {
    assert(!is_zero(p) && is_canonical(p));
    if (contains(p.coeffs)) return false;
    if (members_.size() >= max_size_) {
      throw Error("population insert beyond max_size");
    }
    index_.insert(p.coeffs);
    members_.push_back(std::move(p));
    return true;
  }

  // In-place replacement; the new point must not duplicate any member.
  void replace(std::size_t i, PointT<I> p) {
    assert(!is_zero(p) && is_canonical(p));
    assert(!contains(p.coeffs));
    index_.erase(members_[i].coeffs);
    index_.insert(p.coeffs);
    members_[i] = std::move(p);
  }

 private:
  std::size_t max_size_;
  std::vector<PointT<I>> members_;
  std::unordered_set<std::vector<I>, CoeffVecHash<I>> index_;
};

using Population = PopulationT<BigInt>;

// Structural validity used by tests and debug checks: nonzero, canonical,
// duplicate-free, within the cap.
template <class I>
bool population_is_valid(const PopulationT<I>& pop) {
  if (pop.size() > pop.max_size()) return false;
  std::unordered_set<std::vector<I>, CoeffVecHash<I>> seen;
  for (const PointT<I>& p : pop.members()) {
    if (is_zero(p) || !is_canonical(p)) return false;
    if (!seen.insert(p.coeffs).second) return false;
    if (p.norm_sq != norm_sq_of(p.coords)) return false;
  }
  return true;
}

}  // namespace evosieve
