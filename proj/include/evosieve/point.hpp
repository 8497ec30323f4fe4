#pragma once

// Population members. A point carries its genotype (coefficient vector with
// respect to the basis rows), its phenotype (the lattice vector itself) and
// its cached fitness (exact squared norm). Everything is a plain value.
//
// The operations are templated over the scalar: BigInt for the public
// domain types, int64 for the sieve engine's fast path. int64 instantiations
// are only safe under the engine's range caps (see sieve.hpp).

#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "evosieve/basis.hpp"
#include "evosieve/bigint.hpp"
#include "evosieve/errors.hpp"

namespace evosieve {

template <class I>
struct PointT {
  std::vector<I> coeffs;
  std::vector<I> coords;
  I norm_sq{};
};

using LatticePoint = PointT<BigInt>;
using SmallPoint = PointT<std::int64_t>;

template <class I>
bool is_zero(const PointT<I>& p) {
  for (const I& c : p.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

// Canonical form: first nonzero coefficient positive.
template <class I>
bool is_canonical(const PointT<I>& p) {
  for (const I& c : p.coeffs) {
    if (c != 0) return c > 0;
  }
  return false;
}

template <class I>
I dot(const std::vector<I>& a, const std::vector<I>& b) {
  I acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class I>
I norm_sq_of(const std::vector<I>& coords) {
  return dot(coords, coords);
}

// Assembles coords = sum_i coeffs[i] * basis_row_i and the exact norm.
// Does not canonicalize.
template <class I>
PointT<I> make_point(const Matrix<I>& basis, std::vector<I> coeffs) {
  const std::size_t d = basis.size();
  assert(coeffs.size() == d);
  PointT<I> p;
  p.coords.assign(d, I{});
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) p.coords[j] += coeffs[i] * basis[i][j];
  }
  p.norm_sq = norm_sq_of(p.coords);
  p.coeffs = std::move(coeffs);
  return p;
}

template <class I>
PointT<I> canonicalize(PointT<I> p) {
  for (const I& c : p.coeffs) {
    if (c != 0) {
      if (c < 0) {
        for (I& x : p.coeffs) x = -x;
        for (I& x : p.coords) x = -x;
      }
      return p;
    }
  }
  throw ZeroInputError("cannot canonicalize the zero vector");
}

// v - w over the same basis; empty when v = w. The result is canonical.
template <class I>
std::optional<PointT<I>> sub_points(const PointT<I>& v, const PointT<I>& w) {
  const std::size_t d = v.coeffs.size();
  PointT<I> u;
  u.coeffs.resize(d);
  bool zero = true;
  for (std::size_t i = 0; i < d; ++i) {
    u.coeffs[i] = v.coeffs[i] - w.coeffs[i];
    if (u.coeffs[i] != 0) zero = false;
  }
  if (zero) return std::nullopt;
  u.coords.resize(d);
  for (std::size_t i = 0; i < d; ++i) u.coords[i] = v.coords[i] - w.coords[i];
  u.norm_sq = norm_sq_of(u.coords);
  return canonicalize(std::move(u));
}

// coeffs[index] += sign, coords += sign * b_index; empty when the result is
// the zero vector. sign must be +1 or -1. The result is canonical.
template <class I>
std::optional<PointT<I>> add_signed_basis_vector(const PointT<I>& p,
                                                 std::size_t index, int sign,
                                                 const Matrix<I>& basis) {
  const std::size_t d = p.coeffs.size();
  if (index >= d) throw IndexOutOfRangeError("basis index out of range");
  assert(sign == 1 || sign == -1);
  PointT<I> q = p;
  q.coeffs[index] += sign;
  if (is_zero(q)) return std::nullopt;
  for (std::size_t j = 0; j < d; ++j) {
    if (sign > 0) {
      q.coords[j] += basis[index][j];
    } else {
      q.coords[j] -= basis[index][j];
    }
  }
  q.norm_sq = norm_sq_of(q.coords);
  return canonicalize(std::move(q));
}

}  // namespace evosieve
