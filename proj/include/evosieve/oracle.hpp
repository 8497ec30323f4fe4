#pragma once

// Ground truth and sanity instruments: exact shortest-vector enumeration for
// small dimensions, the Gaussian heuristic, asymptotic population/time
// estimators, and pairwise angles.

#include "evosieve/basis.hpp"
#include "evosieve/bigint.hpp"
#include "evosieve/point.hpp"

namespace evosieve {

struct ComplexityEstimate {
  int dim = 0;
  double pop_size_estimate = 0.0;      // (4/3)^(d/2)
  double log2_pop = 0.0;               // (d/2) * log2(4/3), about 0.2075 d
  double log2_time = 0.0;              // d * log2(4/3), about 0.415 d
  double reduction_probability = 0.0;  // (3/4)^(d/2)
};

ComplexityEstimate estimate_complexity(int dim);

// Expected first-minimum scale: Gamma(d/2+1)^(1/d) / sqrt(pi) * det^(1/d),
// with det the lattice determinant (so det(Gram)^(1/(2d))).
double gaussian_heuristic(const BasisMatrix& basis);

// Angle in [0, pi]; the inner product and norms are computed exactly before
// the single conversion to floating point.
double pair_angle(const LatticePoint& v, const LatticePoint& w);

// Unpruned enumeration beyond this dimension must be requested explicitly.
inline constexpr int kEnumerationSoftLimit = 30;

// Exact shortest nonzero vector by depth-first Schnorr-Euchner enumeration
// with initial radius ||b_1||, shrinking on improvement. Floating point
// guides the tree walk, but every radius shrink is verified in exact
// integers, so the returned vector is exactly optimal. Expects an
// LLL-reduced basis to be practical; gso must belong to basis.
LatticePoint enumerate_svp(const BasisMatrix& basis,
                           const GramSchmidtData& gso,
                           bool allow_large_dimension = false);

}  // namespace evosieve
