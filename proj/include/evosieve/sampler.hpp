#pragma once

// Initial-population samplers: a Klein/GPV discrete Gaussian over the
// lattice (default) and a naive bounded-coefficient sampler kept as a
// fallback and for tests.

#include <cstdint>
#include <optional>

#include "evosieve/basis.hpp"
#include "evosieve/point.hpp"
#include "evosieve/rng.hpp"

namespace evosieve {

enum class SamplerKind { klein, naive };

// sigma follows the standard-deviation convention: density over the
// integers proportional to exp(-x^2 / (2 sigma^2)).
//
// sigma = 0 selects the automatic width default_klein_sigma for the run's
// basis; population initialization may widen an automatic sigma stepwise
// when the lattice cannot supply enough distinct samples at that width.
// An explicit sigma is never adjusted.
struct SamplerParams {
  SamplerKind kind = SamplerKind::klein;
  double sigma = 0.0;
  double tail_cut = 6.0;
  int naive_bound = 3;
};

// One integer from the discrete Gaussian with the given center and width,
// restricted to |z - center| <= tail_cut * sigma, by rejection from the
// uniform distribution on that window. When the window contains no integer
// the nearest integer to the center is returned (the sigma -> 0 limit).
std::int64_t discrete_gaussian_1d(double center, double sigma,
                                  double tail_cut, Rng& rng);

// Klein's randomized nearest-plane sampler around the origin: walks levels
// d..1, drawing the coefficient at level i from a discrete Gaussian with
// width sigma / ||b*_i|| centered on the projection of the running target.
// Empty when every coefficient rounds to zero; callers resample.
std::optional<LatticePoint> klein_sample(const BasisMatrix& basis,
                                         const GramSchmidtData& gso,
                                         const SamplerParams& params, Rng& rng);

// Uniform coefficients in [-bound, bound]; empty on the all-zero draw.
std::optional<LatticePoint> naive_sample(const BasisMatrix& basis, int bound,
                                         Rng& rng);

// Automatic Klein width: 0.25 * max_i ||b*_i||.
double default_klein_sigma(const GramSchmidtData& gso);

double max_bstar_norm(const GramSchmidtData& gso);

}  // namespace evosieve
