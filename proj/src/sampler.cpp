#include "evosieve/sampler.hpp"

#include <cmath>
#include <vector>

#include "evosieve/errors.hpp"

namespace evosieve {

std::int64_t discrete_gaussian_1d(double center, double sigma, double tail_cut,
                                  Rng& rng) {
  if (!(sigma > 0.0)) throw InvalidParamsError("sigma must be positive");
  if (!(tail_cut >= 1.0)) throw InvalidParamsError("tail_cut must be >= 1");
  const double spread = tail_cut * sigma;
  if (spread >= 0x1.0p60) {
    throw InvalidParamsError("sampler window exceeds the int64 range");
  }
  const auto lo = static_cast<std::int64_t>(std::ceil(center - spread));
  const auto hi = static_cast<std::int64_t>(std::floor(center + spread));
  if (lo > hi) return std::llround(center);
  const double inv_two_sigma_sq = 1.0 / (2.0 * sigma * sigma);
  for (;;) {
    const std::int64_t z = rng.between(lo, hi);
    const double dev = static_cast<double>(z) - center;
    if (rng.unit() < std::exp(-dev * dev * inv_two_sigma_sq)) return z;
  }
}

std::optional<LatticePoint> klein_sample(const BasisMatrix& basis,
                                         const GramSchmidtData& gso,
                                         const SamplerParams& params,
                                         Rng& rng) {
  const int d = basis.dim();
  const double sigma =
      params.sigma > 0.0 ? params.sigma : default_klein_sigma(gso);

  // The projection of the running target onto b*_i depends only on the
  // coefficients already drawn: center_i = -sum_{j>i} z_j mu[j][i].
  std::vector<std::int64_t> z(d, 0);
  bool all_zero = true;
  for (int i = d - 1; i >= 0; --i) {
    double center = 0.0;
    for (int j = i + 1; j < d; ++j) {
      if (z[j] != 0) center -= static_cast<double>(z[j]) * to_double(gso.mu[j][i]);
    }
    const double level_sigma = sigma / std::sqrt(to_double(gso.bstar_norm_sq[i]));
    z[i] = discrete_gaussian_1d(center, level_sigma, params.tail_cut, rng);
    if (z[i] != 0) all_zero = false;
  }
  if (all_zero) return std::nullopt;

  std::vector<BigInt> coeffs(d);
  for (int i = 0; i < d; ++i) coeffs[i] = z[i];
  return canonicalize(make_point(basis.rows(), std::move(coeffs)));
}

std::optional<LatticePoint> naive_sample(const BasisMatrix& basis, int bound,
                                         Rng& rng) {
  if (bound < 1) throw InvalidParamsError("naive sampler bound must be >= 1");
  const int d = basis.dim();
  std::vector<BigInt> coeffs(d);
  bool all_zero = true;
  for (int i = 0; i < d; ++i) {
    const std::int64_t c = rng.between(-bound, bound);
    coeffs[i] = c;
    if (c != 0) all_zero = false;
  }
  if (all_zero) return std::nullopt;
  return canonicalize(make_point(basis.rows(), std::move(coeffs)));
}

double max_bstar_norm(const GramSchmidtData& gso) {
  double max_bstar_sq = 0.0;
  for (const Rational& b : gso.bstar_norm_sq) {
    max_bstar_sq = std::max(max_bstar_sq, to_double(b));
  }
  return std::sqrt(max_bstar_sq);
}

double default_klein_sigma(const GramSchmidtData& gso) {
  // Narrow enough that the population starts close to the interesting
  // shell; population initialization widens it stepwise when a lattice is
  // too coarse to supply enough distinct samples at this width.
  return 0.25 * max_bstar_norm(gso);
}

}  // namespace evosieve
