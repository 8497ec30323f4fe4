#include "evosieve/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "evosieve/errors.hpp"

namespace evosieve {
namespace {

// Schnorr-Euchner depth-first search over coefficient vectors, zigzagging
// around the projected centers so each level visits values in order of
// increasing contribution. Bookkeeping follows the usual sigma-table scheme:
// sig[a][j] = -sum_{k>j} x_k mu[k][a], so sig[a][a] is the center at level a
// and only levels whose x changed since the last visit are recomputed
// (tracked per row in stale_).
class Enumerator {
 public:
  Enumerator(const BasisMatrix& basis, const GramSchmidtData& gso)
      : basis_(basis), d_(basis.dim()) {
    mu_t_.assign(d_, std::vector<double>(d_, 0.0));
    for (int j = 0; j < d_; ++j) {
      for (int i = 0; i < j; ++i) mu_t_[i][j] = to_double(gso.mu[j][i]);
    }
    rr_.resize(d_);
    for (int i = 0; i < d_; ++i) rr_[i] = to_double(gso.bstar_norm_sq[i]);

    x_.assign(d_, 0);
    dx_.assign(d_, 0);
    d2x_.assign(d_, 0);
    centers_.assign(d_, 0.0);
    partial_.assign(d_ + 1, 0.0);
    sig_.assign(d_, std::vector<double>(d_, 0.0));
    stale_.assign(d_, d_ - 1);

    // b_1 itself is the initial incumbent and radius.
    best_x_.assign(d_, 0);
    best_x_[0] = 1;
    best_norm_sq_ = norm_sq_of(basis.row(0));
    shrink_bound();
  }

  LatticePoint run() {
    descend(d_ - 1);
    std::vector<BigInt> coeffs(d_);
    for (int i = 0; i < d_; ++i) coeffs[i] = x_to_bigint(best_x_[i]);
    return canonicalize(make_point(basis_.rows(), std::move(coeffs)));
  }

 private:
  static BigInt x_to_bigint(std::int64_t v) {
    return BigInt(static_cast<long>(v));
  }

  // Only strict improvements matter, and exact norms are integers, so the
  // float search radius is (best - 1) plus margin for rounding in the
  // accumulated partial sums. Nothing shorter can ever be pruned.
  void shrink_bound() {
    const BigInt target = best_norm_sq_ - 1;
    bound_ = to_double(target) * (1.0 + 1e-9);
  }

  void process_leaf() {
    if (partial_[0] == 0.0) return;  // the zero vector
    std::vector<BigInt> coeffs(d_);
    for (int i = 0; i < d_; ++i) coeffs[i] = x_to_bigint(x_[i]);
    const LatticePoint cand = make_point(basis_.rows(), std::move(coeffs));
    if (cand.norm_sq < best_norm_sq_) {
      best_norm_sq_ = cand.norm_sq;
      best_x_ = x_;
      shrink_bound();
    }
  }

  void descend(int i) {
    if (i > 0 && stale_[i] > stale_[i - 1]) stale_[i - 1] = stale_[i];

    const double ci = sig_[i][i];
    const double rounded = std::round(ci);
    const double yi = ci - rounded;
    const double li = partial_[i + 1] + yi * yi * rr_[i];
    if (li > bound_) return;

    dx_[i] = d2x_[i] = (yi >= 0.0) ? 1 : -1;
    centers_[i] = ci;
    x_[i] = static_cast<std::int64_t>(rounded);
    partial_[i] = li;

    if (i > 0) {
      for (int j = stale_[i - 1]; j > i - 1; --j) {
        sig_[i - 1][j - 1] =
            sig_[i - 1][j] - static_cast<double>(x_[j]) * mu_t_[i - 1][j];
      }
    }

    for (;;) {
      if (i == 0) {
        process_leaf();
      } else {
        descend(i - 1);
      }
      if (partial_[i + 1] == 0.0) {
        // All-zero prefix above: stay in the canonical half-space.
        ++x_[i];
      } else {
        x_[i] += dx_[i];
        d2x_[i] = -d2x_[i];
        dx_[i] = d2x_[i] - dx_[i];
      }
      const double y = centers_[i] - static_cast<double>(x_[i]);
      const double next_li = partial_[i + 1] + y * y * rr_[i];
      if (next_li > bound_) return;
      partial_[i] = next_li;
      if (i > 0) {
        stale_[i - 1] = i;
        sig_[i - 1][i - 1] =
            sig_[i - 1][i] - static_cast<double>(x_[i]) * mu_t_[i - 1][i];
      }
    }
  }

  const BasisMatrix& basis_;
  int d_;
  std::vector<std::vector<double>> mu_t_;  // mu_t_[i][j] = mu[j][i], j > i
  std::vector<double> rr_;                 // ||b*_i||^2
  std::vector<std::int64_t> x_, dx_, d2x_;
  std::vector<double> centers_;
  std::vector<double> partial_;  // partial_[i] = cost of levels >= i
  std::vector<std::vector<double>> sig_;
  std::vector<int> stale_;
  double bound_ = 0.0;
  std::vector<std::int64_t> best_x_;
  BigInt best_norm_sq_;
};

}  // namespace

ComplexityEstimate estimate_complexity(int dim) {
  if (dim < 0) throw InvalidParamsError("dimension must be nonnegative");
  const long double l2 = std::log2(4.0L / 3.0L);
  ComplexityEstimate est;
  est.dim = dim;
  est.log2_pop = static_cast<double>(0.5L * dim * l2);
  est.log2_time = static_cast<double>(dim * l2);
  est.pop_size_estimate = static_cast<double>(std::exp2(0.5L * dim * l2));
  est.reduction_probability = static_cast<double>(std::exp2(-0.5L * dim * l2));
  return est;
}

double gaussian_heuristic(const BasisMatrix& basis) {
  const int d = basis.dim();
  const BigInt det_gram = gram_determinant(gram_schmidt(basis));
  const double log_det = log_of(det_gram);
  return std::exp(std::lgamma(d / 2.0 + 1.0) / d - 0.5 * std::log(M_PI) +
                  log_det / (2.0 * d));
}

double pair_angle(const LatticePoint& v, const LatticePoint& w) {
  if (v.norm_sq == 0 || w.norm_sq == 0) {
    throw ZeroInputError("pair_angle needs nonzero vectors");
  }
  const BigInt ip = dot(v.coords, w.coords);
  const BigInt norm_prod = v.norm_sq * w.norm_sq;
  long double c = to_long_double(ip) / std::sqrt(to_long_double(norm_prod));
  c = std::clamp(c, -1.0L, 1.0L);
  return static_cast<double>(std::acos(c));
}

LatticePoint enumerate_svp(const BasisMatrix& basis,
                           const GramSchmidtData& gso,
                           bool allow_large_dimension) {
  if (gso.dim() != basis.dim()) {
    throw InvalidParamsError("Gram-Schmidt data does not match the basis");
  }
  if (basis.dim() > kEnumerationSoftLimit && !allow_large_dimension) {
    throw DimensionTooLargeError(
        "enumeration beyond dimension " +
        std::to_string(kEnumerationSoftLimit) +
        " must be requested explicitly");
  }
  Enumerator enumerator(basis, gso);
  return enumerator.run();
}

}  // namespace evosieve
