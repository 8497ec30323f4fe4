#include "evosieve/lll.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "evosieve/errors.hpp"

namespace evosieve {
namespace {

// Working state: integer rows plus rational mu / ||b*||^2, maintained with
// the classic incremental update formulas (Cohen, "A Course in Computational
// Algebraic Number Theory", Algorithm 2.6.3).
struct LllState {
  IntMatrix rows;
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> bstar;  // ||b*_k||^2
  int d;

  // If |mu[k][j]| > 1/2, subtract the nearest-integer multiple of row j.
  void size_reduce(int k, int j) {
    if (2 * abs(mu[k][j]) <= 1) return;
    const Rational shifted = mu[k][j] + Rational(1, 2);
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num().get_mpz_t(),
               shifted.get_den().get_mpz_t());
    for (int c = 0; c < d; ++c) rows[k][c] -= q * rows[j][c];
    mu[k][j] -= q;
    for (int i = 0; i < j; ++i) mu[k][i] -= q * mu[j][i];
  }

  // Swap rows k-1 and k, updating only the affected Gram-Schmidt entries.
  void swap_step(int k) {
    std::swap(rows[k], rows[k - 1]);
    for (int j = 0; j <= k - 2; ++j) std::swap(mu[k][j], mu[k - 1][j]);
    const Rational m = mu[k][k - 1];
    const Rational bk1 = bstar[k - 1];
    const Rational bk = bstar[k];
    const Rational bnew = bk + m * m * bk1;
    mu[k][k - 1] = m * bk1 / bnew;
    bstar[k] = bk1 * bk / bnew;
    bstar[k - 1] = bnew;
    for (int i = k + 1; i < d; ++i) {
      const Rational t = mu[i][k];
      mu[i][k] = mu[i][k - 1] - m * t;
      mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
    }
  }
};

void check_delta(const Rational& delta) {
  if (delta <= Rational(1, 4) || delta > 1) {
    throw InvalidDeltaError("delta must lie in (1/4, 1]");
  }
}

}  // namespace

BasisMatrix lll_reduce(const BasisMatrix& basis, const Rational& delta) {
  check_delta(delta);
  LllState st;
  st.rows = basis.rows();
  st.d = basis.dim();
  GramSchmidtData gso = gram_schmidt(basis);
  st.mu = std::move(gso.mu);
  st.bstar = std::move(gso.bstar_norm_sq);

  int k = 1;
  while (k < st.d) {
    st.size_reduce(k, k - 1);
    if (st.bstar[k] < (delta - st.mu[k][k - 1] * st.mu[k][k - 1]) * st.bstar[k - 1]) {
      st.swap_step(k);
      k = std::max(k - 1, 1);
    } else {
      for (int j = k - 2; j >= 0; --j) st.size_reduce(k, j);
      ++k;
    }
  }
  return build_basis(std::move(st.rows));
}

bool is_size_reduced(const BasisMatrix& basis) {
  const GramSchmidtData gso = gram_schmidt(basis);
  for (int i = 1; i < basis.dim(); ++i) {
    for (int j = 0; j < i; ++j) {
      if (2 * abs(gso.mu[i][j]) > 1) return false;
    }
  }
  return true;
}

bool satisfies_lovasz(const BasisMatrix& basis, const Rational& delta) {
  check_delta(delta);
  const GramSchmidtData gso = gram_schmidt(basis);
  for (int i = 1; i < basis.dim(); ++i) {
    const Rational& mu = gso.mu[i][i - 1];
    if (delta * gso.bstar_norm_sq[i - 1] >
        gso.bstar_norm_sq[i] + mu * mu * gso.bstar_norm_sq[i - 1]) {
      return false;
    }
  }
  return true;
}

}  // namespace evosieve
