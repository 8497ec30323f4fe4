#include "evosieve/basis.hpp"

#include <string>
#include <utility>

#include "evosieve/errors.hpp"

namespace evosieve {
namespace {

// Gram-Schmidt over the raw rows. Returns data without wrapping the rows in
// a BasisMatrix, so build_basis can use it for validation.
GramSchmidtData gram_schmidt_rows(const IntMatrix& rows) {
  const int d = static_cast<int>(rows.size());
  GramSchmidtData gso;
  gso.mu.assign(d, std::vector<Rational>(d, Rational(0)));
  gso.bstar_norm_sq.assign(d, Rational(0));

  // bstar[i] kept as exact rational vectors during the sweep.
  std::vector<std::vector<Rational>> bstar(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) bstar[i][k] = Rational(rows[i][k]);
    for (int j = 0; j < i; ++j) {
      Rational dot(0);
      for (int k = 0; k < d; ++k) dot += Rational(rows[i][k]) * bstar[j][k];
      gso.mu[i][j] = dot / gso.bstar_norm_sq[j];
      for (int k = 0; k < d; ++k) bstar[i][k] -= gso.mu[i][j] * bstar[j][k];
    }
    gso.mu[i][i] = 1;
    Rational norm(0);
    for (int k = 0; k < d; ++k) norm += bstar[i][k] * bstar[i][k];
    if (norm == 0) {
      throw DependentRowsError("row " + std::to_string(i + 1) +
                               " is a linear combination of earlier rows");
    }
    gso.bstar_norm_sq[i] = norm;
  }
  return gso;
}

}  // namespace

BasisMatrix build_basis(IntMatrix rows) {
  const std::size_t d = rows.size();
  if (d < 2) throw DimensionTooSmallError("basis needs dimension >= 2");
  for (const auto& row : rows) {
    if (row.size() != d) {
      throw NotSquareError("basis rows must all have length equal to the row count");
    }
  }
  gram_schmidt_rows(rows);  // throws DependentRowsError on rank loss
  return BasisMatrix(std::move(rows));
}

GramSchmidtData gram_schmidt(const BasisMatrix& basis) {
  return gram_schmidt_rows(basis.rows());
}

BigInt gram_determinant(const GramSchmidtData& gso) {
  Rational det(1);
  for (const Rational& b : gso.bstar_norm_sq) det *= b;
  det.canonicalize();
  // The product telescopes to an integer determinant.
  return det.get_num();
}

}  // namespace evosieve
