#pragma once

// Lattice bases with exact integer entries and their rational
// Gram-Schmidt data.

#include <vector>

#include "evosieve/bigint.hpp"

namespace evosieve {

template <class I>
using Matrix = std::vector<std::vector<I>>;

using IntMatrix = Matrix<BigInt>;

// mu is lower triangular with unit diagonal; bstar_norm_sq holds ||b*_i||^2.
// Both are exact rationals, so prod(bstar_norm_sq) equals det(B B^T) exactly.
struct GramSchmidtData {
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> bstar_norm_sq;

  int dim() const { return static_cast<int>(bstar_norm_sq.size()); }
};

// A validated square integer matrix whose rows generate the lattice.
// Validation runs exact Gram-Schmidt and rejects dependent rows, so every
// instance is guaranteed to be a genuine rank-d basis.
class BasisMatrix {
 public:
  int dim() const { return static_cast<int>(rows_.size()); }
  const IntMatrix& rows() const { return rows_; }
  const std::vector<BigInt>& row(int i) const { return rows_[i]; }

 private:
  explicit BasisMatrix(IntMatrix rows) : rows_(std::move(rows)) {}
  friend BasisMatrix build_basis(IntMatrix rows);

  IntMatrix rows_;
};

// Validates and wraps a basis. Throws NotSquareError, DimensionTooSmallError
// or DependentRowsError.
BasisMatrix build_basis(IntMatrix rows);

// Exact rational Gram-Schmidt of the rows, already known to be independent.
GramSchmidtData gram_schmidt(const BasisMatrix& basis);

// det(B B^T) = prod ||b*_i||^2, exact.
BigInt gram_determinant(const GramSchmidtData& gso);

}  // namespace evosieve
