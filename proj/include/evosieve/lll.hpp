#pragma once

// LLL basis reduction in exact arithmetic: integer row operations on the
// basis, rational Gram-Schmidt state updated incrementally.

#include "evosieve/basis.hpp"
#include "evosieve/bigint.hpp"

namespace evosieve {

// Returns a basis of the same lattice that is size-reduced and satisfies the
// Lovasz condition for delta. delta must lie in (1/4, 1].
BasisMatrix lll_reduce(const BasisMatrix& basis,
                       const Rational& delta = Rational(99, 100));

// Standalone postcondition checkers. Both recompute Gram-Schmidt from
// scratch, independent of the incremental bookkeeping inside lll_reduce.
bool is_size_reduced(const BasisMatrix& basis);
bool satisfies_lovasz(const BasisMatrix& basis, const Rational& delta);

}  // namespace evosieve
