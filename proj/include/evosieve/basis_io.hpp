#pragma once

// Basis text formats and the deterministic instance generator.

#include <cstdint>
#include <string>

#include "evosieve/basis.hpp"

namespace evosieve {

// Accepts the challenge-style bracket format -- optional outer '[', one
// '[e1 e2 ... ed]' group per row -- as well as a plain whitespace-delimited
// d x d integer grid with one row per line. Entries may exceed 64 bits.
BasisMatrix parse_basis(const std::string& text);

// Bracket format, one row per line; parse_basis round-trips it exactly.
std::string format_basis(const BasisMatrix& basis);

// Lower-triangular knapsack-style instance: B[0][0] uniform in
// [2^(bits-1), 2^bits), first column uniform below B[0][0], unit diagonal
// elsewhere. Deterministic in the seed.
BasisMatrix generate_random_basis(int dim, int bits, std::uint64_t seed);

}  // namespace evosieve
