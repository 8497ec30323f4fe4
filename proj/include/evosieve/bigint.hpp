#pragma once

// Exact arithmetic aliases and small helpers shared across the library.
// Coordinates and norms are unbounded integers; Gram-Schmidt data is exact
// rational. The sieve engine additionally instantiates its inner loop with
// int64 scalars, so the helpers here are provided for both scalar types.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <vector>

namespace evosieve {

using BigInt = mpz_class;
using Rational = mpq_class;

inline double to_double(const BigInt& v) { return v.get_d(); }
inline double to_double(const Rational& v) { return v.get_d(); }
inline double to_double(std::int64_t v) { return static_cast<double>(v); }

// Lossless-exponent conversion for values far beyond double range.
inline long double to_long_double(const BigInt& v) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp2));
}

// Natural log of a positive integer, stable for thousands of bits.
inline double log_of(const BigInt& v) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

inline bool fits_int64(const BigInt& v) { return v.fits_slong_p(); }

// --- three-way compare, shared by int64 and BigInt instantiations ---

inline int cmp_scalar(std::int64_t a, std::int64_t b) {
  return a < b ? -1 : (a > b ? 1 : 0);
}
inline int cmp_scalar(const BigInt& a, const BigInt& b) { return cmp(a, b); }

template <class I>
int cmp_vec(const std::vector<I>& a, const std::vector<I>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp_scalar(a[i], b[i]);
    if (c != 0) return c;
  }
  return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

// --- hashing of coefficient vectors (population dedup keys) ---

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t elem_hash(std::int64_t v) {
  return mix64(static_cast<std::uint64_t>(v));
}

inline std::uint64_t elem_hash(const BigInt& v) {
  const mpz_srcptr z = v.get_mpz_t();
  std::uint64_t h = mix64(static_cast<std::uint64_t>(mpz_sgn(z) + 1));
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h = mix64(h ^ static_cast<std::uint64_t>(mpz_getlimbn(z, i)));
  }
  return h;
}

template <class I>
struct CoeffVecHash {
  std::size_t operator()(const std::vector<I>& v) const {
    std::uint64_t h = mix64(v.size());
    for (const I& x : v) h = mix64(h ^ elem_hash(x));
    return static_cast<std::size_t>(h);
  }
};

}  // namespace evosieve
