#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "evosieve/basis_io.hpp"
#include "evosieve/errors.hpp"
#include "evosieve/lll.hpp"
#include "evosieve/oracle.hpp"
#include "evosieve/sampler.hpp"
#include "evosieve/sieve.hpp"
#include "test_support.hpp"

using namespace evosieve;
using namespace evotest;

TEST_CASE("enumerate_svp on the identity finds a unit vector") {
  IntMatrix id(5, std::vector<BigInt>(5, BigInt(0)));
  for (int i = 0; i < 5; ++i) id[i][i] = 1;
  const BasisMatrix basis = build_basis(id);
  const LatticePoint s = enumerate_svp(basis, gram_schmidt(basis));
  CHECK(s.norm_sq == 1);
}

TEST_CASE("enumerate_svp 2d example against exhaustive search") {
  const BasisMatrix basis = build_basis(mat({{7, 0}, {3, 1}}));
  const BigInt expected = brute_force_min_norm_sq(basis.rows(), 10);
  CHECK(expected == 5);
  const LatticePoint s = enumerate_svp(basis, gram_schmidt(basis));
  CHECK(s.norm_sq == 5);
  // (-1, 2) up to sign, canonicalized
  CHECK(s.coords == vec({1, -2}));
  CHECK(in_lattice(basis.rows(), s.coords));
}

TEST_CASE("enumerate_svp matches exhaustive search on dense lattices") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int dim = 4 + static_cast<int>(seed % 3);  // 4..6
    const BasisMatrix basis = lll_reduce(random_dense_basis(dim, 600 + seed));
    const LatticePoint s = enumerate_svp(basis, gram_schmidt(basis));
    CHECK(s.norm_sq == brute_force_min_norm_sq(basis.rows(), 8));
    CHECK(combine(basis.rows(), s.coeffs) == s.coords);
    CHECK(is_canonical(s));
  }
}

TEST_CASE("enumerate_svp is a lower bound for sieve outputs") {
  int equal = 0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const BasisMatrix basis = generate_random_basis(20, 50, seed);
    const BasisMatrix red = lll_reduce(basis);
    const LatticePoint s = enumerate_svp(red, gram_schmidt(red));
    SieveConfig cfg;
    cfg.variant = Variant::local;
    cfg.pop_size = 0;
    cfg.seed = seed;
    const SieveResult res = run_sieve(basis, cfg);
    CHECK(s.norm_sq <= res.best.norm_sq);
    if (s.norm_sq == res.best.norm_sq) ++equal;
  }
  CHECK(equal >= 2);  // the sieve is expected to reach the optimum here
}

TEST_CASE("enumerate_svp is a lower bound for naive sampling") {
  const BasisMatrix basis = lll_reduce(generate_random_basis(12, 30, 4));
  const GramSchmidtData gso = gram_schmidt(basis);
  const LatticePoint s = enumerate_svp(basis, gso);
  Rng rng(4);
  for (int i = 0; i < 10000; ++i) {
    const auto p = naive_sample(basis, 3, rng);
    if (!p) continue;
    CHECK(s.norm_sq <= p->norm_sq);
  }
}

TEST_CASE("enumerate_svp enforces the dimension gate") {
  const BasisMatrix basis = generate_random_basis(31, 20, 1);
  const BasisMatrix red = lll_reduce(basis);
  const GramSchmidtData gso = gram_schmidt(red);
  CHECK_THROWS_AS(enumerate_svp(red, gso), DimensionTooLargeError);
}

TEST_CASE("gaussian_heuristic closed forms") {
  const BasisMatrix id2 = build_basis(mat({{1, 0}, {0, 1}}));
  CHECK(gaussian_heuristic(id2) ==
        doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-9));

  IntMatrix id40(40, std::vector<BigInt>(40, BigInt(0)));
  for (int i = 0; i < 40; ++i) id40[i][i] = 1;
  // independent route: Gamma(21) = 20! exactly, then gh = (20!)^(1/40)/sqrt(pi)
  BigInt fact(1);
  for (int k = 2; k <= 20; ++k) fact *= k;
  const double expected = std::exp(log_of(fact) / 40.0) / std::sqrt(M_PI);
  CHECK(gaussian_heuristic(build_basis(id40)) ==
        doctest::Approx(expected).epsilon(1e-9));
  CHECK(gaussian_heuristic(build_basis(id40)) ==
        doctest::Approx(1.626).epsilon(1e-3));
}

TEST_CASE("gaussian_heuristic is homogeneous of degree one") {
  const BasisMatrix basis = random_dense_basis(6, 900);
  IntMatrix scaled = basis.rows();
  for (auto& row : scaled) {
    for (BigInt& v : row) v *= 7;
  }
  CHECK(gaussian_heuristic(build_basis(scaled)) ==
        doctest::Approx(7.0 * gaussian_heuristic(basis)).epsilon(1e-9));
}

TEST_CASE("estimate_complexity formulas") {
  const ComplexityEstimate zero = estimate_complexity(0);
  CHECK(zero.pop_size_estimate == doctest::Approx(1.0).epsilon(1e-12));

  // exact reference: (4/3)^20 as a rational
  const ComplexityEstimate d40 = estimate_complexity(40);
  BigInt num(1), den(1);
  mpz_ui_pow_ui(num.get_mpz_t(), 4, 20);
  mpz_ui_pow_ui(den.get_mpz_t(), 3, 20);
  const double exact = to_double(Rational(num, den));
  CHECK(std::abs(d40.pop_size_estimate - exact) / exact <= 1e-9);

  const ComplexityEstimate d100 = estimate_complexity(100);
  CHECK(d100.log2_pop == doctest::Approx(20.75).epsilon(5e-4));
  CHECK(d100.log2_time == doctest::Approx(41.50).epsilon(5e-4));
  CHECK(d100.log2_time == doctest::Approx(2.0 * d100.log2_pop).epsilon(1e-12));
}

TEST_CASE("estimate_complexity internal balance") {
  for (int d = 0; d <= 100; d += 5) {
    const ComplexityEstimate est = estimate_complexity(d);
    const double balance = est.reduction_probability * est.pop_size_estimate *
                           est.pop_size_estimate / est.pop_size_estimate;
    CHECK(std::abs(balance - 1.0) <= 1e-9);
    CHECK(std::abs(est.pop_size_estimate - std::exp2(est.log2_pop)) /
              est.pop_size_estimate <=
          1e-9);
  }
}

TEST_CASE("pair_angle closed forms") {
  const IntMatrix id2 = mat({{1, 0}, {0, 1}});
  const LatticePoint e1 = point_of(id2, {1, 0});
  const LatticePoint e2 = point_of(id2, {0, 1});
  CHECK(pair_angle(e1, e2) == doctest::Approx(M_PI / 2).epsilon(1e-12));

  const LatticePoint a = point_of(id2, {2, 0});
  const LatticePoint b = point_of(id2, {1, 1});
  CHECK(pair_angle(a, b) == doctest::Approx(M_PI / 4).epsilon(1e-12));

  LatticePoint zero;
  zero.coeffs = vec({0, 0});
  zero.coords = vec({0, 0});
  zero.norm_sq = 0;
  CHECK_THROWS_AS(pair_angle(e1, zero), ZeroInputError);
}

TEST_CASE("equal norms: reduction succeeds exactly below the pi/3 boundary") {
  // For equal-norm pairs the acceptance test is 2 <v,w> > ||v||^2, which is
  // the exact form of angle < pi/3. Signed permutations provide equal-norm
  // pairs across many angles.
  const int d = 6;
  IntMatrix id(d, std::vector<BigInt>(d, BigInt(0)));
  for (int i = 0; i < d; ++i) id[i][i] = 1;
  Rng rng(31415);
  int checked = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    std::vector<BigInt> lv(d);
    for (int i = 0; i < d; ++i) lv[i] = static_cast<long>(rng.between(-5, 5));
    std::vector<BigInt> lw(d);
    for (int i = 0; i < d; ++i) lw[i] = lv[i];
    // random signed permutation keeps the norm
    for (int i = d - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
      std::swap(lw[i], lw[j]);
    }
    for (int i = 0; i < d; ++i) {
      if (rng.below(2) == 0) lw[i] = -lw[i];
    }
    const LatticePoint v = make_point(id, lv);
    const LatticePoint w = make_point(id, lw);
    if (is_zero(v) || is_zero(w) || v.coeffs == w.coeffs) continue;
    REQUIRE(v.norm_sq == w.norm_sq);
    ++checked;

    const bool accepted = reduce_pair(v, w).has_value();
    const BigInt ip = dot(v.coords, w.coords);
    const bool below_boundary = 2 * ip > v.norm_sq;
    CHECK(accepted == below_boundary);

    // pair_angle agrees whenever the pair is clearly off the boundary
    const double cosine = to_double(ip) / to_double(v.norm_sq);
    if (std::abs(cosine - 0.5) > 1e-9) {
      CHECK((pair_angle(v, w) < M_PI / 3) == below_boundary);
    }
  }
  CHECK(checked > 90000);
}

TEST_CASE("the exact pi/3 boundary is rejected") {
  const IntMatrix id3 = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const LatticePoint v = point_of(id3, {1, 1, 0});
  const LatticePoint w = point_of(id3, {1, 0, 1});
  CHECK(pair_angle(v, w) == doctest::Approx(M_PI / 3).epsilon(1e-12));
  CHECK_FALSE(reduce_pair(v, w).has_value());
}
