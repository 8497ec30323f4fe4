#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "evosieve/errors.hpp"
#include "evosieve/point.hpp"
#include "test_support.hpp"

using namespace evosieve;
using namespace evotest;

namespace {
const IntMatrix kId2 = mat({{1, 0}, {0, 1}});
const IntMatrix kId3 = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}  // namespace

TEST_CASE("sub_points hand arithmetic") {
  const LatticePoint v = point_of(kId2, {2, 0});
  const LatticePoint w = point_of(kId2, {1, 1});
  const auto u = sub_points(v, w);
  REQUIRE(u.has_value());
  CHECK(u->coords == vec({1, -1}));
  CHECK(u->norm_sq == 2);
}

TEST_CASE("sub_points of equal points is the zero branch") {
  const LatticePoint v = point_of(kId2, {3, -2});
  CHECK_FALSE(sub_points(v, v).has_value());
}

TEST_CASE("sub_points matches an independent recomputation") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const BasisMatrix basis = random_dense_basis(10, seed);
    Rng rng(seed * 77);
    std::vector<BigInt> lv(10), lw(10);
    for (int i = 0; i < 10; ++i) {
      lv[i] = static_cast<long>(rng.between(-5, 5));
      lw[i] = static_cast<long>(rng.between(-5, 5));
    }
    const LatticePoint v = make_point(basis.rows(), lv);
    const LatticePoint w = make_point(basis.rows(), lw);
    const auto u = sub_points(v, w);
    if (!u) continue;

    std::vector<BigInt> diff(10);
    for (int i = 0; i < 10; ++i) diff[i] = lv[i] - lw[i];
    std::vector<BigInt> expect = combine(basis.rows(), diff);
    // the result is canonical, so compare up to a global sign
    if (u->coeffs != diff) {
      for (BigInt& c : expect) c = -c;
    }
    CHECK(u->coords == expect);
    CHECK(u->norm_sq == norm_sq_of(expect));
  }
}

TEST_CASE("canonicalize flips exactly when the leading coefficient is negative") {
  LatticePoint p = make_point(kId3, vec({0, -3, 1}));
  const LatticePoint q = canonicalize(p);
  CHECK(q.coeffs == vec({0, 3, -1}));
  CHECK(q.norm_sq == p.norm_sq);

  const LatticePoint r = make_point(kId2, vec({2, -1}));
  CHECK(canonicalize(r).coeffs == vec({2, -1}));
}

TEST_CASE("canonicalize is idempotent and identifies +-p") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const BasisMatrix basis = random_dense_basis(5, 50 + seed);
    Rng rng(seed);
    std::vector<BigInt> lambda(5);
    bool zero = true;
    for (int i = 0; i < 5; ++i) {
      lambda[i] = static_cast<long>(rng.between(-4, 4));
      if (lambda[i] != 0) zero = false;
    }
    if (zero) lambda[0] = 1;
    const LatticePoint p = make_point(basis.rows(), lambda);
    std::vector<BigInt> neg(5);
    for (int i = 0; i < 5; ++i) neg[i] = -lambda[i];
    const LatticePoint m = make_point(basis.rows(), neg);

    const LatticePoint cp = canonicalize(p);
    const LatticePoint cm = canonicalize(m);
    CHECK(cp.coeffs == cm.coeffs);
    CHECK(cp.coords == cm.coords);
    CHECK(cp.norm_sq == cm.norm_sq);
    CHECK(canonicalize(cp).coeffs == cp.coeffs);
    CHECK(is_canonical(cp));
  }
}

TEST_CASE("canonicalize rejects zero") {
  LatticePoint zero = make_point(kId2, vec({0, 0}));
  CHECK_THROWS_AS(canonicalize(zero), ZeroInputError);
}

TEST_CASE("add_signed_basis_vector mechanics") {
  const LatticePoint p = point_of(kId2, {1, 0});
  const auto q = add_signed_basis_vector(p, 1, -1, kId2);
  REQUIRE(q.has_value());
  CHECK(q->coeffs == vec({1, -1}));
  CHECK(q->coords == vec({1, -1}));
  CHECK(q->norm_sq == 2);
}

TEST_CASE("add_signed_basis_vector cancellation yields the zero branch") {
  const LatticePoint b1 = point_of(kId2, {1, 0});
  CHECK_FALSE(add_signed_basis_vector(b1, 0, -1, kId2).has_value());
}

TEST_CASE("add_signed_basis_vector rejects a bad index") {
  const LatticePoint p = point_of(kId2, {1, 0});
  CHECK_THROWS_AS(add_signed_basis_vector(p, 2, 1, kId2), IndexOutOfRangeError);
}

TEST_CASE("add_signed_basis_vector norm matches recomputation") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const BasisMatrix basis = random_dense_basis(10, 200 + seed);
    Rng rng(seed);
    std::vector<BigInt> lambda(10);
    for (int i = 0; i < 10; ++i) lambda[i] = static_cast<long>(rng.between(-5, 5));
    lambda[0] = 1;
    const LatticePoint p = make_point(basis.rows(), lambda);
    for (std::size_t idx = 0; idx < 10; ++idx) {
      for (int sign : {1, -1}) {
        const auto q = add_signed_basis_vector(p, idx, sign, basis.rows());
        if (!q) continue;
        CHECK(q->norm_sq == norm_sq_of(q->coords));
        CHECK(in_lattice(basis.rows(), q->coords));
      }
    }
  }
}

TEST_CASE("closure: differences stay in the lattice with exact coords") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const BasisMatrix basis = random_dense_basis(6, 300 + seed);
    Rng rng(seed);
    std::vector<BigInt> lv(6), lw(6);
    for (int i = 0; i < 6; ++i) {
      lv[i] = static_cast<long>(rng.between(-6, 6));
      lw[i] = static_cast<long>(rng.between(-6, 6));
    }
    const auto u = sub_points(make_point(basis.rows(), lv),
                              make_point(basis.rows(), lw));
    if (!u) continue;
    CHECK(combine(basis.rows(), u->coeffs) == u->coords);
    CHECK(in_lattice(basis.rows(), u->coords));
    CHECK(u->norm_sq == norm_sq_of(u->coords));
  }
}
