#include "reinhardt/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "reinhardt/errors.hpp"
#include "test_util.hpp"

using namespace reinhardt;

TEST_CASE("sigma_count pinned examples") {
  CHECK(sigma_count(ev({2.0, 1.0}), pt({{0.0, 0.0}, {0.0, 0.0}})) == 2);
  CHECK(sigma_count(ev({2.0, 1.0}), pt({{0.5, 0.0}, {0.5, 0.0}})) == 0);
  CHECK(sigma_count(ev({2.0, -1.0, 3.0}),
                    pt({{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.0}})) == 1);
}

TEST_CASE("mu_min pinned examples") {
  CHECK(mu_min(ev({2.0, 1.0}), pt({{0.0, 0.0}, {0.0, 0.0}})) == 1.0);
  CHECK(mu_min(ev({3.0, 2.0}), pt({{0.0, 0.0}, {0.0, 0.0}})) == 2.0);
  CHECK(mu_min(ev({5.0, 1.0, 2.0}),
               pt({{0.3, 0.0}, {0.0, 0.0}, {0.0, 0.0}})) == 1.0);
  CHECK(throws_kind(ErrorKind::SigmaZero, [] {
    mu_min(ev({2.0, 1.0}), pt({{0.5, 0.0}, {0.5, 0.0}}));
  }));
}

TEST_CASE("r_order pinned examples") {
  CHECK(r_order(ev({2.0, 1.0}), pt({{0.0, 0.0}, {0.0, 0.0}})) == 3.0);
  CHECK(r_order(ev({3.0, 2.0}), pt({{0.5, 0.0}, {0.5, 0.0}})) == 1.0);
  CHECK(r_order(ev({1.0, 1.41421356237309}), pt({{0.5, 0.0}, {0.0, 0.0}})) ==
        doctest::Approx(1.41421356237309).epsilon(1e-15));
}

TEST_CASE("invariant_set bundles consistently") {
  {
    const InvariantSet inv =
        invariant_set(ev({2.0, 1.0}), pt({{0.0, 0.0}, {0.0, 0.0}}));
    CHECK(inv.sigma == 2);
    REQUIRE(inv.mu.has_value());
    CHECK(*inv.mu == 1.0);
    CHECK(inv.r == 3.0);
  }
  {
    const InvariantSet inv =
        invariant_set(ev({2.0, 1.0}), pt({{0.5, 0.0}, {0.5, 0.0}}));
    CHECK(inv.sigma == 0);
    CHECK_FALSE(inv.mu.has_value());
    CHECK(inv.r == 1.0);
  }
  {
    const InvariantSet inv =
        invariant_set(ev({3.0, 2.0}), pt({{0.0, 0.0}, {0.0, 0.0}}));
    CHECK(inv.sigma == 2);
    CHECK(*inv.mu == 2.0);
    CHECK(inv.r == 5.0);
  }
}

TEST_CASE("invariants require the base point inside the domain") {
  CHECK(throws_kind(ErrorKind::NotInDomain, [] {
    sigma_count(ev({2.0, 1.0}), pt({{1.0, 0.0}, {1.0, 0.0}}));
  }));
  CHECK(throws_kind(ErrorKind::NotInDomain, [] {
    r_order(ev({2.0, -1.0}), pt({{0.5, 0.0}, {0.0, 0.0}}));
  }));
}

TEST_CASE("mu <= r with equality exactly at sigma == 1") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> expo(0.25, 4.0);
  std::uniform_real_distribution<double> mod(0.1, 0.7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<double> alpha(n);
    for (auto& e : alpha) e = expo(rng);
    Point a(n);
    for (std::size_t j = 0; j < n; ++j) {
      a[j] = (rng() % 2 == 0) ? ComplexScalar(0.0, 0.0)
                              : ComplexScalar(mod(rng), 0.0);
    }
    const ExponentVector av(alpha);
    const InvariantSet inv = invariant_set(av, a);
    if (inv.sigma == 0) {
      CHECK_FALSE(inv.mu.has_value());
      CHECK(inv.r == 1.0);
    } else {
      REQUIRE(inv.mu.has_value());
      CHECK(*inv.mu <= inv.r + 1e-15);
      if (inv.sigma == 1) {
        CHECK(*inv.mu == inv.r);
      } else {
        CHECK(*inv.mu < inv.r);
      }
    }
  }
}

TEST_CASE("invariants commute with coordinate permutations") {
  const std::vector<double> alpha{5.0, 1.0, 2.0};
  const Point a = pt({{0.3, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
  const InvariantSet base = invariant_set(ExponentVector(alpha), a);

  std::vector<std::size_t> perm{2, 0, 1};
  std::vector<double> pa(3);
  Point pp(3);
  for (std::size_t j = 0; j < 3; ++j) {
    pa[j] = alpha[perm[j]];
    pp[j] = a[perm[j]];
  }
  const InvariantSet permuted = invariant_set(ExponentVector(pa), pp);
  CHECK(permuted.sigma == base.sigma);
  CHECK(permuted.mu == base.mu);
  CHECK(permuted.r == base.r);
}

TEST_CASE("r_order is integral for primitive integer exponents") {
  const std::vector<std::vector<double>> alphas{
      {2.0, 1.0}, {3.0, 2.0}, {5.0, 1.0, 2.0}};
  for (const auto& alpha : alphas) {
    Point a(alpha.size(), ComplexScalar(0.0, 0.0));
    const double r = r_order(ExponentVector(alpha), a);
    CHECK(r == std::floor(r));
  }
}
