#include <doctest.h>

#include <random>

#include "dp2/chern.hpp"
#include "dp2/cohom.hpp"
#include "dp2/error.hpp"
#include "dp2/order.hpp"
#include "oracles.hpp"

using namespace dp2;

namespace {

const DivClass H = anticanonical();
const DivClass F = twist_class();

// chi(x, y) expanded by hand: r r' + (r c' - r' c).H/2 + r s' + r' s - c.c',
// everything doubled.
std::int64_t pairing_closed_form(const ChernChar& x, const ChernChar& y) {
  const std::int64_t twice = 2 * x.rank * y.rank + intersect(x.rank * y.c1 - y.rank * x.c1, H) +
                             x.rank * y.ch2_doubled + y.rank * x.ch2_doubled - 2 * intersect(x.c1, y.c1);
  REQUIRE(twice % 2 == 0);
  return twice / 2;
}

ChernChar random_chern(std::mt19937_64& rng) {
  const std::int64_t r = static_cast<std::int64_t>(rng() % 4);
  const DivClass c = oracle::random_class(rng, 3);
  const std::int64_t c2 = static_cast<std::int64_t>(rng() % 9) - 4;
  return ch_of(r, c, c2);
}

}  // namespace

TEST_CASE("constructors") {
  CHECK(ch_of(1, DivClass{}, 0) == ChernChar{1, DivClass{}, 0});
  CHECK(ch_structure_sheaf() == ChernChar{1, DivClass{}, 0});
  CHECK(ch_line(H) == ChernChar{1, H, 2});
  CHECK(ch_of(2, F, 1) == ChernChar{2, F, -2});
  CHECK(ch_of(2, F, 1).c2() == 1);
  CHECK(ch_point() == ChernChar{0, DivClass{}, 2});
  CHECK(ch_ideal_twist(F) == ch_line(F) - ch_point());
  for (const auto& c : exceptional_curves()) CHECK(ch_line(c.cls).c2() == 0);
}

TEST_CASE("ring operations") {
  const ChernChar m = ch_of(2, F, 1);
  CHECK(dual(m) == ChernChar{2, -F, -2});
  CHECK(mult(dual(m), m) == ChernChar{4, DivClass{}, -8});
  std::mt19937_64 rng(40);
  for (int n = 0; n < 200; ++n) {
    const auto x = random_chern(rng);
    const auto y = random_chern(rng);
    CHECK(mult(x, ch_structure_sheaf()) == x);
    CHECK(mult(x, y) == mult(y, x));
    CHECK(dual(dual(x)) == x);
    CHECK(x.integral());
    CHECK(mult(x, y).integral());
    CHECK(dual(x).integral());
    const auto a = oracle::random_class(rng, 3);
    const auto b = oracle::random_class(rng, 3);
    CHECK(mult(ch_line(a), ch_line(b)) == ch_line(a + b));
  }
  CHECK_FALSE((ChernChar{1, line(), 0}).integral());
  CHECK_THROWS_AS((ChernChar{1, line(), 0}).c2(), HalfIntegerLeak);
}

TEST_CASE("Todd class and Euler pairing") {
  CHECK(integrate_with_todd(ch_structure_sheaf()) == 1);
  CHECK(euler_pairing(ch_structure_sheaf(), ch_structure_sheaf()) == 1);
  CHECK(euler_pairing(ch_of(2, F, 1), ch_of(2, F, 1)) == 0);
  std::mt19937_64 rng(41);
  for (int n = 0; n < 100; ++n) {
    const auto a = oracle::random_class(rng, 5);
    const auto b = oracle::random_class(rng, 5);
    CHECK(euler_pairing(ch_structure_sheaf(), ch_line(b)) == chi_line(b));
    CHECK(euler_pairing(ch_line(a), ch_line(b)) == chi_line(b - a));
    CHECK(integrate_with_todd(ch_line(b)) == chi_line(b));
  }
  for (int n = 0; n < 300; ++n) {
    const auto x = random_chern(rng);
    const auto y = random_chern(rng);
    const auto z = random_chern(rng);
    REQUIRE(euler_pairing(x, y) == pairing_closed_form(x, y));
    CHECK(euler_pairing(x + z, y) == euler_pairing(x, y) + euler_pairing(z, y));
    CHECK(euler_pairing(x, y + z) == euler_pairing(x, y) + euler_pairing(x, z));
    CHECK(euler_pairing(x, y) == euler_pairing(y, serre_twist(x)));
  }
}

TEST_CASE("discriminant and Bogomolov") {
  CHECK(discriminant(2, F, 1) == 4);
  CHECK_THROWS_AS(discriminant(3, F, 1), std::invalid_argument);
  const DivClass L = exceptional_point(1) - conic_missing(1, 2);
  CHECK(self_intersection(L) == -2);
  CHECK(bogomolov_min_c2(L) == 0);
  CHECK(bogomolov_min_c2(F) == 0);
  CHECK(kMinimalC2Twist0 == 0);
  CHECK(kMinimalC2Twist1 == 1);
  CHECK(bogomolov_min_c2(kMinimalC2Twist1 * F) <= kMinimalC2Twist1);
  CHECK(bogomolov_min_c2(H) == 1);
  CHECK(bogomolov_min_c2(-H) == 1);
  CHECK(bogomolov_min_c2(2 * H) == 2);
  std::mt19937_64 rng(42);
  for (int n = 0; n < 200; ++n) {
    const auto c = oracle::random_class(rng, 4);
    const std::int64_t m = bogomolov_min_c2(c);
    CHECK(discriminant(2, c, m) >= 0);
    CHECK(discriminant(2, c, m - 1) < 0);
  }
}

TEST_CASE("extensions and the c1 constraint") {
  const ChernChar m = chern_of_extension(ch_structure_sheaf(), ch_ideal_twist(F));
  CHECK(m.rank == 2);
  CHECK(m.c1 == F);
  CHECK(m.c2() == 1);
  CHECK(chern_of_extension(ChernChar{}, m) == m);
  const auto split = chern_of_extension(ch_line(exceptional_point(1)), ch_line(line_through(1, 2)));
  CHECK(split == ch_line(exceptional_point(1)) + ch_line(line_through(1, 2)));
  CHECK(split == ch_of(2, F, 1));
  const DivClass L = exceptional_point(1) - conic_missing(1, 2);
  CHECK(c1_constraint(L, L) == 0);
  CHECK(c1_constraint(F, L) == 1);
  CHECK(c1_constraint(L - 3 * H, L) == -3);
  CHECK_FALSE(c1_constraint(H, L).has_value());
  CHECK_FALSE(c1_constraint(DivClass{}, L).has_value());
}
