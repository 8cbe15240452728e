#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "dp2/intlinalg.hpp"

using namespace dp2;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Fraction-free (Bareiss) determinant.
__int128 det_bareiss(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::int64_t gcd_entries(const IntMatrix& a) {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) g = std::gcd(g, a(i, j));
  return g;
}

}  // namespace

TEST_CASE("column echelon is a unimodular factorization") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 200; ++n) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const IntMatrix a = random_matrix(rng, r, c, 4);
    const ColumnEchelon e = column_echelon(a);
    REQUIRE(a * e.transform == e.echelon);
    const __int128 d = det_bareiss(e.transform);
    REQUIRE((d == 1 || d == -1));
    for (std::size_t k = 0; k < e.rank; ++k) {
      CHECK(e.echelon(e.pivot_rows[k], k) > 0);
      for (std::size_t i = 0; i < e.pivot_rows[k]; ++i) CHECK(e.echelon(i, k) == 0);
      if (k > 0) CHECK(e.pivot_rows[k] > e.pivot_rows[k - 1]);
    }
    for (std::size_t k = e.rank; k < c; ++k) CHECK(e.echelon.column(k) == std::vector<std::int64_t>(r, 0));
  }
}

TEST_CASE("kernel and solve") {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 200; ++n) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    const IntMatrix a = random_matrix(rng, r, c, 3);
    const IntMatrix k = integer_kernel(a);
    const ColumnEchelon e = column_echelon(a);
    CHECK(k.cols() == c - e.rank);
    for (const auto& v : k.columns()) CHECK(multiply(a, v) == std::vector<std::int64_t>(r, 0));
    // b in the image is solvable; the solution reproduces b
    std::vector<std::int64_t> x(c);
    for (auto& v : x) v = static_cast<std::int64_t>(rng() % 7) - 3;
    const auto b = multiply(a, x);
    const auto sol = solve_integer(a, b);
    REQUIRE(sol.has_value());
    CHECK(multiply(a, *sol) == b);
  }
  // 2x = 1 has no integer solution
  IntMatrix two(1, 1);
  two(0, 0) = 2;
  const std::vector<std::int64_t> one{1};
  CHECK_FALSE(solve_integer(two, one).has_value());
}

TEST_CASE("Smith diagonal against determinant and content") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 300; ++n) {
    const std::size_t sz = 1 + rng() % 5;
    const IntMatrix a = random_matrix(rng, sz, sz, 5);
    const auto d = smith_diagonal(a);
    const __int128 det = det_bareiss(a);
    if (det == 0) {
      CHECK(d.size() < sz);
      continue;
    }
    REQUIRE(d.size() == sz);
    __int128 prod = 1;
    for (std::size_t k = 0; k < d.size(); ++k) {
      CHECK(d[k] > 0);
      if (k > 0) CHECK(d[k] % d[k - 1] == 0);
      prod *= d[k];
    }
    CHECK(prod == (det < 0 ? -det : det));
    CHECK(d[0] == gcd_entries(a));
  }
  IntMatrix z(2, 3);
  CHECK(smith_diagonal(z).empty());
}

TEST_CASE("overflow is reported, not wrapped") {
  IntMatrix a(1, 1), b(1, 1);
  a(0, 0) = INT64_MAX / 2 + 1;
  b(0, 0) = 4;
  CHECK_THROWS_AS(a * b, std::overflow_error);
}
