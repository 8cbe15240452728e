#pragma once

// Test-only oracles. Each one reaches its answer by a route that shares no
// code with the library beyond DivClass storage and the intersection form.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dp2/picard.hpp"

namespace oracle {

using dp2::DivClass;

// All D in the box |d| <= 4, |m_i| <= 3 with D^2 = -1 and D.H = 1.
inline std::set<DivClass> exceptional_scan() {
  std::set<DivClass> out;
  for (int d = -4; d <= 4; ++d) {
    std::array<int, 7> m{};
    for (auto& x : m) x = -3;
    while (true) {
      std::int64_t deg = 3 * d, sq = static_cast<std::int64_t>(d) * d;
      for (int x : m) {
        deg += x;
        sq -= static_cast<std::int64_t>(x) * x;
      }
      if (deg == 1 && sq == -1) {
        DivClass c;
        c[0] = d;
        for (int i = 0; i < 7; ++i) c[i + 1] = m[i];
        out.insert(c);
      }
      int k = 0;
      while (k < 7 && m[k] == 3) m[k++] = -3;
      if (k == 7) break;
      ++m[k];
    }
  }
  return out;
}

// Coordinates of D in the basis h = L - 3E1, e_i = E_i - E_{i+1}, when D.H = 0.
// Returns (a; b_1..b_6) with D = a h + sum b_i e_i.
inline std::optional<std::array<std::int64_t, 7>> kernel_coordinates(const DivClass& d) {
  if (dp2::intersect(d, dp2::anticanonical()) != 0) return std::nullopt;
  std::array<std::int64_t, 7> c{};
  c[0] = d[0];
  c[1] = d[1] + 3 * d[0];
  for (int k = 2; k <= 6; ++k) c[k] = c[k - 1] + d[k];
  if (-c[6] != d[7]) return std::nullopt;  // cannot happen once D.H = 0
  return c;
}

// im(1 - sigma) = <2 ker, h + e2 + e4 + e6>, read off in kernel coordinates.
inline bool coboundary(const DivClass& d) {
  const auto c = kernel_coordinates(d);
  if (!c) return false;
  const std::array<int, 7> special{1, 0, 1, 0, 1, 0, 1};
  bool zero = true, shifted = true;
  for (int k = 0; k < 7; ++k) {
    const int bit = static_cast<int>(((*c)[k] % 2 + 2) % 2);
    zero = zero && bit == 0;
    shifted = shifted && bit == special[k];
  }
  return zero || shifted;
}

// Class of a cocycle as six bits over e1..e6, or nullopt for a non-cocycle.
inline std::optional<std::array<int, 6>> h1_class(const DivClass& d) {
  const auto c = kernel_coordinates(d);
  if (!c) return std::nullopt;
  const bool odd_h = ((*c)[0] % 2 + 2) % 2 == 1;
  std::array<int, 6> v{};
  for (int k = 1; k <= 6; ++k) {
    int bit = static_cast<int>(((*c)[k] % 2 + 2) % 2);
    if (odd_h && k % 2 == 0) bit ^= 1;
    v[k - 1] = bit;
  }
  return v;
}

// h0 of dL - sum a_i E_i on the blow-up of P^2 at seven random points of
// F_p: the dimension of degree-d plane curves with multiplicity a_i at p_i.
class Interpolation {
 public:
  static constexpr std::uint64_t kPrime = 2147483647;  // 2^31 - 1

  explicit Interpolation(std::uint64_t seed = 12345) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, kPrime - 1);
    for (auto& p : points_) p = {dist(rng), dist(rng)};
  }

  std::int64_t h0(const DivClass& d) const {
    const std::int64_t deg = d[0];
    if (deg < 0) return 0;
    std::vector<std::pair<int, int>> monomials;
    for (int i = 0; i <= deg; ++i)
      for (int j = 0; i + j <= deg; ++j) monomials.emplace_back(i, j);
    std::vector<std::vector<std::uint64_t>> rows;
    for (int p = 0; p < 7; ++p) {
      const std::int64_t mult = -d[p + 1];
      for (int s = 0; s < mult; ++s)
        for (int t = 0; s + t < mult; ++t) {
          std::vector<std::uint64_t> row;
          for (const auto& [i, j] : monomials) row.push_back(derivative(i, j, s, t, points_[p]));
          rows.push_back(std::move(row));
        }
    }
    return static_cast<std::int64_t>(monomials.size()) - rank(rows, monomials.size());
  }

 private:
  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
  }
  static std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
      if (e & 1) r = mulmod(r, a);
    return r;
  }
  static std::uint64_t falling(int n, int k) {
    std::uint64_t r = 1;
    for (int q = 0; q < k; ++q) r = mulmod(r, static_cast<std::uint64_t>(n - q));
    return r;
  }
  // d^s/dx^s d^t/dy^t of x^i y^j at the point
  static std::uint64_t derivative(int i, int j, int s, int t, const std::pair<std::uint64_t, std::uint64_t>& pt) {
    if (s > i || t > j) return 0;
    return mulmod(mulmod(falling(i, s), falling(j, t)),
                  mulmod(powmod(pt.first, static_cast<std::uint64_t>(i - s)),
                         powmod(pt.second, static_cast<std::uint64_t>(j - t))));
  }
  static std::int64_t rank(std::vector<std::vector<std::uint64_t>> m, std::size_t cols) {
    std::int64_t r = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < m.size(); ++c) {
      std::size_t piv = static_cast<std::size_t>(r);
      while (piv < m.size() && m[piv][c] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[piv], m[static_cast<std::size_t>(r)]);
      auto& pr = m[static_cast<std::size_t>(r)];
      const std::uint64_t inv = powmod(pr[c], kPrime - 2);
      for (auto& x : pr) x = mulmod(x, inv);
      for (std::size_t k = 0; k < m.size(); ++k)
        if (k != static_cast<std::size_t>(r) && m[k][c] != 0) {
          const std::uint64_t f = m[k][c];
          for (std::size_t q = 0; q < cols; ++q) m[k][q] = (m[k][q] + kPrime - mulmod(f, pr[q])) % kPrime;
        }
      ++r;
    }
    return r;
  }

  std::array<std::pair<std::uint64_t, std::uint64_t>, 7> points_{};
};

// Attainable values of each entry of an exact sequence, by enumerating rank
// vectors with every rank in [0, cap]. nullopt if no assignment fits.
struct LesRange {
  std::vector<std::int64_t> lo, hi;
};

inline std::optional<LesRange> les_enumerate(const std::vector<std::optional<std::int64_t>>& dims, int cap) {
  const std::size_t n = dims.size();
  std::vector<std::int64_t> r(n + 1, 0);
  LesRange out{std::vector<std::int64_t>(n, INT64_MAX), std::vector<std::int64_t>(n, INT64_MIN)};
  bool any = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (r[n] != 0) return;
      any = true;
      for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t v = r[k] + r[k + 1];
        out.lo[k] = std::min(out.lo[k], v);
        out.hi[k] = std::max(out.hi[k], v);
      }
      return;
    }
    // choose r_{i+1} from V_{i+1}
    if (dims[i]) {
      const std::int64_t next = *dims[i] - r[i];
      if (next < 0 || next > cap) return;
      if (i + 1 == n && next != 0) return;
      r[i + 1] = next;
      self(self, i + 1);
    } else {
      for (std::int64_t v = 0; v <= (i + 1 == n ? 0 : cap); ++v) {
        r[i + 1] = v;
        self(self, i + 1);
      }
    }
  };
  rec(rec, 0);
  if (!any) return std::nullopt;
  return out;
}

inline DivClass random_class(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  DivClass d;
  for (std::size_t k = 0; k < dp2::kRank; ++k) d[k] = dist(rng);
  return d;
}

}  // namespace oracle
