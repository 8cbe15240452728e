#pragma once

// Chern characters on Y truncated at degree 2, the Todd class, and the
// Hirzebruch-Riemann-Roch pairing.
//
// The degree-2 part ch_2 is a half-integer; it is stored doubled so that all
// arithmetic stays in the integers.

#include <cstdint>
#include <optional>
#include <ostream>

#include "dp2/picard.hpp"

namespace dp2 {

struct ChernChar {
  std::int64_t rank = 0;
  DivClass c1;
  std::int64_t ch2_doubled = 0;  // 2 * ch_2, in units of the point class

  // c_2 = c_1^2 / 2 - ch_2, valid in every rank.
  std::int64_t c2() const;
  // 2 ch_2 and c_1^2 have equal parity for a genuine sheaf.
  bool integral() const;

  friend bool operator==(const ChernChar&, const ChernChar&) = default;
};

std::ostream& operator<<(std::ostream& os, const ChernChar& x);

// (r, c1, (c1^2 - 2 c2) / 2)
ChernChar ch_of(std::int64_t rank, const DivClass& c1, std::int64_t c2);
ChernChar ch_line(const DivClass& d);
ChernChar ch_structure_sheaf();
// ch(O_p) for a closed point p.
ChernChar ch_point();
// ch(I_p O(D)) = ch(O(D)) - ch(O_p).
ChernChar ch_ideal_twist(const DivClass& d);

ChernChar dual(const ChernChar& x);
ChernChar mult(const ChernChar& x, const ChernChar& y);
ChernChar operator+(const ChernChar& x, const ChernChar& y);
ChernChar operator-(const ChernChar& x, const ChernChar& y);

// td(Y) = 1 + c_1(Y)/2 + chi(O_Y) [pt] with c_1(Y) = H and chi(O_Y) = 1.
// Stored doubled like ChernChar so the H/2 term is exact.
struct ToddClass {
  DivClass c1_doubled = anticanonical();
  std::int64_t td2 = 1;
};

// Degree-2 part of x * td(Y). Throws HalfIntegerLeak if it is not an integer.
std::int64_t integrate_with_todd(const ChernChar& x);

// chi(x, y) = int ch(x)^* ch(y) td(Y).
std::int64_t euler_pairing(const ChernChar& x, const ChernChar& y);

// Rank-2 discriminant 4 c2 - c1^2.
std::int64_t discriminant(std::int64_t rank, const DivClass& c1, std::int64_t c2);
// Smallest c2 with nonnegative rank-2 discriminant: ceil(c1^2 / 4).
std::int64_t bogomolov_min_c2(const DivClass& c1);

// Minimal c2 of A-line bundles with c1 = L + nH for n = 0, 1. These come from
// the classification of A-line bundles and are not derived here; Bogomolov
// alone only gives bogomolov_min_c2.
inline constexpr std::int64_t kMinimalC2Twist0 = 0;
inline constexpr std::int64_t kMinimalC2Twist1 = 1;

// ch of the middle term of 0 -> sub -> M -> quot -> 0.
ChernChar chern_of_extension(const ChernChar& sub, const ChernChar& quot);

// n with c1 = lclass + n H, if one exists. `lclass` is the class
// L = E - E' of the order.
std::optional<std::int64_t> c1_constraint(const DivClass& c1, const DivClass& lclass);

}  // namespace dp2
