#include "dp2/chern.hpp"

#include <stdexcept>

#include "dp2/error.hpp"

namespace dp2 {

std::int64_t ChernChar::c2() const {
  const std::int64_t twice = self_intersection(c1) - ch2_doubled;
  if (twice % 2 != 0) throw HalfIntegerLeak("c2 is not an integer for ch with 2ch_2 = " + std::to_string(ch2_doubled));
  return twice / 2;
}

bool ChernChar::integral() const { return (self_intersection(c1) - ch2_doubled) % 2 == 0; }

std::ostream& operator<<(std::ostream& os, const ChernChar& x) {
  os << "(" << x.rank << ", " << x.c1 << ", ";
  if (x.ch2_doubled % 2 == 0)
    os << x.ch2_doubled / 2;
  else
    os << x.ch2_doubled << "/2";
  return os << ")";
}

ChernChar ch_of(std::int64_t rank, const DivClass& c1, std::int64_t c2) {
  if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
  return {rank, c1, self_intersection(c1) - 2 * c2};
}

ChernChar ch_line(const DivClass& d) { return ch_of(1, d, 0); }

ChernChar ch_structure_sheaf() { return ch_line(DivClass{}); }

ChernChar ch_point() { return {0, DivClass{}, 2}; }

ChernChar ch_ideal_twist(const DivClass& d) { return ch_line(d) - ch_point(); }

ChernChar dual(const ChernChar& x) { return {x.rank, -x.c1, x.ch2_doubled}; }

ChernChar mult(const ChernChar& x, const ChernChar& y) {
  return {x.rank * y.rank, x.rank * y.c1 + y.rank * x.c1,
          x.rank * y.ch2_doubled + y.rank * x.ch2_doubled + 2 * intersect(x.c1, y.c1)};
}

ChernChar operator+(const ChernChar& x, const ChernChar& y) {
  return {x.rank + y.rank, x.c1 + y.c1, x.ch2_doubled + y.ch2_doubled};
}

ChernChar operator-(const ChernChar& x, const ChernChar& y) {
  return {x.rank - y.rank, x.c1 - y.c1, x.ch2_doubled - y.ch2_doubled};
}

std::int64_t integrate_with_todd(const ChernChar& x) {
  const ToddClass td;
  // ch_2 + c1 . (H/2) + rank * td_2
  const std::int64_t twice = x.ch2_doubled + intersect(x.c1, td.c1_doubled) + 2 * x.rank * td.td2;
  if (twice % 2 != 0) throw HalfIntegerLeak("HRR integral is a half-integer");
  return twice / 2;
}

std::int64_t euler_pairing(const ChernChar& x, const ChernChar& y) { return integrate_with_todd(mult(dual(x), y)); }

std::int64_t discriminant(std::int64_t rank, const DivClass& c1, std::int64_t c2) {
  if (rank != 2) throw std::invalid_argument("discriminant is defined here for rank 2 only");
  return 4 * c2 - self_intersection(c1);
}

std::int64_t bogomolov_min_c2(const DivClass& c1) {
  const std::int64_t sq = self_intersection(c1);
  // ceil(sq / 4) for either sign
  return sq >= 0 ? (sq + 3) / 4 : -((-sq) / 4);
}

ChernChar chern_of_extension(const ChernChar& sub, const ChernChar& quot) { return sub + quot; }

std::optional<std::int64_t> c1_constraint(const DivClass& c1, const DivClass& lclass) {
  const DivClass rest = c1 - lclass;
  const std::int64_t deg = h_degree(rest);
  if (deg % 2 != 0) return std::nullopt;
  const std::int64_t n = deg / 2;
  if (rest != n * anticanonical()) return std::nullopt;
  return n;
}

}  // namespace dp2
