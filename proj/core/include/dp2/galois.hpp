#pragma once

// The Geiser involution sigma on Pic(Y) and the group H^1(Z/2, Pic Y).

#include <array>
#include <bitset>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dp2/intlinalg.hpp"
#include "dp2/picard.hpp"

namespace dp2 {

inline constexpr int kH1Rank = 6;

// Coordinates of an H^1 class in the basis e_i = E_i - E_{i+1}, i = 1..6.
// Bit k holds the coefficient of e_{k+1}.
class CohClassVec {
 public:
  constexpr CohClassVec() = default;
  explicit CohClassVec(std::bitset<kH1Rank> bits) : bits_(bits) {}
  // Entries must be 0 or 1; entries[k] is the coefficient of e_{k+1}.
  static CohClassVec from_array(const std::array<int, kH1Rank>& entries);
  // "101000" or "1,0,1,0,0,0"; throws ParseError.
  static CohClassVec parse(const std::string& text);
  static CohClassVec from_index(unsigned index);  // bit k of index -> e_{k+1}

  bool coeff(int i) const { return bits_[i - 1]; }  // i in 1..6
  unsigned index() const { return static_cast<unsigned>(bits_.to_ulong()); }
  bool is_zero() const { return bits_.none(); }
  const std::bitset<kH1Rank>& bits() const { return bits_; }

  // "101000", e_1 first.
  std::string to_string() const;

  friend CohClassVec operator^(CohClassVec a, CohClassVec b) { return CohClassVec(a.bits_ ^ b.bits_); }
  friend bool operator==(const CohClassVec&, const CohClassVec&) = default;

 private:
  std::bitset<kH1Rank> bits_{};
};

// 8x8 integer matrix acting on DivClass coordinates (column vectors).
struct InvolutionAction {
  IntMatrix matrix;

  DivClass apply(const DivClass& d) const;
};

// sigma(D) = (D.H) H - D.
DivClass sigma(const DivClass& d);

// Matrix of sigma in the (L, E1..E7) basis, built column by column from sigma().
const InvolutionAction& sigma_action();

// What the printed formula sigma(L) = L - 3 sum Ei evaluates to; kept to
// document that it is not an isometry.
DivClass printed_sigma_of_line();

IntMatrix one_plus_sigma();
IntMatrix one_minus_sigma();

// Z-bases of ker(1 + sigma) and im(1 - sigma).
std::vector<DivClass> one_plus_sigma_kernel();
std::vector<DivClass> one_minus_sigma_image();

// The generators named in the literature: h = L - 3E1 and e_i = E_i - E_{i+1}.
DivClass h_generator();
DivClass e_generator(int i);  // i in 1..6

// Elementary divisors of ker(1+sigma)/im(1-sigma), units dropped.
std::vector<std::int64_t> h1_galois();

bool in_kernel(const DivClass& d);

// d must satisfy (1 + sigma) d = 0, otherwise NotACocycle.
bool is_coboundary(const DivClass& d);

// Unique v with d - sum v_i e_i in im(1 - sigma). Throws NotACocycle.
CohClassVec class_of(const DivClass& d);

// sum v_i e_i
DivClass lift(const CohClassVec& v);

using CurvePair = std::pair<ExceptionalCurve, ExceptionalCurve>;

// First (E, E') in enumeration order with class_of(E - E') = v.
CurvePair represent_as_difference(const CohClassVec& v);

// (E, E') with class v and E.E' = 0. Throws TrivialClass for v = 0.
CurvePair disjoint_representative(const CohClassVec& v);

}  // namespace dp2
