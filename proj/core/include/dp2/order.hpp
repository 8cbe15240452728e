#pragma once

// The cyclic order A = O_Y + O_Y(E - E')_sigma, seen numerically.
//
// Nothing here multiplies sections. Every A-level dimension is reduced to
// line-bundle cohomology on Y through three identities:
//   * adjunction for induced modules:
//       Ext_A(A (x) O(d), N) = Ext_Y(O(d), N|_Y)
//   * the graded decomposition of B = End_Y(A) = A + Au:
//       Ext_Y(M, N) = Ext_A(M, N) + Ext_A(M, Au (x) N)
//   * an injective map between A-line bundles forces c1(tgt) - c1(src)
//     to be effective.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dp2/chern.hpp"
#include "dp2/claim.hpp"
#include "dp2/cohom.hpp"
#include "dp2/picard.hpp"

namespace dp2 {

// A rank-r bundle on Y that is a direct sum of line bundles.
struct SplitBundle {
  std::vector<DivClass> summands;
  // Recorded input, never computed: stability of the A-line bundle this
  // restriction came from.
  bool recorded_stable = false;

  std::vector<std::int64_t> slopes() const;  // summand . H
  // Equal slopes: strictly semistable when there is more than one summand.
  bool equal_slopes() const;
  DivClass c1() const;
  std::int64_t c2() const;  // sum over pairs D_a . D_b
  ChernChar ch() const;
};

struct OrderModel {
  ExceptionalCurve e;
  ExceptionalCurve eprime;
  DivClass lclass;  // E - E'
  DivClass f;       // E + sigma(E') = L + H

  // (E1, C12), so that sigma(E') = L12.
  static OrderModel canonical();
  // Throws InvalidModel unless E.E' = 0 and [E - E'] != 0 in H^1.
  static OrderModel from_pair(const ExceptionalCurve& e, const ExceptionalCurve& eprime);

  // Restriction to Y of A (x) O(d): O(d) + O(L + sigma d).
  SplitBundle induced(const DivClass& d) const;
  ChernChar ch_order() const { return induced(DivClass{}).ch(); }
};

using PartialDims = std::array<std::optional<std::int64_t>, 3>;

struct ExtTable {
  std::optional<CohomDims> y;  // Ext_Y
  PartialDims a{};             // Ext_A(M, N)
  PartialDims complement{};    // Ext_A(M, Au (x) N)
  std::array<bool, 3> forced{};  // entry i was forced to zero by ext_Y^i = 0
};

// ext^i_Y(M, N) = sum_{a, b} h^i(N_b - M_a)
ExtTable ext_Y_split(const SplitBundle& m, const SplitBundle& n);

// ext^i_A(A (x) O(d), N) = sum_b h^i(N_b - d). N must be the restriction of an
// A-module; this is recorded, not checked.
ExtTable ext_A_induced(const DivClass& d, const SplitBundle& n);

// Fills the other summand of Ext_Y = Ext_A(M, N) + Ext_A(M, Au (x) N) from a
// known one. Throws Infeasible if a known entry exceeds ext_Y.
ExtTable decomposition_solve(const CohomDims& ext_y, const PartialDims& known_a);

// True when Hom_A(src, tgt) must vanish: every nonzero map of A-line bundles
// is injective, so c1(tgt) - c1(src) would be effective.
bool hom_vanishing_by_det(const DivClass& c1_src, const DivClass& c1_tgt);

// ch(x) * ch(O(-H)), the numerical effect of omega_A = A (x) O(-H).
ChernChar serre_twist(const ChernChar& x);

// Restriction to Y of the A-line bundle at the i-th ramification point of
// the moduli curve (canonical model): {E1, L12} for i = 1, {L2(i+1), E(i+1)}
// for i = 2..6.
SplitBundle ramification_split(int i);
// The class d with ramification_split(i) = A (x) O(d) restricted to Y.
DivClass ramification_generator(int i);

// Chern data shared by every A-line bundle on the moduli curve: (2, F, 1).
ChernChar moduli_chern(const OrderModel& model = OrderModel::canonical());

std::vector<RegisteredClaim> orthogonality_claims();
std::vector<RegisteredClaim> exceptional_claims();

std::vector<ClaimReport> replay_orthogonality();
std::vector<ClaimReport> replay_exceptional();

}  // namespace dp2
