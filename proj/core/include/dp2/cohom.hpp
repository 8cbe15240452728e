#pragma once

// Cohomology dimensions of line bundles O_Y(D).
//
// h0 is computed by base-locus peeling: a (-1)-curve C with D.C < 0 is a
// fixed component of |D|, so h0(D) = h0(D - C). The recursion ends at a class
// that is negative, trivial, or nef; for nef D on a del Pezzo surface h1 and
// h2 vanish (D - K is ample), so h0 = chi. h2 and h1 follow from Serre
// duality (K = -H) and Riemann-Roch.

#include <cstdint>
#include <optional>
#include <vector>

#include "dp2/picard.hpp"

namespace dp2 {

struct CohomDims {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;

  std::int64_t euler() const { return h0 - h1 + h2; }
  bool is_zero() const { return h0 == 0 && h1 == 0 && h2 == 0; }

  friend CohomDims operator+(const CohomDims& a, const CohomDims& b) {
    return {a.h0 + b.h0, a.h1 + b.h1, a.h2 + b.h2};
  }
  friend bool operator==(const CohomDims&, const CohomDims&) = default;
};

// chi(O(D)) = D.(D + H)/2 + 1
std::int64_t chi_line(const DivClass& d);

// Nef: nonnegative against all 56 exceptional curves and H.
bool is_nef(const DivClass& d);

// An exceptional curve C with D.C < 0, first in enumeration order.
std::optional<ExceptionalCurve> negative_curve(const DivClass& d);

std::int64_t h0(const DivClass& d);
std::int64_t h2(const DivClass& d);
// Throws InternalInconsistency if Riemann-Roch would give a negative value.
std::int64_t h1(const DivClass& d);
CohomDims cohom_dims(const DivClass& d);

// A certificate that |D| is empty: after removing fixed exceptional
// components `peeled`, a class W of nonnegative square represented by an
// irreducible curve has negative degree on what is left.
struct NonEffectiveWitness {
  DivClass witness;
  std::vector<ExceptionalCurve> peeled;
  DivClass residual;  // D minus the peeled curves; residual.witness < 0
};

// Pool of moving classes used as witnesses, in search order: H, L, L - E1..L - E7.
std::vector<DivClass> witness_pool();

std::optional<NonEffectiveWitness> noneffective_witness(const DivClass& d);

// Cohomology of I_p O(D). When p may be a base point of |D| both candidates
// (evaluation map of rank 0, then rank 1) are returned.
struct CohomRange {
  std::vector<CohomDims> candidates;

  bool exact() const { return candidates.size() == 1; }
  const CohomDims& value() const;  // throws std::logic_error unless exact()
};

CohomRange cohom_ideal_twist(const DivClass& d, bool generic_point = true);

}  // namespace dp2
