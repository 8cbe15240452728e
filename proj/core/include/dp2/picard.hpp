#pragma once

// Picard lattice of the degree-2 del Pezzo surface Y = Bl_7(P^2).
//
// Classes are stored in the blow-up basis (L, E1, ..., E7), where L is the
// pullback of a line and Ei are the exceptional divisors over the seven
// points. The intersection form is diag(+1, -1, ..., -1).

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace dp2 {

inline constexpr int kNumPoints = 7;
inline constexpr int kRank = kNumPoints + 1;

class DivClass {
 public:
  using Coeffs = std::array<std::int64_t, kRank>;

  constexpr DivClass() = default;
  constexpr explicit DivClass(const Coeffs& c) : coeffs_(c) {}
  constexpr DivClass(std::int64_t degree, const std::array<std::int64_t, kNumPoints>& mults) {
    coeffs_[0] = degree;
    for (int i = 0; i < kNumPoints; ++i) coeffs_[i + 1] = mults[i];
  }

  // Coefficient of L.
  constexpr std::int64_t degree() const { return coeffs_[0]; }
  // Coefficient of Ei, 1 <= i <= 7.
  std::int64_t mult(int i) const;

  constexpr const Coeffs& coeffs() const { return coeffs_; }
  constexpr std::int64_t operator[](std::size_t k) const { return coeffs_[k]; }
  constexpr std::int64_t& operator[](std::size_t k) { return coeffs_[k]; }

  constexpr bool is_zero() const {
    for (auto c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  DivClass& operator+=(const DivClass& o);
  DivClass& operator-=(const DivClass& o);
  DivClass& operator*=(std::int64_t k);

  friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
  friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
  friend DivClass operator-(DivClass a) { return a *= -1; }
  friend DivClass operator*(std::int64_t k, DivClass a) { return a *= k; }
  friend DivClass operator*(DivClass a, std::int64_t k) { return a *= k; }

  friend constexpr auto operator<=>(const DivClass&, const DivClass&) = default;

 private:
  Coeffs coeffs_{};
};

// d_a d_b - sum m_{a,i} m_{b,i}
std::int64_t intersect(const DivClass& a, const DivClass& b);

inline std::int64_t self_intersection(const DivClass& a) { return intersect(a, a); }

// Distinguished classes.
DivClass line();                          // L
DivClass exceptional_point(int i);        // Ei
DivClass line_through(int i, int j);      // L - Ei - Ej
DivClass conic_missing(int i, int j);     // 2L - sum_{k != i,j} Ek
DivClass cubic_double_at(int i);          // 3L - 2Ei - sum_{k != i} Ek
DivClass canonical_class();               // K = -3L + sum Ei
DivClass anticanonical();                 // H = -K
DivClass twist_class();                   // F = E1 + L12

// Degree against H, the pullback of a line under the double cover.
inline std::int64_t h_degree(const DivClass& d) { return intersect(d, anticanonical()); }

enum class CurveFamily { E, L, C, D };

struct ExceptionalCurve {
  DivClass cls;
  CurveFamily family = CurveFamily::E;
  int i = 0;
  int j = 0;  // 0 for the E and D families

  // "E3", "L12", "C67", "D1".
  std::string name() const;

  friend bool operator==(const ExceptionalCurve& a, const ExceptionalCurve& b) {
    return a.cls == b.cls && a.family == b.family && a.i == b.i && a.j == b.j;
  }
};

ExceptionalCurve make_curve(CurveFamily family, int i, int j = 0);

// All 56 classes with D^2 = -1 and D.H = 1, ordered E_i, L_ij, C_ij, D_i and
// lexicographically inside each family. Computed once.
std::span<const ExceptionalCurve> exceptional_curves();

// Family of d if it is one of the 56 exceptional classes.
std::optional<ExceptionalCurve> classify(const DivClass& d);

// Position of an exceptional class in exceptional_curves().
std::optional<std::size_t> curve_index(const DivClass& d);

std::ostream& operator<<(std::ostream& os, const DivClass& d);

// "d,m1,...,m7".
std::string to_vector_string(const DivClass& d);

// Human readable combination of L and Ei: "3L - 2E1 - E2".
std::string to_symbolic_string(const DivClass& d);

}  // namespace dp2
