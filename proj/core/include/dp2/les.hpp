#pragma once

// Dimension chase along an exact sequence 0 -> V_1 -> ... -> V_n -> 0.
//
// Exactness means dim V_i = r_{i-1} + r_i where r_i >= 0 is the rank of the
// map V_i -> V_{i+1}, with r_0 = r_n = 0. Known dimensions are propagated
// through these relations; every unknown dimension comes back as an exact
// integer interval.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dp2 {

struct DimSequence {
  std::vector<std::optional<std::int64_t>> entries;

  // "0,1,?,0"; throws ParseError.
  static DimSequence parse(const std::string& text);
  std::string to_string() const;
};

// [lo, hi]; hi empty means unbounded.
struct DimInterval {
  std::int64_t lo = 0;
  std::optional<std::int64_t> hi;

  bool fixed() const { return hi && *hi == lo; }
  std::string to_string() const;
  friend bool operator==(const DimInterval&, const DimInterval&) = default;
};

enum class LesStatus { Solved, Underdetermined };

struct LesSolution {
  LesStatus status = LesStatus::Solved;
  std::vector<DimInterval> entries;  // one per input entry
  std::vector<DimInterval> ranks;    // r_0 .. r_n

  // Value of entry k if it is forced.
  std::optional<std::int64_t> value(std::size_t k) const;
};

// Throws Infeasible when no rank assignment matches the known entries.
LesSolution les_solve(const DimSequence& seq);

}  // namespace dp2
