#pragma once

// Small dense integer matrices and the lattice algorithms needed for
// H^1(Z/2, Pic Y): column echelon form with a unimodular transform,
// integer kernels, exact integer solving, and Smith normal form.
//
// All arithmetic is checked; std::overflow_error is thrown instead of
// wrapping.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dp2 {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  // Builds a matrix whose columns are the given vectors (all of equal length).
  static IntMatrix from_columns(const std::vector<std::vector<std::int64_t>>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::int64_t> column(std::size_t c) const;
  std::vector<std::vector<std::int64_t>> columns() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::vector<std::int64_t> multiply(const IntMatrix& a, std::span<const std::int64_t> x);

// A * transform = echelon, transform unimodular. The first `rank` columns of
// `echelon` are nonzero with strictly increasing pivot rows and positive
// pivots; the remaining columns are zero.
struct ColumnEchelon {
  IntMatrix echelon;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

ColumnEchelon column_echelon(const IntMatrix& a);

// Columns form a Z-basis of {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

// Columns form a Z-basis of the lattice spanned by the columns of A.
IntMatrix column_space_basis(const IntMatrix& a);

// Integer solution of A x = b, if one exists. When A has dependent columns
// an arbitrary solution is returned.
std::optional<std::vector<std::int64_t>> solve_integer(const IntMatrix& a, std::span<const std::int64_t> b);
std::optional<std::vector<std::int64_t>> solve_integer(const ColumnEchelon& ech, std::span<const std::int64_t> b);

// Diagonal of the Smith normal form, nonzero entries only, positive and
// each dividing the next.
std::vector<std::int64_t> smith_diagonal(IntMatrix a);

}  // namespace dp2
