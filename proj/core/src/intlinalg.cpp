#include "dp2/intlinalg.hpp"

#include <stdexcept>
#include <utility>

namespace dp2 {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t abs64(std::int64_t a) { return a < 0 ? checked_mul(a, -1) : a; }

struct Bezout {
  std::int64_t g, x, y;  // x a + y b = g >= 0
};

Bezout ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = checked_add(old_r, -checked_mul(q, r));
    std::swap(old_r, r);
    old_s = checked_add(old_s, -checked_mul(q, s));
    std::swap(old_s, s);
    old_t = checked_add(old_t, -checked_mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// (col_p, col_q) <- (x col_p + y col_q, u col_p + v col_q)
void combine_columns(IntMatrix& m, std::size_t p, std::size_t q, std::int64_t x, std::int64_t y, std::int64_t u,
                     std::int64_t v) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::int64_t a = m(r, p), b = m(r, q);
    m(r, p) = checked_add(checked_mul(x, a), checked_mul(y, b));
    m(r, q) = checked_add(checked_mul(u, a), checked_mul(v, b));
  }
}

void swap_columns(IntMatrix& m, std::size_t p, std::size_t q) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, p), m(r, q));
}

void swap_rows(IntMatrix& m, std::size_t p, std::size_t q) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(q, c));
}

// row_dst += k * row_src
void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) = checked_add(m(dst, c), checked_mul(k, m(src, c)));
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) = checked_add(m(r, dst), checked_mul(k, m(r, src)));
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<std::int64_t>>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<std::int64_t> IntMatrix::column(std::size_t c) const {
  std::vector<std::int64_t> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<std::vector<std::int64_t>> IntMatrix::columns() const {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = checked_add(s, checked_mul(a(i, k), b(k, j)));
      out(i, j) = s;
    }
  return out;
}

std::vector<std::int64_t> multiply(const IntMatrix& a, std::span<const std::int64_t> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<std::int64_t> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] = checked_add(out[i], checked_mul(a(i, k), x[k]));
  return out;
}

ColumnEchelon column_echelon(const IntMatrix& a) {
  ColumnEchelon res{a, IntMatrix::identity(a.cols()), 0, {}};
  IntMatrix& e = res.echelon;
  IntMatrix& u = res.transform;
  std::size_t k = 0;
  for (std::size_t r = 0; r < e.rows() && k < e.cols(); ++r) {
    for (std::size_t c = k + 1; c < e.cols(); ++c) {
      const std::int64_t b = e(r, c);
      if (b == 0) continue;
      const std::int64_t p = e(r, k);
      const Bezout bz = ext_gcd(p, b);
      // [[x, -b/g], [y, p/g]] has determinant 1.
      const std::int64_t nu = -(b / bz.g), nv = p / bz.g;
      combine_columns(e, k, c, bz.x, bz.y, nu, nv);
      combine_columns(u, k, c, bz.x, bz.y, nu, nv);
    }
    if (e(r, k) == 0) continue;
    if (e(r, k) < 0) {
      combine_columns(e, k, k, -1, 0, -1, 0);
      combine_columns(u, k, k, -1, 0, -1, 0);
    }
    res.pivot_rows.push_back(r);
    ++k;
  }
  res.rank = k;
  return res;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const ColumnEchelon ech = column_echelon(a);
  IntMatrix k(a.cols(), a.cols() - ech.rank);
  for (std::size_t c = ech.rank; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.cols(); ++r) k(r, c - ech.rank) = ech.transform(r, c);
  return k;
}

IntMatrix column_space_basis(const IntMatrix& a) {
  const ColumnEchelon ech = column_echelon(a);
  IntMatrix b(a.rows(), ech.rank);
  for (std::size_t c = 0; c < ech.rank; ++c)
    for (std::size_t r = 0; r < a.rows(); ++r) b(r, c) = ech.echelon(r, c);
  return b;
}

std::optional<std::vector<std::int64_t>> solve_integer(const ColumnEchelon& ech, std::span<const std::int64_t> b) {
  const IntMatrix& e = ech.echelon;
  if (b.size() != e.rows()) throw std::invalid_argument("right-hand side length mismatch");
  std::vector<std::int64_t> residual(b.begin(), b.end());
  std::vector<std::int64_t> y(e.cols(), 0);
  for (std::size_t j = 0; j < ech.rank; ++j) {
    const std::size_t p = ech.pivot_rows[j];
    // rows above the pivot are untouched by columns >= j
    for (std::size_t r = (j == 0 ? 0 : ech.pivot_rows[j - 1] + 1); r < p; ++r)
      if (residual[r] != 0) return std::nullopt;
    if (residual[p] % e(p, j) != 0) return std::nullopt;
    y[j] = residual[p] / e(p, j);
    for (std::size_t r = p; r < e.rows(); ++r) residual[r] = checked_add(residual[r], -checked_mul(y[j], e(r, j)));
  }
  for (auto v : residual)
    if (v != 0) return std::nullopt;
  return multiply(ech.transform, y);
}

std::optional<std::vector<std::int64_t>> solve_integer(const IntMatrix& a, std::span<const std::int64_t> b) {
  return solve_integer(column_echelon(a), b);
}

std::vector<std::int64_t> smith_diagonal(IntMatrix a) {
  std::vector<std::int64_t> diag;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    // Move the smallest nonzero entry of the trailing block to (t, t).
    auto place_min = [&]() {
      std::int64_t best = 0;
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j)
          if (a(i, j) != 0 && (best == 0 || abs64(a(i, j)) < best)) {
            best = abs64(a(i, j));
            bi = i;
            bj = j;
          }
      if (best == 0) return false;
      swap_rows(a, t, bi);
      swap_columns(a, t, bj);
      return true;
    };
    if (!place_min()) break;

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        add_row_multiple(a, i, t, -(a(i, t) / a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        add_col_multiple(a, j, t, -(a(t, j) / a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        place_min();
        continue;
      }
      // divisibility of the trailing block by the pivot
      std::size_t bad_row = 0;
      for (std::size_t i = t + 1; i < a.rows() && bad_row == 0; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == 0) break;
      add_row_multiple(a, t, bad_row, 1);
    }
    diag.push_back(abs64(a(t, t)));
  }
  return diag;
}

}  // namespace dp2
