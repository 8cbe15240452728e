#include "dp2/galois.hpp"

#include <algorithm>
#include <cctype>

#include "dp2/error.hpp"

namespace dp2 {

namespace {

std::vector<std::int64_t> to_vec(const DivClass& d) { return {d.coeffs().begin(), d.coeffs().end()}; }

DivClass from_vec(const std::vector<std::int64_t>& v) {
  DivClass d;
  for (int k = 0; k < kRank; ++k) d[k] = v[k];
  return d;
}

std::vector<DivClass> columns_as_classes(const IntMatrix& m) {
  std::vector<DivClass> out;
  for (const auto& c : m.columns()) out.push_back(from_vec(c));
  return out;
}

using F2Vec = std::vector<std::uint8_t>;

// Inverse of a square matrix over F2 given by its columns; empty if singular.
std::vector<F2Vec> f2_inverse(const std::vector<F2Vec>& cols) {
  const std::size_t n = cols.size();
  // rows of [A | I]
  std::vector<F2Vec> aug(n, F2Vec(2 * n, 0));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) aug[r][c] = cols[c][r] & 1;
  for (std::size_t r = 0; r < n; ++r) aug[r][n + r] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !aug[p][c]) ++p;
    if (p == n) return {};
    std::swap(aug[p], aug[c]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && aug[r][c])
        for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] ^= aug[c][k];
  }
  std::vector<F2Vec> inv(n, F2Vec(n, 0));  // inv[r] = row r
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) inv[r][k] = aug[r][n + k];
  return inv;
}

// Everything class_of needs, computed once from the sigma matrix.
struct H1Structure {
  IntMatrix kernel;  // 8 x 7
  ColumnEchelon kernel_ech;
  IntMatrix image;  // 8 x 7
  ColumnEchelon image_ech;
  IntMatrix image_in_kernel;  // 7 x 7, columns = kernel coordinates of image basis
  std::vector<std::int64_t> elementary_divisors;
  // Rows of the F2 map (kernel coordinates mod 2) -> CohClassVec.
  std::vector<F2Vec> projection;

  H1Structure() {
    kernel = integer_kernel(one_plus_sigma());
    kernel_ech = column_echelon(kernel);
    image = column_space_basis(one_minus_sigma());
    image_ech = column_echelon(image);

    std::vector<std::vector<std::int64_t>> coords;
    for (const auto& col : image.columns()) {
      auto x = solve_integer(kernel_ech, col);
      if (!x) throw InternalInconsistency("im(1 - sigma) is not contained in ker(1 + sigma)");
      coords.push_back(*x);
    }
    image_in_kernel = IntMatrix::from_columns(coords, kernel.cols());

    for (auto d : smith_diagonal(image_in_kernel))
      if (d != 1) elementary_divisors.push_back(d);
    if (image_in_kernel.cols() != kernel.cols() || elementary_divisors.size() != kH1Rank ||
        std::any_of(elementary_divisors.begin(), elementary_divisors.end(), [](auto d) { return d != 2; }))
      throw InternalInconsistency("H^1 is not (Z/2)^6; the F2 reduction below does not apply");

    // Quotient is 2-elementary, so it equals (ker / 2ker) / (im / 2ker).
    // Basis of ker/2ker: the six e_i followed by one image vector nonzero mod 2.
    std::vector<F2Vec> basis;
    for (int i = 1; i <= kH1Rank; ++i) {
      auto x = solve_integer(kernel_ech, to_vec(e_generator(i)));
      if (!x) throw InternalInconsistency("e_i not in ker(1 + sigma)");
      basis.emplace_back(x->begin(), x->end());
    }
    for (const auto& c : coords) {
      F2Vec v(c.size());
      bool nonzero = false;
      for (std::size_t k = 0; k < c.size(); ++k) {
        v[k] = static_cast<std::uint8_t>(c[k] & 1);
        nonzero |= v[k] != 0;
      }
      if (nonzero) {
        basis.push_back(v);
        break;
      }
    }
    auto inv = f2_inverse(basis);
    if (inv.empty()) throw InternalInconsistency("e_1..e_6 do not generate H^1");
    inv.resize(kH1Rank);
    projection = std::move(inv);
  }

  std::vector<std::int64_t> kernel_coords(const DivClass& d) const {
    auto x = solve_integer(kernel_ech, to_vec(d));
    if (!x) throw NotACocycle("class " + to_symbolic_string(d) + " is not in ker(1 + sigma)");
    return *x;
  }
};

const H1Structure& h1_structure() {
  static const H1Structure s;
  return s;
}

// class index of E_a - E_b over all 56 x 56 pairs
const std::vector<unsigned>& difference_classes() {
  static const std::vector<unsigned> table = [] {
    const auto curves = exceptional_curves();
    std::vector<unsigned> t(curves.size() * curves.size());
    for (std::size_t a = 0; a < curves.size(); ++a)
      for (std::size_t b = 0; b < curves.size(); ++b)
        t[a * curves.size() + b] = class_of(curves[a].cls - curves[b].cls).index();
    return t;
  }();
  return table;
}

}  // namespace

CohClassVec CohClassVec::from_array(const std::array<int, kH1Rank>& entries) {
  std::bitset<kH1Rank> b;
  for (int k = 0; k < kH1Rank; ++k) {
    if (entries[k] != 0 && entries[k] != 1) throw ParseError("H^1 coordinates must be 0 or 1");
    b[k] = entries[k] == 1;
  }
  return CohClassVec(b);
}

CohClassVec CohClassVec::parse(const std::string& text) {
  std::array<int, kH1Rank> entries{};
  int n = 0;
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch != '0' && ch != '1') throw ParseError("bad H^1 bit vector '" + text + "'");
    if (n == kH1Rank) throw ParseError("H^1 bit vector needs exactly 6 entries: '" + text + "'");
    entries[n++] = ch - '0';
  }
  if (n != kH1Rank) throw ParseError("H^1 bit vector needs exactly 6 entries: '" + text + "'");
  return from_array(entries);
}

CohClassVec CohClassVec::from_index(unsigned index) { return CohClassVec(std::bitset<kH1Rank>(index)); }

std::string CohClassVec::to_string() const {
  std::string s;
  for (int k = 0; k < kH1Rank; ++k) s.push_back(bits_[k] ? '1' : '0');
  return s;
}

DivClass InvolutionAction::apply(const DivClass& d) const { return from_vec(multiply(matrix, to_vec(d))); }

DivClass sigma(const DivClass& d) { return h_degree(d) * anticanonical() - d; }

const InvolutionAction& sigma_action() {
  static const InvolutionAction action = [] {
    std::vector<std::vector<std::int64_t>> cols;
    for (int k = 0; k < kRank; ++k) {
      DivClass basis;
      basis[k] = 1;
      cols.push_back(to_vec(sigma(basis)));
    }
    return InvolutionAction{IntMatrix::from_columns(cols, kRank)};
  }();
  return action;
}

DivClass printed_sigma_of_line() {
  DivClass d = line();
  for (int i = 1; i <= kNumPoints; ++i) d -= 3 * exceptional_point(i);
  return d;
}

IntMatrix one_plus_sigma() {
  IntMatrix m = sigma_action().matrix;
  for (int k = 0; k < kRank; ++k) m(k, k) += 1;
  return m;
}

IntMatrix one_minus_sigma() {
  IntMatrix m = sigma_action().matrix;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = (r == c ? 1 : 0) - m(r, c);
  return m;
}

std::vector<DivClass> one_plus_sigma_kernel() { return columns_as_classes(h1_structure().kernel); }

std::vector<DivClass> one_minus_sigma_image() { return columns_as_classes(h1_structure().image); }

DivClass h_generator() { return line() - 3 * exceptional_point(1); }

DivClass e_generator(int i) {
  if (i < 1 || i > kH1Rank) throw std::out_of_range("e_i needs i in 1..6");
  return exceptional_point(i) - exceptional_point(i + 1);
}

std::vector<std::int64_t> h1_galois() { return h1_structure().elementary_divisors; }

bool in_kernel(const DivClass& d) { return (d + sigma(d)).is_zero(); }

bool is_coboundary(const DivClass& d) {
  if (!in_kernel(d)) throw NotACocycle("class " + to_symbolic_string(d) + " is not in ker(1 + sigma)");
  return solve_integer(h1_structure().image_ech, to_vec(d)).has_value();
}

CohClassVec class_of(const DivClass& d) {
  const H1Structure& s = h1_structure();
  const auto c = s.kernel_coords(d);
  std::bitset<kH1Rank> bits;
  for (int i = 0; i < kH1Rank; ++i) {
    std::uint8_t acc = 0;
    for (std::size_t k = 0; k < c.size(); ++k) acc ^= s.projection[i][k] & static_cast<std::uint8_t>(c[k] & 1);
    bits[i] = acc != 0;
  }
  return CohClassVec(bits);
}

DivClass lift(const CohClassVec& v) {
  DivClass d;
  for (int i = 1; i <= kH1Rank; ++i)
    if (v.coeff(i)) d += e_generator(i);
  return d;
}

CurvePair represent_as_difference(const CohClassVec& v) {
  const auto curves = exceptional_curves();
  const auto& table = difference_classes();
  for (std::size_t k = 0; k < table.size(); ++k)
    if (table[k] == v.index()) return {curves[k / curves.size()], curves[k % curves.size()]};
  throw InternalInconsistency("class " + v.to_string() + " is not a difference of exceptional curves");
}

CurvePair disjoint_representative(const CohClassVec& v) {
  if (v.is_zero()) throw TrivialClass("the zero class gives an unramified order");
  auto [e, ep] = represent_as_difference(v);
  const std::int64_t meet = intersect(e.cls, ep.cls);
  if (meet == 0) return {e, ep};
  if (meet != 1) throw InternalInconsistency("first representative of a nonzero class has E.E' = " + std::to_string(meet));
  // E - sigma E' differs from E - E' by (1 - sigma) E', and E.sigma(E') = 1 - E.E'.
  auto swapped = classify(sigma(ep.cls));
  if (!swapped) throw InternalInconsistency("sigma does not preserve exceptional curves");
  return {e, *swapped};
}

}  // namespace dp2
