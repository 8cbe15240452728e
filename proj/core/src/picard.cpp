#include "dp2/picard.hpp"

#include <sstream>
#include <stdexcept>

namespace dp2 {

namespace {

void check_point(int i) {
  if (i < 1 || i > kNumPoints) throw std::out_of_range("point index must be in 1..7, got " + std::to_string(i));
}

void check_pair(int i, int j) {
  check_point(i);
  check_point(j);
  if (i >= j) throw std::out_of_range("pair indices must satisfy i < j");
}

std::vector<ExceptionalCurve> build_curves() {
  std::vector<ExceptionalCurve> out;
  out.reserve(56);
  for (int i = 1; i <= kNumPoints; ++i) out.push_back(make_curve(CurveFamily::E, i));
  for (int i = 1; i <= kNumPoints; ++i)
    for (int j = i + 1; j <= kNumPoints; ++j) out.push_back(make_curve(CurveFamily::L, i, j));
  for (int i = 1; i <= kNumPoints; ++i)
    for (int j = i + 1; j <= kNumPoints; ++j) out.push_back(make_curve(CurveFamily::C, i, j));
  for (int i = 1; i <= kNumPoints; ++i) out.push_back(make_curve(CurveFamily::D, i));
  return out;
}

}  // namespace

std::int64_t DivClass::mult(int i) const {
  check_point(i);
  return coeffs_[i];
}

DivClass& DivClass::operator+=(const DivClass& o) {
  for (int k = 0; k < kRank; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

DivClass& DivClass::operator-=(const DivClass& o) {
  for (int k = 0; k < kRank; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

DivClass& DivClass::operator*=(std::int64_t k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

std::int64_t intersect(const DivClass& a, const DivClass& b) {
  std::int64_t s = a[0] * b[0];
  for (int k = 1; k < kRank; ++k) s -= a[k] * b[k];
  return s;
}

DivClass line() {
  DivClass d;
  d[0] = 1;
  return d;
}

DivClass exceptional_point(int i) {
  check_point(i);
  DivClass d;
  d[i] = 1;
  return d;
}

DivClass line_through(int i, int j) {
  check_pair(i, j);
  DivClass d = line();
  d[i] = -1;
  d[j] = -1;
  return d;
}

DivClass conic_missing(int i, int j) {
  check_pair(i, j);
  DivClass d;
  d[0] = 2;
  for (int k = 1; k <= kNumPoints; ++k)
    if (k != i && k != j) d[k] = -1;
  return d;
}

DivClass cubic_double_at(int i) {
  check_point(i);
  DivClass d;
  d[0] = 3;
  for (int k = 1; k <= kNumPoints; ++k) d[k] = (k == i) ? -2 : -1;
  return d;
}

DivClass canonical_class() {
  DivClass d;
  d[0] = -3;
  for (int k = 1; k <= kNumPoints; ++k) d[k] = 1;
  return d;
}

DivClass anticanonical() { return -canonical_class(); }

DivClass twist_class() { return exceptional_point(1) + line_through(1, 2); }

std::string ExceptionalCurve::name() const {
  switch (family) {
    case CurveFamily::E: return "E" + std::to_string(i);
    case CurveFamily::L: return "L" + std::to_string(i) + std::to_string(j);
    case CurveFamily::C: return "C" + std::to_string(i) + std::to_string(j);
    case CurveFamily::D: return "D" + std::to_string(i);
  }
  return "?";
}

ExceptionalCurve make_curve(CurveFamily family, int i, int j) {
  switch (family) {
    case CurveFamily::E: return {exceptional_point(i), family, i, 0};
    case CurveFamily::L: return {line_through(i, j), family, i, j};
    case CurveFamily::C: return {conic_missing(i, j), family, i, j};
    case CurveFamily::D: return {cubic_double_at(i), family, i, 0};
  }
  throw std::invalid_argument("unknown curve family");
}

std::span<const ExceptionalCurve> exceptional_curves() {
  static const std::vector<ExceptionalCurve> curves = build_curves();
  return curves;
}

std::optional<std::size_t> curve_index(const DivClass& d) {
  const auto curves = exceptional_curves();
  for (std::size_t k = 0; k < curves.size(); ++k)
    if (curves[k].cls == d) return k;
  return std::nullopt;
}

std::optional<ExceptionalCurve> classify(const DivClass& d) {
  if (self_intersection(d) != -1 || h_degree(d) != 1) return std::nullopt;

  // Invert the closed forms directly from the coordinates.
  int minus_ones = 0, zeros = 0, minus_twos = 0, ones = 0;
  for (int k = 1; k <= kNumPoints; ++k) {
    switch (d[k]) {
      case 1: ++ones; break;
      case 0: ++zeros; break;
      case -1: ++minus_ones; break;
      case -2: ++minus_twos; break;
      default: return std::nullopt;
    }
  }
  auto first_with = [&](std::int64_t v, int after = 0) {
    for (int k = after + 1; k <= kNumPoints; ++k)
      if (d[k] == v) return k;
    return 0;
  };
  switch (d.degree()) {
    case 0:
      if (ones == 1 && zeros == 6) return make_curve(CurveFamily::E, first_with(1));
      break;
    case 1:
      if (minus_ones == 2 && zeros == 5) {
        int i = first_with(-1);
        return make_curve(CurveFamily::L, i, first_with(-1, i));
      }
      break;
    case 2:
      if (minus_ones == 5 && zeros == 2) {
        int i = first_with(0);
        return make_curve(CurveFamily::C, i, first_with(0, i));
      }
      break;
    case 3:
      if (minus_twos == 1 && minus_ones == 6) return make_curve(CurveFamily::D, first_with(-2));
      break;
    default: break;
  }
  // D^2 = -1 and D.H = 1 pin down exactly the four families above.
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const DivClass& d) { return os << to_symbolic_string(d); }

std::string to_vector_string(const DivClass& d) {
  std::ostringstream os;
  for (int k = 0; k < kRank; ++k) os << (k ? "," : "") << d[k];
  return os.str();
}

std::string to_symbolic_string(const DivClass& d) {
  if (d.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < kRank; ++k) {
    const std::int64_t c = d[k];
    if (c == 0) continue;
    const std::string sym = k == 0 ? "L" : "E" + std::to_string(k);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << sym;
    first = false;
  }
  return os.str();
}

}  // namespace dp2
