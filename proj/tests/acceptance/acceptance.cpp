// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dp2/chern.hpp"
#include "dp2/cohom.hpp"
#include "dp2/error.hpp"
#include "dp2/galois.hpp"
#include "dp2/les.hpp"
#include "dp2/order.hpp"
#include "dp2/picard.hpp"
#include "dp2/replay.hpp"
#include "oracles.hpp"

using namespace dp2;

namespace {

const DivClass H = anticanonical();
const DivClass F = twist_class();
DivClass E(int i) { return exceptional_point(i); }

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Check census() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto curves = exceptional_curves();
  std::array<int, 4> counts{};
  std::set<DivClass> listed;
  for (const auto& e : curves) {
    ++counts[static_cast<int>(e.family)];
    listed.insert(e.cls);
    c.expect(self_intersection(e.cls) == -1 && h_degree(e.cls) == 1, e.name() + " is not a (-1)-curve");
  }
  c.expect(curves.size() == 56, "curve count " + std::to_string(curves.size()));
  c.expect(counts == std::array<int, 4>{7, 21, 21, 7}, "family counts");
  c.expect(listed == oracle::exceptional_scan(), "differs from the lattice scan");
  const double dt = seconds_since(t0);
  c.expect(dt < 1.0, "runtime " + std::to_string(dt) + " s");
  c.detail << (c.ok ? "" : "; ") << "56 curves (7,21,21,7), " << dt << " s";
  return c;
}

Check involution() {
  Check c;
  std::mt19937_64 rng(1);
  for (int n = 0; n < 1000; ++n) {
    const auto a = oracle::random_class(rng, 8), b = oracle::random_class(rng, 8);
    if (sigma(sigma(a)) != a || intersect(sigma(a), sigma(b)) != intersect(a, b)) {
      c.expect(false, "not an isometric involution");
      break;
    }
  }
  c.expect(sigma(H) == H, "sigma(H) != H");
  std::set<std::pair<std::size_t, std::size_t>> orbits;
  for (std::size_t k = 0; k < exceptional_curves().size(); ++k) {
    const auto& e = exceptional_curves()[k];
    const auto img = curve_index(sigma(e.cls));
    c.expect(img && *img != k, e.name() + " not moved to another curve");
    c.expect(e.cls + sigma(e.cls) == H, e.name() + " + sigma != H");
    if (img) orbits.insert({std::min(k, *img), std::max(k, *img)});
  }
  c.expect(orbits.size() == 28, "orbit count " + std::to_string(orbits.size()));
  for (int i = 1; i <= 7; ++i) {
    c.expect(sigma(E(i)) == cubic_double_at(i), "sigma(E" + std::to_string(i) + ") != D");
    for (int j = i + 1; j <= 7; ++j) c.expect(sigma(line_through(i, j)) == conic_missing(i, j), "sigma(Lij) != Cij");
  }
  c.detail << (c.ok ? "" : "; ") << "28 transpositions, E + sigma E = H";
  return c;
}

Check group_cohomology() {
  Check c;
  const auto d = h1_galois();
  std::int64_t order = 1;
  for (auto x : d) order *= x;
  c.expect(d == std::vector<std::int64_t>{2, 2, 2, 2, 2, 2}, "elementary divisors");
  c.expect(order == 64, "order " + std::to_string(order));
  c.expect(in_kernel(h_generator()), "h not in ker(1+sigma)");
  for (int i = 1; i <= 6; ++i) c.expect(in_kernel(e_generator(i)), "e_i not in ker(1+sigma)");
  const DivClass special = h_generator() + e_generator(2) + e_generator(4) + e_generator(6);
  c.expect(is_coboundary(special), "h+e2+e4+e6 not in im(1-sigma)");
  c.expect(oracle::coboundary(special), "oracle disagrees on h+e2+e4+e6");
  c.detail << (c.ok ? "" : "; ") << "H^1 = (Z/2)^6, order 64";
  return c;
}

Check representation() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  std::set<unsigned> seen;
  for (const auto& a : exceptional_curves())
    for (const auto& b : exceptional_curves()) seen.insert(class_of(a.cls - b.cls).index());
  seen.erase(0);
  c.expect(seen.size() == 63, "nonzero classes realized: " + std::to_string(seen.size()));
  const DivClass c67 = conic_missing(6, 7);
  c.expect(class_of(c67 - E(5)) == class_of(e_generator(1) + e_generator(3)), "e1+e3 chain");
  c.expect(class_of(c67 - E(6)) == class_of(e_generator(1) + e_generator(3) + e_generator(5)), "e1+e3+e5 chain");
  for (unsigned idx = 1; idx < 64; ++idx) {
    const auto v = CohClassVec::from_index(idx);
    const auto [a, b] = disjoint_representative(v);
    const auto oc = oracle::h1_class(a.cls - b.cls);
    c.expect(intersect(a.cls, b.cls) == 0 && oc && CohClassVec::from_array(*oc) == v,
             "disjoint representative for " + v.to_string());
  }
  const double dt = seconds_since(t0);
  c.expect(dt < 5.0, "runtime " + std::to_string(dt) + " s");
  c.detail << (c.ok ? "" : "; ") << "63/63 classes, both chains, " << dt << " s";
  return c;
}

Check cohomology() {
  Check c;
  std::mt19937_64 rng(2);
  int witnessed = 0;
  for (int n = 0; n < 500; ++n) {
    const auto d = oracle::random_class(rng, 5);
    const auto dims = cohom_dims(d);
    c.expect(dims.euler() == chi_line(d), "Riemann-Roch fails at " + to_vector_string(d));
    if (noneffective_witness(d)) {
      ++witnessed;
      c.expect(h0(d) == 0, "witness contradicts peeling at " + to_vector_string(d));
    }
  }
  c.expect(cohom_dims(E(3) - E(1)).is_zero(), "h*(E3-E1) != 0");
  c.expect(cohom_dims(line_through(2, 3) - E(1)).is_zero(), "h*(L23-E1) != 0");
  const OrderModel m = OrderModel::canonical();
  const std::map<std::string, DivClass> empty = {
      {"-F-H", -F - H}, {"F-H", F - H}, {"E-E'", m.lclass}, {"E'-E-H", m.eprime.cls - m.e.cls - H},
      {"-H", -H}, {"E1-E3-H", E(1) - E(3) - H}, {"E1-L23-H", E(1) - line_through(2, 3) - H}};
  for (const auto& [name, d] : empty) c.expect(h0(d) == 0, "|" + name + "| not empty");
  c.detail << (c.ok ? "" : "; ") << "500 classes, " << witnessed << " witnessed, vanishing table exact";
  return c;
}

Check pairing() {
  Check c;
  const ChernChar m = ch_of(2, F, 1);
  c.expect(m == ChernChar{2, F, -2}, "ch(M1) != 2 + [F] + [-1]");
  c.expect(mult(dual(m), m) == ChernChar{4, DivClass{}, -8}, "product != (4, 0, -4)");
  c.expect(euler_pairing(m, m) == 0, "chi(M0, M1) != 0");
  c.expect(euler_pairing(ch_structure_sheaf(), ch_structure_sheaf()) == 1, "chi(O, O) != 1");
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    const auto a = oracle::random_class(rng, 5), b = oracle::random_class(rng, 5);
    c.expect(euler_pairing(ch_line(a), ch_line(b)) == chi_line(b - a), "pairing != chi_line");
  }
  c.detail << (c.ok ? "" : "; ") << "chi(M0,M1) = 0, 100 line-bundle pairs";
  return c;
}

Check exact_sequences() {
  Check c;
  const DivClass fmh = F - H;
  const auto l53 = les_solve(DimSequence{{h0(fmh), 1, std::nullopt, h1(fmh)}});
  c.expect(l53.value(2) == 1, "Ext^1(O(H), I_p O(F)) != 1");
  const auto h2 = les_solve(DimSequence{{0, std::nullopt, dp2::h2(F)}});
  c.expect(h2.value(1) == 0, "H^2(I_p O(F)) not forced to 0");
  const auto ex2 = les_solve(DimSequence{{0, std::nullopt, dp2::h2(DivClass{})}});
  c.expect(ex2.value(1) == 0, "Ext^2(O(F), I_p O(F)) not forced to 0");
  std::mt19937_64 rng(4);
  int agree = 0;
  for (int n = 0; n < 200; ++n) {
    const std::size_t len = 1 + rng() % 8;
    std::vector<std::int64_t> r(len + 1, 0);
    for (std::size_t i = 1; i < len; ++i) r[i] = static_cast<std::int64_t>(rng() % 6);
    DimSequence seq;
    int hidden = 0;
    for (std::size_t i = 1; i <= len; ++i) {
      std::int64_t d = r[i - 1] + r[i];
      if (rng() % 8 == 0) d = std::min<std::int64_t>(10, d + 1);
      if (hidden < 4 && rng() % 3 == 0) {
        seq.entries.emplace_back(std::nullopt);
        ++hidden;
      } else {
        seq.entries.emplace_back(d);
      }
    }
    const auto small = oracle::les_enumerate(seq.entries, 12);
    const auto large = oracle::les_enumerate(seq.entries, 20);
    bool ok = true;
    try {
      const auto s = les_solve(seq);
      ok = small.has_value();
      for (std::size_t k = 0; ok && k < len; ++k) {
        const bool unbounded = large->hi[k] > small->hi[k];
        ok = s.entries[k].lo == small->lo[k] && s.entries[k].hi.has_value() == !unbounded &&
             (!s.entries[k].hi || *s.entries[k].hi == small->hi[k]);
      }
    } catch (const Infeasible&) {
      ok = !small.has_value();
    }
    agree += ok;
  }
  c.expect(agree == 200, "oracle agreement " + std::to_string(agree) + "/200");
  c.detail << (c.ok ? "" : "; ") << "L53 = 1, both squeezes forced, " << agree << "/200 sequences";
  return c;
}

Check order_layer() {
  Check c;
  const OrderModel m = OrderModel::canonical();
  c.expect(ext_A_induced(H, m.induced(H)).a == PartialDims{1, 0, 0}, "exceptionality triple");
  for (const auto& r : replay_orthogonality()) c.expect(r.pass, r.id + " failed");
  const std::vector<std::pair<int, int>> pairs = {{1, 2}, {2, 3}, {4, 6}};
  for (const auto& [i, j] : pairs)
    c.expect(ext_A_induced(ramification_generator(i), ramification_split(j)).a == PartialDims{0, 0, 0},
             "case (iv) nonzero for (c" + std::to_string(i) + ", c" + std::to_string(j) + ")");
  const auto ec = ramification_split(1);
  const auto y = ext_Y_split(ec, ec).y;
  const auto a = ext_A_induced(ramification_generator(1), ec).a;
  c.expect(y->h1 == 2 && a[1] == 1, "ext^1_Y = 2 and ext^1_A = 1 inputs");
  const auto t = decomposition_solve(*y, a);
  c.expect(t.complement[1] == 1, "ext^1_A(E_t, Au E_t) != 1");
  c.detail << (c.ok ? "" : "; ") << "triple (1,0,0), orthogonality chain, case (iv) x3, complement 1";
  return c;
}

Check discrepancy() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = run_all({"", 1});
  const double dt = seconds_since(t0);
  int known = 0;
  for (const auto& r : reports)
    if (r.kind == ClaimKind::KnownDiscrepancy) {
      ++known;
      c.expect(r.id == "SIGMA.FORMULA-DISCREPANCY", "unexpected discrepancy " + r.id);
      c.expect(!r.hard_failure(), "discrepancy counts as a failure");
    }
  c.expect(known == 1, std::to_string(known) + " known discrepancies");
  c.expect(hard_failures(reports) == 0, std::to_string(hard_failures(reports)) + " hard failures");
  c.expect(dt < 30.0, "runtime " + std::to_string(dt) + " s");
  c.detail << (c.ok ? "" : "; ") << reports.size() << " claims, 1 known discrepancy, " << dt << " s";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"1 exceptional-curve census", census},
      {"2 involution census", involution},
      {"3 group cohomology", group_cohomology},
      {"4 difference representation", representation},
      {"5 cohomology engine", cohomology},
      {"6 Euler pairing", pairing},
      {"7 exact-sequence solver", exact_sequences},
      {"8 order layer", order_layer},
      {"9 discrepancy documentation", discrepancy},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& ex) {
      c.ok = false;
      c.detail << "exception: " << ex.what();
    }
    failed += !c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << name << "  (" << c.detail.str() << ")\n";
  }
  return failed;
}
