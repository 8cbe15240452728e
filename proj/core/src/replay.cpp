#include "dp2/replay.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "dp2/chern.hpp"
#include "dp2/cohom.hpp"
#include "dp2/error.hpp"
#include "dp2/galois.hpp"
#include "dp2/json_io.hpp"
#include "dp2/les.hpp"
#include "dp2/order.hpp"
#include "dp2/picard.hpp"

namespace dp2 {

namespace {

using nlohmann::json;

const DivClass kH = anticanonical();

DivClass E(int i) { return exceptional_point(i); }
DivClass Lij(int i, int j) { return line_through(i, j); }
DivClass Cij(int i, int j) { return conic_missing(i, j); }

std::vector<std::int64_t> column(const DivClass& d) { return {d.coeffs().begin(), d.coeffs().end()}; }

json entry(const LesSolution& s, std::size_t k) { return s.entries[k]; }

// ---------------------------------------------------------------- picard

void add_picard(std::vector<RegisteredClaim>& out) {
  const char* ref = "Bl_7 P^2: 56 exceptional curves in families E_i, L_ij, C_ij, D_i";
  out.push_back({"PIC.HH", [=] {
    return make_claim("PIC.HH", "H.H = 2 for the pullback of a line under the double cover", 2, intersect(kH, kH),
                      "H.H = 2 and H.E = 1");
  }});
  out.push_back({"PIC.HE", [=] {
    std::set<std::int64_t> degrees;
    for (const auto& c : exceptional_curves()) degrees.insert(intersect(kH, c.cls));
    return make_claim("PIC.HE", "H.E = 1 for every exceptional curve E", json::array({1}), json(degrees),
                      "H.H = 2 and H.E = 1");
  }});
  out.push_back({"PIC.COUNT", [=] {
    return make_claim("PIC.COUNT", "Y contains 56 exceptional curves", 56, exceptional_curves().size(), ref);
  }});
  out.push_back({"PIC.FAMILIES", [=] {
    std::array<int, 4> counts{};
    for (const auto& c : exceptional_curves()) ++counts[static_cast<int>(c.family)];
    return make_claim("PIC.FAMILIES", "family sizes E/L/C/D", json({7, 21, 21, 7}), json(counts), ref);
  }});
  out.push_back({"PIC.K2", [=] {
    return make_claim("PIC.K2", "K.K = 2 with K = -H", 2, self_intersection(canonical_class()), "omega_Y = O(-H)");
  }});
}

// ---------------------------------------------------------------- galois

void add_galois(std::vector<RegisteredClaim>& out) {
  const char* ref_sigma = "sigma(E_i) = D_i, sigma(L_ij) = C_ij";
  const char* ref_h1 = "ker(1+sigma) = <h, e_i>, im(1-sigma) = <2 ker, h+e2+e4+e6>, H^1 = (Z/2)^6";
  const char* ref_rep = "every class of H^1 is [E - E'] for exceptional curves E, E'";

  out.push_back({"SIG.EI", [=] {
    int ok = 0;
    for (int i = 1; i <= 7; ++i) ok += sigma(E(i)) == cubic_double_at(i);
    return make_claim("SIG.EI", "sigma(E_i) = D_i for i = 1..7", 7, ok, ref_sigma);
  }});
  out.push_back({"SIG.LIJ", [=] {
    int ok = 0;
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) ok += sigma(Lij(i, j)) == Cij(i, j);
    return make_claim("SIG.LIJ", "sigma(L_ij) = C_ij for all 21 pairs", 21, ok, ref_sigma);
  }});
  out.push_back({"SIG.L", [=] {
    DivClass expected = 8 * line();
    for (int i = 1; i <= 7; ++i) expected -= 3 * E(i);
    return make_claim("SIG.L", "sigma(L) = 3H - L = 8L - 3 sum E_i", expected, sigma(line()), "derived");
  }});
  out.push_back({"SIGMA.FORMULA-DISCREPANCY", [=] {
    // The printed sigma(L) = L - 3 sum E_i cannot be the image of L under an
    // isometry: it would need square L.L = 1.
    const DivClass printed = printed_sigma_of_line();
    json computed = {{"square", self_intersection(printed)}, {"equals_sigma_L", printed == sigma(line())}};
    json expected = {{"square", self_intersection(line())}, {"equals_sigma_L", true}};
    return make_claim("SIGMA.FORMULA-DISCREPANCY",
                      "printed sigma(L) = L - 3 sum E_i has square -62, so it is not an isometric image of L; "
                      "the isometry fixing H gives 8L - 3 sum E_i",
                      expected, computed, ref_sigma, ClaimKind::KnownDiscrepancy);
  }});
  out.push_back({"GAL.KER.H", [=] {
    return make_claim("GAL.KER.H", "h = L - 3E1 lies in ker(1 + sigma)", true, in_kernel(h_generator()), ref_h1);
  }});
  out.push_back({"GAL.KER.E", [=] {
    int ok = 0;
    for (int i = 1; i <= 6; ++i) ok += in_kernel(e_generator(i));
    return make_claim("GAL.KER.E", "e_i = E_i - E_{i+1} lie in ker(1 + sigma)", 6, ok, ref_h1);
  }});
  out.push_back({"GAL.KER.GEN", [=] {
    // <h, e_1..e_6> equals the computed kernel lattice: each side solves in the other.
    std::vector<std::vector<std::int64_t>> named{column(h_generator())};
    for (int i = 1; i <= 6; ++i) named.push_back(column(e_generator(i)));
    const IntMatrix n = IntMatrix::from_columns(named, kRank);
    std::vector<std::vector<std::int64_t>> kern;
    for (const auto& k : one_plus_sigma_kernel()) kern.push_back(column(k));
    const IntMatrix k = IntMatrix::from_columns(kern, kRank);
    bool same = kern.size() == named.size();
    for (const auto& v : kern) same = same && solve_integer(n, v).has_value();
    for (const auto& v : named) same = same && solve_integer(k, v).has_value();
    json computed = {{"rank", kern.size()}, {"same_lattice", same}};
    return make_claim("GAL.KER.GEN", "ker(1 + sigma) has rank 7 and is generated by h, e_1..e_6",
                      json({{"rank", 7}, {"same_lattice", true}}), computed, ref_h1);
  }});
  out.push_back({"GAL.IMAGE.GEN", [=] {
    std::vector<std::vector<std::int64_t>> gens;
    auto push = [&](const DivClass& d) { gens.push_back(column(d)); };
    push(2 * h_generator());
    for (int i = 1; i <= 6; ++i) push(2 * e_generator(i));
    push(h_generator() + e_generator(2) + e_generator(4) + e_generator(6));
    const IntMatrix g = IntMatrix::from_columns(gens, kRank);
    std::vector<std::vector<std::int64_t>> img;
    for (const auto& d : one_minus_sigma_image()) img.push_back(column(d));
    const IntMatrix im = IntMatrix::from_columns(img, kRank);
    bool same = true;
    for (const auto& v : img) same = same && solve_integer(g, v).has_value();
    for (const auto& v : gens) same = same && solve_integer(im, v).has_value();
    return make_claim("GAL.IMAGE.GEN", "im(1 - sigma) = <2 ker(1 + sigma), h + e2 + e4 + e6>", true, same, ref_h1);
  }});
  out.push_back({"GAL.H1", [=] {
    return make_claim("GAL.H1", "H^1(Z/2, Pic Y) = (Z/2)^6", json({2, 2, 2, 2, 2, 2}), json(h1_galois()), ref_h1);
  }});
  out.push_back({"GAL.ORDER", [=] {
    std::int64_t order = 1;
    for (auto d : h1_galois()) order *= d;
    return make_claim("GAL.ORDER", "|H^1| = 64", 64, order, "derived");
  }});
  out.push_back({"GAL.COB.HE246", [=] {
    const DivClass d = h_generator() + e_generator(2) + e_generator(4) + e_generator(6);
    return make_claim("GAL.COB.HE246", "h + e2 + e4 + e6 is a coboundary", true, is_coboundary(d), ref_h1);
  }});
  out.push_back({"GAL.COB.2H", [=] {
    return make_claim("GAL.COB.2H", "2h is a coboundary", true, is_coboundary(2 * h_generator()), ref_h1);
  }});
  out.push_back({"GAL.COB.E1", [=] {
    return make_claim("GAL.COB.E1", "e1 is not a coboundary", false, is_coboundary(e_generator(1)), ref_h1);
  }});
  out.push_back({"GAL.CHAIN.E1E3", [=] {
    return make_claim("GAL.CHAIN.E1E3", "e1 + e3 = [C67 - E5]", "101000", class_of(Cij(6, 7) - E(5)).to_string(),
                      ref_rep);
  }});
  out.push_back({"GAL.CHAIN.E1E3E5", [=] {
    return make_claim("GAL.CHAIN.E1E3E5", "e1 + e3 + e5 = [C67 - E6]", "101010",
                      class_of(Cij(6, 7) - E(6)).to_string(), ref_rep);
  }});
  out.push_back({"GAL.REPRESENT.E1E3", [=] {
    const auto v = CohClassVec::parse("101000");
    const auto [a, b] = represent_as_difference(v);
    return make_claim("GAL.REPRESENT.E1E3", "e1 + e3 is represented by a difference of exceptional curves",
                      json({{"class", "101000"}, {"has_pair", true}}),
                      json({{"class", class_of(a.cls - b.cls).to_string()}, {"has_pair", true}}), ref_rep);
  }});
  out.push_back({"GAL.SURJ", [=] {
    std::set<unsigned> seen;
    for (const auto& a : exceptional_curves())
      for (const auto& b : exceptional_curves()) seen.insert(class_of(a.cls - b.cls).index());
    return make_claim("GAL.SURJ", "all 64 classes (63 nonzero) occur as [E - E'] over the 56 x 56 pairs", 64,
                      seen.size(), ref_rep);
  }});
  out.push_back({"GAL.DISJOINT", [=] {
    int ok = 0;
    for (unsigned idx = 1; idx < 64; ++idx) {
      const auto v = CohClassVec::from_index(idx);
      const auto [a, b] = disjoint_representative(v);
      ok += intersect(a.cls, b.cls) == 0 && class_of(a.cls - b.cls) == v;
    }
    return make_claim("GAL.DISJOINT", "every nonzero class has a representative E - E' with E.E' = 0", 63, ok,
                      "every ramified order is O + O(E - E')_sigma with E, E' disjoint");
  }});
  out.push_back({"GAL.CANONICAL", [=] {
    const auto v = class_of(E(1) - Cij(1, 2));
    const auto [a, b] = disjoint_representative(v);
    return make_claim("GAL.CANONICAL", "the class of E1 - C12 is represented by the disjoint pair (E1, C12)",
                      json({"E1", "C12"}), json({a.name(), b.name()}), "derived");
  }});
}

// ---------------------------------------------------------------- cohom

void add_cohom(std::vector<RegisteredClaim>& out) {
  const char* ref_split = "Ext^1_A vanishing between split points";
  const char* ref_h2 = "H^2(Y, M) = 0 for A-line bundles";
  const char* ref_ex2 = "Ext^2_Y(I_p O(F), M) = 0";
  const DivClass F = twist_class();

  out.push_back({"COH.CHI.O", [=] {
    return make_claim("COH.CHI.O", "chi(O_Y) = 1", 1, chi_line(DivClass{}), "Euler pairing of A-line bundles");
  }});
  out.push_back({"COH.CHI.E3E1", [=] {
    return make_claim("COH.CHI.E3E1", "chi(O(E3 - E1)) = 0", 0, chi_line(E(3) - E(1)), ref_split);
  }});
  out.push_back({"COH.CHI.L23E1", [=] {
    return make_claim("COH.CHI.L23E1", "chi(O(L23 - E1)) = 0", 0, chi_line(Lij(2, 3) - E(1)), ref_split);
  }});
  out.push_back({"COH.CHI.FH", [=] {
    return make_claim("COH.CHI.FH", "chi(O(F - H)) = (F - H).F/2 + 1 = 0", 0, chi_line(F - kH),
                      "Ext^1_Y(O(H), I_p O(F)) = k");
  }});
  out.push_back({"COH.H0.EEP", [=] {
    return make_claim("COH.H0.EEP", "|E - E'| is empty for (E, E') = (E1, C12)", 0, h0(E(1) - Cij(1, 2)),
                      "A(H) is an exceptional object");
  }});
  out.push_back({"COH.H0.L23E1", [=] {
    return make_claim("COH.H0.L23E1", "|L23 - E1| is empty", 0, h0(Lij(2, 3) - E(1)), ref_split);
  }});
  out.push_back({"COH.H2.F", [=] {
    return make_claim("COH.H2.F", "H^2(O(F)) = H^0(O(-F-H))^* = 0", 0, h2(F), ref_h2);
  }});
  out.push_back({"COH.H1.E3E1", [=] {
    return make_claim("COH.H1.E3E1", "H^1(O(E3 - E1)) = 0", 0, h1(E(3) - E(1)), ref_split);
  }});
  out.push_back({"COH.H1.L", [=] {
    return make_claim("COH.H1.L", "H^1(Y, L) = 0 for L = E1 - C12", 0, h1(E(1) - Cij(1, 2)),
                      "A(H) is an exceptional object");
  }});
  auto witness_claim = [](std::string id, std::string desc, DivClass d, DivClass w, std::int64_t degree,
                          std::string ref) {
    return RegisteredClaim{id, [=] {
      const auto found = noneffective_witness(d);
      json computed = nullptr;
      if (found) computed = {{"witness", to_symbolic_string(found->witness)},
                             {"degree", intersect(found->residual, found->witness)}};
      return make_claim(id, desc, json({{"witness", to_symbolic_string(w)}, {"degree", degree}}), computed, ref);
    }};
  };
  out.push_back(witness_claim("COH.WIT.MFMH", "H.(-F-H) = -4 and H^2 = 2, so |-F-H| is empty", -F - kH, kH, -4,
                              ref_h2));
  out.push_back(witness_claim("COH.WIT.FMH", "a general line l has l.(F-H) = -2 and l^2 = 1, so |F-H| is empty",
                              F - kH, line(), -2, ref_ex2));
  out.push_back(witness_claim("COH.WIT.E3E1",
                              "the pencil of lines through p1 has l.(E3-E1) = -1 and l^2 = 0, so |E3-E1| is empty",
                              E(3) - E(1), line() - E(1), -1, ref_split));

  // Every emptiness statement used along the way.
  out.push_back({"COH.EMPTY", [=] {
    const OrderModel m = OrderModel::canonical();
    const std::vector<std::pair<std::string, DivClass>> table = {
        {"-F-H", -F - kH},
        {"F-H", F - kH},
        {"-F", -F},
        {"E-E'", m.lclass},
        {"E'-E-H", m.eprime.cls - m.e.cls - kH},
        {"-H", -kH},
        {"E1-E3-H", E(1) - E(3) - kH},
        {"E1-L23-H", E(1) - Lij(2, 3) - kH},
        {"E3-E1", E(3) - E(1)},
        {"L23-E1", Lij(2, 3) - E(1)},
    };
    json expected = json::object(), computed = json::object();
    for (const auto& [name, d] : table) {
      expected[name] = 0;
      computed[name] = h0(d);
    }
    return make_claim("COH.EMPTY", "linear systems shown empty along the vanishing arguments", expected, computed,
                      "vanishing arguments for H^2, Ext^2, Ext^1_A and A(H)");
  }});
  out.push_back({"COH.IDEAL.H2", [=] {
    const auto r = cohom_ideal_twist(F);
    return make_claim("COH.IDEAL.H2", "H^2(I_p O(F)) = 0", 0, r.candidates.front().h2, ref_h2);
  }});
  out.push_back({"COH.IDEAL.F", [=] {
    const auto r = cohom_ideal_twist(F, true);
    return make_claim("COH.IDEAL.F", "h^*(I_p O(F)) at a general point = (1, 0, 0)", json({1, 0, 0}),
                      triple(r.value()), "derived");
  }});

  // The two squeezes in the H^2 argument and the three in the Ext^2 argument.
  out.push_back({"H2.SQUEEZE.IPF", [=] {
    // H^1(O_p) -> H^2(I_p O(F)) -> H^2(O(F))
    const auto s = les_solve({{0, std::nullopt, h2(F)}});
    return make_claim("H2.SQUEEZE.IPF", "H^1(O_p) = 0 and H^2(O(F)) = 0 force H^2(I_p O(F)) = 0", 0, entry(s, 1),
                      ref_h2);
  }});
  out.push_back({"H2.SQUEEZE.M", [=] {
    // H^2(O) -> H^2(M) -> H^2(I_p O(F))
    const auto ipf = les_solve({{0, std::nullopt, h2(F)}});
    const auto s = les_solve({{h2(DivClass{}), std::nullopt, *ipf.value(1)}});
    return make_claim("H2.SQUEEZE.M", "H^2(O) = 0 and H^2(I_p O(F)) = 0 force H^2(M) = 0", 0, entry(s, 1), ref_h2);
  }});
  out.push_back({"EX2.SQUEEZE.IPF", [=] {
    // Ext^1(O(F), O_p) -> Ext^2(O(F), I_p O(F)) -> Ext^2(O(F), O(F)) = H^2(O)
    const auto s = les_solve({{0, std::nullopt, h2(F - F)}});
    return make_claim("EX2.SQUEEZE.IPF", "Ext^2(O(F), I_p O(F)) = 0", 0, entry(s, 1), ref_ex2);
  }});
  out.push_back({"EX2.FO", [=] {
    return make_claim("EX2.FO", "Ext^2(O(F), O) = H^2(O(-F)) = H^0(O(F-H))^* = 0", 0, h2(-F), ref_ex2);
  }});
  out.push_back({"EX2.SQUEEZE.M", [=] {
    // Ext^2(O(F), O) -> Ext^2(O(F), M) -> Ext^2(O(F), I_p O(F))
    const auto ipf = les_solve({{0, std::nullopt, h2(F - F)}});
    const auto s = les_solve({{h2(-F), std::nullopt, *ipf.value(1)}});
    return make_claim("EX2.SQUEEZE.M", "Ext^2(O(F), M) = 0", 0, entry(s, 1), ref_ex2);
  }});
  out.push_back({"EX2", [=] {
    // Ext^2(O(F), M) -> Ext^2(I_p O(F), M) -> Ext^3(O_p, M) = 0
    const auto ipf = les_solve({{0, std::nullopt, h2(F - F)}});
    const auto fm = les_solve({{h2(-F), std::nullopt, *ipf.value(1)}});
    const auto s = les_solve({{*fm.value(1), std::nullopt, 0}});
    return make_claim("EX2", "Ext^2_Y(I_p O(F), M) = 0", 0, entry(s, 1), ref_ex2);
  }});
  out.push_back({"EXT0", [=] {
    // Ext^2(I_p0 O(F), M1) -> Ext^2(M0, M1) -> Ext^2(O, M1) = H^2(M1)
    const auto ipf = les_solve({{0, std::nullopt, h2(F - F)}});
    const auto fm = les_solve({{h2(-F), std::nullopt, *ipf.value(1)}});
    const auto ex2 = les_solve({{*fm.value(1), std::nullopt, 0}});
    const auto hm = les_solve({{h2(DivClass{}), std::nullopt, *les_solve({{0, std::nullopt, h2(F)}}).value(1)}});
    const auto s = les_solve({{*ex2.value(1), std::nullopt, *hm.value(1)}});
    return make_claim("EXT0", "Ext^2_Y(M0, M1) = 0 for A-line bundles M0, M1", 0, entry(s, 1),
                      "Ext^2_Y between A-line bundles vanishes");
  }});
}

// ---------------------------------------------------------------- chern

void add_chern(std::vector<RegisteredClaim>& out) {
  const char* ref_chi = "chi(M0, M1) = 0 by Hirzebruch-Riemann-Roch";
  const DivClass F = twist_class();

  out.push_back({"CH.F2", [=] {
    return make_claim("CH.F2", "(E + sigma E')^2 = 0", 0, self_intersection(F), ref_chi);
  }});
  out.push_back({"CH.M1", [=] {
    return make_claim("CH.M1", "ch(M1) = 2 + [E + sigma E'] + [-1]", ChernChar{2, F, -2}, ch_of(2, F, 1), ref_chi);
  }});
  out.push_back({"CH.DUAL", [=] {
    return make_claim("CH.DUAL", "ch(M0^*) = 2 - [E + sigma E'] + [-1]", ChernChar{2, -F, -2}, dual(ch_of(2, F, 1)),
                      ref_chi);
  }});
  out.push_back({"CH.PRODUCT", [=] {
    const ChernChar m = ch_of(2, F, 1);
    return make_claim("CH.PRODUCT", "ch(M0^*) ch(M1) = 4 + [0] + [-4]", ChernChar{4, DivClass{}, -8},
                      mult(dual(m), m), ref_chi);
  }});
  out.push_back({"CH.TODD", [=] {
    return make_claim("CH.TODD", "td(Y) = 1 + [H/2] + [1] integrates to chi(O_Y) = 1", 1,
                      integrate_with_todd(ch_structure_sheaf()), ref_chi);
  }});
  out.push_back({"CH.TODD.PRODUCT", [=] {
    // ch(M0^*) ch(M1) td(Y) = 4 + [2H] + [0]: the degree-1 part is 4 * H/2.
    const ChernChar p = mult(dual(ch_of(2, F, 1)), ch_of(2, F, 1));
    const ToddClass td;
    json computed = {{"rank", p.rank}, {"c1_doubled", 2 * p.c1 + p.rank * td.c1_doubled},
                     {"top", integrate_with_todd(p)}};
    json expected = {{"rank", 4}, {"c1_doubled", 4 * kH}, {"top", 0}};
    return make_claim("CH.TODD.PRODUCT", "ch(M0^*) ch(M1) td(Y) = 4 - [2 omega_Y] + [0]", expected, computed, ref_chi);
  }});
  out.push_back({"CHI.ZERO", [=] {
    const ChernChar m = moduli_chern();
    return make_claim("CHI.ZERO", "chi(M0, M1) = 0 for A-line bundles with c1 = E + sigma E', c2 = 1", 0,
                      euler_pairing(m, m), ref_chi);
  }});
  out.push_back({"EXT0EQ1", [=] {
    // chi = ext0 - ext1 + ext2 with chi = 0 and ext2 = 0 forces ext0 = ext1
    const ChernChar m = moduli_chern();
    const std::int64_t chi = euler_pairing(m, m);
    const std::int64_t ext2 = 0;
    return make_claim("EXT0EQ1", "ext^0_Y(M0, M1) - ext^1_Y(M0, M1) = chi - ext^2 = 0", 0, chi - ext2,
                      "ext^0_Y = ext^1_Y between A-line bundles");
  }});
  out.push_back({"CH.BOG.N0", [=] {
    const OrderModel m = OrderModel::canonical();
    return make_claim("CH.BOG.N0", "c1 = L: c1^2 = -2 and the Bogomolov bound gives c2 >= 0 (minimum 0)",
                      json({{"c1_squared", -2}, {"bound", kMinimalC2Twist0}}),
                      json({{"c1_squared", self_intersection(m.lclass)}, {"bound", bogomolov_min_c2(m.lclass)}}),
                      "minimal c2 is 0 for n = 0 and 1 for n = 1");
  }});
  out.push_back({"CH.BOG.N1", [=] {
    // Bogomolov only gives c2 >= 0 here; the minimum 1 is quoted, not derived.
    const std::int64_t bound = bogomolov_min_c2(F);
    return make_claim("CH.BOG.N1",
                      "c1 = L + H = F: Bogomolov gives c2 >= 0, consistent with the quoted minimum c2 = 1",
                      json({{"bound", 0}, {"quoted_minimum", 1}, {"consistent", true}}),
                      json({{"bound", bound}, {"quoted_minimum", kMinimalC2Twist1},
                            {"consistent", bound <= kMinimalC2Twist1}}),
                      "minimal c2 is 0 for n = 0 and 1 for n = 1");
  }});
  out.push_back({"CH.DISC", [=] {
    return make_claim("CH.DISC", "Delta(2, F, 1) = 4 c2 - c1^2 = 4", 4, discriminant(2, F, 1), "derived");
  }});
  out.push_back({"CK.EXT", [=] {
    const ChernChar m = chern_of_extension(ch_structure_sheaf(), ch_ideal_twist(F));
    return make_claim("CK.EXT", "0 -> O -> M -> I_p O(F) -> 0 gives c1 = E + sigma E', c2 = 1",
                      json({{"rank", 2}, {"c1", F}, {"c2", 1}}), json({{"rank", m.rank}, {"c1", m.c1}, {"c2", m.c2()}}),
                      "A-line bundles are extensions of I_p O(F) by O");
  }});
  out.push_back({"C1.N0", [=] {
    const OrderModel m = OrderModel::canonical();
    const auto n = c1_constraint(m.lclass, m.lclass);
    return make_claim("C1.N0", "c1 = E - E' has the form L + nH with n = 0", 0, n ? json(*n) : json("invalid"),
                      "c1 of an A-line bundle is L + nH");
  }});
  out.push_back({"C1.N1", [=] {
    const OrderModel m = OrderModel::canonical();
    const auto n = c1_constraint(m.f, m.lclass);
    return make_claim("C1.N1", "c1 = E + sigma E' = L + H has n = 1", 1, n ? json(*n) : json("invalid"),
                      "c1 of an A-line bundle is L + nH");
  }});
}

// ---------------------------------------------------------------- order

void add_order(std::vector<RegisteredClaim>& out) {
  const char* ref_case4 = "Ext^1_A vanishing between split points";
  const char* ref_a2 = "Ext_Y = Ext_A + Ext_A(-, Au (x) -), hence Ext^2_A = 0 and ext_A <= ext_Y";
  const char* ref_ram = "split A-line bundles at the six ramification points";

  out.push_back({"MODEL", [=] {
    const OrderModel m = OrderModel::canonical();
    json computed = {{"sigma_eprime", classify(sigma(m.eprime.cls)) ? classify(sigma(m.eprime.cls))->name() : "?"},
                     {"disjoint", intersect(m.e.cls, m.eprime.cls) == 0},
                     {"f_squared", self_intersection(m.f)},
                     {"f_degree", h_degree(m.f)},
                     {"f_is_L_plus_H", m.f == m.lclass + kH}};
    json expected = {{"sigma_eprime", "L12"}, {"disjoint", true}, {"f_squared", 0}, {"f_degree", 2},
                     {"f_is_L_plus_H", true}};
    return make_claim("MODEL", "E = E1, sigma(E') = L12, F = E + sigma E' = E - E' + H", expected, computed,
                      "normalization E = E1, sigma(E') = L12");
  }});
  out.push_back({"RAM.1", [=] {
    const auto s = ramification_split(1);
    return make_claim("RAM.1", "E_c1 = O(E1) + O(L21)", json({"E1", "L12"}),
                      json({classify(s.summands[0])->name(), classify(s.summands[1])->name()}), ref_ram);
  }});
  out.push_back({"RAM.2", [=] {
    const auto s = ramification_split(2);
    return make_claim("RAM.2", "E_c2 = O(L23) + O(E3)", json({"L23", "E3"}),
                      json({classify(s.summands[0])->name(), classify(s.summands[1])->name()}), ref_ram);
  }});
  out.push_back({"RAM.INDUCED", [=] {
    // Each split point is A (x) O(generator): compare with the induced restriction.
    const OrderModel m = OrderModel::canonical();
    int ok = 0;
    for (int i = 1; i <= 6; ++i) {
      auto a = ramification_split(i).summands;
      auto b = m.induced(ramification_generator(i)).summands;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      ok += a == b;
    }
    return make_claim("RAM.INDUCED", "E_ci = A (x) O(gen_i) restricted to Y for i = 1..6", 6, ok, ref_ram);
  }});
  out.push_back({"RAM.CHERN", [=] {
    int ok = 0;
    for (int i = 1; i <= 6; ++i) {
      const auto s = ramification_split(i);
      ok += s.equal_slopes() && s.slopes().front() == 1 && h_degree(s.c1()) == 2 && s.c2() == 1 &&
            s.c1() == twist_class();
    }
    return make_claim("RAM.CHERN", "each split point has slopes (1, 1), c1 = F, c2 = 1", 6, ok, ref_ram);
  }});
  out.push_back({"EXTA1.IV.Y", [=] {
    const auto t = ext_Y_split(SplitBundle{{E(1)}}, SplitBundle{{E(3), Lij(2, 3)}});
    return make_claim("EXTA1.IV.Y", "Ext^1_Y(O(E1), O(E3) + O(L23)) = h^1(E3-E1) + h^1(L23-E1) = 0", 0, t.y->h1,
                      ref_case4);
  }});
  out.push_back({"EXTA1.IV", [=] {
    const auto t = ext_A_induced(ramification_generator(1), ramification_split(2));
    return make_claim("EXTA1.IV", "Ext^*_A(E_c1, E_c2) = Ext^*_Y(O(E1), A (x) O(E3)) = 0", json({0, 0, 0}),
                      json(t.a), ref_case4);
  }});
  out.push_back({"EXTA1.IV.ALL", [=] {
    int zero = 0;
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j)
        if (i != j) {
          const auto t = ext_A_induced(ramification_generator(i), ramification_split(j));
          zero += t.a[0] == 0 && t.a[1] == 0 && t.a[2] == 0;
        }
    return make_claim("EXTA1.IV.ALL", "Ext^*_A(E_ci, E_cj) = 0 for all 30 ordered pairs i != j", 30, zero,
                      ref_case4);
  }});
  out.push_back({"EXTA2", [=] {
    const auto t = decomposition_solve({0, 0, 0}, {});
    return make_claim("EXTA2", "ext_Y = (0,0,0) forces both A-level summands to vanish",
                      json({{"a", {0, 0, 0}}, {"complement", {0, 0, 0}}}),
                      json({{"a", t.a}, {"complement", t.complement}}), ref_a2);
  }});
  out.push_back({"EXTA1.I", [=] {
    // stable, non-isomorphic on Y: Hom_Y = 0, so ext^1_Y = ext^0_Y = 0
    const auto t = decomposition_solve({0, 0, 0}, {});
    return make_claim("EXTA1.I", "t1 != t0, delta(t0): Hom_Y = 0 by stability, so Ext^1_A = 0", 0, json(t.a[1]),
                      "Ext^1_A vanishing, general points", ClaimKind::Conditional);
  }});
  out.push_back({"EXTA1.II", [=] {
    // ext^1_Y(E_t0, E_delta(t0)) = ext^0_Y = 1 (simple); ext^1_A(E_t0, E_t0) = 1 (tangent space of C)
    const auto t = decomposition_solve({1, 1, 0}, {std::nullopt, 1, std::nullopt});
    return make_claim("EXTA1.II", "t1 = delta(t0): ext^1_Y = 1 and ext^1_A(E_t0, E_t0) = 1 leave Ext^1_A(E_t0, E_t1) = 0",
                      0, json(t.complement[1]), "Ext^1_A vanishing, conjugate points", ClaimKind::Conditional);
  }});
  out.push_back({"EXTA1.III", [=] {
    const auto t = decomposition_solve({0, 0, 0}, {});
    return make_claim("EXTA1.III", "t0 split, t1 general: as in the general case, Ext^1_A = 0", 0, json(t.a[1]),
                      "Ext^1_A vanishing, one split point", ClaimKind::Conditional);
  }});
  out.push_back({"KS.SPLIT", [=] {
    // At a split point everything is computable: ext_Y(E_c, E_c) = (2, 2, 0)
    // and ext_A(E_c, E_c) = h(O) + h(L12 - E1) = (1, 1, 0).
    const auto ec = ramification_split(1);
    const auto y = ext_Y_split(ec, ec);
    const auto a = ext_A_induced(ramification_generator(1), ec);
    const auto t = decomposition_solve(*y.y, a.a);
    json computed = {{"ext1_Y", y.y->h1}, {"ext1_A", a.a[1]}, {"complement", t.complement[1]}};
    return make_claim("KS.SPLIT", "ext^1_Y(E_c, E_c) = 2 and ext^1_A(E_c, E_c) = 1 give ext^1_A(E_c, Au (x) E_c) = 1",
                      json({{"ext1_Y", 2}, {"ext1_A", 1}, {"complement", 1}}), computed, ref_a2);
  }});
  out.push_back({"ORTH.I0.DET", [=] {
    return make_claim("ORTH.I0.DET", "src c1 = L + 2H, tgt c1 = L + H: Hom vanishes", true,
                      hom_vanishing_by_det(OrderModel::canonical().lclass + 2 * kH, OrderModel::canonical().lclass + kH),
                      "orthogonality of the moduli family to A(H)");
  }});
  out.push_back({"ORTH.I2.DET", [=] {
    return make_claim("ORTH.I2.DET", "src c1 = L + H, tgt c1 = L: Hom vanishes", true,
                      hom_vanishing_by_det(OrderModel::canonical().lclass + kH, OrderModel::canonical().lclass),
                      "orthogonality of the moduli family to A(H)");
  }});
  for (auto& c : exceptional_claims()) out.push_back(std::move(c));
  for (auto& c : orthogonality_claims()) out.push_back(std::move(c));
}

std::vector<RegisteredClaim> build_registry() {
  std::vector<RegisteredClaim> out;
  add_picard(out);
  add_galois(out);
  add_cohom(out);
  add_chern(out);
  add_order(out);
  std::set<std::string> ids;
  for (const auto& c : out)
    if (!ids.insert(c.id).second) throw InternalInconsistency("duplicate claim id " + c.id);
  return out;
}

ClaimReport run_guarded(const RegisteredClaim& claim) {
  try {
    ClaimReport r = claim.run();
    if (r.id != claim.id) throw InternalInconsistency("claim " + claim.id + " reported as " + r.id);
    return r;
  } catch (const std::exception& ex) {
    return ClaimReport{claim.id, "raised an exception", nullptr, std::string("error: ") + ex.what(), false, "",
                       ClaimKind::Verified};
  }
}

}  // namespace

const std::vector<RegisteredClaim>& claim_registry() {
  static const std::vector<RegisteredClaim> registry = build_registry();
  return registry;
}

std::vector<ClaimReport> run_all(const RunOptions& options) {
  std::vector<const RegisteredClaim*> selected;
  for (const auto& c : claim_registry())
    if (c.id.rfind(options.filter, 0) == 0) selected.push_back(&c);

  std::vector<ClaimReport> reports(selected.size());
  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, selected.size()));
  if (threads == 1) {
    for (std::size_t k = 0; k < selected.size(); ++k) reports[k] = run_guarded(*selected[k]);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < selected.size(); k = next++) reports[k] = run_guarded(*selected[k]);
    });
  pool.clear();  // joins
  return reports;
}

ClaimReport run_one(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return run_guarded(c);
  throw UnknownClaim("no claim with id '" + id + "'");
}

std::size_t hard_failures(const std::vector<ClaimReport>& reports) {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const ClaimReport& r) { return r.hard_failure(); }));
}

}  // namespace dp2
