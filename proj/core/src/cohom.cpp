#include "dp2/cohom.hpp"

#include <stdexcept>
#include <string>

#include "dp2/error.hpp"

namespace dp2 {

std::int64_t chi_line(const DivClass& d) {
  const std::int64_t twice = intersect(d, d + anticanonical());
  // D.(D + H) = D^2 - D.K is even by adjunction
  if (twice % 2 != 0) throw InternalInconsistency("odd D.(D+H) for " + to_symbolic_string(d));
  return twice / 2 + 1;
}

std::optional<ExceptionalCurve> negative_curve(const DivClass& d) {
  for (const auto& c : exceptional_curves())
    if (intersect(d, c.cls) < 0) return c;
  return std::nullopt;
}

bool is_nef(const DivClass& d) { return h_degree(d) >= 0 && !negative_curve(d); }

std::int64_t h0(const DivClass& d) {
  DivClass cur = d;
  while (true) {
    const std::int64_t deg = h_degree(cur);
    if (deg < 0) return 0;
    if (deg == 0) return cur.is_zero() ? 1 : 0;
    // deg drops by C.H = 1 at every peel
    if (auto c = negative_curve(cur)) {
      cur -= c->cls;
      continue;
    }
    return chi_line(cur);
  }
}

std::int64_t h2(const DivClass& d) { return h0(-anticanonical() - d); }

std::int64_t h1(const DivClass& d) { return cohom_dims(d).h1; }

CohomDims cohom_dims(const DivClass& d) {
  CohomDims r;
  r.h0 = h0(d);
  r.h2 = h2(d);
  r.h1 = r.h0 + r.h2 - chi_line(d);
  if (r.h1 < 0)
    throw InternalInconsistency("negative h1 for " + to_symbolic_string(d) + ": peeling and Riemann-Roch disagree");
  return r;
}

std::vector<DivClass> witness_pool() {
  std::vector<DivClass> pool{anticanonical(), line()};
  for (int i = 1; i <= kNumPoints; ++i) pool.push_back(line() - exceptional_point(i));
  return pool;
}

std::optional<NonEffectiveWitness> noneffective_witness(const DivClass& d) {
  static const std::vector<DivClass> pool = witness_pool();
  NonEffectiveWitness w{DivClass{}, {}, d};
  while (true) {
    for (const auto& cand : pool)
      if (intersect(w.residual, cand) < 0) {
        w.witness = cand;
        return w;
      }
    // no moving witness yet: strip a fixed exceptional component and retry
    auto c = negative_curve(w.residual);
    if (!c) return std::nullopt;
    w.peeled.push_back(*c);
    w.residual -= c->cls;
  }
}

const CohomDims& CohomRange::value() const {
  if (!exact()) throw std::logic_error("cohomology of the ideal twist is not determined");
  return candidates.front();
}

CohomRange cohom_ideal_twist(const DivClass& d, bool generic_point) {
  // 0 -> H0(I_p D) -> H0(D) -> k -> H1(I_p D) -> H1(D) -> 0, and H2(I_p D) = H2(D).
  // eps = rank of evaluation at p.
  const CohomDims base = cohom_dims(d);
  auto with_eps = [&](std::int64_t eps) { return CohomDims{base.h0 - eps, base.h1 + 1 - eps, base.h2}; };
  if (base.h0 == 0) return {{with_eps(0)}};
  if (generic_point) return {{with_eps(1)}};
  return {{with_eps(0), with_eps(1)}};
}

}  // namespace dp2
