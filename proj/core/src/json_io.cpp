#include "dp2/json_io.hpp"

namespace dp2 {

void to_json(nlohmann::json& j, const DivClass& d) { j = d.coeffs(); }

void to_json(nlohmann::json& j, const ExceptionalCurve& c) { j = {{"name", c.name()}, {"class", c.cls}}; }

void to_json(nlohmann::json& j, const CohomDims& c) { j = {{"h0", c.h0}, {"h1", c.h1}, {"h2", c.h2}}; }

void to_json(nlohmann::json& j, const CohClassVec& v) { j = v.to_string(); }

void to_json(nlohmann::json& j, const ChernChar& x) {
  j = {{"rank", x.rank}, {"c1", x.c1}, {"ch2_doubled", x.ch2_doubled}};
  if (x.integral()) j["c2"] = x.c2();
}

void to_json(nlohmann::json& j, const DimInterval& d) {
  if (d.fixed()) {
    j = d.lo;
  } else {
    j = {{"lo", d.lo}, {"hi", d.hi ? nlohmann::json(*d.hi) : nlohmann::json(nullptr)}};
  }
}

void to_json(nlohmann::json& j, const SplitBundle& b) {
  j = {{"summands", b.summands}, {"slopes", b.slopes()}, {"c1", b.c1()}, {"c2", b.c2()},
       {"equal_slopes", b.equal_slopes()}, {"recorded_stable", b.recorded_stable}};
}

void to_json(nlohmann::json& j, const ExtTable& t) {
  j = nlohmann::json::object();
  j["y"] = t.y ? triple(*t.y) : nlohmann::json(nullptr);
  j["a"] = nlohmann::json(t.a);
  j["complement"] = nlohmann::json(t.complement);
  j["forced_zero"] = t.forced;
}

void to_json(nlohmann::json& j, const OrderModel& m) {
  j = {{"e", m.e}, {"eprime", m.eprime}, {"lclass", m.lclass}, {"f", m.f}};
}

nlohmann::json triple(const CohomDims& c) { return {c.h0, c.h1, c.h2}; }

}  // namespace dp2
