#pragma once

// nlohmann::json conversions for the library's value types.

#include <optional>

#include <nlohmann/json.hpp>

#include "dp2/chern.hpp"
#include "dp2/cohom.hpp"
#include "dp2/galois.hpp"
#include "dp2/les.hpp"
#include "dp2/order.hpp"
#include "dp2/picard.hpp"

// std::optional maps to null when empty.
namespace nlohmann {
template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v)
      j = *v;
    else
      j = nullptr;
  }
};
}  // namespace nlohmann

namespace dp2 {

void to_json(nlohmann::json& j, const DivClass& d);          // [d, m1, ..., m7]
void to_json(nlohmann::json& j, const ExceptionalCurve& c);  // {"name", "class"}
void to_json(nlohmann::json& j, const CohomDims& c);         // {"h0", "h1", "h2"}
void to_json(nlohmann::json& j, const CohClassVec& v);       // "101000"
void to_json(nlohmann::json& j, const ChernChar& x);         // {"rank", "c1", "ch2_doubled", "c2"}
void to_json(nlohmann::json& j, const DimInterval& d);       // n, or {"lo", "hi"}
void to_json(nlohmann::json& j, const SplitBundle& b);
void to_json(nlohmann::json& j, const ExtTable& t);
void to_json(nlohmann::json& j, const OrderModel& m);

// [h0, h1, h2] as a plain triple, the form used inside claim reports.
nlohmann::json triple(const CohomDims& c);

}  // namespace dp2
