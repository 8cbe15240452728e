#include "dp2/claim.hpp"

#include <sstream>

namespace dp2 {

const char* to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::Verified: return "verified";
    case ClaimKind::Conditional: return "conditional";
    case ClaimKind::KnownDiscrepancy: return "known-discrepancy";
  }
  return "?";
}

ClaimReport make_claim(std::string id, std::string description, nlohmann::json expected, nlohmann::json computed,
                       std::string reference, ClaimKind kind) {
  ClaimReport r{std::move(id), std::move(description), std::move(expected), std::move(computed), false,
                std::move(reference), kind};
  r.pass = r.expected == r.computed;
  return r;
}

nlohmann::json to_json(const ClaimReport& r) {
  return {{"id", r.id},   {"description", r.description}, {"expected", r.expected}, {"computed", r.computed},
          {"pass", r.pass}, {"paper_ref", r.reference},     {"kind", to_string(r.kind)}};
}

std::string to_text(const ClaimReport& r, bool verbose) {
  std::ostringstream os;
  const char* status = r.pass ? "PASS" : (r.kind == ClaimKind::KnownDiscrepancy ? "NOTE" : "FAIL");
  os << status << "  " << r.id << "  expected=" << r.expected.dump() << " computed=" << r.computed.dump();
  if (r.kind != ClaimKind::Verified) os << "  [" << to_string(r.kind) << "]";
  if (verbose) os << "\n      " << r.description << "\n      ref: " << r.reference;
  return os.str();
}

}  // namespace dp2
