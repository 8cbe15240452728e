#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dp2 {

enum class ClaimKind {
  Verified,         // computed outright
  Conditional,      // computed from recorded stability inputs
  KnownDiscrepancy  // documents a misprint; reported, never fails a run
};

const char* to_string(ClaimKind kind);

// One checked statement: what the literature asserts versus what the
// library computes.
struct ClaimReport {
  std::string id;
  std::string description;
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
  std::string reference;  // where the statement comes from, or "derived"
  ClaimKind kind = ClaimKind::Verified;

  bool hard_failure() const { return !pass && kind != ClaimKind::KnownDiscrepancy; }
};

// pass = (expected == computed)
ClaimReport make_claim(std::string id, std::string description, nlohmann::json expected, nlohmann::json computed,
                       std::string reference, ClaimKind kind = ClaimKind::Verified);

// {id, description, expected, computed, pass, paper_ref, kind}
nlohmann::json to_json(const ClaimReport& r);

// "PASS  GAL.H1  expected=[2,2,2,2,2,2] computed=[2,2,2,2,2,2]"; verbose adds
// the description and reference.
std::string to_text(const ClaimReport& r, bool verbose = false);

struct RegisteredClaim {
  std::string id;
  std::function<ClaimReport()> run;
};

}  // namespace dp2
