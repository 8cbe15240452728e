#pragma once

// Registry of every checked statement and the batch runner behind
// `dp2 replay`.

#include <cstddef>
#include <string>
#include <vector>

#include "dp2/claim.hpp"

namespace dp2 {

// All claims in their fixed report order. Ids are unique.
const std::vector<RegisteredClaim>& claim_registry();

struct RunOptions {
  std::string filter;       // id prefix; empty runs everything
  std::size_t threads = 1;  // claims are independent; order of the output is fixed
};

std::vector<ClaimReport> run_all(const RunOptions& options = {});

// Throws UnknownClaim.
ClaimReport run_one(const std::string& id);

// Number of reports that fail outside the known-discrepancy tag.
std::size_t hard_failures(const std::vector<ClaimReport>& reports);

}  // namespace dp2
