#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixmult/instance.hpp"
#include "mixmult/verify.hpp"

namespace mixmult {

/// Extras for one verifier run; empty fields fall back to the instance file.
struct VerifyRequest {
  std::string theorem;  // additivity | scaling | exactseq | recursion | chain
  std::vector<unsigned> u;
  std::vector<std::string> candidates;
  std::optional<unsigned> v;
  std::vector<std::string> lower_prime;
};

/// `x*y` or `2:x*y`; the prefix is the 1-based ideal index.
std::vector<ElementCandidate> parse_candidates(const VariableContext& ctx, const std::vector<std::string>& specs,
                                               std::size_t default_index = 1);

/// Builds the system and runs the requested verifier. Throws InputError for
/// unknown theorems or missing extras.
VerificationReport verify_document(const InstanceDocument& doc, const VerifyRequest& request);

}  // namespace mixmult
