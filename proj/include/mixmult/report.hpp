#pragma once

#include <json.hpp>

#include "mixmult/hilbert.hpp"
#include "mixmult/primes.hpp"
#include "mixmult/sequence.hpp"
#include "mixmult/verify.hpp"

namespace mixmult {

nlohmann::json to_json(const ExactPolynomial& p);
nlohmann::json to_json(const BhattacharyaResult& r);
nlohmann::json to_json(const LengthTable& t);
nlohmann::json to_json(const FcReport& r);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const VariableContext& ctx, const std::vector<PrimeComponent>& pi);
nlohmann::json to_json(const VariableContext& ctx, const std::vector<MonomialPrime>& primes);

/// Exact integer as a JSON number when it fits in 64 bits, else a string.
nlohmann::json integer_json(const Integer& v);

}  // namespace mixmult
