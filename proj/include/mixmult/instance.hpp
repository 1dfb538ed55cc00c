#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mixmult/hilbert.hpp"
#include "mixmult/sequence.hpp"

namespace mixmult {

/// The JSON instance file: variables, J, ideals, module {U, L}, options.
///
/// Ideal entries are monomial strings; an `<key>_exponents` array of
/// exponent vectors may be given instead of any ideal-valued key.
struct InstanceDocument {
  std::vector<std::string> variables;
  std::vector<std::string> j;
  std::vector<std::vector<std::string>> ideals;
  std::vector<std::string> upper{"1"};
  std::vector<std::string> lower;
  /// Optional extras consumed by individual verifiers.
  std::optional<std::vector<std::string>> lower_prime;
  std::optional<std::vector<unsigned>> scaling;
  std::optional<std::vector<std::string>> candidates;
  std::optional<std::size_t> candidate_index;
  std::optional<unsigned> v;

  FitOptions fit;
  WindowOptions window;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

/// Throws InputError on malformed documents.
InstanceDocument parse_instance(const nlohmann::json& doc);
InstanceDocument parse_instance_text(const std::string& text);
InstanceDocument load_instance(const std::string& path);
nlohmann::json serialize_instance(const InstanceDocument& doc);

/// Builds the system; throws InputError when it is not valid.
MultiIdealSystem build_system(const InstanceDocument& doc);

}  // namespace mixmult
