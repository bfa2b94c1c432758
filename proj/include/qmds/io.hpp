#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "qmds/code.hpp"
#include "qmds/entropy.hpp"

namespace qmds {

using Json = nlohmann::ordered_json;

/// {"q": .., "n": .., "k": .., "d": .., "alphas": [..]}
Json code_to_json(const QuantumMdsCode& code);
/// Accepts the descriptor above; "alphas" may be omitted for the default
/// points.  Malformed or invalid descriptors throw InvalidCode.
QuantumMdsCode code_from_json(const Json& descriptor);

/// {"code": <descriptor>, "entries": [{"subsystem": [...], "size", "entropy",
/// "expected", "match"}, ...]}.  Extended (split-R) entries follow the
/// atomic ones with null "expected" and "match".
Json profile_to_json(const EntropyProfile& profile);

/// "size,entropy" header, then the distinct (size, entropy) pairs in
/// ascending order.
std::string profile_to_csv(const EntropyProfile& profile);

/// Closed-form curve: rows (s, min(s, 2(k+d-1)-s)) for s = 0..2(k+d-1).
std::string figure_csv(std::size_t k, std::size_t d);

}  // namespace qmds
