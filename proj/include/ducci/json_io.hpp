#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ducci/game_tuple.hpp"

namespace ducci {

// JSON array of the tuple's entries as exact integer literals.
std::string json_array(const GameTuple& t);

// Parses JSON, keeping integer literals that overflow 64 bits exact: such
// literals are stored as decimal strings instead of lossy doubles.
nlohmann::json parse_json_exact(std::string_view text);

// Reads a nonnegative integer stored either as a JSON number or as a
// decimal string produced by parse_json_exact.
Integer json_integer(const nlohmann::json& v);

GameTuple json_tuple(const nlohmann::json& v);

}  // namespace ducci
