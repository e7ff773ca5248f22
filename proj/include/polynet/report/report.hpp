#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace polynet::report {

using Json = nlohmann::ordered_json;

// FNV-1a over the canonical serialization; stable across runs for identical
// content since ordered_json preserves insertion order.
std::string canonical_hash(const Json& payload);

// Wraps a command payload in the report envelope. The canonical hash covers
// command, config and payload but not the timestamp or wall time, so
// identical (config, seed) runs hash identically.
Json make_envelope(const std::string& command, const Json& config, const Json& payload,
                   double wall_ms);

} // namespace polynet::report
