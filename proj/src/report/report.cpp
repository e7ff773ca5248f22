#include "polynet/report/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include "polynet/version.hpp"

namespace polynet::report {

std::string canonical_hash(const Json& payload) {
    const std::string dump = payload.dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

Json make_envelope(const std::string& command, const Json& config, const Json& payload,
                   double wall_ms) {
    Json canonical;
    canonical["schema_version"] = kSchemaVersion;
    canonical["command"] = command;
    canonical["config"] = config;
    canonical["payload"] = payload;

    Json env;
    env["schema_version"] = kSchemaVersion;
    env["tool"] = "polynet";
    env["version"] = kVersion;
    env["command"] = command;
    env["config"] = config;
    env["timestamp"] = iso_timestamp();
    env["wall_time_ms"] = wall_ms;
    env["canonical_hash"] = canonical_hash(canonical);
    env["payload"] = payload;
    return env;
}

} // namespace polynet::report
