#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polynet/architecture.hpp"

namespace polynet::dim {

enum class Engine { FfStacked, FfInterp, Symbolic };

std::string engine_name(Engine e);
std::optional<Engine> engine_from_name(const std::string& name);

enum class Filling { Proved, ProbablyNot };

struct TrialRecord {
    std::uint64_t seed = 0;
    std::uint64_t prime = 0; // 0 = exact rationals
    std::int64_t rank = 0;
};

// Rank-based dimension verdict. A full-rank witness at an exact point is a
// proof of filling; anything less is evidence with probability-1 semantics,
// never a proof of non-filling.
struct DimensionEstimate {
    std::int64_t dim = 0;
    std::int64_t ambient = 0;
    Filling is_filling = Filling::ProbablyNot;
    Engine method = Engine::FfStacked;
    std::vector<TrialRecord> trials;
};

struct DimConfig {
    Engine method = Engine::FfStacked;
    int trials = 3;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> prime; // fixed modulus; default is a fresh prime per trial
    int oversample = 5;                 // extra sample points in stacked mode
    std::int64_t integer_weight_bound = 1000;
    bool early_exit_on_filling = false; // stop trials once ambient rank is witnessed
};

// Runs `trials` independent rank computations at fresh generic weights
// (fresh prime per trial in finite-field mode) and reports the maximum,
// which lower-bounds and generically equals the variety dimension.
DimensionEstimate dimension(const Architecture& arch, const DimConfig& cfg = {});

// Convenience: dimension value only, default finite-field engine.
std::int64_t dimension_value(const Architecture& arch, std::uint64_t seed = 0, int trials = 3);

} // namespace polynet::dim
