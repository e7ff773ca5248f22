#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "polynet/architecture.hpp"

namespace polynet::bounds {

// Dimension of the space of all candidate output polynomial vectors,
// d_h * binomial(d_0 + r^(h-1) - 1, r^(h-1)). Throws ResourceLimitError
// when the monomial count exceeds the dense-representation guard.
std::int64_t ambient_dim(const Architecture& arch);

// Parameter count minus the guaranteed scale/permutation fiber dimension,
// capped by the ambient dimension:
// min(d_h + sum_i (d_{i-1}-1) d_i, ambient). Unconditional upper bound on
// the functional-variety dimension; never throws (the ambient side
// saturates instead of overflowing).
std::int64_t naive_bound(const Architecture& arch);

// Supplies (an upper bound on) the variety dimension of a sub-architecture.
using DimOracle = std::function<std::int64_t(const Architecture&)>;

// Splitting the layer chain at k bounds the whole by
// dim(front) + dim(back) - d_k. Values for every split k = 1..h-1.
std::vector<std::int64_t> recursive_bound_splits(const Architecture& arch, const DimOracle& oracle);

// Minimum over all splits; requires h >= 2.
std::int64_t recursive_bound(const Architecture& arch, const DimOracle& oracle);

// Sharpest certified upper bound derivable by closing the parameter-count
// bound under split decompositions: dynamic program over all contiguous
// sub-chains, dp[i][j] = min(naive(d_i..d_j), min_k dp[i][k]+dp[k][j]-d_k).
// Unconditional, so usable for certified non-filling pruning.
std::int64_t composite_bound(const Architecture& arch);

struct AhResult {
    std::int64_t expected = 0;             // min(d0*d1, binomial(d0+r-1, r))
    bool exceptional = false;              // one of the five defective families
    std::optional<std::int64_t> corrected; // true dimension when exceptional
};

// Dimension of the variety of sums of d1 r-th powers of linear forms in d0
// variables (shallow single-output architectures), by the
// Alexander-Hirschowitz classification of the defective cases.
AhResult alexander_hirschowitz(int d0, int d1, int r);

// Sufficient width test: if every layer satisfies
// d_{h-i} >= min(d_h * r^(i*d0), binomial(r^(h-i)+d0-1, r^(h-i))) the
// architecture is guaranteed filling. One-sided: failing the test decides
// nothing. Requires r >= 2 (returns false otherwise).
bool sufficient_filling_widths(const Architecture& arch);

// Internal layer indices i with d_i <= 2*d0 - 2: such a width makes the
// family non-filling for every sufficiently large depth, no matter how wide
// the other layers are. Informational at any fixed depth. Empty unless
// r >= 2 and d0 >= 2.
std::vector<int> bottleneck_layers(const Architecture& arch);

struct BoundReport {
    std::int64_t ambient = 0;
    std::int64_t naive = 0;
    std::optional<std::int64_t> recursive_best;
    std::vector<std::int64_t> recursive_splits;
    std::optional<AhResult> ah; // present for h == 2, d_h == 1
    bool filling_guaranteed = false;
    std::vector<int> bottlenecks;
};

// All closed-form bounds in one record; the oracle (when provided) feeds
// the recursive bound with sub-architecture dimensions.
BoundReport bound_report(const Architecture& arch, const DimOracle* oracle = nullptr);

} // namespace polynet::bounds
