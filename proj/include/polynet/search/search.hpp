#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polynet/architecture.hpp"
#include "polynet/dimension/dimension.hpp"

namespace polynet::search {

// Finite search box for minimal filling width vectors: depth, end widths
// and degree are fixed, internal widths range over [1, cap].
struct SearchSpec {
    int h = 3;
    int d0 = 2;
    int dh = 1;
    int degree = 2;
    std::vector<int> width_cap; // caps for d_1..d_{h-1}; empty = sufficient-width defaults
    std::int64_t budget = 20000; // max dimension-oracle calls
    int trials = 3;              // trials behind every probabilistic non-filling verdict
    std::uint64_t seed = 0;
};

// Per-layer default caps: the sufficient filling widths, so the box always
// contains a filling point and the search space is finite.
std::vector<int> default_width_caps(const SearchSpec& spec);

struct MinimalFillingSet {
    std::vector<std::vector<int>> architectures; // full width vectors, lex sorted
    bool complete = true;                        // false when the budget ran out
    std::int64_t oracle_calls = 0;
    std::vector<int> width_cap;
};

// All coordinatewise-minimal filling width vectors inside the capped box.
// Fillingness is monotone in every width (extra units can carry zero
// weights), so the filling set is an up-set; the search walks its lower
// border: repeatedly pick a maximal box point not dominating any known
// minimal element, test it, and if filling, minimize it coordinate by
// coordinate. When no such point is filling the antichain is complete.
// Every minimal element is a proved-filling witness; every single-coordinate
// decrement is re-verified non-filling (probabilistically, `trials` primes).
MinimalFillingSet find_minimal_filling(const SearchSpec& spec);

struct UnimodalityViolation {
    std::vector<int> widths;
    int index; // position of the dip that rises again
};

// Index of the first rise after a descent, if any (violations of the
// weakly-increasing-then-weakly-decreasing shape).
std::optional<int> unimodality_violation_index(const std::vector<int>& widths);

std::vector<UnimodalityViolation> check_unimodality(
    const std::vector<std::vector<int>>& architectures);

struct TableCell {
    std::int64_t dim = 0;
    std::vector<dim::TrialRecord> trials;
};

struct DimensionTable {
    std::vector<std::vector<int>> widths; // row labels
    std::vector<int> degrees;             // column labels
    std::vector<std::vector<TableCell>> cells;
    std::uint64_t seed = 0;
    int trials = 0;
    dim::Engine method = dim::Engine::FfStacked;
};

// Grid of dimension() results; cell seeds are derived from (seed, row, col)
// so any cell is reproducible in isolation.
DimensionTable dimension_table(const std::vector<std::vector<int>>& widths,
                               const std::vector<int>& degrees, dim::Engine method, int trials,
                               std::uint64_t seed);

// --- embedded reference tables for the reproduction suites ---

struct Table2Row {
    std::vector<int> widths;
    std::vector<std::int64_t> expected; // per degree 2..6
};
const std::vector<Table2Row>& table2_expected();
const std::vector<int>& table2_degrees();

struct Table1Row {
    int depth;
    std::vector<std::vector<int>> alternatives; // full width vectors
    bool extended;                              // only run under --extended
};
const std::vector<Table1Row>& table1_expected();

struct Table2Reproduction {
    DimensionTable table;
    int mismatches = 0;
    bool ok = false;
};
Table2Reproduction reproduce_table2(std::uint64_t seed, int trials, dim::Engine method);

struct Table1RowResult {
    int depth = 0;
    MinimalFillingSet found;
    std::vector<std::vector<int>> expected;
    bool exact = false; // true: sets must match exactly; false: must contain all expected
    bool ok = false;
};

struct Table1Reproduction {
    std::vector<Table1RowResult> rows;
    bool ok = false;
};
Table1Reproduction reproduce_table1(std::uint64_t seed, bool extended, std::int64_t budget,
                                    int trials);

} // namespace polynet::search
