#include <doctest.h>

#include "polynet/bounds/bounds.hpp"
#include "polynet/dimension/dimension.hpp"
#include "polynet/rng.hpp"
#include "polynet/search/search.hpp"

using namespace polynet;

TEST_CASE("unimodality: peaks, dips and constants") {
    CHECK_FALSE(search::unimodality_violation_index({2, 3, 3, 3, 2, 1}).has_value());
    CHECK_FALSE(search::unimodality_violation_index({4, 4, 4}).has_value());
    CHECK_FALSE(search::unimodality_violation_index({1, 5}).has_value());
    CHECK_FALSE(search::unimodality_violation_index({5, 1}).has_value());
    const auto idx = search::unimodality_violation_index({2, 3, 2, 3});
    REQUIRE(idx.has_value());
    CHECK(*idx == 2);
    const auto v = search::check_unimodality({{2, 3, 3, 2}, {2, 3, 2, 3}});
    REQUIRE(v.size() == 1);
    CHECK(v[0].widths == std::vector<int>{2, 3, 2, 3});
}

TEST_CASE("default width caps come from the sufficient-width test") {
    search::SearchSpec spec;
    spec.h = 4;
    spec.d0 = 2;
    spec.dh = 1;
    spec.degree = 2;
    CHECK(search::default_width_caps(spec) == std::vector<int>{3, 5, 4});
    spec.h = 3;
    CHECK(search::default_width_caps(spec) == std::vector<int>{3, 4});
}

TEST_CASE("minimal filling set for shallow binary quadrics is (2,2,1)") {
    search::SearchSpec spec;
    spec.h = 2;
    spec.d0 = 2;
    spec.dh = 1;
    spec.degree = 2;
    const auto result = search::find_minimal_filling(spec);
    CHECK(result.complete);
    REQUIRE(result.architectures.size() == 1);
    CHECK(result.architectures[0] == std::vector<int>{2, 2, 1});
}

TEST_CASE("minimal filling set at depth 3 is (2,2,2,1)") {
    search::SearchSpec spec;
    spec.h = 3;
    spec.d0 = 2;
    spec.dh = 1;
    spec.degree = 2;
    const auto result = search::find_minimal_filling(spec);
    CHECK(result.complete);
    REQUIRE(result.architectures.size() == 1);
    CHECK(result.architectures[0] == std::vector<int>{2, 2, 2, 1});
}

TEST_CASE("minimal filling set at depth 4 is (2,3,3,2,1)") {
    search::SearchSpec spec;
    spec.h = 4;
    spec.d0 = 2;
    spec.dh = 1;
    spec.degree = 2;
    const auto result = search::find_minimal_filling(spec);
    CHECK(result.complete);
    REQUIRE(result.architectures.size() == 1);
    CHECK(result.architectures[0] == std::vector<int>{2, 3, 3, 2, 1});
}

TEST_CASE("enlarging the search box does not change the minimal set") {
    search::SearchSpec spec;
    spec.h = 3;
    spec.d0 = 2;
    spec.dh = 1;
    spec.degree = 2;
    const auto base = search::find_minimal_filling(spec);
    spec.width_cap = {5, 6};
    const auto bigger = search::find_minimal_filling(spec);
    CHECK(base.architectures == bigger.architectures);
}

TEST_CASE("search results are stable across seeds") {
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
        search::SearchSpec spec;
        spec.h = 3;
        spec.d0 = 2;
        spec.dh = 1;
        spec.degree = 2;
        spec.seed = seed;
        const auto result = search::find_minimal_filling(spec);
        CHECK(result.architectures == std::vector<std::vector<int>>{{2, 2, 2, 1}});
    }
}

TEST_CASE("found minimal sets are antichains of proved-filling points") {
    search::SearchSpec spec;
    spec.h = 4;
    spec.d0 = 2;
    spec.dh = 2;
    spec.degree = 2;
    const auto result = search::find_minimal_filling(spec);
    CHECK(result.complete);
    for (const auto& a : result.architectures) {
        dim::DimConfig cfg;
        cfg.trials = 2;
        const auto est = dim::dimension(Architecture(a, spec.degree), cfg);
        CHECK(est.is_filling == dim::Filling::Proved);
        for (const auto& b : result.architectures) {
            if (a == b) continue;
            bool dominates = true;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] < b[i]) dominates = false;
            CHECK_FALSE(dominates);
        }
    }
}

TEST_CASE("tiny budgets flag the result incomplete") {
    search::SearchSpec spec;
    spec.h = 4;
    spec.d0 = 2;
    spec.dh = 1;
    spec.degree = 2;
    spec.budget = 2;
    const auto result = search::find_minimal_filling(spec);
    CHECK_FALSE(result.complete);
}

TEST_CASE("pruning is sound: naive-bound-rejected candidates are never filling") {
    Rng rng(1234);
    int checked = 0;
    while (checked < 20) {
        std::vector<int> widths;
        const int h = 2 + static_cast<int>(rng.below(3));
        for (int i = 0; i <= h; ++i) widths.push_back(1 + static_cast<int>(rng.below(4)));
        const int r = 2 + static_cast<int>(rng.below(2));
        const Architecture arch(widths, r);
        if (bounds::ambient_dim(arch) > 200) continue;
        if (bounds::naive_bound(arch) >= bounds::ambient_dim(arch)) continue;
        dim::DimConfig cfg;
        cfg.trials = 3;
        cfg.seed = static_cast<std::uint64_t>(checked);
        const auto est = dim::dimension(arch, cfg);
        CHECK(est.is_filling == dim::Filling::ProbablyNot);
        ++checked;
    }
}

TEST_CASE("dimension table reproduces the shallow reference row") {
    const auto table = search::dimension_table({{3, 2, 1}}, {2, 3, 4, 5, 6},
                                               dim::Engine::FfStacked, 2, 0);
    REQUIRE(table.cells.size() == 1);
    const std::vector<std::int64_t> expected = {5, 6, 6, 6, 6};
    for (std::size_t c = 0; c < expected.size(); ++c) CHECK(table.cells[0][c].dim == expected[c]);
    // metadata carries the primes actually used
    for (const auto& cell : table.cells[0])
        for (const auto& t : cell.trials) CHECK(t.prime > (1ULL << 20));
}

TEST_CASE("embedded reference tables have consistent shapes") {
    CHECK(search::table2_degrees().size() == 5);
    for (const auto& row : search::table2_expected())
        CHECK(row.expected.size() == search::table2_degrees().size());
    for (const auto& row : search::table1_expected()) {
        for (const auto& alt : row.alternatives) {
            CHECK(static_cast<int>(alt.size()) == row.depth + 1);
            CHECK(alt.front() == 2);
            CHECK(alt.back() == 1);
            // published minimal vectors are unimodal
            CHECK_FALSE(search::unimodality_violation_index(alt).has_value());
        }
    }
}
