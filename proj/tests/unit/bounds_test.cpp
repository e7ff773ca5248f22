#include <doctest.h>

#include "polynet/bounds/bounds.hpp"
#include "polynet/dimension/dimension.hpp"

using namespace polynet;

namespace {

bounds::DimOracle oracle() {
    return [](const Architecture& a) { return dim::dimension_value(a, 5, 2); };
}

} // namespace

TEST_CASE("ambient dimension formula") {
    CHECK(bounds::ambient_dim(Architecture({2, 2, 3}, 2)) == 9);
    CHECK(bounds::ambient_dim(Architecture({2, 2, 2, 1}, 2)) == 5);
    CHECK(bounds::ambient_dim(Architecture({3, 5, 4}, 1)) == 12); // r=1: d_h * d_0
    CHECK(bounds::ambient_dim(Architecture({2, 3, 2}, 3)) == 8); // degree r^(h-1) = 3, N = 4
    CHECK_THROWS_AS(bounds::ambient_dim(Architecture({3, 2, 2}, 100000)), ResourceLimitError);
}

TEST_CASE("naive bound formula and its cap") {
    CHECK(bounds::naive_bound(Architecture({2, 3, 2}, 9)) == 9);     // parameter side
    CHECK(bounds::naive_bound(Architecture({3, 2, 1}, 2)) == 6);     // min(6, 6)
    CHECK(bounds::naive_bound(Architecture({4, 3, 6}, 1)) == 24);    // params 27 capped by ambient 24
    CHECK(bounds::naive_bound(Architecture({3, 4}, 5)) == 12);       // h=1: d_1 d_0
    CHECK(bounds::naive_bound(Architecture({2, 2, 2, 1}, 2)) == 5);  // capped by ambient 5
    // no throw even when the ambient side would blow the basis guard
    CHECK(bounds::naive_bound(Architecture({3, 2, 2}, 100000)) == 2 + 2 * 2 + 1 * 2);
}

TEST_CASE("recursive bound: h=2 split reduces to the parameter-side bound") {
    // with exact sub-dimensions dim(d0,d1) = d1 d0 and dim(d1,d2) = d2 d1
    const Architecture arch({3, 4, 2}, 3);
    const auto splits = bounds::recursive_bound_splits(arch, oracle());
    REQUIRE(splits.size() == 1);
    CHECK(splits[0] == 3 * 4 + 4 * 2 - 4);
}

TEST_CASE("recursive bound equals the true dimension for (2,3,2,3) r=2 at k=2") {
    const Architecture arch({2, 3, 2, 3}, 2);
    const auto splits = bounds::recursive_bound_splits(arch, oracle());
    REQUIRE(splits.size() == 2);
    CHECK(splits[1] == 6 + 6 - 2); // dim(2,3,2)=6 and dim(2,3)=6
    CHECK(bounds::recursive_bound(arch, oracle()) <= splits[1]);
}

TEST_CASE("alexander-hirschowitz: expected values and the exceptional families") {
    const auto a = bounds::alexander_hirschowitz(3, 2, 2);
    CHECK(a.expected == 6);
    CHECK(a.exceptional);
    CHECK(a.corrected == 5);

    const auto b = bounds::alexander_hirschowitz(3, 2, 3);
    CHECK_FALSE(b.exceptional);
    CHECK(b.expected == 6);

    const auto c = bounds::alexander_hirschowitz(3, 5, 4);
    CHECK(c.exceptional);
    CHECK(c.expected == 15);
    CHECK(c.corrected == 14);

    CHECK(bounds::alexander_hirschowitz(5, 7, 3).exceptional);
    CHECK(bounds::alexander_hirschowitz(4, 9, 4).exceptional);
    CHECK(bounds::alexander_hirschowitz(5, 15, 4).exceptional);
    CHECK_FALSE(bounds::alexander_hirschowitz(5, 7, 4).exceptional);
    CHECK_FALSE(bounds::alexander_hirschowitz(3, 3, 2).exceptional); // d1 > d0-1
    CHECK_FALSE(bounds::alexander_hirschowitz(3, 1, 2).exceptional); // d1 < 2

    // r=2 family correction: d0*d1 - C(d1,2)
    CHECK(bounds::alexander_hirschowitz(4, 3, 2).corrected == 12 - 3);
    CHECK(bounds::alexander_hirschowitz(5, 4, 2).corrected == 20 - 6);
}

TEST_CASE("sufficient width test accepts known filling widths and is one-sided") {
    CHECK(bounds::sufficient_filling_widths(Architecture({2, 3, 4, 1}, 2)));
    // filling architecture that the test does not certify (sufficiency only)
    CHECK_FALSE(bounds::sufficient_filling_widths(Architecture({2, 2, 2, 1}, 2)));
    // shallow: d_1 >= binom(r+d0-1, r) spans the quadrics
    CHECK(bounds::sufficient_filling_widths(Architecture({2, 3, 1}, 2)));
    CHECK_FALSE(bounds::sufficient_filling_widths(Architecture({2, 2, 1}, 2)));
    CHECK_FALSE(bounds::sufficient_filling_widths(Architecture({2, 3, 2}, 1)));
}

TEST_CASE("bottleneck layers: threshold is 2*d0 - 2") {
    const auto flags = bounds::bottleneck_layers(Architecture({2, 2, 2, 2, 1}, 2));
    CHECK(flags == std::vector<int>{1, 2, 3});
    CHECK(bounds::bottleneck_layers(Architecture({3, 5, 5, 4}, 2)).empty());
    const auto tight = bounds::bottleneck_layers(Architecture({3, 4, 5, 2}, 2));
    CHECK(tight == std::vector<int>{1}); // d_1 = 4 = 2*3-2
    CHECK(bounds::bottleneck_layers(Architecture({2, 2, 2}, 1)).empty());
}

TEST_CASE("bound report aggregates all pieces") {
    const Architecture arch({3, 2, 1}, 2);
    const auto o = oracle();
    const auto rep = bounds::bound_report(arch, &o);
    CHECK(rep.ambient == 6);
    CHECK(rep.naive == 6);
    REQUIRE(rep.ah.has_value());
    CHECK(rep.ah->exceptional);
    CHECK(rep.ah->corrected == 5);
    REQUIRE(rep.recursive_best.has_value());
    CHECK(*rep.recursive_best >= 5);
    CHECK(rep.bottlenecks == std::vector<int>{1});
}
