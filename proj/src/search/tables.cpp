#include "polynet/search/search.hpp"

namespace polynet::search {

// Reference values for the reproduction suites. Dimensions and minimal
// width vectors as published; the suites recompute them from scratch and
// diff.

const std::vector<int>& table2_degrees() {
    static const std::vector<int> degrees = {2, 3, 4, 5, 6};
    return degrees;
}

const std::vector<Table2Row>& table2_expected() {
    static const std::vector<Table2Row> rows = {
        {{3, 2, 1}, {5, 6, 6, 6, 6}},
        {{2, 3, 2}, {6, 8, 9, 9, 9}},
        {{2, 3, 2, 3}, {10, 12, 13, 13, 13}},
        {{2, 3, 2, 3, 4}, {16, 21, 22, 22, 22}},
    };
    return rows;
}

const std::vector<Table1Row>& table1_expected() {
    static const std::vector<Table1Row> rows = {
        {3, {{2, 2, 2, 1}}, false},
        {4, {{2, 3, 3, 2, 1}}, false},
        {5, {{2, 3, 3, 3, 2, 1}}, false},
        {6, {{2, 3, 3, 4, 4, 2, 1}}, false},
        {7, {{2, 3, 4, 5, 6, 4, 2, 1}}, false},
        {8, {{2, 3, 4, 5, 7, 7, 6, 2, 1}, {2, 3, 5, 5, 7, 7, 5, 2, 1}}, true},
        {9, {{2, 3, 4, 8, 8, 8, 8, 8, 4, 1}, {2, 3, 4, 5, 8, 9, 8, 8, 4, 1}}, true},
    };
    return rows;
}

} // namespace polynet::search
