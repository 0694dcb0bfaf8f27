#pragma once

// Published j and epsilon values for I_t of a generic m x n matrix.

#include <array>

namespace detmult {

struct TableRow {
    int t;
    int m;
    int n;
    const char* j;
    const char* epsilon;
};

inline constexpr std::array<TableRow, 12> kPublishedTable{{
    {2, 3, 3, "2", "1/2"},
    {2, 3, 4, "64", "341/16"},
    {2, 3, 5, "1192", "62289/128"},
    {2, 3, 6, "17236", "4195559/512"},
    {2, 4, 4, "4768", "214865/96"},
    {2, 4, 5, "178368", "1610240575/15552"},
    {2, 4, 6, "4888048", "33029597513545/10077696"},
    {3, 4, 4, "3", "1/3"},
    {3, 4, 5, "2853", "96631/243"},
    {3, 4, 6, "368643747", "4134333611/19683"},
    {4, 5, 5, "4", "1/4"},
    {4, 5, 6, "130496", "40162739/4096"},
}};

}  // namespace detmult
