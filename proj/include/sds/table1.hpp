#pragma once

// The sporadic cyclic parameter table: (v, k, lambda, n, |P|, |N|) as printed.

#include <array>
#include <string>
#include <vector>

#include "sds/signed_set.hpp"

namespace sds {

struct Table1Row {
    i64 v, k, lambda, n, p_size, n_size;
};

inline constexpr std::array<Table1Row, 23> table1_rows{{
    {19, 13, 2, 11, 10, 3},   {19, 13, 6, 7, 12, 1},    {20, 11, 2, 9, 9, 2},    {31, 24, 4, 20, 18, 6},
    {35, 19, 3, 16, 15, 4},   {35, 21, 10, 11, 20, 1},  {51, 19, 3, 16, 16, 3},  {53, 40, 27, 13, 39, 1},
    {55, 10, 1, 9, 9, 1},     {67, 49, 12, 37, 39, 10}, {67, 49, 20, 29, 43, 6}, {71, 51, 1, 50, 21, 20},
    {73, 36, 4, 32, 27, 9},   {78, 53, 28, 25, 50, 3},  {89, 33, 1, 32, 22, 11}, {91, 76, 60, 16, 75, 1},
    {93, 32, 7, 25, 29, 3},   {93, 73, 48, 25, 70, 3},  {104, 29, 4, 25, 25, 4}, {111, 66, 17, 49, 55, 11},
    {219, 83, 19, 64, 74, 9}, {219, 172, 108, 64, 163, 9}, {247, 127, 63, 64, 126, 1},
}};

struct Table1Check {
    Table1Row row;
    ParamsVerdict derived;
    bool matches = false;
    std::string note;
};

/// Recomputes s, |P|, |N| and n from (v,k,lambda) and compares with the printed columns.
inline Table1Check check_table1_row(const Table1Row& row)
{
    Table1Check c{row, derive_params(row.v, row.k, row.lambda), false, {}};
    if (!c.derived.feasible()) {
        c.note = "infeasible: " + c.derived.detail;
        return c;
    }
    const auto& p = *c.derived.params;
    std::vector<std::string> bad;
    if (p.n != row.n) bad.push_back("n=" + std::to_string(p.n) + " (table " + std::to_string(row.n) + ")");
    if (p.p_size != row.p_size) bad.push_back("|P|=" + std::to_string(p.p_size) + " (table " + std::to_string(row.p_size) + ")");
    if (p.n_size != row.n_size) bad.push_back("|N|=" + std::to_string(p.n_size) + " (table " + std::to_string(row.n_size) + ")");
    if (row.p_size + row.n_size != row.k)
        bad.push_back("table |P|+|N|=" + std::to_string(row.p_size + row.n_size) + " != k");
    c.matches = bad.empty();
    for (std::size_t i = 0; i < bad.size(); ++i) c.note += (i ? ", " : "") + bad[i];
    return c;
}

} // namespace sds
