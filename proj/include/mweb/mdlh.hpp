#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mweb/core.hpp"

namespace mweb {

// Summarization region over a 2-level hierarchy per dimension: a whole row,
// a whole column, a single cell, or the whole matrix.
struct Region {
    enum class Kind { Row, Col, Cell, All };
    Kind kind = Kind::Row;
    std::size_t i = 0;
    std::size_t j = 0;

    static Region row(std::size_t i) { return {Kind::Row, i, 0}; }
    static Region col(std::size_t j) { return {Kind::Col, 0, j}; }
    static Region cell(std::size_t i, std::size_t j) { return {Kind::Cell, i, j}; }
    static Region all() { return {Kind::All, 0, 0}; }

    bool covers(std::size_t r, std::size_t c) const {
        switch (kind) {
            case Kind::Row: return r == i;
            case Kind::Col: return c == j;
            case Kind::Cell: return r == i && c == j;
            case Kind::All: return true;
        }
        return false;
    }

    auto key() const { return std::make_tuple(static_cast<int>(kind), i, j); }
    bool operator==(const Region& o) const { return key() == o.key(); }
    bool operator<(const Region& o) const { return key() < o.key(); }
};

// Regions covering all 1-entries plus the 0-entries ("holes") those regions
// drag in; length = |regions| + |holes|.
struct Summary {
    std::vector<Region> regions;                           // sorted
    std::vector<std::pair<std::size_t, std::size_t>> holes;  // sorted (i,j)

    std::size_t length() const { return regions.size() + holes.size(); }
};

// Order used to break ties between equal-length summaries: fewer regions
// first, then lexicographic region list.
bool summary_less(const Summary& a, const Summary& b);

// True iff every 1-entry is covered and holes equal exactly the covered
// 0-entries. On failure the optional diagnostic lists offending cells.
bool validate_summary(const BinaryMatrix& m, const Summary& s, std::string* diagnostic = nullptr);

// The summary induced by leaving rows R and columns C uncovered: regions are
// the other rows/columns plus cell regions for leftover 1s in R x C.
Summary row_col_summary(const BinaryMatrix& m, const std::vector<std::size_t>& uncovered_rows,
                        const std::vector<std::size_t>& uncovered_cols);

// +1 where m is 0, -1 where m is 1; the node-plus-edge optimum on this graph
// equals |R|+|C|+z-w for the best row/column-style summary.
WeightedBipartiteGraph mdlh_to_problem_p(const BinaryMatrix& m);

// Exact minimum-length summary via the node-plus-edge solve, compared against
// the whole-matrix region as an extra candidate.
Summary solve_mdlh(const BinaryMatrix& m);

// Independent oracle: enumerate every row/column selection plus the All
// candidate. Requires n1 + n2 <= 20.
Summary brute_force_mdlh(const BinaryMatrix& m);

}  // namespace mweb
