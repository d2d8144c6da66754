#include "mweb/mdlh.hpp"

#include <algorithm>
#include <sstream>

#include "mweb/solve.hpp"

namespace mweb {

bool summary_less(const Summary& a, const Summary& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.regions.size() != b.regions.size()) return a.regions.size() < b.regions.size();
    return std::lexicographical_compare(a.regions.begin(), a.regions.end(), b.regions.begin(),
                                        b.regions.end());
}

bool validate_summary(const BinaryMatrix& m, const Summary& s, std::string* diagnostic) {
    for (const auto& r : s.regions) {
        if (r.kind == Region::Kind::Row && r.i >= m.n1())
            throw ValidationError("row region index out of range");
        if (r.kind == Region::Kind::Col && r.j >= m.n2())
            throw ValidationError("col region index out of range");
        if (r.kind == Region::Kind::Cell && (r.i >= m.n1() || r.j >= m.n2()))
            throw ValidationError("cell region index out of range");
    }

    std::vector<std::pair<std::size_t, std::size_t>> uncovered_ones, covered_zeros;
    for (std::size_t i = 0; i < m.n1(); ++i)
        for (std::size_t j = 0; j < m.n2(); ++j) {
            bool covered = false;
            for (const auto& r : s.regions)
                if (r.covers(i, j)) {
                    covered = true;
                    break;
                }
            if (m.at(i, j) && !covered) uncovered_ones.push_back({i, j});
            if (!m.at(i, j) && covered) covered_zeros.push_back({i, j});
        }

    std::vector<std::pair<std::size_t, std::size_t>> holes = s.holes;
    std::sort(holes.begin(), holes.end());
    bool ok = uncovered_ones.empty() && holes == covered_zeros;
    if (!ok && diagnostic) {
        std::ostringstream out;
        if (!uncovered_ones.empty()) {
            out << "uncovered 1-cells:";
            for (auto [i, j] : uncovered_ones) out << " (" << i << "," << j << ")";
        }
        if (holes != covered_zeros) out << (out.str().empty() ? "" : "; ") << "holes do not match covered zeros";
        *diagnostic = out.str();
    }
    return ok;
}

Summary row_col_summary(const BinaryMatrix& m, const std::vector<std::size_t>& uncovered_rows,
                        const std::vector<std::size_t>& uncovered_cols) {
    std::vector<char> in_r(m.n1(), 0), in_c(m.n2(), 0);
    for (auto i : uncovered_rows) {
        if (i >= m.n1()) throw ValidationError("row index out of range");
        in_r[i] = 1;
    }
    for (auto j : uncovered_cols) {
        if (j >= m.n2()) throw ValidationError("col index out of range");
        in_c[j] = 1;
    }

    Summary s;
    for (std::size_t i = 0; i < m.n1(); ++i)
        if (!in_r[i]) s.regions.push_back(Region::row(i));
    for (std::size_t j = 0; j < m.n2(); ++j)
        if (!in_c[j]) s.regions.push_back(Region::col(j));
    for (std::size_t i = 0; i < m.n1(); ++i)
        for (std::size_t j = 0; j < m.n2(); ++j) {
            if (in_r[i] && in_c[j] && m.at(i, j)) s.regions.push_back(Region::cell(i, j));
            if (!m.at(i, j) && !(in_r[i] && in_c[j])) s.holes.push_back({i, j});
        }
    std::sort(s.regions.begin(), s.regions.end());
    std::sort(s.holes.begin(), s.holes.end());
    return s;
}

WeightedBipartiteGraph mdlh_to_problem_p(const BinaryMatrix& m) {
    std::vector<double> w(m.n1() * m.n2());
    for (std::size_t i = 0; i < m.n1(); ++i)
        for (std::size_t j = 0; j < m.n2(); ++j)
            w[i * m.n2() + j] = m.at(i, j) ? -1.0 : 1.0;
    return WeightedBipartiteGraph(m.n1(), m.n2(), std::move(w));
}

namespace {

Summary all_region_summary(const BinaryMatrix& m) {
    Summary s;
    if (m.ones() == 0) return s;  // nothing to cover
    s.regions.push_back(Region::all());
    for (std::size_t i = 0; i < m.n1(); ++i)
        for (std::size_t j = 0; j < m.n2(); ++j)
            if (!m.at(i, j)) s.holes.push_back({i, j});
    return s;
}

}  // namespace

Summary solve_mdlh(const BinaryMatrix& m) {
    OptResult opt = solve_exact(mdlh_to_problem_p(m), Objective::NodePlusEdge);
    Summary via_p = row_col_summary(m, opt.witness.u1, opt.witness.u2);
    Summary via_all = all_region_summary(m);
    return summary_less(via_all, via_p) ? via_all : via_p;
}

Summary brute_force_mdlh(const BinaryMatrix& m) {
    if (m.n1() + m.n2() > 20)
        throw CapacityError("brute-force summarization capacity exceeded (n1+n2 > 20)");

    Summary best = all_region_summary(m);
    for (std::uint64_t rmask = 0; rmask < (std::uint64_t{1} << m.n1()); ++rmask) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < m.n1(); ++i)
            if (rmask & (std::uint64_t{1} << i)) rows.push_back(i);
        for (std::uint64_t cmask = 0; cmask < (std::uint64_t{1} << m.n2()); ++cmask) {
            std::vector<std::size_t> cols;
            for (std::size_t j = 0; j < m.n2(); ++j)
                if (cmask & (std::uint64_t{1} << j)) cols.push_back(j);
            Summary s = row_col_summary(m, rows, cols);
            if (summary_less(s, best)) best = s;
        }
    }
    return best;
}

}  // namespace mweb
