#pragma once

#include <cstdint>
#include <optional>

#include "mweb/core.hpp"

namespace mweb {

enum class Method { ExactEnumeration, BranchAndBound, LocalSearch };

struct SolverConfig {
    Objective objective = Objective::EdgeWeight;
    Method method = Method::ExactEnumeration;
    std::uint64_t seed = 0;
    unsigned restarts = 8;           // local search only
    std::optional<double> time_limit;  // seconds, branch-and-bound only
    unsigned threads = 1;
    std::size_t enumeration_cap = 26;

    void validate() const {
        if (restarts < 1) throw ValidationError("restarts must be >= 1");
        if (time_limit && *time_limit <= 0) throw ValidationError("time_limit must be > 0");
        if (threads < 1) throw ValidationError("threads must be >= 1");
    }
};

// Exhaustive enumeration over all subsets of the smaller side. For each fixed
// u1 the optimal u2 is closed-form: include a column iff its contribution
// (column sum over u1, plus 1 under node-plus-edge) is strictly positive.
// Ties at exactly 0 are excluded. Witness is the lexicographically smallest
// among optimal (u1, u2) pairs reachable this way.
OptResult solve_exact(const WeightedBipartiteGraph& g, Objective obj,
                      unsigned threads = 1, std::size_t enumeration_cap = 26);

OptResult solve_branch_bound(const WeightedBipartiteGraph& g, Objective obj,
                             const SolverConfig& cfg = {});

OptResult solve_local_search(const WeightedBipartiteGraph& g, Objective obj,
                             const SolverConfig& cfg);

// Dispatch on cfg.method.
OptResult solve(const WeightedBipartiteGraph& g, const SolverConfig& cfg);

}  // namespace mweb
