#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mweb/core.hpp"
#include "mweb/solve.hpp"

namespace mweb {

// Simple statistical model: one global density p, log-odds style weights.
// All logarithms are base 2 unless a different base is requested; the base
// only rescales weights and does not move the optimal bicluster.
struct SambaSimpleParams {
    double p = 0.0;          // |E| / (|V1||V2|)
    double w_edge = 0.0;     // -1 - log p
    double w_nonedge = 0.0;  // -1 - log (1-p)
    bool density_warning = false;  // raised when p >= 1/2
};

std::pair<WeightedBipartiteGraph, SambaSimpleParams>
simple_weights(const BinaryMatrix& m, double log_base = 2.0);

// Statistical significance of a bicluster: the weight sum over the
// simple-model graph, equal to -log p*(H).
double significance(const WeightedBipartiteGraph& g_weighted, const Biclique& b);

// 2^cells * p^edges * (1-p)^(cells-edges), computed in log space.
double p_star(std::uint64_t cells, std::uint64_t edges, double p);

// Probability of k or more successes in n Bernoulli(p) trials, exact
// summation in log-stable form.
double binomial_tail(std::uint64_t k, double p, std::uint64_t n);

struct SambaRefinedParams {
    std::vector<double> p;  // row-major n1 x n2 per-cell Bernoulli parameters
    double p_c = 0.0;       // constant dominating every p[u][v]
};

WeightedBipartiteGraph refined_weights(const BinaryMatrix& m, const SambaRefinedParams& r,
                                       double log_base = 2.0);

double log_likelihood_ratio(const WeightedBipartiteGraph& g_refined, const Biclique& b);

enum class SambaModel { Simple, Refined };

std::pair<Biclique, double> find_bicluster(const BinaryMatrix& m, SambaModel model,
                                           const SolverConfig& cfg,
                                           const SambaRefinedParams* refined = nullptr);

}  // namespace mweb
