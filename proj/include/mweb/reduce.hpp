#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mweb/core.hpp"

namespace mweb {

// Undirected simple graph, the CLIQUE instance side of the reduction.
struct SimpleGraph {
    std::size_t n = 0;
    std::set<std::pair<std::size_t, std::size_t>> edges;  // pairs stored (min,max)

    SimpleGraph() = default;
    SimpleGraph(std::size_t n_, const std::vector<std::pair<std::size_t, std::size_t>>& e);

    bool adjacent(std::size_t u, std::size_t v) const {
        if (u == v) return false;
        auto p = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        return edges.count(p) != 0;
    }
};

// Brute-force clique number; cap keeps the 2^n sweep at desk scale.
std::size_t clique_number(const SimpleGraph& g, std::size_t cap = 16);

// CLIQUE -> {-1,0,1}-MWEB: diagonal 1, edges 0, non-edges -1. The optimal
// edge-weight biclique value of the output equals the clique number of g.
WeightedBipartiteGraph clique_to_mweb(const SimpleGraph& g);

struct ProductParams {
    double gamma = 0.0;
    double alpha = -1.0;
    double beta = 1.0;
    std::size_t n_copies = 1;
    double delta = 0.5;
    std::uint64_t seed = 0;

    // Bernoulli parameter giving expectation gamma on support {alpha, beta}.
    double q() const { return (gamma - alpha) / (beta - alpha); }

    void validate() const {
        if (!(alpha < gamma && gamma < beta))
            throw ValidationError("product parameters require alpha < gamma < beta");
        if (n_copies < 1) throw ValidationError("n_copies must be >= 1");
        if (!(delta > 0.0 && delta <= 0.5)) throw ValidationError("delta must be in (0, 1/2]");
    }
};

// N-fold block duplication; every weight-gamma cell is redrawn as beta with
// probability q, alpha otherwise. Product vertex index = copy * n + inner.
// Each block uses an independent sub-stream of (seed, block ids), so output
// is deterministic for a given seed regardless of evaluation order.
WeightedBipartiteGraph gamma_product(const WeightedBipartiteGraph& g, const ProductParams& p);

// Project a product biclique through all N^2 block pairs back onto g and
// return the best projection under the given objective.
std::pair<Biclique, double> project_solution(const WeightedBipartiteGraph& g,
                                             const WeightedBipartiteGraph& product,
                                             std::size_t n_copies, const Biclique& b,
                                             Objective obj);

// ceil(eta ^ ((delta(3-2delta)+3) / (delta(1+2delta)))).
std::uint64_t theoretical_copies(std::size_t eta, double delta);

// (1 + (delta(3-2delta)+3) / (delta(1+2delta))) * epsilon_prime.
double amplification_factor(double delta, double epsilon_prime);

// Deterministic N-fold duplication linking the edge-weight optimum k of g to
// the node-plus-edge optimum of the output: N^2 k <= opt <= N^2 k + N(n1+n2)
// for the default N = (n1+n2)^2.
WeightedBipartiteGraph mweb_to_problem_p(const WeightedBipartiteGraph& g,
                                         std::optional<std::size_t> n_copies = std::nullopt);

bool has_pm_one_weights(const WeightedBipartiteGraph& g);

struct VerificationTrial {
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::string kind;
    std::string relation;
    bool pass = false;
    std::vector<VerificationTrial> trials;
    std::string note;
};

// omega(G) == exact MWEB optimum of clique_to_mweb(G).
VerificationReport verify_clique_reduction(const SimpleGraph& g);

// Empirical mean of former-gamma cells over reseeded draws stays within
// 4*(beta-alpha)/sqrt(2*trials) of gamma; non-gamma cells bit-equal.
VerificationReport verify_product(const WeightedBipartiteGraph& g, const ProductParams& p,
                                  std::size_t trials);

// Sandwich bounds of the duplication reduction, checked with exact solves.
VerificationReport verify_problem_p(const WeightedBipartiteGraph& g, std::size_t n_copies);

}  // namespace mweb
