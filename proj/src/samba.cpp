#include "mweb/samba.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mweb {

namespace {

double logb(double x, double base) { return std::log(x) / std::log(base); }

}  // namespace

std::pair<WeightedBipartiteGraph, SambaSimpleParams> simple_weights(const BinaryMatrix& m,
                                                                    double log_base) {
    const std::size_t ones = m.ones();
    const std::size_t cells = m.n1() * m.n2();
    if (ones == 0 || ones == cells)
        throw ValidationError("degenerate density: matrix must contain both 0s and 1s");

    SambaSimpleParams params;
    params.p = static_cast<double>(ones) / static_cast<double>(cells);
    // the base only rescales; keep -1 - log2(p) as the base-2 reference so the
    // argmax bicluster is independent of the base
    const double scale = std::log(2.0) / std::log(log_base);
    params.w_edge = (-1.0 - std::log2(params.p)) * scale;
    params.w_nonedge = (-1.0 - std::log2(1.0 - params.p)) * scale;
    params.density_warning = params.p >= 0.5;  // model assumes p < 1/2

    std::vector<double> w(cells);
    for (std::size_t i = 0; i < m.n1(); ++i)
        for (std::size_t j = 0; j < m.n2(); ++j)
            w[i * m.n2() + j] = m.at(i, j) ? params.w_edge : params.w_nonedge;
    return {WeightedBipartiteGraph(m.n1(), m.n2(), std::move(w)), params};
}

double significance(const WeightedBipartiteGraph& g_weighted, const Biclique& b) {
    return biclique_weight(g_weighted, b);
}

double p_star(std::uint64_t cells, std::uint64_t edges, double p) {
    if (edges > cells) throw ValidationError("edges cannot exceed cells");
    if (!(p > 0.0 && p < 1.0)) throw ValidationError("p must be in (0,1)");
    double log2v = static_cast<double>(cells) + static_cast<double>(edges) * std::log2(p) +
                   static_cast<double>(cells - edges) * std::log2(1.0 - p);
    return std::exp2(log2v);
}

double binomial_tail(std::uint64_t k, double p, std::uint64_t n) {
    if (k > n) throw ValidationError("k cannot exceed n");
    if (!(p > 0.0 && p < 1.0)) throw ValidationError("p must be in (0,1)");
    if (k == 0) return 1.0;

    const double lp = std::log(p), lq = std::log1p(-p);
    const double lgn = std::lgamma(static_cast<double>(n) + 1.0);
    // log-sum-exp over the exact term logs
    double max_term = -std::numeric_limits<double>::infinity();
    std::vector<double> terms;
    terms.reserve(n - k + 1);
    for (std::uint64_t i = k; i <= n; ++i) {
        double lt = lgn - std::lgamma(static_cast<double>(i) + 1.0) -
                    std::lgamma(static_cast<double>(n - i) + 1.0) +
                    static_cast<double>(i) * lp + static_cast<double>(n - i) * lq;
        terms.push_back(lt);
        max_term = std::max(max_term, lt);
    }
    double acc = 0.0;
    for (double lt : terms) acc += std::exp(lt - max_term);
    return std::exp(max_term) * acc;
}

WeightedBipartiteGraph refined_weights(const BinaryMatrix& m, const SambaRefinedParams& r,
                                       double log_base) {
    const std::size_t cells = m.n1() * m.n2();
    if (r.p.size() != cells) throw ValidationError("p_matrix size does not match the matrix");
    if (!(r.p_c > 0.0 && r.p_c < 1.0)) throw ValidationError("p_c must be in (0,1)");
    for (double pv : r.p) {
        if (!(pv > 0.0 && pv < 1.0)) throw ValidationError("every p_{u,v} must be in (0,1)");
        if (!(r.p_c > pv)) throw ValidationError("p_c must strictly dominate every p_{u,v}");
    }

    std::vector<double> w(cells);
    for (std::size_t i = 0; i < m.n1(); ++i)
        for (std::size_t j = 0; j < m.n2(); ++j) {
            double puv = r.p[i * m.n2() + j];
            w[i * m.n2() + j] = m.at(i, j) ? logb(r.p_c / puv, log_base)
                                           : logb((1.0 - r.p_c) / (1.0 - puv), log_base);
        }
    return WeightedBipartiteGraph(m.n1(), m.n2(), std::move(w));
}

double log_likelihood_ratio(const WeightedBipartiteGraph& g_refined, const Biclique& b) {
    return biclique_weight(g_refined, b);
}

std::pair<Biclique, double> find_bicluster(const BinaryMatrix& m, SambaModel model,
                                           const SolverConfig& cfg,
                                           const SambaRefinedParams* refined) {
    WeightedBipartiteGraph g = [&] {
        if (model == SambaModel::Simple) return simple_weights(m).first;
        if (!refined) throw ValidationError("refined model requires parameters");
        return refined_weights(m, *refined);
    }();
    SolverConfig c = cfg;
    c.objective = Objective::EdgeWeight;
    OptResult r = solve(g, c);
    return {r.witness, r.value};
}

}  // namespace mweb
