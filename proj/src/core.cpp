#include "mweb/core.hpp"

#include <algorithm>
#include <cmath>

namespace mweb {

Biclique::Biclique(std::vector<std::size_t> a, std::vector<std::size_t> b)
    : u1(std::move(a)), u2(std::move(b)) {
    auto normalize = [](std::vector<std::size_t>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    normalize(u1);
    normalize(u2);
}

bool biclique_less(const Biclique& a, const Biclique& b) {
    if (a.u1 != b.u1)
        return std::lexicographical_compare(a.u1.begin(), a.u1.end(), b.u1.begin(), b.u1.end());
    return std::lexicographical_compare(a.u2.begin(), a.u2.end(), b.u2.begin(), b.u2.end());
}

void validate_indices(const WeightedBipartiteGraph& g, const Biclique& b) {
    for (auto u : b.u1)
        if (u >= g.n1())
            throw ValidationError("left index " + std::to_string(u) + " out of range [0, " +
                                  std::to_string(g.n1()) + ")");
    for (auto v : b.u2)
        if (v >= g.n2())
            throw ValidationError("right index " + std::to_string(v) + " out of range [0, " +
                                  std::to_string(g.n2()) + ")");
}

double biclique_weight(const WeightedBipartiteGraph& g, const Biclique& b) {
    validate_indices(g, b);
    double total = 0.0;
    for (auto u : b.u1)
        for (auto v : b.u2)
            total += g.weight(u, v);
    return total;
}

double problem_p_value(const WeightedBipartiteGraph& g, const Biclique& b) {
    return static_cast<double>(b.u1.size() + b.u2.size()) + biclique_weight(g, b);
}

double evaluate(const WeightedBipartiteGraph& g, const Biclique& b, Objective obj) {
    return obj == Objective::EdgeWeight ? biclique_weight(g, b) : problem_p_value(g, b);
}

WeightSetDescriptor weight_set_of(const WeightedBipartiteGraph& g) {
    const auto& w = g.weights();
    double mn = *std::min_element(w.begin(), w.end());
    double mx = *std::max_element(w.begin(), w.end());
    if (!(mn < 0.0 && mx > 0.0))
        throw ValidationError("trivial instance: weight set must contain both positive and "
                              "negative values (min=" + std::to_string(mn) +
                              ", max=" + std::to_string(mx) + ")");
    return {mn, mx, std::fabs(mn / mx)};
}

bool ratio_within_window(const WeightSetDescriptor& d, std::size_t eta, double delta) {
    if (!(delta > 0.0 && delta <= 0.5)) throw ValidationError("delta must be in (0, 1/2]");
    double lo = std::pow(static_cast<double>(eta), delta - 0.5);
    double hi = std::pow(static_cast<double>(eta), 0.5 - delta);
    return d.ratio >= lo && d.ratio <= hi;
}

}  // namespace mweb
