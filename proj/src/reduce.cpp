#include "mweb/reduce.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "mweb/solve.hpp"

namespace mweb {

SimpleGraph::SimpleGraph(std::size_t n_, const std::vector<std::pair<std::size_t, std::size_t>>& e)
    : n(n_) {
    for (auto [u, v] : e) {
        if (u >= n || v >= n)
            throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(n));
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
        edges.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    }
}

std::size_t clique_number(const SimpleGraph& g, std::size_t cap) {
    if (g.n > cap)
        throw CapacityError("clique oracle capacity " + std::to_string(cap) + " exceeded (n=" +
                            std::to_string(g.n) + ")");
    if (g.n == 0) return 0;
    std::size_t best = 0;
    const std::uint64_t total = std::uint64_t{1} << g.n;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        std::size_t size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        bool clique = true;
        for (std::size_t u = 0; u < g.n && clique; ++u) {
            if (!(mask & (std::uint64_t{1} << u))) continue;
            for (std::size_t v = u + 1; v < g.n && clique; ++v)
                if ((mask & (std::uint64_t{1} << v)) && !g.adjacent(u, v)) clique = false;
        }
        if (clique) best = size;
    }
    return best;
}

WeightedBipartiteGraph clique_to_mweb(const SimpleGraph& g) {
    if (g.n < 1) throw ValidationError("clique instance needs at least one vertex");
    std::vector<double> w(g.n * g.n);
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j) {
            if (i == j)
                w[i * g.n + j] = 1.0;
            else if (g.adjacent(i, j))
                w[i * g.n + j] = 0.0;
            else
                w[i * g.n + j] = -1.0;
        }
    return WeightedBipartiteGraph(g.n, g.n, std::move(w));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent per-block stream so blocks can be generated in any order.
std::mt19937_64 block_rng(std::uint64_t seed, std::size_t a, std::size_t b) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ (0x517CC1B727220A95ULL * (a + 1)));
    s = splitmix64(s ^ (0x2545F4914F6CDD1DULL * (b + 1)));
    return std::mt19937_64(s);
}

}  // namespace

WeightedBipartiteGraph gamma_product(const WeightedBipartiteGraph& g, const ProductParams& p) {
    p.validate();
    const std::size_t n1 = g.n1(), n2 = g.n2(), N = p.n_copies;
    const double q = p.q();
    std::vector<double> w(N * n1 * N * n2);
    const std::size_t out_cols = N * n2;

    for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
            auto rng = block_rng(p.seed, a, b);
            std::uniform_real_distribution<double> unif(0.0, 1.0);
            for (std::size_t i = 0; i < n1; ++i) {
                for (std::size_t j = 0; j < n2; ++j) {
                    double orig = g.weight(i, j);
                    double out = orig;
                    if (orig == p.gamma) out = unif(rng) < q ? p.beta : p.alpha;
                    w[(a * n1 + i) * out_cols + (b * n2 + j)] = out;
                }
            }
        }
    }
    return WeightedBipartiteGraph(N * n1, N * n2, std::move(w));
}

std::pair<Biclique, double> project_solution(const WeightedBipartiteGraph& g,
                                             const WeightedBipartiteGraph& product,
                                             std::size_t n_copies, const Biclique& b,
                                             Objective obj) {
    if (n_copies < 1 || product.n1() != n_copies * g.n1() || product.n2() != n_copies * g.n2())
        throw ValidationError("product dimensions do not match n_copies * original dimensions");
    validate_indices(product, b);

    const std::size_t n1 = g.n1(), n2 = g.n2();
    bool have = false;
    Biclique best;
    double best_value = 0.0;
    for (std::size_t a = 0; a < n_copies; ++a) {
        std::vector<std::size_t> u1;
        for (auto u : b.u1)
            if (u / n1 == a) u1.push_back(u % n1);
        for (std::size_t c = 0; c < n_copies; ++c) {
            std::vector<std::size_t> u2;
            for (auto v : b.u2)
                if (v / n2 == c) u2.push_back(v % n2);
            Biclique proj(u1, u2);
            double value = evaluate(g, proj, obj);
            if (!have || value > best_value ||
                (value == best_value && biclique_less(proj, best))) {
                have = true;
                best = proj;
                best_value = value;
            }
        }
    }
    return {best, best_value};
}

std::uint64_t theoretical_copies(std::size_t eta, double delta) {
    if (!(delta > 0.0 && delta <= 0.5)) throw ValidationError("delta must be in (0, 1/2]");
    if (eta < 1) throw ValidationError("eta must be >= 1");
    double exponent = (delta * (3.0 - 2.0 * delta) + 3.0) / (delta * (1.0 + 2.0 * delta));
    return static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(eta), exponent)));
}

double amplification_factor(double delta, double epsilon_prime) {
    if (!(delta > 0.0 && delta <= 0.5)) throw ValidationError("delta must be in (0, 1/2]");
    if (!(epsilon_prime > 0.0)) throw ValidationError("epsilon_prime must be > 0");
    return (1.0 + (delta * (3.0 - 2.0 * delta) + 3.0) / (delta * (1.0 + 2.0 * delta))) *
           epsilon_prime;
}

bool has_pm_one_weights(const WeightedBipartiteGraph& g) {
    for (double w : g.weights())
        if (w != 1.0 && w != -1.0) return false;
    return true;
}

WeightedBipartiteGraph mweb_to_problem_p(const WeightedBipartiteGraph& g,
                                         std::optional<std::size_t> n_copies) {
    const std::size_t N = n_copies.value_or((g.n1() + g.n2()) * (g.n1() + g.n2()));
    if (N < 1) throw ValidationError("n_copies must be >= 1");
    const std::size_t n1 = g.n1(), n2 = g.n2(), out_cols = N * n2;
    std::vector<double> w(N * n1 * N * n2);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t b = 0; b < N; ++b)
                for (std::size_t j = 0; j < n2; ++j)
                    w[(a * n1 + i) * out_cols + (b * n2 + j)] = g.weight(i, j);
    return WeightedBipartiteGraph(N * n1, N * n2, std::move(w));
}

VerificationReport verify_clique_reduction(const SimpleGraph& g) {
    VerificationReport rep;
    rep.kind = "clique";
    rep.relation = "omega(G) == max edge-weight biclique value of clique_to_mweb(G)";
    double omega = static_cast<double>(clique_number(g));
    double opt = solve_exact(clique_to_mweb(g), Objective::EdgeWeight).value;
    rep.trials.push_back({omega, opt, omega == opt});
    rep.pass = rep.trials.back().pass;
    return rep;
}

VerificationReport verify_product(const WeightedBipartiteGraph& g, const ProductParams& p,
                                  std::size_t trials) {
    p.validate();
    if (trials < 1) throw ValidationError("trials must be >= 1");
    VerificationReport rep;
    rep.kind = "product";
    rep.relation = "per-cell empirical mean of former-gamma cells within 4(beta-alpha)/sqrt(2T) "
                   "of gamma; non-gamma cells unchanged";

    std::vector<std::pair<std::size_t, std::size_t>> gamma_cells;
    for (std::size_t i = 0; i < g.n1(); ++i)
        for (std::size_t j = 0; j < g.n2(); ++j)
            if (g.weight(i, j) == p.gamma) gamma_cells.push_back({i, j});
    if (gamma_cells.empty()) {
        rep.note = "no gamma cells; copy branch only";
        WeightedBipartiteGraph prod = gamma_product(g, p);
        bool same = true;
        for (std::size_t a = 0; a < p.n_copies && same; ++a)
            for (std::size_t b = 0; b < p.n_copies && same; ++b)
                for (std::size_t i = 0; i < g.n1() && same; ++i)
                    for (std::size_t j = 0; j < g.n2() && same; ++j)
                        same = prod.weight(a * g.n1() + i, b * g.n2() + j) == g.weight(i, j);
        rep.trials.push_back({0.0, 0.0, same});
        rep.pass = same;
        return rep;
    }

    std::vector<double> sums(gamma_cells.size(), 0.0);
    bool nongamma_ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        ProductParams pt = p;
        pt.seed = p.seed + t;
        WeightedBipartiteGraph prod = gamma_product(g, pt);
        for (std::size_t c = 0; c < gamma_cells.size(); ++c)
            sums[c] += prod.weight(gamma_cells[c].first, gamma_cells[c].second);
        if (t == 0) {
            for (std::size_t i = 0; i < g.n1(); ++i)
                for (std::size_t j = 0; j < g.n2(); ++j)
                    if (g.weight(i, j) != p.gamma)
                        for (std::size_t a = 0; a < p.n_copies; ++a)
                            for (std::size_t b = 0; b < p.n_copies; ++b)
                                if (prod.weight(a * g.n1() + i, b * g.n2() + j) != g.weight(i, j))
                                    nongamma_ok = false;
        }
    }

    const double tol = 4.0 * (p.beta - p.alpha) / std::sqrt(2.0 * static_cast<double>(trials));
    rep.pass = nongamma_ok;
    for (std::size_t c = 0; c < gamma_cells.size(); ++c) {
        double mean = sums[c] / static_cast<double>(trials);
        bool ok = std::fabs(mean - p.gamma) < tol;
        rep.trials.push_back({mean, p.gamma, ok});
        rep.pass = rep.pass && ok;
    }
    if (!nongamma_ok) rep.note = "non-gamma cell modified";
    return rep;
}

VerificationReport verify_problem_p(const WeightedBipartiteGraph& g, std::size_t n_copies) {
    VerificationReport rep;
    rep.kind = "problem-p";
    rep.relation = "N^2 k <= opt_P(duplicate) <= N^2 k + N (n1+n2)";
    const double k = solve_exact(g, Objective::EdgeWeight).value;
    WeightedBipartiteGraph dup = mweb_to_problem_p(g, n_copies);
    const double opt = solve_exact(dup, Objective::NodePlusEdge).value;
    const double nn = static_cast<double>(n_copies);
    const double lo = nn * nn * k;
    const double hi = lo + nn * static_cast<double>(g.n());
    rep.trials.push_back({lo, opt, lo <= opt});
    rep.trials.push_back({opt, hi, opt <= hi});
    rep.pass = lo <= opt && opt <= hi;
    return rep;
}

}  // namespace mweb
