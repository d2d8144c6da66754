#include "mweb/solve.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

namespace mweb {

namespace {

struct Candidate {
    double value = 0.0;
    Biclique witness;
    bool valid = false;
};

// Higher value wins; ties go to the lexicographically smaller witness.
bool improves(const Candidate& a, const Candidate& b) {
    if (!b.valid) return a.valid;
    if (!a.valid) return false;
    if (a.value != b.value) return a.value > b.value;
    return biclique_less(a.witness, b.witness);
}

// g is the working orientation (rows are enumerated). Returns the candidate
// in ORIGINAL orientation: if transposed, enumerated rows are original u2.
Candidate make_candidate(const WeightedBipartiteGraph& g, const std::vector<std::size_t>& rows,
                         const std::vector<double>& colsum, Objective obj, bool transposed) {
    const double bonus = obj == Objective::NodePlusEdge ? 1.0 : 0.0;
    double value = obj == Objective::NodePlusEdge ? static_cast<double>(rows.size()) : 0.0;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < g.n2(); ++j) {
        double c = colsum[j] + bonus;
        if (c > 0.0) {
            value += c;
            cols.push_back(j);
        }
    }
    Candidate cand;
    cand.value = value;
    cand.witness = transposed ? Biclique(std::move(cols), rows) : Biclique(rows, std::move(cols));
    cand.valid = true;
    return cand;
}

std::vector<std::size_t> mask_to_rows(std::uint64_t mask, std::size_t k) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::uint64_t{1} << i)) rows.push_back(i);
    return rows;
}

// Enumerate masks [t0, t1) in Gray-code order with incremental column sums.
Candidate enumerate_range(const WeightedBipartiteGraph& g, Objective obj, bool transposed,
                          std::uint64_t t0, std::uint64_t t1) {
    const std::size_t k = g.n1(), m = g.n2();
    const double bonus = obj == Objective::NodePlusEdge ? 1.0 : 0.0;

    std::uint64_t mask = t0 ^ (t0 >> 1);
    std::vector<double> colsum(m, 0.0);
    std::size_t popcnt = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::uint64_t{1} << i)) {
            ++popcnt;
            for (std::size_t j = 0; j < m; ++j) colsum[j] += g.weight(i, j);
        }

    Candidate best;
    for (std::uint64_t t = t0; t < t1; ++t) {
        double value = obj == Objective::NodePlusEdge ? static_cast<double>(popcnt) : 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            double c = colsum[j] + bonus;
            if (c > 0.0) value += c;
        }
        if (!best.valid || value >= best.value) {
            Candidate cand = make_candidate(g, mask_to_rows(mask, k), colsum, obj, transposed);
            if (improves(cand, best)) best = cand;
        }
        // advance to the Gray code of t+1
        if (t + 1 < t1) {
            std::uint64_t next = (t + 1) ^ ((t + 1) >> 1);
            std::uint64_t diff = mask ^ next;
            std::size_t i = static_cast<std::size_t>(std::countr_zero(diff));
            double sign = (next & diff) ? 1.0 : -1.0;
            popcnt += (next & diff) ? 1 : std::size_t(-1);
            for (std::size_t j = 0; j < m; ++j) colsum[j] += sign * g.weight(i, j);
            mask = next;
        }
    }
    return best;
}

}  // namespace

OptResult solve_exact(const WeightedBipartiteGraph& g, Objective obj, unsigned threads,
                      std::size_t enumeration_cap) {
    const bool transposed = g.n1() > g.n2();
    WeightedBipartiteGraph h = transposed ? g.transposed() : g;
    const std::size_t k = h.n1();
    if (k > enumeration_cap)
        throw CapacityError("smaller side " + std::to_string(k) + " exceeds enumeration cap " +
                            std::to_string(enumeration_cap) + "; use branch-and-bound");

    const std::uint64_t total = std::uint64_t{1} << k;
    if (threads < 1) threads = 1;
    const std::uint64_t nchunk = std::min<std::uint64_t>(threads, total);

    std::vector<Candidate> partial(nchunk);
    std::vector<std::thread> workers;
    const std::uint64_t step = total / nchunk;
    for (std::uint64_t c = 0; c < nchunk; ++c) {
        std::uint64_t lo = c * step;
        std::uint64_t hi = c + 1 == nchunk ? total : lo + step;
        workers.emplace_back([&, c, lo, hi] { partial[c] = enumerate_range(h, obj, transposed, lo, hi); });
    }
    for (auto& w : workers) w.join();

    Candidate best;
    for (const auto& cand : partial)
        if (improves(cand, best)) best = cand;

    OptResult r;
    r.value = best.value;
    r.witness = best.witness;
    r.explored = total;
    r.objective = obj;
    r.optimal = true;
    return r;
}

namespace {

struct BnbState {
    const WeightedBipartiteGraph& g;
    Objective obj;
    bool transposed;
    std::vector<std::size_t> order;           // rows sorted by descending |row| sum
    std::vector<std::vector<double>> pos_suffix;  // [d][j]: sum of max(0, w) over rows order[d..]
    Candidate best;
    std::uint64_t explored = 0;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;
    bool timed_out = false;
};

void bnb_recurse(BnbState& s, std::size_t depth, std::vector<std::size_t>& chosen,
                 std::vector<double>& colsum) {
    if (s.timed_out) return;
    ++s.explored;
    if (s.has_deadline && (s.explored & 0x3FF) == 0 &&
        std::chrono::steady_clock::now() > s.deadline) {
        s.timed_out = true;
        return;
    }

    const std::size_t k = s.g.n1(), m = s.g.n2();
    const double bonus = s.obj == Objective::NodePlusEdge ? 1.0 : 0.0;

    if (depth == k) {
        Candidate cand = make_candidate(s.g, chosen, colsum, s.obj, s.transposed);
        if (improves(cand, s.best)) s.best = cand;
        return;
    }

    double bound = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double opt = colsum[j] + s.pos_suffix[depth][j] + bonus;
        if (opt > 0.0) bound += opt;
    }
    if (s.obj == Objective::NodePlusEdge)
        bound += static_cast<double>(chosen.size() + (k - depth));
    if (s.best.valid && bound < s.best.value) return;

    const std::size_t row = s.order[depth];

    chosen.push_back(row);
    for (std::size_t j = 0; j < m; ++j) colsum[j] += s.g.weight(row, j);
    bnb_recurse(s, depth + 1, chosen, colsum);
    chosen.pop_back();
    for (std::size_t j = 0; j < m; ++j) colsum[j] -= s.g.weight(row, j);

    bnb_recurse(s, depth + 1, chosen, colsum);
}

}  // namespace

OptResult solve_branch_bound(const WeightedBipartiteGraph& g, Objective obj,
                             const SolverConfig& cfg) {
    cfg.validate();
    const bool transposed = g.n1() > g.n2();
    WeightedBipartiteGraph h = transposed ? g.transposed() : g;
    const std::size_t k = h.n1(), m = h.n2();

    BnbState s{h, obj, transposed, {}, {}, {}, 0, {}, false, false};
    s.order.resize(k);
    std::iota(s.order.begin(), s.order.end(), std::size_t{0});
    std::vector<double> abs_sum(k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j) abs_sum[i] += std::fabs(h.weight(i, j));
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](std::size_t a, std::size_t b) { return abs_sum[a] > abs_sum[b]; });

    s.pos_suffix.assign(k + 1, std::vector<double>(m, 0.0));
    for (std::size_t d = k; d-- > 0;)
        for (std::size_t j = 0; j < m; ++j)
            s.pos_suffix[d][j] = s.pos_suffix[d + 1][j] + std::max(0.0, h.weight(s.order[d], j));

    if (cfg.time_limit) {
        s.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(*cfg.time_limit));
        s.has_deadline = true;
    }

    std::vector<std::size_t> chosen;
    std::vector<double> colsum(m, 0.0);
    bnb_recurse(s, 0, chosen, colsum);

    OptResult r;
    r.value = s.best.value;
    r.witness = s.best.witness;
    r.explored = s.explored;
    r.objective = obj;
    r.optimal = !s.timed_out;
    return r;
}

namespace {

// Best-improvement hill climb over add/remove/swap moves. Membership vectors
// are in the graph's own orientation (no transposition here).
Candidate hill_climb(const WeightedBipartiteGraph& g, Objective obj, std::vector<char>& in1,
                     std::vector<char>& in2) {
    const std::size_t n1 = g.n1(), n2 = g.n2();
    const double bonus = obj == Objective::NodePlusEdge ? 1.0 : 0.0;

    auto rowsum = [&](std::size_t i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n2; ++j)
            if (in2[j]) s += g.weight(i, j);
        return s;
    };
    auto colsum = [&](std::size_t j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n1; ++i)
            if (in1[i]) s += g.weight(i, j);
        return s;
    };

    constexpr double kEps = 1e-12;
    for (;;) {
        double best_delta = 0.0;
        int best_kind = -1;  // 0: toggle left, 1: toggle right, 2: swap left, 3: swap right
        std::size_t best_a = 0, best_b = 0;

        auto consider = [&](double delta, int kind, std::size_t a, std::size_t b) {
            if (delta > best_delta + kEps) {
                best_delta = delta;
                best_kind = kind;
                best_a = a;
                best_b = b;
            }
        };

        for (std::size_t i = 0; i < n1; ++i) {
            double d = (in1[i] ? -1.0 : 1.0) * (rowsum(i) + bonus);
            consider(d, 0, i, 0);
        }
        for (std::size_t j = 0; j < n2; ++j) {
            double d = (in2[j] ? -1.0 : 1.0) * (colsum(j) + bonus);
            consider(d, 1, j, 0);
        }
        for (std::size_t a = 0; a < n1; ++a) {
            if (!in1[a]) continue;
            double ra = rowsum(a);
            for (std::size_t b = 0; b < n1; ++b)
                if (!in1[b]) consider(rowsum(b) - ra, 2, a, b);
        }
        for (std::size_t a = 0; a < n2; ++a) {
            if (!in2[a]) continue;
            double ca = colsum(a);
            for (std::size_t b = 0; b < n2; ++b)
                if (!in2[b]) consider(colsum(b) - ca, 3, a, b);
        }

        if (best_kind < 0) break;
        switch (best_kind) {
            case 0: in1[best_a] = !in1[best_a]; break;
            case 1: in2[best_a] = !in2[best_a]; break;
            case 2: in1[best_a] = 0; in1[best_b] = 1; break;
            case 3: in2[best_a] = 0; in2[best_b] = 1; break;
        }
    }

    std::vector<std::size_t> u1, u2;
    for (std::size_t i = 0; i < n1; ++i)
        if (in1[i]) u1.push_back(i);
    for (std::size_t j = 0; j < n2; ++j)
        if (in2[j]) u2.push_back(j);
    Candidate c;
    c.witness = Biclique(std::move(u1), std::move(u2));
    c.value = evaluate(g, c.witness, obj);
    c.valid = true;
    return c;
}

}  // namespace

OptResult solve_local_search(const WeightedBipartiteGraph& g, Objective obj,
                             const SolverConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    std::bernoulli_distribution half(0.5);

    Candidate best;
    std::uint64_t explored = 0;
    for (unsigned r = 0; r < cfg.restarts; ++r) {
        std::vector<char> in1(g.n1()), in2(g.n2());
        for (auto& v : in1) v = half(rng);
        for (auto& v : in2) v = half(rng);
        Candidate c = hill_climb(g, obj, in1, in2);
        ++explored;
        if (improves(c, best)) best = c;
    }

    OptResult r;
    r.value = best.value;
    r.witness = best.witness;
    r.explored = explored;
    r.objective = obj;
    r.optimal = false;
    return r;
}

OptResult solve(const WeightedBipartiteGraph& g, const SolverConfig& cfg) {
    cfg.validate();
    switch (cfg.method) {
        case Method::ExactEnumeration:
            return solve_exact(g, cfg.objective, cfg.threads, cfg.enumeration_cap);
        case Method::BranchAndBound:
            return solve_branch_bound(g, cfg.objective, cfg);
        case Method::LocalSearch:
            return solve_local_search(g, cfg.objective, cfg);
    }
    throw ValidationError("unknown solver method");
}

}  // namespace mweb
