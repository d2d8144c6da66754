#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mweb {

// Input validation failure (bad indices, malformed parameters, trivial instances).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instance exceeds an exact-method capacity cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Complete weighted bipartite graph with a dense row-major weight matrix.
// Immutable after construction.
class WeightedBipartiteGraph {
public:
    WeightedBipartiteGraph(std::size_t n1, std::size_t n2, std::vector<double> weights)
        : n1_(n1), n2_(n2), weights_(std::move(weights)) {
        if (n1_ < 1 || n2_ < 1)
            throw ValidationError("graph sides must be nonempty (n1=" + std::to_string(n1_) +
                                  ", n2=" + std::to_string(n2_) + ")");
        if (weights_.size() != n1_ * n2_)
            throw ValidationError("weight matrix size " + std::to_string(weights_.size()) +
                                  " does not match " + std::to_string(n1_) + "x" + std::to_string(n2_));
        for (std::size_t i = 0; i < weights_.size(); ++i)
            if (!std::isfinite(weights_[i]))
                throw ValidationError("non-finite weight at flat index " + std::to_string(i));
    }

    std::size_t n1() const { return n1_; }
    std::size_t n2() const { return n2_; }
    std::size_t eta() const { return n1_ > n2_ ? n1_ : n2_; }
    std::size_t n() const { return n1_ + n2_; }

    double weight(std::size_t i, std::size_t j) const { return weights_[i * n2_ + j]; }
    const std::vector<double>& weights() const { return weights_; }

    WeightedBipartiteGraph transposed() const {
        std::vector<double> t(n1_ * n2_);
        for (std::size_t i = 0; i < n1_; ++i)
            for (std::size_t j = 0; j < n2_; ++j)
                t[j * n1_ + i] = weights_[i * n2_ + j];
        return WeightedBipartiteGraph(n2_, n1_, std::move(t));
    }

private:
    std::size_t n1_, n2_;
    std::vector<double> weights_;
};

// A biclique is just a pair of index subsets; either side may be empty.
// Index vectors are kept sorted and duplicate-free.
struct Biclique {
    std::vector<std::size_t> u1;
    std::vector<std::size_t> u2;

    Biclique() = default;
    Biclique(std::vector<std::size_t> a, std::vector<std::size_t> b);

    bool operator==(const Biclique&) const = default;
};

// Lexicographic order on (u1, u2) as sorted index sequences; the tie-break
// order used by every solver.
bool biclique_less(const Biclique& a, const Biclique& b);

void validate_indices(const WeightedBipartiteGraph& g, const Biclique& b);

// Sum of w(u,v) over u1 x u2; 0 when either side is empty.
double biclique_weight(const WeightedBipartiteGraph& g, const Biclique& b);

// |u1| + |u2| + biclique_weight.
double problem_p_value(const WeightedBipartiteGraph& g, const Biclique& b);

enum class Objective { EdgeWeight, NodePlusEdge };

double evaluate(const WeightedBipartiteGraph& g, const Biclique& b, Objective obj);

// min/max of the weight set plus the |min/max| ratio that drives the
// hardness window classification.
struct WeightSetDescriptor {
    double min_weight;
    double max_weight;
    double ratio;  // |min_weight / max_weight|
};

// Throws ValidationError("trivial instance...") unless weights straddle zero.
WeightSetDescriptor weight_set_of(const WeightedBipartiteGraph& g);

// True iff eta^(delta-1/2) <= ratio <= eta^(1/2-delta) (constants taken as 1).
bool ratio_within_window(const WeightSetDescriptor& d, std::size_t eta, double delta);

struct OptResult {
    double value = 0.0;
    Biclique witness;
    std::uint64_t explored = 0;
    Objective objective = Objective::EdgeWeight;
    bool optimal = true;
};

// Dense 0/1 matrix shared by the bicluster-scoring and summarization code.
class BinaryMatrix {
public:
    BinaryMatrix(std::size_t n1, std::size_t n2, std::vector<std::uint8_t> data)
        : n1_(n1), n2_(n2), data_(std::move(data)) {
        if (n1_ < 1 || n2_ < 1) throw ValidationError("binary matrix dimensions must be >= 1");
        if (data_.size() != n1_ * n2_) throw ValidationError("binary matrix size mismatch");
        for (auto v : data_)
            if (v > 1) throw ValidationError("binary matrix entries must be 0 or 1");
    }

    std::size_t n1() const { return n1_; }
    std::size_t n2() const { return n2_; }
    std::uint8_t at(std::size_t i, std::size_t j) const { return data_[i * n2_ + j]; }
    const std::vector<std::uint8_t>& data() const { return data_; }

    std::size_t ones() const {
        std::size_t c = 0;
        for (auto v : data_) c += v;
        return c;
    }
    std::size_t zeros() const { return n1_ * n2_ - ones(); }

private:
    std::size_t n1_, n2_;
    std::vector<std::uint8_t> data_;
};

}  // namespace mweb
