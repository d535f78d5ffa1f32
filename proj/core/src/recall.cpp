#include "bmem/recall.hpp"

#include <string>

namespace bmem {

PermutedWeightMatrix::PermutedWeightMatrix(std::vector<std::vector<int>> rows,
                                           ActivityOrder order)
    : order_(std::move(order)) {
    const WeightMatrix checked = WeightMatrix::from_rows(rows);
    if (checked.size() != order_.size()) {
        throw DimensionError("permuted matrix size does not match its activity order");
    }
    n_ = checked.size();
    entries_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
            entries_[a * n_ + b] = rows[a][b];
        }
    }
}

std::vector<std::vector<int>> PermutedWeightMatrix::rows() const {
    std::vector<std::vector<int>> result(n_, std::vector<int>(n_));
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
            result[a][b] = at(a, b);
        }
    }
    return result;
}

std::vector<std::vector<int>> BMatrix::rows() const {
    std::vector<std::vector<int>> result(n_, std::vector<int>(n_, 0));
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            result[a][b] = at(a, b);
        }
    }
    return result;
}

bool RecallTrace::any_zero_input() const {
    for (const RecallStep& step : steps) {
        if (step.zero_input) {
            return true;
        }
    }
    return false;
}

PermutedWeightMatrix permute_weights(const WeightMatrix& weights, const ActivityOrder& order) {
    if (weights.size() != order.size()) {
        throw DimensionError("activity order size " + std::to_string(order.size()) +
                             " does not match weight matrix size " +
                             std::to_string(weights.size()));
    }
    const std::size_t n = weights.size();
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            rows[a][b] = weights.at(order.at(a), order.at(b));
        }
    }
    return PermutedWeightMatrix(std::move(rows), order);
}

BMatrix lower_triangular(const std::vector<std::vector<int>>& symmetric_rows) {
    // Round-trips through WeightMatrix to reject asymmetric or nonzero-diagonal input.
    const WeightMatrix checked = WeightMatrix::from_rows(symmetric_rows);
    BMatrix result;
    result.n_ = checked.size();
    result.entries_.assign(result.n_ * result.n_, 0);
    for (std::size_t a = 0; a < result.n_; ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            result.entries_[a * result.n_ + b] = checked.at(a, b);
        }
    }
    return result;
}

BMatrix lower_triangular(const PermutedWeightMatrix& permuted) {
    return lower_triangular(permuted.rows());
}

RecallResult recall(const WeightMatrix& weights, const ActivityOrder& order,
                    const std::vector<int>& seed) {
    const std::size_t n = weights.size();
    if (seed.empty()) {
        throw ValidationError("seed must contain at least one bit");
    }
    if (seed.size() > n) {
        throw ValidationError("seed length " + std::to_string(seed.size()) +
                              " exceeds network size " + std::to_string(n));
    }
    for (int bit : seed) {
        if (bit != 1 && bit != -1) {
            throw ValidationError("seed bit " + std::to_string(bit) + " is not +1 or -1");
        }
    }

    const BMatrix generator = lower_triangular(permute_weights(weights, order));

    std::vector<int> fragment;
    fragment.reserve(n);
    fragment.insert(fragment.end(), seed.begin(), seed.end());

    RecallTrace trace;
    trace.order = order;
    trace.seed_length = seed.size();
    for (std::size_t position = seed.size(); position < n; ++position) {
        long long net = 0;
        for (std::size_t j = 0; j < position; ++j) {
            net += static_cast<long long>(generator.at(position, j)) * fragment[j];
        }
        const int bit = sgn(net);
        fragment.push_back(bit);
        trace.steps.push_back(RecallStep{position, net, bit, net == 0});
        trace.fragments.push_back(fragment);
    }

    RecallResult result;
    result.ordered_bits = BipolarVector(fragment);
    result.normative_bits = map_to_normative(result.ordered_bits, order);
    result.trace = std::move(trace);
    return result;
}

BipolarVector map_to_normative(const BipolarVector& ordered_bits, const ActivityOrder& order) {
    if (ordered_bits.size() != order.size()) {
        throw DimensionError("ordered bits and activity order differ in length");
    }
    std::vector<int> normative(ordered_bits.size());
    for (std::size_t position = 0; position < order.size(); ++position) {
        normative[order.at(position)] = ordered_bits[position];
    }
    return BipolarVector(std::move(normative));
}

}  // namespace bmem
