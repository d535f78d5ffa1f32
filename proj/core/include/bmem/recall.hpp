#pragma once

#include <cstddef>
#include <vector>

#include "bmem/errors.hpp"
#include "bmem/model.hpp"
#include "bmem/proximity.hpp"

namespace bmem {

// Weight matrix relabeled along an activity order:
// entries[a][b] = weights[order[a]][order[b]]. Symmetry and the zero
// diagonal carry over from the source matrix.
class PermutedWeightMatrix {
public:
    PermutedWeightMatrix() = default;

    // Throws ValidationError unless `rows` is square, symmetric, zero on the
    // diagonal and sized like `order`.
    PermutedWeightMatrix(std::vector<std::vector<int>> rows, ActivityOrder order);

    std::size_t size() const noexcept { return n_; }
    int at(std::size_t a, std::size_t b) const { return entries_[a * n_ + b]; }
    const ActivityOrder& order() const noexcept { return order_; }
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const PermutedWeightMatrix&, const PermutedWeightMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<int> entries_;
    ActivityOrder order_;
};

// Strictly lower triangular generator matrix: entries[a][b] = 0 for b >= a,
// and B + B^t reproduces the symmetric matrix it was taken from.
class BMatrix {
public:
    BMatrix() = default;

    std::size_t size() const noexcept { return n_; }
    int at(std::size_t a, std::size_t b) const { return b < a ? entries_[a * n_ + b] : 0; }
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const BMatrix&, const BMatrix&) = default;

private:
    friend BMatrix lower_triangular(const std::vector<std::vector<int>>&);

    std::size_t n_ = 0;
    std::vector<int> entries_;
};

// One update during fragment expansion. `position` is the zero-based slot
// within the activity order that the update determined.
struct RecallStep {
    std::size_t position = 0;
    long long net_input = 0;
    int bit = 0;
    bool zero_input = false;

    friend bool operator==(const RecallStep&, const RecallStep&) = default;
};

// Full record of a fragment-expansion run. fragments[i] is the determined
// prefix right after steps[i]; the clamped seed prefix never changes.
struct RecallTrace {
    ActivityOrder order;
    std::size_t seed_length = 0;
    std::vector<RecallStep> steps;
    std::vector<std::vector<int>> fragments;

    bool any_zero_input() const;

    friend bool operator==(const RecallTrace&, const RecallTrace&) = default;
};

struct RecallResult {
    BipolarVector ordered_bits;    // in activity-order labeling
    BipolarVector normative_bits;  // mapped back to the original labels
    RecallTrace trace;

    friend bool operator==(const RecallResult&, const RecallResult&) = default;
};

PermutedWeightMatrix permute_weights(const WeightMatrix& weights, const ActivityOrder& order);

// Strictly lower triangular half of a symmetric zero-diagonal matrix.
// The raw overload rejects asymmetric input.
BMatrix lower_triangular(const std::vector<std::vector<int>>& symmetric_rows);
BMatrix lower_triangular(const PermutedWeightMatrix& permuted);

// Fragment-expansion recall. The seed occupies the first positions of the
// order and stays clamped; each later position k gets
// sgn(sum_{j<k} B[k][j] * fragment[j]), one neuron per step, single pass.
RecallResult recall(const WeightMatrix& weights, const ActivityOrder& order,
                    const std::vector<int>& seed);

// result[order[a]] = ordered_bits[a].
BipolarVector map_to_normative(const BipolarVector& ordered_bits, const ActivityOrder& order);

}  // namespace bmem
